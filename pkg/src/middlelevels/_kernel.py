"""Compiled hot path: arc rules on array-encoded trees and the walk step.

Everything here mirrors ``trees``/``arcs`` but works in place on rows of one
int32 workspace so that a step allocates nothing.  Trees are Dyck words stored
as 0/1 entries; vertex ids are preorder indices of the word being analysed.
"""
from __future__ import annotations

import numpy as np
from numba import njit

# workspace rows
PAR, CST, CCT, CHD, CIX, SIZ, PHI = 0, 1, 2, 3, 4, 5, 6
SV, SP, SI = 7, 8, 9
ENC, EOFF, ORD = 10, 11, 12
BF, BS = 13, 14
ENC2, EOFF2, ORD2 = 15, 16, 17
PATH = 18
R, W1, W2, W3, W4, W5, XOUT = 19, 20, 21, 22, 23, 24, 25
NROWS = 26

# state slots
OUT, IN = 0, 1
# step kinds
K_F, K_FINV, K_GLUE, K_SWITCH = 1, 2, 3, 4

_Q = ["10", "1100", "110100", "11100100", "11010100", "1110100100",
      "1110010100", "1110011000", "1101011000", "1101010100"]
QARR = np.zeros((10, 10), dtype=np.int32)
QLEN = np.zeros(10, dtype=np.int32)
for _j, _q in enumerate(_Q):
    QLEN[_j] = len(_q)
    for _i, _b in enumerate(_q):
        QARR[_j, _i] = int(_b)

RULE_NONE, RULE_D, RULE_Q137, RULE_Q24, RULE_Q5, RULE_Q8, RULE_E, RULE_O1, RULE_O2 = range(9)


def workspace(n: int) -> np.ndarray:
    return np.zeros((NROWS, 6 * n + 16), dtype=np.int32)


@njit(cache=True)
def build_graph(ws, wrow, n2):
    par = ws[PAR]
    cst = ws[CST]
    cct = ws[CCT]
    chd = ws[CHD]
    cix = ws[CIX]
    tmp = ws[SIZ]
    nv = n2 // 2 + 1
    for v in range(nv):
        cct[v] = 0
        tmp[v] = 0
    par[0] = -1
    cur = 0
    nxt = 1
    for i in range(n2):
        if ws[wrow, i] == 1:
            par[nxt] = cur
            cct[cur] += 1
            cur = nxt
            nxt += 1
        else:
            cur = par[cur]
    s = 0
    for v in range(nv):
        cst[v] = s
        s += cct[v]
    for u in range(1, nv):
        p = par[u]
        chd[cst[p] + tmp[p]] = u
        cix[u] = tmp[p]
        tmp[p] += 1
    return nv


@njit(cache=True)
def deg(ws, v):
    return ws[CCT, v] + (1 if v != 0 else 0)


@njit(cache=True)
def nbr(ws, v, i):
    if i < ws[CCT, v]:
        return ws[CHD, ws[CST, v] + i]
    return ws[PAR, v]


@njit(cache=True)
def pos_of(ws, v, u):
    """Index of neighbour u in the cyclic list of v."""
    if v != 0 and ws[PAR, v] == u:
        return ws[CCT, v]
    return ws[CIX, u]


@njit(cache=True)
def hanging(ws, b, p, orow, off):
    """Write the Dyck word of the subtree at b away from p; return new offset."""
    sv = ws[SV]
    sp = ws[SP]
    si = ws[SI]
    out = ws[orow]
    top = 0
    sv[0] = b
    sp[0] = p
    si[0] = 0
    while top >= 0:
        v = sv[top]
        d = deg(ws, v)
        cnt = si[top]
        if cnt == d - 1:
            top -= 1
            if top >= 0:
                out[off] = 0
                off += 1
            continue
        start = pos_of(ws, v, sp[top]) + 1
        w = nbr(ws, v, (start + cnt) % d)
        si[top] = cnt + 1
        out[off] = 1
        off += 1
        top += 1
        sv[top] = w
        sp[top] = v
        si[top] = 0
    return off


@njit(cache=True)
def rooted(ws, a, b, orow):
    d = deg(ws, a)
    s = pos_of(ws, a, b)
    off = 0
    for i in range(d):
        w = nbr(ws, a, (s + i) % d)
        ws[orow, off] = 1
        off = hanging(ws, w, a, orow, off + 1)
        ws[orow, off] = 0
        off += 1
    return off


@njit(cache=True)
def centroids(ws, nv):
    """Return (c1, c2, potential) with c2 = -1 for a unique centroid."""
    par = ws[PAR]
    siz = ws[SIZ]
    phi = ws[PHI]
    for v in range(nv):
        siz[v] = 1
    for v in range(nv - 1, 0, -1):
        siz[par[v]] += siz[v]
    phi[0] = 0
    total = 0
    for v in range(1, nv):
        phi[v] = phi[par[v]] + 1
        total += phi[v]
    phi[0] = total
    for v in range(1, nv):
        phi[v] = phi[par[v]] + nv - 2 * siz[v]
    best = phi[0]
    for v in range(1, nv):
        if phi[v] < best:
            best = phi[v]
    c1 = -1
    c2 = -1
    for v in range(nv):
        if phi[v] == best:
            if c1 < 0:
                c1 = v
            else:
                c2 = v
    return c1, c2, best


@njit(cache=True)
def encode(ws, c, s0, k, erow, orow_off, orow_ord, sep):
    """Concatenate k subtrees of c starting at neighbour index s0."""
    d = deg(ws, c)
    off = 0
    for i in range(k):
        w = nbr(ws, c, (s0 + i) % d)
        ws[orow_ord, i] = w
        ws[orow_off, i] = off
        if sep:
            ws[erow, off] = -1
            off += 1
        ws[erow, off] = 1
        off = hanging(ws, w, c, erow, off + 1)
        ws[erow, off] = 0
        off += 1
    ws[orow_off, k] = off
    return off


@njit(cache=True)
def booth(ws, erow, lz):
    """Least rotation of ws[erow, :lz]."""
    s = ws[BS]
    f = ws[BF]
    for i in range(lz):
        s[i] = ws[erow, i]
        s[i + lz] = ws[erow, i]
    for i in range(2 * lz):
        f[i] = -1
    k = 0
    for j in range(1, 2 * lz):
        sj = s[j]
        i = f[j - k - 1]
        while i != -1 and sj != s[k + i + 1]:
            if sj < s[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if sj != s[k + i + 1]:
            if sj < s[k]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return k % lz


@njit(cache=True)
def sub_is_q(ws, erow, start, end, j):
    ln = end - start
    if ln != QLEN[j]:
        return False
    for i in range(ln):
        if ws[erow, start + i] != QARR[j, i]:
            return False
    return True


@njit(cache=True)
def spire(ws, erow, start, end):
    """Return j * 100000 + l if the segment is 1^l q_j 0^l, else -1."""
    ln = end - start
    for j in (1, 2, 3, 4, 5, 7, 8):
        ql = QLEN[j]
        if ln < ql or (ln - ql) % 2 != 0:
            continue
        l = (ln - ql) // 2
        ok = True
        for i in range(l):
            if ws[erow, start + i] != 1 or ws[erow, end - 1 - i] != 0:
                ok = False
                break
        if ok:
            for i in range(ql):
                if ws[erow, start + l + i] != QARR[j, i]:
                    ok = False
                    break
        if ok:
            return j * 100000 + l
    return -1


@njit(cache=True)
def descend(ws, c, b, last, steps):
    """Fill PATH with c, b, ... following first/last children; return length."""
    path = ws[PATH]
    path[0] = c
    path[1] = b
    ln = 2
    while deg(ws, path[ln - 1]) > 1 and (steps < 0 or ln - 1 < steps):
        v = path[ln - 1]
        p = path[ln - 2]
        d = deg(ws, v)
        if last:
            idx = (pos_of(ws, v, p) + d - 1) % d
        else:
            idx = (pos_of(ws, v, p) + 1) % d
        path[ln] = nbr(ws, v, idx)
        ln += 1
    return ln


@njit(cache=True)
def arc_x(ws, wrow, n):
    """Write the x-tree of the arc owned by [w] into XOUT; return the rule code.

    RULE_NONE means [w] is the star, which owns no arc.
    """
    n2 = 2 * n
    nv = build_graph(ws, wrow, n2)
    for v in range(nv):
        if deg(ws, v) == n:
            return RULE_NONE
    c1, c2, phi = centroids(ws, nv)
    xo = ws[XOUT]
    if c2 >= 0 and n % 2 == 1:
        h = (n + 1) // 2
        if deg(ws, c1) == h and deg(ws, c2) == h:
            # x = push(d_n') = 110 (10)^h' 0 (10)^(h'-1), h' = (n-1)/2
            hh = (n - 1) // 2
            xo[0] = 1
            xo[1] = 1
            xo[2] = 0
            off = 3
            for i in range(hh):
                xo[off] = 1
                xo[off + 1] = 0
                off += 2
            xo[off] = 0
            off += 1
            for i in range(hh - 1):
                xo[off] = 1
                xo[off + 1] = 0
                off += 2
            return RULE_D
    if c2 >= 0:
        k1 = deg(ws, c1) - 1
        k2 = deg(ws, c2) - 1
        l1 = encode(ws, c1, pos_of(ws, c1, c2) + 1, k1, ENC, EOFF, ORD, False)
        encode(ws, c2, pos_of(ws, c2, c1) + 1, k2, ENC2, EOFF2, ORD2, False)
        busy1 = False
        for i in range(k1):
            if ws[EOFF, i + 1] - ws[EOFF, i] > 2:
                busy1 = True
        busy2 = False
        for i in range(k2):
            if ws[EOFF2, i + 1] - ws[EOFF2, i] > 2:
                busy2 = True
        use2 = False
        if busy2 and not busy1:
            use2 = True
        elif busy2 and busy1:
            for i in range(l1):
                a = ws[ENC, i]
                b = ws[ENC2, i]
                if a != b:
                    use2 = b < a
                    break
        c = c1
        k = k1
        erow, offrow, ordrow = ENC, EOFF, ORD
        if use2:
            c = c2
            k = k2
            erow, offrow, ordrow = ENC2, EOFF2, ORD2
        sel = 0
        while ws[offrow, sel + 1] - ws[offrow, sel] == 2:
            sel += 1
        b = ws[ordrow, sel]
        tstart = ws[offrow, sel]
        tend = ws[offrow, sel + 1]
    else:
        c = c1
        k = deg(ws, c)
        lz = encode(ws, c, 0, k, ENC, EOFF, ORD, True)
        r0 = booth(ws, ENC, lz)
        first = 0
        for i in range(r0):
            if ws[ENC, i] == -1:
                first += 1
        # waterfall over subtrees first, first+1, ... (mod k)
        sel = -1
        for i in range(k):
            a = (first + i) % k
            p = (first + i - 1 + k) % k
            if sub_is_q(ws, ENC, ws[EOFF, a] + 1, ws[EOFF, a + 1], 1) and \
                    sub_is_q(ws, ENC, ws[EOFF, p] + 1, ws[EOFF, p + 1], 0):
                sel = a
                break
        if sel < 0:
            for i in range(k):
                a = (first + i) % k
                q = (first + i + 1) % k
                s0, s1 = ws[EOFF, a] + 1, ws[EOFF, a + 1]
                t0, t1 = ws[EOFF, q] + 1, ws[EOFF, q + 1]
                if (sub_is_q(ws, ENC, s0, s1, 2) or sub_is_q(ws, ENC, s0, s1, 4)) and \
                        (sub_is_q(ws, ENC, t0, t1, 0) or sub_is_q(ws, ENC, t0, t1, 1)
                         or sub_is_q(ws, ENC, t0, t1, 2)):
                    sel = a
                    break
        if sel < 0:
            for i in range(k):
                a = (first + i) % k
                s0, s1 = ws[EOFF, a] + 1, ws[EOFF, a + 1]
                if not (sub_is_q(ws, ENC, s0, s1, 0) or sub_is_q(ws, ENC, s0, s1, 1)
                        or sub_is_q(ws, ENC, s0, s1, 2) or sub_is_q(ws, ENC, s0, s1, 4)):
                    sel = a
                    break
        if sel < 0:
            for i in range(k):
                a = (first + i) % k
                if not sub_is_q(ws, ENC, ws[EOFF, a] + 1, ws[EOFF, a + 1], 0):
                    sel = a
                    break
        b = ws[ORD, sel]
        tstart = ws[EOFF, sel] + 1
        tend = ws[EOFF, sel + 1]
        erow = ENC
    sp = spire(ws, erow, tstart, tend)
    j = sp // 100000 if sp >= 0 else -1
    l = sp % 100000 if sp >= 0 else -1
    if j == 1 or j == 3 or j == 7:
        rule = RULE_Q137
        ln = descend(ws, c, b, False, -1)
    elif j == 2 or j == 4:
        rule = RULE_Q24
        ln = descend(ws, c, b, True, -1)
    elif j == 5:
        rule = RULE_Q5
        ln = descend(ws, c, b, False, l + 2)
        v = ws[PATH, ln - 1]
        p = ws[PATH, ln - 2]
        d = deg(ws, v)
        ws[PATH, ln] = nbr(ws, v, (pos_of(ws, v, p) + d - 1) % d)
        ln += 1
    elif j == 8:
        rule = RULE_Q8
        ln = descend(ws, c, b, True, -1)
    elif phi % 2 == 0:
        rule = RULE_E
        ln = descend(ws, c, b, False, -1)
    else:
        ln = descend(ws, c, b, True, -1)
        rule = RULE_O1 if deg(ws, ws[PATH, ln - 2]) <= 2 else RULE_O2
    a = ws[PATH, ln - 1]
    a1 = ws[PATH, ln - 2]
    a2 = ws[PATH, ln - 3]
    if rule == RULE_Q137 or rule == RULE_Q8 or rule == RULE_E or rule == RULE_O1:
        rooted(ws, a2, a1, XOUT)
    else:
        rooted(ws, a1, a, XOUT)
        xo[1] = 1  # push: 101u0v -> 110u0v
        xo[2] = 0
    return rule


# -- word helpers ------------------------------------------------------------------

@njit(cache=True)
def match0(ws, row, i, n2):
    depth = 0
    for j in range(i, n2):
        depth += 1 if ws[row, j] == 1 else -1
        if depth == 0:
            return j
    return -1


@njit(cache=True)
def rho(ws, src, dst, n2):
    j = match0(ws, src, 0, n2)
    o = 0
    for i in range(1, j):
        ws[dst, o] = ws[src, i]
        o += 1
    ws[dst, o] = 1
    o += 1
    for i in range(j + 1, n2):
        ws[dst, o] = ws[src, i]
        o += 1
    ws[dst, o] = 0


@njit(cache=True)
def rho_inv(ws, src, dst, n2):
    depth = 0
    i = n2 - 1
    while i >= 0:
        depth += 1 if ws[src, i] == 0 else -1
        if depth == 0:
            break
        i -= 1
    # src = u 1 v 0 with the 1 at index i
    if src == dst:
        raise ValueError("rho_inv needs distinct rows")
    ws[dst, 0] = 1
    for t in range(i):
        ws[dst, 1 + t] = ws[src, t]
    ws[dst, i + 1] = 0
    for t in range(i + 1, n2 - 1):
        ws[dst, t + 1] = ws[src, t]


@njit(cache=True)
def copy_row(ws, src, dst, n2):
    for i in range(n2):
        ws[dst, i] = ws[src, i]


@njit(cache=True)
def rows_equal(ws, a, b, n2):
    for i in range(n2):
        if ws[a, i] != ws[b, i]:
            return False
    return True


@njit(cache=True)
def is_star_leaf_word(ws, row, n2):
    """row == s_n = 1 (10)^(n-1) 0."""
    if ws[row, 0] != 1 or ws[row, n2 - 1] != 0:
        return False
    for i in range(1, n2 - 1):
        if ws[row, i] != (1 if i % 2 == 1 else 0):
            return False
    return True


@njit(cache=True)
def glued_x(ws, row, n):
    """(row, pull row) is an arc label.  Clobbers W4 and the graph rows."""
    n2 = 2 * n
    if ws[row, 0] != 1 or ws[row, 1] != 1 or ws[row, 2] != 0:
        return False
    if is_star_leaf_word(ws, row, n2):
        return False
    if arc_x(ws, row, n) != RULE_NONE and rows_equal(ws, row, XOUT, n2):
        return True
    copy_row(ws, row, W4, n2)
    ws[W4, 1] = 0
    ws[W4, 2] = 1
    if arc_x(ws, W4, n) != RULE_NONE and rows_equal(ws, row, XOUT, n2):
        return True
    return False


@njit(cache=True)
def glued_y(ws, row, n):
    """(push row, row) is an arc label.  Clobbers W5 and the graph rows."""
    n2 = 2 * n
    if ws[row, 0] != 1 or ws[row, 1] != 0 or ws[row, 2] != 1:
        return False
    copy_row(ws, row, W5, n2)
    ws[W5, 1] = 1
    ws[W5, 2] = 0
    if is_star_leaf_word(ws, W5, n2):
        return False
    if arc_x(ws, row, n) != RULE_NONE and rows_equal(ws, W5, XOUT, n2):
        return True
    if arc_x(ws, W5, n) != RULE_NONE and rows_equal(ws, W5, XOUT, n2):
        return True
    return False


@njit(cache=True)
def wrap(p, m):
    return (p - 1) % m + 1


@njit(cache=True)
def rho_k(ws, k, n2):
    """W1 <- rho^k(R) for k in -3..3 (uses W2, W3)."""
    if k == 0:
        copy_row(ws, R, W1, n2)
        return
    src = R
    bufs = (W1, W2, W3)
    cur = 0
    steps = k if k > 0 else -k
    for s in range(steps):
        dst = bufs[cur]
        if dst == src:
            cur = (cur + 1) % 3
            dst = bufs[cur]
        if k > 0:
            rho(ws, src, dst, n2)
        else:
            rho_inv(ws, src, dst, n2)
        src = dst
        cur = (cur + 1) % 3
    if src != W1:
        copy_row(ws, src, W1, n2)


@njit(cache=True)
def reversed_here(ws, is_a, n):
    """Whether the vertex with tree R lies on some reversed path x^1..x^5."""
    n2 = 2 * n
    last = 2 if is_a else 3
    for k in range(1, last + 1):
        rho_k(ws, -k, n2)
        if glued_x(ws, W1, n):
            return True
    return False


@njit(cache=True)
def step(ws, bits, st, swt, swi, n):
    """Advance one edge of the cycle; return the internal flip position.

    st = [ell, is_a, slot, kind, detail]; R holds t(x).  swt[s] holds the trees of the
    switch vertex x, of w = f^{-1}(x) and of w', swi[s] = [ell(x), ell(w),
    ell(w'), p(x, w'), delta] with w = sigma^delta(w').
    """
    n2 = 2 * n
    m = n2 + 1
    L = st[0]
    is_a = st[1] == 1
    slot = st[2]
    nsw = swi.shape[0]
    pos = -1
    kind = K_F
    detail = 0
    if is_a and slot == IN:
        for s in range(nsw):
            same = True
            for i in range(n2):
                if ws[R, i] != swt[s, 0, i]:
                    same = False
                    break
            if same:
                k = swi[s, 0] - L
                pos = wrap(swi[s, 3] - k, m)
                L = swi[s, 2] - k
                for i in range(n2):
                    ws[R, i] = swt[s, 2, i]
                is_a = False
                slot = IN
                kind, detail = K_SWITCH, s
                break
        if pos < 0:
            rho_k(ws, -3, n2)
            if glued_x(ws, W1, n):
                pos = wrap(2 + L - 3, m)
                rho(ws, W1, R, n2)
                L -= 3
                is_a = False
                slot = OUT
                kind, detail = K_GLUE, 1
            else:
                pos = wrap(L, m)
                L -= 1
                is_a = False
                kind = K_FINV
    elif is_a:
        if glued_x(ws, R, n):
            pos = wrap(3 + L, m)
            copy_row(ws, R, W1, n2)
            ws[W1, 1] = 0
            ws[W1, 2] = 1
            rho(ws, W1, R, n2)
            is_a = False
            slot = OUT
            kind, detail = K_GLUE, 3
        elif glued_y(ws, R, n):
            u = match0(ws, R, 2, n2) - 3
            pos = wrap(u + 4 + L, m)
            copy_row(ws, R, W1, n2)
            ws[W1, 1] = 1
            ws[W1, 2] = 0
            rho(ws, W1, W2, n2)
            rho(ws, W2, W3, n2)
            rho(ws, W3, R, n2)
            L += 2
            is_a = False
            slot = IN
            kind, detail = K_GLUE, 2
        else:
            j = match0(ws, R, 0, n2)
            pos = wrap(j + 1 + L, m)
            copy_row(ws, R, W1, n2)
            rho(ws, W1, R, n2)
            is_a = False
    elif slot == OUT:
        for s in range(nsw):
            same = True
            for i in range(n2):
                if ws[R, i] != swt[s, 1, i]:
                    same = False
                    break
            if same:
                k = swi[s, 1] - L + swi[s, 4]
                pos = wrap(swi[s, 3] - k, m)
                L = swi[s, 0] - k
                for i in range(n2):
                    ws[R, i] = swt[s, 0, i]
                is_a = True
                slot = OUT
                kind, detail = K_SWITCH, s
                break
        if pos < 0:
            rho_k(ws, -3, n2)
            if glued_x(ws, W1, n):
                u = match0(ws, W1, 0, n2) - 3
                pos = wrap(u + 4 + L - 2, m)
                copy_row(ws, W1, R, n2)
                ws[R, 1] = 0
                ws[R, 2] = 1
                L -= 2
                is_a = True
                slot = IN
                kind, detail = K_GLUE, 2
            else:
                pos = wrap(L + 1, m)
                L += 1
                is_a = True
    else:
        rho_k(ws, -1, n2)
        if glued_x(ws, W1, n):
            pos = wrap(2 + L, m)
            rho(ws, W1, W2, n2)
            rho(ws, W2, W3, n2)
            rho(ws, W3, R, n2)
            L += 3
            is_a = True
            slot = OUT
            kind, detail = K_GLUE, 1
        elif glued_y(ws, W1, n):
            pos = wrap(3 + L, m)
            copy_row(ws, W1, R, n2)
            ws[R, 1] = 1
            ws[R, 2] = 0
            is_a = True
            slot = IN
            kind, detail = K_GLUE, 3
        else:
            j = match0(ws, W1, 0, n2)
            pos = wrap(j + 1 + L, m)
            copy_row(ws, W1, R, n2)
            is_a = True
            kind = K_FINV
    st[0] = L % m
    st[1] = 1 if is_a else 0
    st[2] = slot
    st[3] = kind
    st[4] = detail
    bits[pos - 1] ^= 1
    return pos


@njit(cache=True)
def run(ws, bits, st, swt, swi, n, out, count, scale):
    """Perform ``count`` steps, storing scaled flip positions in ``out``."""
    m = 2 * n + 1
    for i in range(count):
        p = step(ws, bits, st, swt, swi, n)
        out[i] = (p * scale - 1) % m + 1
    return count
