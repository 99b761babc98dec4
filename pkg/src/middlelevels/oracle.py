"""Brute-force ground truth, written from the definitions only.

Nothing here imports the modules it checks: rotations, f, the Dyck offset,
tree rotation and centroids are all recomputed directly.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from math import comb
from typing import Iterable

import numpy as np

REASONS = ("NotStarTransposition", "Duplicate", "Missing", "NotCyclic",
           "BlockSymmetryBroken", "NecklaceRepeatInBlock")

GOLDEN = {  # (start combination, block flips), all with shift 1
    1: ("1100", (2, 1)),
    2: ("111000", (5, 1, 3, 5)),
    3: ("11110000", (6, 2, 5, 3, 4, 6, 2, 1, 3, 5)),
}


@dataclass(frozen=True)
class VerifyReport:
    ok: bool
    first_violation: tuple[int, str] | None = None

    @classmethod
    def fail(cls, step: int, reason: str) -> "VerifyReport":
        return cls(False, (int(step), reason))


def _popcount(a: np.ndarray) -> np.ndarray:
    a = a.astype(np.uint64)
    c = np.zeros(a.shape, dtype=np.uint64)
    while a.any():
        c += a & np.uint64(1)
        a = a >> np.uint64(1)
    return c


def _as_ints(combos) -> np.ndarray:
    """Bit j of the integer is character j of the combination."""
    if isinstance(combos, np.ndarray):
        return combos.astype(np.uint64)
    return np.array([int(c[::-1], 2) for c in combos], dtype=np.uint64)


def min_rotations(s: np.ndarray, m: int) -> np.ndarray:
    """Least cyclic rotation of each m-bit integer."""
    s = s.astype(np.uint64)
    mask = np.uint64((1 << m) - 1)
    best = s.copy()
    for k in range(1, m):
        r = ((s >> np.uint64(k)) | (s << np.uint64(m - k))) & mask
        np.minimum(best, r, out=best)
    return best


def rotate_right(v: int, k: int, m: int) -> int:
    """Move the bit at position p to position p + k (mod m)."""
    k %= m
    return ((v << k) | (v >> (m - k))) & ((1 << m) - 1)


def verify_ordering(combos: Iterable, n: int, target_shift: int = 1) -> VerifyReport:
    """Check a full cyclic ordering of (n+1, n+1)-combinations."""
    m = 2 * n + 1
    N = comb(2 * n + 2, n + 1)
    c = _as_ints(list(combos) if not isinstance(combos, np.ndarray) else combos)
    if len(c) < N:
        return VerifyReport.fail(len(c), "Missing")
    if len(c) > N:
        return VerifyReport.fail(N, "Duplicate")
    w = _popcount(c)
    bad = np.flatnonzero(w != n + 1)
    if len(bad):
        return VerifyReport.fail(bad[0], "NotStarTransposition")
    order = np.argsort(c, kind="stable")
    sc = c[order]
    dup = np.flatnonzero(sc[1:] == sc[:-1])
    if len(dup):
        return VerifyReport.fail(order[dup + 1].min(), "Duplicate")
    d = c ^ np.roll(c, -1)
    good = (_popcount(d) == 2) & ((d & np.uint64(1)) == 1)
    bad = np.flatnonzero(~good)
    if len(bad):
        reason = "NotCyclic" if bad[0] == N - 1 else "NotStarTransposition"
        return VerifyReport.fail(bad[0], reason)
    other = d >> np.uint64(1)  # a single bit at position p - 1
    pos = np.zeros(N, dtype=np.int64)
    for p in range(m):
        pos[other == np.uint64(1 << p)] = p + 1
    B = N // m
    blocks = pos.reshape(m, B)
    s = target_shift % m
    expect = (blocks[0][None, :] + s * np.arange(m)[:, None] - 1) % m + 1
    bad = np.flatnonzero((blocks != expect).ravel())
    if len(bad):
        return VerifyReport.fail(bad[0], "BlockSymmetryBroken")
    neck = min_rotations(c[:B] >> np.uint64(1), m)
    order = np.argsort(neck, kind="stable")
    sn = neck[order]
    dup = np.flatnonzero(sn[1:] == sn[:-1])
    if len(dup):
        return VerifyReport.fail(order[dup + 1].min(), "NecklaceRepeatInBlock")
    return VerifyReport(True)


def expand(start: str, flips: Iterable[int]) -> list[str]:
    """Combinations visited by star transpositions at the given positions."""
    out = [start]
    cur = list(start)
    for p in flips:
        cur[0], cur[p] = cur[p], cur[0]
        out.append("".join(cur))
    return out[:-1]


def combos_from_flips(start: str, flips) -> np.ndarray:
    """Integer combinations (bit j = character j) visited from ``start``."""
    flips = np.asarray(flips, dtype=np.uint64)
    steps = np.uint64(1) | (np.uint64(1) << flips)
    acc = np.bitwise_xor.accumulate(steps)
    out = np.empty(len(flips), dtype=np.uint64)
    c0 = np.uint64(int(start[::-1], 2))
    out[0] = c0
    out[1:] = c0 ^ acc[:-1]
    return out


def full_flips(block: Iterable[int], m: int, s: int) -> list[int]:
    """Block 0 repeated m times, block i shifted by i*s."""
    block = list(block)
    return [(p + i * s - 1) % m + 1 for i in range(m) for p in block]


def exhaustive_hamilton_check(n: int, block: Iterable[int] | None = None,
                              start: str | None = None) -> bool:
    """Full check of the short orderings for n <= 3."""
    if n not in GOLDEN:
        raise ValueError("only n in {1, 2, 3}")
    gs, gb = GOLDEN[n]
    block = tuple(gb if block is None else block)
    start = gs if start is None else start
    m = 2 * n + 1
    seq = expand(start, full_flips(block, m, 1))
    return verify_ordering(seq, n, 1).ok


# -- bitstrings, f and kappa --------------------------------------------------------

def _rot(x: str, i: int) -> str:
    i %= len(x)
    return x[i:] + x[:i]


def _dyck(w: str) -> bool:
    h = 0
    for b in w:
        h += 1 if b == "1" else -1
        if h < 0:
            return False
    return h == 0


def _offset(x: str) -> int:
    """The unique rotation exposing a Dyck word, found by trying all of them."""
    a = x.count("1") * 2 < len(x)
    hits = [i for i in range(len(x))
            if _dyck(_rot(x, i)[:-1] if a else _rot(x, i)[1:])]
    assert len(hits) == 1
    return hits[0]


def _split(t: str) -> tuple[str, str]:
    h = 0
    for i, b in enumerate(t):
        h += 1 if b == "1" else -1
        if h == 0:
            return t[1:i], t[i + 1:]
    raise ValueError(t)


def brute_f(x: str) -> str:
    L = _offset(x)
    z = _rot(x, L)
    if x.count("1") * 2 < len(x):  # z = 1u0v0 -> 1u1v0
        u, v = _split(z[:-1])
        return _rot("1" + u + "1" + v + "0", -L)
    return _rot("0" + z[1:], -L)  # z = 1w -> 0w


def necklace(x: str) -> str:
    return min(_rot(x, i) for i in range(len(x)))


def brute_kappa(x: str) -> int:
    k, y, nk = 1, brute_f(x), necklace(x)
    while necklace(y) != nk:
        y = brute_f(y)
        k += 1
    return k


def brute_rho(t: str) -> str:
    u, v = _split(t)
    return u + "1" + v + "0"


def brute_lambda(t: str) -> int:
    k, r = 1, brute_rho(t)
    while r != t:
        r = brute_rho(r)
        k += 1
    return k


# -- trees as graphs ---------------------------------------------------------------

def adjacency(t: str) -> list[list[int]]:
    adj: list[list[int]] = [[]]
    stack = [0]
    for b in t:
        if b == "1":
            adj.append([])
            v = len(adj) - 1
            adj[stack[-1]].append(v)
            adj[v].append(stack[-1])
            stack.append(v)
        else:
            stack.pop()
    return adj


def distances(adj: list[list[int]], s: int) -> list[int]:
    d = [-1] * len(adj)
    d[s] = 0
    q = deque([s])
    while q:
        v = q.popleft()
        for w in adj[v]:
            if d[w] < 0:
                d[w] = d[v] + 1
                q.append(w)
    return d


def brute_potentials(t: str) -> list[int]:
    adj = adjacency(t)
    return [sum(distances(adj, v)) for v in range(len(adj))]


def brute_centroids(t: str) -> set[int]:
    """Vertices (preorder ids of t) with least total distance."""
    phi = brute_potentials(t)
    best = min(phi)
    return {v for v, p in enumerate(phi) if p == best}


def component_sizes(t: str, c: int) -> list[int]:
    adj = adjacency(t)
    sizes = []
    for b in adj[c]:
        seen, stack = {c, b}, [b]
        while stack:
            v = stack.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        sizes.append(len(seen) - 1)
    return sizes


# -- gluing 6-cycles ---------------------------------------------------------------

def _pull(x: str) -> str:
    assert x.startswith("110")
    return "101" + x[3:]


def cycle_vertices(x: str) -> dict[str, str]:
    """x^0..x^6 and y^0, y^1 of the gluing cycle of (x, pull(x))."""
    xs = [x + "0"]
    for _ in range(6):
        xs.append(brute_f(xs[-1]))
    y0 = _pull(x) + "0"
    out = {f"x{i}": v for i, v in enumerate(xs)}
    out["y0"], out["y1"] = y0, brute_f(y0)
    return out


def direct_relation(x: str, xh: str, i: int, j: int) -> str:
    """Relation of sigma^i(C(x, .)) and sigma^j(C(xh, .)) from edge membership."""
    a, b = cycle_vertices(x), cycle_vertices(xh)

    def reversed_path(cv, k):
        vs = [_rot(cv[f"x{t}"], k) for t in range(1, 6)]
        return {frozenset(e) for e in zip(vs, vs[1:])}

    ya = frozenset((_rot(a["y0"], i), _rot(a["y1"], i)))
    xb = frozenset((_rot(b["x0"], j), _rot(b["x1"], j)))
    if ya in reversed_path(b, j):
        return "Nested"
    if xb in reversed_path(a, i):
        return "Interleaved"
    return "Compatible"


# -- streaming block check for large n ---------------------------------------------

class BlockStream:
    """Consume the output flips of one block in chunks and check it.

    Stores one uint64 canonical necklace per vertex, so memory is 8 bytes per
    step of the block.
    """

    def __init__(self, start_suffix: str, m: int, length: int):
        if m > 63:
            raise ValueError("suffix must fit in 63 bits")
        self.m = m
        self.start = int(start_suffix[::-1], 2)
        self.cur = self.start
        self.canon = np.empty(length, dtype=np.uint64)
        self.filled = 0

    def feed(self, flips: np.ndarray) -> None:
        flips = np.asarray(flips, dtype=np.uint64)
        bits = np.uint64(1) << (flips - np.uint64(1))
        acc = np.bitwise_xor.accumulate(bits)
        verts = np.empty(len(flips), dtype=np.uint64)
        verts[0] = self.cur
        verts[1:] = np.uint64(self.cur) ^ acc[:-1]
        k = len(flips)
        self.canon[self.filled:self.filled + k] = min_rotations(verts, self.m)
        self.filled += k
        self.cur = int(np.uint64(self.cur) ^ acc[-1])

    def finish(self, shift: int) -> tuple[bool, bool]:
        """(necklaces distinct, end equals start rotated by shift)."""
        a = self.canon[:self.filled]
        a.sort()
        distinct = not bool(np.any(a[1:] == a[:-1]))
        return distinct, self.cur == rotate_right(self.start, shift, self.m)
