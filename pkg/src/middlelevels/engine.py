"""Streaming generator of the cyclic star-transposition Gray code.

Combinations have length 2n+2.  Bit 0 alternates; the remaining 2n+1 bits walk
a Hamilton cycle of the middle levels graph built from the cycle factor, the
gluing cycles of the spanning tree and the switches of the plan.  The cycle is
rotation-symmetric with shift s'; flip positions are then scaled by
s'^{-1} * target so that the emitted ordering has the requested shift.
"""
from __future__ import annotations

from dataclasses import dataclass, field
import builtins
from math import comb, gcd

import numpy as np

from . import _kernel as K
from .bits import ell, in_a, rotate, tree_of
from .errors import BadStart, NotCoprime
from .flipseq import wrap
from .switching import SwitchPlan, Switch, plan_switches
from .trees import PlaneTree, canon_plane

# (start suffix, block flips) for n <= 3; all have shift 1
SMALL = {
    1: ("100", (2, 1)),
    2: ("11000", (5, 1, 3, 5)),
    3: ("1110000", (6, 2, 5, 3, 4, 6, 2, 1, 3, 5)),
}


def catalan_mod(n: int) -> int:
    """C_n mod 2n+1 by Segner's convolution; no modular inverses needed."""
    m = 2 * n + 1
    c = np.zeros(n + 1, dtype=np.int64)
    c[0] = 1 % m
    for k in range(n):
        c[k + 1] = int(np.dot(c[:k + 1], c[k::-1]) % m)
    return int(c[n])


def count(n: int) -> int:
    """N = binom(2n+2, n+1), the length of the cycle."""
    return comb(2 * n + 2, n + 1)


def block_length(n: int) -> int:
    return count(n) // (2 * n + 1)


@dataclass(frozen=True)
class Emission:
    flip_position: int  # position swapped with bit 0 to reach the next combination
    combination: str


@dataclass(frozen=True)
class FStep:
    pass


@dataclass(frozen=True)
class FInvStep:
    pass


@dataclass(frozen=True)
class GlueEdge:
    k: int  # 1: (x1, x6), 2: (x5, y0), 3: (y1, x0)


@dataclass(frozen=True)
class SwitchFlip:
    switch: Switch


StepKind = FStep | FInvStep | GlueEdge | SwitchFlip


def _switch_tables(n: int, plan: SwitchPlan):
    """Trees and ell-offsets of each switch, packed for the kernel."""
    k = len(plan.switches)
    swt = np.zeros((max(k, 1), 3, 2 * n), dtype=np.int32)
    swi = np.zeros((max(k, 1), 5), dtype=np.int64)
    for s, sw in enumerate(plan.switches):
        w, x = sw.f_edge
        if x != sw.x or in_a(w):
            raise AssertionError("switch f-edge expected in the form w -> x with w in B")
        wbar = sw.y2 if w == sw.y else sw.y
        delta = builtins.next(d for d in range(2 * n + 1) if rotate(wbar, d) == w)
        for j, v in enumerate((x, w, wbar)):
            swt[s, j] = [int(b) for b in tree_of(v)]
        p_wbar = builtins.next(i for i in range(2 * n + 1) if x[i] != wbar[i]) + 1
        swi[s] = (ell(x), ell(w), ell(wbar), p_wbar, delta)
    return swt[:k], swi[:k]


@dataclass
class GenState:
    n: int
    target_shift: int
    plan: SwitchPlan | None
    scale: int
    comb: bytearray  # current emitted combination, ASCII
    emitted: int = 0
    # n >= 4: kernel state
    ws: np.ndarray | None = None
    bits: np.ndarray | None = None  # internal suffix vertex
    st: np.ndarray | None = None  # ell, is_a, slot, last kind, last detail
    swt: np.ndarray | None = None
    swi: np.ndarray | None = None
    # n <= 3: the whole cycle of output flips
    small_flips: tuple[int, ...] = field(default=())

    @property
    def m(self) -> int:
        return 2 * self.n + 1

    @property
    def x(self) -> str:
        """The internal suffix vertex."""
        if self.bits is None:
            return _unpermute(self.comb.decode()[1:], self.scale)
        return "".join("1" if b else "0" for b in self.bits)

    @property
    def ell(self) -> int:
        return int(self.st[0]) if self.st is not None else ell(self.x)

    @property
    def tree(self) -> PlaneTree:
        return canon_plane(tree_of(self.x))

    @property
    def direction(self) -> str:
        if self.st is None:
            return "Forward"
        return "Reversed" if self.st[2] == K.IN else "Forward"

    @property
    def parity(self) -> int:
        return self.comb[0] - 48

    def nbytes(self) -> int:
        """Approximate footprint of the mutable state."""
        total = len(self.comb) + len(self.small_flips) * 8
        for a in (self.ws, self.bits, self.st, self.swt, self.swi):
            if a is not None:
                total += a.nbytes
        return total


def _permute(internal: str, scale: int) -> str:
    """Output column wrap(scale*i) receives internal bit i."""
    m = len(internal)
    out = [""] * m
    for i in range(1, m + 1):
        out[wrap(scale * i, m) - 1] = internal[i - 1]
    return "".join(out)


def _unpermute(output: str, scale: int) -> str:
    m = len(output)
    return "".join(output[wrap(scale * i, m) - 1] for i in range(1, m + 1))


def _check_start(n: int, start: str | None) -> str:
    if start is None:
        return "1" * (n + 1) + "0" * (n + 1)
    if len(start) != 2 * n + 2 or set(start) - {"0", "1"} or start.count("1") != n + 1:
        raise BadStart(f"start must be a bitstring of length {2 * n + 2} with {n + 1} ones")
    return start


def _load_small(state: GenState, start: str) -> None:
    n, m = state.n, state.m
    x0, alpha = SMALL[n]
    internal = _unpermute(start[1:], state.scale)
    seq = [wrap(p + i, m) for i in range(m) for p in alpha]
    v = x0
    for i, p in enumerate(seq):
        if v == internal:
            break
        v = v[:p - 1] + ("1" if v[p - 1] == "0" else "0") + v[p:]
    else:
        raise AssertionError("start not found on the cycle")
    seq = seq[i:] + seq[:i]
    state.small_flips = tuple(wrap(state.scale * p, m) for p in seq)


def _leave_reversed(ws, is_a: bool, n: int) -> bool:
    return K.reversed_here(ws, is_a, n)


def init(n: int, target_shift: int = 1, start: str | None = None,
         plan: SwitchPlan | None = None) -> GenState:
    """Prepare a generator; ``plan`` overrides the planner (n >= 4 only)."""
    if n < 1:
        raise ValueError("n must be at least 1")
    m = 2 * n + 1
    if gcd(target_shift, m) != 1:
        raise NotCoprime(f"gcd({target_shift}, {m}) != 1")
    start = _check_start(n, start)
    if start[0] == "1" and start[1:].count("1") != n or start[0] == "0" and start[1:].count("1") != n + 1:
        raise BadStart("start must have weight n+1")
    if n <= 3:
        plan, s_after = None, 1
    else:
        if plan is None:
            plan = plan_switches(n, catalan_mod(n))
        s_after = plan.s_after
    scale = pow(s_after, -1, m) * target_shift % m
    state = GenState(n, target_shift % m, plan, scale, bytearray(start.encode()))
    if n <= 3:
        _load_small(state, start)
        return state
    internal = _unpermute(start[1:], scale)
    state.ws = K.workspace(n)
    state.bits = np.array([int(b) for b in internal], dtype=np.int8)
    state.ws[K.R, :2 * n] = [int(b) for b in tree_of(internal)]
    is_a = in_a(internal)
    rev = _leave_reversed(state.ws, is_a, n)
    state.st = np.array([ell(internal), int(is_a), K.IN if rev else K.OUT, 0, 0], dtype=np.int64)
    state.swt, state.swi = _switch_tables(n, plan)
    return state


def _advance(state: GenState) -> int:
    """One internal step; returns the output flip position."""
    if state.st is None:
        return state.small_flips[state.emitted % len(state.small_flips)]
    p = K.step(state.ws, state.bits, state.st, state.swt, state.swi, state.n)
    return wrap(state.scale * p, state.m)


def next(state: GenState) -> Emission:  # noqa: A001 - mirrors the generator protocol
    """Emit the current combination and move to the next one."""
    cur = state.comb.decode()
    p = _advance(state)
    c = state.comb
    c[0] ^= 1
    c[p] ^= 1
    state.emitted += 1
    return Emission(p, cur)


def classify_step(state: GenState) -> StepKind:
    """The kind of move the next call to ``next`` will make."""
    if state.st is None:
        return FStep()
    ws, bits, st = state.ws.copy(), state.bits.copy(), state.st.copy()
    K.step(ws, bits, st, state.swt, state.swi, state.n)
    kind, detail = int(st[3]), int(st[4])
    if kind == K.K_F:
        return FStep()
    if kind == K.K_FINV:
        return FInvStep()
    if kind == K.K_GLUE:
        return GlueEdge(detail)
    return SwitchFlip(state.plan.switches[detail])


def flips(state: GenState, k: int) -> np.ndarray:
    """The next k output flip positions, advancing the state (bulk path)."""
    out = np.empty(k, dtype=np.int32)
    if state.st is None:
        for i in range(k):
            out[i] = _advance(state)
            state.emitted += 1
    else:
        K.run(state.ws, state.bits, state.st, state.swt, state.swi, state.n, out, k, state.scale)
        state.emitted += k
    c = state.comb
    for p in np.flatnonzero(np.bincount(out, minlength=state.m + 1) % 2):
        c[p] ^= 1
    if k % 2:
        c[0] ^= 1
    return out


def generate(n: int, target_shift: int = 1, start: str | None = None, limit: int | None = None):
    """Yield emissions; the full cycle has count(n) of them."""
    state = init(n, target_shift, start)
    total = count(n) if limit is None else limit
    for _ in range(total):
        yield next(state)


def realized_shift(n: int) -> int:
    """Shift of the internal cycle measured over one block from the default start."""
    state = init(n, 1)
    x0 = state.x
    flips(state, block_length(n))
    x1 = state.x
    for lam in range(state.m):
        if rotate(x1, lam) == x0:
            return lam
    raise AssertionError("block end is not a rotation of its start")
