"""Flip sequences, their shifts, gluing 6-cycles and the join of two paths."""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .bits import flip, rotate, weight_n
from .errors import ForbiddenPair, NotPeriodic, PrefixMismatch, PreconditionViolated, WeightViolation
from .trees import canon_plane, pull, rho_pow, split


def wrap(p: int, m: int) -> int:
    """Residue of p with representatives 1..m."""
    return (p - 1) % m + 1


def walk(start: str, flips) -> list[str]:
    """All vertices visited, including the one after the last flip."""
    n = weight_n(start)
    out = [start]
    for p in flips:
        x = flip(out[-1], p)
        if x.count("1") not in (n, n + 1):
            raise WeightViolation(f"flip {p} leaves the middle levels at {out[-1]}")
        out.append(x)
    return out


@dataclass(frozen=True)
class ShiftedFlip:
    """A flip sequence together with its start vertex and shift."""

    start: str
    flips: tuple[int, ...]
    shift: int

    @property
    def m(self) -> int:
        return len(self.start)

    def path(self) -> list[str]:
        return walk(self.start, self.flips)[:-1]

    def __str__(self) -> str:
        return " ".join(map(str, self.flips))


def shift_of(flips, start: str) -> ShiftedFlip:
    """The shift lambda with start = sigma^lambda(end)."""
    flips = tuple(flips)
    if not flips:
        raise ValueError("empty flip sequence")
    m = len(start)
    if any(not 1 <= p <= m for p in flips):
        raise ValueError(f"positions must lie in 1..{m}")
    end = walk(start, flips)[-1]
    for lam in range(m):
        if rotate(end, lam) == start:
            return ShiftedFlip(start, flips, lam)
    raise NotPeriodic(f"{end} is not a rotation of {start}")


def rev(sf: ShiftedFlip) -> ShiftedFlip:
    m, lam = sf.m, sf.shift
    flips = tuple(wrap(p - lam, m) for p in reversed(sf.flips))
    return ShiftedFlip(sf.start, flips, (-lam) % m)


def mov(sf: ShiftedFlip) -> ShiftedFlip:
    m = sf.m
    flips = sf.flips[1:] + (wrap(sf.flips[0] + sf.shift, m),)
    return ShiftedFlip(flip(sf.start, sf.flips[0]), flips, sf.shift)


def translate(sf: ShiftedFlip, i: int) -> ShiftedFlip:
    m = sf.m
    return ShiftedFlip(rotate(sf.start, -i), tuple(wrap(p + i, m) for p in sf.flips), sf.shift)


# -- gluing pairs and cycles ------------------------------------------------------

@dataclass(frozen=True)
class GluingPair:
    x: str
    y: str

    @classmethod
    def from_x(cls, x: str) -> "GluingPair":
        return cls(x, pull(x))

    @property
    def u(self) -> str:
        return split(self.x)[0][2:]

    @property
    def v(self) -> str:
        return split(self.x)[1]

    @property
    def n(self) -> int:
        return len(self.x) // 2


@dataclass(frozen=True)
class GluingCycle:
    pair: GluingPair
    vertices: tuple[str, ...]  # (x0, x1, x6, x5, y0, y1)
    flips: tuple[int, ...]

    def edges(self, i: int = 0) -> list[frozenset]:
        vs = [rotate(z, i) for z in self.vertices]
        return [frozenset(e) for e in zip(vs, vs[1:] + vs[:1])]


def gluing_cycle(pair: GluingPair) -> GluingCycle:
    u, v = pair.u, pair.v
    if pull(pair.x) != pair.y:
        raise ValueError(f"{pair.y} is not pull({pair.x})")
    x0 = "110" + u + "0" + v + "0"
    x1 = "110" + u + "1" + v + "0"
    x6 = "100" + u + "1" + v + "0"
    x5 = "101" + u + "1" + v + "0"
    y0 = "101" + u + "0" + v + "0"
    y1 = "111" + u + "0" + v + "0"
    k = len(u) + 4
    return GluingCycle(pair, (x0, x1, x6, x5, y0, y1), (k, 2, 3, k, 2, 3))


def glue(sf1: ShiftedFlip, sf2: ShiftedFlip, pair: GluingPair) -> ShiftedFlip:
    """The join P1 |><| P2 along the gluing cycle of ``pair``."""
    from .factor import f

    x0 = pair.x + "0"
    xs = [x0]
    for _ in range(6):
        xs.append(f(xs[-1]))
    y0 = pair.y + "0"
    p1, p2 = walk(sf1.start, sf1.flips), walk(sf2.start, sf2.flips)
    if len(p1) < 8 or p1[:7] != xs:
        raise PrefixMismatch("first path must start with x^0..x^6")
    if len(p2) < 3 or p2[:2] != [y0, f(y0)]:
        raise PrefixMismatch("second path must start with y^0, y^1")
    if canon_plane(pair.x) == canon_plane(pair.y):
        raise PreconditionViolated("gluing a cycle to itself")
    m = sf1.m
    a, b, lam2 = sf1.flips, sf2.flips, sf2.shift
    tail = (len(pair.u) + 4, a[4], a[3], a[2], a[1], 2) + a[6:]
    flips = (3,) + b[1:] + tuple(wrap(p + lam2, m) for p in tail)
    return ShiftedFlip(sf1.start, flips, (sf1.shift + lam2) % m)


class Relation(enum.Enum):
    COMPATIBLE = "Compatible"
    NESTED = "Nested"
    INTERLEAVED = "Interleaved"


def classify_relation(p: GluingPair, q: GluingPair, i: int, j: int) -> Relation:
    """Relation between sigma^i(C(p)) and sigma^j(C(q))."""
    cx, cy = canon_plane(p.x), canon_plane(p.y)
    dx, dy = canon_plane(q.x), canon_plane(q.y)
    if cx == cy or dx == dy or {cx, cy} == {dx, dy}:
        raise PreconditionViolated("pairs must join distinct classes")
    m = 2 * p.n + 1
    if (i - j + 1) % m == 0 and q.x == rho_pow(p.y, -1):
        return Relation.NESTED
    if (i - j - 2) % m == 0 and q.x == rho_pow(p.x, 2):
        return Relation.INTERLEAVED
    return Relation.COMPATIBLE


__all__ = [
    "GluingCycle", "GluingPair", "Relation", "ShiftedFlip", "ForbiddenPair",
    "classify_relation", "glue", "gluing_cycle", "mov", "rev", "shift_of",
    "translate", "walk", "wrap",
]
