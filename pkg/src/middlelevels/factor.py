"""The bijection f on A_n u B_n and the cycle factor it induces."""
from __future__ import annotations

import os
from dataclasses import dataclass

from .bits import Necklace, ell, flip, in_a, necklace_of, rotate, tree_of, weight_n
from .errors import BoundExceeded
from .trees import canon_plane, lambda_of, match, plane_trees

DEFAULT_MAX_N = 12


def max_n() -> int:
    return int(os.environ.get("MLC_MAX_N", DEFAULT_MAX_N))


def f_position(v: str) -> int:
    """The 1-based position flipped by f at v."""
    m = len(v)
    L = ell(v)
    if in_a(v):
        w = rotate(v, L)  # = 1u0v0, flip the 0 after u
        return (match(w, 0) + L) % m + 1
    return L % m + 1  # 1w -> 0w at frame position 1


def f(v: str) -> str:
    weight_n(v)
    return flip(v, f_position(v))


def f_inv(v: str) -> str:
    weight_n(v)
    m = len(v)
    L = ell(v)
    if in_a(v):
        return flip(v, (L - 1) % m + 1)
    # v = sigma^{-L}(1u1v0) came from 1u0v0; 1u0v = rho^{-1}(t(v))
    w = rotate(v, L)
    depth = 0
    for i in range(m - 1, 0, -1):  # find the 1 closed by the final 0 of t(v)
        depth += 1 if w[i] == "0" else -1
        if depth == 0:
            return flip(v, (i + L) % m + 1)
    raise AssertionError("unreachable")


def kappa(v: str) -> int:
    return 2 * lambda_of(tree_of(v))


@dataclass(frozen=True)
class PeriodicPath:
    start: str
    vertices: tuple[str, ...]
    flips: tuple[int, ...]

    @property
    def end(self) -> str:
        """The vertex after the last flip, a rotation of start."""
        return flip(self.vertices[-1], self.flips[-1])


def periodic_path(v: str) -> PeriodicPath:
    k = kappa(v)
    verts, flips = [v], []
    for _ in range(k):
        p = f_position(verts[-1])
        flips.append(p)
        verts.append(flip(verts[-1], p))
    return PeriodicPath(v, tuple(verts[:-1]), tuple(flips))


def enumerate_factor(n: int) -> set[tuple[Necklace, ...]]:
    """All cycles of F_n, each as the necklace sequence of P(t0)."""
    if n > max_n():
        raise BoundExceeded(f"n={n} exceeds the enumeration bound {max_n()}")
    out = set()
    for T in plane_trees(n):
        path = periodic_path(T.canon + "0")
        out.add(tuple(necklace_of(x) for x in path.vertices))
    return out


def factor_to_dot(n: int) -> str:
    lines = [f"graph F{n} {{"]
    for i, cyc in enumerate(sorted(enumerate_factor(n), key=lambda c: c[0].canon)):
        names = [c.canon for c in cyc]
        for a, b in zip(names, names[1:] + names[:1]):
            lines.append(f'  "{a}" -- "{b}" [label="{i}"];')
    lines.append("}")
    return "\n".join(lines)


def factor_to_text(n: int) -> str:
    rows = []
    for cyc in sorted(enumerate_factor(n), key=lambda c: c[0].canon):
        t = tree_of(cyc[0].canon)
        rows.append(f"{canon_plane(t).canon}\t{len(cyc)}\t" + " ".join(c.canon for c in cyc))
    return "\n".join(rows)
