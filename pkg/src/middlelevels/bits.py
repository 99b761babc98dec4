"""Bitstrings of the middle levels graph.

Strings are plain ``str`` objects over ``'0'``/``'1'``.  Position ``i`` (1-based,
as in the rest of the package) is ``x[i - 1]``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import InvalidWeight


def weight_n(x: str) -> int:
    """Return n for x in A_n or B_n, raise InvalidWeight otherwise."""
    m = len(x)
    if m % 2 == 0 or m < 3 or set(x) - {"0", "1"}:
        raise InvalidWeight(f"not a middle-levels string: {x!r}")
    n = (m - 1) // 2
    if x.count("1") not in (n, n + 1):
        raise InvalidWeight(f"weight {x.count('1')} outside {{{n}, {n + 1}}}: {x}")
    return n


def in_a(x: str) -> bool:
    return x.count("1") * 2 < len(x)


def rotate(x: str, i: int) -> str:
    """Cyclic left rotation sigma^i.  Negative i rotates right."""
    if not x:
        return x
    i %= len(x)
    return x[i:] + x[:i]


def flip(x: str, pos: int) -> str:
    """Flip the bit at 1-based position ``pos`` (taken mod len(x), 1..m)."""
    j = (pos - 1) % len(x)
    return x[:j] + ("1" if x[j] == "0" else "0") + x[j + 1 :]


def diff_position(x: str, y: str) -> int:
    """The unique 1-based position where x and y differ."""
    d = [i for i, (a, b) in enumerate(zip(x, y)) if a != b]
    if len(x) != len(y) or len(d) != 1:
        raise ValueError(f"{x} and {y} do not differ in exactly one bit")
    return d[0] + 1


def least_rotation(seq: Sequence) -> int:
    """Booth's algorithm: start index of the lexicographically least rotation."""
    s = list(seq) * 2
    f = [-1] * len(s)
    k = 0
    for j in range(1, len(s)):
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
    return k % max(len(seq), 1)


@dataclass(frozen=True)
class Necklace:
    canon: str
    n: int


def necklace_of(x: str) -> Necklace:
    n = weight_n(x)
    return Necklace(rotate(x, least_rotation(x)), n)


def is_dyck(w: Sequence) -> bool:
    excess = 0
    for b in w:
        excess += 1 if b in ("1", 1) else -1
        if excess < 0:
            return False
    return excess == 0


def ell(x: str) -> int:
    """The rotation exposing t(x): sigma^ell(x) = t(x)0 on A_n, 1t(x) on B_n.

    Cycle lemma: with prefix sums P_0..P_m the answer is the first index of the
    minimum (A_n) or the last index of the minimum among P_0..P_{m-1} (B_n).
    """
    weight_n(x)
    m = len(x)
    p = 0
    best, arg = 0, 0
    a = in_a(x)
    for j, b in enumerate(x, start=1):
        p += 1 if b == "1" else -1
        if j == m:
            break
        if p < best or (not a and p == best):
            best, arg = p, j
    if a and p < best:  # P_m = -1 is the first minimum: x itself is t0
        arg = 0
    return arg % m


def tree_of(x: str) -> str:
    """The Dyck word t(x) of length 2n."""
    w = rotate(x, ell(x))
    return w[:-1] if in_a(x) else w[1:]
