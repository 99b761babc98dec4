"""Switches and the planner that repairs a shift not coprime to 2n+1."""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd, prod

from .bits import diff_position, flip, in_a, rotate
from .errors import OutOfRange, SmallN
from .factor import f
from .trees import pull, push, rho_pow, is_pullable, is_pushable, canon_plane


def orbit(s: int, d: int, n: int) -> tuple[int, ...]:
    m = 2 * n + 1
    length = m // gcd(m, d)
    return tuple((s - 1 + i * d) % m + 1 for i in range(length))


def prime_factors(k: int) -> list[int]:
    out, p = [], 2
    while p * p <= k:
        if k % p == 0:
            out.append(p)
            while k % p == 0:
                k //= p
        p += 1
    if k > 1:
        out.append(k)
    return out


def coprime_part(m: int, s: int) -> list[int]:
    """P(m, s): primes of m not dividing s, empty for s = 0."""
    if s % m == 0:
        return []
    return [p for p in prime_factors(m) if s % p != 0]


@dataclass(frozen=True)
class Switch:
    kind: str  # "tau1", "tau2" or "tau_ndz"
    d: int
    x: str
    p_y: int
    p_y2: int  # p(x, y')
    shift: int
    conformal: str  # "plusF", "minusF" or "neither"
    reversed: bool
    effective_shift: int

    @property
    def y(self) -> str:
        return flip(self.x, self.p_y)

    @property
    def y2(self) -> str:
        return flip(self.x, self.p_y2)

    @property
    def f_edge(self) -> tuple[str, str]:
        x, y, y2 = self.x, self.y, self.y2
        for a, b in ((x, y), (y2, x), (x, y2), (y, x)):
            if f(a) == b:
                return a, b
        raise ValueError("switch is not conformal")

    def label(self) -> str:
        return f"tau_ndz d={self.d}" if self.kind == "tau_ndz" else self.kind

    def __str__(self) -> str:
        marks = {self.p_y: "_", self.p_y2: "^"}
        return "".join(b + marks.get(i, "") for i, b in enumerate(self.x, start=1))


def switch_string(n: int, kind: str, d: int = 1) -> tuple[str, int, int]:
    """(x, p(x,y), p(x,y')) for the three constructions."""
    m = 2 * n + 1
    if kind == "tau1":
        if n < 1:
            raise OutOfRange("tau1 needs n >= 1")
        return "1" * n + "0" * (n + 1), m, n + 1
    if kind == "tau2":
        if n < 2:
            raise OutOfRange("tau2 needs n >= 2")
        return "10" * (n - 1) + "100", m - 1, m
    if kind == "tau_ndz":
        c = m // d if d else 0
        if n < 11 or d < 3 or m % d or c < 3:
            raise OutOfRange(f"tau_ndz needs n >= 11 and 2n+1 = c*d with c, d >= 3 (n={n}, d={d})")
        h = (d - 1) // 2
        z = "1" * h + "0" * h
        body = ["1"] * ((c - 1) // 2) + ["0"] + ["0"] * ((c - 3) // 2) + ["0"]
        x = "".join(b + z for b in body)
        return x, (c - 1) * d + 1, (c - 1) // 2 * d + 1
    raise OutOfRange(f"unknown switch kind {kind!r}")


def _shift(y: str, y2: str) -> int:
    for i in range(len(y)):
        if rotate(y2, i) == y:
            return i
    raise ValueError("y and y' are not in the same necklace")


def _signed(i: int, m: int) -> int:
    i %= m
    return i - m if i > m // 2 else i


def glued_x(r: str) -> bool:
    """Whether (r, pull r) labels an arc of the spanning tree."""
    from .arcs import in_tree
    return is_pullable(r) and in_tree(r, pull(r))


def glued_y(r: str) -> bool:
    from .arcs import in_tree
    return is_pushable(r) and in_tree(push(r), r)


def _conformality(x: str, y: str, y2: str) -> str:
    if f(x) == y or f(y2) == x:
        return "plusF"
    if f(x) == y2 or f(y) == x:
        return "minusF"
    return "neither"


def _a_end(edge: tuple[str, str]) -> str:
    return edge[0] if in_a(edge[0]) else edge[1]


def is_reversed(edge: tuple[str, str], glued=glued_x) -> bool:
    """Whether the f-edge lies on a reversed path (x^1, ..., x^5)."""
    from .bits import tree_of
    t = tree_of(_a_end(edge))
    return glued(rho_pow(t, -1)) or glued(rho_pow(t, -2))


def is_removed(edge: tuple[str, str], glued=glued_x, glued_pushable=glued_y) -> bool:
    """Whether the f-edge is one of the three f-edges of some gluing cycle."""
    from .bits import tree_of
    a = _a_end(edge)
    t = tree_of(a)
    if edge[0] == a:  # A -> B: (x^0, x^1) or (y^0, y^1)
        return glued(t) or glued_pushable(t)
    return glued(rho_pow(t, -3))  # B -> A: (x^5, x^6)


def make_switch(n: int, kind: str, d: int = 1) -> Switch:
    x, p_y, p_y2 = switch_string(n, kind, d)
    y, y2 = flip(x, p_y), flip(x, p_y2)
    shift = _shift(y, y2)
    conf = _conformality(x, y, y2)
    rev_flag = False
    if conf != "neither" and n >= 4:
        edge = next(e for e in ((x, y), (y2, x), (x, y2), (y, x)) if f(e[0]) == e[1])
        rev_flag = is_reversed(edge)
    sign = (-1 if conf == "minusF" else 1) * (-1 if rev_flag else 1)
    eff = sign * _signed(shift, 2 * n + 1)
    return Switch(kind, d if kind == "tau_ndz" else (1 if kind == "tau1" else 2),
                  x, p_y, p_y2, shift, conf, rev_flag, eff)


def usable_wrt(sw: Switch, arcs) -> bool:
    """Usability against an explicit set of arcs (test-scale)."""
    xs = {a.pair.x for a in arcs}
    ys = {a.pair.y for a in arcs}
    return not is_removed(sw.f_edge, lambda r: r in xs, lambda r: r in ys)


@dataclass(frozen=True)
class SwitchPlan:
    n: int
    s_before: int
    s_after: int
    switches: tuple[Switch, ...] = field(default=())

    def describe(self) -> str:
        plan = ", ".join(sw.label() for sw in self.switches)
        return f"s={self.s_before}, plan=[{plan}], s'={self.s_after}"


def plan_switches(n: int, s: int) -> SwitchPlan:
    m = 2 * n + 1
    s %= m
    if gcd(s, m) == 1:
        return SwitchPlan(n, s, s)
    if n <= 3:
        raise SmallN("n <= 3 uses hardcoded sequences")
    if n <= 10:
        delta = next(dl for dl in (1, 2, 3) if gcd(s + dl, m) == 1)
        kinds = {1: ["tau1"], 2: ["tau2"], 3: ["tau1", "tau2"]}[delta]
        sws = tuple(make_switch(n, k) for k in kinds)
    elif len(prime_factors(m)) == 1:
        sws = (make_switch(n, "tau1"),)
    else:
        ps = coprime_part(m, s)
        if ps:
            sws = (make_switch(n, "tau_ndz", prod(ps)),)
        else:
            d1 = prime_factors(m)[0]
            first = make_switch(n, "tau_ndz", d1)
            d2 = prod(coprime_part(m, s + first.effective_shift))
            sws = (first, make_switch(n, "tau_ndz", d2))
    s_after = (s + sum(sw.effective_shift for sw in sws)) % m
    if gcd(s_after, m) != 1:
        raise AssertionError(f"plan for n={n}, s={s} failed to reach a coprime shift")
    return SwitchPlan(n, s, s_after, sws)
