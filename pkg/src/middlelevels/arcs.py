"""The nesting-free spanning tree of plane trees: one gluing pair per tree.

Every plane tree other than the star picks a centroid, a subtree around it and
a leaf of that subtree; pulling or pushing the leaf yields the gluing pair
that connects the tree to a neighbour of potential one less.
"""
from __future__ import annotations

from dataclasses import dataclass

from .bits import least_rotation
from .errors import IsStar, PreconditionViolated, SmallN
from .factor import max_n
from .errors import BoundExceeded
from .flipseq import GluingPair
from .trees import (Q, Graph, PlaneTree, canon_plane, dumbbell, dumbbell_prime,
                    plane_trees, pull, push)

PULL_RULES = ("q137", "q8", "e", "o1")
PUSH_RULES = ("q24", "q5", "o2", "D")


@dataclass(frozen=True)
class Arc:
    pair: GluingPair
    direction: str  # "pull": T = [x]; "push": T = [y]
    rule: str
    centroid: int
    subtree_index: int
    leaf: int


@dataclass(frozen=True)
class Selection:
    """Outcome of the centroid, ordering and subtree steps."""

    centroid: int
    order: tuple[int, ...]  # neighbours of the centroid, in subtree order
    subtrees: tuple[str, ...]
    index: int
    potential: int
    two_centroids: bool


def _subs(g: Graph, c: int, order) -> list[str]:
    return ["1" + g.hanging(b, c) + "0" for b in order]


def _waterfall(subs: list[str]) -> int:
    k = len(subs)
    q0, q1, q2, q4 = Q[0], Q[1], Q[2], Q[4]
    for i in range(k):
        if subs[i] == q1 and subs[i - 1] == q0:
            return i
    for i in range(k):
        if subs[i] in (q2, q4) and subs[(i + 1) % k] in (q0, q1, q2):
            return i
    for i in range(k):
        if subs[i] not in (q0, q1, q2, q4):
            return i
    for i in range(k):
        if subs[i] != q0:
            return i
    raise IsStar("all subtrees are single edges")


def select(T: PlaneTree) -> Selection:
    g = T.graph
    cents, phi = g.centroids()
    if len(cents) == 2:
        c, d = cents
        oc, od = g.after(c, d), g.after(d, c)
        sc, sd = _subs(g, c, oc), _subs(g, d, od)
        busy_c = any(t != Q[0] for t in sc)
        busy_d = any(t != Q[0] for t in sd)
        if busy_d and (not busy_c or "".join(sd) < "".join(sc)):
            c, oc, sc = d, od, sd
        idx = next((i for i, t in enumerate(sc) if t != Q[0]), None)
        if idx is None:
            raise PreconditionViolated("dumbbells are handled by rule (D)")
        return Selection(c, tuple(oc), tuple(sc), idx, phi, True)
    c = cents[0]
    nb = g.nbrs[c]
    subs = _subs(g, c, nb)
    z: list[int] = []
    for t in subs:
        z.append(-1)
        z.extend(int(b) for b in t)
    k = least_rotation(z)
    first = z[:k].count(-1)
    order = nb[first:] + nb[:first]
    subs = subs[first:] + subs[:first]
    return Selection(c, tuple(order), tuple(subs), _waterfall(subs), phi, False)


def spire(t: str) -> tuple[int, int] | None:
    """(j, l) if t = 1^l q_j 0^l for j in {1,...,5,7,8}."""
    for j in (1, 2, 3, 4, 5, 7, 8):
        q = Q[j]
        l2 = len(t) - len(q)
        if l2 >= 0 and l2 % 2 == 0:
            l = l2 // 2
            if t == "1" * l + q + "0" * l:
                return j, l
    return None


def _descend(g: Graph, c: int, b: int, pick: int, steps: int | None = None) -> list[int]:
    """Path c, b, ... following the first (pick=0) or last (pick=-1) child."""
    path = [c, b]
    while g.degree(path[-1]) > 1 and (steps is None or len(path) - 1 < steps):
        path.append(g.after(path[-1], path[-2])[pick])
    return path


def _is_star(g: Graph) -> bool:
    return any(g.degree(v) == g.order - 1 for v in range(g.order))


def arc_of(T: PlaneTree) -> Arc:
    n = T.n
    if n < 4:
        raise SmallN("the spanning tree is defined for n >= 4")
    g = T.graph
    if _is_star(g):
        raise IsStar(str(T))
    if n % 2 == 1 and T == canon_plane(dumbbell(n)):
        y = dumbbell_prime(n)
        cents, _ = g.centroids()
        for c, d in (cents, cents[::-1]):
            path = _descend(g, c, d, -1)
            if g.rooted(path[-2], path[-1]) == y:
                return Arc(GluingPair(push(y), y), "push", "D", c, g.nbrs[c].index(d), path[-1])
        raise AssertionError("dumbbell leaf not found")
    sel = select(T)
    c, i = sel.centroid, sel.index
    b, t = sel.order[i], sel.subtrees[i]
    sp = spire(t)
    if sp is not None and sp[0] in (1, 3, 7):
        rule, path = "q137", _descend(g, c, b, 0)
    elif sp is not None and sp[0] in (2, 4):
        rule, path = "q24", _descend(g, c, b, -1)
    elif sp is not None and sp[0] == 5:
        mid = _descend(g, c, b, 0, steps=sp[1] + 2)
        rule, path = "q5", mid + [g.after(mid[-1], mid[-2])[-1]]
    elif sp is not None and sp[0] == 8:
        rule, path = "q8", _descend(g, c, b, -1)
    elif sel.potential % 2 == 0:
        rule, path = "e", _descend(g, c, b, 0)
    else:
        path = _descend(g, c, b, -1)
        rule = "o1" if g.degree(path[-2]) <= 2 else "o2"
    a, a1, a2 = path[-1], path[-2], path[-3]
    if rule in PULL_RULES:
        x = g.rooted(a2, a1)
        return Arc(GluingPair(x, pull(x)), "pull", rule, c, i, a)
    y = g.rooted(a1, a)
    return Arc(GluingPair(push(y), y), "push", rule, c, i, a)


def owner(arc: Arc) -> str:
    """The rooted tree of the pair whose class produced the arc."""
    return arc.pair.x if arc.direction == "pull" else arc.pair.y


def build_tree(n: int) -> set[Arc]:
    if n > max_n():
        raise BoundExceeded(f"n={n} exceeds the enumeration bound {max_n()}")
    return {arc_of(T) for T in plane_trees(n) if not _is_star(T.graph)}


def in_tree(x: str, y: str) -> bool:
    """Whether the gluing pair (x, y) labels an arc of the spanning tree."""
    for w in (x, y):
        T = canon_plane(w)
        if _is_star(T.graph):
            continue
        if arc_of(T).pair == GluingPair(x, y):
            return True
    return False


def circular_property(T: PlaneTree) -> bool:
    sel = select(T)
    if sel.two_centroids:
        raise ValueError("defined for trees with a unique centroid")
    subs, i, k = sel.subtrees, sel.index, len(sel.subtrees)
    t = subs[i]
    if t == Q[1]:
        return subs[i - 1] == Q[0] or all(s == Q[1] for s in subs)
    if t in (Q[2], Q[4]):
        return subs[(i + 1) % k] in Q[:3] or all(s == Q[4] for s in subs)
    return True


def tree_to_dot(n: int) -> str:
    arcs = sorted(build_tree(n), key=lambda a: a.pair.x)
    lines = [f"digraph T{n} {{", "  rankdir=BT;"]
    levels: dict[int, list[str]] = {}
    for T in plane_trees(n):
        levels.setdefault(T.graph.centroids()[1], []).append(T.canon)
    for phi in sorted(levels):
        names = " ".join(f'"{w}"' for w in levels[phi])
        lines.append(f"  {{ rank=same; {names} }}  // potential {phi}")
    for a in arcs:
        u, v = canon_plane(a.pair.x).canon, canon_plane(a.pair.y).canon
        lines.append(f'  "{u}" -> "{v}" [label="{a.pair.x},{a.pair.y} ({a.rule})"];')
    lines.append("}")
    return "\n".join(lines)
