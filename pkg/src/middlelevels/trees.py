"""Rooted trees as Dyck words, plane trees as their rotation classes."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .bits import is_dyck, least_rotation
from .errors import EmptyTree, ForbiddenPair, NotALeaf, NotPullable, NotPushable


def match(w: str, i: int) -> int:
    """Index of the 0 matching the 1 at index i."""
    depth = 0
    for j in range(i, len(w)):
        depth += 1 if w[j] == "1" else -1
        if depth == 0:
            return j
    raise ValueError(f"unbalanced word {w!r}")


def split(t: str) -> tuple[str, str]:
    """Decompose t = 1u0v and return (u, v)."""
    if not t:
        raise EmptyTree("the empty tree has no decomposition")
    j = match(t, 0)
    return t[1:j], t[j + 1 :]


def rho(t: str) -> str:
    u, v = split(t)
    return u + "1" + v + "0"


def rho_inv(t: str) -> str:
    if not t:
        raise EmptyTree("cannot rotate the empty tree")
    # t = u1v0; the final 0 closes the 1 between u and v
    depth = 0
    for i in range(len(t) - 1, -1, -1):
        depth += 1 if t[i] == "0" else -1
        if depth == 0:
            return "1" + t[:i] + "0" + t[i + 1 : -1]
    raise ValueError(f"not a Dyck word: {t!r}")


def rho_pow(t: str, k: int) -> str:
    for _ in range(abs(k)):
        t = rho(t) if k > 0 else rho_inv(t)
    return t


# -- special trees ----------------------------------------------------------

Q = ("10", "1100", "110100", "11100100", "11010100", "1110100100",
     "1110010100", "1110011000", "1101011000", "1101010100")


def star(n: int) -> str:
    """s_n: the star rooted at a leaf."""
    return "1" + "10" * (n - 1) + "0"


def star_prime(n: int) -> str:
    return "10" + star(n - 1)


def dumbbell(n: int) -> str:
    h = (n - 1) // 2
    return "1" + "10" * h + "0" + "10" * h


def dumbbell_prime(n: int) -> str:
    h = (n - 1) // 2
    return "101" + "10" * h + "0" + "10" * (h - 1)


# -- pull / push --------------------------------------------------------------

def is_pullable(x: str) -> bool:
    return x.startswith("110") and x != star(len(x) // 2)


def is_pushable(y: str) -> bool:
    return y.startswith("101") and y != star_prime(len(y) // 2)


def pull(x: str) -> str:
    """110u0v -> 101u0v."""
    if not x.startswith("110"):
        raise NotPullable(x)
    if len(x) >= 8 and x == star(len(x) // 2):
        raise ForbiddenPair(x)
    head, v = split(x)
    return "101" + head[2:] + "0" + v


def push(y: str) -> str:
    """101u0v -> 110u0v."""
    if not y.startswith("101"):
        raise NotPushable(y)
    if len(y) >= 8 and y == star_prime(len(y) // 2):
        raise ForbiddenPair(y)
    u, v = split(y[2:])
    return "110" + u + "0" + v


# -- plane trees --------------------------------------------------------------

class Graph:
    """Vertices of a Dyck word in preorder with ccw neighbour lists.

    The cyclic order at a vertex lists its children left to right followed by
    its parent, so rerooting at an edge reproduces the rotations rho^i.
    """

    def __init__(self, word: str):
        self.word = word
        nbrs: list[list[int]] = [[]]
        parent = [-1]
        stack = [0]
        for b in word:
            if b == "1":
                v = len(nbrs)
                nbrs.append([])
                parent.append(stack[-1])
                nbrs[stack[-1]].append(v)
                stack.append(v)
            else:
                stack.pop()
        for v in range(1, len(nbrs)):
            nbrs[v].append(parent[v])
        self.nbrs = nbrs
        self.parent = parent

    @property
    def order(self) -> int:
        return len(self.nbrs)

    def degree(self, v: int) -> int:
        return len(self.nbrs[v])

    def after(self, v: int, p: int) -> list[int]:
        """Neighbours of v in ccw order starting right after p."""
        nb = self.nbrs[v]
        i = nb.index(p)
        return nb[i + 1 :] + nb[:i]

    def starting_at(self, v: int, b: int) -> list[int]:
        nb = self.nbrs[v]
        i = nb.index(b)
        return nb[i:] + nb[:i]

    def hanging(self, b: int, p: int) -> str:
        """Dyck word of the subtree at b away from p, i.e. T^{(p,b)--}."""
        out = []
        stack = [(b, iter(self.after(b, p)))]
        while stack:
            v, it = stack[-1]
            w = next(it, None)
            if w is None:
                stack.pop()
                if stack:
                    out.append("0")
                continue
            out.append("1")
            stack.append((w, iter(self.after(w, v))))
        return "".join(out)

    def rooted(self, a: int, b: int) -> str:
        """T^{(a,b)}: root a with b as leftmost child."""
        return "".join("1" + self.hanging(w, a) + "0" for w in self.starting_at(a, b))

    def path(self, a: int, c: int) -> list[int]:
        """Vertices p^0(a,c) = a, ..., c."""
        prev = {c: -1}
        todo = [c]
        while todo:
            v = todo.pop()
            for w in self.nbrs[v]:
                if w not in prev:
                    prev[w] = v
                    todo.append(w)
        out = [a]
        while out[-1] != c:
            out.append(prev[out[-1]])
        return out

    def sizes(self) -> list[int]:
        """Vertex counts of the subtrees below each vertex (rooted at 0)."""
        size = [1] * self.order
        for v in range(self.order - 1, 0, -1):
            size[self.parent[v]] += size[v]
        return size

    def potentials(self) -> list[int]:
        """phi(v) for all v by one rerooting pass."""
        size = self.sizes()
        total = self.order
        depth = [0] * total
        for v in range(1, total):
            depth[v] = depth[self.parent[v]] + 1
        phi = [0] * total
        phi[0] = sum(depth)
        for v in range(1, total):  # preorder: parents come first
            phi[v] = phi[self.parent[v]] + total - 2 * size[v]
        return phi

    def centroids(self) -> tuple[tuple[int, ...], int]:
        phi = self.potentials()
        best = min(phi)
        return tuple(v for v, p in enumerate(phi) if p == best), best


@dataclass(frozen=True)
class CentroidInfo:
    centroids: tuple[int, ...]
    potential: int


@dataclass(frozen=True)
class LeafInfo:
    thick: bool
    pullable_to: bool
    pushable_to: bool
    pullable_from: bool
    pushable_from: bool


def _cyclic_period(seq: list) -> int:
    """Smallest p dividing len(seq) with seq invariant under rotation by p."""
    m = len(seq)
    fail = [0] * (m + 1)
    fail[0] = -1
    k = -1
    for i in range(m):
        while k >= 0 and seq[k] != seq[i]:
            k = fail[k]
        k += 1
        fail[i + 1] = k
    p = m - fail[m]
    return p if m % p == 0 else m


def _encode(subtrees: list[str]) -> list[int]:
    z: list[int] = []
    for t in subtrees:
        z.append(-1)
        z.extend(int(b) for b in t)
    return z


def _central_form(t: str) -> tuple[str, int]:
    """Canonical word and period of [t], both via the centroid(s)."""
    if not t:
        raise EmptyTree("plane trees need at least one edge")
    g = Graph(t)
    cents, _ = g.centroids()
    n = len(t) // 2
    if len(cents) == 1:
        c = cents[0]
        subs = ["1" + g.hanging(b, c) + "0" for b in g.nbrs[c]]
        z = _encode(subs)
        k = least_rotation(z)
        z = z[k:] + z[:k]
        canon = "".join(str(b) for b in z if b >= 0)
        p = _cyclic_period(z)
        lam = sum(1 for b in z[:p] if b >= 0)
        return canon, lam
    c, d = cents
    canon = min(g.rooted(c, d), g.rooted(d, c))
    lam = n if g.hanging(c, d) == g.hanging(d, c) else 2 * n
    return canon, lam


def lambda_of(t: str) -> int:
    """Period of t under rho."""
    return _central_form(t)[1]


@dataclass(frozen=True)
class PlaneTree:
    """A rotation class [t], keyed by a centroid-rooted canonical word."""

    canon: str
    lam: int

    @property
    def n(self) -> int:
        return len(self.canon) // 2

    @cached_property
    def graph(self) -> Graph:
        return Graph(self.canon)

    def __str__(self) -> str:
        return f"[{self.canon}]"


def canon_plane(t: str) -> PlaneTree:
    canon, lam = _central_form(t)
    return PlaneTree(canon, lam)


def potential_and_centroids(T: PlaneTree) -> CentroidInfo:
    cents, phi = T.graph.centroids()
    return CentroidInfo(cents, phi)


def subtrees_at(T: PlaneTree, c: int, after: int | None = None) -> list[str]:
    """The c-subtrees in ccw order, from the first neighbour of c or after ``after``."""
    g = T.graph
    if not 0 <= c < g.order:
        raise IndexError(f"vertex {c} out of range")
    order = g.nbrs[c] if after is None else g.after(c, after) + [after]
    return ["1" + g.hanging(b, c) + "0" for b in order]


def classify_leaf(T: PlaneTree, a: int, c: int) -> LeafInfo:
    g = T.graph
    if g.degree(a) != 1:
        raise NotALeaf(f"vertex {a} has degree {g.degree(a)}")
    nb = g.nbrs[a][0]
    thick = g.degree(nb) > 2
    p = g.path(a, c)
    if len(p) == 1:
        raise ValueError("a and c must be distinct")
    if len(p) == 2:
        inner = g.degree(c) > 1
        return LeafInfo(thick, False, False, inner, inner)
    a1, a2 = p[1], p[2]
    cyc = g.nbrs[a1]
    i = cyc.index(a2)
    pull_to = cyc[(i + 1) % len(cyc)] == a
    push_to = cyc[(i - 1) % len(cyc)] == a
    return LeafInfo(thick, pull_to, push_to, not pull_to, not push_to)


def rooted_trees(n: int):
    """All Dyck words of length 2n in lexicographic order (descending bits)."""
    def rec(prefix: list[str], ones: int, zeros: int):
        if ones == n and zeros == n:
            yield "".join(prefix)
            return
        if ones < n:
            prefix.append("1")
            yield from rec(prefix, ones + 1, zeros)
            prefix.pop()
        if zeros < ones:
            prefix.append("0")
            yield from rec(prefix, ones, zeros + 1)
            prefix.pop()
    yield from rec([], 0, 0)


def plane_trees(n: int) -> list[PlaneTree]:
    """One PlaneTree per class of T_n, sorted by canonical word."""
    seen = {canon_plane(t) for t in rooted_trees(n)}
    return sorted(seen, key=lambda T: T.canon)


def to_dot(T: PlaneTree, name: str = "T") -> str:
    g = T.graph
    lines = [f"graph {name} {{", "  node [shape=point];"]
    for v in range(1, g.order):
        lines.append(f"  v{g.parent[v]} -- v{v};")
    lines.append("}")
    return "\n".join(lines)


__all__ = [
    "Q", "Graph", "PlaneTree", "CentroidInfo", "LeafInfo", "canon_plane",
    "classify_leaf", "dumbbell", "dumbbell_prime", "is_dyck", "is_pullable",
    "is_pushable", "lambda_of", "plane_trees", "potential_and_centroids",
    "pull", "push", "rho", "rho_inv", "rho_pow", "rooted_trees", "split",
    "star", "star_prime", "subtrees_at", "to_dot",
]
