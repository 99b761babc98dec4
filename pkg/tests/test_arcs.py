import networkx as nx
import numpy as np
import pytest

from middlelevels import _kernel as K
from middlelevels.arcs import arc_of, build_tree, circular_property, in_tree, select, tree_to_dot
from middlelevels.errors import IsStar, SmallN
from middlelevels.trees import (Q, canon_plane, dumbbell, dumbbell_prime, plane_trees, push,
                                rho, rho_pow, star)
from middlelevels import oracle


def test_dumbbell_rule():
    a = arc_of(canon_plane(dumbbell(5)))
    assert a.rule == "D"
    assert a.pair.y == dumbbell_prime(5) and a.pair.x == push(dumbbell_prime(5))


def test_path_rule():
    a = arc_of(canon_plane("11110000"))
    assert a.rule == "q137"
    assert (a.pair.x, a.pair.y) == ("11001100", "10101100")


def test_star_and_small():
    with pytest.raises(IsStar):
        arc_of(canon_plane(star(5)))
    with pytest.raises(SmallN):
        arc_of(canon_plane("111000"))


@pytest.mark.parametrize("n", range(4, 9))
def test_spanning_tree(n):
    classes = plane_trees(n)
    arcs = build_tree(n)
    assert len(arcs) == len(classes) - 1
    g = nx.Graph()
    g.add_nodes_from(T.canon for T in classes)
    for a in arcs:
        tx, ty = canon_plane(a.pair.x), canon_plane(a.pair.y)
        assert tx != ty
        g.add_edge(tx.canon, ty.canon)
        px = min(oracle.brute_potentials(a.pair.x))
        py = min(oracle.brute_potentials(a.pair.y))
        assert abs(px - py) == 1
        assert in_tree(a.pair.x, a.pair.y)
    assert nx.is_tree(g)


@pytest.mark.parametrize("n", range(4, 9))
def test_nesting_and_interleaving_free(n):
    """Nested needs xh = rho^-1(y), interleaved needs xh = rho^2(x), at offsets -1 and 2."""
    xs = {a.pair.x for a in build_tree(n)}
    for a in build_tree(n):
        assert rho_pow(a.pair.y, -1) not in xs
        assert rho_pow(a.pair.x, 2) not in xs


@pytest.mark.parametrize("n", [4, 5])
def test_nesting_free_by_direct_edges(n):
    arcs = sorted(build_tree(n), key=lambda a: a.pair.x)
    m = 2 * n + 1
    for a in arcs:
        for b in arcs:
            if a == b:
                continue
            for i in range(m):
                assert oracle.direct_relation(a.pair.x, b.pair.x, i, 0) == "Compatible"


def test_arc_counts():
    assert [len(build_tree(n)) for n in range(4, 9)] == [2, 5, 13, 33, 94]


def test_circular_property():
    for n in range(4, 9):
        for T in plane_trees(n):
            if T in (canon_plane(star(n)), canon_plane(dumbbell(n))) or select(T).two_centroids:
                continue
            assert circular_property(T)


def test_pull_potential_lemma():
    """Centroid on the v side survives the pull and potential drops by one, and vice versa."""
    for n in range(4, 8):
        from middlelevels.trees import rooted_trees, is_pullable, pull, split
        for x in rooted_trees(n):
            if not is_pullable(x):
                continue
            y = pull(x)
            u = split(x)[0][2:]
            left = {1} | set(range(3, 3 + len(u) // 2))
            swap = {1: 2, 2: 1}
            px, py = oracle.brute_potentials(x), oracle.brute_potentials(y)
            cx, cy = oracle.brute_centroids(x), oracle.brute_centroids(y)
            if any(c not in left and c != 2 for c in cx):
                c = next(c for c in cx if c not in left and c != 2)
                assert swap.get(c, c) in cy and min(py) == min(px) - 1
            left_y = {swap.get(v, v) for v in left}
            if any(c in left_y for c in cy):
                c = next(c for c in cy if c in left_y)
                assert swap.get(c, c) in cx and min(py) == min(px) + 1


def test_kernel_agrees_with_reference():
    codes = {"D": K.RULE_D, "q137": K.RULE_Q137, "q24": K.RULE_Q24, "q5": K.RULE_Q5,
             "q8": K.RULE_Q8, "e": K.RULE_E, "o1": K.RULE_O1, "o2": K.RULE_O2}
    for n in range(4, 9):
        ws = K.workspace(n)
        for T in plane_trees(n):
            t = T.canon
            is_star = T == canon_plane(star(n))
            ref = None if is_star else arc_of(T)
            for _ in range(T.lam):
                ws[K.R, :2 * n] = np.frombuffer(t.encode(), dtype=np.uint8) - 48
                code = K.arc_x(ws, K.R, n)
                if is_star:
                    assert code == K.RULE_NONE
                else:
                    x = "".join(map(str, ws[K.XOUT, :2 * n]))
                    assert (code, x) == (codes[ref.rule], ref.pair.x)
                t = rho(t)


def test_dot():
    assert tree_to_dot(4).startswith("digraph T4")
