import pytest

from middlelevels import oracle
from middlelevels.arcs import build_tree
from middlelevels.errors import NotPeriodic, PreconditionViolated, PrefixMismatch, WeightViolation
from middlelevels.factor import periodic_path
from middlelevels.flipseq import (GluingPair, Relation, ShiftedFlip, classify_relation, glue,
                                  gluing_cycle, mov, rev, shift_of, translate, walk)
from middlelevels.trees import canon_plane, plane_trees, pull, rho_pow, rooted_trees, is_pullable

ALPHA = (2, 1, 7, 2)


def test_shift_examples():
    assert shift_of(ALPHA, "1010100").shift == 2
    assert shift_of((6, 2, 5, 3, 4, 6, 2, 1, 3, 5), "1110000").shift == 1
    with pytest.raises(NotPeriodic):
        shift_of((2,), "1010100")
    with pytest.raises(WeightViolation):
        walk("1010100", (2, 4))


def test_rev_mov_translate():
    sf = shift_of(ALPHA, "1010100")
    r = rev(sf)
    assert r.flips == (7, 5, 6, 7) and r.shift == (-2) % 7
    assert r.path() == ["1010100", "1010101", "1010001", "1010011"]
    mv = mov(sf)
    assert mv.flips == (1, 7, 2, 4) and mv.shift == 2
    t = translate(sf, 1)
    assert t.flips == (3, 2, 1, 3) and t.shift == 2
    assert shift_of(t.flips, t.start).shift == 2
    assert shift_of(mv.flips, mv.start).shift == 2


def test_gluing_cycle_example():
    C = gluing_cycle(GluingPair("110010", "101010"))
    assert C.vertices == ("1100100", "1101100", "1001100", "1011100", "1010100", "1110100")
    assert C.flips == (4, 2, 3, 4, 2, 3)
    # the flips close the 6-cycle
    assert walk(C.vertices[0], C.flips)[-1] == C.vertices[0]


def test_gluing_cycle_f_edges_and_lengths():
    for n in range(4, 8):
        for x in rooted_trees(n):
            if not is_pullable(x):
                continue
            cv = oracle.cycle_vertices(x)
            assert oracle.brute_kappa(cv["x0"]) >= 8
            assert oracle.brute_kappa(cv["y0"]) >= 4
            C = gluing_cycle(GluingPair.from_x(x))
            x0, x1, x6, x5, y0, y1 = C.vertices
            assert (x0, x1, x5, x6, y0, y1) == tuple(cv[k] for k in ("x0", "x1", "x5", "x6", "y0", "y1"))


def test_glue_adds_shifts_and_merges_necklaces():
    for n in (4, 5):
        for a in build_tree(n):
            pair = a.pair
            sf1 = shift_of(periodic_path(pair.x + "0").flips, pair.x + "0")
            sf2 = shift_of(periodic_path(pair.y + "0").flips, pair.y + "0")
            g = glue(sf1, sf2, pair)
            m = 2 * n + 1
            assert g.shift == (sf1.shift + sf2.shift) % m
            assert shift_of(g.flips, g.start).shift == g.shift
            necks = sorted(oracle.necklace(v) for v in g.path())
            both = sorted(oracle.necklace(v) for v in sf1.path() + sf2.path())
            assert necks == both


def test_glue_preconditions():
    pair = GluingPair("110010", "101010")
    sf = shift_of(ALPHA, "1010100")
    with pytest.raises(PrefixMismatch):
        glue(sf, sf, pair)


def test_classify_examples():
    pairs = _pairs(5)
    by_x = {q.x: q for q in pairs}

    def distinct(p, q):
        return {canon_plane(p.x), canon_plane(p.y)} != {canon_plane(q.x), canon_plane(q.y)}

    nested = [(p, by_x[rho_pow(p.y, -1)]) for p in pairs
              if rho_pow(p.y, -1) in by_x and distinct(p, by_x[rho_pow(p.y, -1)])]
    inter = [(p, by_x[rho_pow(p.x, 2)]) for p in pairs
             if rho_pow(p.x, 2) in by_x and distinct(p, by_x[rho_pow(p.x, 2)])]
    assert nested and inter
    p, q = nested[0]
    assert classify_relation(p, q, 0, 1) is Relation.NESTED
    p, q = inter[0]
    assert classify_relation(p, q, 2, 0) is Relation.INTERLEAVED
    p, q = nested[0]
    assert classify_relation(p, q, 0, 0) is Relation.COMPATIBLE
    with pytest.raises(PreconditionViolated):
        classify_relation(p, p, 0, 0)


def _pairs(n):
    out = []
    for x in rooted_trees(n):
        if is_pullable(x) and canon_plane(x) != canon_plane(pull(x)):
            out.append(GluingPair.from_x(x))
    return out


@pytest.mark.parametrize("n", [4, 5])
def test_relation_classifier_matches_direct_edges(n):
    """Classifier against membership of the f-edges in the reversed paths."""
    m = 2 * n + 1
    pairs = _pairs(n)
    for p in pairs:
        for q in pairs:
            if {canon_plane(p.x), canon_plane(p.y)} == {canon_plane(q.x), canon_plane(q.y)}:
                continue
            for i in range(m):
                got = classify_relation(p, q, i, 0).value
                assert got == oracle.direct_relation(p.x, q.x, i, 0), (p, q, i)
