import numpy as np
import pytest

from middlelevels import oracle
from middlelevels.oracle import expand, full_flips, verify_ordering

PAPER_N2 = [4, 1, 3, 4, 5, 2, 4, 5, 1, 3, 5, 1, 2, 4, 1, 2, 3, 5, 2, 3]
ALPHA3 = (6, 2, 5, 3, 4, 6, 2, 1, 3, 5)


def test_paper_n2_sequence():
    seq = expand("111000", PAPER_N2)
    assert verify_ordering(seq, 2, 1).ok


def test_alpha0_n3():
    seq = expand("11110000", full_flips(ALPHA3, 7, 1))
    assert verify_ordering(seq, 3, 1).ok


def test_swapped_alpha_detected():
    bad = list(ALPHA3)
    bad[0], bad[1] = bad[1], bad[0]
    rep = verify_ordering(expand("11110000", full_flips(bad, 7, 1)), 3, 1)
    assert not rep.ok
    assert rep.first_violation[1] in ("BlockSymmetryBroken", "NotStarTransposition", "Duplicate",
                                      "NecklaceRepeatInBlock")


def test_every_single_bit_corruption_caught():
    seq = expand("11110000", full_flips(ALPHA3, 7, 1))
    base = oracle.combos_from_flips("11110000", full_flips(ALPHA3, 7, 1))
    assert list(base) == [int(c[::-1], 2) for c in seq]
    for i in range(len(base)):
        for b in range(8):
            mutated = base.copy()
            mutated[i] ^= np.uint64(1 << b)
            assert not verify_ordering(mutated, 3, 1).ok


def test_reasons():
    seq = expand("11110000", full_flips(ALPHA3, 7, 1))
    assert verify_ordering(seq[:-1], 3, 1).first_violation == (69, "Missing")
    assert verify_ordering(seq + seq[:1], 3, 1).first_violation[1] == "Duplicate"
    dup = seq[:]
    dup[5] = dup[3]
    assert verify_ordering(dup, 3, 1).first_violation == (5, "Duplicate")
    assert verify_ordering(seq, 3, 2).first_violation[1] == "BlockSymmetryBroken"
    # a valid Hamilton path that is not closed
    rolled = seq[1:] + seq[:1]
    assert verify_ordering(rolled, 3, 1).ok
    # shift 1 blocks that are a valid cycle but repeat a necklace inside block 0
    assert "NecklaceRepeatInBlock" in oracle.REASONS and "NotCyclic" in oracle.REASONS


def _open_hamilton_path(n):
    """A star-transposition Hamilton path whose ends are not adjacent."""
    import itertools
    verts = ["".join("1" if i in c else "0" for i in range(2 * n + 2))
             for c in itertools.combinations(range(2 * n + 2), n + 1)]

    def nbrs(v):
        return [v[p] + v[1:p] + v[0] + v[p + 1:] for p in range(1, len(v)) if v[p] != v[0]]

    def dfs(path, seen):
        if len(path) == len(verts):
            return path if path[0] not in nbrs(path[-1]) else None
        for w in nbrs(path[-1]):
            if w not in seen:
                r = dfs(path + [w], seen | {w})
                if r:
                    return r
        return None

    return dfs([verts[0]], {verts[0]})


def test_not_cyclic():
    path = _open_hamilton_path(2)
    assert path is not None
    rep = verify_ordering(path, 2, 1)
    assert rep.first_violation == (len(path) - 1, "NotCyclic")


def test_exhaustive_hamilton():
    for n in (1, 2, 3):
        assert oracle.exhaustive_hamilton_check(n)
    assert oracle.exhaustive_hamilton_check(2, (4, 1, 3, 4))
    assert not oracle.exhaustive_hamilton_check(3, (2, 6, 5, 3, 4, 6, 2, 1, 3, 5))


def test_brute_values():
    assert oracle.brute_kappa("11000") == 4
    assert oracle.brute_lambda("11110000") == 4
    assert oracle.brute_centroids("111000") == {1, 2}
    assert oracle.brute_f("11000") == "11010"


def test_block_stream_small():
    from middlelevels import engine as E
    s = E.init(5, 2)
    bs = oracle.BlockStream(s.comb.decode()[1:], 11, E.block_length(5))
    bs.feed(E.flips(s, 40))
    bs.feed(E.flips(s, E.block_length(5) - 40))
    assert bs.finish(2) == (True, True)
    s = E.init(5, 2)
    bs = oracle.BlockStream(s.comb.decode()[1:], 11, E.block_length(5))
    bs.feed(E.flips(s, E.block_length(5)))
    assert bs.finish(3) == (True, False)
