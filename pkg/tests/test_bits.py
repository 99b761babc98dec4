import itertools

import pytest
from hypothesis import given, strategies as st

from middlelevels.bits import (Necklace, diff_position, ell, flip, in_a, is_dyck,
                               necklace_of, rotate, tree_of, weight_n)
from middlelevels.errors import InvalidWeight


@st.composite
def mid(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    k = draw(st.sampled_from([n, n + 1]))
    bits = ["1"] * k + ["0"] * (2 * n + 1 - k)
    return "".join(draw(st.permutations(bits)))


def all_mid(n):
    for bits in itertools.product("01", repeat=2 * n + 1):
        x = "".join(bits)
        if x.count("1") in (n, n + 1):
            yield x


def test_rotate_examples():
    assert rotate("1110000", 1) == "1100001"
    assert rotate("1110000", 0) == "1110000"


@given(mid(), st.integers(-20, 20))
def test_rotate_inverse(x, i):
    assert rotate(rotate(x, i), -i) == x


def test_weight():
    assert weight_n("11000") == 2
    assert weight_n("11100") == 2
    with pytest.raises(InvalidWeight):
        weight_n("11110")
    assert in_a("11000") and not in_a("11100")


def test_flip_and_diff():
    assert flip("11000", 5) == "11001"
    assert diff_position("11000", "11001") == 5


def test_necklace_examples():
    assert necklace_of("11000").canon == "00011"
    n3 = {necklace_of(x) for x in all_mid(3)}
    assert len(n3) == 10


@given(mid(), st.integers(0, 30))
def test_necklace_rotation_invariant(x, k):
    assert necklace_of(rotate(x, k)) == necklace_of(x)
    assert necklace_of(x).canon == min(rotate(x, i) for i in range(len(x)))


def test_every_string_has_m_rotations():
    for x in all_mid(4):
        assert len({rotate(x, i) for i in range(9)}) == 9


def test_ell_examples():
    assert ell("1110000") == 0
    assert ell("0000111") == 4
    assert ell("1110100") == 0 and tree_of("1110100") == "110100"
    assert tree_of("1110000") == "111000"


@given(mid(), st.integers(0, 30))
def test_ell_and_tree_under_rotation(x, k):
    m = len(x)
    assert tree_of(rotate(x, k)) == tree_of(x)
    assert ell(rotate(x, k)) == (ell(x) - k) % m
    z = rotate(x, ell(x))
    t = tree_of(x)
    assert z == (t + "0" if in_a(x) else "1" + t)
    assert is_dyck(t)


def test_is_dyck():
    assert is_dyck("")
    assert is_dyck("110100")
    assert not is_dyck("101")
    assert not is_dyck("0110")
    assert is_dyck([1, 0])


def test_necklace_type():
    nk = necklace_of("01100")
    assert isinstance(nk, Necklace) and nk.n == 2
