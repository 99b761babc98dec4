import itertools
import random
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from middlelevels import engine as E, oracle
from middlelevels.errors import BadStart, NotCoprime
from middlelevels.switching import SwitchPlan, make_switch

CATALAN_MOD = [1, 2, 5, 5, 9, 2, 9, 2, 17, 17, 21, 12, 22, 2, 29]


def test_catalan_mod():
    assert [E.catalan_mod(n) for n in range(1, 16)] == CATALAN_MOD
    assert E.catalan_mod(16) == 18


def test_catalan_mod_prime_moduli():
    for n in range(1, 80):
        m = 2 * n + 1
        if all(m % p for p in range(2, int(m ** 0.5) + 1)):
            assert E.catalan_mod(n) == 2 * (-1) ** n % m


def test_init_examples():
    s16 = E.init(16, 1)
    assert s16.plan.describe() == "s=18, plan=[tau_ndz d=11], s'=7"
    assert s16.scale == 19
    s5 = E.init(5, 3)
    assert s5.plan.switches == () and s5.scale == pow(9, -1, 11) * 3 % 11
    with pytest.raises(NotCoprime):
        E.init(4, 3)
    with pytest.raises(BadStart):
        E.init(3, 1, "11111000")
    with pytest.raises(BadStart):
        E.init(3, 1, "1111000")


def test_first_emissions():
    st_ = E.init(6, 1)
    a = E.next(st_)
    b = E.next(st_)
    assert a.combination == "1" * 7 + "0" * 7
    diff = [i for i in range(14) if a.combination[i] != b.combination[i]]
    assert diff == [0, a.flip_position]
    assert a.combination[0] != b.combination[0]


def test_state_invariants_along_walk():
    from middlelevels.bits import ell, tree_of, in_a
    s = E.init(7, 1)
    for _ in range(3000):
        x = s.x
        assert s.ell == ell(x)
        assert "".join(map(str, s.ws[0 + 19, :14])) == tree_of(x)  # workspace row R
        assert in_a(x) == bool(s.st[1])
        assert x.count("1") + s.parity == 8
        E.flips(s, 1)


def _full(n, shift, start=None):
    s = E.init(n, shift, start)
    fl = E.flips(s, E.count(n))
    first = start or "1" * (n + 1) + "0" * (n + 1)
    return oracle.combos_from_flips(first, fl), fl, s


@pytest.mark.parametrize("n", range(1, 9))
def test_full_cycles_all_shifts(n):
    m = 2 * n + 1
    for s in range(1, m):
        if gcd(s, m) == 1:
            combos, _, state = _full(n, s)
            rep = oracle.verify_ordering(combos, n, s)
            assert rep.ok, (n, s, rep)
            assert state.comb.decode() == "1" * (n + 1) + "0" * (n + 1)


@pytest.mark.parametrize("n", range(1, 6))
def test_every_start(n):
    rng = random.Random(n)
    m = 2 * n + 1
    shifts = [s for s in range(1, m) if gcd(s, m) == 1]
    for ones in itertools.combinations(range(2 * n + 2), n + 1):
        start = "".join("1" if i in ones else "0" for i in range(2 * n + 2))
        s = rng.choice(shifts)
        combos, _, _ = _full(n, s, start)
        assert oracle.verify_ordering(combos, n, s).ok, (start, s)


@settings(max_examples=15, deadline=None)
@given(st.integers(6, 8), st.data())
def test_random_starts(n, data):
    m = 2 * n + 1
    s = data.draw(st.sampled_from([s for s in range(1, m) if gcd(s, m) == 1]))
    bits = data.draw(st.permutations(["1"] * (n + 1) + ["0"] * (n + 1)))
    start = "".join(bits)
    combos, _, _ = _full(n, s, start)
    assert combos[0] == int(start[::-1], 2)
    assert oracle.verify_ordering(combos, n, s).ok


def test_block_symmetry_and_realized_shift():
    for n in (4, 7, 9):
        _, fl, state = _full(n, 1)
        B = E.block_length(n)
        m = 2 * n + 1
        for b in range(1, m):
            assert list(fl[b * B:(b + 1) * B]) == [(p + b - 1) % m + 1 for p in fl[:B]]
        assert E.realized_shift(n) == state.plan.s_after


@pytest.mark.parametrize("n,kinds", [(8, [("tau1", 1), ("tau2", 2)]), (11, [("tau1", 1)]),
                                     (12, [("tau_ndz", 5)])])
def test_forced_switch_plans(n, kinds):
    m = 2 * n + 1
    s = E.catalan_mod(n)
    sws = tuple(make_switch(n, k, d) for k, d in kinds)
    after = (s + sum(w.effective_shift for w in sws)) % m
    assert gcd(after, m) == 1
    state = E.init(n, 1, plan=SwitchPlan(n, s, after, sws))
    stream = oracle.BlockStream(state.comb.decode()[1:], m, E.block_length(n))
    seen_switch = False
    left = E.block_length(n)
    while left:
        k = min(left, 1 << 18)
        stream.feed(E.flips(state, k))
        left -= k
    assert stream.finish(1) == (True, True)
    # the switch fires somewhere along the cycle
    state = E.init(n, 1, plan=SwitchPlan(n, s, after, sws))
    for _ in range(E.block_length(n)):
        if isinstance(E.classify_step(state), E.SwitchFlip):
            seen_switch = True
            break
        E.flips(state, 1)
    assert seen_switch


def test_classify_step_kinds():
    state = E.init(7, 1)
    kinds = set()
    for _ in range(E.block_length(7)):
        k = E.classify_step(state)
        before = state.x
        p = E.flips(state, 1)[0]
        kinds.add(type(k).__name__ + (str(k.k) if isinstance(k, E.GlueEdge) else ""))
        if isinstance(k, E.FStep):
            from middlelevels.factor import f
            assert f(before) == state.x
        elif isinstance(k, E.FInvStep):
            from middlelevels.factor import f_inv
            assert f_inv(before) == state.x
    assert {"FStep", "FInvStep", "GlueEdge1", "GlueEdge2", "GlueEdge3", "SwitchFlip"} <= kinds


def test_glue_entry_at_x0():
    from middlelevels.arcs import build_tree
    from middlelevels.bits import ell, rotate
    a = sorted(build_tree(6), key=lambda a: a.pair.x)[0]
    x0 = a.pair.x + "0"
    # place the walk at x0 heading forward; the next step is the glue edge (y1, x0)
    st_ = E.init(6, 1)
    while st_.x != x0:
        E.flips(st_, 1)
    if st_.direction == "Forward":
        assert E.classify_step(st_) == E.GlueEdge(3)


def test_small_cases_use_fixed_blocks():
    s = E.init(3, 1)
    fl = E.flips(s, 10)
    assert tuple(fl) == (6, 2, 5, 3, 4, 6, 2, 1, 3, 5)
    s = E.init(2, 1)
    assert tuple(E.flips(s, 4)) == (5, 1, 3, 5)
    s = E.init(1, 1)
    assert tuple(E.flips(s, 2)) == (2, 1)


def test_generate_and_memory():
    em = list(E.generate(4, 1, limit=5))
    assert len(em) == 5 and em[0].combination == "1111100000"
    for n in (100, 1000):
        assert E.init(n, 1).nbytes() < 1024 * n
