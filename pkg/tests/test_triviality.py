import itertools

import pytest
from hypothesis import given, settings, strategies as st

import orthocompact.lattice as L
from orthocompact import charring as C
from orthocompact import triviality as T
from orthocompact.errors import NotBelow, NotDominant, NotNonNegative

c3 = L.RankedContext(3)


def box(r, top):
    return itertools.product(range(top + 1), repeat=r)


def test_q_and_l():
    assert T.q_index(c3, (0, 1, 0)) == 2
    assert T.q_index(c3, (0, 0, 0)) == 0
    assert T.q_index(c3, (1, 0, 1)) == 3
    assert T.l_index(c3, (0, 1, 1)) == 2
    assert T.l_index(c3, (1, 1, 1)) == 1
    assert T.l_index(c3, (1, 2, 1)) == 3


def test_is_trivial_examples():
    assert T.is_trivial(c3, (0, 1, 0), (1, 0, 0)) is False
    assert T.is_trivial(c3, (2, 0, 0), (0, 1, 0)) is True
    assert T.is_trivial(c3, (1, 1, 0), (1, 1, 0)) is True
    tr = T.trivial_trace(c3, (0, 1, 0), (1, 0, 0))
    assert tr == {"trivial": False, "a": [0, 1, 1], "q_lambda": 2, "q_mu": 1}


def test_typed_errors():
    with pytest.raises(NotBelow):
        T.is_trivial(c3, (1, 0, 0), (0, 1, 0))
    with pytest.raises(NotBelow):  # spin coset
        T.is_trivial(c3, (1, 0, 0), (0, 0, 1))
    with pytest.raises(NotDominant):
        T.is_trivial(c3, (1, -1, 0), (0, 0, 0))
    with pytest.raises(NotNonNegative):
        T.sw_contains_criterion(c3, -1, (0, 0, 0))


def test_in_neg_omega_examples():
    assert T.in_neg_omega(c3, (1, 0, 0), (1, 1, 1)) is False
    assert T.in_neg_omega(c3, (1, 0, 0), (2, 2, 2)) is True
    assert T.in_neg_omega(c3, (1, 0, 0), (0, 0, 0)) is True


def test_star_and_little_brothers():
    assert T.satisfies_star(c3, (0, 0, 1))
    assert not T.satisfies_star(c3, (1, 0, 0))
    assert T.satisfies_star(c3, (1, 0, 1))
    assert T.little_brothers(c3, (0, 1, 0)) == {(1, 0, 0)}
    assert T.little_brothers(c3, (0, 0, 1)) == set()
    assert T.little_brothers(c3, (2, 0, 0)) == {(1, 0, 0)}
    assert T.little_brother(c3, (0, 0, 1)) is None


def test_schur_weyl_examples():
    for f in (T.sw_contains_criterion, T.sw_contains_partition):
        assert f(c3, 2, (0, 0, 0))
        assert not f(c3, 3, (0, 0, 0))
        assert f(c3, 3, (3, 0, 0))
    assert T.epsilon_coords(c3, 3, (1, 1, 0)) == (2, 1, 0)


@pytest.mark.parametrize("r,top", [(2, 3), (3, 3), (4, 2)])
def test_trivial_equals_neg_omega_of_difference(r, top):
    ctx = L.RankedContext(r)
    for lam in box(r, top):
        for mu in L.dominant_below(ctx, lam):
            theta = T.below_alpha(ctx, lam, mu)
            assert T.is_trivial(ctx, lam, mu) == T.in_neg_omega(ctx, lam, theta)


@pytest.mark.parametrize("r", [2, 3, 4])
def test_short_root_in_support_makes_everything_trivial(r):
    ctx = L.RankedContext(r)
    for lam in box(r, 2):
        if r in L.support(lam):
            assert all(T.is_trivial(ctx, lam, mu) for mu in L.dominant_below(ctx, lam))


@pytest.mark.parametrize("r", [2, 3, 4])
def test_neg_omega_depends_on_support_only(r):
    ctx = L.RankedContext(r)
    thetas = list(box(r, 3))
    for lam in box(r, 2):
        doubled = tuple(2 * x for x in lam)
        for th in thetas:
            assert T.in_neg_omega(ctx, lam, th) == T.in_neg_omega(ctx, doubled, th)


@pytest.mark.parametrize("r", [2, 3, 4])
def test_little_brothers_are_nontrivial(r):
    ctx = L.RankedContext(r)
    for lam in box(r, 3):
        for lb in T.little_brothers(ctx, lam):
            assert lb in L.dominant_below(ctx, lam)
            assert not T.is_trivial(ctx, lam, lb)
            a = T.below_alpha(ctx, lam, lb)
            assert a[-1] == 1 and T.l_index(ctx, a) == max(L.support(lam))


@pytest.mark.parametrize("r", [2, 3, 4])
def test_schur_weyl_two_routes_agree(r):
    ctx = L.RankedContext(r)
    for n in range(0, 9):
        top = tuple([n] + [0] * (r - 1))
        for mu in L.dominant_below(ctx, top):
            assert T.sw_contains_criterion(ctx, n, mu) == T.sw_contains_partition(ctx, n, mu)


def test_schur_weyl_r4_small_powers_against_oracle():
    ctx = L.RankedContext(4)
    for n in range(1, 5):
        got = C.tensor_power_constituents(ctx, ctx.omega(1), n)
        top = tuple([n, 0, 0, 0])
        want = {mu for mu in L.dominant_below(ctx, top) if T.sw_contains_criterion(ctx, n, mu)}
        assert got == want


@settings(max_examples=150, deadline=None)
@given(st.tuples(*[st.integers(0, 3)] * 3), st.tuples(*[st.integers(0, 3)] * 3),
       st.sampled_from([(1, 0, 0), (0, 1, 0), (1, 1, 0), (2, 1, 0)]))
def test_neg_omega_closed_under_addition(t1, t2, lam):
    if T.in_neg_omega(c3, lam, t1) and T.in_neg_omega(c3, lam, t2):
        assert T.in_neg_omega(c3, lam, tuple(x + y for x, y in zip(t1, t2)))
