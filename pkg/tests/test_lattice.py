from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

import orthocompact.lattice as L
from orthocompact.errors import NotDominant, RankError
from oracles import (alpha_of_eps, brute_dominant_below, brute_positive_roots,
                     eps_of_alpha, eps_of_omega)

c3 = L.RankedContext(3)


def weights(r, top=3):
    return st.tuples(*[st.integers(0, top)] * r)


def test_rank_bounds():
    with pytest.raises(RankError):
        L.RankedContext(1)
    with pytest.raises(RankError):
        L.RankedContext(17)
    with pytest.raises(RankError):
        c3.weight((1, 0))


def test_pairing_short_end():
    A = c3.pairing
    assert A[1][2] == -2 and A[2][1] == -1
    assert [A[i][i] for i in range(3)] == [2, 2, 2]


def test_omega_to_alpha_examples():
    assert L.omega_to_alpha(c3, (1, 0, 0)).coeffs == (1, 1, 1)
    assert L.omega_to_alpha(c3, (0, 0, 1)).coeffs == (Fraction(1, 2), 1, Fraction(3, 2))
    assert str(L.omega_to_alpha(c3, (0, 0, 1))) == "a:[1/2,1,3/2]"
    assert L.alpha_to_weight(c3, (0, 1, 1)) == (-1, 1, 0)
    assert L.alpha_to_weight(c3, (1, 2, 2)) == (0, 1, 0)


@pytest.mark.parametrize("r", [2, 3, 4, 5])
def test_coordinates_against_epsilon_model(r):
    ctx = L.RankedContext(r)
    for i in range(1, r + 1):
        w = ctx.omega(i)
        assert list(L.omega_to_alpha(ctx, w).coeffs) == alpha_of_eps(eps_of_omega(r, w))


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 5).flatmap(lambda r: st.tuples(st.just(r), weights(r, 4))))
def test_round_trip(rw):
    r, w = rw
    ctx = L.RankedContext(r)
    v = L.omega_to_alpha(ctx, w)
    assert L.alpha_to_omega(ctx, v) == w
    assert eps_of_alpha(r, v.coeffs) == eps_of_omega(r, w)


@pytest.mark.parametrize("r", [2, 3, 4, 5, 6])
def test_positive_roots_brute_force(r):
    ctx = L.RankedContext(r)
    roots = L.positive_roots(ctx)
    assert len(roots) == r * r
    assert {rt.vec: rt.length for rt in roots} == brute_positive_roots(r)
    assert [L.root_sort_key(rt.vec) for rt in roots] == sorted(L.root_sort_key(rt.vec) for rt in roots)


def test_root_table_r3():
    vecs = [rt.vec for rt in L.positive_roots(c3)]
    assert vecs[:3] == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]
    assert vecs[-1] == (1, 2, 2)
    assert sum(rt.is_short for rt in L.positive_roots(c3)) == 3


def test_dominant_below_examples():
    assert L.dominant_below(c3, (0, 1, 0)) == [(0, 1, 0), (1, 0, 0), (0, 0, 0)]
    assert L.dominant_below(c3, (0, 0, 1)) == [(0, 0, 1)]
    with pytest.raises(NotDominant):
        L.dominant_below(c3, (1, -1, 0))


@pytest.mark.parametrize("r,top", [(2, 3), (3, 2), (4, 1)])
def test_dominant_below_brute_force(r, top):
    import itertools
    ctx = L.RankedContext(r)
    for lam in itertools.product(range(top + 1), repeat=r):
        got = L.dominant_below(ctx, lam)
        assert got[0] == lam
        assert set(got) == brute_dominant_below(r, lam)


def test_dominance_examples():
    assert L.dominance_leq(c3, (1, 0, 0), (0, 1, 0))
    assert not L.dominance_leq(c3, (0, 1, 0), (1, 0, 0))
    assert not L.dominance_leq(c3, (1, 0, 0), (0, 0, 1))
    # omega_3 - 0 = (1/2, 1, 3/2): non-negative but not in the root lattice
    assert L.rational_dominance_leq(c3, (0, 0, 0), (0, 0, 1))
    assert not L.dominance_leq(c3, (0, 0, 0), (0, 0, 1))


@settings(max_examples=80, deadline=None)
@given(weights(3), weights(3), weights(3))
def test_dominance_is_partial_order(a, b, c):
    leq = lambda x, y: L.dominance_leq(c3, x, y)  # noqa: E731
    assert leq(a, a)
    if leq(a, b) and leq(b, a):
        assert a == b
    if leq(a, b) and leq(b, c):
        assert leq(a, c)


def test_phi_plus_of_omega1():
    roots = L.phi_plus_of(c3, (1, 0, 0))
    assert [rt.vec for rt in roots] == [(1, 0, 0), (1, 1, 0), (1, 1, 1), (1, 1, 2), (1, 2, 2)]
    assert [rt.vec for rt in L.phi_plus_of(c3, (1, 0, 0), "short")] == [(1, 1, 1)]


def test_regular_weight_sees_all_roots():
    assert len(L.phi_plus_of(c3, (1, 1, 1))) == 9
    assert L.phi_plus_of(c3, (0, 0, 0)) == []
