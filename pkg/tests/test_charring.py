import itertools
import random

import pytest

import orthocompact.lattice as L
from orthocompact import charring as C
from orthocompact.errors import NotBelow, NotDominant
from oracles import peel_tensor

c2, c3 = L.RankedContext(2), L.RankedContext(3)


def test_dimensions():
    assert C.weyl_dim(c3, (1, 0, 0)) == 7
    assert C.weyl_dim(c3, (0, 0, 1)) == 8
    assert C.weyl_dim(c3, (0, 0, 0)) == 1
    assert C.weyl_dim(c3, (0, 1, 0)) == 21


def test_weight_multiplicities():
    m = C.weight_mults(c3, (0, 1, 0))
    assert m[(0, 0, 0)] == 3 and m[(0, 1, 0)] == 1
    m = C.weight_mults(c3, (1, 0, 0))
    assert len(m) == 7 and set(m.values()) == {1}


@pytest.mark.parametrize("r,top", [(2, 3), (3, 2)])
def test_freudenthal_totals_and_weyl_invariance(r, top):
    ctx = L.RankedContext(r)
    for lam in itertools.product(range(top + 1), repeat=r):
        m = C.weight_mults(ctx, lam)
        assert sum(m.values()) == C.weyl_dim(ctx, lam)
        assert m[lam] == 1
        for w, k in m.items():
            dom, _ = C.reflect_to_dominant(ctx, w)
            assert m[dom] == k


def test_tensor_examples():
    assert C.tensor(c3, (1, 0, 0), (1, 0, 0)) == {(2, 0, 0): 1, (0, 1, 0): 1, (0, 0, 0): 1}
    assert C.tensor(c3, (1, 0, 0), (0, 0, 1)) == {(1, 0, 1): 1, (0, 0, 1): 1}
    assert C.tensor(c3, (1, 1, 0), (0, 0, 0)) == {(1, 1, 0): 1}
    with pytest.raises(NotDominant):
        C.tensor(c3, (1, -1, 0), (0, 0, 0))


def test_tensor_against_character_peeling():
    rng = random.Random(11)
    for _ in range(25):
        ctx = rng.choice([c2, c3])
        lam = tuple(rng.randint(0, 2) for _ in range(ctx.r))
        mu = tuple(rng.randint(0, 2) for _ in range(ctx.r))
        assert C.tensor(ctx, lam, mu) == peel_tensor(ctx, lam, mu)


def test_contains_examples():
    assert C.contains(c3, (1, 0, 1), [(1, 0, 0), (0, 0, 1)])
    assert C.contains(c3, (1, 1, 0), [(1, 1, 0)])
    assert not C.contains(c3, (0, 0, 0), [(1, 0, 0)] * 3)


def test_pruned_search_matches_full_powers():
    for lam in [(1, 0, 0), (0, 1, 0), (2, 0, 0)]:
        for n in range(1, 4):
            full = C.tensor_power_constituents(c3, lam, n)
            for nu in L.dominant_below(c3, tuple(n * x for x in lam)):
                assert C.contains(c3, nu, [lam] * n) == (nu in full)


def test_oracle_trivial_examples():
    w = C.oracle_trivial(c3, (2, 0, 0), (0, 1, 0))
    assert w.found and w.n <= 4 and str(w) == f"Yes({w.n})"
    w = C.oracle_trivial(c3, (0, 1, 0), (1, 0, 0), 6)
    assert not w.found and str(w) == "NoWitnessUpTo(6)"
    assert C.oracle_trivial(c3, (1, 1, 0), (1, 1, 0)).n == 1
    with pytest.raises(NotBelow):
        C.oracle_trivial(c3, (1, 0, 0), (0, 1, 0))


def test_verify_inclusion_examples():
    assert C.verify_inclusion(c3, (0, 0, 0), (1, 0, 0), (0, 0, 1))
    assert C.verify_inclusion(c3, (0, 0, 0), (0, 1, 0), (1, 0, 0))
    assert C.verify_inclusion(c3, (1, 1, 0), (1, 1, 0), (2, 0, 1))


def _random_triples(seed, count):
    rng = random.Random(seed)
    ws = list(itertools.product(range(2), repeat=3))
    for _ in range(count):
        yield rng.choice(ws), rng.choice(ws), rng.choice(ws)


def test_translation_property():
    for l1, l2, mu in _random_triples(5, 15):
        shifted = tuple(a + b for a, b in zip(l1, mu))
        for nu in C.tensor(c3, l1, l2):
            assert C.contains(c3, tuple(a + b for a, b in zip(nu, mu)), [shifted, l2])


def test_semigroup_property():
    # (nu, l1, l2) with V(nu) in V(l1) x V(l2) is closed under addition
    rng = random.Random(7)
    ws = list(itertools.product(range(2), repeat=3))
    for _ in range(15):
        a1, a2, b1, b2 = (rng.choice(ws) for _ in range(4))
        nu_a = rng.choice(list(C.tensor(c3, a1, a2)))
        nu_b = rng.choice(list(C.tensor(c3, b1, b2)))
        add = lambda x, y: tuple(p + q for p, q in zip(x, y))  # noqa: E731
        assert C.contains(c3, add(nu_a, nu_b), [add(a1, b1), add(a2, b2)])
