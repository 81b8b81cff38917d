"""Slow, independent re-derivations used to check the library.

Everything here works in epsilon coordinates of R^r (the standard model of
B_r) and does not call the library's own coordinate changes.
"""

import itertools
from collections import Counter
from fractions import Fraction

import orthocompact.lattice as L
from orthocompact import charring as C


def eps_of_omega(r, w):
    """omega_i = e_1 + ... + e_i (i < r), omega_r = (e_1 + ... + e_r) / 2."""
    e = [Fraction(0)] * r
    for i, n in enumerate(w, start=1):
        for k in range(i if i < r else r):
            e[k] += Fraction(n, 1 if i < r else 2)
    return e


def eps_of_alpha(r, a):
    """alpha_i = e_i - e_{i+1}, alpha_r = e_r."""
    e = [Fraction(0)] * r
    for i, c in enumerate(a):
        e[i] += c
        if i + 1 < r:
            e[i + 1] -= c
    return e


def alpha_of_eps(e):
    """Inverse of eps_of_alpha: a_i = e_1 + ... + e_i."""
    return list(itertools.accumulate(e))


def norm2(e):
    return sum(x * x for x in e)


def brute_positive_roots(r):
    """Non-negative combinations with coefficients <= 2 of squared length
    1 (short) or 2 (long)."""
    out = {}
    for a in itertools.product(range(3), repeat=r):
        if not any(a):
            continue
        n = norm2(eps_of_alpha(r, a))
        if n == 1:
            out[a] = L.SHORT
        elif n == 2:
            out[a] = L.LONG
    return out


def brute_dominant_below(r, lam):
    """Scan a box of dominant weights and keep those with ``lam - mu`` a
    non-negative integral combination of simple roots."""
    el = eps_of_omega(r, lam)
    top = 2 * sum(lam) + 1
    out = set()
    for mu in itertools.product(range(top + 1), repeat=r):
        d = alpha_of_eps([x - y for x, y in zip(el, eps_of_omega(r, mu))])
        if all(x.denominator == 1 and x >= 0 for x in d):
            out.add(mu)
    return out


def peel_tensor(ctx, lam, mu):
    """Decompose V(lam) x V(mu) by multiplying full characters and removing
    highest weights one at a time."""
    A, B = C.weight_mults(ctx, lam), C.weight_mults(ctx, mu)
    prod = Counter()
    for a, x in A.items():
        for b, y in B.items():
            prod[tuple(i + j for i, j in zip(a, b))] += x * y
    out = {}
    while True:
        cands = [w for w, v in prod.items() if v and L.is_dominant(w)]
        if not cands:
            break
        top = next(w for w in cands if not any(v != w and L.dominance_leq(ctx, w, v) for v in cands))
        k = prod[top]
        assert k > 0
        out[top] = k
        for w, v in C.weight_mults(ctx, top).items():
            prod[w] -= k * v
    assert not any(prod.values())
    return out


def brute_nphi(ctx, lam, theta, long_only=False):
    """Forward search over sums of roots from Phi^+(lam) staying below theta."""
    gens = [rt.vec for rt in L.phi_plus_of(ctx, lam) if rt.is_long or not long_only]
    theta = tuple(theta)
    reach, frontier = {tuple([0] * ctx.r)}, [tuple([0] * ctx.r)]
    while frontier:
        nxt = []
        for v in frontier:
            for g in gens:
                w = tuple(x + y for x, y in zip(v, g))
                if all(x <= t for x, t in zip(w, theta)) and w not in reach:
                    reach.add(w)
                    nxt.append(w)
        frontier = nxt
    return theta in reach
