"""Exact characters of Spin(2r+1): Weyl dimensions, Freudenthal weight
multiplicities and Brauer-Klimyk tensor product decompositions.

Serves as a brute-force oracle for the combinatorial criteria elsewhere in the
package.  Everything is exact integer arithmetic; the inner product is scaled
by 4 so that spin weights never produce fractions.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from . import lattice as L
from .errors import NotBelow, OrthoError

DEFAULT_N_MAX = 8


class Character(dict):
    """Weight -> multiplicity; absent weights have multiplicity 0."""

    def __missing__(self, key):
        return 0

    @property
    def dimension(self) -> int:
        return sum(self.values())

    def dominant(self) -> dict:
        return {w: m for w, m in self.items() if L.is_dominant(w)}


class Witness(NamedTuple):
    """Outcome of a bounded tensor-power search.

    ``n`` is the smallest tensor power that worked, or None when nothing was
    found up to ``searched``.  None means "no witness up to the bound", never
    "false".
    """

    n: int | None
    searched: int

    @property
    def found(self) -> bool:
        return self.n is not None

    def __str__(self):
        return f"Yes({self.n})" if self.found else f"NoWitnessUpTo({self.searched})"


def rho(ctx: L.RankedContext) -> L.Weight:
    return (1,) * ctx.r


@lru_cache(maxsize=None)
def _form4(r: int) -> np.ndarray:
    """Gram matrix of ``4 (omega_i, omega_j)``, long roots of squared length 2."""
    ctx = L.RankedContext(r)
    half_norms = [2] * (r - 1) + [1]  # 2 * (alpha_k, alpha_k) / 2
    G = np.zeros((r, r), dtype=np.int64)
    for j in range(r):
        dj = L.omega_to_alpha(ctx, ctx.omega(j + 1)).doubled
        for i in range(r):
            G[i, j] = dj[i] * half_norms[i]
    assert (G == G.T).all()
    return G


@lru_cache(maxsize=None)
def _cartan(r: int) -> np.ndarray:
    return np.array(L.RankedContext(r).pairing, dtype=np.int64)


@lru_cache(maxsize=None)
def _alpha2(r: int) -> np.ndarray:
    """Rows: doubled alpha coordinates of each omega_j."""
    ctx = L.RankedContext(r)
    return np.array([L.omega_to_alpha(ctx, ctx.omega(j + 1)).doubled for j in range(r)], dtype=np.int64)


def inner4(ctx: L.RankedContext, w1: Sequence[int], w2: Sequence[int]) -> int:
    return int(np.asarray(w1, dtype=np.int64) @ _form4(ctx.r) @ np.asarray(w2, dtype=np.int64))


def reflect_to_dominant(ctx: L.RankedContext, w: Sequence[int]) -> tuple:
    """Dominant representative of the W-orbit of ``w`` and the sign of the
    Weyl element used."""
    A = ctx.pairing
    w = list(w)
    sign = 1
    while True:
        i = next((i for i, c in enumerate(w) if c < 0), None)
        if i is None:
            return tuple(w), sign
        c = w[i]
        w = [x - c * a for x, a in zip(w, A[i])]
        sign = -sign


def _reflect_rows(r: int, X: np.ndarray) -> tuple:
    A = _cartan(r)
    X = X.copy()
    sign = np.ones(len(X), dtype=np.int64)
    while True:
        neg = X < 0
        rows = np.flatnonzero(neg.any(axis=1))
        if not len(rows):
            return X, sign
        idx = neg[rows].argmax(axis=1)
        c = X[rows, idx]
        X[rows] -= c[:, None] * A[idx]
        sign[rows] = -sign[rows]


def weyl_dim(ctx: L.RankedContext, lam: Sequence[int]) -> int:
    lam = ctx.weight(lam)
    L.require_dominant(lam)
    r = ctx.r
    shifted = [a + 1 for a in lam]
    norms = [2] * (r - 1) + [1]
    out = Fraction(1)
    for root in ctx.roots:
        num = sum(t * s * n for t, s, n in zip(root.vec, shifted, norms))
        den = sum(t * n for t, n in zip(root.vec, norms))
        out *= Fraction(num, den)
    assert out.denominator == 1
    return int(out)


@lru_cache(maxsize=None)
def _dominant_mults(r: int, lam: tuple) -> dict:
    ctx = L.RankedContext(r)
    G = _form4(r)
    roots_w = [np.array(L.root_omega(ctx, rt), dtype=np.int64) for rt in ctx.roots]
    lr = np.array(lam, dtype=np.int64) + 1
    top = int(lr @ G @ lr)
    mults = {}
    for mu in L.dominant_below(ctx, lam):
        if mu == lam:
            mults[mu] = 1
            continue
        mu_arr = np.array(mu, dtype=np.int64)
        num = 0
        for aw in roots_w:
            k = 1
            while True:
                nu = mu_arr + k * aw
                m = mults.get(reflect_to_dominant(ctx, nu.tolist())[0], 0)
                if not m:
                    break
                num += m * int(nu @ G @ aw)
                k += 1
        mr = mu_arr + 1
        den = top - int(mr @ G @ mr)
        m, rem = divmod(2 * num, den)
        assert rem == 0, (lam, mu)
        if m:
            mults[mu] = m
    return mults


def _orbit(ctx: L.RankedContext, w: tuple) -> list:
    A = ctx.pairing
    seen = {w}
    queue = deque([w])
    while queue:
        x = queue.popleft()
        for i, c in enumerate(x):
            if c:
                y = tuple(a - c * b for a, b in zip(x, A[i]))
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
    return list(seen)


@lru_cache(maxsize=None)
def _weight_system(r: int, lam: tuple) -> tuple:
    ctx = L.RankedContext(r)
    weights, mults = [], []
    for mu, m in _dominant_mults(r, lam).items():
        for w in _orbit(ctx, mu):
            weights.append(w)
            mults.append(m)
    return np.array(weights, dtype=np.int64).reshape(-1, r), np.array(mults, dtype=object)


def weight_mults(ctx: L.RankedContext, lam: Sequence[int]) -> Character:
    """Full weight system of ``V(lam)`` with multiplicities (Freudenthal)."""
    lam = ctx.weight(lam)
    L.require_dominant(lam)
    W, M = _weight_system(ctx.r, lam)
    return Character({tuple(int(x) for x in w): int(m) for w, m in zip(W, M)})


def dominant_weight_mults(ctx: L.RankedContext, lam: Sequence[int]) -> dict:
    lam = ctx.weight(lam)
    L.require_dominant(lam)
    return dict(_dominant_mults(ctx.r, lam))


def _klimyk(r: int, lam: tuple, mu: tuple, floor: tuple | None = None) -> dict:
    W, M = _weight_system(r, mu)
    X = W + (np.array(lam, dtype=np.int64) + 1)
    X, sign = _reflect_rows(r, X)
    keep = (X > 0).all(axis=1)
    X = X[keep] - 1
    sign = sign[keep]
    M = M[keep]
    if floor is not None and len(X):
        depth = (X - np.array(floor, dtype=np.int64)) @ _alpha2(r)
        ok = (depth >= 0).all(axis=1) & (depth % 2 == 0).all(axis=1)
        X, sign, M = X[ok], sign[ok], M[ok]
    out = {}
    for row, s, m in zip(X.tolist(), sign.tolist(), M):
        key = tuple(row)
        out[key] = out.get(key, 0) + s * m
    return {k: v for k, v in out.items() if v}


def tensor(ctx: L.RankedContext, lam: Sequence[int], mu: Sequence[int]) -> dict:
    """Decomposition of ``V(lam) (x) V(mu)``: highest weight -> multiplicity.

    Each weight of ``V(mu)`` is shifted by ``lam + rho`` and reflected into the
    dominant chamber; wall-fixed terms drop out.
    """
    lam, mu = ctx.weight(lam), ctx.weight(mu)
    L.require_dominant(lam, "lambda")
    L.require_dominant(mu, "mu")
    out = _klimyk(ctx.r, lam, mu)
    if any(v < 0 for v in out.values()):
        raise OrthoError(f"negative multiplicity in {lam} x {mu}")
    return dict(sorted(out.items(), reverse=True))


def _above_floor(ctx: L.RankedContext, w: Sequence[int], floor: Sequence[int]) -> bool:
    return L.dominance_leq(ctx, floor, w)


def _product_constituents(ctx: L.RankedContext, current: Iterable, factor: tuple, floor=None) -> set:
    out = set()
    for kappa in current:
        out.update(_klimyk(ctx.r, kappa, factor, floor))
    return out


def contains(ctx: L.RankedContext, nu: Sequence[int], factors: Sequence[Sequence[int]]) -> bool:
    """Whether ``V(nu)`` occurs in ``V(f_1) (x) ... (x) V(f_n)``."""
    if not factors:
        raise OrthoError("need at least one tensor factor")
    nu = ctx.weight(nu)
    factors = [ctx.weight(f) for f in factors]
    for w in [nu] + factors:
        L.require_dominant(w)
    # components that cannot reach nu after the remaining factors are dropped
    remaining = [tuple(sum(c) for c in zip(*factors[k:])) for k in range(1, len(factors))] + [ctx.zero()]
    floors = [tuple(a - b for a, b in zip(nu, rem)) for rem in remaining]
    current = {factors[0]} if _above_floor(ctx, factors[0], floors[0]) else set()
    for k in range(1, len(factors)):
        if not current:
            return False
        current = _product_constituents(ctx, current, factors[k], floors[k])
    return nu in current


def tensor_power_constituents(ctx: L.RankedContext, lam: Sequence[int], n: int) -> set:
    """Highest weights occurring in ``V(lam)^{(x) n}`` (``n >= 0``)."""
    lam = ctx.weight(lam)
    L.require_dominant(lam)
    current = {ctx.zero()}
    for _ in range(n):
        current = _product_constituents(ctx, current, lam)
    return current


def oracle_trivial(ctx: L.RankedContext, lam: Sequence[int], mu: Sequence[int],
                   n_max: int = DEFAULT_N_MAX) -> Witness:
    """Smallest ``n <= n_max`` with ``V(mu + (n-1) lam)`` inside ``V(lam)^{(x) n}``."""
    lam, mu = ctx.weight(lam), ctx.weight(mu)
    L.require_dominant(lam, "lambda")
    L.require_dominant(mu, "mu")
    if not L.dominance_leq(ctx, mu, lam):
        raise NotBelow(f"{mu} is not below {lam}")
    return _bounded_search(ctx, lam, [lam], mu, lam, n_max)


def _bounded_search(ctx, lam, pieces, mu_p, lam_p, n_max) -> Witness:
    """Search ``V(mu_p - lam_p + n lam)`` in products of ``n`` factors from
    ``pieces`` (all ``<= lam``), for ``n = 1..n_max``.

    A component ``kappa`` after ``k`` factors can only lead to the target if
    ``k lam - kappa <= lam_p - mu_p``; everything else is pruned.
    """
    shift = tuple(a - b for a, b in zip(mu_p, lam_p))
    pieces = sorted(set(pieces), reverse=True)
    current = {ctx.zero()}
    for n in range(1, n_max + 1):
        floor = tuple(s + n * x for s, x in zip(shift, lam))
        nxt = set()
        for p in pieces:
            nxt |= _product_constituents(ctx, current, p, floor)
        current = nxt
        if floor in current:
            return Witness(n, n_max)
        if not current:
            break
    return Witness(None, n_max)


def oracle_morphism(ctx: L.RankedContext, weights: Sequence[Sequence[int]], lam: Sequence[int],
                    weights2: Sequence[Sequence[int]], lam2: Sequence[int],
                    n_max: int = 6) -> dict:
    """For each ``mu'`` of the second set, the smallest ``n`` such that
    ``V(mu' - lam' + n lam)`` sits in a product of ``n`` weights of the first
    set (or None up to ``n_max``)."""
    lam, lam2 = ctx.weight(lam), ctx.weight(lam2)
    pieces = [ctx.weight(w) for w in weights]
    return {
        ctx.weight(mu2): _bounded_search(ctx, lam, pieces, ctx.weight(mu2), lam2, n_max)
        for mu2 in weights2
    }


def verify_inclusion(ctx: L.RankedContext, nu: Sequence[int], mu: Sequence[int], lam: Sequence[int]) -> bool:
    """``V(lam + nu)`` inside ``V(mu) (x) V(lam)``."""
    nu, mu, lam = ctx.weight(nu), ctx.weight(mu), ctx.weight(lam)
    target = tuple(a + b for a, b in zip(lam, nu))
    return contains(ctx, target, [mu, lam])
