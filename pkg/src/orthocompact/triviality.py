"""Trivial weights, the semigroup -Omega(lam), little brothers and the
Schur-Weyl criteria for tensor powers of the standard representation."""

from __future__ import annotations

from typing import Sequence

from . import lattice as L
from .errors import NotBelow, NotNonNegative


def q_index(ctx: L.RankedContext, lam: Sequence[int]) -> int:
    """Largest index in ``Supp(lam)``; 0 for ``lam = 0``."""
    lam = ctx.weight(lam)
    L.require_dominant(lam)
    return max(L.support(lam), default=0)


def _q_of_support(supp) -> int:
    return max(supp, default=0)


def l_index(ctx: L.RankedContext, theta) -> int:
    """Smallest ``l`` with ``a_i = a_r`` for every ``i >= l``."""
    a = L.alpha_nonneg_ints(theta, ctx.r)
    l = ctx.r
    while l > 1 and a[l - 2] == a[-1]:
        l -= 1
    return l


def _criterion(a_r: int, bound: int) -> bool:
    return a_r % 2 == 0 or a_r > 2 * bound


def below_alpha(ctx: L.RankedContext, lam: Sequence[int], mu: Sequence[int]) -> tuple:
    """``lam - mu`` as non-negative integral alpha coordinates, or NotBelow."""
    d = L.weight_diff_alpha(ctx, lam, mu)
    if not d.is_integral or any(x < 0 for x in d.doubled):
        raise NotBelow(f"{tuple(mu)} is not below {tuple(lam)} in the dominance order")
    return d.ints()


def is_trivial(ctx: L.RankedContext, lam: Sequence[int], mu: Sequence[int]) -> bool:
    lam, mu = ctx.weight(lam), ctx.weight(mu)
    L.require_dominant(lam, "lambda")
    L.require_dominant(mu, "mu")
    a = below_alpha(ctx, lam, mu)
    r = ctx.r
    return _criterion(a[-1], min(r - q_index(ctx, lam), r - q_index(ctx, mu)))


def trivial_trace(ctx: L.RankedContext, lam: Sequence[int], mu: Sequence[int]) -> dict:
    """The quantities entering :func:`is_trivial`, for reporting."""
    lam, mu = ctx.weight(lam), ctx.weight(mu)
    result = is_trivial(ctx, lam, mu)
    return {
        "trivial": result,
        "a": list(below_alpha(ctx, lam, mu)),
        "q_lambda": q_index(ctx, lam),
        "q_mu": q_index(ctx, mu),
    }


def in_neg_omega(ctx: L.RankedContext, lam: Sequence[int], theta) -> bool:
    """Membership of ``theta`` in ``-Omega(lam)``."""
    lam = ctx.weight(lam)
    L.require_dominant(lam, "lambda")
    a = L.alpha_nonneg_ints(theta, ctx.r)
    if not L.support(L.plus_part(L.alpha_to_weight(ctx, a))) <= L.support(lam):
        return False
    r = ctx.r
    return _criterion(a[-1], min(r - l_index(ctx, a), r - q_index(ctx, lam)))


def satisfies_star(ctx: L.RankedContext, lam: Sequence[int]) -> bool:
    lam = ctx.weight(lam)
    L.require_dominant(lam)
    supp = L.support(lam)
    return supp <= {ctx.r} or ctx.r in supp


def little_brothers(ctx: L.RankedContext, lam: Sequence[int]) -> set:
    lam = ctx.weight(lam)
    if satisfies_star(ctx, lam):
        return set()
    r = ctx.r
    p = max(L.support(lam))  # last long simple root in the support
    tail = [0] * r
    for i in range(p - 1, r):
        tail[i] = 1
    lb = tuple(x - y for x, y in zip(lam, L.alpha_to_weight(ctx, tail)))
    assert L.is_dominant(lb), lb
    return {lb}


def little_brother(ctx: L.RankedContext, lam: Sequence[int]):
    """The unique little brother, or None when (star) holds."""
    lbs = little_brothers(ctx, lam)
    return next(iter(lbs)) if lbs else None


def _sw_alpha(ctx: L.RankedContext, n: int, mu: Sequence[int]) -> tuple:
    if n < 0:
        raise NotNonNegative(f"tensor power must be non-negative, got {n}")
    mu = ctx.weight(mu)
    L.require_dominant(mu, "mu")
    top = (n,) + (0,) * (ctx.r - 1)
    return below_alpha(ctx, top, mu)


def sw_contains_criterion(ctx: L.RankedContext, n: int, mu: Sequence[int]) -> bool:
    """Whether ``V(mu)`` occurs in ``V(omega_1)^{(x) n}``, by the a_r test."""
    a = _sw_alpha(ctx, n, mu)
    return _criterion(a[-1], ctx.r - q_index(ctx, mu))


def epsilon_coords(ctx: L.RankedContext, n: int, mu: Sequence[int]) -> tuple:
    """``mu`` as a partition ``(mu_1 >= ... >= mu_r >= 0)``."""
    a = _sw_alpha(ctx, n, mu)
    parts = [n - a[0]] + [a[i - 1] - a[i] for i in range(1, ctx.r)]
    return tuple(parts)


def _conjugate(part: Sequence[int]) -> list:
    part = [p for p in part if p > 0]
    if not part:
        return []
    return [sum(1 for p in part if p > c) for c in range(part[0])]


def _orthogonal_admissible(part: Sequence[int], n: int, dim: int) -> bool:
    size = sum(part)
    if size > n or (n - size) % 2:
        return False
    cols = _conjugate(part) + [0, 0]
    return cols[0] + cols[1] <= dim


def sw_contains_partition(ctx: L.RankedContext, n: int, mu: Sequence[int]) -> bool:
    """Same question as :func:`sw_contains_criterion`, answered through
    O(2r+1) partition labels: either ``mu`` padded with zeros, or ``mu``
    followed by a column of ones reaching length ``2r+1-q``."""
    r = ctx.r
    parts = epsilon_coords(ctx, n, mu)
    q = sum(1 for p in parts if p > 0)
    shapes = [
        list(parts) + [0] * (r + 1),
        list(parts[:q]) + [1] * (2 * r + 1 - 2 * q) + [0] * q,
    ]
    return any(_orthogonal_admissible(s, n, 2 * r + 1) for s in shapes)
