"""The order ``nu <=^lam mu`` (``mu - nu`` in the cone spanned by roots that are
non-orthogonal to ``lam``), the semigroup Xi(lam), and the step-by-step
decomposition of Xi elements into such roots."""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from . import lattice as L
from .errors import NotInRootCoset, NotInXi, OrthoError


@lru_cache(maxsize=None)
def _generators(r: int, supp: frozenset, filter: str) -> tuple:
    ctx = L.RankedContext(r)
    return tuple(rt.vec for rt in L.roots_for_support(ctx, supp, filter))


@lru_cache(maxsize=None)
def _decompose(r: int, supp: frozenset, filter: str, theta: tuple):
    """One decomposition of ``theta`` into generators, or None."""
    if not any(theta):
        return ()
    for g in _generators(r, supp, filter):
        rest = tuple(a - b for a, b in zip(theta, g))
        if min(rest) < 0:
            continue
        sub = _decompose(r, supp, filter, rest)
        if sub is not None:
            return (g,) + sub
    return None


def nphi_decomposition(ctx: L.RankedContext, lam: Sequence[int], theta, filter: str = "all"):
    """Roots of ``Phi^+(lam)`` (or its long part) summing to ``theta``, or None."""
    if filter not in ("all", L.LONG):
        raise ValueError(f"filter must be 'all' or 'long', got {filter!r}")
    a = L.alpha_nonneg_ints(theta, ctx.r)
    supp = L.support(ctx.weight(lam))
    return _decompose(ctx.r, supp, filter, a)


def nphi_membership(ctx: L.RankedContext, lam: Sequence[int], theta, filter: str = "all") -> bool:
    return nphi_decomposition(ctx, lam, theta, filter) is not None


def lambda_leq(ctx: L.RankedContext, lam: Sequence[int], nu: Sequence[int], mu: Sequence[int]) -> bool:
    """``nu <=^lam mu``."""
    d = L.weight_diff_alpha(ctx, mu, nu)
    if not d.is_integral:
        raise NotInRootCoset(f"{tuple(mu)} - {tuple(nu)} is not in the root lattice")
    a = d.ints()
    if min(a) < 0:
        return False
    return nphi_membership(ctx, lam, a, "all")


def lambda_leq_witness(ctx: L.RankedContext, lam, nu, mu):
    """Root decomposition of ``mu - nu`` witnessing ``nu <=^lam mu`` (or None)."""
    d = L.weight_diff_alpha(ctx, mu, nu)
    if not d.is_integral:
        raise NotInRootCoset(f"{tuple(mu)} - {tuple(nu)} is not in the root lattice")
    a = d.ints()
    if min(a) < 0:
        return None
    return nphi_decomposition(ctx, lam, a, "all")


def section4_leq(ctx: L.RankedContext, support: Sequence[int], theta1, theta2) -> bool:
    """``theta2 - theta1`` lies in N(Delta) but not in N(Delta minus I)."""
    a1 = L.alpha_ints(theta1, ctx.r)
    a2 = L.alpha_ints(theta2, ctx.r)
    d = [y - x for x, y in zip(a1, a2)]
    if min(d) < 0:
        return False
    return any(d[i - 1] for i in support)


def _nonzero_lam(ctx, lam):
    lam = ctx.weight(lam)
    L.require_dominant(lam, "lambda")
    if not any(lam):
        raise OrthoError("lambda must be non-zero")
    return lam


def xi_membership(ctx: L.RankedContext, lam: Sequence[int], tau) -> bool:
    lam = _nonzero_lam(ctx, lam)
    a = L.alpha_nonneg_ints(tau, ctx.r)
    return _xi_conditions(ctx.r, sorted(L.support(lam)), a)


def _xi_conditions(r: int, supp: list, a: tuple) -> bool:
    # a is 0-based; a[i-1] is the coefficient of alpha_i
    p, q = supp[0], supp[-1]
    # C1
    for i in range(1, p):
        if a[i - 1] > a[i]:
            return False
    # C2
    for s, t in zip(supp, supp[1:]):
        var = sum(abs(a[i] - a[i - 1]) for i in range(s, t))
        if var > a[s - 1] + a[t - 1]:
            return False
    # C3
    if q < r:
        if a[r - 1] % 2:
            return False
        rise = sum(a[i] - a[i - 1] for i in range(q, r) if a[i - 1] < a[i])
        if 2 * rise > a[r - 1]:
            return False
    return True


def _tail(r: int, lo: int, hi: int, two_from: int | None = None) -> tuple:
    """``sum_{lo}^{hi} alpha_i`` (1-based, inclusive), doubling indices
    ``>= two_from``."""
    v = [0] * r
    for i in range(lo, hi + 1):
        v[i - 1] = 2 if two_from is not None and i >= two_from else 1
    return tuple(v)


def xi_step_by_cases(ctx: L.RankedContext, lam: Sequence[int], tau) -> L.Root:
    """The root picked by the four-case construction (s0 < q; s0 = q = r;
    s0 = q with a_r = 0; s0 = q < r with a_r > 0), without checking that it
    keeps ``lam + tau^- + theta`` dominant."""
    lam = _nonzero_lam(ctx, lam)
    a = L.alpha_nonneg_ints(tau, ctx.r)
    r = ctx.r
    supp = sorted(L.support(lam))
    if not any(a):
        raise NotInXi("tau must be non-zero")
    if not _xi_conditions(r, supp, a):
        raise NotInXi(f"{a} is not in Xi({lam})")
    A = lambda i: a[i - 1]  # noqa: E731  1-based view
    q = supp[-1]
    s0 = next((s for s in supp if A(s)), None)
    if s0 is None:
        raise NotInXi(f"{a} has no coefficient on Supp(lambda)")
    # leading zeros; a_{j+1} <= ... <= a_{s0} are then all positive
    j = next(i for i in range(1, r + 1) if A(i)) - 1

    if s0 < q:
        t0 = next(t for t in supp if t > s0)
        if all(A(i) <= A(i + 1) for i in range(s0, t0)):
            k = t0 - 1
        else:
            k = max(i for i in range(1, t0) if A(i) > A(i + 1))
        vec = _tail(r, j + 1, k)
    elif s0 == q == r:
        vec = _tail(r, j + 1, r)
    elif A(r) == 0:
        k = max(i for i in range(q, r + 1) if A(i) > 0)
        vec = _tail(r, j + 1, k)
    else:
        rises = [i for i in range(q, r) if A(i) < A(i + 1)]
        k = min(rises) if rises else q
        vec = _tail(r, j + 1, r, two_from=k + 1)
    return L.Root(vec, L.SHORT if vec[-1] % 2 else L.LONG)


def xi_step_ok(ctx: L.RankedContext, lam: Sequence[int], tau, root: L.Root) -> bool:
    """The three requirements on a step: ``root`` in Phi^+(lam) (long when
    ``alpha_r`` is outside the support), ``tau - root`` in Xi(lam), and
    ``lam + tau^- + root`` dominant."""
    lam = ctx.weight(lam)
    a = L.alpha_nonneg_ints(tau, ctx.r)
    supp = L.support(lam)
    if root not in L.phi_plus_of(ctx, lam):
        return False
    if ctx.r not in supp and not root.is_long:
        return False
    rest = tuple(x - y for x, y in zip(a, root.vec))
    if min(rest) < 0 or not _xi_conditions(ctx.r, sorted(supp), rest):
        return False
    tau_minus = L.minus_part(L.alpha_to_weight(ctx, a))
    shifted = tuple(x + y + z for x, y, z in zip(lam, tau_minus, L.root_omega(ctx, root)))
    return L.is_dominant(shifted)


def xi_step(ctx: L.RankedContext, lam: Sequence[int], tau) -> L.Root:
    """A root ``theta`` with ``tau - theta`` in Xi(lam) and
    ``lam + tau^- + theta`` dominant.

    The four-case construction is tried first.  When ``alpha_r`` is in the
    support with ``<lam, alpha_r^vee> = 1`` its first case can land on
    ``k + 1 = r`` and break dominance (``varpi_r = 2 omega_r``); the roots of
    Phi^+(lam) are then scanned in canonical order instead.
    """
    root = xi_step_by_cases(ctx, lam, tau)
    if xi_step_ok(ctx, lam, tau, root):
        return root
    for cand in L.phi_plus_of(ctx, lam):
        if xi_step_ok(ctx, lam, tau, cand):
            return cand
    raise OrthoError(f"no admissible root for tau={tuple(tau)}, lambda={tuple(lam)}")


def xi_decompose(ctx: L.RankedContext, lam: Sequence[int], tau) -> list:
    """Iterate :func:`xi_step` until exhausted."""
    lam = _nonzero_lam(ctx, lam)
    a = L.alpha_nonneg_ints(tau, ctx.r)
    if not _xi_conditions(ctx.r, sorted(L.support(lam)), a):
        raise NotInXi(f"{a} is not in Xi({lam})")
    out = []
    while any(a):
        root = xi_step(ctx, lam, a)
        out.append(root)
        a = tuple(x - y for x, y in zip(a, root.vec))
    return out
