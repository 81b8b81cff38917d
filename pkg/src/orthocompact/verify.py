"""Executable sweeps: each suite recomputes one family of statements and
collects every disagreement it finds."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from . import lattice as L
from . import charring as C
from .compactify import (equivalent, is_normal, isomorphic, make_simple_subset,
                         morphism_exists, normalization, reduce)
from .orders import nphi_membership, xi_decompose, xi_membership, xi_step_ok
from .posets import T2_poset, enum_T2
from .triviality import is_trivial, sw_contains_criterion, sw_contains_partition


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    mismatches: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def fail(self, **info):
        self.mismatches.append(info)

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.name}: {self.checked} checked, {len(self.mismatches)} mismatches"


def _box(r: int, top: int):
    return itertools.product(range(top + 1), repeat=r)


# expected posets for three small supports; arrows as (from, to) vertex pairs
def _table1():
    verts = {(k, 1, 1) for k in range(5)}
    return verts, {((k, 1, 1), (k + 1, 1, 1)) for k in range(4)}


def _table2():
    verts = {(1, 1, 1), (2, 1, 1), (3, 1, 1), (3, 3, 3)}
    edges = {((1, 1, 1), (2, 1, 1)), ((2, 1, 1), (3, 1, 1)), ((2, 1, 1), (3, 3, 3))}
    return verts, edges


def _table3():
    verts = {(i, j, 1, 1) for i in range(4) for j in range(4)}
    edges = set()
    for i, j in itertools.product(range(4), repeat=2):
        if j < 3:
            edges.add(((i, j, 1, 1), (i, j + 1, 1, 1)))
        if i < 3:
            edges.add(((i, j, 1, 1), (i + 1, j, 1, 1)))
    return verts, edges


TABLES = {
    "table1": (3, (1, 2), 4, _table1),
    "table2": (3, (1,), 3, _table2),
    "table3": (4, (1, 2, 3), 3, _table3),
}


def poset_sets(r: int, I, bound: int) -> tuple:
    p = T2_poset(L.RankedContext(r), I, bound)
    verts = set(p.vertices)
    edges = {(p.vertices[i], p.vertices[j]) for i, j in p.edges}
    return verts, edges


def check_table(name: str) -> SuiteResult:
    r, I, bound, expected = TABLES[name]
    res = SuiteResult(name)
    verts, edges = poset_sets(r, I, bound)
    ev, ee = expected()
    res.checked = len(ev) + len(ee)
    if verts != ev:
        res.fail(kind="vertices", extra=sorted(verts - ev), missing=sorted(ev - verts))
    if edges != ee:
        res.fail(kind="edges", extra=sorted(edges - ee), missing=sorted(ee - edges))
    return res


def check_remark_omega_r_minus_1(ranks=(3, 4, 5), bound: int = 6) -> SuiteResult:
    res = SuiteResult("omega_{r-1} singleton")
    for r in ranks:
        got = enum_T2(L.RankedContext(r), [r - 1], bound)
        want = [tuple(1 if i >= r - 1 else 0 for i in range(1, r + 1))]
        res.checked += 1
        if got != want:
            res.fail(r=r, got=got, want=want)
    return res


def suite_tables(r: int | None = None) -> SuiteResult:
    res = SuiteResult("tables")
    parts = [check_table(n) for n, entry in TABLES.items() if r is None or entry[0] == r]
    ranks = (3, 4, 5) if r is None else (r,)
    parts.append(check_remark_omega_r_minus_1(ranks))
    for p in parts:
        res.checked += p.checked
        res.mismatches += [dict(part=p.name, **m) for m in p.mismatches]
    return res


def suite_theorem(r: int, top: int = 2, n_max: int = C.DEFAULT_N_MAX) -> SuiteResult:
    """Trivial-weight criterion against the bounded tensor-power search."""
    ctx = L.RankedContext(r)
    res = SuiteResult(f"theorem r={r}")
    for lam in _box(r, top):
        for mu in L.dominant_below(ctx, lam):
            predicted = is_trivial(ctx, lam, mu)
            w = C.oracle_trivial(ctx, lam, mu, n_max)
            res.checked += 1
            if predicted != w.found:
                res.fail(lam=lam, mu=mu, predicted=predicted, oracle=str(w))
    return res


def suite_schurweyl(r: int, n_top: int = 6) -> SuiteResult:
    ctx = L.RankedContext(r)
    res = SuiteResult(f"schur-weyl r={r}")
    w1 = ctx.omega(1)
    current = {ctx.zero()}
    for n in range(1, n_top + 1):
        current = C._product_constituents(ctx, current, w1)
        top = tuple(n * x for x in w1)
        for mu in L.dominant_below(ctx, top):
            got = mu in current
            a = sw_contains_criterion(ctx, n, mu)
            b = sw_contains_partition(ctx, n, mu)
            res.checked += 1
            if not got == a == b:
                res.fail(n=n, mu=mu, oracle=got, criterion=a, partition=b)
    return res


def _lambdas_small_support(r: int, max_support: int = 2, coeffs=(1, 2)):
    for k in range(1, max_support + 1):
        for supp in itertools.combinations(range(1, r + 1), k):
            for cs in itertools.product(coeffs, repeat=k):
                lam = [0] * r
                for i, c in zip(supp, cs):
                    lam[i - 1] = c
                yield tuple(lam)


def _taus(r: int, total: int):
    for t in itertools.product(range(total + 1), repeat=r):
        if 0 < sum(t) <= total:
            yield t


def suite_xi(r: int, total: int = 8) -> SuiteResult:
    """Xi(lam) against the cone of (long) roots non-orthogonal to lam, and
    the postconditions of every step of the decomposition."""
    ctx = L.RankedContext(r)
    res = SuiteResult(f"xi r={r}")
    taus = list(_taus(r, total))
    for lam in _lambdas_small_support(r):
        filt = "all" if r in L.support(lam) else L.LONG
        for tau in taus:
            mem = xi_membership(ctx, lam, tau)
            res.checked += 1
            if mem != nphi_membership(ctx, lam, tau, filt):
                res.fail(lam=lam, tau=tau, xi=mem)
                continue
            if not mem:
                continue
            rest = tau
            for root in xi_decompose(ctx, lam, tau):
                if not xi_step_ok(ctx, lam, rest, root):
                    res.fail(lam=lam, tau=tau, step=rest, root=root.vec)
                    break
                rest = tuple(x - y for x, y in zip(rest, root.vec))
    return res


def lemma_cases(ctx: L.RankedContext, lam, mu, nu, reading: str = "literal") -> list:
    """Which of the three hypotheses (``i``, ``ii``, ``iii``) hold for the
    triple; ``nu`` is assumed dominant and below ``mu``.

    For ``iii`` the literal reading only asks ``Supp(lam) != {alpha_r}``.
    The ``levi`` reading asks for some ``alpha_j`` with ``j < r`` in
    ``Supp(lam)`` and in the support of ``mu - nu``, which is what the
    reduction to the Levi subgroup of ``Supp(mu - nu)`` actually uses.
    """
    d = L.weight_diff_alpha(ctx, mu, nu)
    if not d.is_integral:
        return []
    theta = d.ints()
    roots = {rt.vec: rt for rt in L.phi_plus_of(ctx, lam)}
    out = []
    rt = roots.get(theta)
    if rt is not None and rt.is_long:
        out.append("i")
    lam_nu = tuple(a + b for a, b in zip(lam, nu))
    if rt is not None and ctx.r in L.support(lam_nu):
        out.append("ii")
    if reading == "literal":
        third = L.support(lam) != {ctx.r}
    else:
        third = any(i < ctx.r and theta[i - 1] for i in L.support(lam))
    if third and all(t % 2 == 0 for t in theta):
        half = tuple(t // 2 for t in theta)
        if half in roots and roots[half].is_short:
            out.append("iii")
    return out


def suite_lemma(r: int = 3, top: int = 2, reading: str = "literal") -> SuiteResult:
    ctx = L.RankedContext(r)
    res = SuiteResult(f"positive-root inclusions r={r} ({reading})")
    for lam in _box(r, top):
        for mu in _box(r, top):
            for nu in L.dominant_below(ctx, mu):
                cases = lemma_cases(ctx, lam, mu, nu, reading)
                if not cases:
                    continue
                res.checked += 1
                if not C.verify_inclusion(ctx, nu, mu, lam):
                    res.fail(lam=lam, mu=mu, nu=nu, cases=cases)
    return res


def suite_characters(calls: int = 200, seed: int = 0, ranks=(2, 3), top: int = 3) -> SuiteResult:
    rng = random.Random(seed)
    res = SuiteResult("characters")
    for _ in range(calls):
        r = rng.choice(ranks)
        ctx = L.RankedContext(r)
        lam = tuple(rng.randint(0, top) for _ in range(r))
        mu = tuple(rng.randint(0, top) for _ in range(r))
        t = C.tensor(ctx, lam, mu)
        res.checked += 1
        dim = sum(m * C.weyl_dim(ctx, nu) for nu, m in t.items())
        if dim != C.weyl_dim(ctx, lam) * C.weyl_dim(ctx, mu):
            res.fail(r=r, lam=lam, mu=mu, check="dimension")
        if t != C.tensor(ctx, mu, lam):
            res.fail(r=r, lam=lam, mu=mu, check="commutativity")
        top_w = tuple(a + b for a, b in zip(lam, mu))
        if t.get(top_w) != 1:
            res.fail(r=r, lam=lam, mu=mu, check="highest weight")
    return res


def _family(ctx, lam, max_extra: int = 2) -> list:
    below = [mu for mu in L.dominant_below(ctx, lam) if mu != lam]
    subsets = []
    for k in range(max_extra + 1):
        for extra in itertools.combinations(below, k):
            subsets.append(make_simple_subset(ctx, (lam,) + extra))
    return subsets


def suite_classification(r: int, top: int = 2, max_extra: int = 2) -> SuiteResult:
    """Reduction is idempotent, mutual morphisms coincide with isomorphism,
    and the full set of dominant weights below lam is normal."""
    ctx = L.RankedContext(r)
    res = SuiteResult(f"classification r={r}")
    for lam in _box(r, top):
        if not any(lam):
            continue
        full = normalization(ctx, lam)
        res.checked += 1
        if not is_normal(ctx, full):
            res.fail(lam=lam, check="normal")
        fam = _family(ctx, lam, max_extra) + [full]
        # the same data shifted by lam has the same support and differences
        fam += [make_simple_subset(ctx, [tuple(a + b for a, b in zip(w, lam)) for w in s])
                for s in fam[:4]]
        reduced = {s: reduce(ctx, s) for s in fam}
        for s, red in reduced.items():
            res.checked += 1
            if reduce(ctx, red) != red:
                res.fail(pi=s.to_dict(), check="idempotent")
        for s1, s2 in itertools.combinations(fam, 2):
            both = morphism_exists(ctx, s1, s2) and morphism_exists(ctx, s2, s1)
            iso = isomorphic(ctx, s1, s2)
            res.checked += 1
            if both != iso:
                res.fail(pi=s1.to_dict(), pi2=s2.to_dict(), both_ways=both, isomorphic=iso)
        if not equivalent(ctx, full, full):
            res.fail(lam=lam, check="equivalence reflexive")
    return res


SUITES = {
    "tables": lambda r, bound: suite_tables(r),
    "theorem": lambda r, bound: suite_theorem(r, bound if bound is not None else 2),
    "schurweyl": lambda r, bound: suite_schurweyl(r, bound if bound is not None else 6),
    "xi": lambda r, bound: suite_xi(r, bound if bound is not None else 8),
    "lemma": lambda r, bound: suite_lemma(r, bound if bound is not None else 2),
    "lemma-levi": lambda r, bound: suite_lemma(r, bound if bound is not None else 2, "levi"),
    "characters": lambda r, bound: suite_characters(ranks=(r,), top=bound if bound is not None else 3),
    "classification": lambda r, bound: suite_classification(r, bound if bound is not None else 2),
}
