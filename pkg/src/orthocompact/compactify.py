"""Simple subsets of dominant weights as classifying data of simple linear
compactifications: reduction, equivalence, normality, morphisms."""

from __future__ import annotations

import json
from functools import lru_cache
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import lattice as L
from .errors import NoUniqueMax, NotAdjoint, OrthoError, SupportMismatch
from .orders import lambda_leq
from .triviality import is_trivial, little_brothers


@dataclass(frozen=True)
class SimpleSubset:
    r: int
    weights: tuple  # max first, then by depth below it and lexicographically
    max: tuple

    @property
    def ctx(self) -> L.RankedContext:
        return L.RankedContext(self.r)

    def __contains__(self, w):
        return tuple(w) in self.weights

    def __iter__(self):
        return iter(self.weights)

    def __len__(self):
        return len(self.weights)

    def differences(self) -> frozenset:
        """``Pi - lambda`` in omega coordinates."""
        return frozenset(tuple(a - b for a, b in zip(w, self.max)) for w in self.weights)

    def to_dict(self) -> dict:
        return {"r": self.r, "weights": [list(w) for w in self.weights], "max": list(self.max)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "SimpleSubset":
        sub = make_simple_subset(L.RankedContext(int(data["r"])), data["weights"])
        if "max" in data and tuple(data["max"]) != sub.max:
            raise NoUniqueMax(f"declared max {data['max']} is not the maximum {list(sub.max)}")
        return sub

    @classmethod
    def from_json(cls, text: str) -> "SimpleSubset":
        return cls.from_dict(json.loads(text))


def make_simple_subset(ctx: L.RankedContext, weights: Iterable[Sequence[int]]) -> SimpleSubset:
    ws = sorted({ctx.weight(w) for w in weights}, reverse=True)
    if not ws:
        raise NoUniqueMax("empty set of weights")
    for w in ws:
        L.require_dominant(w)
    first = ws[0]
    for w in ws[1:]:
        if not L.in_root_lattice(ctx, tuple(a - b for a, b in zip(w, first))):
            raise NotAdjoint(f"{w} and {first} lie in different cosets of the root lattice")
    maximal = [
        w for w in ws
        if not any(v != w and L.dominance_leq(ctx, w, v) for v in ws)
    ]
    if len(maximal) != 1:
        raise NoUniqueMax(f"dominance-maximal elements: {maximal}")
    top = maximal[0]

    def depth(w):
        d = L.weight_diff_alpha(ctx, top, w).ints()
        return (sum(d), d)

    return SimpleSubset(ctx.r, tuple(sorted(ws, key=depth)), top)


def _check_rank(ctx: L.RankedContext, *subsets: SimpleSubset) -> None:
    for s in subsets:
        if s.r != ctx.r:
            raise OrthoError(f"simple subset of rank {s.r} used with rank {ctx.r}")


def trivial_members(ctx: L.RankedContext, pi: SimpleSubset) -> set:
    _check_rank(ctx, pi)
    return {mu for mu in pi.weights if is_trivial(ctx, pi.max, mu)}


def reduce(ctx: L.RankedContext, pi: SimpleSubset) -> SimpleSubset:
    """Non-trivial members maximal for ``<=^lam``, together with ``lam``."""
    _check_rank(ctx, pi)
    return _reduce(pi)


@lru_cache(maxsize=65536)
def _reduce(pi: SimpleSubset) -> SimpleSubset:
    ctx = pi.ctx
    lam = pi.max
    nontrivial = [mu for mu in pi.weights if not is_trivial(ctx, lam, mu)]
    keep = [
        mu for mu in nontrivial
        if not any(nu != mu and lambda_leq(ctx, lam, mu, nu) for nu in nontrivial)
    ]
    return make_simple_subset(ctx, keep + [lam])


def equivalent(ctx: L.RankedContext, pi: SimpleSubset, pi2: SimpleSubset) -> bool:
    _check_rank(ctx, pi, pi2)
    return L.support(pi.max) == L.support(pi2.max) and pi.differences() == pi2.differences()


def morphism_exists(ctx: L.RankedContext, pi: SimpleSubset, pi2: SimpleSubset) -> bool:
    """Whether ``X_pi`` maps equivariantly onto ``X_pi2`` (same closed orbit).

    Every non-maximal ``mu'`` of the reduced ``pi2`` must have
    ``mu' - lam' <=^lam mu - lam`` for some non-maximal ``mu`` of the reduced ``pi``.
    """
    _check_rank(ctx, pi, pi2)
    lam, lam2 = pi.max, pi2.max
    if L.support(lam) != L.support(lam2):
        raise SupportMismatch(f"Supp{lam} != Supp{lam2}")
    red = [mu for mu in reduce(ctx, pi).weights if mu != lam]
    red2 = [mu for mu in reduce(ctx, pi2).weights if mu != lam2]
    diffs = [tuple(a - b for a, b in zip(mu, lam)) for mu in red]
    for mu2 in red2:
        d2 = tuple(a - b for a, b in zip(mu2, lam2))
        if not any(lambda_leq(ctx, lam, d2, d) for d in diffs):
            return False
    return True


def isomorphic(ctx: L.RankedContext, pi: SimpleSubset, pi2: SimpleSubset) -> bool:
    return equivalent(ctx, reduce(ctx, pi), reduce(ctx, pi2))


def is_normal(ctx: L.RankedContext, pi: SimpleSubset) -> bool:
    _check_rank(ctx, pi)
    return little_brothers(ctx, pi.max) <= set(pi.weights)


def normalization(ctx: L.RankedContext, lam: Sequence[int]) -> SimpleSubset:
    """The simple subset of all dominant weights below ``lam``."""
    return make_simple_subset(ctx, L.dominant_below(ctx, lam))
