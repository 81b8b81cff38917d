"""Weight and root lattices of type B_r (Bourbaki numbering).

Weights are plain tuples of ints in fundamental-weight coordinates.  Vectors in
simple-root coordinates are :class:`RootVec` instances storing twice each
coefficient, so spin weights such as ``omega_r`` stay exact.  Integral root
vectors (the common case for differences of weights in the same coset) may be
passed to most functions as plain int tuples as well.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .errors import NonIntegral, NotDominant, NotNonNegative, RankError

MIN_RANK = 2
MAX_RANK = 16

Weight = tuple  # tuple[int, ...] in omega coordinates

SHORT = "short"
LONG = "long"


@dataclass(frozen=True)
class RankedContext:
    """Rank ``r`` of ``Spin(2r+1)`` plus cached Cartan data."""

    r: int

    def __post_init__(self):
        if not isinstance(self.r, int) or not MIN_RANK <= self.r <= MAX_RANK:
            raise RankError(f"rank must be an integer in [{MIN_RANK}, {MAX_RANK}], got {self.r!r}")

    @cached_property
    def pairing(self) -> tuple:
        """``pairing[i][j] = <alpha_i, alpha_j^vee>`` (0-based indices)."""
        r = self.r
        rows = []
        for i in range(r):
            row = [0] * r
            row[i] = 2
            if i > 0:
                row[i - 1] = -1
            if i < r - 1:
                row[i + 1] = -1
            rows.append(row)
        rows[r - 2][r - 1] = -2
        return tuple(tuple(row) for row in rows)

    @cached_property
    def simple_roots_omega(self) -> tuple:
        """Simple roots written in omega coordinates (rows of :attr:`pairing`)."""
        return self.pairing

    @cached_property
    def roots(self) -> tuple:
        return tuple(_build_positive_roots(self.r))

    def zero(self) -> Weight:
        return (0,) * self.r

    def omega(self, i: int) -> Weight:
        """Fundamental weight ``omega_i`` (1-based)."""
        if not 1 <= i <= self.r:
            raise IndexError(f"fundamental weight index {i} out of range 1..{self.r}")
        w = [0] * self.r
        w[i - 1] = 1
        return tuple(w)

    def weight(self, coeffs: Iterable) -> Weight:
        w = tuple(int(c) for c in coeffs)
        if len(w) != self.r:
            raise RankError(f"expected {self.r} coordinates, got {len(w)}")
        return w


@dataclass(frozen=True, order=True)
class RootVec:
    """Vector in simple-root coordinates, stored as ``2 * a_i``."""

    doubled: tuple

    @classmethod
    def from_coeffs(cls, coeffs: Iterable) -> "RootVec":
        doubled = []
        for c in coeffs:
            f = Fraction(c) * 2
            if f.denominator != 1:
                raise NonIntegral(f"alpha coefficient {c} does not have denominator dividing 2")
            doubled.append(int(f))
        return cls(tuple(doubled))

    @property
    def coeffs(self) -> tuple:
        return tuple(Fraction(d, 2) for d in self.doubled)

    @property
    def is_integral(self) -> bool:
        return all(d % 2 == 0 for d in self.doubled)

    def ints(self) -> tuple:
        if not self.is_integral:
            raise NonIntegral(f"{self} is not in the root lattice")
        return tuple(d // 2 for d in self.doubled)

    def __add__(self, other: "RootVec") -> "RootVec":
        return RootVec(tuple(a + b for a, b in zip(self.doubled, other.doubled)))

    def __sub__(self, other: "RootVec") -> "RootVec":
        return RootVec(tuple(a - b for a, b in zip(self.doubled, other.doubled)))

    def __len__(self):
        return len(self.doubled)

    def __str__(self):
        parts = []
        for d in self.doubled:
            parts.append(str(d // 2) if d % 2 == 0 else f"{d}/2")
        return "a:[" + ",".join(parts) + "]"


@dataclass(frozen=True)
class Root:
    vec: tuple  # integral alpha coordinates
    length: str  # SHORT or LONG

    @property
    def is_short(self) -> bool:
        return self.length == SHORT

    @property
    def is_long(self) -> bool:
        return self.length == LONG

    def __str__(self):
        return "(" + ",".join(map(str, self.vec)) + ")"


def root_sort_key(vec: Sequence[int]):
    return (sum(vec), tuple(vec))


def _build_positive_roots(r: int) -> list:
    roots = []
    for j in range(r):
        for k in range(j + 1, r):
            # sum_{j+1}^{k} alpha_i, then the same plus 2 * sum_{k+1}^{r} alpha_i
            a = [0] * r
            for i in range(j, k):
                a[i] = 1
            roots.append(Root(tuple(a), LONG))
            b = list(a)
            for i in range(k, r):
                b[i] = 2
            roots.append(Root(tuple(b), LONG))
        s = [0] * r
        for i in range(j, r):
            s[i] = 1
        roots.append(Root(tuple(s), SHORT))
    roots.sort(key=lambda rt: root_sort_key(rt.vec))
    return roots


def alpha_ints(v, r: int | None = None) -> tuple:
    """Integral alpha coordinates of ``v`` (RootVec or int sequence)."""
    if isinstance(v, RootVec):
        out = v.ints()
    else:
        out = []
        for c in v:
            f = Fraction(c)
            if f.denominator != 1:
                raise NonIntegral(f"{tuple(v)} is not integral")
            out.append(int(f))
        out = tuple(out)
    if r is not None and len(out) != r:
        raise RankError(f"expected {r} coordinates, got {len(out)}")
    return out


def alpha_nonneg_ints(v, r: int | None = None) -> tuple:
    out = alpha_ints(v, r)
    if any(c < 0 for c in out):
        raise NotNonNegative(f"{out} has a negative alpha coefficient")
    return out


def _as_rootvec(v) -> RootVec:
    return v if isinstance(v, RootVec) else RootVec.from_coeffs(v)


def varpi(ctx: RankedContext, k: int) -> RootVec:
    """``sum_{j<k} j alpha_j + k sum_{j>=k} alpha_j`` for ``0 <= k <= r``."""
    r = ctx.r
    if not 0 <= k <= r:
        raise IndexError(f"varpi index {k} out of range 0..{r}")
    coeffs = [j if j < k else k for j in range(1, r + 1)]
    return RootVec(tuple(2 * c for c in coeffs))


def omega_to_alpha(ctx: RankedContext, w: Sequence[int]) -> RootVec:
    w = ctx.weight(w)
    r = ctx.r
    doubled = [0] * r
    for k, n in enumerate(w, start=1):
        if n == 0:
            continue
        base = varpi(ctx, k).doubled
        # omega_k = varpi_k for k < r, omega_r = varpi_r / 2
        scale = 2 * n if k < r else n
        for i in range(r):
            doubled[i] += scale * base[i] // 2
    return RootVec(tuple(doubled))


def alpha_to_omega_doubled(ctx: RankedContext, v) -> tuple:
    """``2 <v, alpha_j^vee>`` for each j, as ints."""
    v = _as_rootvec(v)
    A = ctx.pairing
    r = ctx.r
    return tuple(sum(v.doubled[i] * A[i][j] for i in range(r)) for j in range(r))


def alpha_to_omega(ctx: RankedContext, v) -> tuple:
    """Pairings ``<v, alpha_j^vee>`` as Fractions (ints when integral)."""
    out = []
    for d in alpha_to_omega_doubled(ctx, v):
        out.append(d // 2 if d % 2 == 0 else Fraction(d, 2))
    return tuple(out)


def alpha_to_weight(ctx: RankedContext, v) -> Weight:
    """Like :func:`alpha_to_omega` but insists on an integral weight."""
    dbl = alpha_to_omega_doubled(ctx, v)
    if any(d % 2 for d in dbl):
        raise NonIntegral(f"{v} does not pair integrally with the coroots")
    return tuple(d // 2 for d in dbl)


def plus_part(w: Sequence[int]) -> Weight:
    return tuple(n if n > 0 else 0 for n in w)


def minus_part(w: Sequence[int]) -> Weight:
    return tuple(-n if n < 0 else 0 for n in w)


def support(w: Sequence) -> frozenset:
    """1-based indices of the non-zero coordinates."""
    return frozenset(i for i, n in enumerate(w, start=1) if n != 0)


def support_delta(v) -> frozenset:
    return support(alpha_ints(v))


def is_dominant(w: Sequence[int]) -> bool:
    return all(n >= 0 for n in w)


def require_dominant(w: Sequence[int], name: str = "weight") -> None:
    if not is_dominant(w):
        raise NotDominant(f"{name} {tuple(w)} is not dominant")


def weight_diff_alpha(ctx: RankedContext, lam: Sequence[int], mu: Sequence[int]) -> RootVec:
    """``lam - mu`` in alpha coordinates."""
    return omega_to_alpha(ctx, tuple(a - b for a, b in zip(ctx.weight(lam), ctx.weight(mu))))


def in_root_lattice(ctx: RankedContext, w: Sequence[int]) -> bool:
    return omega_to_alpha(ctx, w).is_integral


def dominance_leq(ctx: RankedContext, mu: Sequence[int], lam: Sequence[int]) -> bool:
    d = weight_diff_alpha(ctx, lam, mu)
    return d.is_integral and all(x >= 0 for x in d.doubled)


def rational_dominance_leq(ctx: RankedContext, mu: Sequence[int], lam: Sequence[int]) -> bool:
    return all(x >= 0 for x in weight_diff_alpha(ctx, lam, mu).doubled)


def positive_roots(ctx: RankedContext) -> list:
    return list(ctx.roots)


def _root_filter(filter: str):
    if filter == "all":
        return lambda rt: True
    if filter == SHORT:
        return lambda rt: rt.is_short
    if filter == LONG:
        return lambda rt: rt.is_long
    raise ValueError(f"unknown root filter {filter!r}")


def phi_plus_of(ctx: RankedContext, lam: Sequence[int], filter: str = "all") -> list:
    """Positive roots whose alpha-support meets ``Supp(lam)``."""
    supp = support(ctx.weight(lam))
    keep = _root_filter(filter)
    return [
        rt for rt in ctx.roots
        if keep(rt) and any(rt.vec[i - 1] for i in supp)
    ]


def roots_for_support(ctx: RankedContext, supp: Iterable[int], filter: str = "all") -> list:
    w = [0] * ctx.r
    for i in supp:
        w[i - 1] = 1
    return phi_plus_of(ctx, tuple(w), filter)


def root_omega(ctx: RankedContext, root: Root) -> Weight:
    return alpha_to_weight(ctx, root.vec)


def dominant_below(ctx: RankedContext, lam: Sequence[int]) -> list:
    """All dominant ``mu <= lam``, sorted by depth then lexicographically (lam first)."""
    lam = ctx.weight(lam)
    require_dominant(lam)
    root_ws = [root_omega(ctx, rt) for rt in ctx.roots]
    seen = {lam}
    queue = deque([lam])
    while queue:
        mu = queue.popleft()
        for rw in root_ws:
            nu = tuple(a - b for a, b in zip(mu, rw))
            if nu not in seen and is_dominant(nu):
                seen.add(nu)
                queue.append(nu)
    lam_alpha = omega_to_alpha(ctx, lam).doubled

    def key(mu):
        d = tuple(a - b for a, b in zip(lam_alpha, omega_to_alpha(ctx, mu).doubled))
        return (sum(d), d)

    return sorted(seen, key=key)
