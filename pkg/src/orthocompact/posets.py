"""The posets T(I,2) of difference vectors over a fixed support I, their
Hasse diagrams under ``<=^I`` and the antichains that make up T(I).

Vertices are integral alpha-coordinate vectors ``(a_1, ..., a_r)``.  The sets
are infinite in general, so everything is cut off at a coefficient bound.
"""

from __future__ import annotations

import itertools
import json
import warnings
from dataclasses import dataclass, field
from typing import Iterable

from . import lattice as L
from .errors import BadIndexSet
from .orders import nphi_membership
from .triviality import l_index

ROOT_HEIGHT = 2  # largest coefficient of any positive root


@dataclass
class HassePoset:
    r: int
    I: tuple
    bound: int
    vertices: list = field(default_factory=list)
    edges: list = field(default_factory=list)
    boundary: set = field(default_factory=set)

    def to_dict(self) -> dict:
        return {
            "r": self.r,
            "I": list(self.I),
            "bound": self.bound,
            "vertices": [list(v) for v in self.vertices],
            "edges": [list(e) for e in self.edges],
            "boundary": sorted(self.boundary),
        }


def _index_set(ctx: L.RankedContext, I: Iterable[int]) -> tuple:
    I = tuple(sorted(set(int(i) for i in I)))
    if not I:
        raise BadIndexSet("index set must be non-empty")
    if I[0] < 1 or I[-1] > ctx.r:
        raise BadIndexSet(f"indices must lie in 1..{ctx.r}, got {list(I)}")
    return I


def lambda_of(ctx: L.RankedContext, I: Iterable[int]) -> tuple:
    """The dominant weight ``sum_{i in I} omega_i``."""
    I = _index_set(ctx, I)
    return tuple(1 if i + 1 in I else 0 for i in range(ctx.r))


def theta_I(ctx: L.RankedContext, I: Iterable[int]) -> tuple:
    """``sum_{i=q(I)}^r alpha_i``, the difference between ``lam_I`` and its
    little brother."""
    I = _index_set(ctx, I)
    if ctx.r in I:
        raise BadIndexSet("alpha_r must not belong to I")
    q = I[-1]
    return tuple(1 if i >= q else 0 for i in range(1, ctx.r + 1))


def in_T2(ctx: L.RankedContext, I: Iterable[int], a) -> bool:
    I = _index_set(ctx, I)
    a = tuple(a)
    r = ctx.r
    if a[-1] % 2 == 0:
        return False
    if not L.support(L.plus_part(L.alpha_to_weight(ctx, a))) <= set(I):
        return False
    return a[-1] < 2 * min(r - l_index(ctx, a), r - I[-1])


def _box(r: int, bound: int):
    # a_r odd is necessary, so only odd last coordinates are visited
    for head in itertools.product(range(bound + 1), repeat=r - 1):
        for last in range(1, bound + 1, 2):
            yield head + (last,)


def enum_T2(ctx: L.RankedContext, I: Iterable[int], bound: int) -> list:
    """Elements of T(I,2) with every coefficient at most ``bound``, sorted by
    height and then lexicographically."""
    I = _index_set(ctx, I)
    if ctx.r in I:
        warnings.warn("alpha_r in I: T(I,2) is empty", stacklevel=2)
        return []
    found = [a for a in _box(ctx.r, bound) if in_T2(ctx, I, a)]
    return sorted(found, key=lambda a: (sum(a), a))


def leq_I(ctx: L.RankedContext, I: Iterable[int], t1, t2) -> bool:
    """``t1 <=^I t2``: ``t2 - t1`` is a sum of positive roots not orthogonal
    to ``lam_I``."""
    d = tuple(y - x for x, y in zip(t1, t2))
    if min(d) < 0:
        return False
    return nphi_membership(ctx, lambda_of(ctx, I), d)


def _covers(ctx, I, verts):
    below = {
        (i, j) for i, j in itertools.permutations(range(len(verts)), 2)
        if leq_I(ctx, I, verts[i], verts[j])
    }
    out = []
    for i, j in sorted(below):
        if not any((i, k) in below and (k, j) in below for k in range(len(verts))):
            out.append((i, j))
    return out


def hasse(ctx: L.RankedContext, I: Iterable[int], vertices, bound: int | None = None) -> HassePoset:
    """Covering edges among ``vertices``.

    If ``t1 <= t2`` then everything in between is coordinatewise below ``t2``,
    so covers between vertices of a bounding box are already exact.  Vertices
    with a coefficient within a root height of ``bound`` may have further
    covers outside the box and are flagged.
    """
    I = _index_set(ctx, I)
    verts = [tuple(v) for v in vertices]
    if bound is None:
        bound = max((max(v) for v in verts), default=0)
    edges = _covers(ctx, I, verts)
    boundary = {i for i, v in enumerate(verts) if max(v) > bound - ROOT_HEIGHT}
    return HassePoset(ctx.r, I, bound, verts, edges, boundary)


def T2_poset(ctx: L.RankedContext, I: Iterable[int], bound: int) -> HassePoset:
    I = _index_set(ctx, I)
    return hasse(ctx, I, enum_T2(ctx, I, bound), bound)


def enum_antichains(ctx: L.RankedContext, poset: HassePoset, max_size: int) -> list:
    """Antichains (as sorted index tuples, the empty one included) of size
    at most ``max_size``."""
    n = len(poset.vertices)
    comparable = [[False] * n for _ in range(n)]
    for i, j in itertools.permutations(range(n), 2):
        if leq_I(ctx, poset.I, poset.vertices[i], poset.vertices[j]):
            comparable[i][j] = comparable[j][i] = True

    out = [()]
    frontier = [()]
    for _ in range(max_size):
        nxt = []
        for chain in frontier:
            start = chain[-1] + 1 if chain else 0
            for k in range(start, n):
                if not any(comparable[k][c] for c in chain):
                    nxt.append(chain + (k,))
        out.extend(nxt)
        frontier = nxt
        if not frontier:
            break
    return out


def _tup(v) -> str:
    return "(" + ",".join(str(x) for x in v) + ")"


def _header(poset: HassePoset) -> str:
    I = ",".join(str(i) for i in poset.I)
    return f"T(I,2) for r={poset.r}, I={{{I}}}, coefficients <= {poset.bound} (truncated)"


def render(poset: HassePoset, format: str = "text") -> str:
    if format == "json":
        d = {"schema": "orthocompact/1"}
        d.update(poset.to_dict())
        return json.dumps(d, sort_keys=False) + "\n"
    if format == "dot":
        lines = [f"// {_header(poset)}", "digraph T {"]
        for i, v in enumerate(poset.vertices):
            extra = ", style=dashed" if i in poset.boundary else ""
            lines.append(f'  v{i} [label="{_tup(v)}"{extra}];')
        for i, j in poset.edges:
            lines.append(f"  v{i} -> v{j};")
        lines.append("}")
        return "\n".join(lines) + "\n"
    if format == "text":
        lines = [_header(poset)]
        if not poset.vertices:
            lines.append("(empty)")
        for i, v in enumerate(poset.vertices):
            succ = [_tup(poset.vertices[j]) for a, j in poset.edges if a == i]
            mark = " *" if i in poset.boundary else ""
            arrow = " -> " + ", ".join(succ) if succ else ""
            lines.append(f"{_tup(v)}{mark}{arrow}")
        if poset.boundary:
            lines.append("* covers may continue past the bound")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {format!r}")
