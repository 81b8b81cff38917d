"""Text forms ``w:[n1,...,nr]`` for weights and ``a:[a1,...,ar]`` (entries
integers or ``p/2``) for root-lattice vectors."""

from __future__ import annotations

import re
from fractions import Fraction

from .lattice import RootVec

_PAT = re.compile(r"^\s*([wa]):\[([^\]]*)\]\s*$")


class ParseError(ValueError):
    pass


def _split(text: str, tag: str) -> list:
    m = _PAT.match(text)
    if not m or m.group(1) != tag:
        raise ParseError(f"expected {tag}:[...], got {text!r}")
    body = m.group(2).strip()
    if not body:
        raise ParseError(f"empty vector in {text!r}")
    return [p.strip() for p in body.split(",")]


def parse_weight(text: str) -> tuple:
    try:
        return tuple(int(p) for p in _split(text, "w"))
    except ValueError as e:
        if isinstance(e, ParseError):
            raise
        raise ParseError(f"weight entries must be integers: {text!r}") from None


def parse_rootvec(text: str) -> RootVec:
    out = []
    for p in _split(text, "a"):
        try:
            x = Fraction(p)
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"bad entry {p!r} in {text!r}") from None
        if x.denominator not in (1, 2):
            raise ParseError(f"entries must be integers or halves: {p!r}")
        out.append(x)
    return RootVec.from_coeffs(out)


def parse_index_list(text: str) -> tuple:
    try:
        return tuple(int(p) for p in text.split(",") if p.strip())
    except ValueError:
        raise ParseError(f"expected comma separated indices, got {text!r}") from None


def fmt_weight(w) -> str:
    return "w:[" + ",".join(str(x) for x in w) + "]"


def fmt_alpha(a) -> str:
    return "a:[" + ",".join(str(x) for x in a) + "]"
