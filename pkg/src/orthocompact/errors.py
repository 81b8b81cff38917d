"""Exception types raised on ill-posed inputs.

All of them derive from :class:`OrthoError` (itself a ``ValueError``) so that
callers can tell an ill-posed question apart from a negative answer.
"""


class OrthoError(ValueError):
    pass


class RankError(OrthoError):
    pass


class NotDominant(OrthoError):
    pass


class NotBelow(OrthoError):
    """``mu <= lam`` fails in the dominance order (including spin-coset pairs)."""


class NotInRootCoset(OrthoError):
    pass


class NonIntegral(OrthoError):
    pass


class NotNonNegative(OrthoError):
    pass


class NotAdjoint(OrthoError):
    pass


class NoUniqueMax(OrthoError):
    pass


class SupportMismatch(OrthoError):
    pass


class NotInXi(OrthoError):
    pass


class BadIndexSet(OrthoError):
    pass
