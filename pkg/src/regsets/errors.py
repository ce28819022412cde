"""Exception types raised by the public API.

Every domain error subclasses RegsetsError so callers (and the CLI) can
catch one base class. Errors that point at a concrete offender carry it as
an attribute (``triple``, ``block``, ...) in addition to the message.
"""

from __future__ import annotations

__all__ = [
    "RegsetsError",
    "NotAGroup",
    "OrderCapExceeded",
    "EmptyGeneratorSet",
    "IdOutOfRange",
    "UnknownCatalogName",
    "InputFormatError",
    "NotASubgroup",
    "XInSubgroup",
    "SubgroupNotProper",
    "SubgroupTrivial",
    "NotSelfPaired",
    "OracleCapExceeded",
    "BOutOfRange",
    "AOutOfRange",
    "TOddInternal",
    "OddBNeedsInvolution",
    "ParityViolation",
    "PerfectCodeRequired",
    "NotInverseClosed",
    "IdentityInS",
    "CapExceeded",
    "EdgeNotFound",
    "IndexOutOfRange",
]


class RegsetsError(Exception):
    """Base class for all domain errors in this package."""


class NotAGroup(RegsetsError):
    """A multiplication table violates one of the group axioms."""

    def __init__(self, message: str, triple: tuple[int, int, int] | None = None):
        super().__init__(message)
        self.triple = triple


class OrderCapExceeded(RegsetsError):
    """Generated group grew beyond the configured order cap."""


class EmptyGeneratorSet(RegsetsError):
    """A generating set must contain at least one permutation."""


class IdOutOfRange(RegsetsError):
    """An element id is outside 0..order-1."""


class UnknownCatalogName(RegsetsError):
    """The catalog does not define a group of the given name."""


class InputFormatError(RegsetsError):
    """A JSON group/subgroup description is malformed."""


class NotASubgroup(RegsetsError):
    """A member list is not closed under product and inverse."""


class XInSubgroup(RegsetsError):
    """The coset base point must lie outside the subgroup."""


class SubgroupNotProper(RegsetsError):
    """The whole group is not a valid subgroup argument here."""


class SubgroupTrivial(RegsetsError):
    """The identity subgroup is not a valid argument here."""


class NotSelfPaired(RegsetsError):
    """Operation requires HxH to coincide with Hx^{-1}H."""


class OracleCapExceeded(RegsetsError):
    """Group order exceeds the backtracking oracle cap."""


class BOutOfRange(RegsetsError):
    """Requested per-coset intersection count b is outside 0..|H|."""


class AOutOfRange(RegsetsError):
    """Requested inner valency a is outside 0..|H|-1."""


class TOddInternal(RegsetsError):
    """A bundle builder received a block whose coset count has the wrong parity."""


class OddBNeedsInvolution(RegsetsError):
    """Odd b on a self-paired odd block requires an involution per coset."""

    def __init__(self, message: str, block=None):
        super().__init__(message)
        self.block = block


class ParityViolation(RegsetsError):
    """Inner valency a has the wrong parity for this subgroup order."""


class PerfectCodeRequired(RegsetsError):
    """Odd b is only constructible when the subgroup is a perfect code."""

    def __init__(self, message: str, block=None):
        super().__init__(message)
        self.block = block


class NotInverseClosed(RegsetsError):
    """A connection set must equal its own set of inverses."""


class IdentityInS(RegsetsError):
    """A connection set must not contain the identity."""


class CapExceeded(RegsetsError):
    """Group order exceeds the exhaustive search cap."""


class EdgeNotFound(RegsetsError):
    """A labeled edge lookup addressed a pair or layer that does not exist."""


class IndexOutOfRange(RegsetsError):
    """A vertex index is outside the expected range."""
