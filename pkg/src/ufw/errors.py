"""Shared exception types.

Every error that carries a mathematical witness stores it on the exception so
callers (and the CLI) can report the exact violating instance.
"""


class UfwError(Exception):
    """Base class for all package errors."""


class CapExceeded(UfwError):
    """An exhaustive enumeration would exceed its configured size cap."""


class IndexOutOfRange(UfwError, IndexError):
    """An element or subset referenced an index outside the ground set."""


class NotFIP(UfwError):
    """Family lacks the finite intersection property.

    ``witness`` is the offending sub-family (tuple of sorted index tuples).
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotAFilter(UfwError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotUltrafilter(UfwError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotMeasure(UfwError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotAssociative(UfwError):
    """Cayley table fails associativity; ``witness`` is the first bad triple."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotCommutative(UfwError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotIdempotent(UfwError):
    """``which`` names the offending element."""

    def __init__(self, message, which=None):
        super().__init__(message)
        self.which = which


class PrecisionExhausted(UfwError):
    """A floor/nearest decision could not be certified at the precision cap.

    ``interval`` is the final (lo, hi) rational interval that still straddles
    the decision boundary; ``node`` identifies the expression node.
    """

    def __init__(self, message, node=None, interval=None):
        super().__init__(message)
        self.node = node
        self.interval = interval


class BudgetExhausted(UfwError):
    """A witness search hit its node or time budget before deciding.

    Distinguished from a proven-absent answer, which is exhaustive.
    ``nodes`` is the number of search nodes expanded.
    """

    def __init__(self, message, nodes=None):
        super().__init__(message)
        self.nodes = nodes


class Underdetermined(UfwError):
    """Too few generators for the requested fitting degree."""


class Inconclusive(UfwError):
    """A sampled diagnostic failed to stabilize within its cap."""


class ParseError(UfwError):
    """Syntax error; ``position`` is a 0-based offset into the input text."""

    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position


class ArityMismatch(UfwError):
    """A symbol was used with the wrong number of arguments."""


class NotStrictOrder(UfwError):
    """An aggregation rule produced a non-total-order outcome.

    ``profile_index`` identifies the offending profile.
    """

    def __init__(self, message, profile_index=None):
        super().__init__(message)
        self.profile_index = profile_index
