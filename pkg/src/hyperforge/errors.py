"""Exception types shared by every hyperforge module."""


class HyperforgeError(Exception):
    """Base class for all engine errors."""


class EmptyEntry(HyperforgeError):
    """A hyperoperation table cell is empty (totality violated)."""


class DimensionMismatch(HyperforgeError):
    """A matrix or table does not match the carrier size."""


class NoOrder(HyperforgeError):
    """An order-dependent operation was called on an unordered structure."""


class EmptyOperand(HyperforgeError):
    """A set product received an empty operand."""


class EmptySubset(HyperforgeError):
    """A predicate that requires a nonempty subset received the empty set."""


class NotAssociative(HyperforgeError):
    """A chained product was requested on a structure whose table is not
    associative (or has not been checked)."""


class CarrierMismatch(HyperforgeError):
    """Two fuzzy subsets live on carriers of different sizes."""


class InvalidGrid(HyperforgeError):
    """A grade grid is missing 0/1 or contains values outside [0, 1]."""


class NotACongruence(HyperforgeError):
    """A partition fails the congruence precondition of the operation."""


class CarrierTooLarge(HyperforgeError):
    """A Bell-number partition sweep would exceed the configured budget."""


class BudgetExceeded(HyperforgeError):
    """An enumeration or quantifier sweep would exceed the configured budget."""


class EngineError(HyperforgeError):
    """Internal inconsistency: two code paths that must agree disagreed."""
