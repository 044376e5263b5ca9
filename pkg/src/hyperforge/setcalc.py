"""The set calculus: products, chained products, downward closure, domination.

All functions are pure over immutable structures and operate on int bitmasks.
"""

from __future__ import annotations

from typing import Sequence

from .core import HyperStructure, members
from .errors import EmptyOperand, NoOrder, NotAssociative


def product(s: HyperStructure, A: int, B: int) -> int:
    """Union of a∘b over a in A, b in B.  Total tables keep this nonempty."""
    if A == 0 or B == 0:
        raise EmptyOperand("set product needs nonempty operands")
    return s._prod(A, B)


def product_chain(s: HyperStructure, operands: Sequence[int]) -> int:
    """Left fold of ``product`` over the operand sequence.

    Requires an associative table so the fold direction is immaterial; the
    left fold is fixed anyway to keep results deterministic for caching.
    """
    if not operands:
        raise EmptyOperand("empty operand sequence")
    if len(operands) > 2 and not s.is_associative:
        raise NotAssociative("chained products need an associative table")
    acc = operands[0]
    if acc == 0:
        raise EmptyOperand("set product needs nonempty operands")
    for B in operands[1:]:
        if B == 0:
            raise EmptyOperand("set product needs nonempty operands")
        acc = s._prod(acc, B)
    return acc


def down_closure(s: HyperStructure, A: int) -> int:
    """Everything lying below some element of A.  Extensive and idempotent."""
    if s.order is None:
        raise NoOrder("downward closure needs an order")
    return s._down(A)


def set_dominates(s: HyperStructure, A: int, B: int) -> bool:
    """Every element of A sits below some element of B (A ⊆ closure of B)."""
    if s.order is None:
        raise NoOrder("set domination needs an order")
    return A & ~s._down(B) == 0
