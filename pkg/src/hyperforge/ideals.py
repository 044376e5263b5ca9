"""Ideal predicates, generated ideals, idempotence, and exhaustive enumeration.

Two flavors everywhere: Ordered adds the downward-closure condition (and the
closure operator in the generator formulas); Plain drops both.  The plain
quasi-ideal condition Q*H ∩ H*Q ⊆ Q is a symmetric extension of the ordered
definition (the plain theory never uses quasi-ideals) and is only offered for
exploratory use.
"""

from __future__ import annotations

from enum import Enum

from .core import HyperStructure, Verdict, full_mask, members, nonempty_submasks
from .errors import EmptySubset, EngineError, NoOrder
from .setcalc import down_closure, product, product_chain


class IdealKind(str, Enum):
    RIGHT = "right"
    LEFT = "left"
    TWO_SIDED = "two-sided"
    BI = "bi"
    QUASI = "quasi"


class Flavor(str, Enum):
    ORDERED = "ordered"
    PLAIN = "plain"


def _require(s: HyperStructure, A: int, flavor: Flavor) -> None:
    if A == 0:
        raise EmptySubset("ideal predicates need a nonempty subset")
    if flavor is Flavor.ORDERED and s.order is None:
        raise NoOrder("ordered flavor needs an order")


def is_ideal(s: HyperStructure, A: int, kind: IdealKind, flavor: Flavor) -> Verdict:
    """Check the kind's absorption condition(s) plus downward closure when
    ordered.  The witness is the least offending element."""
    _require(s, A, flavor)
    H = full_mask(s.n)
    ordered = flavor is Flavor.ORDERED

    if kind in (IdealKind.RIGHT, IdealKind.TWO_SIDED):
        excess = product(s, A, H) & ~A
        if excess:
            return Verdict(False, members(excess)[0])
    if kind in (IdealKind.LEFT, IdealKind.TWO_SIDED):
        excess = product(s, H, A) & ~A
        if excess:
            return Verdict(False, members(excess)[0])
    if kind is IdealKind.BI:
        # explicit left grouping so the check is defined on hypergroupoids too
        excess = product(s, product(s, A, H), A) & ~A
        if excess:
            return Verdict(False, members(excess)[0])
    if kind is IdealKind.QUASI:
        if ordered:
            lhs = down_closure(s, product(s, A, H)) & down_closure(s, product(s, H, A))
        else:
            lhs = product(s, A, H) & product(s, H, A)
        excess = lhs & ~A
        if excess:
            return Verdict(False, members(excess)[0])

    if ordered:
        excess = down_closure(s, A) & ~A
        if excess:
            return Verdict(False, members(excess)[0])
    return Verdict(True)


def generate_ideal(s: HyperStructure, A: int, kind: IdealKind, flavor: Flavor) -> int:
    """Closed-form least ideal of the kind containing A.

    Right: A ∪ A*H, Left: A ∪ H*A, Two-sided: A ∪ H*A ∪ A*H ∪ H*A*H — each
    wrapped in the downward closure for the ordered flavor.  The result is
    re-checked with is_ideal; minimality is cross-checked by enumeration in
    the test suite.
    """
    _require(s, A, flavor)
    if kind not in (IdealKind.RIGHT, IdealKind.LEFT, IdealKind.TWO_SIDED):
        raise ValueError(f"no generator formula for kind {kind!r}")
    H = full_mask(s.n)
    out = A
    if kind in (IdealKind.RIGHT, IdealKind.TWO_SIDED):
        out |= product(s, A, H)
    if kind in (IdealKind.LEFT, IdealKind.TWO_SIDED):
        out |= product(s, H, A)
    if kind is IdealKind.TWO_SIDED:
        out |= product_chain(s, [H, A, H])
    if flavor is Flavor.ORDERED:
        out = down_closure(s, out)
    check = is_ideal(s, out, kind, flavor)
    if not check.ok:
        raise EngineError(
            f"generated {kind.value} ideal of {A:#x} is not an ideal "
            f"(witness {check.witness})")
    return out


def is_idempotent_subset(s: HyperStructure, A: int, flavor: Flavor) -> bool:
    """Ordered: closure of A*A equals A; plain: A*A equals A."""
    _require(s, A, flavor)
    square = product(s, A, A)
    if flavor is Flavor.ORDERED:
        square = down_closure(s, square)
    return square == A


def is_subidempotent_subset(s: HyperStructure, A: int, flavor: Flavor) -> bool:
    """Ordered: closure of A*A inside A; plain: A*A inside A."""
    _require(s, A, flavor)
    square = product(s, A, A)
    if flavor is Flavor.ORDERED:
        square = down_closure(s, square)
    return square & ~A == 0


def enumerate_ideals(s: HyperStructure, kind: IdealKind, flavor: Flavor) -> list[int]:
    """All nonempty subsets passing is_ideal, ascending bit-pattern order.

    Cached per structure: enumeration is the workhorse of the theorem suite.
    """
    key = ("ideals", kind, flavor)
    cached = s._cache.get(key)
    if cached is None:
        cached = [A for A in nonempty_submasks(s.n)
                  if is_ideal(s, A, kind, flavor).ok]
        s._cache[key] = cached
    return cached
