"""Prime / weakly prime / semiprime subset predicates and ideal-chain checks.

Two prime families coexist on purpose: the bare product-containment condition
(PRIME_SIMPLE) and the variant that adds the all-or-nothing split clause
(PRIME_WITH_SPLIT).  Weakly-prime quantifies over two-sided ideals of the
requested flavor.  PRIME_SIMPLE and SEMIPRIME use the element-wise forms; the
subset-quantified definitions are equivalent and re-checked in the tests.
"""

from __future__ import annotations

from enum import Enum

from .core import HyperStructure, Verdict
from .errors import EmptySubset
from .ideals import Flavor, IdealKind, enumerate_ideals
from .setcalc import product


class PrimeVariant(str, Enum):
    PRIME_SIMPLE = "prime"
    PRIME_WITH_SPLIT = "prime-split"
    WEAKLY_PRIME = "weakly-prime"
    SEMIPRIME = "semiprime"


def _elementwise_prime(s: HyperStructure, T: int) -> Verdict:
    n, table = s.n, s.op.table
    for a in range(n):
        for b in range(n):
            if table[a][b] & ~T == 0 and not ((T >> a | T >> b) & 1):
                return Verdict(False, (a, b))
    return Verdict(True)


def _split_condition(s: HyperStructure, T: int) -> Verdict:
    n, table = s.n, s.op.table
    for a in range(n):
        for b in range(n):
            cell = table[a][b]
            if cell & T and cell & ~T:
                return Verdict(False, (a, b))
    return Verdict(True)


def _semiprime(s: HyperStructure, T: int) -> Verdict:
    for a in range(s.n):
        if s.op.table[a][a] & ~T == 0 and not (T >> a & 1):
            return Verdict(False, a)
    return Verdict(True)


def _weakly_prime(s: HyperStructure, T: int, flavor: Flavor) -> Verdict:
    ideals = enumerate_ideals(s, IdealKind.TWO_SIDED, flavor)
    for A in ideals:
        for B in ideals:
            if product(s, A, B) & ~T == 0 and (A & ~T) and (B & ~T):
                return Verdict(False, (A, B))
    return Verdict(True)


def is_prime_subset(s: HyperStructure, T: int, variant: PrimeVariant,
                    flavor: Flavor) -> Verdict:
    if T == 0:
        raise EmptySubset("prime predicates need a nonempty subset")
    if variant is PrimeVariant.PRIME_SIMPLE:
        return _elementwise_prime(s, T)
    if variant is PrimeVariant.PRIME_WITH_SPLIT:
        base = _elementwise_prime(s, T)
        if not base.ok:
            return base
        return _split_condition(s, T)
    if variant is PrimeVariant.SEMIPRIME:
        return _semiprime(s, T)
    return _weakly_prime(s, T, flavor)


def ideals_form_chain(s: HyperStructure, flavor: Flavor) -> Verdict:
    """Two-sided ideals totally ordered by inclusion; witness is the first
    incomparable pair in ascending mask order."""
    ideals = enumerate_ideals(s, IdealKind.TWO_SIDED, flavor)
    for i, A in enumerate(ideals):
        for B in ideals[i + 1:]:
            if (A & ~B) and (B & ~A):
                return Verdict(False, (A, B))
    return Verdict(True)
