"""Exact-rational fuzzy subsets, sup-min composition, and fuzzy ideal checks.

Grades are ``fractions.Fraction`` values in [0, 1]; all comparisons are exact,
so sup/min chains are associative and byte-reproducible.  Composition routes
through a per-structure pair index A_a: in the plain flavor (y, z) lands in
A_a when a ∈ y∘z, in the ordered flavor when some u ∈ y∘z satisfies a <= u.

Fuzzy right/left/bi ideal predicates use the plain-theory inequalities; for
ordered structures the separate ``reverses_order`` predicate expresses the
grade analog of downward closure (a <= b forces f(a) >= f(b)), which the
ordered theorem checks add to their quantifiers.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from itertools import product as iproduct
from typing import Iterable, Iterator, Sequence

from .core import HyperStructure, Verdict, mask_of, members
from .errors import CarrierMismatch, EmptySubset, InvalidGrid, NoOrder
from .ideals import Flavor

ZERO = Fraction(0)
ONE = Fraction(1)

DEFAULT_GRID = (Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(1))


class FuzzySubset:
    """An immutable grade vector over the carrier."""

    __slots__ = ("grades",)

    def __init__(self, grades: Iterable):
        gs = tuple(Fraction(g) for g in grades)
        for g in gs:
            if not ZERO <= g <= ONE:
                raise InvalidGrid(f"grade {g} outside [0, 1]")
        self.grades = gs

    @property
    def n(self) -> int:
        return len(self.grades)

    def __getitem__(self, x: int) -> Fraction:
        return self.grades[x]

    def __eq__(self, other) -> bool:
        return isinstance(other, FuzzySubset) and self.grades == other.grades

    def __hash__(self) -> int:
        return hash(self.grades)

    def __repr__(self) -> str:
        return "FuzzySubset(" + ", ".join(str(g) for g in self.grades) + ")"

    def as_strings(self) -> list[str]:
        return [str(g) for g in self.grades]


class FuzzyIdealKind(str, Enum):
    RIGHT = "fuzzy-right"
    LEFT = "fuzzy-left"
    TWO_SIDED = "fuzzy-two-sided"
    BI = "fuzzy-bi"


def characteristic(n: int, A: int) -> FuzzySubset:
    """Grade 1 on the mask's members and 0 elsewhere; empty gives all-zeros."""
    return FuzzySubset(ONE if A >> x & 1 else ZERO for x in range(n))


def support(f: FuzzySubset) -> int:
    return mask_of(x for x in range(f.n) if f[x] > ZERO)


def fuzzy_meet(f: FuzzySubset, g: FuzzySubset) -> FuzzySubset:
    if f.n != g.n:
        raise CarrierMismatch("fuzzy subsets live on different carriers")
    return FuzzySubset(min(a, b) for a, b in zip(f.grades, g.grades))


def fuzzy_leq(f: FuzzySubset, g: FuzzySubset) -> bool:
    if f.n != g.n:
        raise CarrierMismatch("fuzzy subsets live on different carriers")
    return all(a <= b for a, b in zip(f.grades, g.grades))


def pair_index(s: HyperStructure, flavor: Flavor) -> tuple[tuple[tuple[int, int], ...], ...]:
    """For each a, the factorization pairs (y, z) feeding the composition."""
    if flavor is Flavor.ORDERED and s.order is None:
        raise NoOrder("ordered pair index needs an order")
    key = ("pair_index", flavor)
    cached = s._cache.get(key)
    if cached is not None:
        return cached
    n, table = s.n, s.op.table
    rows = []
    for a in range(n):
        hit = (1 << a) if flavor is Flavor.PLAIN else s.order.up_mask(a)
        rows.append(tuple(
            (y, z) for y in range(n) for z in range(n) if table[y][z] & hit))
    result = tuple(rows)
    s._cache[key] = result
    return result


def fuzzy_compose(s: HyperStructure, f: FuzzySubset, g: FuzzySubset,
                  flavor: Flavor) -> FuzzySubset:
    """(f∘g)(a) = sup over A_a of min(f(y), g(z)), 0 when A_a is empty."""
    if f.n != s.n or g.n != s.n:
        raise CarrierMismatch("fuzzy subsets do not match the carrier")
    index = pair_index(s, flavor)
    out = []
    for a in range(s.n):
        pairs = index[a]
        if not pairs:
            out.append(ZERO)
        else:
            out.append(max(min(f[y], g[z]) for y, z in pairs))
    return FuzzySubset(out)


def is_fuzzy_ideal(s: HyperStructure, f: FuzzySubset, kind: FuzzyIdealKind) -> Verdict:
    """Check the kind's grade inequality across all hyperproducts.

    Witness is the first (x, y, u) — or (x, y, z, u) for the bi kind — where
    the inequality fails, scanning in ascending order.
    """
    if f.n != s.n:
        raise CarrierMismatch("fuzzy subset does not match the carrier")
    n, table = s.n, s.op.table
    if kind in (FuzzyIdealKind.RIGHT, FuzzyIdealKind.TWO_SIDED):
        for x in range(n):
            for y in range(n):
                for u in members(table[x][y]):
                    if f[u] < f[x]:
                        return Verdict(False, (x, y, u))
    if kind in (FuzzyIdealKind.LEFT, FuzzyIdealKind.TWO_SIDED):
        for x in range(n):
            for y in range(n):
                for u in members(table[x][y]):
                    if f[u] < f[y]:
                        return Verdict(False, (x, y, u))
    if kind is FuzzyIdealKind.BI:
        for x in range(n):
            for y in range(n):
                for z in range(n):
                    bound = min(f[x], f[z])
                    prod = 0
                    for w in members(table[x][y]):
                        prod |= table[w][z]
                    for u in members(prod):
                        if f[u] < bound:
                            return Verdict(False, (x, y, z, u))
    return Verdict(True)


def reverses_order(s: HyperStructure, f: FuzzySubset) -> bool:
    """a <= b forces f(a) >= f(b): the grade analog of downward closure."""
    if s.order is None:
        raise NoOrder("order-reversal needs an order")
    if f.n != s.n:
        raise CarrierMismatch("fuzzy subset does not match the carrier")
    return all(f[a] >= f[b] for a, b in s.order.strict_pairs())


def grade_grid_samples(n: int, grid: Sequence) -> Iterator[FuzzySubset]:
    """All |grid|^n grade vectors drawn from the grid, lexicographic order.

    The grid must contain 0 and 1 and stay within [0, 1]; duplicates are
    dropped and values sorted so the stream is byte-reproducible.
    """
    values = sorted(set(Fraction(g) for g in grid))
    if not values or values[0] != ZERO or values[-1] != ONE:
        raise InvalidGrid("grade grid must include 0 and 1")
    if any(not ZERO <= v <= ONE for v in values):
        raise InvalidGrid("grade grid values must lie in [0, 1]")
    for combo in iproduct(values, repeat=n):
        yield FuzzySubset(combo)
