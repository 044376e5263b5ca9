"""Partitions, congruences, filters, generated filters, and the least
semilattice congruence.

A congruence here is pointwise-universal: related elements must have all
their hyperproduct elements related, so every table cell of a congruence is
contained in a single class.  Relations between an element and a set (or two
sets) lift pointwise-universally as well.

The filter conditions are: closed under products of members, closed under
product-divisor extraction, and all-or-nothing intersection with every cell;
the ordered flavor adds upward closure.  Because condition three is a
disjunction, generated filters are computed by intersecting the full filter
enumeration rather than by forward closure.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Optional

from .core import HyperStructure, Verdict, full_mask, members, nonempty_submasks
from .errors import CarrierTooLarge, EngineError, NoOrder, NotACongruence
from .ideals import Flavor

DEFAULT_PARTITION_BUDGET = 50_000


class Partition:
    """An equivalence relation on the carrier, canonically encoded.

    ``class_of[x]`` is the index of x's class; indices appear in first
    occurrence order, so equal relations have identical encodings.
    """

    __slots__ = ("class_of",)

    def __init__(self, class_of: Iterable[int]):
        raw = tuple(class_of)
        relabel: dict[int, int] = {}
        for c in raw:
            if c not in relabel:
                relabel[c] = len(relabel)
        self.class_of = tuple(relabel[c] for c in raw)

    @classmethod
    def identity(cls, n: int) -> "Partition":
        return cls(range(n))

    @classmethod
    def universal(cls, n: int) -> "Partition":
        return cls([0] * n)

    @classmethod
    def from_blocks(cls, n: int, blocks: Iterable[Iterable[int]]) -> "Partition":
        class_of = [-1] * n
        for i, blk in enumerate(blocks):
            for x in blk:
                class_of[x] = i
        if -1 in class_of:
            raise ValueError("blocks do not cover the carrier")
        return cls(class_of)

    @property
    def n(self) -> int:
        return len(self.class_of)

    @property
    def num_classes(self) -> int:
        return max(self.class_of) + 1

    def relates(self, a: int, b: int) -> bool:
        return self.class_of[a] == self.class_of[b]

    def blocks(self) -> tuple[int, ...]:
        """Class masks, ordered by least member."""
        out = [0] * self.num_classes
        for x, c in enumerate(self.class_of):
            out[c] |= 1 << x
        return tuple(out)

    def meet(self, other: "Partition") -> "Partition":
        """Common refinement (intersection of the relations)."""
        pairs = list(zip(self.class_of, other.class_of))
        relabel: dict[tuple[int, int], int] = {}
        return Partition(relabel.setdefault(p, len(relabel)) for p in pairs)

    def refines(self, other: "Partition") -> bool:
        return self.meet(other) == self

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self.class_of == other.class_of

    def __hash__(self) -> int:
        return hash(self.class_of)

    def __repr__(self) -> str:
        return f"Partition({list(self.class_of)})"


def bell_number(n: int) -> int:
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
    return row[0]


def all_partitions(n: int) -> Iterator[Partition]:
    """Every partition of the carrier, in restricted-growth-string order."""
    rgs = [0] * n

    def rec(i: int, maxc: int):
        if i == n:
            yield Partition(rgs)
            return
        for c in range(maxc + 2):
            rgs[i] = c
            yield from rec(i + 1, max(maxc, c))

    if n == 0:
        yield Partition([])
        return
    yield from rec(1, 0)


# --- congruence predicates -----------------------------------------------------

def _cell_classes(s: HyperStructure, p: Partition) -> Optional[list[list[int]]]:
    """Class index of each (monochromatic) cell, or None when some cell
    straddles two classes — which already rules out any congruence."""
    n, table, cls = s.n, s.op.table, p.class_of
    out = []
    for a in range(n):
        row = []
        for b in range(n):
            ms = members(table[a][b])
            c = cls[ms[0]]
            for x in ms[1:]:
                if cls[x] != c:
                    return None
            row.append(c)
        out.append(row)
    return out


def is_congruence(s: HyperStructure, p: Partition, side: str = "both") -> Verdict:
    """Pointwise-universal right/left/two-sided congruence check.

    Witness is the first (a, b, c, u, v, side) with u, v unrelated, scanning
    lexicographically.
    """
    if side not in ("right", "left", "both"):
        raise ValueError(f"unknown side {side!r}")
    cells = _cell_classes(s, p)
    ok = cells is not None
    if ok:
        n, cls = s.n, p.class_of
        for a in range(n):
            for b in range(a + 1, n):
                if cls[a] != cls[b]:
                    continue
                for c in range(n):
                    if side in ("right", "both") and cells[a][c] != cells[b][c]:
                        ok = False
                        break
                    if side in ("left", "both") and cells[c][a] != cells[c][b]:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
    if ok:
        return Verdict(True)
    return Verdict(False, _congruence_witness(s, p, side))


def _congruence_witness(s, p, side):
    n, table = s.n, s.op.table
    for a in range(n):
        for b in range(n):
            if not p.relates(a, b):
                continue
            for c in range(n):
                if side in ("right", "both"):
                    for u in members(table[a][c]):
                        for v in members(table[b][c]):
                            if not p.relates(u, v):
                                return (a, b, c, u, v, "right")
                if side in ("left", "both"):
                    for u in members(table[c][a]):
                        for v in members(table[c][b]):
                            if not p.relates(u, v):
                                return (a, b, c, u, v, "left")
    raise EngineError("fast congruence check disagreed with the witness scan")


def _semilattice_conditions(s: HyperStructure, p: Partition,
                            cells: list[list[int]]) -> bool:
    n, cls = s.n, p.class_of
    for a in range(n):
        if cells[a][a] != cls[a]:
            return False
    for a in range(n):
        for b in range(a + 1, n):
            if cells[a][b] != cells[b][a]:
                return False
    return True


def _is_semilattice_congruence_quiet(s: HyperStructure, p: Partition) -> bool:
    cells = _cell_classes(s, p)
    if cells is None:
        return False
    n, cls = s.n, p.class_of
    for a in range(n):
        for b in range(a + 1, n):
            if cls[a] != cls[b]:
                continue
            for c in range(n):
                if cells[a][c] != cells[b][c] or cells[c][a] != cells[c][b]:
                    return False
    return _semilattice_conditions(s, p, cells)


def is_semilattice_congruence(s: HyperStructure, p: Partition) -> bool:
    """Squares collapse to their base and products commute, class-wise.

    Raises NotACongruence when p is not even a congruence.
    """
    check = is_congruence(s, p, "both")
    if not check.ok:
        raise NotACongruence(f"witness {check.witness}")
    return _semilattice_conditions(s, p, _cell_classes(s, p))


def is_complete(s: HyperStructure, p: Partition) -> bool:
    """a <= b forces a related to everything in a∘b.

    Requires an order and a semilattice congruence.
    """
    if s.order is None:
        raise NoOrder("completeness needs an order")
    if not _is_semilattice_congruence_quiet(s, p):
        raise NotACongruence("partition is not a semilattice congruence")
    table = s.op.table
    for a, b in s.order.strict_pairs():
        for u in members(table[a][b]):
            if not p.relates(a, u):
                return False
    return True


# --- filters and the generated-filter relation ---------------------------------

def is_filter(s: HyperStructure, F: int, flavor: Flavor) -> bool:
    if F == 0:
        return False
    if flavor is Flavor.ORDERED and s.order is None:
        raise NoOrder("ordered filters need an order")
    n, table = s.n, s.op.table
    for x in range(n):
        for y in range(n):
            cell = table[x][y]
            inside = (F >> x & 1) and (F >> y & 1)
            if inside and cell & ~F:
                return False
            if cell & ~F == 0 and not inside:
                return False
            if cell & F and cell & ~F:
                return False
    if flavor is Flavor.ORDERED:
        for a in members(F):
            if s.order.up_mask(a) & ~F:
                return False
    return True


def enumerate_filters(s: HyperStructure, flavor: Flavor) -> list[int]:
    """All filters, ascending bit-pattern order.  H always qualifies."""
    key = ("filters", flavor)
    cached = s._cache.get(key)
    if cached is None:
        cached = [F for F in nonempty_submasks(s.n) if is_filter(s, F, flavor)]
        s._cache[key] = cached
    return cached


def generated_filter(s: HyperStructure, x: int, flavor: Flavor) -> int:
    """Least filter containing x, by intersecting the enumeration.

    Filters are intersection-closed, which the self-check re-verifies.
    """
    out = full_mask(s.n)
    for F in enumerate_filters(s, flavor):
        if F >> x & 1:
            out &= F
    if not is_filter(s, out, flavor):
        raise EngineError(f"intersection of filters through {x} is not a filter")
    return out


def relation_N(s: HyperStructure, flavor: Flavor) -> Partition:
    """Group elements by their generated filters."""
    filt = [generated_filter(s, x, flavor) for x in range(s.n)]
    relabel: dict[int, int] = {}
    return Partition(relabel.setdefault(f, len(relabel)) for f in filt)


def sigma_I(s: HyperStructure, I: int) -> Partition:
    """The two-block partition separating I from its complement."""
    n = s.n
    if I == 0 or I == full_mask(n):
        return Partition.universal(n)
    return Partition(0 if I >> x & 1 else 1 for x in range(n))


def least_semilattice_congruence(s: HyperStructure,
                                 budget: int = DEFAULT_PARTITION_BUDGET) -> Partition:
    """Meet of every semilattice congruence, by a full partition sweep.

    The universal partition always qualifies, and the conditions are
    intersection-closed, so the meet qualifies too (re-verified).
    """
    n = s.n
    if bell_number(n) > budget:
        raise CarrierTooLarge(
            f"partition sweep for n={n} exceeds budget {budget}")
    meet: Optional[Partition] = None
    for p in all_partitions(n):
        if _is_semilattice_congruence_quiet(s, p):
            meet = p if meet is None else meet.meet(p)
    if meet is None or not _is_semilattice_congruence_quiet(s, meet):
        raise EngineError("meet of semilattice congruences failed to qualify")
    return meet


# --- pointwise-universal lifted relations --------------------------------------

def relates_elem_set(p: Partition, x: int, A: int) -> bool:
    return all(p.relates(x, a) for a in members(A))


def relates_set_set(p: Partition, A: int, B: int) -> bool:
    return all(p.relates(a, b) for a in members(A) for b in members(B))
