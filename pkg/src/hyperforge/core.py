"""Carriers, hyperoperation tables, partial orders, and axiom checks.

Elements are the integers 0..n-1 (n <= 16); a subset of the carrier is an int
bitmask.  A hyperoperation is an n x n table of nonempty masks; an order is a
boolean matrix stored as row masks.  Structures are immutable once built;
``validate`` performs all axiom checks and caches the resulting flags, after
which a structure may be shared freely across workers.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple, Optional, Sequence

from .errors import DimensionMismatch, EmptyEntry, NoOrder

MAX_CARRIER = 16


class Verdict(NamedTuple):
    """A boolean check result plus the first counterexample, if any."""

    ok: bool
    witness: object = None

    def __bool__(self) -> bool:
        return self.ok


# --- bitmask helpers --------------------------------------------------------

def mask_of(items: Iterable[int]) -> int:
    m = 0
    for x in items:
        m |= 1 << x
    return m


def members(mask: int) -> list[int]:
    """Elements of a mask in ascending order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def full_mask(n: int) -> int:
    return (1 << n) - 1


def subset_repr(mask: int, names: Optional[Sequence[str]] = None) -> str:
    if names is None:
        return "{" + ",".join(str(x) for x in members(mask)) + "}"
    return "{" + ",".join(names[x] for x in members(mask)) + "}"


def nonempty_submasks(n: int):
    """All nonempty subsets of the carrier, ascending bit-pattern order."""
    return range(1, 1 << n)


# --- tables and orders -------------------------------------------------------

class HyperOp:
    """An n x n table of subset masks; totality is checked by validate()."""

    __slots__ = ("n", "table")

    def __init__(self, n: int, table: Sequence[Sequence[int]]):
        if not 1 <= n <= MAX_CARRIER:
            raise DimensionMismatch(f"carrier size {n} outside [1, {MAX_CARRIER}]")
        if len(table) != n or any(len(row) != n for row in table):
            raise DimensionMismatch("table is not n x n")
        full = full_mask(n)
        for row in table:
            for cell in row:
                if cell & ~full:
                    raise DimensionMismatch("table cell uses elements outside the carrier")
        self.n = n
        self.table = tuple(tuple(row) for row in table)

    @classmethod
    def from_sets(cls, n: int, sets: Sequence[Sequence[Iterable[int]]]) -> "HyperOp":
        return cls(n, [[mask_of(cell) for cell in row] for row in sets])

    def __eq__(self, other) -> bool:
        return isinstance(other, HyperOp) and self.table == other.table

    def __hash__(self) -> int:
        return hash(self.table)

    def __repr__(self) -> str:
        rows = "; ".join(
            " ".join(subset_repr(c) for c in row) for row in self.table
        )
        return f"HyperOp(n={self.n}, [{rows}])"


class PartialOrder:
    """Row-mask encoding of <=: bit b of rows[a] is set iff a <= b.

    The axioms are machine-checked by ``check_order_axioms`` / ``validate``,
    not at construction, so invalid candidates can be built and reported on.
    """

    __slots__ = ("n", "rows", "_downs")

    def __init__(self, n: int, rows: Sequence[int]):
        if len(rows) != n:
            raise DimensionMismatch("order matrix is not n x n")
        full = full_mask(n)
        if any(r & ~full for r in rows):
            raise DimensionMismatch("order matrix uses elements outside the carrier")
        self.n = n
        self.rows = tuple(rows)
        downs = [0] * n
        for a in range(n):
            for b in members(self.rows[a]):
                downs[b] |= 1 << a
        self._downs = tuple(downs)

    @classmethod
    def discrete(cls, n: int) -> "PartialOrder":
        return cls(n, [1 << a for a in range(n)])

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "PartialOrder":
        """Build from (a, b) pairs meaning a <= b; reflexive pairs implied."""
        rows = [1 << a for a in range(n)]
        for a, b in pairs:
            rows[a] |= 1 << b
        return cls(n, rows)

    def leq(self, a: int, b: int) -> bool:
        return bool(self.rows[a] >> b & 1)

    def up_mask(self, a: int) -> int:
        return self.rows[a]

    def down_mask(self, a: int) -> int:
        """All elements t with t <= a."""
        return self._downs[a]

    def pairs(self) -> list[tuple[int, int]]:
        return [(a, b) for a in range(self.n) for b in members(self.rows[a])]

    def strict_pairs(self) -> list[tuple[int, int]]:
        return [(a, b) for (a, b) in self.pairs() if a != b]

    def is_discrete(self) -> bool:
        return all(self.rows[a] == 1 << a for a in range(self.n))

    def __eq__(self, other) -> bool:
        return isinstance(other, PartialOrder) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"PartialOrder(n={self.n}, pairs={self.strict_pairs()})"


class HyperStructure:
    """A hyperoperation table plus an optional partial order.

    ``flags`` caches the outcome of the associativity and order-compatibility
    checks; a True value means the corresponding check passed.  All caches are
    filled at validation/construction time or idempotently on first use.
    """

    __slots__ = ("op", "order", "_assoc", "_assoc_witness", "_compat",
                 "_compat_witness", "_row_or", "_cache")

    def __init__(self, op: HyperOp, order: Optional[PartialOrder] = None):
        if order is not None and order.n != op.n:
            raise DimensionMismatch("order and table carrier sizes differ")
        self.op = op
        self.order = order
        self._assoc: Optional[bool] = None
        self._assoc_witness = None
        self._compat: Optional[bool] = None
        self._compat_witness = None
        self._row_or: Optional[list[list[int]]] = None
        self._cache: dict = {}

    @property
    def n(self) -> int:
        return self.op.n

    @property
    def has_order(self) -> bool:
        return self.order is not None

    # -- cached axiom flags --

    @property
    def is_associative(self) -> bool:
        if self._assoc is None:
            verdict = check_associativity(self.op)
            self._assoc, self._assoc_witness = verdict.ok, verdict.witness
        return self._assoc

    @property
    def is_order_compatible(self) -> bool:
        if self.order is None:
            raise NoOrder("structure carries no order")
        if self._compat is None:
            verdict = check_compatibility(self)
            self._compat, self._compat_witness = verdict.ok, verdict.witness
        return self._compat

    @property
    def flags(self) -> dict:
        return {"associative": self._assoc, "order_compatible": self._compat}

    # -- fast internal set calculus (public wrappers live in setcalc) --

    def _rows_or(self) -> list[list[int]]:
        # row_or[a][mask] = union of a∘b over b in mask; built once, lazily
        if self._row_or is None:
            n, table = self.n, self.op.table
            size = 1 << n
            rows = []
            for a in range(n):
                acc = [0] * size
                row = table[a]
                for m in range(1, size):
                    low = m & -m
                    acc[m] = acc[m ^ low] | row[low.bit_length() - 1]
                rows.append(acc)
            self._row_or = rows
        return self._row_or

    def _prod(self, A: int, B: int) -> int:
        rows = self._rows_or()
        out = 0
        for a in members(A):
            out |= rows[a][B]
        return out

    def _down(self, A: int) -> int:
        order = self.order
        out = 0
        for a in members(A):
            out |= order.down_mask(a)
        return out

    def __eq__(self, other) -> bool:
        return (isinstance(other, HyperStructure)
                and self.op == other.op and self.order == other.order)

    def __hash__(self) -> int:
        return hash((self.op, self.order))

    def __repr__(self) -> str:
        return f"HyperStructure({self.op!r}, order={self.order!r})"


# --- axiom checks -------------------------------------------------------------

def check_totality(op: HyperOp) -> Verdict:
    """Every table cell nonempty; witness is the first empty (a, b)."""
    for a in range(op.n):
        for b in range(op.n):
            if op.table[a][b] == 0:
                return Verdict(False, (a, b))
    return Verdict(True)


def check_associativity(op: HyperOp) -> Verdict:
    """(a∘b)*{c} == {a}*(b∘c) for all triples; witness is the first failure."""
    total = check_totality(op)
    if not total.ok:
        raise EmptyEntry(f"empty table cell at {total.witness}")
    n, table = op.n, op.table
    for a in range(n):
        row_a = table[a]
        for b in range(n):
            ab = row_a[b]
            ab_members = members(ab)
            for c in range(n):
                left = 0
                for x in ab_members:
                    left |= table[x][c]
                right = 0
                for y in members(table[b][c]):
                    right |= row_a[y]
                if left != right:
                    return Verdict(False, (a, b, c))
    return Verdict(True)


def check_order_axioms(order: PartialOrder) -> Verdict:
    """Reflexive, antisymmetric, transitive; witness names the failed axiom."""
    n, rows = order.n, order.rows
    for a in range(n):
        if not rows[a] >> a & 1:
            return Verdict(False, ("reflexivity", a))
    for a in range(n):
        for b in members(rows[a]):
            if b != a and rows[b] >> a & 1:
                return Verdict(False, ("antisymmetry", (a, b)))
    for a in range(n):
        reach = rows[a]
        for b in members(rows[a]):
            reach |= rows[b]
        if reach != rows[a]:
            return Verdict(False, ("transitivity", a))
    return Verdict(True)


def check_compatibility(s: HyperStructure) -> Verdict:
    """a <= b forces a∘c below b∘c and c∘a below c∘b, for every c.

    "Below" is the set-domination order: every element of the left product
    sits under some element of the right one.
    """
    if s.order is None:
        raise NoOrder("compatibility needs an order")
    n, table, order = s.n, s.op.table, s.order
    for a, b in order.strict_pairs():
        for c in range(n):
            if not _dominates(order, table[a][c], table[b][c]):
                return Verdict(False, (a, b, c, "right"))
            if not _dominates(order, table[c][a], table[c][b]):
                return Verdict(False, (a, b, c, "left"))
    return Verdict(True)


def _dominates(order: PartialOrder, A: int, B: int) -> bool:
    down_b = 0
    for b in members(B):
        down_b |= order.down_mask(b)
    return A & ~down_b == 0


class ValidationReport(NamedTuple):
    totality: Verdict
    associativity: Optional[Verdict]
    order_axioms: Optional[Verdict]
    compatibility: Optional[Verdict]

    @property
    def ok(self) -> bool:
        checks = [self.totality, self.associativity, self.order_axioms,
                  self.compatibility]
        return all(c.ok for c in checks if c is not None)

    def lines(self) -> list[str]:
        out = []
        for name, check in [("totality", self.totality),
                            ("associativity", self.associativity),
                            ("order-axioms", self.order_axioms),
                            ("compatibility", self.compatibility)]:
            if check is None:
                out.append(f"{name}: skipped")
            elif check.ok:
                out.append(f"{name}: ok")
            else:
                out.append(f"{name}: FAIL witness={check.witness}")
        return out


def validate(s: HyperStructure) -> ValidationReport:
    """Run every axiom check and cache flags on success paths.

    Never raises: failures are carried in the report.  Idempotent — repeated
    validation yields an identical report.
    """
    totality = check_totality(s.op)
    associativity = None
    order_axioms = None
    compatibility = None
    if totality.ok:
        associativity = check_associativity(s.op)
        s._assoc, s._assoc_witness = associativity.ok, associativity.witness
    if s.order is not None:
        order_axioms = check_order_axioms(s.order)
        if totality.ok and order_axioms.ok:
            compatibility = check_compatibility(s)
            s._compat, s._compat_witness = compatibility.ok, compatibility.witness
    return ValidationReport(totality, associativity, order_axioms, compatibility)


# --- shipped fixtures (all n <= 2, discrete order unless stated) ---------------

def _fixture(table_sets, pairs=None) -> HyperStructure:
    n = len(table_sets)
    op = HyperOp.from_sets(n, table_sets)
    order = PartialOrder.discrete(n) if pairs is None else PartialOrder.from_pairs(n, pairs)
    s = HyperStructure(op, order)
    validate(s)
    return s


def sl2() -> HyperStructure:
    """Two-element meet semilattice with 0 absorbing, discrete order."""
    return _fixture([[(0,), (0,)], [(0,), (1,)]])


def ch2() -> HyperStructure:
    """The meet semilattice of sl2 ordered as the chain 0 <= 1."""
    return _fixture([[(0,), (0,)], [(0,), (1,)]], pairs=[(0, 1)])


def tot2() -> HyperStructure:
    """x∘y = H for all x, y; discrete order."""
    return _fixture([[(0, 1), (0, 1)], [(0, 1), (0, 1)]])


def tot2_chain() -> HyperStructure:
    """tot2 with the chain order 0 <= 1."""
    return _fixture([[(0, 1), (0, 1)], [(0, 1), (0, 1)]], pairs=[(0, 1)])


def lz2() -> HyperStructure:
    """Left-zero: x∘y = {x}; discrete order."""
    return _fixture([[(0,), (0,)], [(1,), (1,)]])


def rz2() -> HyperStructure:
    """Right-zero: x∘y = {y}; discrete order."""
    return _fixture([[(0,), (1,)], [(0,), (1,)]])


def z2() -> HyperStructure:
    """Constant: x∘y = {0}; discrete order."""
    return _fixture([[(0,), (0,)], [(0,), (0,)]])


FIXTURES = {
    "sl2": sl2,
    "ch2": ch2,
    "tot2": tot2,
    "tot2_chain": tot2_chain,
    "lz2": lz2,
    "rz2": rz2,
    "z2": z2,
}
