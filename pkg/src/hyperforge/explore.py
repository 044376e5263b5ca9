"""Structure enumeration, canonical forms, random sampling, and the search
for ordered hypersemigroups whose generated-filter relation is not the least
semilattice congruence.

Exhaustive enumeration fills table cells in row-major order and aborts a
prefix as soon as some associativity triple is fully determined and broken.
Isomorphism rejection compares minimum encodings over all carrier
permutations (transporting both table and order).

Random mode is a documented, seeded mix: uniform tables filtered by the
associativity check, block inflations of small semigroups along random
surjections (associative by construction), and fattened inflations that are
re-checked.  Every emitted structure passes the real axiom checks.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from itertools import permutations
from random import Random
from typing import Callable, Iterator, Optional, Sequence

from .classify import RegularityClass, classify
from .congruence import least_semilattice_congruence, relation_N
from .core import (HyperOp, HyperStructure, PartialOrder, check_order_axioms,
                   full_mask, members, validate)
from .errors import BudgetExceeded, EngineError
from .ideals import Flavor, IdealKind, enumerate_ideals
from .verify import VerifyConfig, check_theorem

DEFAULT_ENUM_BUDGET = 1_000_000


def default_budget() -> int:
    raw = os.environ.get("HYPERFORGE_BUDGET")
    return int(raw) if raw else DEFAULT_ENUM_BUDGET


@dataclass(frozen=True)
class EnumSpec:
    n: int
    associative: bool = True
    ordered: bool = False
    compatible: bool = True
    mode: str = "exhaustive"  # "exhaustive" | "random"
    seed: int = 0
    count: int = 0
    canonical_only: bool = False


# --- partial orders -------------------------------------------------------------

_ORDER_CACHE: dict[int, tuple[PartialOrder, ...]] = {}


def partial_orders(n: int) -> tuple[PartialOrder, ...]:
    """Every partial order on the carrier, discrete first, deterministic."""
    cached = _ORDER_CACHE.get(n)
    if cached is not None:
        return cached
    strict = [(a, b) for a in range(n) for b in range(n) if a != b]
    out = []
    for k in range(1 << len(strict)):
        rows = [1 << a for a in range(n)]
        for i, (a, b) in enumerate(strict):
            if k >> i & 1:
                rows[a] |= 1 << b
        order = PartialOrder(n, rows)
        if check_order_axioms(order).ok:
            out.append(order)
    out.sort(key=lambda o: o.rows)
    result = tuple(out)
    _ORDER_CACHE[n] = result
    return result


def _compatible(table: Sequence[Sequence[int]], order: PartialOrder, n: int) -> bool:
    for a, b in order.strict_pairs():
        for c in range(n):
            if not _dom(order, table[a][c], table[b][c]):
                return False
            if not _dom(order, table[c][a], table[c][b]):
                return False
    return True


def _dom(order: PartialOrder, A: int, B: int) -> bool:
    down = 0
    for b in members(B):
        down |= order.down_mask(b)
    return A & ~down == 0


# --- associativity over raw tables ------------------------------------------------

def table_is_associative(table: Sequence[Sequence[int]], n: int) -> bool:
    """Fast full check via or-convolution tables over all 2^n masks."""
    size = 1 << n
    row_or = []
    col_or = []
    for a in range(n):
        acc = [0] * size
        row = table[a]
        for m in range(1, size):
            low = m & -m
            acc[m] = acc[m ^ low] | row[low.bit_length() - 1]
        row_or.append(acc)
    for c in range(n):
        acc = [0] * size
        for m in range(1, size):
            low = m & -m
            acc[m] = acc[m ^ low] | table[low.bit_length() - 1][c]
        col_or.append(acc)
    for a in range(n):
        ra = row_or[a]
        ta = table[a]
        for b in range(n):
            ab = ta[b]
            tb = table[b]
            for c in range(n):
                if col_or[c][ab] != ra[tb[c]]:
                    return False
    return True


def _partial_triples_ok(table, filled, n) -> bool:
    """Every associativity triple whose both sides are already determined
    must agree; undetermined triples are skipped."""
    for a in range(n):
        for b in range(n):
            if not filled[a][b]:
                continue
            ab = table[a][b]
            for c in range(n):
                if not filled[b][c]:
                    continue
                left = 0
                ok = True
                for x in members(ab):
                    if not filled[x][c]:
                        ok = False
                        break
                    left |= table[x][c]
                if not ok:
                    continue
                right = 0
                for y in members(table[b][c]):
                    if not filled[a][y]:
                        ok = False
                        break
                    right |= table[a][y]
                if ok and left != right:
                    return False
    return True


def _exhaustive_tables(n: int, require_assoc: bool) -> Iterator[tuple[tuple[int, ...], ...]]:
    cells = [(i, j) for i in range(n) for j in range(n)]
    table = [[0] * n for _ in range(n)]
    filled = [[False] * n for _ in range(n)]
    top = full_mask(n)

    def rec(k: int) -> Iterator[tuple[tuple[int, ...], ...]]:
        if k == len(cells):
            yield tuple(tuple(row) for row in table)
            return
        i, j = cells[k]
        filled[i][j] = True
        for v in range(1, top + 1):
            table[i][j] = v
            if require_assoc and not _partial_triples_ok(table, filled, n):
                continue
            yield from rec(k + 1)
        filled[i][j] = False

    yield from rec(0)


# --- canonical forms ---------------------------------------------------------------

def encoding(s: HyperStructure) -> tuple:
    flat = tuple(cell for row in s.op.table for cell in row)
    rows = s.order.rows if s.order is not None else ()
    return (s.n,) + flat + tuple(rows)


def transport(s: HyperStructure, perm: Sequence[int]) -> HyperStructure:
    """Relabel the carrier along perm (perm[i] is the new name of i)."""
    n = s.n
    table = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            mask = 0
            for x in members(s.op.table[a][b]):
                mask |= 1 << perm[x]
            table[perm[a]][perm[b]] = mask
    order = None
    if s.order is not None:
        rows = [0] * n
        for a in range(n):
            for b in members(s.order.rows[a]):
                rows[perm[a]] |= 1 << perm[b]
        order = PartialOrder(n, rows)
    return HyperStructure(HyperOp(n, table), order)


def canonical_form(s: HyperStructure) -> tuple:
    """Minimum encoding over all carrier permutations; equal forms mean
    isomorphic structures, by construction."""
    return min(encoding(transport(s, p)) for p in permutations(range(s.n)))


# --- enumeration -----------------------------------------------------------------

def _raw_space(spec: EnumSpec) -> int:
    tables = (2 ** spec.n - 1) ** (spec.n * spec.n)
    if spec.ordered:
        tables *= len(partial_orders(spec.n))
    return tables


def enumerate_structures(spec: EnumSpec,
                         budget: Optional[int] = None) -> Iterator[HyperStructure]:
    """Stream validated structures satisfying the spec, deterministically."""
    if spec.mode == "random":
        yield from _random_structures(spec)
        return
    limit = default_budget() if budget is None else budget
    raw = _raw_space(spec)
    if raw > limit:
        raise BudgetExceeded(
            f"exhaustive slice has {raw} raw candidates, budget {limit} "
            "(raise HYPERFORGE_BUDGET to override)")
    orders = partial_orders(spec.n) if spec.ordered else (None,)
    for table in _exhaustive_tables(spec.n, spec.associative):
        if spec.associative and not table_is_associative(table, spec.n):
            raise EngineError("pruned enumeration emitted a non-associative table")
        for order in orders:
            if order is not None and spec.compatible and \
                    not _compatible(table, order, spec.n):
                continue
            s = HyperStructure(HyperOp(spec.n, table), order)
            if spec.canonical_only and encoding(s) != canonical_form(s):
                continue
            validate(s)
            yield s


# --- random generation --------------------------------------------------------------

_SEMIGROUP_CACHE: dict[int, tuple[tuple[tuple[int, ...], ...], ...]] = {}


def _small_semigroups(m: int) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """All single-valued associative tables on m <= 3 elements."""
    cached = _SEMIGROUP_CACHE.get(m)
    if cached is not None:
        return cached
    out = []
    cells = m * m
    for k in range(m ** cells):
        vals = []
        acc = k
        for _ in range(cells):
            vals.append(acc % m)
            acc //= m
        table = [vals[i * m:(i + 1) * m] for i in range(m)]
        if all(table[table[a][b]][c] == table[a][table[b][c]]
               for a in range(m) for b in range(m) for c in range(m)):
            out.append(tuple(tuple(row) for row in table))
    result = tuple(out)
    _SEMIGROUP_CACHE[m] = result
    return result


def _inflate(n: int, rng: Random) -> list[list[int]]:
    """Block inflation of a random small semigroup along a random surjection."""
    m = rng.randint(1, min(n, 3))
    base = rng.choice(_small_semigroups(m))
    labels = list(range(n))
    rng.shuffle(labels)
    theta = [0] * n
    for cls in range(m):
        theta[labels[cls]] = cls
    for x in labels[m:]:
        theta[x] = rng.randrange(m)
    block = [0] * m
    for x in range(n):
        block[theta[x]] |= 1 << x
    return [[block[base[theta[a]][theta[b]]] for b in range(n)] for a in range(n)]


def random_table(n: int, rng: Random, max_uniform_tries: int = 40) -> tuple[tuple[int, ...], ...]:
    """One seeded random associative table (strategy mix, always re-checked)."""
    top = full_mask(n)
    roll = rng.random()
    if roll < 0.35:
        for _ in range(max_uniform_tries):
            table = [[rng.randint(1, top) for _ in range(n)] for _ in range(n)]
            if table_is_associative(table, n):
                return tuple(tuple(row) for row in table)
        # fall through to inflation when uniform sampling keeps missing
    table = _inflate(n, rng)
    if roll >= 0.65:
        for _ in range(rng.randint(1, 4)):
            i, j = rng.randrange(n), rng.randrange(n)
            old = table[i][j]
            table[i][j] = old | rng.randint(1, top)
            if not table_is_associative(table, n):
                table[i][j] = old
    if not table_is_associative(table, n):
        raise EngineError("random generator produced a non-associative table")
    return tuple(tuple(row) for row in table)


def _random_structures(spec: EnumSpec) -> Iterator[HyperStructure]:
    rng = Random(spec.seed)
    n = spec.n
    top = full_mask(n)
    orders = partial_orders(n) if spec.ordered else ()
    emitted = 0
    while emitted < spec.count:
        if spec.associative:
            table = random_table(n, rng)
        else:
            table = tuple(tuple(rng.randint(1, top) for _ in range(n))
                          for _ in range(n))
        order = None
        if spec.ordered:
            if spec.compatible:
                fits = [o for o in orders if _compatible(table, o, n)]
                order = rng.choice(fits)  # discrete is always compatible
            else:
                order = rng.choice(orders)
        s = HyperStructure(HyperOp(n, table), order)
        if spec.canonical_only and encoding(s) != canonical_form(s):
            continue
        validate(s)
        yield s
        emitted += 1


# --- invariant profiles and censuses --------------------------------------------------

def invariant_profile(s: HyperStructure) -> dict:
    """Isomorphism-invariant property vector used by censuses and findings."""
    out: dict = {"n": s.n, "associative": s.is_associative}
    flavors = [Flavor.PLAIN]
    if s.order is not None:
        out["order_compatible"] = s.is_order_compatible
        flavors.append(Flavor.ORDERED)
    if s.is_associative:
        for fl in flavors:
            out[f"classes_{fl.value}"] = {
                cls.value: classify(s, cls, fl).ok for cls in RegularityClass}
    for fl in flavors:
        out[f"ideal_counts_{fl.value}"] = {
            kind.value: len(enumerate_ideals(s, kind, fl)) for kind in IdealKind}
    blocks = relation_N(s, Flavor.PLAIN).blocks()
    out["filter_class_sizes"] = sorted(bin(b).count("1") for b in blocks)
    return out


def classify_corpus(spec: EnumSpec, targets: Sequence[str] = (),
                    budget: Optional[int] = None,
                    cfg: VerifyConfig = VerifyConfig(),
                    threads: int = 1) -> dict:
    """Counts of regularity classes and theorem verdicts across a corpus.

    ``targets`` may name regularity classes (plain flavor) or theorem ids.
    Deterministic for any thread count: work is shared, merge order is the
    enumeration order.
    """
    class_names = {c.value for c in RegularityClass}
    class_targets = [t for t in targets if t.lower() in class_names]
    theorem_targets = [t for t in targets if t.lower() not in class_names]

    def inspect(s: HyperStructure) -> dict:
        row: dict = {"classes": {}, "theorems": {}}
        for name in class_targets:
            row["classes"][name] = classify(
                s, RegularityClass(name.lower()), Flavor.PLAIN).ok
        for tid in theorem_targets:
            row["theorems"][tid] = check_theorem(s, tid.upper(), cfg).verdict
        return row

    stream = enumerate_structures(spec, budget)
    rows = _parallel_map(inspect, stream, threads)

    census: dict = {"corpus_size": 0,
                    "classes": {name: 0 for name in class_targets},
                    "theorems": {tid: {"holds": 0, "fails": 0, "not-applicable": 0}
                                 for tid in theorem_targets}}
    for row in rows:
        census["corpus_size"] += 1
        for name, ok in row["classes"].items():
            census["classes"][name] += int(ok)
        for tid, verdict in row["theorems"].items():
            census["theorems"][tid][verdict] += 1
    return census


def _parallel_map(fn: Callable, stream, threads: int):
    if threads <= 1:
        for item in stream:
            yield fn(item)
        return
    from concurrent.futures import ThreadPoolExecutor
    with ThreadPoolExecutor(max_workers=threads) as pool:
        yield from pool.map(fn, stream)


# --- the generated-filter vs least-congruence search ----------------------------------

@dataclass(frozen=True)
class SearchFinding:
    document: dict           # serialized structure, re-parseable
    relation_n: tuple        # class indices of the ordered generated-filter relation
    least: tuple             # class indices of the least semilattice congruence
    profile: dict = field(compare=False, default_factory=dict)


@dataclass(frozen=True)
class ExhaustionCertificate:
    slice_spec: dict
    examined: int
    findings: int
    exhaustive: bool

    @property
    def zero_findings(self) -> bool:
        return self.exhaustive and self.findings == 0


def _revalidate_finding(doc: dict) -> tuple[tuple, tuple]:
    """Re-parse a finding from its serialized form and recompute everything
    from scratch; raises EngineError if it does not reproduce."""
    from .io import structure_from_doc
    fresh, _names, _grades = structure_from_doc(doc)
    report = validate(fresh)
    if not report.ok:
        raise EngineError("finding failed re-validation: axioms")
    n_ord = relation_N(fresh, Flavor.ORDERED)
    least = least_semilattice_congruence(fresh)
    if n_ord == least:
        raise EngineError("finding failed re-validation: partitions agree")
    if relation_N(fresh, Flavor.PLAIN) != least_semilattice_congruence(fresh):
        raise EngineError("finding failed re-validation: plain sanity check")
    return n_ord.class_of, least.class_of


def search_p85(n: int, budget: Optional[int] = None, seed: int = 0,
               count: int = 0, threads: int = 1
               ) -> tuple[list[SearchFinding], ExhaustionCertificate]:
    """Hunt for ordered hypersemigroups where the generated-filter relation
    differs from the least semilattice congruence.

    Exhaustive when the raw slice fits the budget and no sample count is
    forced; otherwise seeded-random sampling.  Every finding is re-validated
    from a fresh parse of its serialized form before being returned.
    """
    from .io import structure_to_doc
    limit = default_budget() if budget is None else budget
    exhaustive = count == 0 and _raw_space(
        EnumSpec(n=n, ordered=True)) <= limit
    if exhaustive:
        spec = EnumSpec(n=n, associative=True, ordered=True, compatible=True)
    else:
        if count == 0:
            raise BudgetExceeded(
                f"exhaustive n={n} ordered slice exceeds budget {limit}; "
                "pass a sample count for random mode")
        spec = EnumSpec(n=n, associative=True, ordered=True, compatible=True,
                        mode="random", seed=seed, count=count)

    def inspect(s: HyperStructure) -> Optional[SearchFinding]:
        n_ord = relation_N(s, Flavor.ORDERED)
        least = least_semilattice_congruence(s)
        if n_ord == least:
            return None
        doc = structure_to_doc(s)
        got_n, got_least = _revalidate_finding(doc)
        return SearchFinding(doc, got_n, got_least, invariant_profile(s))

    examined = 0
    findings: list[SearchFinding] = []
    for result in _parallel_map(inspect, enumerate_structures(spec, limit), threads):
        examined += 1
        if result is not None:
            findings.append(result)

    cert = ExhaustionCertificate(
        slice_spec={"n": n, "ordered": True, "compatible": True,
                    "associative": True,
                    "mode": "exhaustive" if exhaustive else "random",
                    "seed": None if exhaustive else seed,
                    "count": None if exhaustive else count},
        examined=examined, findings=len(findings), exhaustive=exhaustive)
    return findings, cert
