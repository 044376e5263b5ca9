"""Axiom checks against the naive oracle and the shipped fixtures."""

import pytest
from hypothesis import given, settings, strategies as st

import naive
from conftest import from_naive, to_naive_le, to_naive_table

from hyperforge.core import (FIXTURES, HyperOp, HyperStructure, PartialOrder,
                             check_associativity, check_compatibility,
                             check_order_axioms, check_totality, ch2, lz2,
                             members, sl2, tot2, tot2_chain, validate, z2)
from hyperforge.errors import DimensionMismatch, EmptyEntry, NoOrder


def test_fixtures_all_validate():
    for name, fab in FIXTURES.items():
        report = validate(fab())
        assert report.ok, (name, report.lines())


def test_associativity_examples():
    assert check_associativity(lz2().op).ok
    assert check_associativity(tot2().op).ok
    # 0∘1 = {1}, everything else {0}: (1∘0)*{1} = {1} but {1}*(0∘1) = {0}
    bad = HyperOp.from_sets(2, [[(0,), (1,)], [(0,), (0,)]])
    verdict = check_associativity(bad)
    assert not verdict.ok
    assert verdict.witness == (1, 0, 1)


def test_associativity_oracle_all_81_tables():
    """Exhaustive n=2: the bitmask check agrees with the triple-loop oracle."""
    engine = naive_count = 0
    for table in naive.all_tables(2):
        s = from_naive(table)
        got = check_associativity(s.op).ok
        want = naive.is_associative(table)
        assert got == want, table
        engine += got
        naive_count += want
    assert engine == naive_count == 30


def test_empty_cell_raises():
    op = HyperOp(2, [[1, 0], [1, 1]])
    assert not check_totality(op).ok
    with pytest.raises(EmptyEntry):
        check_associativity(op)


def test_order_axiom_examples():
    assert check_order_axioms(PartialOrder.discrete(2)).ok
    assert check_order_axioms(PartialOrder.from_pairs(2, [(0, 1)])).ok
    broken = PartialOrder.from_pairs(2, [(0, 1), (1, 0)])
    verdict = check_order_axioms(broken)
    assert not verdict.ok
    assert verdict.witness[0] == "antisymmetry"
    # 0<=1<=2 without 0<=2
    not_trans = PartialOrder.from_pairs(3, [(0, 1), (1, 2)])
    verdict = check_order_axioms(not_trans)
    assert not verdict.ok
    assert verdict.witness[0] == "transitivity"


def test_order_axioms_oracle_n3():
    """All 2^6 strict-pair candidates at n=3 agree with the oracle (19 valid)."""
    valid = 0
    for k in range(1 << 6):
        pairs = [(a, b) for i, (a, b) in enumerate(
            [(a, b) for a in range(3) for b in range(3) if a != b]) if k >> i & 1]
        order = PartialOrder.from_pairs(3, pairs)
        le = frozenset(order.pairs())
        got = check_order_axioms(order).ok
        assert got == naive.is_partial_order(le, 3)
        valid += got
    assert valid == 19


def test_compatibility_examples():
    assert check_compatibility(sl2()).ok          # discrete order
    assert check_compatibility(ch2()).ok
    assert check_compatibility(tot2_chain()).ok   # every product is H
    with pytest.raises(NoOrder):
        check_compatibility(HyperStructure(sl2().op, None))


def test_compatibility_oracle_exhaustive_n2():
    for table in naive.all_tables(2):
        for le in naive.all_partial_orders(2):
            s = from_naive(table, le)
            assert check_compatibility(s).ok == naive.is_compatible(table, le, 2)


def test_discrete_order_always_compatible():
    for table in naive.all_tables(2):
        s = from_naive(table, naive.all_partial_orders(2)[-1])
        assert s.order.is_discrete()
        assert check_compatibility(s).ok


def test_validate_report_and_idempotence():
    s = sl2()
    first = validate(s)
    second = validate(s)
    assert first == second
    assert first.lines() == second.lines()
    assert s.flags == {"associative": True, "order_compatible": True}

    holey = HyperStructure(HyperOp(2, [[1, 0], [1, 1]]))
    report = validate(holey)
    assert not report.ok
    assert not report.totality.ok
    assert report.associativity is None

    bad_order = HyperStructure(sl2().op, PartialOrder.from_pairs(2, [(0, 1), (1, 0)]))
    report = validate(bad_order)
    assert not report.ok
    assert not report.order_axioms.ok
    assert report.compatibility is None


def test_dimension_checks():
    with pytest.raises(DimensionMismatch):
        HyperOp(2, [[1, 1]])
    with pytest.raises(DimensionMismatch):
        HyperOp(2, [[1, 4], [1, 1]])  # element 2 outside carrier
    with pytest.raises(DimensionMismatch):
        PartialOrder(2, [1, 2, 1])
    with pytest.raises(DimensionMismatch):
        HyperStructure(HyperOp(1, [[1]]), PartialOrder.discrete(2))


@st.composite
def tables_n3(draw):
    def cell():
        mask = draw(st.integers(1, 7))
        return frozenset(x for x in range(3) if mask >> x & 1)
    return tuple(tuple(cell() for _ in range(3)) for _ in range(3))


@settings(max_examples=60, deadline=None)
@given(tables_n3())
def test_associativity_matches_oracle_random_n3(table):
    s = from_naive(table)
    assert check_associativity(s.op).ok == naive.is_associative(table)


def test_fixture_tables_match_spec():
    assert to_naive_table(sl2()) == ((frozenset({0}), frozenset({0})),
                                     (frozenset({0}), frozenset({1})))
    assert to_naive_le(ch2()) == frozenset({(0, 0), (1, 1), (0, 1)})
    assert all(cell == frozenset({0, 1}) for row in to_naive_table(tot2())
               for cell in row)
    assert to_naive_table(z2()) == ((frozenset({0}), frozenset({0})),
                                    (frozenset({0}), frozenset({0})))
    assert to_naive_table(lz2()) == ((frozenset({0}), frozenset({0})),
                                     (frozenset({1}), frozenset({1})))
