"""Regularity classifiers against the oracle, plus witness contracts."""

import pytest

import naive
from conftest import from_naive

from hyperforge.classify import (CHAINS, RegularityClass, classify,
                                 classify_all, find_realizer)
from hyperforge.core import HyperOp, HyperStructure, ch2, tot2, validate, z2
from hyperforge.errors import NoOrder
from hyperforge.ideals import Flavor

PF, OF = Flavor.PLAIN, Flavor.ORDERED

ORACLE_NAMES = {
    RegularityClass.REGULAR: "regular",
    RegularityClass.INTRA_REGULAR: "intra-regular",
    RegularityClass.LEFT_REGULAR: "left-regular",
    RegularityClass.RIGHT_REGULAR: "right-regular",
    RegularityClass.LEFT_QUASI_REGULAR: "left-quasi-regular",
    RegularityClass.RIGHT_QUASI_REGULAR: "right-quasi-regular",
    RegularityClass.SEMISIMPLE: "semisimple",
}


def test_classify_examples():
    assert classify(tot2(), RegularityClass.REGULAR, PF).ok
    res = classify(z2(), RegularityClass.REGULAR, PF)
    assert not res.ok and res.failing == 1
    assert classify(ch2(), RegularityClass.REGULAR, OF).ok


def test_classify_all_examples():
    assert all(classify_all(tot2(), PF).values())
    assert not any(classify_all(z2(), PF).values())
    one = HyperStructure(HyperOp(1, [[1]]))
    validate(one)
    assert all(classify_all(one, PF).values())


def test_ordered_flavor_needs_order():
    bare = HyperStructure(tot2().op, None)
    validate(bare)
    with pytest.raises(NoOrder):
        classify(bare, RegularityClass.REGULAR, OF)


def test_classify_matches_oracle_exhaustive_n2():
    for table in naive.all_tables(2):
        if not naive.is_associative(table):
            continue
        s_plain = from_naive(table)
        discrete = naive.all_partial_orders(2)[-1]
        for cls, name in ORACLE_NAMES.items():
            assert classify(s_plain, cls, PF).ok == \
                naive.satisfies_class(table, discrete, name, False)
        for le in naive.all_partial_orders(2):
            if not naive.is_compatible(table, le, 2):
                continue
            s = from_naive(table, le)
            for cls, name in ORACLE_NAMES.items():
                assert classify(s, cls, OF).ok == \
                    naive.satisfies_class(table, le, name, True), (table, le, name)


def test_witnesses_realize_membership_and_are_least():
    """Realizer tuples actually witness the chain, and the witness search
    scans in lexicographic order so the returned tuple is minimal."""
    s = ch2()
    table = _sets(s)
    res = classify(s, RegularityClass.INTRA_REGULAR, OF)
    assert res.ok
    for a, w in res.witnesses.items():
        best = None
        for x in range(2):
            for y in range(2):
                for t in range(2):
                    reach = naive.prod_chain(table, [frozenset([x]), frozenset([a]),
                                                     frozenset([a]), frozenset([y])])
                    if t in reach and s.order.leq(a, t):
                        cand = (x, y, t)
                        best = cand if best is None or cand < best else best
        assert w == best


def _sets(s):
    from hyperforge.core import members
    return tuple(tuple(frozenset(members(c)) for c in row) for row in s.op.table)


def test_find_realizer_none_when_class_fails():
    assert find_realizer(z2(), RegularityClass.REGULAR, 1, PF) is None
    assert find_realizer(tot2(), RegularityClass.SEMISIMPLE, 0, PF) == (0, 0, 0)


def test_regularity_chain_assertions_hold_on_random_corpus():
    """classify_all raises if the provable implication chain breaks; sweeping
    a random corpus is a smoke test that it never does."""
    from hyperforge.explore import EnumSpec, enumerate_structures
    spec = EnumSpec(n=3, ordered=True, compatible=True, mode="random",
                    seed=23, count=300)
    for s in enumerate_structures(spec):
        classify_all(s, PF)
        classify_all(s, OF)


def test_left_right_regular_imply_intra_regular_ordered():
    for table in naive.all_tables(2):
        if not naive.is_associative(table):
            continue
        for le in naive.all_partial_orders(2):
            if not naive.is_compatible(table, le, 2):
                continue
            s = from_naive(table, le)
            intra = classify(s, RegularityClass.INTRA_REGULAR, OF).ok
            if classify(s, RegularityClass.LEFT_REGULAR, OF).ok:
                assert intra
            if classify(s, RegularityClass.RIGHT_REGULAR, OF).ok:
                assert intra


def test_chain_templates_cover_all_classes():
    assert set(CHAINS) == set(RegularityClass)
