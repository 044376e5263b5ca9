"""Ideal predicates, generators, and enumeration against the naive oracle."""

import pytest

import naive
from conftest import from_naive

from hyperforge.core import full_mask, mask_of
from hyperforge.core import ch2, sl2, tot2, z2
from hyperforge.errors import EmptySubset, NoOrder
from hyperforge.ideals import (Flavor, IdealKind, enumerate_ideals,
                               generate_ideal, is_ideal, is_idempotent_subset,
                               is_subidempotent_subset)

H2 = full_mask(2)
PF, OF = Flavor.PLAIN, Flavor.ORDERED

KIND_NAMES = {IdealKind.RIGHT: "right", IdealKind.LEFT: "left",
              IdealKind.TWO_SIDED: "two-sided", IdealKind.BI: "bi",
              IdealKind.QUASI: "quasi"}


def test_is_ideal_examples():
    s = z2()
    for kind in (IdealKind.RIGHT, IdealKind.LEFT, IdealKind.TWO_SIDED):
        assert is_ideal(s, 1, kind, PF).ok
    verdict = is_ideal(s, 2, IdealKind.RIGHT, PF)
    assert not verdict.ok
    assert verdict.witness == 0          # {1}*H = {0} escapes through 0
    for fab in (z2, sl2, tot2, ch2):
        t = fab()
        for kind in IdealKind:
            assert is_ideal(t, H2, kind, PF).ok
            assert is_ideal(t, H2, kind, OF).ok


def test_is_ideal_preconditions():
    with pytest.raises(EmptySubset):
        is_ideal(sl2(), 0, IdealKind.RIGHT, PF)
    from hyperforge.core import HyperStructure
    unordered = HyperStructure(sl2().op, None)
    with pytest.raises(NoOrder):
        is_ideal(unordered, 1, IdealKind.RIGHT, OF)


def test_generate_ideal_examples():
    assert generate_ideal(sl2(), 2, IdealKind.RIGHT, PF) == H2
    assert generate_ideal(sl2(), 1, IdealKind.RIGHT, PF) == 1
    for kind in (IdealKind.RIGHT, IdealKind.LEFT, IdealKind.TWO_SIDED):
        assert generate_ideal(sl2(), H2, kind, PF) == H2
        assert generate_ideal(ch2(), H2, kind, OF) == H2


def test_generate_ideal_matches_enumeration_exhaustive_n2():
    """Formula output equals the least enumerated ideal containing the seed."""
    kinds = [(IdealKind.RIGHT, "right"), (IdealKind.LEFT, "left"),
             (IdealKind.TWO_SIDED, "two-sided")]
    for table in naive.all_tables(2):
        if not naive.is_associative(table):
            continue
        for le in naive.all_partial_orders(2):
            if not naive.is_compatible(table, le, 2):
                continue
            s = from_naive(table, le)
            for A_set in naive.nonempty_subsets(2):
                A = mask_of(A_set)
                for kind, name in kinds:
                    for flavor, ordered in ((PF, False), (OF, True)):
                        got = generate_ideal(s, A, kind, flavor)
                        want = naive.generated_ideal(table, le, A_set, name, ordered)
                        assert got == mask_of(want)


def test_idempotent_examples():
    assert is_idempotent_subset(tot2(), H2, PF)
    assert is_idempotent_subset(z2(), 1, PF)
    assert not is_idempotent_subset(z2(), H2, PF)
    assert is_idempotent_subset(ch2(), 1, OF)
    assert is_subidempotent_subset(z2(), H2, PF)   # H*H = {0} inside H


def test_enumerate_examples():
    assert enumerate_ideals(z2(), IdealKind.RIGHT, PF) == [1, 3]
    for kind in IdealKind:
        assert enumerate_ideals(tot2(), kind, PF) == [3]
    for fab in (z2, sl2, tot2, ch2):
        s = fab()
        for kind in IdealKind:
            for flavor in (PF, OF):
                assert H2 in enumerate_ideals(s, kind, flavor)


def test_enumeration_matches_oracle_exhaustive_n2():
    for table in naive.all_tables(2):
        s_plain = from_naive(table)
        for kind, name in KIND_NAMES.items():
            got = enumerate_ideals(s_plain, kind, PF)
            want = [mask_of(a) for a in
                    naive.enumerate_ideals(table, naive.all_partial_orders(2)[-1],
                                           name, False)]
            assert got == sorted(want), (table, name)
        for le in naive.all_partial_orders(2):
            if not naive.is_compatible(table, le, 2):
                continue
            s = from_naive(table, le)
            for kind, name in KIND_NAMES.items():
                got = enumerate_ideals(s, kind, OF)
                want = [mask_of(a) for a in
                        naive.enumerate_ideals(table, le, name, True)]
                assert got == sorted(want), (table, sorted(le), name)


def test_right_left_pairs_always_meet():
    for table in naive.all_tables(2):
        s = from_naive(table)
        for A in enumerate_ideals(s, IdealKind.RIGHT, PF):
            for B in enumerate_ideals(s, IdealKind.LEFT, PF):
                assert A & B != 0


def test_one_sided_ideals_subidempotent_ordered():
    for table in naive.all_tables(2):
        for le in naive.all_partial_orders(2):
            if not naive.is_compatible(table, le, 2):
                continue
            s = from_naive(table, le)
            for kind in (IdealKind.RIGHT, IdealKind.LEFT):
                for A in enumerate_ideals(s, kind, OF):
                    assert is_subidempotent_subset(s, A, OF)


def test_two_sided_meets_are_ideals():
    for table in naive.all_tables(2):
        for le in naive.all_partial_orders(2):
            s = from_naive(table, le)
            two = enumerate_ideals(s, IdealKind.TWO_SIDED, OF)
            for A in two:
                for B in two:
                    assert A & B != 0
                    assert is_ideal(s, A & B, IdealKind.TWO_SIDED, OF).ok


def test_left_ideals_are_bi_ideals():
    from hyperforge.explore import EnumSpec, enumerate_structures
    spec = EnumSpec(n=3, mode="random", seed=5, count=200)
    for s in enumerate_structures(spec):
        for flavor in (PF,):
            for L in enumerate_ideals(s, IdealKind.LEFT, flavor):
                assert is_ideal(s, L, IdealKind.BI, flavor).ok


def test_closed_products_of_ideals_random_n3():
    """Right*anything and left*right closed products give bi-ideals and
    two-sided ideals respectively, on random compatible ordered structures."""
    from hyperforge.explore import EnumSpec, enumerate_structures
    from hyperforge.setcalc import down_closure, product
    spec = EnumSpec(n=3, ordered=True, compatible=True, mode="random",
                    seed=11, count=120)
    for s in enumerate_structures(spec):
        rights = enumerate_ideals(s, IdealKind.RIGHT, OF)
        lefts = enumerate_ideals(s, IdealKind.LEFT, OF)
        for C in rights:
            for D in range(1, 8):
                B = down_closure(s, product(s, C, D))
                assert is_ideal(s, B, IdealKind.BI, OF).ok
        for A in lefts:
            for B in rights:
                P = down_closure(s, product(s, A, B))
                assert is_ideal(s, P, IdealKind.TWO_SIDED, OF).ok
