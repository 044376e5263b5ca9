"""Prime-family predicates and ideal-chain checks."""

import pytest

import naive
from conftest import from_naive

from hyperforge.core import HyperOp, HyperStructure, full_mask, mask_of, validate
from hyperforge.core import sl2, tot2, z2
from hyperforge.errors import EmptySubset
from hyperforge.ideals import Flavor, IdealKind, enumerate_ideals
from hyperforge.special import PrimeVariant, ideals_form_chain, is_prime_subset

PF, OF = Flavor.PLAIN, Flavor.ORDERED


def test_prime_examples():
    assert is_prime_subset(sl2(), 1, PrimeVariant.PRIME_SIMPLE, PF).ok
    # the oracle settled this one: {0} in the constant structure is NOT
    # semiprime, since 1∘1 = {0} lands inside while 1 stays out
    verdict = is_prime_subset(z2(), 1, PrimeVariant.SEMIPRIME, PF)
    assert not verdict.ok
    assert verdict.witness == 1
    H = full_mask(2)
    for variant in PrimeVariant:
        assert is_prime_subset(z2(), H, variant, PF).ok
        assert is_prime_subset(tot2(), H, variant, PF).ok


def test_empty_subset_rejected():
    with pytest.raises(EmptySubset):
        is_prime_subset(sl2(), 0, PrimeVariant.PRIME_SIMPLE, PF)


def test_elementwise_matches_subset_definitions_exhaustive():
    """Element-wise prime/semiprime shortcuts equal the subset-quantified
    definitions on every n=2 table and every nonempty candidate."""
    for table in naive.all_tables(2):
        s = from_naive(table)
        for T_set in naive.nonempty_subsets(2):
            T = mask_of(T_set)
            assert is_prime_subset(s, T, PrimeVariant.PRIME_SIMPLE, PF).ok == \
                naive.is_prime_subset_def(table, T_set)
            assert is_prime_subset(s, T, PrimeVariant.SEMIPRIME, PF).ok == \
                naive.is_semiprime_def(table, T_set)


def test_elementwise_matches_subset_definitions_sampled_n3():
    from hyperforge.explore import EnumSpec, enumerate_structures
    from conftest import to_naive_table
    spec = EnumSpec(n=3, associative=False, mode="random", seed=77, count=80)
    for s in enumerate_structures(spec):
        table = to_naive_table(s)
        for T_set in naive.nonempty_subsets(3):
            T = mask_of(T_set)
            assert is_prime_subset(s, T, PrimeVariant.PRIME_SIMPLE, PF).ok == \
                naive.is_prime_subset_def(table, T_set)
            assert is_prime_subset(s, T, PrimeVariant.SEMIPRIME, PF).ok == \
                naive.is_semiprime_def(table, T_set)


def test_split_variant():
    # 1∘1 = {0,1} meets {0} without landing inside: split clause fails
    s = HyperStructure(HyperOp.from_sets(2, [[(0,), (0,)], [(0,), (0, 1)]]))
    validate(s)
    assert is_prime_subset(s, 1, PrimeVariant.PRIME_SIMPLE, PF).ok
    verdict = is_prime_subset(s, 1, PrimeVariant.PRIME_WITH_SPLIT, PF)
    assert not verdict.ok
    assert verdict.witness == (1, 1)


def test_weakly_prime_matches_oracle_exhaustive_n2():
    for table in naive.all_tables(2):
        for le in naive.all_partial_orders(2):
            s = from_naive(table, le)
            for T_set in naive.nonempty_subsets(2):
                T = mask_of(T_set)
                for flavor, ordered in ((PF, False), (OF, True)):
                    got = is_prime_subset(s, T, PrimeVariant.WEAKLY_PRIME, flavor).ok
                    assert got == naive.is_weakly_prime(table, le, T_set, ordered)


def test_ideals_form_chain_examples():
    assert ideals_form_chain(z2(), PF).ok
    one = HyperStructure(HyperOp(1, [[1]]))
    validate(one)
    assert ideals_form_chain(one, PF).ok


def test_ideals_form_chain_counterexample_n3():
    """Search at n=3 found incomparable two-sided ideals in the constant
    structure; any pair of two-sided ideals still meets, so the minimal
    incomparable pairs share the absorbing element."""
    s = HyperStructure(HyperOp(3, [[1] * 3 for _ in range(3)]))
    validate(s)
    ideals = enumerate_ideals(s, IdealKind.TWO_SIDED, PF)
    assert ideals == [0b001, 0b011, 0b101, 0b111]
    verdict = ideals_form_chain(s, PF)
    assert not verdict.ok
    assert verdict.witness == (0b011, 0b101)
