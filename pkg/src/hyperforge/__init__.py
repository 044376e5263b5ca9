"""hyperforge: a finite-model engine for (ordered) hypersemigroups.

Validates structure axioms, computes ideal- and congruence-theoretic
objects, executes a catalog of equivalence theorems by brute force, and
searches small structures for counterexamples — in particular for ordered
hypersemigroups whose generated-filter relation differs from the least
semilattice congruence.
"""

from .core import (FIXTURES, HyperOp, HyperStructure, PartialOrder,
                   ValidationReport, Verdict, check_associativity,
                   check_compatibility, check_order_axioms, check_totality,
                   ch2, lz2, rz2, sl2, tot2, tot2_chain, validate, z2)
from .classify import ClassReport, RegularityClass, classify, classify_all
from .congruence import (Partition, enumerate_filters, generated_filter,
                         is_complete, is_congruence,
                         is_semilattice_congruence,
                         least_semilattice_congruence, relation_N, sigma_I)
from .explore import (EnumSpec, ExhaustionCertificate, SearchFinding,
                      canonical_form, classify_corpus, enumerate_structures,
                      search_p85)
from .fuzzy import (FuzzyIdealKind, FuzzySubset, characteristic,
                    fuzzy_compose, fuzzy_leq, fuzzy_meet, grade_grid_samples,
                    is_fuzzy_ideal, reverses_order)
from .ideals import (Flavor, IdealKind, enumerate_ideals, generate_ideal,
                     is_ideal, is_idempotent_subset, is_subidempotent_subset)
from .setcalc import down_closure, product, product_chain, set_dominates
from .special import PrimeVariant, ideals_form_chain, is_prime_subset
from .verify import (ALL_THEOREM_IDS, TheoremReport, VerifyConfig,
                     check_theorem, run_suite)

__version__ = "0.1.0"
