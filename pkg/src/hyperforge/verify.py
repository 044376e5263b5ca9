"""The executable theorem catalog.

Every catalog entry evaluates both sides of a numbered statement on a
concrete structure and reports agreement.  The two sides of an equivalence
are computed by independent code paths (definitional membership chains vs.
ideal/filter enumeration, crisp vs. fuzzy), so a "holds" verdict doubles as
an oracle cross-check of the lower modules.

Catalog identifiers (L4, T8, R36.1, ...) are stable API: the CLI accepts
them, reports carry them, and the census machinery counts by them.  Fuzzy
universal quantifiers run over a finite grade grid; this is complete for the
piecewise min/max statements checked here whenever the grid contains the
grades of a would-be counterexample (see README), and the grid is part of
the configuration.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .classify import RegularityClass, classify, find_realizer
from .congruence import (Partition, _is_semilattice_congruence_quiet,
                         all_partitions, bell_number, is_congruence,
                         is_filter, least_semilattice_congruence, relation_N,
                         sigma_I)
from .core import (HyperStructure, check_order_axioms, check_totality,
                   full_mask, members, nonempty_submasks)
from .errors import BudgetExceeded, CarrierTooLarge
from .fuzzy import (DEFAULT_GRID, FuzzyIdealKind, FuzzySubset, fuzzy_compose,
                    fuzzy_leq, fuzzy_meet, grade_grid_samples, is_fuzzy_ideal,
                    reverses_order)
from .ideals import (Flavor, IdealKind, enumerate_ideals, generate_ideal,
                     is_ideal)
from .setcalc import down_closure, product, product_chain
from .special import PrimeVariant, ideals_form_chain, is_prime_subset

PF = Flavor.PLAIN
OF = Flavor.ORDERED


@dataclass(frozen=True)
class VerifyConfig:
    grid: tuple = DEFAULT_GRID
    fuzzy_budget: int = 4_000_000
    partition_budget: int = 50_000


DEFAULT_CONFIG = VerifyConfig()


@dataclass(frozen=True)
class TheoremReport:
    theorem: str
    verdict: str  # holds | fails | not-applicable
    witness: object
    micros: int = 0

    @property
    def failed(self) -> bool:
        return self.verdict == "fails"

    def canonical(self) -> dict:
        """Serializable content; timing deliberately excluded so identical
        inputs give byte-identical reports."""
        return {"theorem": self.theorem, "verdict": self.verdict,
                "witness": self.witness}


# --- small helpers -------------------------------------------------------------

def _set(mask: int) -> list[int]:
    return members(mask)


def _subsets(s: HyperStructure):
    return nonempty_submasks(s.n)


def _rights(s, fl):
    return enumerate_ideals(s, IdealKind.RIGHT, fl)


def _lefts(s, fl):
    return enumerate_ideals(s, IdealKind.LEFT, fl)


def _twos(s, fl):
    return enumerate_ideals(s, IdealKind.TWO_SIDED, fl)


def _bis(s, fl):
    return enumerate_ideals(s, IdealKind.BI, fl)


def _cls(s, c, fl) -> bool:
    return classify(s, c, fl).ok


def _dprod(s, *ops) -> int:
    return down_closure(s, product_chain(s, list(ops)))


def _pairs_sub(s, As, Bs, rhs) -> tuple[bool, object]:
    """All A in As, B in Bs satisfy A∩B ⊆ rhs(A, B)."""
    for A in As:
        for B in Bs:
            if (A & B) & ~rhs(A, B):
                return False, {"A": _set(A), "B": _set(B)}
    return True, None


def _pairs_eq(s, As, Bs, rhs) -> tuple[bool, object]:
    for A in As:
        for B in Bs:
            if (A & B) != rhs(A, B):
                return False, {"A": _set(A), "B": _set(B)}
    return True, None


def _all_idem(s, sets, square) -> tuple[bool, object]:
    for A in sets:
        if square(A) != A:
            return False, {"A": _set(A)}
    return True, None


def _equiv(items: dict[str, tuple[bool, object]]) -> tuple[bool, dict]:
    """Multi-item equivalence: every item must carry the same truth value."""
    vals = {k: v[0] for k, v in items.items()}
    ok = len(set(vals.values())) == 1
    payload: dict = {"items": vals}
    if not ok:
        payload["counterexamples"] = {
            k: w for k, (v, w) in items.items() if not v and w is not None}
    return ok, payload


def _implications(pairs: Sequence[tuple[str, bool, bool]]) -> tuple[bool, object]:
    for name, hyp, concl in pairs:
        if hyp and not concl:
            return False, {"implication": name}
    return True, None


# --- fuzzy quantifier families --------------------------------------------------

_FAMILY_PREDICATES = {
    "any": None,
    "right": FuzzyIdealKind.RIGHT,
    "left": FuzzyIdealKind.LEFT,
    "ideal": FuzzyIdealKind.TWO_SIDED,
    "bi": FuzzyIdealKind.BI,
}


def _fuzzy_family(s: HyperStructure, cfg: VerifyConfig, key: str,
                  ordered: bool = False) -> list[FuzzySubset]:
    grid = tuple(sorted(set(Fraction(g) for g in cfg.grid)))
    if len(grid) ** (2 * s.n) > cfg.fuzzy_budget:
        raise BudgetExceeded(
            f"fuzzy grid {len(grid)}^{s.n} squared exceeds budget {cfg.fuzzy_budget}")
    cache_key = ("fuzzy_family", key, ordered, grid)
    cached = s._cache.get(cache_key)
    if cached is not None:
        return cached
    kind = _FAMILY_PREDICATES[key]
    out = []
    for f in grade_grid_samples(s.n, grid):
        if kind is not None and not is_fuzzy_ideal(s, f, kind).ok:
            continue
        if ordered and not reverses_order(s, f):
            continue
        out.append(f)
    s._cache[cache_key] = out
    return out


def _fuzzy_pairs(s, F, G, flavor, rel) -> tuple[bool, object]:
    for f in F:
        for g in G:
            if not rel(fuzzy_meet(f, g), fuzzy_compose(s, f, g, flavor)):
                return False, {"f": f.as_strings(), "g": g.as_strings()}
    return True, None


def _fuzzy_idem(s, F, flavor) -> tuple[bool, object]:
    for f in F:
        if fuzzy_compose(s, f, f, flavor) != f:
            return False, {"f": f.as_strings()}
    return True, None


_LEQ = fuzzy_leq
_EQF = lambda a, b: a == b


# --- individual theorem checks ---------------------------------------------------

def _l4(s, cfg):
    for A in _subsets(s):
        for B in _subsets(s):
            lhs = product(s, down_closure(s, A), down_closure(s, B))
            if lhs & ~down_closure(s, product(s, A, B)):
                return False, {"A": _set(A), "B": _set(B)}
    return True, None


def _l5(s, cfg):
    kinds = (IdealKind.RIGHT, IdealKind.LEFT, IdealKind.TWO_SIDED)
    for A in _subsets(s):
        for kind in kinds:
            formula = generate_ideal(s, A, kind, OF)
            oracle = full_mask(s.n)
            for B in enumerate_ideals(s, kind, OF):
                if A & ~B == 0:
                    oracle &= B
            if formula != oracle:
                return False, {"A": _set(A), "kind": kind.value,
                               "formula": _set(formula), "meet": _set(oracle)}
    return True, None


def _l6(s, cfg):
    for A in _rights(s, PF):
        for B in _lefts(s, PF):
            if A & B == 0:
                return False, {"A": _set(A), "B": _set(B)}
    return True, None


def _l7(s, cfg):
    for A in _subsets(s):
        for B in _subsets(s):
            dA, dB = down_closure(s, A), down_closure(s, B)
            base = down_closure(s, product(s, A, B))
            variants = (down_closure(s, product(s, dA, dB)),
                        down_closure(s, product(s, dA, B)),
                        down_closure(s, product(s, A, dB)))
            if any(v != base for v in variants):
                return False, {"A": _set(A), "B": _set(B)}
    return True, None


def _t8(s, cfg):
    return _equiv({
        "regular": (_cls(s, RegularityClass.REGULAR, OF), None),
        "meet-eq-closed-product": _pairs_eq(
            s, _rights(s, OF), _lefts(s, OF), lambda A, B: _dprod(s, A, B)),
        "meet-sub-closed-product": _pairs_sub(
            s, _rights(s, OF), _lefts(s, OF), lambda A, B: _dprod(s, A, B)),
    })


def _t11(s, cfg):
    return _equiv({
        "intra-regular": (_cls(s, RegularityClass.INTRA_REGULAR, OF), None),
        "meet-sub-reversed-product": _pairs_sub(
            s, _rights(s, OF), _lefts(s, OF), lambda A, B: _dprod(s, B, A)),
    })


def _bi_products(s, Cs, Ds):
    for C in Cs:
        for D in Ds:
            B = _dprod(s, C, D)
            if not is_ideal(s, B, IdealKind.BI, OF).ok:
                return False, {"C": _set(C), "D": _set(D), "product": _set(B)}
    return True, None


def _p13(s, cfg):
    return _bi_products(s, _rights(s, OF), list(_subsets(s)))


def _p14(s, cfg):
    return _bi_products(s, _lefts(s, OF), list(_subsets(s)))


def _p15(s, cfg):
    return _bi_products(s, _rights(s, OF), _lefts(s, OF))


def _cd_products(s):
    return {_dprod(s, C, D) for C in _rights(s, OF) for D in _lefts(s, OF)}


def _p16(s, cfg):
    if not _cls(s, RegularityClass.REGULAR, OF):
        return True, {"vacuous": True}
    prods = _cd_products(s)
    for B in _bis(s, OF):
        if B not in prods:
            return False, {"bi-ideal": _set(B)}
    return True, None


def _t17(s, cfg):
    if not _cls(s, RegularityClass.REGULAR, OF):
        return True, {"vacuous": True}
    bis = set(_bis(s, OF))
    prods = _cd_products(s)
    if bis == prods:
        return True, None
    diff = sorted(bis.symmetric_difference(prods))
    return False, {"difference": [_set(d) for d in diff]}


def _p20(s, cfg):
    for A in _rights(s, OF) + _lefts(s, OF):
        if _dprod(s, A, A) & ~A:
            return False, {"A": _set(A)}
    if s.is_associative and _cls(s, RegularityClass.REGULAR, OF):
        ok, wit = _all_idem(s, _rights(s, OF) + _lefts(s, OF),
                            lambda A: _dprod(s, A, A))
        if not ok:
            return False, {"regular-idempotence": wit}
    return True, None


def _t21(s, cfg):
    idem = _all_idem(s, _rights(s, OF), lambda A: _dprod(s, A, A))
    idem_l = _all_idem(s, _lefts(s, OF), lambda A: _dprod(s, A, A))
    quasi_ok, quasi_wit = True, None
    for A in _rights(s, OF):
        for B in _lefts(s, OF):
            Q = _dprod(s, A, B)
            if not is_ideal(s, Q, IdealKind.QUASI, OF).ok:
                quasi_ok, quasi_wit = False, {"A": _set(A), "B": _set(B)}
                break
        if not quasi_ok:
            break
    rhs = (idem[0] and idem_l[0] and quasi_ok,
           idem[1] or idem_l[1] or quasi_wit)
    return _equiv({
        "regular": (_cls(s, RegularityClass.REGULAR, OF), None),
        "idempotent-and-quasi": rhs,
    })


def _subset_prime(s, T) -> bool:
    for A in _subsets(s):
        for B in _subsets(s):
            if product(s, A, B) & ~T == 0 and (A & ~T) and (B & ~T):
                return False
    return True


def _p23(s, cfg):
    for T in _subsets(s):
        elem = is_prime_subset(s, T, PrimeVariant.PRIME_SIMPLE, PF).ok
        if elem != _subset_prime(s, T):
            return False, {"T": _set(T)}
    return True, None


def _subset_semiprime(s, T) -> bool:
    for A in _subsets(s):
        if product(s, A, A) & ~T == 0 and A & ~T:
            return False
    return True


def _p26(s, cfg):
    for T in _subsets(s):
        elem = is_prime_subset(s, T, PrimeVariant.SEMIPRIME, PF).ok
        if elem != _subset_semiprime(s, T):
            return False, {"T": _set(T)}
    return True, None


def _p27(s, cfg):
    two = _twos(s, OF)
    for A in two:
        for B in two:
            meet = A & B
            if meet == 0 or not is_ideal(s, meet, IdealKind.TWO_SIDED, OF).ok:
                return False, {"A": _set(A), "B": _set(B)}
    return True, None


def _t28(s, cfg):
    two = _twos(s, OF)
    return _equiv({
        "ideals-idempotent": _all_idem(s, two, lambda A: _dprod(s, A, A)),
        "meet-eq-closed-product": _pairs_eq(s, two, two,
                                            lambda A, B: _dprod(s, A, B)),
    })


def _t30(s, cfg):
    return _equiv({
        "semisimple": (_cls(s, RegularityClass.SEMISIMPLE, OF), None),
        "ideals-idempotent": _all_idem(s, _twos(s, OF),
                                       lambda A: _dprod(s, A, A)),
    })


def _ideal_products(s, As, Bs):
    for A in As:
        for B in Bs:
            P = _dprod(s, A, B)
            if not is_ideal(s, P, IdealKind.TWO_SIDED, OF).ok:
                return False, {"A": _set(A), "B": _set(B), "product": _set(P)}
    return True, None


def _p31(s, cfg):
    return _ideal_products(s, _lefts(s, OF), _rights(s, OF))


def _c32(s, cfg):
    return _ideal_products(s, _twos(s, OF), _twos(s, OF))


def _t33(s, cfg):
    two = _twos(s, OF)
    weakly = True
    wit = None
    for T in two:
        v = is_prime_subset(s, T, PrimeVariant.WEAKLY_PRIME, OF)
        if not v.ok:
            weakly, wit = False, {"T": _set(T)}
            break
    idem = _all_idem(s, two, lambda A: _dprod(s, A, A))
    chain = ideals_form_chain(s, OF)
    return _equiv({
        "ideals-weakly-prime": (weakly, wit),
        "idempotent-and-chain": (idem[0] and chain.ok, idem[1]),
    })


def _t34(s, cfg):
    two = _twos(s, OF)

    def all_prime(variant):
        for T in two:
            if not is_prime_subset(s, T, variant, PF).ok:
                return False, {"T": _set(T)}
        return True, None

    simple = all_prime(PrimeVariant.PRIME_SIMPLE)
    rhs = (ideals_form_chain(s, OF).ok
           and _cls(s, RegularityClass.INTRA_REGULAR, OF), None)
    ok, payload = _equiv({"ideals-prime": simple, "chain-and-intra": rhs})
    split = all_prime(PrimeVariant.PRIME_WITH_SPLIT)
    payload["split-variant"] = split[0]
    payload["split-variant-diverges"] = split[0] != simple[0]
    return ok, payload


def _r35(s, cfg):
    lr = _cls(s, RegularityClass.LEFT_REGULAR, OF)
    rr = _cls(s, RegularityClass.RIGHT_REGULAR, OF)
    intra = _cls(s, RegularityClass.INTRA_REGULAR, OF)
    reg = _cls(s, RegularityClass.REGULAR, OF)
    checks = [("left-regular=>intra-regular", lr, intra),
              ("right-regular=>intra-regular", rr, intra)]
    if reg:
        rl_idem = _all_idem(s, _rights(s, OF) + _lefts(s, OF),
                            lambda A: _dprod(s, A, A))
        checks.append(("regular=>one-sided-ideals-idempotent", True, rl_idem[0]))
    if intra:
        idem = _all_idem(s, _twos(s, OF), lambda A: _dprod(s, A, A))
        checks.append(("intra-regular=>ideals-idempotent", True, idem[0]))
    return _implications(checks)


def _r36_1(s, cfg):
    two = _twos(s, OF)
    for T in two:
        weakly = is_prime_subset(s, T, PrimeVariant.WEAKLY_PRIME, OF).ok
        cond = True
        for A in two:
            for B in two:
                lhs = _dprod(s, A, B) & _dprod(s, B, A)
                if lhs & ~T == 0 and (A & ~T) and (B & ~T):
                    cond = False
                    break
            if not cond:
                break
        if weakly != cond:
            return False, {"T": _set(T)}
    return True, None


def _r36_2(s, cfg):
    two = _twos(s, OF)
    for T in two:
        prime = is_prime_subset(s, T, PrimeVariant.PRIME_SIMPLE, PF).ok
        semi = is_prime_subset(s, T, PrimeVariant.SEMIPRIME, PF).ok
        weakly = is_prime_subset(s, T, PrimeVariant.WEAKLY_PRIME, OF).ok
        if prime != (semi and weakly):
            return False, {"T": _set(T)}
    commutative = all(s.op.table[a][b] == s.op.table[b][a]
                      for a in range(s.n) for b in range(s.n))
    if commutative:
        primes = {T for T in two
                  if is_prime_subset(s, T, PrimeVariant.PRIME_SIMPLE, PF).ok}
        weaklys = {T for T in two
                   if is_prime_subset(s, T, PrimeVariant.WEAKLY_PRIME, OF).ok}
        if primes != weaklys:
            return False, {"commutative-divergence":
                           [_set(t) for t in sorted(primes ^ weaklys)]}
    return True, None


def _gen_pair_item(s, fl, kind_a, kind_b, swap=False, closed=False):
    """R(A)-style item: gen_a(A) ∩ gen_b(A) ⊆ [down] gen product, all A."""
    for A in _subsets(s):
        ga = generate_ideal(s, A, kind_a, fl)
        gb = generate_ideal(s, A, kind_b, fl)
        lhs = ga & gb
        left, right = (gb, ga) if swap else (ga, gb)
        rhs = product(s, left, right)
        if closed:
            rhs = down_closure(s, rhs)
        if lhs & ~rhs:
            return False, {"A": _set(A)}
    return True, None


def _t37(s, cfg):
    rights, lefts = _rights(s, PF), _lefts(s, PF)
    return _equiv({
        "regular": (_cls(s, RegularityClass.REGULAR, PF), None),
        "meet-eq-product": _pairs_eq(s, rights, lefts,
                                     lambda A, B: product(s, A, B)),
        "meet-sub-product": _pairs_sub(s, rights, lefts,
                                       lambda A, B: product(s, A, B)),
        "generated-subsets": _gen_pair_item(s, PF, IdealKind.RIGHT, IdealKind.LEFT),
        "generated-elements": _gen_singletons(s, PF, IdealKind.RIGHT, IdealKind.LEFT),
    })


def _gen_singletons(s, fl, kind_a, kind_b, swap=False, closed=False):
    for a in range(s.n):
        A = 1 << a
        ga = generate_ideal(s, A, kind_a, fl)
        gb = generate_ideal(s, A, kind_b, fl)
        left, right = (gb, ga) if swap else (ga, gb)
        rhs = product(s, left, right)
        if closed:
            rhs = down_closure(s, rhs)
        if (ga & gb) & ~rhs:
            return False, {"a": a}
    return True, None


def _t38(s, cfg):
    FR = _fuzzy_family(s, cfg, "right")
    FL = _fuzzy_family(s, cfg, "left")
    return _equiv({
        "regular": (_cls(s, RegularityClass.REGULAR, PF), None),
        "meet-eq-compose": _fuzzy_pairs(s, FR, FL, PF, _EQF),
        "meet-below-compose": _fuzzy_pairs(s, FR, FL, PF, _LEQ),
    })


def _t39(s, cfg):
    rights, lefts = _rights(s, PF), _lefts(s, PF)
    return _equiv({
        "intra-regular": (_cls(s, RegularityClass.INTRA_REGULAR, PF), None),
        "meet-sub-reversed-product": _pairs_sub(
            s, rights, lefts, lambda A, B: product(s, B, A)),
        "generated-subsets": _gen_pair_item(s, PF, IdealKind.RIGHT,
                                            IdealKind.LEFT, swap=True),
        "generated-elements": _gen_singletons(s, PF, IdealKind.RIGHT,
                                              IdealKind.LEFT, swap=True),
    })


def _t40(s, cfg):
    FR = _fuzzy_family(s, cfg, "right")
    FL = _fuzzy_family(s, cfg, "left")
    ok, wit = True, None
    for f in FR:
        for g in FL:
            if not fuzzy_leq(fuzzy_meet(f, g), fuzzy_compose(s, g, f, PF)):
                ok, wit = False, {"f": f.as_strings(), "g": g.as_strings()}
                break
        if not ok:
            break
    return _equiv({
        "intra-regular": (_cls(s, RegularityClass.INTRA_REGULAR, PF), None),
        "meet-below-reversed-compose": (ok, wit),
    })


def _definitional_class(s, cls, fl):
    for a in range(s.n):
        if find_realizer(s, cls, a, fl) is None:
            return False, {"a": a}
    return True, None


def _chain_class_items(s, cls, fl):
    from .classify import element_reach, CHAINS, _chain_mask
    elem_ok, elem_wit = True, None
    for a in range(s.n):
        if not element_reach(s, cls, a, fl) >> a & 1:
            elem_ok, elem_wit = False, {"a": a}
            break
    sub_ok, sub_wit = True, None
    for A in _subsets(s):
        reach = _chain_mask(s, CHAINS[cls], A)
        if fl is OF:
            reach = down_closure(s, reach)
        if A & ~reach:
            sub_ok, sub_wit = False, {"A": _set(A)}
            break
    return (elem_ok, elem_wit), (sub_ok, sub_wit)


def _class_equiv(s, cls, fl):
    elem, sub = _chain_class_items(s, cls, fl)
    return _equiv({
        "definitional-witnesses": _definitional_class(s, cls, fl),
        "element-chain": elem,
        "subset-chain": sub,
    })


def _p42(s, cfg):
    return _class_equiv(s, RegularityClass.LEFT_QUASI_REGULAR, PF)


def _p50(s, cfg):
    return _class_equiv(s, RegularityClass.RIGHT_QUASI_REGULAR, PF)


def _p58(s, cfg):
    return _class_equiv(s, RegularityClass.SEMISIMPLE, PF)


def _p63(s, cfg):
    return _class_equiv(s, RegularityClass.LEFT_QUASI_REGULAR, OF)


def _t43(s, cfg):
    twos, subs = _twos(s, PF), list(_subsets(s))
    prod = lambda A, B: product(s, A, B)
    return _equiv({
        "left-quasi-regular": (_cls(s, RegularityClass.LEFT_QUASI_REGULAR, PF), None),
        "ideal-any": _pairs_sub(s, twos, subs, prod),
        "ideal-bi": _pairs_sub(s, twos, _bis(s, PF), prod),
        "ideal-left": _pairs_sub(s, twos, _lefts(s, PF), prod),
        "generated-subsets": _gen_pair_item(s, PF, IdealKind.TWO_SIDED, IdealKind.LEFT),
        "generated-elements": _gen_singletons(s, PF, IdealKind.TWO_SIDED, IdealKind.LEFT),
    })


def _t44(s, cfg):
    lefts = _lefts(s, PF)
    return _equiv({
        "left-quasi-regular": (_cls(s, RegularityClass.LEFT_QUASI_REGULAR, PF), None),
        "left-pairs": _pairs_sub(s, lefts, lefts, lambda A, B: product(s, A, B)),
    })


def _t45(s, cfg):
    return _equiv({
        "left-quasi-regular": (_cls(s, RegularityClass.LEFT_QUASI_REGULAR, PF), None),
        "left-ideals-idempotent": _all_idem(s, _lefts(s, PF),
                                            lambda A: product(s, A, A)),
    })


def _t46(s, cfg):
    FI = _fuzzy_family(s, cfg, "ideal")
    return _equiv({
        "left-quasi-regular": (_cls(s, RegularityClass.LEFT_QUASI_REGULAR, PF), None),
        "ideal-any": _fuzzy_pairs(s, FI, _fuzzy_family(s, cfg, "any"), PF, _LEQ),
        "ideal-bi": _fuzzy_pairs(s, FI, _fuzzy_family(s, cfg, "bi"), PF, _LEQ),
        "ideal-left": _fuzzy_pairs(s, FI, _fuzzy_family(s, cfg, "left"), PF, _LEQ),
    })


def _t47(s, cfg):
    FL = _fuzzy_family(s, cfg, "left")
    return _equiv({
        "left-quasi-regular": (_cls(s, RegularityClass.LEFT_QUASI_REGULAR, PF), None),
        "left-pairs": _fuzzy_pairs(s, FL, FL, PF, _LEQ),
    })


def _t48(s, cfg):
    return _equiv({
        "left-quasi-regular": (_cls(s, RegularityClass.LEFT_QUASI_REGULAR, PF), None),
        "fuzzy-left-idempotent": _fuzzy_idem(s, _fuzzy_family(s, cfg, "left"), PF),
    })


def _t51(s, cfg):
    twos, subs = _twos(s, PF), list(_subsets(s))
    prod = lambda A, B: product(s, A, B)
    return _equiv({
        "right-quasi-regular": (_cls(s, RegularityClass.RIGHT_QUASI_REGULAR, PF), None),
        "any-ideal": _pairs_sub(s, subs, twos, prod),
        "bi-ideal": _pairs_sub(s, _bis(s, PF), twos, prod),
        "right-ideal": _pairs_sub(s, _rights(s, PF), twos, prod),
        "generated-subsets": _gen_pair_item(s, PF, IdealKind.RIGHT, IdealKind.TWO_SIDED),
        "generated-elements": _gen_singletons(s, PF, IdealKind.RIGHT, IdealKind.TWO_SIDED),
    })


def _t52(s, cfg):
    rights = _rights(s, PF)
    return _equiv({
        "right-quasi-regular": (_cls(s, RegularityClass.RIGHT_QUASI_REGULAR, PF), None),
        "right-pairs": _pairs_sub(s, rights, rights, lambda A, B: product(s, A, B)),
    })


def _t53(s, cfg):
    return _equiv({
        "right-quasi-regular": (_cls(s, RegularityClass.RIGHT_QUASI_REGULAR, PF), None),
        "right-ideals-idempotent": _all_idem(s, _rights(s, PF),
                                             lambda A: product(s, A, A)),
    })


def _t54(s, cfg):
    FI = _fuzzy_family(s, cfg, "ideal")
    return _equiv({
        "right-quasi-regular": (_cls(s, RegularityClass.RIGHT_QUASI_REGULAR, PF), None),
        "any-ideal": _fuzzy_pairs(s, _fuzzy_family(s, cfg, "any"), FI, PF, _LEQ),
        "bi-ideal": _fuzzy_pairs(s, _fuzzy_family(s, cfg, "bi"), FI, PF, _LEQ),
        "right-ideal": _fuzzy_pairs(s, _fuzzy_family(s, cfg, "right"), FI, PF, _LEQ),
    })


def _t55(s, cfg):
    FR = _fuzzy_family(s, cfg, "right")
    return _equiv({
        "right-quasi-regular": (_cls(s, RegularityClass.RIGHT_QUASI_REGULAR, PF), None),
        "right-pairs": _fuzzy_pairs(s, FR, FR, PF, _LEQ),
    })


def _t56(s, cfg):
    return _equiv({
        "right-quasi-regular": (_cls(s, RegularityClass.RIGHT_QUASI_REGULAR, PF), None),
        "fuzzy-right-idempotent": _fuzzy_idem(s, _fuzzy_family(s, cfg, "right"), PF),
    })


def _t59(s, cfg):
    twos = _twos(s, PF)

    def gen_idem():
        for A in _subsets(s):
            I = generate_ideal(s, A, IdealKind.TWO_SIDED, PF)
            if product(s, I, I) != I:
                return False, {"A": _set(A)}
        return True, None

    def gen_idem_elems():
        for a in range(s.n):
            I = generate_ideal(s, 1 << a, IdealKind.TWO_SIDED, PF)
            if product(s, I, I) != I:
                return False, {"a": a}
        return True, None

    return _equiv({
        "semisimple": (_cls(s, RegularityClass.SEMISIMPLE, PF), None),
        "ideals-idempotent": _all_idem(s, twos, lambda A: product(s, A, A)),
        "meet-eq-product": _pairs_eq(s, twos, twos, lambda A, B: product(s, A, B)),
        "generated-subsets": gen_idem(),
        "generated-elements": gen_idem_elems(),
    })


def _p60(s, cfg):
    def chain(fl):
        reg = _cls(s, RegularityClass.REGULAR, fl)
        lqr = _cls(s, RegularityClass.LEFT_QUASI_REGULAR, fl)
        rqr = _cls(s, RegularityClass.RIGHT_QUASI_REGULAR, fl)
        ss = _cls(s, RegularityClass.SEMISIMPLE, fl)
        intra = _cls(s, RegularityClass.INTRA_REGULAR, fl)
        return [(f"{fl.value}:regular=>quasi-regular", reg, lqr and rqr),
                (f"{fl.value}:quasi-regular=>semisimple", lqr or rqr, ss),
                (f"{fl.value}:intra-regular=>semisimple", intra, ss)]

    checks = chain(PF)
    if s.order is not None and s.is_order_compatible:
        checks += chain(OF)
    return _implications(checks)


def _t61(s, cfg):
    FI = _fuzzy_family(s, cfg, "ideal")
    return _equiv({
        "semisimple": (_cls(s, RegularityClass.SEMISIMPLE, PF), None),
        "ideal-pairs-eq": _fuzzy_pairs(s, FI, FI, PF, _EQF),
        "fuzzy-ideal-idempotent": _fuzzy_idem(s, FI, PF),
    })


def _t64(s, cfg):
    twos, subs = _twos(s, OF), list(_subsets(s))
    dprod = lambda A, B: _dprod(s, A, B)
    return _equiv({
        "left-quasi-regular": (_cls(s, RegularityClass.LEFT_QUASI_REGULAR, OF), None),
        "ideal-any": _pairs_sub(s, twos, subs, dprod),
        "ideal-bi": _pairs_sub(s, twos, _bis(s, OF), dprod),
        "ideal-left": _pairs_sub(s, twos, _lefts(s, OF), dprod),
        "generated-subsets": _gen_pair_item(s, OF, IdealKind.TWO_SIDED,
                                            IdealKind.LEFT, closed=True),
        "generated-elements": _gen_singletons(s, OF, IdealKind.TWO_SIDED,
                                              IdealKind.LEFT, closed=True),
    })


def _t65(s, cfg):
    lefts = _lefts(s, OF)
    return _equiv({
        "left-quasi-regular": (_cls(s, RegularityClass.LEFT_QUASI_REGULAR, OF), None),
        "left-pairs": _pairs_sub(s, lefts, lefts, lambda A, B: _dprod(s, A, B)),
    })


def _t66(s, cfg):
    return _equiv({
        "left-quasi-regular": (_cls(s, RegularityClass.LEFT_QUASI_REGULAR, OF), None),
        "left-ideals-idempotent": _all_idem(s, _lefts(s, OF),
                                            lambda A: _dprod(s, A, A)),
    })


def _t67(s, cfg):
    FL = _fuzzy_family(s, cfg, "left", ordered=True)
    return _equiv({
        "left-quasi-regular": (_cls(s, RegularityClass.LEFT_QUASI_REGULAR, OF), None),
        "left-pairs": _fuzzy_pairs(s, FL, FL, OF, _LEQ),
    })


def _t68(s, cfg):
    FI = _fuzzy_family(s, cfg, "ideal", ordered=True)
    return _equiv({
        "left-quasi-regular": (_cls(s, RegularityClass.LEFT_QUASI_REGULAR, OF), None),
        "ideal-any": _fuzzy_pairs(s, FI, _fuzzy_family(s, cfg, "any"), OF, _LEQ),
        "ideal-bi": _fuzzy_pairs(s, FI, _fuzzy_family(s, cfg, "bi", ordered=True),
                                 OF, _LEQ),
        "ideal-left": _fuzzy_pairs(s, FI, _fuzzy_family(s, cfg, "left", ordered=True),
                                   OF, _LEQ),
        "fuzzy-left-idempotent": _fuzzy_idem(
            s, _fuzzy_family(s, cfg, "left", ordered=True), OF),
    })


def _p72(s, cfg):
    p = relation_N(s, PF)
    if not is_congruence(s, p, "both").ok:
        return False, {"partition": p.class_of, "reason": "not a congruence"}
    if not _is_semilattice_congruence_quiet(s, p):
        return False, {"partition": p.class_of, "reason": "not semilattice"}
    return True, None


def _prime_ideals(s):
    return [I for I in _twos(s, PF)
            if is_prime_subset(s, I, PrimeVariant.PRIME_WITH_SPLIT, PF).ok]


def _p76(s, cfg):
    for I in _prime_ideals(s):
        if not _is_semilattice_congruence_quiet(s, sigma_I(s, I)):
            return False, {"I": _set(I)}
    return True, None


def _p79(s, cfg):
    full = full_mask(s.n)
    for F in _subsets(s):
        comp = full & ~F
        if comp == 0:
            rhs = True
        else:
            rhs = (is_ideal(s, comp, IdealKind.TWO_SIDED, PF).ok
                   and is_prime_subset(s, comp, PrimeVariant.PRIME_WITH_SPLIT, PF).ok)
        if is_filter(s, F, PF) != rhs:
            return False, {"F": _set(F)}
    return True, None


def _p81(s, cfg):
    if bell_number(s.n) > cfg.partition_budget:
        raise CarrierTooLarge(f"partition sweep for n={s.n} exceeds budget")
    full = full_mask(s.n)
    table = s.op.table
    for p in all_partitions(s.n):
        if not _is_semilattice_congruence_quiet(s, p):
            continue
        meet = Partition.universal(s.n)
        for x in range(s.n):
            ax = 0
            for y in range(s.n):
                if all(p.relates(x, u) for u in members(table[x][y])):
                    ax |= 1 << y
            if not is_filter(s, ax, PF):
                return False, {"partition": p.class_of, "x": x,
                               "reason": "divisor set is not a filter"}
            comp = full & ~ax
            if comp:
                if comp == full or not (
                        is_ideal(s, comp, IdealKind.TWO_SIDED, PF).ok
                        and is_prime_subset(s, comp,
                                            PrimeVariant.PRIME_WITH_SPLIT, PF).ok):
                    return False, {"partition": p.class_of, "x": x,
                                   "reason": "complement not a proper prime ideal"}
            meet = meet.meet(sigma_I(s, comp))
        if meet != p:
            return False, {"partition": p.class_of,
                           "meet": meet.class_of,
                           "reason": "congruence is not the stated meet"}
    return True, None


def _p82(s, cfg):
    meet = Partition.universal(s.n)
    for I in _prime_ideals(s):
        meet = meet.meet(sigma_I(s, I))
    N = relation_N(s, PF)
    if N != meet:
        return False, {"relation-N": N.class_of, "prime-meet": meet.class_of}
    return True, None


def _t83(s, cfg):
    N = relation_N(s, PF)
    least = least_semilattice_congruence(s, cfg.partition_budget)
    if N != least:
        return False, {"relation-N": N.class_of, "least": least.class_of}
    return True, None


def _t87(s, cfg):
    p = relation_N(s, OF)
    if not is_congruence(s, p, "both").ok:
        return False, {"partition": p.class_of, "reason": "not a congruence"}
    if not _is_semilattice_congruence_quiet(s, p):
        return False, {"partition": p.class_of, "reason": "not semilattice"}
    table = s.op.table
    for a, b in s.order.strict_pairs():
        for u in members(table[a][b]):
            if not p.relates(a, u):
                return False, {"partition": p.class_of,
                               "reason": "not complete", "pair": [a, b]}
    return True, None


# --- registry -------------------------------------------------------------------

_ORD_HG = frozenset({"order", "compat"})
_ORD_HS = frozenset({"assoc", "order", "compat"})
_HS = frozenset({"assoc"})
_HG = frozenset()


THEOREMS: dict[str, tuple[frozenset, Callable]] = {
    "L4": (_ORD_HG, _l4),
    "L5": (_ORD_HS, _l5),
    "L6": (_HG, _l6),
    "L7": (_ORD_HG, _l7),
    "T8": (_ORD_HS, _t8),
    "T11": (_ORD_HS, _t11),
    "P13": (_ORD_HS, _p13),
    "P14": (_ORD_HS, _p14),
    "P15": (_ORD_HS, _p15),
    "P16": (_ORD_HS, _p16),
    "T17": (_ORD_HS, _t17),
    "P20": (frozenset({"order"}), _p20),
    "T21": (_ORD_HS, _t21),
    "P23": (_HG, _p23),
    "P26": (_HG, _p26),
    "P27": (frozenset({"order"}), _p27),
    "T28": (frozenset({"order"}), _t28),
    "T30": (_ORD_HS, _t30),
    "P31": (_ORD_HS, _p31),
    "C32": (_ORD_HS, _c32),
    "T33": (_ORD_HS, _t33),
    "T34": (_ORD_HS, _t34),
    "R35": (_ORD_HS, _r35),
    "R36.1": (_ORD_HS, _r36_1),
    "R36.2": (_ORD_HS, _r36_2),
    "T37": (_HS, _t37),
    "T38": (_HS, _t38),
    "T39": (_HS, _t39),
    "T40": (_HS, _t40),
    "P42": (_HS, _p42),
    "T43": (_HS, _t43),
    "T44": (_HS, _t44),
    "T45": (_HS, _t45),
    "T46": (_HS, _t46),
    "T47": (_HS, _t47),
    "T48": (_HS, _t48),
    "P50": (_HS, _p50),
    "T51": (_HS, _t51),
    "T52": (_HS, _t52),
    "T53": (_HS, _t53),
    "T54": (_HS, _t54),
    "T55": (_HS, _t55),
    "T56": (_HS, _t56),
    "P58": (_HS, _p58),
    "T59": (_HS, _t59),
    "P60": (_HS, _p60),
    "T61": (_HS, _t61),
    "P63": (_ORD_HS, _p63),
    "T64": (_ORD_HS, _t64),
    "T65": (_ORD_HS, _t65),
    "T66": (_ORD_HS, _t66),
    "T67": (_ORD_HS, _t67),
    "T68": (_ORD_HS, _t68),
    "P72": (_HG, _p72),
    "P76": (_HG, _p76),
    "P79": (_HG, _p79),
    "P81": (_HS, _p81),
    "P82": (_HG, _p82),
    "T83": (_HS, _t83),
    "T87": (frozenset({"order"}), _t87),
}

ALL_THEOREM_IDS: tuple[str, ...] = tuple(THEOREMS)


def applicability(s: HyperStructure, tid: str) -> Optional[str]:
    """None when the theorem applies; otherwise the unmet requirement."""
    if not check_totality(s.op).ok:
        return "total"
    requires, _ = THEOREMS[tid]
    if "assoc" in requires and not s.is_associative:
        return "assoc"
    if "order" in requires or "compat" in requires:
        if s.order is None or not check_order_axioms(s.order).ok:
            return "order"
        if "compat" in requires and not s.is_order_compatible:
            return "compat"
    return None


def check_theorem(s: HyperStructure, tid: str,
                  cfg: VerifyConfig = DEFAULT_CONFIG) -> TheoremReport:
    if tid not in THEOREMS:
        raise KeyError(f"unknown theorem id {tid!r}")
    start = time.perf_counter_ns()
    missing = applicability(s, tid)
    if missing is not None:
        micros = (time.perf_counter_ns() - start) // 1000
        return TheoremReport(tid, "not-applicable",
                             {"missing": missing}, micros)
    _, fn = THEOREMS[tid]
    try:
        ok, payload = fn(s, cfg)
    except (BudgetExceeded, CarrierTooLarge) as e:
        micros = (time.perf_counter_ns() - start) // 1000
        return TheoremReport(tid, "not-applicable",
                             {"budget_exceeded": str(e)}, micros)
    micros = (time.perf_counter_ns() - start) // 1000
    return TheoremReport(tid, "holds" if ok else "fails", payload, micros)


def run_suite(s: HyperStructure, ids: Optional[Sequence[str]] = None,
              cfg: VerifyConfig = DEFAULT_CONFIG) -> list[TheoremReport]:
    """Run the catalog in registry order; aggregate failure = any 'fails'."""
    selected = set(ALL_THEOREM_IDS if ids is None else ids)
    for tid in selected:
        if tid not in THEOREMS:
            raise KeyError(f"unknown theorem id {tid!r}")
    return [check_theorem(s, tid, cfg)
            for tid in ALL_THEOREM_IDS if tid in selected]
