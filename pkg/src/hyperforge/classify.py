"""Regularity-type classifiers with element-wise realizer witnesses.

Each class binds a membership chain built from the element itself and full
carriers, e.g. regular: a ∈ {a}*H*{a} (plain) or a ∈ ({a}*H*{a}] (ordered).
Every call evaluates the element-wise form and cross-checks the subset-wise
form; the two are equivalent by monotonicity of the product, so a mismatch is
an engine bug and raises.
"""

from __future__ import annotations

from enum import Enum
from itertools import product as iproduct
from typing import NamedTuple, Optional

from .core import HyperStructure, Verdict, full_mask, members, nonempty_submasks
from .errors import EngineError, NoOrder
from .ideals import Flavor
from .setcalc import down_closure, product_chain


class RegularityClass(str, Enum):
    REGULAR = "regular"
    INTRA_REGULAR = "intra-regular"
    LEFT_REGULAR = "left-regular"
    RIGHT_REGULAR = "right-regular"
    LEFT_QUASI_REGULAR = "left-quasi-regular"
    RIGHT_QUASI_REGULAR = "right-quasi-regular"
    SEMISIMPLE = "semisimple"


# 'a' marks the element's slot, 'H' a full-carrier slot realized by a witness.
CHAINS: dict[RegularityClass, tuple[str, ...]] = {
    RegularityClass.REGULAR: ("a", "H", "a"),
    RegularityClass.INTRA_REGULAR: ("H", "a", "a", "H"),
    RegularityClass.LEFT_REGULAR: ("H", "a", "a"),
    RegularityClass.RIGHT_REGULAR: ("a", "a", "H"),
    RegularityClass.LEFT_QUASI_REGULAR: ("H", "a", "H", "a"),
    RegularityClass.RIGHT_QUASI_REGULAR: ("a", "H", "a", "H"),
    RegularityClass.SEMISIMPLE: ("H", "a", "H", "a", "H"),
}

# Plain left/right regular are not part of the plain theory; they reuse the
# ordered chains with the closure dropped and are meant for exploration only.
EXPLORATORY_PLAIN = (RegularityClass.LEFT_REGULAR, RegularityClass.RIGHT_REGULAR)


class ClassReport(NamedTuple):
    ok: bool
    # ok: per-element realizer tuples (H-slot values, then the chain element
    # above a when ordered); not ok: the least element with no realizer.
    witnesses: Optional[dict[int, tuple[int, ...]]]
    failing: Optional[int]

    def __bool__(self) -> bool:
        return self.ok


def _chain_mask(s: HyperStructure, chain: tuple[str, ...], A: int) -> int:
    H = full_mask(s.n)
    return product_chain(s, [H if atom == "H" else A for atom in chain])


def element_reach(s: HyperStructure, cls: RegularityClass, a: int, flavor: Flavor) -> int:
    """The chain evaluated at the singleton {a}, closed downward if ordered."""
    reach = _chain_mask(s, CHAINS[cls], 1 << a)
    if flavor is Flavor.ORDERED:
        reach = down_closure(s, reach)
    return reach


def find_realizer(s: HyperStructure, cls: RegularityClass, a: int,
                  flavor: Flavor) -> Optional[tuple[int, ...]]:
    """Least (slot values..., t) making the membership chain concrete."""
    chain = CHAINS[cls]
    slots = [i for i, atom in enumerate(chain) if atom == "H"]
    n = s.n
    for xs in iproduct(range(n), repeat=len(slots)):
        operands = []
        it = iter(xs)
        for atom in chain:
            operands.append(1 << next(it) if atom == "H" else 1 << a)
        result = product_chain(s, operands)
        if flavor is Flavor.PLAIN:
            if result >> a & 1:
                return tuple(xs)
        else:
            above = result & s.order.up_mask(a)
            if above:
                return tuple(xs) + (members(above)[0],)
    return None


def classify(s: HyperStructure, cls: RegularityClass, flavor: Flavor) -> ClassReport:
    if flavor is Flavor.ORDERED and s.order is None:
        raise NoOrder("ordered classification needs an order")
    key = ("classify", cls, flavor)
    cached = s._cache.get(key)
    if cached is not None:
        return cached
    report = _classify_uncached(s, cls, flavor)
    s._cache[key] = report
    return report


def _classify_uncached(s: HyperStructure, cls: RegularityClass, flavor: Flavor) -> ClassReport:
    n = s.n
    witnesses: dict[int, tuple[int, ...]] = {}
    ok = True
    failing = None
    for a in range(n):
        if element_reach(s, cls, a, flavor) >> a & 1:
            continue
        ok, failing = False, a
        break
    # subset-wise form must agree with the element-wise one (monotonicity)
    subset_ok = True
    for A in nonempty_submasks(n):
        reach = _chain_mask(s, CHAINS[cls], A)
        if flavor is Flavor.ORDERED:
            reach = down_closure(s, reach)
        if A & ~reach:
            subset_ok = False
            break
    if subset_ok != ok:
        raise EngineError(
            f"element-wise and subset-wise {cls.value} classification disagree")
    if not ok:
        return ClassReport(False, None, failing)
    for a in range(n):
        realizer = find_realizer(s, cls, a, flavor)
        if realizer is None:
            raise EngineError(f"{cls.value}: chain membership holds for {a} "
                              "but no realizer tuple exists")
        witnesses[a] = realizer
    return ClassReport(True, witnesses, None)


def classify_all(s: HyperStructure, flavor: Flavor) -> dict[RegularityClass, bool]:
    """All seven classes, with the regularity implication chain re-asserted.

    regular ⟹ left+right quasi-regular ⟹ semisimple, and intra-regular ⟹
    semisimple: provable for every (compatible, when ordered) structure, so a
    violation is an engine bug.
    """
    out = {cls: classify(s, cls, flavor).ok for cls in RegularityClass}
    check_chain = flavor is Flavor.PLAIN or s.is_order_compatible
    if check_chain:
        reg = out[RegularityClass.REGULAR]
        lqr = out[RegularityClass.LEFT_QUASI_REGULAR]
        rqr = out[RegularityClass.RIGHT_QUASI_REGULAR]
        ss = out[RegularityClass.SEMISIMPLE]
        intra = out[RegularityClass.INTRA_REGULAR]
        if reg and not (lqr and rqr):
            raise EngineError("regular structure failed quasi-regularity")
        if (lqr or rqr) and not ss:
            raise EngineError("quasi-regular structure failed semisimplicity")
        if intra and not ss:
            raise EngineError("intra-regular structure failed semisimplicity")
    return out
