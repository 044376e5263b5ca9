"""Shared converters between the engine's bitmask structures and the naive
oracle's frozenset representation."""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from hyperforge.core import HyperOp, HyperStructure, PartialOrder, members, validate


def to_naive_table(s: HyperStructure):
    return tuple(tuple(frozenset(members(cell)) for cell in row)
                 for row in s.op.table)


def to_naive_le(s: HyperStructure):
    assert s.order is not None
    return frozenset(s.order.pairs())


def from_naive(table, le=None) -> HyperStructure:
    n = len(table)
    op = HyperOp.from_sets(n, [[sorted(cell) for cell in row] for row in table])
    order = None
    if le is not None:
        order = PartialOrder.from_pairs(n, [p for p in le])
    s = HyperStructure(op, order)
    validate(s)
    return s


DISCRETE2 = frozenset([(0, 0), (1, 1)])
