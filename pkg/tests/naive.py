"""Slow reference implementations used as independent oracles.

Everything in this module is written straight from the definitions:
structures are tuples of frozensets, quantifiers are explicit loops, and
there are no bit tricks.  Nothing here imports the engine under test; the
test suite compares the two sides.

Conventions: a table is an n x n tuple-of-tuples of frozensets of ints,
an order is a set of pairs (a, b) meaning a <= b (reflexive pairs included).
"""

from fractions import Fraction
from itertools import product as iproduct


def carrier(n):
    return frozenset(range(n))


def nonempty_subsets(n):
    """All nonempty subsets of range(n), smallest-last-element-first order."""
    elems = list(range(n))
    out = []
    for k in range(1, 1 << n):
        out.append(frozenset(e for e in elems if (k >> e) & 1))
    return out


def prod(table, A, B):
    """Set product: union of a.b over a in A, b in B."""
    out = set()
    for a in A:
        for b in B:
            out |= table[a][b]
    return frozenset(out)


def prod_chain(table, sets):
    acc = sets[0]
    for s in sets[1:]:
        acc = prod(table, acc, s)
    return acc


def is_total(table):
    return all(len(cell) > 0 for row in table for cell in row)


def is_associative(table):
    n = len(table)
    for a in range(n):
        for b in range(n):
            for c in range(n):
                left = prod(table, prod(table, {a}, {b}), {c})
                right = prod(table, {a}, prod(table, {b}, {c}))
                if left != right:
                    return False
    return True


def is_partial_order(le, n):
    for a in range(n):
        if (a, a) not in le:
            return False
    for (a, b) in le:
        if (b, a) in le and a != b:
            return False
    for (a, b) in le:
        for (b2, c) in le:
            if b2 == b and (a, c) not in le:
                return False
    return True


def down(le, A):
    return frozenset(t for (t, a) in le if a in A)


def set_dominates(le, A, B):
    """A below B: every element of A sits under some element of B."""
    return all(any((a, b) in le for b in B) for a in A)


def is_compatible(table, le, n):
    for (a, b) in le:
        for c in range(n):
            if not set_dominates(le, table[a][c], table[b][c]):
                return False
            if not set_dominates(le, table[c][a], table[c][b]):
                return False
    return True


# --- ideals ---------------------------------------------------------------

def is_right_ideal(table, le, A, ordered):
    H = carrier(len(table))
    if not prod(table, A, H) <= A:
        return False
    return (not ordered) or down(le, A) == A


def is_left_ideal(table, le, A, ordered):
    H = carrier(len(table))
    if not prod(table, H, A) <= A:
        return False
    return (not ordered) or down(le, A) == A


def is_two_sided_ideal(table, le, A, ordered):
    return is_right_ideal(table, le, A, ordered) and is_left_ideal(table, le, A, ordered)


def is_bi_ideal(table, le, A, ordered):
    H = carrier(len(table))
    if not prod_chain(table, [A, H, A]) <= A:
        return False
    return (not ordered) or down(le, A) == A


def is_quasi_ideal(table, le, A, ordered):
    H = carrier(len(table))
    if ordered:
        lhs = down(le, prod(table, A, H)) & down(le, prod(table, H, A))
    else:
        lhs = prod(table, A, H) & prod(table, H, A)
    if not lhs <= A:
        return False
    return (not ordered) or down(le, A) == A


IDEAL_PREDICATES = {
    "right": is_right_ideal,
    "left": is_left_ideal,
    "two-sided": is_two_sided_ideal,
    "bi": is_bi_ideal,
    "quasi": is_quasi_ideal,
}


def enumerate_ideals(table, le, kind, ordered):
    pred = IDEAL_PREDICATES[kind]
    return [A for A in nonempty_subsets(len(table)) if pred(table, le, A, ordered)]


def generated_ideal(table, le, A, kind, ordered):
    """Least ideal of the kind containing A, by intersecting the enumeration."""
    result = None
    for B in enumerate_ideals(table, le, kind, ordered):
        if A <= B:
            result = B if result is None else (result & B)
    return result


# --- regularity classes ---------------------------------------------------

CLASS_CHAINS = {
    "regular": ("a", "H", "a"),
    "intra-regular": ("H", "a", "a", "H"),
    "left-regular": ("H", "a", "a"),
    "right-regular": ("a", "a", "H"),
    "left-quasi-regular": ("H", "a", "H", "a"),
    "right-quasi-regular": ("a", "H", "a", "H"),
    "semisimple": ("H", "a", "H", "a", "H"),
}


def element_chain(table, chain, a):
    n = len(table)
    sets = [carrier(n) if atom == "H" else frozenset([a]) for atom in chain]
    return prod_chain(table, sets)


def satisfies_class(table, le, name, ordered):
    n = len(table)
    for a in range(n):
        reach = element_chain(table, CLASS_CHAINS[name], a)
        if ordered:
            reach = down(le, reach)
        if a not in reach:
            return False
    return True


# --- prime / semiprime ----------------------------------------------------

def is_prime_subset_def(table, T):
    """Subset-quantified prime condition (no split clause)."""
    n = len(table)
    for A in nonempty_subsets(n):
        for B in nonempty_subsets(n):
            if prod(table, A, B) <= T and not (A <= T or B <= T):
                return False
    return True


def is_prime_elementwise(table, T):
    n = len(table)
    for a in range(n):
        for b in range(n):
            if table[a][b] <= T and a not in T and b not in T:
                return False
    return True


def has_split_condition(table, T):
    n = len(table)
    for a in range(n):
        for b in range(n):
            cell = table[a][b]
            if not (cell <= T or not (cell & T)):
                return False
    return True


def is_semiprime_def(table, T):
    for A in nonempty_subsets(len(table)):
        if prod(table, A, A) <= T and not A <= T:
            return False
    return True


def is_semiprime_elementwise(table, T):
    return all(not (table[a][a] <= T) or a in T for a in range(len(table)))


def is_weakly_prime(table, le, T, ordered):
    ideals = enumerate_ideals(table, le, "two-sided", ordered)
    for A in ideals:
        for B in ideals:
            if prod(table, A, B) <= T and not (A <= T or B <= T):
                return False
    return True


# --- filters, N(x), congruences --------------------------------------------

def is_filter(table, le, F, ordered):
    n = len(table)
    for x in F:
        for y in F:
            if not table[x][y] <= F:
                return False
    for x in range(n):
        for y in range(n):
            if table[x][y] <= F and not (x in F and y in F):
                return False
            if table[x][y] & F and not table[x][y] <= F:
                return False
    if ordered:
        for a in F:
            for b in range(n):
                if (a, b) in le and b not in F:
                    return False
    return True


def enumerate_filters(table, le, ordered):
    return [F for F in nonempty_subsets(len(table)) if is_filter(table, le, F, ordered)]


def generated_filter(table, le, x, ordered):
    result = carrier(len(table))
    for F in enumerate_filters(table, le, ordered):
        if x in F:
            result &= F
    return result


def partitions(elems):
    """All set partitions of the list, as lists of frozensets."""
    if not elems:
        yield []
        return
    head, rest = elems[0], elems[1:]
    for part in partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [part[i] | {head}] + part[i + 1:]
        yield [frozenset([head])] + part


def blocks_to_classmap(blocks):
    cm = {}
    for i, blk in enumerate(sorted(blocks, key=min)):
        for e in blk:
            cm[e] = i
    return cm


def relation_from_blocks(blocks):
    rel = set()
    for blk in blocks:
        for a in blk:
            for b in blk:
                rel.add((a, b))
    return rel


def is_congruence_rel(table, rel, n):
    for (a, b) in rel:
        for c in range(n):
            for u in table[a][c]:
                for v in table[b][c]:
                    if (u, v) not in rel:
                        return False
            for u in table[c][a]:
                for v in table[c][b]:
                    if (u, v) not in rel:
                        return False
    return True


def is_semilattice_congruence_rel(table, rel, n):
    if not is_congruence_rel(table, rel, n):
        return False
    for a in range(n):
        for u in table[a][a]:
            if (u, a) not in rel:
                return False
    for a in range(n):
        for b in range(n):
            for u in table[a][b]:
                for v in table[b][a]:
                    if (u, v) not in rel:
                        return False
    return True


def is_complete_rel(table, le, rel, n):
    for (a, b) in le:
        for u in table[a][b]:
            if (a, u) not in rel:
                return False
    return True


def least_semilattice_congruence(table):
    """Meet of every semilattice congruence, by sweeping all partitions."""
    n = len(table)
    meet = None
    for blocks in partitions(list(range(n))):
        rel = relation_from_blocks(blocks)
        if is_semilattice_congruence_rel(table, rel, n):
            meet = rel if meet is None else (meet & rel)
    return meet


def relation_N(table, le, ordered):
    n = len(table)
    filt = {x: generated_filter(table, le, x, ordered) for x in range(n)}
    return set((x, y) for x in range(n) for y in range(n) if filt[x] == filt[y])


def sigma_I(I, n):
    return set(
        (a, b)
        for a in range(n)
        for b in range(n)
        if (a in I) == (b in I)
    )


# --- fuzzy ------------------------------------------------------------------

def pair_index(table, le, a, ordered):
    n = len(table)
    pairs = []
    for y in range(n):
        for z in range(n):
            if ordered:
                if any((a, u) in le for u in table[y][z]):
                    pairs.append((y, z))
            else:
                if a in table[y][z]:
                    pairs.append((y, z))
    return pairs


def fuzzy_compose(table, le, f, g, ordered):
    n = len(table)
    out = []
    for a in range(n):
        pairs = pair_index(table, le, a, ordered)
        if not pairs:
            out.append(Fraction(0))
        else:
            out.append(max(min(f[y], g[z]) for (y, z) in pairs))
    return tuple(out)


def is_fuzzy_right(table, f):
    n = len(table)
    return all(
        f[u] >= f[x] for x in range(n) for y in range(n) for u in table[x][y]
    )


def is_fuzzy_left(table, f):
    n = len(table)
    return all(
        f[u] >= f[y] for x in range(n) for y in range(n) for u in table[x][y]
    )


def is_fuzzy_bi(table, f):
    n = len(table)
    for x in range(n):
        for y in range(n):
            for z in range(n):
                for u in prod(table, table[x][y], {z}):
                    if f[u] < min(f[x], f[z]):
                        return False
    return True


# --- enumeration of small structures ----------------------------------------

def all_tables(n):
    """Every total n x n hyperoperation table (use only for tiny n)."""
    cells = nonempty_subsets(n)
    for combo in iproduct(cells, repeat=n * n):
        yield tuple(tuple(combo[i * n + j] for j in range(n)) for i in range(n))


def all_partial_orders(n):
    pairs = [(a, b) for a in range(n) for b in range(n) if a != b]
    base = set((a, a) for a in range(n))
    out = []
    for k in range(1 << len(pairs)):
        le = set(base)
        for i, p in enumerate(pairs):
            if (k >> i) & 1:
                le.add(p)
        if is_partial_order(le, n):
            out.append(frozenset(le))
    return sorted(out, key=lambda le: sorted(le))
