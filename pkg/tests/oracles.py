"""Independent brute-force reference implementations.

Everything here works on frozensets of labels and definitional formulas,
deliberately avoiding the library's bitmask machinery, so agreement between
the two is meaningful evidence.
"""

from itertools import combinations, permutations


def ideal_sets(p):
    """All down-closed label sets, by filtering the full power set."""
    labs = list(p.labels)
    below = {
        b: {a for a in labs if p.leq(p.index_of(a), p.index_of(b))} for b in labs
    }
    out = []
    for r in range(len(labs) + 1):
        for combo in combinations(labs, r):
            s = frozenset(combo)
            if all(below[b] <= s for b in s):
                out.append(s)
    return out


def antichain_sets(p):
    labs = list(p.labels)
    out = []
    for r in range(len(labs) + 1):
        for combo in combinations(labs, r):
            if all(
                not p.comparable(p.index_of(a), p.index_of(b))
                for a, b in combinations(combo, 2)
            ):
                out.append(frozenset(combo))
    return out


def max_set(p, s):
    return frozenset(
        a for a in s
        if not any(b != a and p.leq(p.index_of(a), p.index_of(b)) for b in s)
    )


def min_set(p, s):
    return frozenset(
        a for a in s
        if not any(b != a and p.leq(p.index_of(b), p.index_of(a)) for b in s)
    )


def down_set(p, s):
    return frozenset(
        a for a in p.labels
        if any(p.leq(p.index_of(a), p.index_of(b)) for b in s)
    )


def up_set(p, s):
    return frozenset(
        a for a in p.labels
        if any(p.leq(p.index_of(b), p.index_of(a)) for b in s)
    )


def star_set(p, a, b):
    gen = max_set(p, a & b) & (max_set(p, a) | max_set(p, b))
    return down_set(p, gen)


def circ_set(p, a, b):
    ground = frozenset(p.labels)
    fa, fb = ground - a, ground - b
    gen = min_set(p, fa & fb) & (min_set(p, fa) | min_set(p, fb))
    return ground - up_set(p, gen)


def maximal_chain_sets(p):
    """Maximal chains as ascending label tuples, from all totally ordered
    subsets by discarding the non-maximal ones."""
    labs = list(p.labels)

    def is_chain(s):
        return all(
            p.comparable(p.index_of(a), p.index_of(b)) for a, b in combinations(s, 2)
        )

    chains = [
        frozenset(c)
        for r in range(1, len(labs) + 1)
        for c in combinations(labs, r)
        if is_chain(c)
    ]
    maximal = [c for c in chains if not any(c < d for d in chains)]

    def height(x):
        return sum(1 for y in labs if y != x and p.leq(p.index_of(y), p.index_of(x)))

    return {tuple(sorted(c, key=height)) for c in maximal}


def multichain_count(p, ideals, d):
    """Number of weakly increasing ⊆-sequences of length d, counted over
    label-set ideals by direct recursion."""
    ideals = list(ideals)

    def count(prev, remaining):
        if remaining == 0:
            return 1
        return sum(count(s, remaining - 1) for s in ideals if prev <= s)

    return sum(count(s, d - 1) for s in ideals)


# --- labeled poset generation + isomorphism, independent of the library ---


def labeled_orders(n):
    """All transitively closed strict upper-triangular relations on n
    points, as frozensets of (i, j) pairs with i < j.  Every isomorphism
    class of n-posets appears among them (indices along a linear
    extension)."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    out = []
    for bits in range(1 << len(pairs)):
        rel = {pairs[k] for k in range(len(pairs)) if bits >> k & 1}
        if all(
            ((i, l) in rel)
            for (i, j) in rel
            for (k, l) in rel
            if j == k
        ):
            out.append(frozenset(rel))
    return out


def order_iso(n, rel_a, rel_b):
    """Permutation-search isomorphism test between two strict relations."""
    if len(rel_a) != len(rel_b):
        return False
    for perm in permutations(range(n)):
        if frozenset((perm[i], perm[j]) for (i, j) in rel_a) == rel_b:
            return True
    return False


def iso_classes(n):
    """Isomorphism classes of n-posets via the naive generator and the
    permutation isomorphism test."""
    classes = []
    for rel in labeled_orders(n):
        if not any(order_iso(n, rel, c) for c in classes):
            classes.append(rel)
    return classes


def partition_count(n):
    """Number of integer partitions of n."""
    table = [1] + [0] * n
    for part in range(1, n + 1):
        for total in range(part, n + 1):
            table[total] += table[total - part]
    return table[n]
