"""Monomial realizations of the ideal lattice and their relation systems.

Three canonical injections of the lattice into a polynomial ring are
supported, each sending an ideal to a squarefree monomial times the grading
variable t:

* ``ORDER``      — the ideal's own indicator monomial,
* ``CHAIN``      — the indicator of its maximal-element antichain,
* ``CHAIN_DUAL`` — the indicator of the minimal elements of its complement.

Each kind determines, for every incomparable pair of ideals, a rewriting
rule (a relation) whose two sides have identical exponent vectors.  A
relation system assigns such a rule to every incomparable pair; systems are
compared by their rule tables.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations_with_replacement
from math import comb

from aslattice.errors import AxiomViolation, MissingRelation, NonTermination
from aslattice.ideals import (
    IdealLattice,
    circ,
    complement_filter,
    max_elements,
    min_elements,
    star,
)
from aslattice.posets import Poset

Monomial = tuple[int, ...]


class RealizationKind(str, Enum):
    ORDER = "order"
    CHAIN = "chain"
    CHAIN_DUAL = "chain-dual"


def subset_monomial(p: Poset, mask: int) -> Monomial:
    """Squarefree monomial with support ``mask`` (t-exponent 0); the empty
    subset gives the constant 1."""
    return tuple(mask >> i & 1 for i in range(p.n)) + (0,)


def realize(p: Poset, kind: RealizationKind, ideal: int) -> Monomial:
    """The generator monomial attached to an ideal under the given kind."""
    if kind is RealizationKind.ORDER:
        support = ideal
    elif kind is RealizationKind.CHAIN:
        support = max_elements(p, ideal)
    else:
        support = min_elements(p, complement_filter(p, ideal))
    return tuple(support >> i & 1 for i in range(p.n)) + (1,)


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def monomial_product(ms) -> Monomial:
    it = iter(ms)
    out = list(next(it))
    for m in it:
        for i, e in enumerate(m):
            out[i] += e
    return tuple(out)


def monomial_str(m: Monomial, labels) -> str:
    parts = []
    for i, e in enumerate(m[:-1]):
        if e == 1:
            parts.append(f"x[{labels[i]}]")
        elif e > 1:
            parts.append(f"x[{labels[i]}]^{e}")
    if m[-1] == 1:
        parts.append("t")
    elif m[-1] > 1:
        parts.append(f"t^{m[-1]}")
    return "*".join(parts) if parts else "1"


def realization_table(lat: IdealLattice, kind: RealizationKind) -> dict[int, Monomial]:
    return {a: realize(lat.poset, kind, a) for a in lat.ideals}


@dataclass(frozen=True, eq=False)
class PairMap:
    """A straightening right-hand side for every incomparable ideal pair.

    Every entry ``(a, b) -> (lo, hi)`` satisfies lo ⊆ a∩b and hi ⊇ a∪b, so
    the replacement is a comparable pair sitting at least as far apart as
    the original.  Two systems are identified exactly when their tables
    coincide.
    """

    lattice: IdealLattice
    rhs: dict[tuple[int, int], tuple[int, int]] = field(repr=False)

    def __post_init__(self):
        pairs = self.lattice.incomparable_pairs
        if set(self.rhs) != set(pairs):
            raise MissingRelation("relation table does not cover the incomparable pairs exactly")
        pos = self.lattice.position
        for (a, b), (lo, hi) in self.rhs.items():
            if lo not in pos or hi not in pos:
                raise MissingRelation("relation right-hand side is not an ideal of the lattice")
            if lo & ~(a & b) or (a | b) & ~hi:
                raise MissingRelation(
                    "relation right-hand side violates the compatibility shape"
                )

    def key(self, a: int, b: int) -> tuple[int, int]:
        pos = self.lattice.position
        return (a, b) if pos[a] < pos[b] else (b, a)

    def rhs_of(self, a: int, b: int) -> tuple[int, int]:
        try:
            return self.rhs[self.key(a, b)]
        except KeyError:
            raise MissingRelation(
                f"no relation for pair {self.lattice.poset.labels_of(a)}, "
                f"{self.lattice.poset.labels_of(b)}"
            ) from None

    def entries(self) -> list[tuple[tuple[int, int], tuple[int, int]]]:
        """Entries in the lattice's deterministic pair order."""
        return [(pair, self.rhs[pair]) for pair in self.lattice.incomparable_pairs]

    def __eq__(self, other) -> bool:
        if not isinstance(other, PairMap):
            return NotImplemented
        return self.rhs == other.rhs

    def __hash__(self):
        return hash(tuple(sorted(self.rhs.items())))

    def table_json(self) -> list[dict]:
        labs = self.lattice.poset.labels_of
        return [
            {"pair": [labs(a), labs(b)], "rhs": [labs(lo), labs(hi)]}
            for (a, b), (lo, hi) in self.entries()
        ]


def straightening_relations(lat: IdealLattice, kind: RealizationKind) -> PairMap:
    """The relation system realized by the given kind."""
    p = lat.poset
    rhs = {}
    for a, b in lat.incomparable_pairs:
        if kind is RealizationKind.ORDER:
            rhs[(a, b)] = (a & b, a | b)
        elif kind is RealizationKind.CHAIN:
            rhs[(a, b)] = (star(p, a, b), a | b)
        else:
            rhs[(a, b)] = (a & b, circ(p, a, b))
    return PairMap(lattice=lat, rhs=rhs)


def relations_equal(lat: IdealLattice, kind_a: RealizationKind, kind_b: RealizationKind):
    """Compare two canonical systems; on inequality return the first
    differing pair with both right-hand sides."""
    pa = straightening_relations(lat, kind_a)
    pb = straightening_relations(lat, kind_b)
    for pair in lat.incomparable_pairs:
        if pa.rhs[pair] != pb.rhs[pair]:
            return False, (pair, pa.rhs[pair], pb.rhs[pair])
    return True, None


_CONDITION_ORDER = (
    (RealizationKind.ORDER, RealizationKind.CHAIN),
    (RealizationKind.ORDER, RealizationKind.CHAIN_DUAL),
    (RealizationKind.CHAIN, RealizationKind.CHAIN_DUAL),
)


@dataclass(frozen=True)
class ConditionReport:
    equal: bool
    witnesses: tuple  # (kind pair, ideal pair, rhs_a, rhs_b) per failed comparison


def check_condition_ii(lat: IdealLattice) -> ConditionReport:
    """Do all three canonical relation systems coincide?"""
    witnesses = []
    for ka, kb in _CONDITION_ORDER:
        same, w = relations_equal(lat, ka, kb)
        if not same:
            witnesses.append(((ka, kb),) + w)
    return ConditionReport(equal=not witnesses, witnesses=tuple(witnesses))


def rewrite_to_standard(lat: IdealLattice, factors, pm: PairMap, max_steps: int | None = None):
    """Normalize a product of generators to a standard monomial.

    Factors are kept sorted by lattice position; each step replaces the
    lexicographically first incomparable pair by its assigned right-hand
    side.  Termination: a replacement removes two ideals and inserts one of
    strictly larger cardinality than both (the upper side contains their
    union), so the descending-sorted cardinality multiset strictly increases
    lexicographically; it ranges over a finite set, bounding the number of
    steps by the number of cardinality multisets.
    """
    pos = lat.position
    work = sorted(factors, key=pos.__getitem__)
    if not work:
        raise MissingRelation("empty product has no standard form")
    n = lat.poset.n
    if max_steps is None:
        max_steps = comb(n + len(work), len(work)) + 1
    steps = 0
    while True:
        hit = None
        for i in range(len(work)):
            a = work[i]
            for j in range(i + 1, len(work)):
                b = work[j]
                if a & ~b and b & ~a:
                    hit = (i, j)
                    break
            if hit:
                break
        if hit is None:
            return tuple(work)
        i, j = hit
        lo, hi = pm.rhs_of(work[i], work[j])
        del work[j]
        del work[i]
        work.append(lo)
        work.append(hi)
        work.sort(key=pos.__getitem__)
        steps += 1
        if steps > max_steps:
            raise NonTermination("rewriting exceeded its step budget")


def multichains(lat: IdealLattice, length: int) -> list[tuple[int, ...]]:
    """All weakly increasing ⊆-chains of the given length, as mask tuples
    ascending by lattice position."""
    ids = lat.ideals
    above = [
        [j for j in range(i, len(ids)) if ids[i] & ~ids[j] == 0]
        for i in range(len(ids))
    ]
    out: list[tuple[int, ...]] = []
    chain: list[int] = []

    def rec(cands, remaining: int):
        if remaining == 0:
            out.append(tuple(ids[i] for i in chain))
            return
        for j in cands:
            chain.append(j)
            rec(above[j], remaining - 1)
            chain.pop()

    rec(range(len(ids)), length)
    return out


@dataclass(frozen=True)
class AxiomReport:
    kind: RealizationKind
    max_degree: int
    standard_monomial_counts: dict[int, int]
    products_checked: dict[int, int]


def verify_asl_axioms(lat: IdealLattice, kind: RealizationKind, max_degree: int) -> AxiomReport:
    """Bounded-degree check of the two straightening-law axioms.

    For every degree d <= max_degree this verifies that (a) distinct
    standard monomials (d-multichains) have distinct ambient monomials,
    (b) every d-fold product of generators rewrites to a standard monomial
    with the same ambient monomial, and (c) the straightened leading factor
    of an incomparable product lies below both original factors.  Raises
    AxiomViolation with the offending data, otherwise returns the counts.
    """
    if max_degree < 2:
        raise ValueError("max_degree must be at least 2")
    table = realization_table(lat, kind)
    pm = straightening_relations(lat, kind)
    labs = lat.poset.labels_of
    std_counts: dict[int, int] = {}
    prod_counts: dict[int, int] = {}

    for d in range(1, max_degree + 1):
        seen: dict[Monomial, tuple[int, ...]] = {}
        chains = multichains(lat, d)
        std_counts[d] = len(chains)
        for ch in chains:
            m = monomial_product(table[a] for a in ch)
            other = seen.get(m)
            if other is not None:
                raise AxiomViolation(
                    f"{kind.value}: standard monomials {[labs(a) for a in other]} and "
                    f"{[labs(a) for a in ch]} share the ambient monomial"
                )
            seen[m] = ch

    for d in range(2, max_degree + 1):
        count = 0
        for combo in combinations_with_replacement(lat.ideals, d):
            std = rewrite_to_standard(lat, combo, pm)
            if monomial_product(table[a] for a in combo) != monomial_product(
                table[a] for a in std
            ):
                raise AxiomViolation(
                    f"{kind.value}: product {[labs(a) for a in combo]} rewrites to "
                    f"{[labs(a) for a in std]} with a different ambient monomial"
                )
            count += 1
        prod_counts[d] = count

    for a, b in lat.incomparable_pairs:
        first = rewrite_to_standard(lat, (a, b), pm)[0]
        if first & ~a or first & ~b:
            raise AxiomViolation(
                f"{kind.value}: straightening of {labs(a)}, {labs(b)} leads with "
                f"{labs(first)}, which is not below both factors"
            )

    return AxiomReport(
        kind=kind,
        max_degree=max_degree,
        standard_monomial_counts=std_counts,
        products_checked=prod_counts,
    )
