"""The distributive lattice of poset ideals and its operations.

Ideals (down-closed subsets) are integer bitmasks over the poset's element
indices.  The lattice fixes a deterministic ordering of its ideals —
ascending cardinality, then ascending mask value — and every exported table
follows that order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from aslattice import _kernels
from aslattice.errors import CapacityExceeded, NotAntichain
from aslattice.posets import Poset, dot_quote, iter_bits

DEFAULT_IDEAL_CAP = 1 << 20


@dataclass(frozen=True)
class IdealLattice:
    """All ideals of a poset, closed under union and intersection."""

    poset: Poset
    ideals: tuple[int, ...]

    @cached_property
    def position(self) -> dict[int, int]:
        return {m: i for i, m in enumerate(self.ideals)}

    def __len__(self) -> int:
        return len(self.ideals)

    def __contains__(self, mask: int) -> bool:
        return mask in self.position

    @cached_property
    def incomparable_pairs(self) -> tuple[tuple[int, int], ...]:
        """Unordered pairs of ⊆-incomparable ideals, ordered by position."""
        out = []
        ids = self.ideals
        for i in range(len(ids)):
            a = ids[i]
            for j in range(i + 1, len(ids)):
                b = ids[j]
                if a & ~b and b & ~a:
                    out.append((a, b))
        return tuple(out)

    @cached_property
    def lattice_covers(self) -> tuple[tuple[int, int], ...]:
        """Hasse diagram of the lattice: (lower, upper) mask pairs.

        The lattice is graded by cardinality, so covers are exactly the
        one-element extensions by a maximal element of the upper ideal.
        """
        out = []
        for a in self.ideals:
            for i in iter_bits(max_elements(self.poset, a)):
                out.append((a & ~(1 << i), a))
        out.sort(key=lambda e: (self.position[e[0]], self.position[e[1]]))
        return tuple(out)

    def join_irreducibles(self) -> list[int]:
        """Ideals covering exactly one ideal; these recover the poset."""
        return [a for a in self.ideals if max_elements(self.poset, a).bit_count() == 1]


def is_ideal(p: Poset, mask: int) -> bool:
    for i in iter_bits(mask):
        if p.down[i] & ~mask:
            return False
    return True


def is_filter(p: Poset, mask: int) -> bool:
    for i in iter_bits(mask):
        if p.up[i] & ~mask:
            return False
    return True


def enumerate_ideals(p: Poset, cap: int = DEFAULT_IDEAL_CAP) -> IdealLattice:
    """Enumerate all poset ideals; raises CapacityExceeded past ``cap``."""
    try:
        masks = _kernels.enumerate_ideal_masks(list(p.down), cap)
    except ValueError as exc:
        raise CapacityExceeded(str(exc)) from None
    return IdealLattice(poset=p, ideals=tuple(masks))


def meet(a: int, b: int) -> int:
    return a & b


def join(a: int, b: int) -> int:
    return a | b


def rank(mask: int) -> int:
    """Cardinality grading of the lattice."""
    return mask.bit_count()


def max_elements(p: Poset, ideal: int) -> int:
    """Maximal elements of an ideal: the antichain generating it."""
    out = 0
    for i in iter_bits(ideal):
        if p.up[i] & ideal == 1 << i:
            out |= 1 << i
    return out


def min_elements(p: Poset, filt: int) -> int:
    """Minimal elements of a filter."""
    out = 0
    for i in iter_bits(filt):
        if p.down[i] & filt == 1 << i:
            out |= 1 << i
    return out


def down_closure(p: Poset, mask: int) -> int:
    out = 0
    for i in iter_bits(mask):
        out |= p.down[i]
    return out


def up_closure(p: Poset, mask: int) -> int:
    out = 0
    for i in iter_bits(mask):
        out |= p.up[i]
    return out


def is_antichain(p: Poset, mask: int) -> bool:
    for i in iter_bits(mask):
        if (p.up[i] | p.down[i]) & mask != 1 << i:
            return False
    return True


def ideal_from_antichain(p: Poset, antichain: int) -> int:
    """Down-closure of an antichain; inverse of :func:`max_elements`."""
    if not is_antichain(p, antichain):
        raise NotAntichain(f"elements {p.labels_of(antichain)} are not pairwise incomparable")
    return down_closure(p, antichain)


def complement_filter(p: Poset, ideal: int) -> int:
    """The filter complementary to an ideal."""
    return p.full_mask & ~ideal


def star(p: Poset, a: int, b: int) -> int:
    """The ideal generated by max(a∩b) ∩ (max a ∪ max b).

    This is the right-hand side substitute for the intersection in the
    chain-polytope relation system.
    """
    gen = max_elements(p, a & b) & (max_elements(p, a) | max_elements(p, b))
    return down_closure(p, gen)


def circ(p: Poset, a: int, b: int) -> int:
    """Complement of the filter generated by min(ā∩b̄) ∩ (min ā ∪ min b̄).

    The union substitute in the dual-chain relation system; dual to
    :func:`star` under complementation.
    """
    fa = complement_filter(p, a)
    fb = complement_filter(p, b)
    gen = min_elements(p, fa & fb) & (min_elements(p, fa) | min_elements(p, fb))
    return p.full_mask & ~up_closure(p, gen)


def ideals_below(lat: IdealLattice, mask: int) -> list[int]:
    """Ideals ⊆ mask, in lattice order."""
    return [a for a in lat.ideals if a & ~mask == 0]


def ideals_above(lat: IdealLattice, mask: int) -> list[int]:
    """Ideals ⊇ mask, in lattice order."""
    return [a for a in lat.ideals if mask & ~a == 0]


def lattice_to_json(lat: IdealLattice) -> dict:
    return {"ideals": [lat.poset.labels_of(a) for a in lat.ideals]}


def lattice_dot(lat: IdealLattice) -> str:
    """DOT source for the Hasse diagram of the ideal lattice."""

    def name(mask: int) -> str:
        labs = lat.poset.labels_of(mask)
        return "{" + ",".join(labs) + "}" if labs else "{}"

    lines = ["digraph ideal_lattice {", "  rankdir=BT;", "  node [shape=plaintext];"]
    for a in lat.ideals:
        lines.append(f"  {dot_quote(name(a))};")
    for a, b in lat.lattice_covers:
        lines.append(f"  {dot_quote(name(a))} -> {dot_quote(name(b))};")
    lines.append("}")
    return "\n".join(lines) + "\n"
