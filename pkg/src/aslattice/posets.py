"""Finite posets: construction, duality, chains, components, and I/O.

Elements carry opaque string labels; everything internal works on integer
indices under a fixed linear extension (index i < j whenever p_i < p_j),
so subsets of the ground set are plain machine-word bitmasks.
"""

from __future__ import annotations

import heapq
import json
from dataclasses import dataclass
from functools import cached_property

from aslattice import _kernels
from aslattice.errors import CapacityExceeded, CycleDetected, DuplicateLabel, UnknownLabel

MAX_ELEMENTS = 64


@dataclass(frozen=True)
class Poset:
    """Immutable finite poset.

    ``up[i]`` is the bitmask of indices j with p_i <= p_j (reflexive), and
    ``covers`` is the transitive reduction of that order.  Instances are
    produced by :func:`build_poset`, which validates acyclicity and fixes the
    linear-extension indexing; all operations may assume a valid order.
    """

    labels: tuple[str, ...]
    up: tuple[int, ...]
    covers: tuple[tuple[int, int], ...]

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.labels)) - 1

    @cached_property
    def down(self) -> tuple[int, ...]:
        """down[j] = bitmask of indices i with p_i <= p_j (reflexive)."""
        rows = [0] * len(self.labels)
        for i, row in enumerate(self.up):
            m = row
            while m:
                j = (m & -m).bit_length() - 1
                m &= m - 1
                rows[j] |= 1 << i
        return tuple(rows)

    @cached_property
    def upper_cover(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.n)]
        for i, j in self.covers:
            out[i].append(j)
        return tuple(tuple(sorted(js)) for js in out)

    @cached_property
    def lower_cover(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.n)]
        for i, j in self.covers:
            out[j].append(i)
        return tuple(tuple(sorted(js)) for js in out)

    @cached_property
    def label_index(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    def leq(self, i: int, j: int) -> bool:
        return bool(self.up[i] >> j & 1)

    def comparable(self, i: int, j: int) -> bool:
        return self.leq(i, j) or self.leq(j, i)

    def index_of(self, label: str) -> int:
        try:
            return self.label_index[label]
        except KeyError:
            raise UnknownLabel(f"unknown element {label!r}") from None

    def mask_of(self, labels) -> int:
        m = 0
        for lab in labels:
            m |= 1 << self.index_of(lab)
        return m

    def labels_of(self, mask: int) -> list[str]:
        return [self.labels[i] for i in iter_bits(mask)]

    def __repr__(self) -> str:
        rel = ", ".join(f"{self.labels[i]}<{self.labels[j]}" for i, j in self.covers)
        return f"Poset({list(self.labels)!r}; {rel})"


def iter_bits(mask: int):
    """Indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask &= mask - 1


def build_poset(labels, covers) -> Poset:
    """Construct a poset from element names and covering pairs.

    The relation is the reflexive-transitive closure of ``covers``; elements
    are reindexed by a stable topological sort of the input order, so the
    result is deterministic.  Raises DuplicateLabel, UnknownLabel, or
    CycleDetected.
    """
    labels = list(labels)
    seen = set()
    for lab in labels:
        if lab in seen:
            raise DuplicateLabel(f"duplicate element {lab!r}")
        seen.add(lab)
    if len(labels) > MAX_ELEMENTS:
        raise CapacityExceeded(f"at most {MAX_ELEMENTS} elements supported")
    index = {lab: i for i, lab in enumerate(labels)}
    n = len(labels)
    succ: list[set[int]] = [set() for _ in range(n)]
    pred_count = [0] * n
    edges = set()
    for a, b in covers:
        if a not in index:
            raise UnknownLabel(f"unknown element {a!r} in cover")
        if b not in index:
            raise UnknownLabel(f"unknown element {b!r} in cover")
        i, j = index[a], index[b]
        if i == j:
            raise CycleDetected(f"cover {a!r} < {b!r} relates an element to itself")
        if (i, j) not in edges:
            edges.add((i, j))
            succ[i].add(j)
            pred_count[j] += 1

    # Kahn topological sort, always taking the smallest available input index.
    order: list[int] = []
    counts = list(pred_count)
    heap = [i for i in range(n) if pred_count[i] == 0]
    heapq.heapify(heap)
    while heap:
        i = heapq.heappop(heap)
        order.append(i)
        for j in sorted(succ[i]):
            counts[j] -= 1
            if counts[j] == 0:
                heapq.heappush(heap, j)
    if len(order) != n:
        raise CycleDetected("cover relation contains a cycle")

    new_pos = {old: new for new, old in enumerate(order)}
    up = [1 << new_pos[i] for i in range(n)]
    rows = [0] * n
    for i in range(n):
        rows[new_pos[i]] = up[i]
    for i, j in edges:
        rows[new_pos[i]] |= 1 << new_pos[j]
    closed = _kernels.transitive_closure(rows)
    new_labels = tuple(labels[i] for i in order)
    return Poset(labels=new_labels, up=tuple(closed), covers=_reduction(closed))


def _reduction(up) -> tuple[tuple[int, int], ...]:
    """Transitive reduction (cover pairs) of a closed order given as rows."""
    n = len(up)
    covers = []
    for i in range(n):
        strict = up[i] & ~(1 << i)
        m = strict
        while m:
            j = (m & -m).bit_length() - 1
            m &= m - 1
            between = strict & (_down_mask(up, j) & ~(1 << j))
            if between == 0:
                covers.append((i, j))
    return tuple(sorted(covers))


def _down_mask(up, j) -> int:
    m = 0
    for i in range(len(up)):
        if up[i] >> j & 1:
            m |= 1 << i
    return m


def dual(p: Poset) -> Poset:
    """The poset with all relations reversed, reindexed deterministically."""
    rev = [(p.labels[j], p.labels[i]) for i, j in p.covers]
    return build_poset(p.labels, rev)


def connected_components(p: Poset) -> tuple[tuple[int, ...], ...]:
    """Partition of indices by connectivity of the comparability graph,
    ordered by smallest member."""
    parent = list(range(p.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in p.covers:
        parent[find(i)] = find(j)
    groups: dict[int, list[int]] = {}
    for i in range(p.n):
        groups.setdefault(find(i), []).append(i)
    return tuple(tuple(sorted(g)) for g in sorted(groups.values(), key=min))


def is_direct_sum_of_chains(p: Poset) -> bool:
    """True when every connected component is totally ordered."""
    for comp in connected_components(p):
        for a in range(len(comp)):
            for b in range(a + 1, len(comp)):
                if not p.comparable(comp[a], comp[b]):
                    return False
    return True


def maximal_chains(p: Poset) -> list[tuple[int, ...]]:
    """All inclusion-maximal chains as ascending index tuples, in
    lexicographic order."""
    minimal = [i for i in range(p.n) if not p.lower_cover[i]]
    out: list[tuple[int, ...]] = []

    def extend(chain):
        tip = chain[-1]
        ups = p.upper_cover[tip]
        if not ups:
            out.append(tuple(chain))
            return
        for j in ups:
            chain.append(j)
            extend(chain)
            chain.pop()

    for i in minimal:
        extend([i])
    out.sort()
    return out


def poset_from_json(doc) -> Poset:
    """Build from the ``{"elements": [...], "covers": [[a,b],...]}`` schema."""
    if not isinstance(doc, dict) or "elements" not in doc:
        raise UnknownLabel("poset document must contain an 'elements' list")
    return build_poset(doc["elements"], [tuple(c) for c in doc.get("covers", [])])


def poset_to_json(p: Poset) -> dict:
    return {
        "elements": list(p.labels),
        "covers": [[p.labels[i], p.labels[j]] for i, j in p.covers],
    }


def load_poset(path) -> Poset:
    with open(path) as fh:
        return poset_from_json(json.load(fh))


def dot_quote(name: str) -> str:
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def hasse_dot(p: Poset) -> str:
    """DOT source for the Hasse diagram, ranked bottom-to-top."""
    lines = ["digraph hasse {", "  rankdir=BT;", "  node [shape=plaintext];"]
    for lab in p.labels:
        lines.append(f"  {dot_quote(lab)};")
    for i, j in p.covers:
        lines.append(f"  {dot_quote(p.labels[i])} -> {dot_quote(p.labels[j])};")
    lines.append("}")
    return "\n".join(lines) + "\n"
