"""Isomorph-free exhaustive generation of small posets and corpus-level
verification of the uniqueness equivalence.

Generation extends each (n-1)-element class by one new maximal element
whose strict lower set runs over the parent's ideals, rejecting duplicates
through a canonical key: the minimal upper-triangular adjacency encoding
over all linear extensions.  The naive labeled generator used to validate
this lives with the tests, as an independent oracle.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from aslattice import _kernels
from aslattice.errors import CapacityExceeded
from aslattice.ideals import enumerate_ideals
from aslattice.posets import Poset, build_poset, is_direct_sum_of_chains
from aslattice.straightening import check_condition_ii
from aslattice.uniqueness import check_unique, validate_certificate

MAX_CANONICAL_N = 8
DEFAULT_CORPUS_MAX_N = 6
MAX_CORPUS_N = 7  # full relation-system runs beyond this are out of scope
DEFAULT_UNIQUE_BOUND = 1024  # skip the uniqueness verdict above this many ideals


@dataclass(frozen=True)
class CanonicalPoset:
    poset: Poset
    canonical_key: bytes


def _strict_masks(p: Poset) -> tuple[list[int], list[int]]:
    lt = [p.up[i] & ~(1 << i) for i in range(p.n)]
    pred = [p.down[i] & ~(1 << i) for i in range(p.n)]
    return lt, pred


def canonical_form(p: Poset, max_n: int = MAX_CANONICAL_N) -> CanonicalPoset:
    """Canonical key of a poset; equal keys characterize isomorphism."""
    if p.n > max_n:
        raise CapacityExceeded(f"canonical form limited to {max_n} elements")
    lt, pred = _strict_masks(p)
    key = _kernels.canonical_key(p.n, lt, pred)
    return CanonicalPoset(poset=p, canonical_key=key)


def _poset_from_key(key: bytes) -> Poset:
    """Rebuild the canonically labeled poset from its key (covers are
    recovered by transitive reduction inside build_poset)."""
    n = len(key)
    labels = [f"p{i}" for i in range(n)]
    pairs = []
    for j, code in enumerate(key):
        for i in range(j):
            if code >> i & 1:
                pairs.append((labels[i], labels[j]))
    return build_poset(labels, pairs)


def generate_posets(n: int):
    """Yield every isomorphism class of n-element posets exactly once, as
    canonically labeled posets in key order."""
    if not 1 <= n <= MAX_CANONICAL_N:
        raise CapacityExceeded(f"generation supports 1..{MAX_CANONICAL_N} elements")
    level: dict[bytes, Poset] = {b"\x00": build_poset(["p0"], [])}
    for size in range(2, n + 1):
        nxt: dict[bytes, Poset] = {}
        for parent in level.values():
            lt, pred = _strict_masks(parent)
            lat = enumerate_ideals(parent)
            for down_set in lat.ideals:
                new_lt = [m | (1 << (size - 1)) if down_set >> i & 1 else m for i, m in enumerate(lt)]
                new_lt.append(0)
                new_pred = list(pred) + [down_set]
                key = _kernels.canonical_key(size, new_lt, new_pred)
                if key not in nxt:
                    nxt[key] = _poset_from_key(key)
        level = nxt
    for key in sorted(level):
        yield CanonicalPoset(poset=level[key], canonical_key=key)


@dataclass
class CorpusCounterexample:
    poset: Poset
    detail: str


@dataclass
class CorpusTally:
    n: int
    posets: int = 0
    sums_of_chains: int = 0
    condition_ii_true: int = 0
    unique_checked: int = 0
    certificates_validated: int = 0


@dataclass
class CorpusReport:
    max_n: int
    tallies: list[CorpusTally] = field(default_factory=list)
    counterexamples: list[CorpusCounterexample] = field(default_factory=list)
    elapsed_s: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def to_json(self) -> dict:
        return {
            "max_n": self.max_n,
            "per_n": [
                {
                    "n": t.n,
                    "posets": t.posets,
                    "sums_of_chains": t.sums_of_chains,
                    "condition_ii_true": t.condition_ii_true,
                    "unique_checked": t.unique_checked,
                    "certificates_validated": t.certificates_validated,
                }
                for t in self.tallies
            ],
            "counterexamples": [
                {
                    "elements": list(c.poset.labels),
                    "covers": [[c.poset.labels[i], c.poset.labels[j]] for i, j in c.poset.covers],
                    "detail": c.detail,
                }
                for c in self.counterexamples
            ],
            "ok": self.ok,
            "elapsed_s": round(self.elapsed_s, 3),
        }


def _verify_one(p: Poset, unique_bound: int) -> tuple[bool, bool, str | None, bool, bool]:
    """Per-poset corpus checks; returns (sum_of_chains, condition_ii,
    failure detail, unique_checked, certificate_validated)."""
    lat = enumerate_ideals(p)
    soc = is_direct_sum_of_chains(p)
    cii = check_condition_ii(lat).equal
    if soc != cii:
        return soc, cii, f"condition (ii) {cii} but sum-of-chains {soc}", False, False
    checked = False
    validated = False
    if len(lat) <= unique_bound:
        res = check_unique(lat)
        checked = True
        if res.unique != soc:
            return soc, cii, f"uniqueness verdict {res.unique} but sum-of-chains {soc}", checked, False
        if res.unique:
            ok, reason = validate_certificate(p, res.certificate)
            if not ok:
                return soc, cii, f"certificate rejected: {reason}", checked, False
            validated = True
    return soc, cii, None, checked, validated


def corpus_verify(
    max_n: int = DEFAULT_CORPUS_MAX_N,
    unique_bound: int = DEFAULT_UNIQUE_BOUND,
    parallel: bool = False,
) -> CorpusReport:
    """Check the equivalence of the three characterizations over every
    isomorphism class up to ``max_n`` elements; counterexamples (there
    should be none) land in the report."""
    if max_n > MAX_CORPUS_N:
        raise CapacityExceeded(f"corpus verification is capped at {MAX_CORPUS_N} elements")
    report = CorpusReport(max_n=max_n)
    start = time.perf_counter()
    for n in range(1, max_n + 1):
        tally = CorpusTally(n=n)
        posets = [cp.poset for cp in generate_posets(n)]
        if parallel:
            results = _verify_parallel(posets, unique_bound)
        else:
            results = [_verify_one(p, unique_bound) for p in posets]
        for p, (soc, _cii, detail, checked, validated) in zip(posets, results):
            tally.posets += 1
            tally.sums_of_chains += soc
            tally.condition_ii_true += _cii
            tally.unique_checked += checked
            tally.certificates_validated += validated
            if detail is not None:
                report.counterexamples.append(CorpusCounterexample(poset=p, detail=detail))
        report.tallies.append(tally)
    report.elapsed_s = time.perf_counter() - start
    return report


def _verify_parallel(posets, unique_bound):
    import concurrent.futures

    try:
        with concurrent.futures.ProcessPoolExecutor() as pool:
            return list(pool.map(_verify_worker, [(p, unique_bound) for p in posets]))
    except (OSError, PermissionError, NotImplementedError):
        return [_verify_one(p, unique_bound) for p in posets]


def _verify_worker(args):
    p, unique_bound = args
    return _verify_one(p, unique_bound)
