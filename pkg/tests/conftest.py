import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))  # make oracles importable

from aslattice import build_poset, enumerate_ideals, generate_posets


def chain(n, prefix="c"):
    labels = [f"{prefix}{i}" for i in range(n)]
    return build_poset(labels, list(zip(labels, labels[1:])))


def antichain(n, prefix="a"):
    return build_poset([f"{prefix}{i}" for i in range(n)], [])


def sum_of_chains(*lengths):
    labels = []
    covers = []
    for ci, ln in enumerate(lengths):
        part = [f"c{ci}_{i}" for i in range(ln)]
        labels.extend(part)
        covers.extend(zip(part, part[1:]))
    return build_poset(labels, covers)


@pytest.fixture
def v_poset():
    """p < q > p': two incomparable elements under a common top."""
    return build_poset(["p", "p'", "q"], [("p", "q"), ("p'", "q")])


@pytest.fixture
def lam_poset():
    """q < p, q < p': one bottom under two incomparable tops."""
    return build_poset(["q", "p", "p'"], [("q", "p"), ("q", "p'")])


@pytest.fixture
def n_poset():
    """The four-element N shape: a < c > b < d."""
    return build_poset(["a", "b", "c", "d"], [("a", "c"), ("b", "c"), ("b", "d")])


def corpus(max_n):
    """All isomorphism classes with at most max_n elements."""
    for n in range(1, max_n + 1):
        yield from (cp.poset for cp in generate_posets(n))


def lattice_of(p):
    return enumerate_ideals(p)
