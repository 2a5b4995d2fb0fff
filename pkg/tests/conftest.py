"""Shared groups and independent oracles used across the test suite."""

from __future__ import annotations

import itertools
from fractions import Fraction

import pytest

from walllat.groups import Group, Subgroup, from_generators, subgroup_closure


@pytest.fixture(scope="session")
def s3() -> Group:
    return from_generators(3, [(1, 0, 2), (1, 2, 0)], name="s3")


@pytest.fixture(scope="session")
def s4() -> Group:
    return from_generators(4, [(1, 0, 2, 3), (1, 2, 3, 0)], name="s4")


@pytest.fixture(scope="session")
def c4() -> Group:
    return from_generators(4, [(1, 2, 3, 0)], name="c4")


@pytest.fixture(scope="session")
def c2() -> Group:
    return from_generators(2, [(1, 0)], name="c2")


@pytest.fixture(scope="session")
def v4() -> Group:
    return from_generators(4, [(1, 0, 2, 3), (0, 1, 3, 2)], name="c2x2")


@pytest.fixture(scope="session")
def a5() -> Group:
    # generated by (1 2 3) and (3 4 5)
    return from_generators(5, [(1, 2, 0, 3, 4), (0, 1, 3, 4, 2)], name="a5")


def element_by_label(g: Group, label: str) -> int:
    assert g.labels is not None
    return g.labels.index(label)


def subgroup_by_labels(g: Group, labels: list[str]) -> Subgroup:
    return subgroup_closure(g, [element_by_label(g, s) for s in labels])


def brute_force_subgroups(g: Group, max_generators: int = 3) -> set[int]:
    """Independent oracle: masks of all subgroups generated by <= k elements.

    Complete whenever every subgroup of g is at most k-generated, which holds
    for the small groups this oracle is applied to.
    """
    masks = {subgroup_closure(g, []).mask}
    for size in range(1, max_generators + 1):
        for seed in itertools.combinations(range(1, g.order), size):
            masks.add(subgroup_closure(g, seed).mask)
    return masks


def brute_force_double_cosets(g: Group, a: Subgroup, b: Subgroup) -> set[frozenset[int]]:
    """Independent oracle: the double cosets as literal element sets."""
    out = set()
    for x in range(g.order):
        out.add(
            frozenset(
                g.mul(g.mul(p, x), q) for p in a.ids for q in b.ids
            )
        )
    return out


def rank_by_fractions(rows) -> int:
    """Independent oracle: rank via plain Gaussian elimination over Fraction."""
    m = [[Fraction(v) for v in row] for row in rows]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, nrows) if m[i][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [v * inv for v in m[rank]]
        for i in range(nrows):
            if i != rank and m[i][col] != 0:
                factor = m[i][col]
                m[i] = [v - factor * w for v, w in zip(m[i], m[rank])]
        rank += 1
        if rank == nrows:
            break
    return rank
