"""Seeded random-corpus property suite for the chain-table invariants.

The corpus: quivers with at most 3 vertices and 4 arrows, nonempty reduced
monomial pattern sets with at most 5 elements of length 2..4, chain tables
to level 5 (level 6 for the composition bounds).  Partition equivalence is
exhaustive over all composable words up to length 5 on a sub-corpus and
over enumerated members everywhere.
"""
import pytest

from pathalg.corpus import instances
from tests.helpers import (
    chain_table,
    check_composition_bounds,
    check_extrema_inequalities,
    check_members_have_partitions,
    check_partition_equivalence,
    check_predecessor_uniqueness,
    check_quasi_lifting,
)

SEED = 20260808
CORPUS = instances(SEED, 200)
MAX_N = 5


@pytest.fixture(scope="module")
def tables():
    return {inst.seed: chain_table(inst, MAX_N + 1) for inst in CORPUS}


def collect(checker, tables, *args):
    failures = []
    for inst in CORPUS:
        failures += checker(inst, tables[inst.seed], *args)
    return failures


def test_corpus_is_as_specified():
    assert len(CORPUS) == 200
    for inst in CORPUS:
        assert 1 <= len(inst.quiver.vertices) <= 3
        assert 1 <= len(inst.quiver.arrows) <= 4
        assert 1 <= len(inst.patterns) <= 5
        assert all(2 <= p.length <= 4 for p in inst.patterns)


def test_extrema_inequalities(tables):
    assert collect(check_extrema_inequalities, tables, MAX_N) == []


def test_composition_bounds(tables):
    assert collect(check_composition_bounds, tables, MAX_N + 1) == []


def test_predecessor_uniqueness(tables):
    assert collect(check_predecessor_uniqueness, tables, MAX_N) == []


def test_members_have_partitions(tables):
    assert collect(check_members_have_partitions, tables, MAX_N) == []


def test_partition_equivalence_subcorpus(tables):
    failures = []
    for inst in CORPUS[:40]:
        failures += check_partition_equivalence(inst, tables[inst.seed], 4, 5)
    assert failures == []


def test_quasi_lifting(tables):
    assert collect(check_quasi_lifting, tables, MAX_N) == []
