import itertools

import pytest

import oracles
from quaddt.partitions import Partition3D, enumerate_partitions, is_downward_closed


def test_empty_partition():
    assert enumerate_partitions(0) == [Partition3D()]


def test_single_box():
    assert enumerate_partitions(1) == [Partition3D([(0, 0, 0)])]


@pytest.mark.parametrize("n,expected", [(1, 1), (2, 3), (3, 6), (4, 13), (5, 24), (6, 48)])
def test_counts(n, expected):
    assert len(enumerate_partitions(n)) == expected


@pytest.mark.parametrize("n", range(9))
def test_counts_match_plane_partition_oracle(n):
    assert len(enumerate_partitions(n)) == oracles.plane_partition_count(n)


@pytest.mark.parametrize("n", range(9))
def test_outputs_are_distinct_closed_and_sorted(n):
    parts = enumerate_partitions(n)
    assert len(set(parts)) == len(parts)
    assert parts == sorted(parts)
    for P in parts:
        assert P.size == n
        assert is_downward_closed(P.boxes)


def test_enumeration_is_deterministic():
    assert enumerate_partitions(6) == enumerate_partitions(6)


def test_closed_under_coordinate_permutations():
    parts = set(enumerate_partitions(5))
    for perm in itertools.permutations(range(3)):
        assert {P.permuted(perm) for P in parts} == parts


def test_downward_closed_examples():
    assert is_downward_closed({(0, 0, 0), (1, 0, 0)})
    assert not is_downward_closed({(1, 0, 0)})
    assert is_downward_closed(set())
    assert not is_downward_closed({(0, 0, 0), (1, 1, 0), (1, 0, 0)})


def test_rejects_non_partitions():
    with pytest.raises(ValueError):
        Partition3D([(0, 1, 0)])
    with pytest.raises(ValueError):
        Partition3D([(-1, 0, 0)])


def test_partition_is_immutable():
    P = Partition3D([(0, 0, 0)])
    with pytest.raises(AttributeError):
        P.boxes = ()


def test_to_list():
    assert Partition3D([(1, 0, 0), (0, 0, 0)]).to_list() == [[0, 0, 0], [1, 0, 0]]
