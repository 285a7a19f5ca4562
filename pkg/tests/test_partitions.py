import math

import pytest

from oracles import partitions_brute
from umbracomb.partitions import Partition, add_part, enumerate_partitions, falling_factorial, partition_stats


def test_small_enumerations():
    assert enumerate_partitions(0) == [Partition(())]
    assert {p.parts for p in enumerate_partitions(3)} == {(3,), (2, 1), (1, 1, 1)}
    assert len(enumerate_partitions(4)) == 5


@pytest.mark.parametrize("n", range(0, 13))
def test_count_matches_brute_force(n):
    parts = enumerate_partitions(n)
    if n <= 7:
        assert {p.parts for p in parts} == partitions_brute(n)
    assert len(parts) == len({p.parts for p in parts})
    assert parts == sorted(parts, reverse=True)


def test_stats_examples():
    s = partition_stats(Partition((2, 1, 1)))
    assert (s.length, s.factorial, s.mult_factorial, s.d) == (3, 2, 2, 6)
    assert partition_stats(Partition((5,))).d == 1
    assert Partition((1, 1)).d == 1


@pytest.mark.parametrize("n", range(1, 9))
def test_partition_identities(n):
    for mu in enumerate_partitions(n):
        assert sum(k * m for k, m in mu.multiplicities.items()) == n
        assert mu.d * mu.factorial * mu.mult_factorial == math.factorial(n)
        assert sum(mu.multiplicities.values()) == mu.length


def test_falling_factorial():
    assert falling_factorial(3, 2) == 6
    assert falling_factorial(7, 0) == 1
    assert falling_factorial(5, 3) == 60
    assert falling_factorial(2, 3) == 0
    assert falling_factorial(-1, 2) == 2


def test_add_part():
    assert add_part(2, Partition((3, 1))) == Partition((3, 2, 1))
    assert add_part(1, Partition(())) == Partition((1,))


@pytest.mark.parametrize("n", range(1, 8))
def test_add_part_cover_multiplicity(n):
    # images of {(k, lam): lam |- n-k} hit each mu once per distinct part
    hits = {}
    for k in range(1, n + 1):
        for lam in enumerate_partitions(n - k):
            mu = add_part(k, lam)
            hits[mu] = hits.get(mu, 0) + 1
    assert hits == {mu: len(mu.distinct_parts) for mu in enumerate_partitions(n)}


def test_invalid_partitions():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))
    assert str(Partition((2, 1, 1))) == "2,1,1"
    assert Partition.parse("2,1,1") == Partition((2, 1, 1))
