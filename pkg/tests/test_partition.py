from math import factorial, prod

import pytest

from thorntrees.partition import (
    Partition,
    SetPartition,
    partitions_of,
    permutations_in,
    set_partitions_of_type,
)


def test_partitions_of_4_order():
    assert [p.parts for p in partitions_of(4)] == [
        (4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_partitions_of_zero():
    assert list(partitions_of(0)) == [Partition([])]


def test_partitions_parity_filter():
    assert [p.parts for p in partitions_of(4, parity=4)] == [
        (3, 1), (2, 2), (1, 1, 1, 1)]


def test_up_down_worked_examples():
    assert Partition([4, 4, 3, 1, 1]).down(4) == Partition([4, 3, 3, 1, 1])
    assert Partition([4, 3, 3, 2, 2]).up(2) == Partition([4, 3, 3, 3, 2])


def test_up_down_inverse_pair():
    for n in range(1, 9):
        for mu in partitions_of(n):
            for j in set(mu.parts):
                if j >= 2:
                    assert mu.down(j).up(j - 1) == mu


def test_up_down_preserve_length():
    lam = Partition([3, 2, 2])
    assert lam.up(2).length == lam.length
    assert lam.down(3).length == lam.length
    assert lam.up(2).size == lam.size + 1
    assert lam.down(3).size == lam.size - 1


def test_up_down_missing_part_rejected():
    with pytest.raises(ValueError):
        Partition([3, 1]).up(2)
    with pytest.raises(ValueError):
        Partition([3, 1]).down(2)


def test_z_and_aut():
    for n in range(1, 8):
        assert Partition([n]).z() == n
    assert Partition([2, 1, 1]).z() == 4
    assert Partition([4, 4, 3, 1, 1]).aut() == 4  # 2! * 1! * 2!


def test_class_size_identity():
    for n in range(11):
        assert sum(factorial(n) // lam.z() for lam in partitions_of(n)) \
            == factorial(n)


def test_set_partitions_of_type():
    parts = list(set_partitions_of_type(Partition([2, 1])))
    assert {p.blocks for p in parts} == {
        ((1, 2), (3,)), ((1, 3), (2,)), ((1,), (2, 3))}
    for p in parts:
        assert p.type_of() == Partition([2, 1])


@pytest.mark.parametrize("n", range(1, 7))
def test_set_partition_counts_and_block_permutations(n):
    for lam in partitions_of(n):
        sps = list(set_partitions_of_type(lam))
        assert len(sps) == len(set(sps))  # duplicate-free
        expected = prod(factorial(s) for s in lam.parts)
        counts = {len(list(permutations_in(pi))) for pi in sps}
        # |S_pi| depends only on the type of pi
        assert counts == {expected}


def test_permutations_in_single_block():
    pi = SetPartition(4, [[1, 2, 3, 4]])
    assert len(set(permutations_in(pi))) == 24


def test_permutations_in_small():
    pi = SetPartition(3, [[1, 2], [3]])
    perms = set(permutations_in(pi))
    assert {p.images for p in perms} == {(1, 2, 3), (2, 1, 3)}


def test_set_partition_validation():
    with pytest.raises(ValueError):
        SetPartition(3, [[1, 2]])
    with pytest.raises(ValueError):
        SetPartition(3, [[1, 2], [2, 3]])


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition([1, 2])
    with pytest.raises(ValueError):
        Partition([2, 0])


def test_exponential_notation():
    assert Partition([4, 4, 3, 1, 1]).exponential() == "1^2 3^1 4^2"
    assert Partition([]).exponential() == "()"
