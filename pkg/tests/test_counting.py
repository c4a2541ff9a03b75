from math import factorial

import pytest

from thorntrees import oracle
from thorntrees.counting import (
    InexactDivisionError,
    check_lift_recurrence,
    count_A,
    count_Bprime,
    count_C,
    count_D,
    count_ST,
    solve_B,
    stirling1_row,
    stirling1_unsigned,
    verify_zagier,
)
from thorntrees.partition import Partition, partitions_of
from thorntrees.perm import all_permutations


def brute_stirling(n, k):
    return sum(1 for f in all_permutations(n) if len(f.cycles()) == k)


def test_stirling_small_values():
    assert stirling1_unsigned(4, 4) == 1
    assert stirling1_unsigned(4, 1) == 6
    assert stirling1_unsigned(4, 2) == 11  # == brute_stirling(4, 2)
    assert stirling1_unsigned(4, 2) == brute_stirling(4, 2)


@pytest.mark.parametrize("n", range(0, 7))
def test_stirling_row_matches_enumeration(n):
    row = stirling1_row(n)
    for k in range(n + 1):
        assert row[k] == brute_stirling(n, k)


def test_stirling_row_sums():
    for n in range(31):
        assert sum(stirling1_row(n)) == factorial(n)


def test_stirling_out_of_range():
    assert stirling1_unsigned(3, 5) == 0
    with pytest.raises(ValueError):
        stirling1_unsigned(-1, 0)


def test_count_A():
    for n in range(1, 8):
        assert count_A(Partition([n])) == factorial(n - 1)
    assert count_A(Partition([2, 1, 1])) == 6
    assert sum(count_A(mu) for mu in partitions_of(5)) == 120


def test_count_ST_examples():
    assert count_ST(Partition([1])) == 1
    assert count_ST(Partition([2])) == 2
    assert count_ST(Partition([2, 1])) == 6
    assert count_ST(Partition([2, 2])) == 6


@pytest.mark.parametrize("n", range(1, 9))
def test_count_ST_matches_oracle(n):
    for mu in partitions_of(n):
        assert count_ST(mu) == oracle.enumerate_ST(mu)


def test_count_C_and_D():
    for n in range(1, 7):
        assert count_C(Partition([n])) == factorial(n)
        assert count_D(Partition([n])) == factorial(n - 1)
    assert count_C(Partition([2, 1])) == 6
    assert count_D(Partition([2, 1])) == 3


def test_C_is_D_times_gap():
    for n in range(1, 9):
        for lam in partitions_of(n):
            assert count_C(lam) == (n - lam.length + 1) * count_D(lam)


def test_solve_B_base_cases():
    assert solve_B(3)[Partition([3])] == 1
    assert solve_B(3)[Partition([1, 1, 1])] == 1
    assert solve_B(3)[Partition([2, 1])] == 0
    assert solve_B(5)[Partition([5])] == 8


@pytest.mark.parametrize("n", range(1, 8))
def test_solve_B_matches_oracle(n):
    table = solve_B(n)
    for lam in partitions_of(n):
        assert table[lam] == oracle.enumerate_B(lam)
        if lam.length % 2 != n % 2:
            assert table[lam] == 0


def test_count_Bprime():
    assert count_Bprime(3, 1) == 1
    assert count_Bprime(3, 3) == 1
    assert count_Bprime(4, 2) == 5
    with pytest.raises(ValueError):
        count_Bprime(3, 4)


def test_verify_zagier():
    for n in range(1, 9):
        assert all(row["ok"] for row in verify_zagier(n))


def test_zagier_instances():
    assert 6 * count_Bprime(3, 1) == stirling1_unsigned(4, 1)
    assert 6 * count_Bprime(3, 3) == stirling1_unsigned(4, 3)
    assert count_Bprime(4, 2) == 2 * stirling1_unsigned(5, 2) // 20


def test_lift_recurrence():
    assert check_lift_recurrence(Partition([1]), 1)
    for n in range(1, 8):
        assert check_lift_recurrence(Partition([n]), n)
        for lam in partitions_of(n):
            for i in set(lam.parts):
                assert check_lift_recurrence(lam, i), (lam, i)


def test_lift_recurrence_missing_part():
    with pytest.raises(ValueError):
        check_lift_recurrence(Partition([3]), 2)


def test_table_export():
    from thorntrees.counting import table_for

    t = table_for("A", 4)
    csv = t.to_csv()
    assert csv.splitlines()[0] == "partition,value,provenance"
    assert "4^1,6,formula" in csv
    obj = t.to_json_obj()
    assert obj["rows"][0] == ["4^1", "6"]


def test_inexact_division_guard():
    with pytest.raises(InexactDivisionError):
        from thorntrees.counting import _exact_div

        _exact_div(7, 2)
