import random

import pytest
from hypothesis import given, strategies as st

from thorntrees.partition import Partition
from thorntrees.perm import (
    Permutation,
    all_permutations,
    canonical_long_cycle,
    compose,
)


def test_compose_worked_example():
    # alpha * beta = (1 2 ... 7) with beta an involution
    alpha = Permutation.from_cycles(7, [(1, 2, 6, 7, 4, 5, 3)])
    beta = Permutation.from_cycles(7, [(2, 5), (3, 7)])
    assert compose(alpha, beta) == canonical_long_cycle(7)


def test_compose_identity():
    g = Permutation([3, 1, 5, 4, 2])
    assert compose(Permutation.identity(5), g) == g
    assert compose(g, Permutation.identity(5)) == g


def test_compose_section4_example():
    alpha = Permutation.from_cycles(5, [(1, 3, 2, 4, 5)])
    beta = Permutation.from_cycles(5, [(1, 3, 2)])
    assert compose(alpha, beta) == canonical_long_cycle(5)


def test_compose_rejects_size_mismatch():
    with pytest.raises(ValueError):
        compose(Permutation.identity(3), Permutation.identity(4))


def test_convention_right_factor_acts_first():
    alpha = Permutation.from_cycles(5, [(1, 3, 2, 4, 5)])
    beta = Permutation.from_cycles(5, [(1, 3, 2)])
    assert alpha(beta(1)) == 2  # (alpha*beta)(1) = 2


def test_inverse():
    assert Permutation.identity(4).inverse() == Permutation.identity(4)
    assert (Permutation.from_cycles(3, [(1, 2, 3)]).inverse()
            == Permutation.from_cycles(3, [(1, 3, 2)]))
    rng = random.Random(7)
    for _ in range(20):
        imgs = list(range(1, 7))
        rng.shuffle(imgs)
        f = Permutation(imgs)
        assert compose(f, f.inverse()) == Permutation.identity(6)


def test_long_cycle():
    assert canonical_long_cycle(1) == Permutation.identity(1)
    assert canonical_long_cycle(3).images == (2, 3, 1)
    assert canonical_long_cycle(7) == Permutation.from_cycles(
        7, [(1, 2, 3, 4, 5, 6, 7)])
    with pytest.raises(ValueError):
        canonical_long_cycle(0)


def test_cycle_decomposition_canonical_form():
    beta = Permutation.from_cycles(7, [(2, 5), (3, 7)])
    cycles = beta.cycles()
    # each cycle ends with its maximum; cycles ordered by decreasing maximum
    assert all(c[-1] == max(c) for c in cycles)
    assert [c[-1] for c in cycles] == sorted((c[-1] for c in cycles),
                                             reverse=True)
    assert beta.cycle_type() == Partition([2, 2, 1, 1, 1])


def test_cycle_type_examples():
    assert Permutation.identity(4).cycle_type() == Partition([1] * 4)
    assert (Permutation.from_cycles(5, [(1, 3, 2)]).cycle_type()
            == Partition([3, 1, 1]))


def test_is_long_cycle():
    assert Permutation.from_cycles(3, [(1, 2, 3)]).is_long_cycle()
    assert not Permutation.identity(3).is_long_cycle()
    assert Permutation.from_cycles(7, [(1, 2, 6, 7, 4, 5, 3)]).is_long_cycle()
    assert Permutation.identity(1).is_long_cycle()


def test_invalid_images_rejected():
    with pytest.raises(ValueError):
        Permutation([1, 1, 3])


@given(st.integers(1, 6), st.randoms(use_true_random=False))
def test_associativity_and_inverse_laws(n, rnd):
    def rand_perm():
        imgs = list(range(1, n + 1))
        rnd.shuffle(imgs)
        return Permutation(imgs)

    f, g, h = rand_perm(), rand_perm(), rand_perm()
    assert (f * g) * h == f * (g * h)
    assert (f * g).inverse() == g.inverse() * f.inverse()


@pytest.mark.parametrize("n", range(1, 7))
def test_cycle_type_sums_to_n(n):
    for f in all_permutations(n):
        assert f.cycle_type().size == n
