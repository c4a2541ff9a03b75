"""Brute-force enumerators: ground truth for every counted family.

Everything here iterates over complete search spaces and counts exactly;
no formulas, no sampling.  Budgets guard against accidental huge sweeps
and are enforced by refusal, never by truncation.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations as iperm
from math import factorial, prod

from .partition import Partition, partitions_of, permutations_in, set_partitions_of_type
from .perm import all_permutations, canonical_long_cycle

DEFAULT_SN_BUDGET = 8     # full S_n sweeps (8! = 40320)
DEFAULT_PAIR_BUDGET = 6   # (set partition, permutation) pair sweeps


class BudgetExceeded(ValueError):
    """Requested enumeration is beyond the configured budget."""


def _check(n, budget, kind):
    if n > budget:
        raise BudgetExceeded(
            "%s enumeration refused: n=%d exceeds budget %d" % (kind, n, budget))


def enumerate_A(lam, budget=DEFAULT_SN_BUDGET):
    """Count permutations of type lam by sweeping S_n."""
    n = lam.size
    _check(n, budget, "S_n")
    return sum(1 for f in all_permutations(n) if f.cycle_type() == lam)


def enumerate_B(lam, budget=DEFAULT_SN_BUDGET):
    """Count permutations beta of type lam with (1 2 .. n) beta^{-1} long."""
    n = lam.size
    _check(n, budget, "S_n")
    c = canonical_long_cycle(n)
    count = 0
    for beta in all_permutations(n):
        if beta.cycle_type() == lam and (c * beta.inverse()).is_long_cycle():
            count += 1
    return count


def enumerate_Bprime(n, m, budget=DEFAULT_SN_BUDGET):
    """Count permutations beta of [n] with m cycles and long complement."""
    _check(n, budget, "S_n")
    c = canonical_long_cycle(n)
    count = 0
    for beta in all_permutations(n):
        if len(beta.cycles()) == m and (c * beta.inverse()).is_long_cycle():
            count += 1
    return count


def enumerate_CD(lam, budget=DEFAULT_PAIR_BUDGET):
    """Count couples (beta, pi) with pi of type lam and beta in S_pi.

    Returns (C, D): C counts all couples, D those whose complement
    (1 2 .. n) beta^{-1} is a long cycle.
    """
    n = lam.size
    _check(n, budget, "pair")
    c = canonical_long_cycle(n)
    C = D = 0
    for pi in set_partitions_of_type(lam):
        for beta in permutations_in(pi):
            C += 1
            if (c * beta.inverse()).is_long_cycle():
                D += 1
    return C, D


def enumerate_ST(mu, budget=DEFAULT_SN_BUDGET):
    """Count star thorn trees of type mu by direct construction.

    A tree is determined by the set of edge positions among the n root
    slots plus an assignment of the degree multiset to the black vertices
    in root order.
    """
    n, p = mu.size, mu.length
    _check(n, budget, "tree")
    degree_orders = set(iperm(mu.parts))
    count = 0
    for _positions in combinations(range(n), p):
        count += len(degree_orders)
    return count


def reformulation_probability(lam, budget=DEFAULT_PAIR_BUDGET):
    """Exact probability that a uniform couple (pi, beta in S_pi) of type lam
    has a long-cycle complement.

    Counting couples uniformly equals the two-stage uniform choice because
    |S_pi| depends only on the type of pi.
    """
    C, D = enumerate_CD(lam, budget)
    return Fraction(D, C)


def table_for(family, n, budget=None):
    """Oracle-backed CountTable for family A | B | C | D | ST."""
    from .counting import CountTable

    if budget is None:
        budget = DEFAULT_PAIR_BUDGET if family in ("C", "D") else DEFAULT_SN_BUDGET
    entries = {}
    for lam in partitions_of(n):
        if family == "A":
            entries[lam] = enumerate_A(lam, budget)
        elif family == "B":
            entries[lam] = enumerate_B(lam, budget)
        elif family == "ST":
            entries[lam] = enumerate_ST(lam, budget)
        elif family in ("C", "D"):
            C, D = enumerate_CD(lam, budget)
            entries[lam] = C if family == "C" else D
        else:
            raise ValueError("unknown family %r" % family)
    return CountTable(n, family, entries, provenance="oracle")
