"""Integer partitions and set partitions of {1..n}.

Partitions are stored as weakly decreasing tuples of positive parts.
Set partitions store their blocks sorted by minimum element.
"""

from __future__ import annotations

from itertools import combinations, permutations as iperm
from math import factorial, prod


class Partition:
    """Weakly decreasing sequence of positive integer parts."""

    __slots__ = ("parts",)

    def __init__(self, parts):
        parts = tuple(parts)
        if any(p < 1 for p in parts):
            raise ValueError("parts must be positive: %r" % (parts,))
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError("parts must be weakly decreasing: %r" % (parts,))
        object.__setattr__(self, "parts", parts)

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    @property
    def size(self):
        return sum(self.parts)

    @property
    def length(self):
        return len(self.parts)

    def multiplicity(self, i):
        """m_i: the number of parts equal to i."""
        return self.parts.count(i)

    def multiplicities(self):
        out = {}
        for p in self.parts:
            out[p] = out.get(p, 0) + 1
        return out

    def z(self):
        """Centralizer size: prod_i i^{m_i} * m_i!."""
        return prod(i ** m * factorial(m) for i, m in self.multiplicities().items())

    def aut(self):
        """Multiplicity symmetry factor: prod_i m_i!."""
        return prod(factorial(m) for m in self.multiplicities().values())

    def up(self, i):
        """Replace one part i by i+1 (size +1, length preserved)."""
        if i not in self.parts:
            raise ValueError("no part %d in %r" % (i, self))
        parts = list(self.parts)
        parts.remove(i)
        parts.append(i + 1)
        return Partition(sorted(parts, reverse=True))

    def down(self, j):
        """Replace one part j (j >= 2) by j-1 (size -1, length preserved)."""
        if j < 2:
            raise ValueError("down requires a part >= 2")
        if j not in self.parts:
            raise ValueError("no part %d in %r" % (j, self))
        parts = list(self.parts)
        parts.remove(j)
        parts.append(j - 1)
        return Partition(sorted(parts, reverse=True))

    def remove_part(self, j):
        """Delete one part j entirely (length -1)."""
        if j not in self.parts:
            raise ValueError("no part %d in %r" % (j, self))
        parts = list(self.parts)
        parts.remove(j)
        return Partition(parts)

    def exponential(self):
        """Exponential notation like '1^2 3^1 4^2' (empty partition: '()')."""
        if not self.parts:
            return "()"
        mult = self.multiplicities()
        return " ".join("%d^%d" % (i, mult[i]) for i in sorted(mult))

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __lt__(self, other):
        return self.parts < other.parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return "Partition%r" % (self.parts,)


def partition_up(lam, i):
    return lam.up(i)


def partition_down(mu, j):
    return mu.down(j)


def z_of(lam):
    return lam.z()


def aut_of(lam):
    return lam.aut()


def partitions_of(n, parity=None):
    """All partitions of n in decreasing lexicographic order.

    With ``parity`` given, keep only partitions whose length is congruent
    to ``parity`` mod 2.
    """
    if n < 0:
        raise ValueError("n must be >= 0")

    def gen(remaining, cap, prefix):
        if remaining == 0:
            yield Partition(prefix)
            return
        for first in range(min(cap, remaining), 0, -1):
            yield from gen(remaining - first, first, prefix + [first])

    for lam in gen(n, n, []):
        if parity is None or lam.length % 2 == parity % 2:
            yield lam


class SetPartition:
    """Family of disjoint nonempty blocks covering {1..n}."""

    __slots__ = ("n", "blocks")

    def __init__(self, n, blocks):
        blocks = tuple(tuple(sorted(b)) for b in blocks)
        blocks = tuple(sorted(blocks, key=lambda b: b[0]))
        flat = [x for b in blocks for x in b]
        if sorted(flat) != list(range(1, n + 1)):
            raise ValueError("blocks must partition {1..%d}: %r" % (n, blocks))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "blocks", blocks)

    def __setattr__(self, name, value):
        raise AttributeError("SetPartition is immutable")

    def type_of(self):
        return Partition(sorted((len(b) for b in self.blocks), reverse=True))

    def block_of(self, x):
        for b in self.blocks:
            if x in b:
                return b
        raise ValueError("element %d not in {1..%d}" % (x, self.n))

    def __eq__(self, other):
        return (isinstance(other, SetPartition)
                and self.n == other.n and self.blocks == other.blocks)

    def __hash__(self):
        return hash((self.n, self.blocks))

    def __repr__(self):
        return "SetPartition(%d, %r)" % (self.n, [list(b) for b in self.blocks])


def set_partitions_of_type(lam):
    """All set partitions of {1..|lam|} whose sorted block sizes equal lam.

    Duplicate-free: each block is anchored at its smallest unused element.
    """
    n = lam.size

    def gen(remaining, sizes):
        if not remaining:
            yield []
            return
        anchor = remaining[0]
        rest = remaining[1:]
        tried = set()
        for s in sizes:
            if s in tried:
                continue
            tried.add(s)
            sub = list(sizes)
            sub.remove(s)
            for others in combinations(rest, s - 1):
                block = (anchor,) + others
                left = tuple(x for x in rest if x not in others)
                for tail in gen(left, sub):
                    yield [block] + tail

    for blocks in gen(tuple(range(1, n + 1)), list(lam.parts)):
        yield SetPartition(n, blocks)


def permutations_in(pi):
    """All permutations of {1..n} whose every cycle stays inside a block of pi.

    Equivalently the direct product of the symmetric groups of the blocks;
    there are prod |block|! of them.
    """
    from .perm import Permutation

    n = pi.n

    def gen(block_idx, images):
        if block_idx == len(pi.blocks):
            yield Permutation(images)
            return
        block = pi.blocks[block_idx]
        for target in iperm(block):
            nxt = list(images)
            for src, dst in zip(block, target):
                nxt[src - 1] = dst
            yield from gen(block_idx + 1, nxt)

    yield from gen(0, [0] * n)
