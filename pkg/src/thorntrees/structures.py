"""Combinatorial objects: black-partitioned star maps and (permuted,
labeled) star thorn trees, with generation, lift/drop moves, and
canonical JSON serialization.

Conventions
-----------
White root slots are stored left-to-right (index 0 is the leftmost).
Black vertices are numbered by root order: the b-th edge slot from the
left belongs to black vertex b.  Black thorns are stored in
counter-clockwise order starting right after the root edge; the
clockwise reading used for cycle recovery is the reverse traversal.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations, permutations as iperm
from math import factorial

from .oracle import DEFAULT_PAIR_BUDGET, BudgetExceeded
from .partition import Partition, SetPartition, permutations_in, set_partitions_of_type
from .perm import Permutation, canonical_long_cycle


class ParseError(ValueError):
    """Malformed serialized object; carries a human-readable position."""


@dataclass(frozen=True)
class StarThornTree:
    """Ordered star thorn tree: white slot layout plus black thorn counts.

    ``white``: tuple of length n; entry is a black index for an edge slot,
    None for a thorn.  ``blacks``: per-black thorn count.
    """

    white: tuple
    blacks: tuple

    def __post_init__(self):
        edges = [b for b in self.white if b is not None]
        if edges != list(range(len(self.blacks))):
            raise ValueError(
                "edge slots must reference blacks 0..p-1 in root order: %r"
                % (self.white,))
        n = len(self.white)
        if sum(1 + t for t in self.blacks) != n:
            raise ValueError("degree sum %d != n=%d"
                             % (sum(1 + t for t in self.blacks), n))
        if any(t < 0 for t in self.blacks):
            raise ValueError("negative thorn count")

    @property
    def n(self):
        return len(self.white)

    @property
    def p(self):
        return len(self.blacks)

    def degree(self, b):
        return 1 + self.blacks[b]

    def type_of(self):
        return Partition(sorted((self.degree(b) for b in range(self.p)),
                                reverse=True))

    def edge_slot(self, b):
        return self.white.index(b)

    def white_thorn_slots(self):
        return tuple(s for s, v in enumerate(self.white) if v is None)

    def black_thorn_coords(self):
        return tuple((b, t) for b in range(self.p) for t in range(self.blacks[b]))


@dataclass(frozen=True)
class PermutedThornTree:
    """Star thorn tree plus a bijection sigma between white and black thorns.

    ``sigma``: tuple of (white_slot, (black, thorn_index)) pairs, sorted by
    white slot.
    """

    tree: StarThornTree
    sigma: tuple

    def __post_init__(self):
        sigma = tuple(sorted((int(w), (int(b), int(t)))
                             for w, (b, t) in self.sigma))
        object.__setattr__(self, "sigma", sigma)
        wslots = tuple(w for w, _ in sigma)
        if wslots != self.tree.white_thorn_slots():
            raise ValueError("sigma domain must be the white thorn slots")
        targets = sorted(bt for _, bt in sigma)
        if targets != sorted(self.tree.black_thorn_coords()):
            raise ValueError("sigma range must be the black thorn coordinates")

    @property
    def n(self):
        return self.tree.n

    def type_of(self):
        return self.tree.type_of()

    def sigma_map(self):
        return dict(self.sigma)

    def sigma_inv(self):
        return {bt: w for w, bt in self.sigma}


@dataclass(frozen=True)
class BlackPartitionedStarMap:
    """Couple (beta, pi) with pi coarser than the orbits of beta.

    alpha is derived as (1 2 .. n) * beta^{-1}; the map is a *star* map
    when alpha is a long cycle.
    """

    beta: Permutation
    pi: SetPartition

    def __post_init__(self):
        if self.beta.n != self.pi.n:
            raise ValueError("size mismatch between beta and pi")
        for cyc in self.beta.cycles():
            block = self.pi.block_of(cyc[0])
            bad = [x for x in cyc if x not in block]
            if bad:
                raise ValueError(
                    "pi is not coarser than the orbits of beta: cycle %r "
                    "is split across blocks (element %d outside block %r)"
                    % (list(cyc), bad[0], list(block)))

    @property
    def n(self):
        return self.beta.n

    @property
    def alpha(self):
        return canonical_long_cycle(self.n) * self.beta.inverse()

    @property
    def is_star(self):
        return self.alpha.is_long_cycle()

    def type_of(self):
        """Block degree distribution (block sizes, since every edge of a
        black vertex counts once)."""
        return self.pi.type_of()


def new_map(beta, pi):
    return BlackPartitionedStarMap(beta, pi)


def type_of_map(m):
    return m.type_of()


def type_of_tree(t):
    if isinstance(t, PermutedThornTree):
        return t.type_of()
    return t.type_of()


@dataclass(frozen=True)
class LabeledThornTree:
    """Star thorn tree whose white slots and black thorns carry labels 1..n.

    The white labels, read right to left, spell the alpha-orbit starting
    at 1.  An edge shares the label of its white slot.
    """

    tree: StarThornTree
    white_labels: tuple
    black_labels: tuple  # per black vertex, thorn labels in ccw storage order

    def __post_init__(self):
        n = self.tree.n
        if sorted(self.white_labels) != list(range(1, n + 1)):
            raise ValueError("white labels must be a bijection with {1..n}")
        flat = [lab for labs in self.black_labels for lab in labs]
        edge_labels = [self.white_labels[self.tree.edge_slot(b)]
                       for b in range(self.tree.p)]
        if sorted(flat + edge_labels) != list(range(1, n + 1)):
            raise ValueError("black-side labels must be a bijection with {1..n}")
        for b in range(self.tree.p):
            if len(self.black_labels[b]) != self.tree.blacks[b]:
                raise ValueError("black label count mismatch at vertex %d" % b)
        if self.white_labels[n - 1] != 1:
            raise ValueError("rightmost white slot must carry label 1")

    def edge_label(self, b):
        return self.white_labels[self.tree.edge_slot(b)]

    def clockwise_reading(self, b):
        """Labels around black vertex b read clockwise, edge last."""
        return tuple(reversed(self.black_labels[b])) + (self.edge_label(b),)

    def to_permuted(self):
        """Forget label values; sigma pairs equal labels."""
        pos_of = {}
        for b, labs in enumerate(self.black_labels):
            for t, lab in enumerate(labs):
                pos_of[lab] = (b, t)
        sigma = tuple((s, pos_of[self.white_labels[s]])
                      for s in self.tree.white_thorn_slots())
        return PermutedThornTree(self.tree, sigma)


# ---------------------------------------------------------------------------
# Generation


def all_star_thorn_trees(mu):
    """Every star thorn tree of type mu, exactly once.

    Choose the edge positions among the n root slots, then assign the
    degree multiset to the black vertices in root order.
    """
    n, p = mu.size, mu.length
    degree_orders = sorted(set(iperm(mu.parts)))
    for positions in combinations(range(n), p):
        posset = set(positions)
        for degs in degree_orders:
            white = []
            b = 0
            for s in range(n):
                if s in posset:
                    white.append(b)
                    b += 1
                else:
                    white.append(None)
            yield StarThornTree(tuple(white), tuple(d - 1 for d in degs))


def all_permuted_trees(lam, budget=DEFAULT_PAIR_BUDGET):
    """Every permuted star thorn tree of type lam, exactly once."""
    n = lam.size
    if n > budget:
        raise BudgetExceeded(
            "permuted-tree enumeration refused: n=%d exceeds budget %d"
            % (n, budget))
    for tree in all_star_thorn_trees(lam):
        wslots = tree.white_thorn_slots()
        coords = tree.black_thorn_coords()
        for image in iperm(coords):
            yield PermutedThornTree(tree, tuple(zip(wslots, image)))


def all_star_maps(lam, budget=DEFAULT_PAIR_BUDGET):
    """Every black-partitioned star map of type lam (alpha a long cycle)."""
    n = lam.size
    if n > budget:
        raise BudgetExceeded(
            "map enumeration refused: n=%d exceeds budget %d" % (n, budget))
    c = canonical_long_cycle(n)
    for pi in set_partitions_of_type(lam):
        for beta in permutations_in(pi):
            if (c * beta.inverse()).is_long_cycle():
                yield BlackPartitionedStarMap(beta, pi)


# ---------------------------------------------------------------------------
# Lift / drop moves (the thorn-lift recurrence, operationally)


def lift(t, white_pos, black, black_pos):
    """Insert a matched thorn pair: one at white slot ``white_pos`` (0..n)
    and one at position ``black_pos`` (0..thorns) on vertex ``black``.

    Takes type lam to lam^{up(degree(black))}.
    """
    tree = t.tree
    n = tree.n
    if not 0 <= white_pos <= n:
        raise ValueError("white position out of range")
    if not 0 <= black < tree.p:
        raise ValueError("no black vertex %d" % black)
    if not 0 <= black_pos <= tree.blacks[black]:
        raise ValueError("black thorn position out of range")
    white = tree.white[:white_pos] + (None,) + tree.white[white_pos:]
    blacks = list(tree.blacks)
    blacks[black] += 1
    new_tree = StarThornTree(white, tuple(blacks))

    def shift_w(s):
        return s + 1 if s >= white_pos else s

    def shift_bt(bt):
        b, ti = bt
        if b == black and ti >= black_pos:
            return (b, ti + 1)
        return bt

    sigma = [(shift_w(w), shift_bt(bt)) for w, bt in t.sigma]
    sigma.append((white_pos, (black, black_pos)))
    return PermutedThornTree(new_tree, tuple(sigma))


def drop(t, black, black_pos):
    """Remove the marked black thorn and its white partner (inverse of lift).

    The marked thorn must sit on a vertex of degree >= 2.
    """
    tree = t.tree
    if not (0 <= black < tree.p and 0 <= black_pos < tree.blacks[black]):
        raise ValueError("no black thorn (%d, %d)" % (black, black_pos))
    if tree.degree(black) < 2:
        raise ValueError("vertex %d has degree < 2" % black)
    white_pos = t.sigma_inv()[(black, black_pos)]
    white = tree.white[:white_pos] + tree.white[white_pos + 1:]
    blacks = list(tree.blacks)
    blacks[black] -= 1
    new_tree = StarThornTree(white, tuple(blacks))

    def shift_w(s):
        return s - 1 if s > white_pos else s

    def shift_bt(bt):
        b, ti = bt
        if b == black and ti > black_pos:
            return (b, ti - 1)
        return bt

    sigma = [(shift_w(w), shift_bt(bt)) for w, bt in t.sigma
             if w != white_pos]
    return PermutedThornTree(new_tree, tuple(sigma))


# ---------------------------------------------------------------------------
# Canonical JSON


def _tree_obj(tree):
    white = []
    rank = 0
    for v in tree.white:
        if v is None:
            white.append({"thorn": rank})
            rank += 1
        else:
            white.append({"edge": v})
    return {"blacks": [{"thorns": t} for t in tree.blacks],
            "n": tree.n, "white": white}


def to_json_obj(obj):
    if isinstance(obj, StarThornTree):
        return _tree_obj(obj)
    if isinstance(obj, PermutedThornTree):
        d = _tree_obj(obj.tree)
        d["sigma"] = [[w, [b, t]] for w, (b, t) in obj.sigma]
        return d
    if isinstance(obj, BlackPartitionedStarMap):
        return {"beta": list(obj.beta.images), "n": obj.n,
                "pi": [list(b) for b in obj.pi.blocks]}
    if isinstance(obj, LabeledThornTree):
        return {"black_labels": [list(x) for x in obj.black_labels],
                "tree": _tree_obj(obj.tree),
                "white_labels": list(obj.white_labels)}
    raise TypeError("cannot serialize %r" % type(obj))


def serialize(obj):
    """Canonical byte-stable text: sorted keys, no whitespace."""
    return json.dumps(to_json_obj(obj), sort_keys=True, separators=(",", ":"))


def _tree_from_obj(d):
    try:
        white = []
        for slot in d["white"]:
            if "edge" in slot:
                white.append(int(slot["edge"]))
            elif "thorn" in slot:
                white.append(None)
            else:
                raise ParseError("white slot must be an edge or a thorn: %r"
                                 % (slot,))
        blacks = tuple(int(b["thorns"]) for b in d["blacks"])
    except (KeyError, TypeError) as exc:
        raise ParseError("malformed tree object: %s" % exc) from exc
    tree = StarThornTree(tuple(white), blacks)
    if tree.n != int(d["n"]):
        raise ParseError("declared n=%s but %d white slots" % (d["n"], tree.n))
    return tree


def from_json_obj(d):
    if not isinstance(d, dict):
        raise ParseError("top-level value must be an object")
    if "beta" in d:
        try:
            beta = Permutation(int(x) for x in d["beta"])
            pi = SetPartition(int(d["n"]), [list(map(int, b)) for b in d["pi"]])
        except (KeyError, TypeError) as exc:
            raise ParseError("malformed map object: %s" % exc) from exc
        return BlackPartitionedStarMap(beta, pi)
    if "white_labels" in d:
        tree = _tree_from_obj(d["tree"])
        return LabeledThornTree(tree, tuple(map(int, d["white_labels"])),
                                tuple(tuple(map(int, x))
                                      for x in d["black_labels"]))
    if "sigma" in d:
        tree = _tree_from_obj(d)
        sigma = tuple((int(w), (int(b), int(t))) for w, (b, t) in d["sigma"])
        return PermutedThornTree(tree, sigma)
    if "white" in d:
        return _tree_from_obj(d)
    raise ParseError("unrecognized object (keys: %s)" % sorted(d))


def deserialize(text):
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError("invalid JSON at line %d column %d: %s"
                         % (exc.lineno, exc.colno, exc.msg)) from exc
    return from_json_obj(d)
