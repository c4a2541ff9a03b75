"""The map-to-tree bijection, its inverse, the auxiliary completion-order
graph, and the contraction move used for the proportion argument.

The forward direction labels a star thorn tree from a black-partitioned
star map; the inverse recovers the labels one at a time, reading
left-to-right maxima clockwise around each black vertex.  A permuted
thorn tree is an image of the forward map exactly when its leftmost root
slot is a real edge (P1) and the auxiliary graph is a tree rooted at
that edge's black vertex (P2).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .oracle import DEFAULT_PAIR_BUDGET
from .partition import Partition, SetPartition
from .perm import Permutation
from .structures import (
    BlackPartitionedStarMap,
    LabeledThornTree,
    PermutedThornTree,
    StarThornTree,
    all_permuted_trees,
)


class NoP1Error(ValueError):
    """Leftmost root slot is a thorn, so the auxiliary graph is undefined."""


def psi_label(m):
    """Build the labeled star thorn tree of a black-partitioned star map.

    White slots are labeled right-to-left with the alpha-orbit starting at
    1; one edge per block sits at the label beta(max of block); black
    thorns are labeled counter-clockwise following the block's cycles in
    decreasing order of their maxima.
    """
    if not m.is_star:
        raise ValueError("the white-slot labeling needs alpha to be a long "
                         "cycle; got alpha of type %r" % (m.alpha.cycle_type(),))
    n = m.n
    alpha = m.alpha
    seq = [1]
    for _ in range(n - 1):
        seq.append(alpha(seq[-1]))
    # storage slot j (left to right) carries label seq[n-1-j]
    label_at = [seq[n - 1 - j] for j in range(n)]
    slot_of = {lab: j for j, lab in enumerate(label_at)}

    edge_label_to_block = {}
    for block in m.pi.blocks:
        edge_label_to_block[m.beta(max(block))] = block

    white = []
    blocks_in_root_order = []
    for j in range(n):
        lab = label_at[j]
        if lab in edge_label_to_block:
            white.append(len(blocks_in_root_order))
            blocks_in_root_order.append(edge_label_to_block[lab])
        else:
            white.append(None)

    all_cycles = m.beta.cycles()  # max last, decreasing maxima
    black_labels = []
    for block in blocks_in_root_order:
        cycles = [c for c in all_cycles if c[0] in block]
        thorns = list(cycles[0][1:])
        for c in cycles[1:]:
            thorns.extend(c)
        black_labels.append(tuple(thorns))

    tree = StarThornTree(tuple(white),
                         tuple(len(labs) for labs in black_labels))
    return LabeledThornTree(tree, tuple(label_at), tuple(black_labels))


def psi(m):
    """The permuted thorn tree of a black-partitioned star map."""
    return psi_label(m).to_permuted()


@dataclass(frozen=True)
class InverseOutcome:
    """Result of the label-recovery procedure.

    Success carries the recovered map and its labeled tree; Failure
    carries the step index and a certificate naming the collision (the
    colliding element always carries label 1).
    """

    success: bool
    map: BlackPartitionedStarMap = None
    labeled: LabeledThornTree = None
    step: int = None
    certificate: dict = None

    def to_json_obj(self):
        from .structures import to_json_obj

        if self.success:
            return {"labeled": to_json_obj(self.labeled),
                    "map": to_json_obj(self.map), "status": "success"}
        return {"certificate": self.certificate, "status": "failure",
                "step": self.step}


def psi_inverse(t):
    """Recover the unique preimage of a permuted thorn tree, or fail.

    Labels 1..n are assigned one per step; the element carrying the
    current image of beta is found by the left-to-right-maximum rule read
    clockwise around the black vertex.
    """
    tree = t.tree
    n = tree.n
    sigma = t.sigma_map()
    sigma_inv = t.sigma_inv()

    white_labels = [None] * n
    label_of = {}
    elem_of_label = [None] * (n + 1)

    def black_elem(slot):
        v = tree.white[slot]
        if v is not None:
            return ("e", v)
        b, ti = sigma[slot]
        return ("t", b, ti)

    def white_partner(el):
        if el[0] == "e":
            return tree.edge_slot(el[1])
        return sigma_inv[(el[1], el[2])]

    def assign(value, slot):
        white_labels[slot] = value
        el = black_elem(slot)
        label_of[el] = value
        elem_of_label[value] = el

    assign(1, n - 1)

    for i in range(1, n):
        el = elem_of_label[i]
        b = el[1]
        tc = tree.blacks[b]
        # clockwise around b: thorns in reverse storage order, edge last
        clockwise = [("t", b, tc - 1 - r) for r in range(tc)] + [("e", b)]
        pos = clockwise.index(el)
        if any(e not in label_of for e in clockwise[:pos]):
            # i is not a left-to-right maximum
            beta_el = clockwise[pos - 1]
        else:
            q = next((r for r in range(len(clockwise))
                      if clockwise[r] not in label_of), None)
            if q is None:
                beta_el = ("e", b)  # i is the block maximum
            else:
                # q >= 1: the element before the next left-to-right maximum
                beta_el = clockwise[q - 1]
        w = white_partner(beta_el)
        target = w - 1 if w > 0 else n - 1  # next slot counter-clockwise
        if white_labels[target] is not None:
            collided = white_labels[target]
            assert collided == 1, "collision label must be 1, got %d" % collided
            return InverseOutcome(
                success=False, step=i,
                certificate={"collision_label": collided,
                             "collision_slot": target,
                             "beta_element": list(beta_el)})
        assign(i + 1, target)

    black_labels = tuple(
        tuple(label_of[("t", b, ti)] for ti in range(tree.blacks[b]))
        for b in range(tree.p))
    labeled = LabeledThornTree(tree, tuple(white_labels), black_labels)

    # recover beta: split each clockwise reading at its left-to-right maxima
    images = [0] * n
    for b in range(tree.p):
        reading = labeled.clockwise_reading(b)
        segments = []
        for lab in reading:
            if not segments or lab > segments[-1][0]:
                segments.append([lab])
            else:
                segments[-1].append(lab)
        for seg in segments:
            for prev, cur in zip(seg, seg[1:]):
                images[cur - 1] = prev
            images[seg[0] - 1] = seg[-1]
    beta = Permutation(images)
    blocks = [set(labs) | {labeled.edge_label(b)}
              for b, labs in enumerate(black_labels)]
    pi = SetPartition(n, blocks)
    m = BlackPartitionedStarMap(beta, pi)
    assert m.is_star and psi(m) == t, "inverse self-check failed"
    return InverseOutcome(success=True, map=m, labeled=labeled)


# ---------------------------------------------------------------------------
# Auxiliary graph and image characterization


@dataclass(frozen=True)
class AuxGraph:
    """Functional graph on black vertices: out-degree 1 except at the root."""

    p: int
    root: int
    out: dict = field(compare=False)

    def classify(self):
        """('tree', None) if every vertex reaches the root, else
        ('cycle', vertices) for some oriented cycle."""
        status = {self.root: "ok"}
        for start in range(self.p):
            path = []
            v = start
            while status.get(v) is None:
                path.append(v)
                status[v] = "active"
                v = self.out[v]
            if status[v] == "active":
                cycle = path[path.index(v):]
                for u in path:
                    status[u] = "cycle"
                return ("cycle", cycle)
            for u in path:
                status[u] = "ok"
        return ("tree", None)

    def to_json_obj(self):
        return {"out": {str(k): v for k, v in sorted(self.out.items())},
                "p": self.p, "root": self.root}


def aux_graph(t):
    """Successor graph of a permuted thorn tree satisfying (P1).

    For each non-root black vertex, take the white element immediately
    left of its root edge, push it through sigma if it is a thorn, and
    point to the black extremity of the result.
    """
    tree = t.tree
    if tree.white[0] is None:
        raise NoP1Error("leftmost root slot is a thorn")
    root = tree.white[0]
    sigma = t.sigma_map()
    out = {}
    for b in range(tree.p):
        if b == root:
            continue
        s = tree.edge_slot(b)
        assert s > 0  # only the root's edge can occupy the leftmost slot
        v = tree.white[s - 1]
        out[b] = v if v is not None else sigma[s - 1][0]
    return AuxGraph(tree.p, root, out)


@dataclass(frozen=True)
class Classification:
    """Image-membership verdict for a permuted thorn tree."""

    kind: str  # no_p1 | cycle | image
    cycle: tuple = None

    def to_json_obj(self):
        d = {"kind": self.kind}
        if self.cycle is not None:
            d["cycle"] = list(self.cycle)
        return d


def classify(t):
    """Image iff (P1) holds and the auxiliary graph is a rooted tree."""
    try:
        g = aux_graph(t)
    except NoP1Error:
        return Classification("no_p1")
    verdict, cycle = g.classify()
    if verdict == "tree":
        return Classification("image")
    return Classification("cycle", tuple(cycle))


# ---------------------------------------------------------------------------
# Contraction move (phi) and proportions


def contract(t, marked):
    """Erase the marked black vertex, moving its thorns to its successor.

    The marked vertex must differ from the root vertex and from its own
    successor.  Returns the contracted tree together with the marked
    element (the successor's element that the erased edge pointed at).
    """
    g = aux_graph(t)
    if marked == g.root:
        raise ValueError("cannot contract the root vertex")
    target = g.out[marked]
    if target == marked:
        raise ValueError("marked vertex is self-looping")
    tree = t.tree
    s = tree.edge_slot(marked)
    v = tree.white[s - 1]
    if v is not None:
        marked_elem = ("e", v)
    else:
        b2, t2 = t.sigma_map()[s - 1]
        marked_elem = ("t", b2, t2)
    assert marked_elem[1] == target

    def new_black(c):
        return c if c < marked else c - 1

    def new_slot(x):
        return x if x < s else x - 1

    own = tree.blacks[target]

    def new_coord(bt):
        b, ti = bt
        if b == marked:
            return (new_black(target), own + ti)
        return (new_black(b), ti)

    white = tuple(new_black(x) if x is not None else None
                  for i, x in enumerate(tree.white) if i != s)
    blacks = tuple(tree.blacks[c] + (tree.blacks[marked] if c == target else 0)
                   for c in range(tree.p) if c != marked)
    sigma = tuple((new_slot(w), new_coord(bt)) for w, bt in t.sigma)
    out = PermutedThornTree(StarThornTree(white, blacks), sigma)
    if marked_elem[0] == "e":
        elem = ("e", new_black(target))
    else:
        elem = ("t", new_black(target), marked_elem[2])
    return out, elem


def expand(t, marked_elem, k):
    """Inverse of contract: re-insert a black vertex of degree k.

    ``marked_elem`` is the edge or one of the first j-1 thorns of a black
    vertex of degree j+k-1 (j deduced from k).  A new edge slot is added
    just right of the marked element's white partner and the k-1
    rightmost (last, counter-clockwise) thorns of its vertex move to the
    new black vertex, which is returned as the marked vertex.
    """
    tree = t.tree
    if tree.white[0] is None:
        raise NoP1Error("leftmost root slot is a thorn")
    v = marked_elem[1]
    j = tree.degree(v) - k + 1
    if k < 1 or j < 1:
        raise ValueError("vertex degree %d cannot split as (j,k=%d)"
                         % (tree.degree(v), k))
    if marked_elem[0] == "t":
        if not 0 <= marked_elem[2] <= j - 2:
            raise ValueError("marked thorn %d is not among the first %d"
                             % (marked_elem[2], j - 1))
        w = t.sigma_inv()[(v, marked_elem[2])]
    elif marked_elem[0] == "e":
        w = tree.edge_slot(v)
    else:
        raise ValueError("bad marked element %r" % (marked_elem,))

    s = w + 1  # the new edge slot
    r = sum(1 for x in tree.white[:s] if x is not None)  # its root rank

    def new_black(c):
        return c if c < r else c + 1

    def new_coord(bt):
        b, ti = bt
        if b == v and ti >= j - 1:
            return (r, ti - (j - 1))
        return (new_black(b), ti)

    white = [new_black(x) if x is not None else None for x in tree.white]
    white.insert(s, r)
    newblacks = [0] * (tree.p + 1)
    for c in range(tree.p):
        newblacks[new_black(c)] = tree.blacks[c] if c != v else j - 1
    newblacks[r] = k - 1
    sigma = tuple((x if x < s else x + 1, new_coord(bt)) for x, bt in t.sigma)
    out = PermutedThornTree(StarThornTree(tuple(white), tuple(newblacks)),
                            sigma)
    return out, r


def proportion_stats(lam, budget=DEFAULT_PAIR_BUDGET):
    """Exact (P, P') proportions of image trees of type lam.

    P is relative to all permuted thorn trees of the type, P' to those
    satisfying (P1).  Both closed forms are asserted.
    """
    n, p = lam.size, lam.length
    total = with_p1 = image = 0
    for t in all_permuted_trees(lam, budget):
        total += 1
        c = classify(t)
        if c.kind != "no_p1":
            with_p1 += 1
        if c.kind == "image":
            image += 1
    P = Fraction(image, total)
    Pp = Fraction(image, with_p1)
    assert P == Fraction(1, n - p + 1)
    assert Pp == Fraction(n, p * (n - p + 1))
    return P, Pp
