"""Exact symmetric-function layer over the monomial and power-sum bases.

A degree-n symmetric polynomial is a dense rational coefficient vector
indexed by the partitions of n.  Transition matrices between the two
bases are computed from first principles by multiplying out power sums
in n variables (enough variables for degree n), then inverted exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations as iperm
from math import factorial

from .partition import Partition, partitions_of


@dataclass(frozen=True)
class SymPoly:
    """Homogeneous symmetric polynomial tagged with its basis."""

    degree: int
    basis: str  # "m" (monomial) | "p" (power sum)
    coeffs: dict  # Partition -> Fraction; zero entries may be omitted

    def __post_init__(self):
        if self.basis not in ("m", "p"):
            raise ValueError("basis must be 'm' or 'p'")
        clean = {lam: Fraction(c) for lam, c in self.coeffs.items()
                 if Fraction(c) != 0}
        for lam in clean:
            if lam.size != self.degree:
                raise ValueError("index %r has wrong degree" % (lam,))
        object.__setattr__(self, "coeffs", clean)

    def __getitem__(self, lam):
        return self.coeffs.get(lam, Fraction(0))

    def __add__(self, other):
        if (self.degree, self.basis) != (other.degree, other.basis):
            raise ValueError("degree/basis mismatch")
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            out[lam] = out.get(lam, Fraction(0)) + c
        return SymPoly(self.degree, self.basis, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = Fraction(c)
        return SymPoly(self.degree, self.basis,
                       {lam: c * v for lam, v in self.coeffs.items()})

    def __eq__(self, other):
        return (isinstance(other, SymPoly)
                and (self.degree, self.basis) == (other.degree, other.basis)
                and self.coeffs == other.coeffs)

    def to_json_obj(self):
        rows = [[lam.exponential(), str(self[lam])]
                for lam in partitions_of(self.degree)]
        return {"basis": self.basis, "degree": self.degree, "coeffs": rows}


@lru_cache(maxsize=None)
def _p_in_m_matrix(degree):
    """Rows: p_nu expanded over the monomial basis, as {nu: {lam: int}}.

    Computed by literally multiplying the power sums in ``degree``
    variables and reading off leading-exponent coefficients.
    """
    nvars = degree
    out = {}
    for nu in partitions_of(degree):
        poly = {(0,) * nvars: 1}
        for k in nu:
            nxt = {}
            for expo, c in poly.items():
                for i in range(nvars):
                    e = list(expo)
                    e[i] += k
                    e = tuple(e)
                    nxt[e] = nxt.get(e, 0) + c
            poly = nxt
        row = {}
        for lam in partitions_of(degree):
            if lam.length <= nvars:
                key = tuple(lam.parts) + (0,) * (nvars - lam.length)
                row[lam] = poly.get(key, 0)
        out[nu] = row
    return out


@lru_cache(maxsize=None)
def _m_in_p_matrix(degree):
    """Inverse transition: m_lam as rational combinations of p_nu."""
    index = list(partitions_of(degree))
    M = _p_in_m_matrix(degree)
    k = len(index)
    # augmented [M^T | I]: column ops solve for each m_lam in terms of p
    A = [[Fraction(M[index[r]][index[c]]) for c in range(k)]
         for r in range(k)]
    inv = [[Fraction(1 if r == c else 0) for c in range(k)] for r in range(k)]
    for col in range(k):
        piv = next((r for r in range(col, k) if A[r][col] != 0), None)
        if piv is None:
            raise ArithmeticError("singular transition matrix at degree %d"
                                  % degree)
        A[col], A[piv] = A[piv], A[col]
        inv[col], inv[piv] = inv[piv], inv[col]
        d = A[col][col]
        A[col] = [x / d for x in A[col]]
        inv[col] = [x / d for x in inv[col]]
        for r in range(k):
            if r != col and A[r][col] != 0:
                f = A[r][col]
                A[r] = [a - f * b for a, b in zip(A[r], A[col])]
                inv[r] = [a - f * b for a, b in zip(inv[r], inv[col])]
    # A[r][c] is the m_{index[c]} coefficient of p_{index[r]}; expressing
    # m_lam over the p basis needs rows of A^{-1}: the p_nu coefficient of
    # m_lam is inv[lam][nu].
    return {index[r]: {index[c]: inv[r][c] for c in range(k)}
            for r in range(k)}


def p_to_m(f):
    """Rewrite a power-sum-basis polynomial in the monomial basis."""
    if f.basis != "p":
        raise ValueError("expected power-sum basis input")
    M = _p_in_m_matrix(f.degree)
    out = {}
    for nu, c in f.coeffs.items():
        for lam, e in M[nu].items():
            if e:
                out[lam] = out.get(lam, Fraction(0)) + c * e
    return SymPoly(f.degree, "m", out)


def m_to_p(f):
    """Rewrite a monomial-basis polynomial in the power-sum basis."""
    if f.basis != "m":
        raise ValueError("expected monomial basis input")
    W = _m_in_p_matrix(f.degree)
    out = {}
    for lam, c in f.coeffs.items():
        for nu, e in W[lam].items():
            if e:
                out[nu] = out.get(nu, Fraction(0)) + c * e
    return SymPoly(f.degree, "p", out)


def delta(f):
    """The derivation sum_i x_i^2 d/dx_i on the power-sum basis.

    delta(p_pi) = sum_i i * m_i(pi) * p_{pi^{up(i)}}; raises degree by 1.
    """
    if f.basis != "p":
        raise ValueError("delta needs power-sum basis input; convert first")
    out = {}
    for pi, c in f.coeffs.items():
        for i, m in pi.multiplicities().items():
            tgt = pi.up(i)
            out[tgt] = out.get(tgt, Fraction(0)) + c * i * m
    return SymPoly(f.degree + 1, "p", out)


def elementary_in_p(n):
    """e_n = sum_{nu of n} (-1)^{n - len(nu)} p_nu / z_nu."""
    if n < 1:
        raise ValueError("n must be >= 1")
    coeffs = {nu: Fraction((-1) ** (n - nu.length), nu.z())
              for nu in partitions_of(n)}
    return SymPoly(n, "p", coeffs)


def evaluate(f, xs):
    """Evaluate at a rational point (remaining variables are zero)."""
    xs = [Fraction(x) for x in xs]
    total = Fraction(0)
    for lam, c in f.coeffs.items():
        if f.basis == "p":
            v = Fraction(1)
            for k in lam:
                v *= sum(x ** k for x in xs)
        else:
            if lam.length > len(xs):
                continue
            padded = tuple(lam.parts) + (0,) * (len(xs) - lam.length)
            v = sum(
                (lambda expo: _prodpow(xs, expo))(expo)
                for expo in set(iperm(padded)))
        total += c * v
    return total


def _prodpow(xs, expo):
    v = Fraction(1)
    for x, e in zip(xs, expo):
        v *= x ** e
    return v


# ---------------------------------------------------------------------------
# Identity verifiers


def _report(name, n, pairs):
    """pairs: list of (label, lhs, rhs); exact comparison."""
    diffs = [{"index": label, "lhs": str(l), "rhs": str(r)}
             for label, l, r in pairs if l != r]
    return {"check": name, "n": n, "ok": not diffs, "diffs": diffs}


def _count_sum_m(n, values):
    """sum_lam values(lam) * Aut(lam) * m_lam as a SymPoly."""
    return SymPoly(n, "m", {lam: Fraction(values(lam) * lam.aut())
                            for lam in partitions_of(n)})


def verify_C2A(n):
    """sum_mu C(mu) Aut(mu) m_mu = sum_nu A(nu) p_nu, coefficient-exact."""
    from .counting import count_A, count_C

    lhs = _count_sum_m(n, count_C)
    rhs = p_to_m(SymPoly(n, "p", {nu: Fraction(count_A(nu))
                                  for nu in partitions_of(n)}))
    return _report("C2A", n,
                   [(lam.exponential(), lhs[lam], rhs[lam])
                    for lam in partitions_of(n)])


def verify_D2B(n):
    """sum_lam D(lam) Aut(lam) m_lam = sum_pi B(pi) p_pi, coefficient-exact."""
    from .counting import count_D, solve_B

    B = solve_B(n)
    lhs = _count_sum_m(n, count_D)
    rhs = p_to_m(SymPoly(n, "p", {pi: Fraction(B[pi])
                                  for pi in partitions_of(n)}))
    return _report("D2B", n,
                   [(lam.exponential(), lhs[lam], rhs[lam])
                    for lam in partitions_of(n)])


def verify_reduction(n):
    """The degree-(n+1) reduction identity and its coefficient extraction.

    sum_{mu of n+1} C(mu) Aut(mu) m_mu - (n+1)! m_{1^{n+1}}
        = (n+1) * delta( sum_{lam of n} Aut(lam) D(lam) m_lam ),
    and extracting p_mu coefficients reproduces the triangular-system
    equation for every mu of n+1.
    """
    from .counting import count_A, count_C, count_D, solve_B

    d = n + 1
    ones = Partition([1] * d)
    lhs_m = _count_sum_m(d, count_C) - SymPoly(
        d, "m", {ones: Fraction(factorial(d))})
    lhs = m_to_p(lhs_m)
    rhs = delta(m_to_p(_count_sum_m(n, count_D))).scale(d)
    pairs = [(nu.exponential(), lhs[nu], rhs[nu]) for nu in partitions_of(d)]

    # coefficient extraction against the main counting equation:
    # A(mu)(1 + (-1)^(n - len(mu))) = (n+1) sum_{lam: mu = lam^(up i)}
    #                                 i * m_i(lam) * B(lam)
    B = solve_B(n)
    for mu in partitions_of(d):
        lhs_c = count_A(mu) * (1 + (-1) ** ((n - mu.length) % 2))
        rhs_c = 0
        for j in sorted(set(mu.parts)):
            if j >= 2:
                lam = mu.down(j)
                rhs_c += (j - 1) * lam.multiplicity(j - 1) * B[lam]
        rhs_c *= d
        pairs.append(("extract " + mu.exponential(), lhs_c, rhs_c))
    return _report("reduction", n, pairs)
