"""Trace forms on finite quotient algebras.

For a finite algebra A = Q[X]/I with monomial basis b_0..b_{m-1}, the trace
form is the symmetric bilinear form (f, g) -> trace(mult_matrix(f*g)); its
weighted variant inserts a fixed factor h.  Gram matrices are assembled from a
``TraceVector`` -- the traces of multiplication by each basis monomial --
using linearity: the trace of multiplication by any polynomial is the dot
product of its normal-form coordinates with those base traces.  That needs
one normal form per basis pair (shared between all forms on the same algebra)
instead of a fresh m x m matrix product per Gram entry.

The univariate case has a classical shortcut: for A = Q[X]/(g) the Gram entry
(k, l) is the power sum p_{k+l} of the roots of g, and Newton's identities
produce those power sums straight from the coefficients.  It is exposed as
``trace_form_from_power_sums`` and kept in agreement with the generic path by
the test suite.
"""

from __future__ import annotations

from fractions import Fraction

from . import linalg, univariate
from .groebner import QuotientAlgebra, mult_matrix
from .poly import Polynomial
from .quadform import SymMatrix


class TraceVector:
    """Precomputed traces of multiplication by basis monomials of an algebra."""

    __slots__ = ("algebra", "values", "_pair_coords")

    def __init__(self, algebra: QuotientAlgebra):
        self.algebra = algebra
        self._pair_coords: dict = {}
        m = algebra.dim
        # trace of multiplication by basis[j]: sum over k of the basis[k]
        # coefficient of basis[j]*basis[k]
        self.values = [
            sum((self.pair_coords(j, k)[k] for k in range(m)), Fraction(0))
            for j in range(m)
        ]

    def pair_coords(self, j: int, k: int) -> list:
        """Coordinates of basis[j] * basis[k] modulo the ideal (cached)."""
        if j > k:
            j, k = k, j
        got = self._pair_coords.get((j, k))
        if got is None:
            alg = self.algebra
            prod = Polynomial(
                alg.context,
                {tuple(a + b for a, b in zip(alg.basis[j], alg.basis[k])): Fraction(1)},
            )
            got = alg.coords(prod)
            self._pair_coords[(j, k)] = got
        return got

    def trace_of_coords(self, coords) -> Fraction:
        return sum((c * t for c, t in zip(coords, self.values) if c), Fraction(0))

    def trace_of_poly(self, p: Polynomial) -> Fraction:
        return self.trace_of_coords(self.algebra.coords(p))


def trace_of(alg: QuotientAlgebra, h: Polynomial) -> Fraction:
    """Trace of the multiplication-by-h endomorphism."""
    return linalg.trace(mult_matrix(alg, h))


def trace_form(alg: QuotientAlgebra, tv: TraceVector | None = None) -> SymMatrix:
    """Gram matrix of (f, g) -> trace(mult by f*g) on the monomial basis."""
    if tv is None:
        tv = TraceVector(alg)
    elif tv.algebra is not alg:
        raise ValueError("trace vector belongs to a different algebra")
    m = alg.dim
    rows = linalg.zeros(m)
    for k in range(m):
        for l in range(k, m):
            v = tv.trace_of_coords(tv.pair_coords(k, l))
            rows[k][l] = v
            rows[l][k] = v
    return SymMatrix(rows)


def generalized_trace_form(
    alg: QuotientAlgebra, h: Polynomial, tv: TraceVector | None = None
) -> SymMatrix:
    """Gram matrix of (f, g) -> trace(mult by h*f*g) on the monomial basis."""
    if h.context != alg.context:
        raise ValueError("polynomial context does not match the algebra")
    if tv is None:
        tv = TraceVector(alg)
    elif tv.algebra is not alg:
        raise ValueError("trace vector belongs to a different algebra")
    m = alg.dim
    # traces of mult by h*b_j, from which every Gram entry follows linearly:
    # entry (k, l) = trace(mult by h*b_k*b_l) and b_k*b_l = sum pair coords.
    htraces = [tv.trace_of_poly(h * alg.basis_poly(j)) for j in range(m)]
    rows = linalg.zeros(m)
    for k in range(m):
        for l in range(k, m):
            v = sum(
                (c * t for c, t in zip(tv.pair_coords(k, l), htraces) if c),
                Fraction(0),
            )
            rows[k][l] = v
            rows[l][k] = v
    return SymMatrix(rows)


def power_sums(g_coeffs, upto: int) -> list:
    """Power sums p_0..p_upto of the roots of a monic polynomial (Newton).

    ``g_coeffs`` are dense coefficients c0..cm with cm = 1; p_k is the sum of
    k-th powers of the roots, with multiplicity.
    """
    cs = [Fraction(c) for c in g_coeffs]
    if not cs or cs[-1] != 1:
        raise ValueError("power sums need a monic polynomial")
    m = len(cs) - 1
    sums = [Fraction(m)]
    for k in range(1, upto + 1):
        total = Fraction(0)
        if k <= m:
            total -= k * cs[m - k]
        for i in range(1, min(k, m + 1)):
            if k - i < len(sums) and i <= m:
                total -= cs[m - i] * sums[k - i]
        sums.append(total)
    return sums


def trace_form_from_power_sums(g: Polynomial) -> SymMatrix:
    """Trace form of Q[X]/(g) built from Newton power sums (univariate g)."""
    cs, _ = univariate.from_poly(g)
    if univariate.degree(cs) < 1:
        if not cs:
            raise ValueError("zero polynomial does not define a finite quotient")
        return SymMatrix([])  # unit ideal: zero ring
    cs = univariate.monic(cs)
    m = univariate.degree(cs)
    sums = power_sums(cs, 2 * m - 2)
    return SymMatrix([[sums[k + l] for l in range(m)] for k in range(m)])
