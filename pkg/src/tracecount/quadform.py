"""Symmetric bilinear forms over the rationals: diagonalization and inertia.

Three independent routes to the inertia (p, q) of a symmetric matrix are
provided and kept in agreement:

* ``type_of`` — congruence diagonalization (symmetric Gaussian elimination,
  with the polarization move for zero pivots) and a count of diagonal signs;
* ``type_via_descartes`` — Descartes' rule of signs applied to the
  characteristic polynomial, which is exact here because a symmetric matrix
  has only real eigenvalues;
* ``hurwitz_type`` — sign changes along the leading principal minors, valid
  only when all of them are nonzero (returns None otherwise).

``char_poly`` uses the Faddeev-LeVerrier recurrence: exact over the
rationals, the only divisions being by the integers 1..n.

``checked_type`` runs the first two routes and raises
``InternalConsistencyError`` if they ever disagree; the counting layer goes
through it so every signature that reaches a caller was computed twice.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .rational import sign


class InternalConsistencyError(RuntimeError):
    """Two supposedly equivalent exact computations disagreed (a bug, not bad input)."""


class SymMatrix:
    """An exactly symmetric rational matrix (validated on construction)."""

    __slots__ = ("entries",)

    def __init__(self, rows):
        entries = tuple(tuple(Fraction(x) for x in row) for row in rows)
        n = len(entries)
        for row in entries:
            if len(row) != n:
                raise ValueError("matrix is not square")
        for i in range(n):
            for j in range(i + 1, n):
                if entries[i][j] != entries[j][i]:
                    raise ValueError(
                        f"matrix is not symmetric: entry ({i}, {j}) = {entries[i][j]} "
                        f"but ({j}, {i}) = {entries[j][i]}"
                    )
        self.entries = entries

    @property
    def n(self) -> int:
        return len(self.entries)

    def rows(self) -> list:
        return [list(row) for row in self.entries]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        return isinstance(other, SymMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"SymMatrix({[list(r) for r in self.entries]!r})"


@dataclass(frozen=True)
class FormType:
    """Sylvester inertia of a symmetric form: pos/neg squares in any diagonalization."""

    pos: int
    neg: int
    dim: int

    def __post_init__(self):
        if self.pos < 0 or self.neg < 0 or self.pos + self.neg > self.dim:
            raise ValueError(f"impossible inertia ({self.pos}, {self.neg}) in dimension {self.dim}")

    @property
    def rank(self) -> int:
        return self.pos + self.neg

    @property
    def signature(self) -> int:
        return self.pos - self.neg

    def __str__(self):
        return f"({self.pos}, {self.neg})"


def _rows_of(matrix):
    if isinstance(matrix, SymMatrix):
        return matrix.rows()
    return [[Fraction(x) for x in row] for row in matrix]


def congruence_diagonalize(matrix: SymMatrix):
    """(T, D) with T invertible, transpose(T) * S * T = D diagonal.

    Symmetric Gaussian elimination.  A zero pivot with a nonzero entry later
    in its row is repaired by the polarization move: add (or, if adding still
    leaves a zero, subtract) that row and the matching column, which makes the
    pivot 2*S[k][j] +/- S[j][j]; over the rationals one of the two choices is
    always nonzero.
    """
    if not isinstance(matrix, SymMatrix):
        matrix = SymMatrix(matrix)
    n = matrix.n
    m = matrix.rows()
    t = linalg.identity(n)

    def add_col(dst, src, factor):
        # column op C_dst += factor * C_src, with the matching row op, and the
        # same column op recorded in t (so t accumulates S -> T^t S T).
        for row in m:
            row[dst] += factor * row[src]
        for j in range(n):
            m[dst][j] += factor * m[src][j]
        for row in t:
            row[dst] += factor * row[src]

    for k in range(n):
        if not m[k][k]:
            j = next((j for j in range(k + 1, n) if m[k][j]), None)
            if j is None:
                continue  # row and column already clear; diagonal entry stays 0
            if 2 * m[k][j] + m[j][j]:
                add_col(k, j, Fraction(1))
            else:
                add_col(k, j, Fraction(-1))
        pivot = m[k][k]
        for j in range(k + 1, n):
            if m[k][j]:
                add_col(j, k, -m[k][j] / pivot)
    d = linalg.zeros(n)
    for i in range(n):
        d[i][i] = m[i][i]
    return t, d


def type_of(matrix: SymMatrix) -> FormType:
    """Inertia via congruence diagonalization."""
    if not isinstance(matrix, SymMatrix):
        matrix = SymMatrix(matrix)
    _, d = congruence_diagonalize(matrix)
    pos = sum(1 for i in range(matrix.n) if d[i][i] > 0)
    neg = sum(1 for i in range(matrix.n) if d[i][i] < 0)
    return FormType(pos, neg, matrix.n)


def char_poly(matrix) -> list:
    """Coefficients c0..cn of det(X*I - M), cn = 1 (Faddeev-LeVerrier)."""
    rows = _rows_of(matrix)
    n = len(rows)
    for row in rows:
        if len(row) != n:
            raise ValueError("matrix is not square")
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    aux = linalg.identity(n)
    for k in range(1, n + 1):
        aux = linalg.mat_mul(rows, aux)
        c = -linalg.trace(aux) / k
        coeffs[n - k] = c
        for i in range(n):
            aux[i][i] += c
    return coeffs


def descartes_counts(coeffs):
    """(sign changes of c0..cn, sign changes of c0, -c1, c2, ...), zeros skipped.

    For a polynomial with all real roots both counts are exact: positive and
    negative roots with multiplicity.  In general they are upper bounds of the
    same parity.
    """
    signs = [sign(c) for c in coeffs]
    if not any(signs):
        raise ValueError("zero polynomial")
    plus = [s for s in signs if s]
    minus = [s if i % 2 == 0 else -s for i, s in enumerate(signs) if s]
    vplus = sum(1 for a, b in zip(plus, plus[1:]) if a != b)
    vminus = sum(1 for a, b in zip(minus, minus[1:]) if a != b)
    return vplus, vminus


def type_via_descartes(matrix: SymMatrix) -> FormType:
    """Inertia from the characteristic polynomial by Descartes' rule.

    All eigenvalues are real, so the sign-change counts are exactly the
    numbers of positive and negative eigenvalues, and the leading run of zero
    coefficients is the eigenvalue 0's multiplicity.
    """
    if not isinstance(matrix, SymMatrix):
        matrix = SymMatrix(matrix)
    n = matrix.n
    if n == 0:
        return FormType(0, 0, 0)
    coeffs = char_poly(matrix)
    pos, neg = descartes_counts(coeffs)
    zero_mult = next(i for i, c in enumerate(coeffs) if c)
    if pos + neg != n - zero_mult:
        raise InternalConsistencyError(
            "Descartes counts do not add up to the rank of a symmetric matrix"
        )
    return FormType(pos, neg, n)


def hurwitz_type(matrix: SymMatrix) -> FormType | None:
    """Inertia from leading principal minors, or None when one vanishes.

    With all minors D1..Dn nonzero the form is nondegenerate and the number
    of sign changes along 1, D1, .., Dn is the negative index.
    """
    if not isinstance(matrix, SymMatrix):
        matrix = SymMatrix(matrix)
    n = matrix.n
    rows = matrix.rows()
    minors = [Fraction(1)]
    for k in range(1, n + 1):
        d = linalg.det([row[:k] for row in rows[:k]])
        if not d:
            return None
        minors.append(d)
    neg = sum(1 for a, b in zip(minors, minors[1:]) if sign(a) != sign(b))
    return FormType(n - neg, neg, n)


def definiteness(matrix: SymMatrix) -> str:
    """One of positive-definite, negative-definite, positive-semidefinite,
    negative-semidefinite, indefinite, zero."""
    t = type_of(matrix)
    if t.pos and t.neg:
        return "indefinite"
    if not t.pos and not t.neg:
        return "zero"
    if t.pos:
        return "positive-definite" if t.pos == t.dim else "positive-semidefinite"
    return "negative-definite" if t.neg == t.dim else "negative-semidefinite"


def checked_type(matrix: SymMatrix) -> FormType:
    """Inertia computed by two independent algorithms; raises if they differ."""
    if not isinstance(matrix, SymMatrix):
        matrix = SymMatrix(matrix)
    by_diag = type_of(matrix)
    by_descartes = type_via_descartes(matrix)
    if by_diag != by_descartes:
        raise InternalConsistencyError(
            f"signature algorithms disagree: diagonalization says {by_diag}, "
            f"Descartes says {by_descartes}"
        )
    return by_diag
