import random
from fractions import Fraction

import pytest

from tracecount import linalg
from tracecount.quadform import (
    FormType,
    InternalConsistencyError,
    SymMatrix,
    char_poly,
    checked_type,
    congruence_diagonalize,
    definiteness,
    descartes_counts,
    hurwitz_type,
    type_of,
    type_via_descartes,
)


def random_symmetric(rng, n, lo=-5, hi=5):
    a = [[Fraction(rng.randint(lo, hi)) for _ in range(n)] for _ in range(n)]
    return SymMatrix(linalg.mat_add(a, linalg.transpose(a)))


def random_invertible(rng, n, shears=6):
    t = linalg.identity(n)
    for _ in range(shears):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        f = Fraction(rng.randint(-3, 3))
        for row in t:
            row[j] += f * row[i]
    for i in range(n):
        s = Fraction(rng.choice([-2, -1, 1, 2, 3]))
        for row in t:
            row[i] *= s
    return t


def congruent(s: SymMatrix, t) -> SymMatrix:
    return SymMatrix(linalg.mat_mul(linalg.transpose(t), linalg.mat_mul(s.rows(), t)))


def poly_from_roots(roots):
    """Monic expansion of prod (x - r), coefficients low to high."""
    coeffs = [Fraction(1)]
    for r in roots:
        coeffs = [Fraction(0)] + coeffs
        for i in range(len(coeffs) - 1):
            coeffs[i] -= r * coeffs[i + 1]
    return coeffs


def test_symmetry_validation():
    SymMatrix([[1, 2], [2, 3]])
    with pytest.raises(ValueError) as err:
        SymMatrix([[1, 2], [3, 4]])
    assert "(0, 1)" in str(err.value) and "(1, 0)" in str(err.value)
    with pytest.raises(ValueError):
        SymMatrix([[1, 2]])


def test_form_type_basics():
    t = FormType(2, 1, 4)
    assert t.rank == 3
    assert t.signature == 1
    assert str(t) == "(2, 1)"
    with pytest.raises(ValueError):
        FormType(3, 2, 4)
    with pytest.raises(ValueError):
        FormType(-1, 0, 2)


def test_diagonalize_hyperbolic_plane():
    s = SymMatrix([[0, 1], [1, 0]])
    t, d = congruence_diagonalize(s)
    assert t == [[1, Fraction(-1, 2)], [1, Fraction(1, 2)]]
    assert d == [[2, 0], [0, Fraction(-1, 2)]]
    assert congruent(s, t).rows() == d
    assert type_of(s) == FormType(1, 1, 2)


def test_diagonalize_congruence_identity():
    rng = random.Random(41)
    for _ in range(60):
        n = rng.randint(0, 6)
        s = random_symmetric(rng, n)
        t, d = congruence_diagonalize(s)
        assert congruent(s, t).rows() == d
        for i in range(n):
            for j in range(n):
                if i != j:
                    assert d[i][j] == 0
        assert linalg.det(t) != 0


def test_diagonalize_zero_and_empty():
    t, d = congruence_diagonalize(SymMatrix([[0, 0], [0, 0]]))
    assert d == [[0, 0], [0, 0]]
    t, d = congruence_diagonalize(SymMatrix([]))
    assert t == [] and d == []
    assert type_of(SymMatrix([])) == FormType(0, 0, 0)
    assert type_via_descartes(SymMatrix([])) == FormType(0, 0, 0)


def test_char_poly_fixtures():
    assert char_poly([[0, 2], [2, 0]]) == [-4, 0, 1]
    assert char_poly([[0, -1], [1, 0]]) == [1, 0, 1]  # works for non-symmetric too
    assert char_poly([[3]]) == [-3, 1]
    assert char_poly([]) == [1]
    # det and trace sit at the ends of the coefficient list
    rng = random.Random(43)
    for _ in range(20):
        n = rng.randint(1, 5)
        m = [[Fraction(rng.randint(-4, 4)) for _ in range(n)] for _ in range(n)]
        cs = char_poly(m)
        assert cs[n] == 1
        assert cs[n - 1] == -linalg.trace(m)
        assert cs[0] == (-1) ** n * linalg.det(m)


def test_descartes_counts_basic():
    assert descartes_counts([-4, 0, 1]) == (1, 1)  # x^2 - 4
    assert descartes_counts([1, 0, 1]) == (0, 0)  # x^2 + 1
    assert descartes_counts([0, 0, 1]) == (0, 0)  # x^2
    assert descartes_counts([2, -3, 1]) == (2, 0)  # (x-1)(x-2)
    with pytest.raises(ValueError):
        descartes_counts([0, 0, 0])


def test_descartes_exact_on_split_polynomials():
    rng = random.Random(47)
    for _ in range(40):
        roots = [
            Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(rng.randint(1, 7))
        ]
        coeffs = poly_from_roots(roots)
        pos = sum(1 for r in roots if r > 0)
        neg = sum(1 for r in roots if r < 0)
        assert descartes_counts(coeffs) == (pos, neg)


def test_type_via_descartes_fixture():
    s = SymMatrix([[1, 0, 0], [0, 0, 0], [0, 0, -1]])
    assert type_via_descartes(s) == FormType(1, 1, 3)
    assert type_of(s) == FormType(1, 1, 3)


def test_hurwitz_fixtures():
    assert hurwitz_type(SymMatrix([[1, 0], [0, -1]])) == FormType(1, 1, 2)
    assert hurwitz_type(SymMatrix([[0, 1], [1, 0]])) is None  # leading 1x1 minor vanishes
    assert hurwitz_type(SymMatrix([[2, 0], [0, 3]])) == FormType(2, 0, 2)
    assert hurwitz_type(SymMatrix([])) == FormType(0, 0, 0)


def test_three_routes_agree():
    rng = random.Random(53)
    for _ in range(80):
        n = rng.randint(1, 6)
        s = random_symmetric(rng, n)
        t = type_of(s)
        assert type_via_descartes(s) == t
        assert checked_type(s) == t
        h = hurwitz_type(s)
        if h is not None:
            assert h == t
            assert t.rank == n


def test_sylvester_invariance():
    rng = random.Random(59)
    for _ in range(40):
        n = rng.randint(1, 5)
        s = random_symmetric(rng, n)
        t = random_invertible(rng, n)
        assert type_of(congruent(s, t)) == type_of(s)


def test_definiteness_labels():
    assert definiteness(SymMatrix([[2, 0], [0, 3]])) == "positive-definite"
    assert definiteness(SymMatrix([[-1, 0], [0, -5]])) == "negative-definite"
    assert definiteness(SymMatrix([[1, 0], [0, 0]])) == "positive-semidefinite"
    assert definiteness(SymMatrix([[0, 0], [0, -1]])) == "negative-semidefinite"
    assert definiteness(SymMatrix([[1, 0], [0, -1]])) == "indefinite"
    assert definiteness(SymMatrix([[0, 0], [0, 0]])) == "zero"


def test_rank_matches_kernel_dimension():
    rng = random.Random(61)
    for _ in range(30):
        n = rng.randint(1, 5)
        s = random_symmetric(rng, n)
        t = type_of(s)
        # rank from diagonalization == n - (number of zero diagonal entries)
        _, d = congruence_diagonalize(s)
        zeros = sum(1 for i in range(n) if d[i][i] == 0)
        assert t.rank == n - zeros
        assert (t.rank - t.signature) % 2 == 0
