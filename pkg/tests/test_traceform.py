import random
from fractions import Fraction

import pytest

from tracecount import linalg
from tracecount.groebner import buchberger, mult_matrix, quotient_algebra
from tracecount.poly import Polynomial, VarContext, lex_order, variables
from tracecount.quadform import SymMatrix, type_of
from tracecount.traceform import (
    TraceVector,
    generalized_trace_form,
    power_sums,
    trace_form,
    trace_form_from_power_sums,
    trace_of,
)

CX = VarContext(["x"])
(U,) = variables(CX)
XY = VarContext(["x", "y"])
X, Y = variables(XY)


def algebra_of(*gens):
    return quotient_algebra(buchberger(list(gens), lex_order(gens[0].context)))


def poly_from_roots(roots):
    p = Polynomial.constant(CX, 1)
    for r in roots:
        p = p * (U - r)
    return p


def test_trace_of_fixtures():
    alg = algebra_of(U**2 + 1)
    assert trace_of(alg, Polynomial.constant(CX, 1)) == 2
    assert trace_of(alg, U) == 0
    assert trace_of(alg, U**2) == -2
    tv = TraceVector(alg)
    assert tv.values == [2, 0]
    assert tv.trace_of_poly(U**2) == -2


def test_trace_form_gaussian_pair():
    alg = algebra_of(U**2 + 1)
    g = trace_form(alg)
    assert g == SymMatrix([[2, 0], [0, -2]])
    assert type_of(g).pos == 1 and type_of(g).neg == 1


def test_trace_form_circle_line():
    alg = algebra_of(X**2 + Y**2 - 1, Y - X)
    g = trace_form(alg)
    assert g == SymMatrix([[2, 0], [0, 1]])
    assert type_of(g) == type_of(SymMatrix([[1, 0], [0, 1]]))  # positive definite


def test_generalized_form_fixtures():
    alg = algebra_of(U**2 + 1)
    assert generalized_trace_form(alg, U) == SymMatrix([[0, -2], [-2, 0]])
    one = Polynomial.constant(CX, 1)
    assert generalized_trace_form(alg, one) == trace_form(alg)

    alg = algebra_of(U**2 - 1)
    assert generalized_trace_form(alg, U) == SymMatrix([[0, 2], [2, 0]])


def test_trace_vector_reuse_and_mismatch():
    alg = algebra_of(U**2 - 3)
    tv = TraceVector(alg)
    assert trace_form(alg, tv) == trace_form(alg)
    assert generalized_trace_form(alg, U, tv) == generalized_trace_form(alg, U)
    other = algebra_of(U**2 + 1)
    with pytest.raises(ValueError):
        trace_form(other, tv)
    with pytest.raises(ValueError):
        generalized_trace_form(alg, X)  # wrong context


def test_gram_entries_match_definition():
    rng = random.Random(67)
    for gens in ([U**3 - U - 1], [X**2 + Y**2 - 4, X * Y - 1]):
        alg = algebra_of(*gens)
        ctx = alg.context
        hs = [Polynomial.constant(ctx, 1)]
        for _ in range(3):
            hs.append(
                Polynomial(
                    ctx,
                    {
                        tuple(rng.randint(0, 2) for _ in range(ctx.nvars)): Fraction(
                            rng.randint(-3, 3)
                        )
                        for _ in range(2)
                    },
                )
            )
        for h in hs:
            gram = generalized_trace_form(alg, h)
            mh = mult_matrix(alg, h)
            for k in range(alg.dim):
                for l in range(alg.dim):
                    mk = mult_matrix(alg, alg.basis_poly(k))
                    ml = mult_matrix(alg, alg.basis_poly(l))
                    expected = linalg.trace(linalg.mat_mul(mh, linalg.mat_mul(mk, ml)))
                    assert gram[k, l] == expected


def test_form_is_linear_in_h():
    alg = algebra_of(U**3 - 2 * U + 1)
    tv = TraceVector(alg)
    h1, h2 = U**2 - 1, 3 * U + 2
    a = Fraction(-5, 3)
    lhs = generalized_trace_form(alg, a * h1 + h2, tv)
    rhs = [
        [a * x + y for x, y in zip(r1, r2)]
        for r1, r2 in zip(
            generalized_trace_form(alg, h1, tv).rows(),
            generalized_trace_form(alg, h2, tv).rows(),
        )
    ]
    assert lhs.rows() == rhs


def test_vandermonde_factorization_split_case():
    rng = random.Random(71)
    for _ in range(20):
        roots = []
        while len(roots) < rng.randint(1, 6):
            r = Fraction(rng.randint(-8, 8), rng.randint(1, 3))
            if r not in roots:
                roots.append(r)
        m = len(roots)
        alg = algebra_of(poly_from_roots(roots))
        v = [[r**k for r in roots] for k in range(m)]
        assert trace_form(alg).rows() == linalg.mat_mul(v, linalg.transpose(v))
        h = Polynomial(CX, {(k,): Fraction(rng.randint(-3, 3)) for k in range(3)})
        hvals = linalg.zeros(m)
        for i, r in enumerate(roots):
            hvals[i][i] = h.eval([r])
        assert generalized_trace_form(alg, h).rows() == linalg.mat_mul(
            v, linalg.mat_mul(hvals, linalg.transpose(v))
        )


def test_signature_counts_roots_by_h_sign():
    rng = random.Random(73)
    for _ in range(25):
        roots = []
        while len(roots) < rng.randint(1, 6):
            r = Fraction(rng.randint(-8, 8), rng.randint(1, 3))
            if r not in roots:
                roots.append(r)
        alg = algebra_of(poly_from_roots(roots))
        h = Polynomial(CX, {(k,): Fraction(rng.randint(-4, 4)) for k in range(3)})
        values = [h.eval([r]) for r in roots]
        t = type_of(generalized_trace_form(alg, h))
        assert t.signature == sum(1 for v in values if v > 0) - sum(1 for v in values if v < 0)
        assert t.rank == sum(1 for v in values if v)
        sq = type_of(generalized_trace_form(alg, h * h))
        assert sq.neg == 0  # all roots real, weights h^2 >= 0
        assert sq.pos == sum(1 for v in values if v)


def test_rank_counts_distinct_roots():
    cases = [
        ((U - 1) ** 2 * (U + 2), 2),
        ((U - 1) ** 3, 1),
        ((U**2 + 1) ** 2, 2),
        ((U - 1) * (U + 1) * (U - 3), 3),
    ]
    for g, distinct in cases:
        t = type_of(trace_form(algebra_of(g)))
        assert t.rank == distinct
    # the squared non-real pair keeps its (1, 1) inertia
    t = type_of(trace_form(algebra_of((U**2 + 1) ** 2)))
    assert (t.pos, t.neg) == (1, 1)


def test_nilpotents_lie_in_the_kernel():
    alg = algebra_of((U - 1) ** 2)
    g = trace_form(alg)
    assert g == SymMatrix([[2, 2], [2, 2]])
    # x - 1 is nilpotent in the quotient; its coordinate vector kills the form
    assert linalg.mat_vec(g.rows(), [Fraction(-1), Fraction(1)]) == [0, 0]


def test_power_sums_fixtures():
    assert power_sums([1, 0, 1], 2) == [2, 0, -2]
    assert power_sums([2, -3, 1], 4) == [2, 3, 5, 9, 17]  # roots 1 and 2
    assert power_sums([1], 3) == [0, 0, 0, 0]  # constant: no roots
    with pytest.raises(ValueError):
        power_sums([2, 2], 1)  # not monic
    with pytest.raises(ValueError):
        power_sums([], 1)


def test_newton_route_matches_algebra_route():
    rng = random.Random(79)
    polys = [U**2 + 1, U**3 - 2, (U - 1) ** 2 * (U + 3)]
    for _ in range(15):
        cs = [Fraction(rng.randint(-5, 5)) for _ in range(rng.randint(1, 6))] + [Fraction(1)]
        polys.append(Polynomial(CX, {(i,): c for i, c in enumerate(cs) if c}))
    for g in polys:
        assert trace_form_from_power_sums(g) == trace_form(algebra_of(g))


def test_newton_route_edge_cases():
    assert trace_form_from_power_sums(Polynomial.constant(CX, 5)) == SymMatrix([])
    with pytest.raises(ValueError):
        trace_form_from_power_sums(Polynomial.zero(CX))
    # non-monic input is normalized, not rejected
    assert trace_form_from_power_sums(3 * U**2 + 3) == trace_form_from_power_sums(U**2 + 1)
