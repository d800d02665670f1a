import random
from fractions import Fraction

import pytest

from tracecount.groebner import (
    NotZeroDimensionalError,
    _mult_matrix_eval,
    _mult_matrix_nf,
    buchberger,
    is_zero_dimensional,
    mult_matrix,
    normal_form,
    quotient_algebra,
    reduces_to_zero,
    violating_variables,
)
from tracecount import linalg
from tracecount.poly import (
    Polynomial,
    VarContext,
    degrevlex_order,
    lex_order,
    variables,
)
from tracecount.poly import _mono_div, _mono_lcm, _mono_mul

XY = VarContext(["x", "y"])
X, Y = variables(XY)
CX = VarContext(["x"])
(U,) = variables(CX)


def s_polynomial(f, g, order):
    lf, cf = f.leading_term(order)
    lg, cg = g.leading_term(order)
    lcm = _mono_lcm(lf, lg)
    sf = Polynomial(f.context, {_mono_mul(e, _mono_div(lcm, lf)): c for e, c in f.terms.items()})
    sg = Polynomial(g.context, {_mono_mul(e, _mono_div(lcm, lg)): c for e, c in g.terms.items()})
    return sf * (1 / cf) - sg * (1 / cg)


def random_zero_dim_system(rng, ctx, max_deg=3):
    """Triangular-by-construction generators, disguised by row operations."""
    vs = variables(ctx)
    n = ctx.nvars
    last = vs[-1]
    gens = []
    m = rng.randint(1, max_deg)
    g_last = last**m + sum(
        (Fraction(rng.randint(-3, 3)) * last**k for k in range(m)),
        Polynomial.zero(ctx),
    )
    gens.append(g_last)
    for i in range(n - 1):
        expr = sum(
            (Fraction(rng.randint(-2, 2)) * last**k for k in range(m)),
            Polynomial.zero(ctx),
        )
        gens.append(vs[i] - expr)
    # ideal-preserving disguise: add random multiples of other generators
    for _ in range(3):
        i, j = rng.randrange(len(gens)), rng.randrange(len(gens))
        if i != j:
            gens[i] = gens[i] + Fraction(rng.randint(-2, 2)) * gens[j]
    rng.shuffle(gens)
    return gens


def test_single_univariate():
    gb = buchberger([3 * U**2 + 3], lex_order(CX))
    assert list(gb) == [U**2 + 1]  # monic
    assert is_zero_dimensional(gb)


def test_circle_and_line_lex():
    gb = buchberger([X**2 + Y**2 - 1, Y - X], lex_order(XY))
    assert list(gb) == [Y**2 - Fraction(1, 2), X - Y]
    assert normal_form(X**2, gb) == Fraction(1, 2)
    assert reduces_to_zero((X**2 + Y**2 - 1) * X - (Y - X) * Y, gb)


def test_already_shape_form():
    gb = buchberger([X - Y**2, Y**3 - 2], lex_order(XY))
    assert list(gb) == [Y**3 - 2, X - Y**2]


def test_normal_form_fixtures():
    gb = buchberger([U**2 + 1], lex_order(CX))
    assert normal_form(U**2, gb) == Polynomial.constant(CX, -1)
    assert normal_form(U**3, gb) == -U
    assert not normal_form(U**2 + 1, gb)


def test_normal_form_idempotent_and_linear():
    rng = random.Random(3)
    for _ in range(15):
        ctx = VarContext(["x", "y"])
        gens = random_zero_dim_system(rng, ctx)
        gb = buchberger(gens, degrevlex_order(ctx))
        for _ in range(5):
            p = Polynomial(
                ctx,
                {
                    (rng.randint(0, 4), rng.randint(0, 4)): Fraction(rng.randint(-5, 5))
                    for _ in range(4)
                },
            )
            q = Polynomial(
                ctx,
                {
                    (rng.randint(0, 3), rng.randint(0, 3)): Fraction(rng.randint(-5, 5))
                    for _ in range(3)
                },
            )
            r = normal_form(p, gb)
            assert normal_form(r, gb) == r
            assert normal_form(p + q, gb) == normal_form(normal_form(p, gb) + normal_form(q, gb), gb)


def test_buchberger_criterion_on_output():
    rng = random.Random(5)
    systems = [
        [X**2 + Y**2 - 1, Y - X],
        [X**2 - Y, Y**2 - X],
        [X**3 - 2 * X * Y, X**2 * Y - 2 * Y**2 + X],
    ]
    for _ in range(10):
        systems.append(random_zero_dim_system(rng, XY))
    for system in systems:
        for order in (lex_order(XY), degrevlex_order(XY)):
            gb = buchberger(system, order)
            gens = list(gb)
            for i in range(len(gens)):
                for j in range(i + 1, len(gens)):
                    assert reduces_to_zero(s_polynomial(gens[i], gens[j], order), gb)
            # reduced: no term of a generator divisible by another lead
            for i, g in enumerate(gens):
                for j, lead in enumerate(gb.lead_exps):
                    if i == j:
                        continue
                    for exps in g.terms:
                        assert not all(a <= b for a, b in zip(lead, exps))


def test_ideal_membership_invariant_under_order():
    rng = random.Random(9)
    for _ in range(10):
        gens = random_zero_dim_system(rng, XY)
        gb1 = buchberger(gens, lex_order(XY))
        gb2 = buchberger(gens, degrevlex_order(XY))
        for g in gb1:
            assert reduces_to_zero(g, gb2)
        for g in gb2:
            assert reduces_to_zero(g, gb1)


def test_unit_ideal():
    gb = buchberger([U**2, U - 1], lex_order(CX))
    assert gb.is_unit_ideal()
    assert list(gb) == [Polynomial.constant(CX, 1)]
    alg = quotient_algebra(gb)
    assert alg.dim == 0


def test_zero_dim_detection():
    gb = buchberger([X * Y - 1], degrevlex_order(XY))
    assert not is_zero_dimensional(gb)
    assert violating_variables(gb) == ["x", "y"]
    with pytest.raises(NotZeroDimensionalError) as err:
        quotient_algebra(gb)
    assert "x" in str(err.value)

    gb = buchberger([X**2 - 1], degrevlex_order(XY))
    assert violating_variables(gb) == ["y"]


def test_quotient_basis_fixtures():
    alg = quotient_algebra(buchberger([U**2 + 1], lex_order(CX)))
    assert alg.basis == ((0,), (1,))
    assert alg.var_matrices[0] == [[0, -1], [1, 0]]

    alg = quotient_algebra(buchberger([U - 5], lex_order(CX)))
    assert alg.basis == ((0,),)
    assert alg.var_matrices[0] == [[5]]

    alg = quotient_algebra(buchberger([X - Y, 2 * Y**2 - 1], lex_order(XY)))
    assert alg.basis == ((0, 0), (0, 1))
    assert alg.dim == 2


def test_dimension_independent_of_order():
    rng = random.Random(17)
    for _ in range(12):
        gens = random_zero_dim_system(rng, XY)
        d1 = quotient_algebra(buchberger(gens, lex_order(XY))).dim
        d2 = quotient_algebra(buchberger(gens, degrevlex_order(XY))).dim
        assert d1 == d2


def test_mult_matrix_fixtures():
    alg = quotient_algebra(buchberger([U**2 + 1], lex_order(CX)))
    assert mult_matrix(alg, Polynomial.constant(CX, 1)) == linalg.identity(2)
    assert mult_matrix(alg, U) == [[0, -1], [1, 0]]
    assert mult_matrix(alg, U**2) == [[-1, 0], [0, -1]]
    assert mult_matrix(alg, Polynomial.zero(CX)) == linalg.zeros(2)
    other = VarContext(["z"])
    with pytest.raises(ValueError):
        mult_matrix(alg, Polynomial.variable(other, 0))


def test_mult_matrix_strategies_agree():
    rng = random.Random(23)
    for _ in range(10):
        gens = random_zero_dim_system(rng, XY)
        alg = quotient_algebra(buchberger(gens, degrevlex_order(XY)))
        for _ in range(4):
            h = Polynomial(
                XY,
                {
                    (rng.randint(0, 5), rng.randint(0, 5)): Fraction(rng.randint(-4, 4))
                    for _ in range(3)
                },
            )
            assert _mult_matrix_eval(alg, h) == _mult_matrix_nf(alg, h)


def test_mult_matrices_commute_and_multiply():
    rng = random.Random(29)
    for _ in range(8):
        gens = random_zero_dim_system(rng, XY)
        alg = quotient_algebra(buchberger(gens, degrevlex_order(XY)))
        mx, my = alg.var_matrices
        assert linalg.mat_mul(mx, my) == linalg.mat_mul(my, mx)
        h1 = X + 2 * Y
        h2 = X * Y - 1
        assert mult_matrix(alg, h1 * h2) == linalg.mat_mul(
            mult_matrix(alg, h1), mult_matrix(alg, h2)
        )


def test_rejects_bad_input():
    with pytest.raises(ValueError):
        buchberger([], lex_order(XY))
    with pytest.raises(ValueError):
        buchberger([Polynomial.zero(XY)], lex_order(XY))
    with pytest.raises(TypeError):
        buchberger([X, 1], lex_order(XY))
    with pytest.raises(ValueError):
        buchberger([X, U], None)  # mixed contexts
