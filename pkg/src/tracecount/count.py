"""Exact solution counting for zero-dimensional systems via trace forms.

For a system with finitely many complex solutions, the trace form of the
quotient algebra knows the counts: its signature is the number of distinct
real solutions and its rank the number of distinct complex ones.  Inserting a
weight polynomial H refines the real count by the sign of H: with

    s1 = signature of the H-weighted trace form,
    s2 = signature of the H^2-weighted trace form,
    s3 = signature of the trace form of the quotient by (system, H),

the numbers of real solutions with H > 0, H < 0 and H = 0 are (s2 + s1)/2,
(s2 - s1)/2 and s3.  Those two divisions must be exact; a parity failure can
only come from a bug, so it raises ``InternalConsistencyError`` rather than
returning garbage.  Every signature is computed by two independent algorithms
(see ``quadform.checked_type``).

None of the counting needs the system in any special position, and none of it
needs the ideal to be radical -- multiple points are simply counted once.
The *shape basis* (a lex basis X_i - g_i(X_n), g_n(X_n) that a radical ideal
has when the solutions' last coordinates are pairwise distinct) is extracted
separately because the Sturm oracle needs it; when the coordinates collide,
``count_with_general_position`` retries after shearing the last coordinate
with t = 1, 2, ... and records which t succeeded.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import univariate
from .groebner import (
    GroebnerBasis,
    NotZeroDimensionalError,
    QuotientAlgebra,
    buchberger,
    quotient_algebra,
    violating_variables,
)
from .poly import (
    Polynomial,
    VarContext,
    degrevlex_order,
    general_position_transform,
    lex_order,
)
from .quadform import FormType, InternalConsistencyError, checked_type
from .traceform import TraceVector, generalized_trace_form, trace_form


class ShapeError(ValueError):
    """The lex basis is not in shape form."""


class ShapeFormError(ShapeError):
    """Not in shape form for positional reasons; a shear may fix it."""


class NonRadicalError(ShapeError):
    """The last-variable polynomial has repeated roots: the ideal is not radical."""


@dataclass(frozen=True)
class HermiteCount:
    """Root counts of a univariate polynomial from its trace form."""

    real_roots: int           # distinct real roots
    conjugate_pairs: int      # distinct conjugate pairs of non-real roots
    form_type: FormType
    dim: int                  # degree of the polynomial = dim of the quotient

    @property
    def distinct_complex(self) -> int:
        return self.real_roots + 2 * self.conjugate_pairs


@dataclass(frozen=True)
class SystemCount:
    total_real: int
    dim_algebra: int
    distinct_complex: int


@dataclass(frozen=True)
class HCounts:
    """Real solutions split by the sign of a weight polynomial H."""

    h: Polynomial
    pos: int
    neg: int
    zero: int
    rank_nonvanishing: int    # distinct complex solutions with H != 0
    signatures: tuple         # (s1, s2, s3) as in the module docstring

    @property
    def total(self) -> int:
        return self.pos + self.neg + self.zero


@dataclass(frozen=True)
class ShapeBasis:
    """Lex basis of a radical ideal in general position.

    The solutions are exactly (g_1(a), .., g_{n-1}(a), a) for a ranging over
    the roots of the squarefree ``minimal_polynomial``; ``coordinate_exprs``
    holds g_1..g_{n-1} as polynomials in the last variable.
    """

    context: VarContext
    coordinate_exprs: tuple
    minimal_polynomial: Polynomial

    @property
    def degree(self) -> int:
        return self.minimal_polynomial.degree_in(self.context.nvars - 1)

    def generators(self) -> list:
        ctx = self.context
        gens = [
            Polynomial.variable(ctx, i) - expr
            for i, expr in enumerate(self.coordinate_exprs)
        ]
        gens.append(self.minimal_polynomial)
        return gens


@dataclass(frozen=True)
class CountReport:
    total_real: int
    dim_algebra: int
    distinct_complex: int
    h_counts: tuple
    shape: ShapeBasis | None
    general_position_t: Fraction | None
    shape_failure: str | None


def _algebra_of(system, order=None) -> QuotientAlgebra:
    gb = buchberger(system, order)
    return quotient_algebra(gb)


def _counts_from_form(gram) -> FormType:
    return checked_type(gram)


def hermite_count(g: Polynomial) -> HermiteCount:
    """Distinct real roots and conjugate pairs of a univariate polynomial."""
    if not g:
        raise ValueError("the zero polynomial does not define a finite quotient")
    if g.is_constant():
        return HermiteCount(0, 0, FormType(0, 0, 0), 0)
    cs, var = univariate.from_poly(g)  # raises if g is genuinely multivariate
    ctx = VarContext([g.context.names[var]])
    g1 = univariate.to_poly(ctx, 0, cs)
    alg = _algebra_of([g1], lex_order(ctx))
    ty = _counts_from_form(trace_form(alg))
    real = ty.signature
    if real < 0 or (ty.rank - real) % 2:
        raise InternalConsistencyError(
            f"trace form of a univariate quotient has impossible type {ty}"
        )
    return HermiteCount(real, (ty.rank - real) // 2, ty, alg.dim)


def count_real_points(system, order=None) -> SystemCount:
    """Distinct real and complex solution counts of a zero-dimensional system."""
    alg = _algebra_of(system, order)
    ty = _counts_from_form(trace_form(alg))
    if ty.signature < 0:
        raise InternalConsistencyError("trace form signature is negative")
    return SystemCount(ty.signature, alg.dim, ty.rank)


def _h_counts(alg: QuotientAlgebra, tv: TraceVector, h: Polynomial) -> HCounts:
    if not h:
        raise ValueError("the weight polynomial H must be nonzero")
    ty_h = _counts_from_form(generalized_trace_form(alg, h, tv))
    ty_h2 = _counts_from_form(generalized_trace_form(alg, h * h, tv))
    s1, s2 = ty_h.signature, ty_h2.signature
    cut = buchberger(list(alg.gb.generators) + [h], alg.order)
    ty_cut = _counts_from_form(trace_form(quotient_algebra(cut)))
    s3 = ty_cut.signature
    if (s2 + s1) % 2 or (s2 - s1) % 2:
        raise InternalConsistencyError(
            f"weighted trace form signatures {s1}, {s2} have different parity"
        )
    pos, neg = (s2 + s1) // 2, (s2 - s1) // 2
    if pos < 0 or neg < 0 or s3 < 0:
        raise InternalConsistencyError(
            f"negative sign count from signatures ({s1}, {s2}, {s3})"
        )
    return HCounts(h, pos, neg, s3, ty_h.rank, (s1, s2, s3))


def prs_sign_counts(system, h: Polynomial) -> HCounts:
    """Real solutions with H > 0 / H < 0 / H = 0, by weighted trace forms."""
    alg = _algebra_of(system)
    return _h_counts(alg, TraceVector(alg), h)


def shape_basis(system) -> ShapeBasis:
    """Extract the shape basis from the reduced lex basis of the ideal.

    Accepts a generator list or an already-computed lex GroebnerBasis with
    declaration-order priority.  Raises ShapeFormError when the basis does not
    have the shape structure (try a shear), NonRadicalError when the
    last-variable polynomial has repeated roots.
    """
    if isinstance(system, GroebnerBasis):
        gb = system
        order = lex_order(gb.context)
        if gb.order != order:
            gb = buchberger(gb.generators, order)
    else:
        system = list(system)
        if not system:
            raise ValueError("empty system")
        gb = buchberger(system, lex_order(system[0].context))
    ctx = gb.context
    n = ctx.nvars
    if gb.is_unit_ideal():
        raise ShapeFormError("the system has no solutions (unit ideal)")
    missing = violating_variables(gb)
    if missing:
        raise NotZeroDimensionalError(
            "ideal is not zero-dimensional: no pure power of "
            + ", ".join(missing)
            + " among the leading monomials"
        )

    last = n - 1
    minimal = None
    exprs: dict = {}
    for g in gb.generators:
        le = g.leading_term(gb.order)[0]
        support = {i for i, e in enumerate(le) if e}
        if support == {last}:
            minimal = g
            continue
        i = next((i for i in range(n - 1) if le[i]), None)
        if i is not None and le[i] == 1 and sum(le) == 1:
            tail = Polynomial.variable(ctx, i) - g
            if tail.used_variables() - {last}:
                raise ShapeFormError(
                    f"generator for {ctx.names[i]} involves more than the last variable"
                )
            exprs[i] = tail
        else:
            raise ShapeFormError(
                "lex basis is not in shape form (a shear of the last coordinate "
                "usually fixes this)"
            )
    if minimal is None or len(exprs) != n - 1:
        raise ShapeFormError(
            "lex basis is not in shape form (a shear of the last coordinate "
            "usually fixes this)"
        )
    mcs, _ = univariate.from_poly(minimal, last)
    m = univariate.degree(mcs)
    if mcs[-1] != 1:
        raise InternalConsistencyError("reduced basis generator is not monic")
    for i, expr in exprs.items():
        if expr and expr.degree_in(last) >= m:
            raise InternalConsistencyError(
                f"coordinate expression for {ctx.names[i]} not reduced modulo "
                "the minimal polynomial"
            )
    if not univariate.is_squarefree(mcs):
        raise NonRadicalError(
            f"last-variable polynomial {ctx.names[last]} has repeated roots: "
            "the ideal is not radical"
        )
    return ShapeBasis(ctx, tuple(exprs[i] for i in range(n - 1)), minimal)


def shape_with_shears(system, *, t=None, max_trials: int = 8):
    """Shape basis of the system, shearing the last coordinate if needed.

    Tries the ideal as given first; on a positional failure retries after
    ``general_position_transform`` with t = 1, 2, .., max_trials (or just the
    given t).  Returns (ShapeBasis, t or None).  Raises NonRadicalError or,
    when every shear fails, ShapeFormError.
    """
    system = list(system)
    try:
        return shape_basis(system), None
    except ShapeFormError as e:
        first_error = e
    schedule = (
        [Fraction(t)] if t is not None else [Fraction(k) for k in range(1, max_trials + 1)]
    )
    last_error = first_error
    for trial in schedule:
        try:
            return shape_basis(general_position_transform(system, trial)), trial
        except ShapeFormError as e:  # includes nothing non-radical: that propagates
            last_error = e
    raise ShapeFormError(
        f"no shear in the schedule reached shape position (last failure: {last_error})"
    )


def count_with_general_position(
    system, hs=(), *, order=None, t=None, max_trials: int = 8
) -> CountReport:
    """Full counting report, with shape extraction under shears if needed.

    The counts themselves never need a shear; only the shape basis (wanted by
    the Sturm oracle and the ``shape`` command) does, when distinct solutions
    share a last coordinate.  ``t`` pins a single shear parameter; otherwise
    the schedule t = 1, 2, .., max_trials is tried after the unsheared ideal.
    """
    system = list(system)
    if order is None and system:
        order = degrevlex_order(system[0].context)
    gb = buchberger(system, order)
    alg = quotient_algebra(gb)
    tv = TraceVector(alg)
    ty = _counts_from_form(trace_form(alg, tv))
    if ty.signature < 0:
        raise InternalConsistencyError("trace form signature is negative")
    h_counts = tuple(_h_counts(alg, tv, h) for h in hs)

    shape = None
    t_used = None
    failure = None
    if alg.dim == 0:
        failure = "the system has no solutions (unit ideal)"
    else:
        try:
            shape, t_used = shape_with_shears(
                list(gb.generators), t=t, max_trials=max_trials
            )
        except ShapeError as e:
            failure = str(e)

    return CountReport(
        total_real=ty.signature,
        dim_algebra=alg.dim,
        distinct_complex=ty.rank,
        h_counts=h_counts,
        shape=shape,
        general_position_t=t_used,
        shape_failure=failure,
    )
