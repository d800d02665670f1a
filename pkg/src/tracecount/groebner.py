"""Groebner bases, normal forms and finite quotient algebras.

The basis computation is Buchberger's algorithm with the two classical pair
prunings (skip pairs with coprime leading monomials; skip a pair when a third
generator's leading monomial divides its lcm and both side pairs were already
treated), followed by inter-reduction, so the returned basis is the unique
reduced one for the given order: monic generators, no term of any generator
divisible by another generator's leading monomial.

Division is deterministic: generators are kept sorted ascending by leading
monomial and the first divisor in that order is always used.  Against a
Groebner basis the remainder ("normal form") is strategy-independent anyway;
the fixed strategy just makes every intermediate step reproducible.

When the quotient ring by the ideal is finite-dimensional, ``quotient_algebra``
packages the monomials outside the leading-term staircase as a vector-space
basis together with one multiplication matrix per variable (columns = images
of basis monomials); these matrices commute pairwise and generate the regular
representation of the quotient.
"""

from __future__ import annotations

from fractions import Fraction

from . import linalg
from .poly import (
    MonomialOrder,
    Polynomial,
    VarContext,
    _mono_div,
    _mono_divides,
    _mono_lcm,
    _mono_mul,
    degrevlex_order,
)


class NotZeroDimensionalError(ValueError):
    """The system has infinitely many complex solutions (or the check failed)."""


def _divide(terms: dict, gens, lead_exps, order: MonomialOrder) -> dict:
    """Remainder of a term dict under division by monic generators."""
    work = dict(terms)
    remainder: dict = {}
    key = order.key
    while work:
        exps = max(work, key=key)
        coeff = work.pop(exps)
        for g, le in zip(gens, lead_exps):
            if _mono_divides(le, exps):
                shift = _mono_div(exps, le)
                for e2, c2 in g.terms.items():
                    if e2 == le:
                        continue
                    e = _mono_mul(e2, shift)
                    s = work.get(e, Fraction(0)) - coeff * c2
                    if s:
                        work[e] = s
                    else:
                        work.pop(e, None)
                break
        else:
            remainder[exps] = coeff
    return remainder


def _monic(p: Polynomial, order: MonomialOrder) -> Polynomial:
    _, lc = p.leading_term(order)
    return p if lc == 1 else p * (1 / lc)


class GroebnerBasis:
    """A reduced Groebner basis: monic generators sorted by leading monomial."""

    __slots__ = ("context", "order", "generators", "lead_exps")

    def __init__(self, context: VarContext, order: MonomialOrder, generators):
        self.context = context
        self.order = order
        self.generators = tuple(generators)
        self.lead_exps = tuple(g.leading_term(order)[0] for g in self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def is_unit_ideal(self) -> bool:
        return len(self.generators) == 1 and self.generators[0].is_constant()

    def __repr__(self):
        return f"GroebnerBasis({len(self.generators)} generators, {self.order.kind})"


def _interreduce(polys, order: MonomialOrder):
    """Turn any basis of the ideal into the reduced one."""
    polys = [_monic(p, order) for p in polys if p]
    changed = True
    while changed:
        changed = False
        polys.sort(key=lambda p: order.key(p.leading_term(order)[0]))
        for i, p in enumerate(polys):
            others = polys[:i] + polys[i + 1 :]
            if not others:
                continue
            leads = [g.leading_term(order)[0] for g in others]
            r = _divide(p.terms, others, leads, order)
            rp = Polynomial(p.context, r)
            if rp != p:
                changed = True
                if rp:
                    polys[i] = _monic(rp, order)
                else:
                    del polys[i]
                break
    polys.sort(key=lambda p: order.key(p.leading_term(order)[0]))
    return polys


def buchberger(gens, order: MonomialOrder | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``."""
    gens = list(gens)
    if not gens:
        raise ValueError("no generators given")
    if not all(isinstance(g, Polynomial) for g in gens):
        raise TypeError("generators must be Polynomial instances")
    ctx = gens[0].context
    for g in gens:
        if g.context != ctx:
            raise ValueError("generators live in different variable contexts")
    if order is None:
        order = degrevlex_order(ctx)
    if order.nvars != ctx.nvars:
        raise ValueError("order arity does not match the variable context")
    basis = [_monic(g, order) for g in gens if g]
    if not basis:
        raise ValueError("all generators are zero")

    leads = [p.leading_term(order)[0] for p in basis]
    pairs = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}
    done = set()

    def lcm_key(pair):
        i, j = pair
        return (order.key(_mono_lcm(leads[i], leads[j])), i, j)

    while pairs:
        i, j = min(pairs, key=lcm_key)
        pairs.discard((i, j))
        done.add((i, j))
        li, lj = leads[i], leads[j]
        lcm = _mono_lcm(li, lj)
        # product criterion: coprime leading monomials reduce to zero
        if lcm == _mono_mul(li, lj):
            continue
        # chain criterion
        skip = False
        for k in range(len(basis)):
            if k in (i, j) or not _mono_divides(leads[k], lcm):
                continue
            a = (min(i, k), max(i, k))
            b = (min(j, k), max(j, k))
            if a in done and b in done:
                skip = True
                break
        if skip:
            continue
        si = Polynomial(ctx, {_mono_mul(e, _mono_div(lcm, li)): c for e, c in basis[i].terms.items()})
        sj = Polynomial(ctx, {_mono_mul(e, _mono_div(lcm, lj)): c for e, c in basis[j].terms.items()})
        s = si - sj
        r = _divide(s.terms, basis, leads, order)
        if r:
            p = _monic(Polynomial(ctx, r), order)
            basis.append(p)
            leads.append(p.leading_term(order)[0])
            new = len(basis) - 1
            pairs.update((k, new) for k in range(new))

    return GroebnerBasis(ctx, order, _interreduce(basis, order))


def normal_form(p: Polynomial, gb: GroebnerBasis) -> Polynomial:
    """The unique remainder of p modulo the ideal: p mod gb."""
    if p.context != gb.context:
        raise ValueError("polynomial context does not match the basis")
    return Polynomial(p.context, _divide(p.terms, gb.generators, gb.lead_exps, gb.order))


def reduces_to_zero(p: Polynomial, gb: GroebnerBasis) -> bool:
    """Ideal membership test."""
    return not normal_form(p, gb)


def violating_variables(gb: GroebnerBasis) -> list:
    """Variables with no pure power among the leading monomials."""
    if gb.is_unit_ideal():
        return []
    missing = []
    for i in range(gb.context.nvars):
        for le in gb.lead_exps:
            if le[i] > 0 and all(e == 0 for k, e in enumerate(le) if k != i):
                break
        else:
            missing.append(gb.context.names[i])
    return missing


def is_zero_dimensional(gb: GroebnerBasis) -> bool:
    """Finitely many complex solutions?  (Pure-power staircase test.)"""
    return not violating_variables(gb)


class QuotientAlgebra:
    """The finite algebra Q[X]/ideal with its monomial basis.

    ``basis`` holds the exponent tuples of the monomials under the staircase,
    sorted ascending in the basis order (so basis[0] is the monomial 1 unless
    the ideal is the unit ideal and the algebra is the zero ring).
    ``var_matrices[i]`` is multiplication by the i-th variable; column j holds
    the coordinates of X_i * basis[j].
    """

    __slots__ = ("gb", "context", "order", "basis", "index", "var_matrices")

    def __init__(self, gb: GroebnerBasis, basis, var_matrices):
        self.gb = gb
        self.context = gb.context
        self.order = gb.order
        self.basis = tuple(basis)
        self.index = {e: k for k, e in enumerate(self.basis)}
        self.var_matrices = tuple(var_matrices)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def basis_poly(self, k: int) -> Polynomial:
        return Polynomial(self.context, {self.basis[k]: Fraction(1)})

    def nf(self, p: Polynomial) -> Polynomial:
        return normal_form(p, self.gb)

    def coords(self, p: Polynomial) -> list:
        """Coordinates of (p mod ideal) in the monomial basis."""
        r = self.nf(p)
        v = [Fraction(0)] * self.dim
        for exps, coeff in r.terms.items():
            v[self.index[exps]] = coeff
        return v

    def __repr__(self):
        return f"QuotientAlgebra(dim={self.dim}, vars={', '.join(self.context.names)})"


def quotient_algebra(gb: GroebnerBasis) -> QuotientAlgebra:
    """Monomial basis and variable multiplication matrices of Q[X]/ideal.

    Raises NotZeroDimensionalError when the staircase is infinite, naming the
    variables without a pure power among the leading terms.
    """
    missing = violating_variables(gb)
    if missing:
        raise NotZeroDimensionalError(
            "ideal is not zero-dimensional: no pure power of "
            + ", ".join(missing)
            + " among the leading monomials"
        )
    n = gb.context.nvars
    if gb.is_unit_ideal():
        return QuotientAlgebra(gb, (), tuple([] for _ in range(n)))

    origin = (0,) * n
    seen = {origin}
    queue = [origin]
    standard = []
    while queue:
        mono = queue.pop()
        if any(_mono_divides(le, mono) for le in gb.lead_exps):
            continue
        standard.append(mono)
        for i in range(n):
            child = mono[:i] + (mono[i] + 1,) + mono[i + 1 :]
            if child not in seen:
                seen.add(child)
                queue.append(child)
    standard.sort(key=gb.order.key)

    alg = QuotientAlgebra(gb, standard, tuple([] for _ in range(n)))
    matrices = []
    for i in range(n):
        cols = []
        for mono in standard:
            shifted = mono[:i] + (mono[i] + 1,) + mono[i + 1 :]
            cols.append(alg.coords(Polynomial(gb.context, {shifted: Fraction(1)})))
        matrices.append([list(row) for row in zip(*cols)])
    return QuotientAlgebra(gb, standard, matrices)


_EVAL_DEGREE_CUTOFF = 6


def _mult_matrix_nf(alg: QuotientAlgebra, h: Polynomial) -> list:
    """Column k = coordinates of h * basis[k]."""
    cols = [alg.coords(h * alg.basis_poly(k)) for k in range(alg.dim)]
    return [list(row) for row in zip(*cols)] if cols else []


def _mult_matrix_eval(alg: QuotientAlgebra, h: Polynomial) -> list:
    """Evaluate h at the variable matrices (powers cached per variable)."""
    m = alg.dim
    out = linalg.zeros(m)
    powers: dict = {}

    def var_power(i, e):
        got = powers.get((i, e))
        if got is None:
            if e == 0:
                got = linalg.identity(m)
            else:
                got = linalg.mat_mul(var_power(i, e - 1), alg.var_matrices[i])
            powers[(i, e)] = got
        return got

    for exps, coeff in sorted(h.terms.items()):
        acc = None
        for i, e in enumerate(exps):
            if e:
                p = var_power(i, e)
                acc = p if acc is None else linalg.mat_mul(acc, p)
        if acc is None:
            acc = linalg.identity(m)
        out = linalg.mat_add(out, linalg.mat_scale(acc, coeff))
    return out


def mult_matrix(alg: QuotientAlgebra, h: Polynomial) -> list:
    """Matrix of multiplication by h on the quotient algebra.

    Low-degree h is evaluated directly at the variable matrices; otherwise
    each column is a normal form.  (The two strategies agree; tests pin that.)
    """
    if h.context != alg.context:
        raise ValueError("polynomial context does not match the algebra")
    if alg.dim == 0 or not h:
        return linalg.zeros(alg.dim)
    if h.total_degree() <= _EVAL_DEGREE_CUTOFF:
        return _mult_matrix_eval(alg, h)
    return _mult_matrix_nf(alg, h)
