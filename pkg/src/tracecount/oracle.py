"""Independent root counting by Sturm sequences.

This module re-derives, by a completely different method, the numbers the
trace-form machinery produces, so the two can be checked against each other.

The canonical Sturm chain of g starts at s0 = g / gcd(g, g') (same roots, all
simple), continues with s1 = s0', and then s_{k+1} = -rem(s_{k-1}, s_k) down
to a nonzero constant.  The number of distinct real roots of g in a
half-open interval (lo, hi] is the drop in sign variations of the chain
between the endpoints.  Everything is exact rational arithmetic; bisection on
the variation counts isolates roots, and the Cauchy bound 1 + max|a_i|/|a_n|
brackets them all.

For systems, ``oracle_count_system`` reduces to one variable through the
shape basis: the solutions are (g_1(a), .., a) for roots a of the minimal
polynomial, so the weight H becomes the univariate h*(T) = H(g_1(T), .., T)
mod the minimal polynomial, whose sign at each isolated root is decided by
interval refinement (vanishing is detected exactly via a gcd first).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import univariate as uv
from .count import NonRadicalError, ShapeFormError, shape_with_shears
from .groebner import buchberger
from .poly import Polynomial, general_position_transform, lex_order
from .rational import sign


class OracleInapplicableError(RuntimeError):
    """The Sturm reduction does not apply (non-radical ideal, no shape position)."""


def _chain_dense(cs) -> list:
    s0 = uv.exact_div(cs, uv.gcd(cs, uv.derivative(cs))) if uv.degree(cs) >= 1 else list(cs)
    chain = [s0]
    if uv.degree(s0) >= 1:
        chain.append(uv.derivative(s0))
        while uv.degree(chain[-1]) > 0:
            r = uv.neg(uv.rem(chain[-2], chain[-1]))
            if not r:
                break  # cannot happen for squarefree s0; guard anyway
            chain.append(r)
    return chain


def _variations_at(chain, x) -> int:
    signs = [s for s in (sign(uv.eval_at(cs, x)) for cs in chain) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _count_oc(chain, lo, hi) -> int:
    """Distinct roots of s0 in (lo, hi] (endpoints may be roots)."""
    return _variations_at(chain, lo) - _variations_at(chain, hi)


def sturm_sequence(g: Polynomial) -> list:
    """The canonical Sturm chain of g, as polynomials in g's context."""
    if not g:
        raise ValueError("the zero polynomial has no Sturm chain")
    cs, var = uv.from_poly(g)
    return [uv.to_poly(g.context, var, s) for s in _chain_dense(cs)]


def sturm_count(g: Polynomial, lo, hi) -> int:
    """Distinct real roots of g in (lo, hi].

    The endpoints must not be roots; widen the interval if they are.
    """
    if not g:
        raise ValueError("the zero polynomial has roots everywhere")
    lo, hi = Fraction(lo), Fraction(hi)
    if lo >= hi:
        raise ValueError(f"empty interval ({lo}, {hi}]")
    cs, _ = uv.from_poly(g)
    chain = _chain_dense(cs)
    for x in (lo, hi):
        if uv.degree(chain[0]) >= 1 and not uv.eval_at(chain[0], x):
            raise ValueError(
                f"{x} is a root of the polynomial; widen the interval past it"
            )
    return _count_oc(chain, lo, hi)


def cauchy_root_bound(g: Polynomial) -> Fraction:
    """Strict bound: every real root lies in (-B, B)."""
    cs, _ = uv.from_poly(g)
    if uv.degree(cs) < 1:
        raise ValueError("root bound needs a nonconstant polynomial")
    lead = abs(cs[-1])
    return 1 + max(abs(c) for c in cs[:-1]) / lead


def count_all_real(g: Polynomial) -> int:
    """Number of distinct real roots."""
    if not g:
        raise ValueError("the zero polynomial has roots everywhere")
    cs, _ = uv.from_poly(g)
    if uv.degree(cs) < 1:
        return 0
    chain = _chain_dense(cs)
    b = 1 + max(abs(c) for c in cs[:-1]) / abs(cs[-1])
    return _count_oc(chain, -b, b)


@dataclass(frozen=True)
class Isolation:
    """Disjoint half-open intervals (lo, hi], one distinct real root in each."""

    intervals: tuple

    def __len__(self):
        return len(self.intervals)

    def __iter__(self):
        return iter(self.intervals)


def isolate_real_roots(g: Polynomial, max_width=None) -> Isolation:
    """Bisect the Cauchy interval until each piece holds exactly one root.

    With ``max_width`` set, bisection continues until every isolating interval
    is at most that wide.
    """
    if not g:
        raise ValueError("the zero polynomial has roots everywhere")
    cs, _ = uv.from_poly(g)
    if uv.degree(cs) < 1:
        return Isolation(())
    if max_width is not None:
        max_width = Fraction(max_width)
        if max_width <= 0:
            raise ValueError("max_width must be positive")
    chain = _chain_dense(cs)
    b = 1 + max(abs(c) for c in cs[:-1]) / abs(cs[-1])
    found = []
    work = [(-b, b, _count_oc(chain, -b, b))]
    while work:
        lo, hi, cnt = work.pop()
        if cnt == 0:
            continue
        if cnt == 1 and (max_width is None or hi - lo <= max_width):
            found.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        left = _count_oc(chain, lo, mid)
        work.append((lo, mid, left))
        work.append((mid, hi, cnt - left))
    found.sort()
    return Isolation(tuple(found))


def _sign_at_isolated_root(m_chain, mcs, hstar, h_chain, lo, hi, budget: int = 512) -> int:
    """Sign of hstar at the unique root of mcs in (lo, hi] (known nonzero)."""
    for _ in range(budget):
        at_lo, at_hi = uv.eval_at(hstar, lo), uv.eval_at(hstar, hi)
        if at_lo and at_hi and _count_oc(h_chain, lo, hi) == 0:
            return sign(at_lo)
        mid = (lo + hi) / 2
        if not uv.eval_at(mcs, mid):
            return sign(uv.eval_at(hstar, mid))  # the root is exactly mid
        if _count_oc(m_chain, lo, mid) == 1:
            hi = mid
        else:
            lo = mid
    raise RuntimeError("sign refinement exceeded its step budget (internal bug)")


@dataclass(frozen=True)
class OracleCounts:
    pos: int
    neg: int
    zero: int
    total_real: int


def oracle_count_system(system, h: Polynomial | None = None, *, t=None, max_trials: int = 8) -> OracleCounts:
    """Count real solutions by sign of H through the shape basis and Sturm chains.

    Completely bypasses trace forms: reduce to the last variable, isolate the
    real roots of the minimal polynomial, and read off the sign of
    h*(T) = H(g_1(T), .., T) at each.  Raises OracleInapplicableError when no
    shape basis can be obtained (non-radical ideal, or no shear in the
    schedule separates the last coordinates).
    """
    system = list(system)
    if not system:
        raise ValueError("empty system")
    ctx = system[0].context
    if h is None:
        h = Polynomial.constant(ctx, 1)
    if not h:
        raise ValueError("the weight polynomial H must be nonzero")
    if h.context != ctx:
        raise ValueError("H lives in a different variable context")

    gb = buchberger(system, lex_order(ctx))
    if gb.is_unit_ideal():
        return OracleCounts(0, 0, 0, 0)

    try:
        shape, t_used = shape_with_shears(list(gb.generators), t=t, max_trials=max_trials)
    except (NonRadicalError, ShapeFormError) as e:
        raise OracleInapplicableError(str(e)) from None
    current_h = h if t_used is None else general_position_transform([h], t_used)[0]

    n = ctx.nvars
    last = n - 1
    mcs, _ = uv.from_poly(shape.minimal_polynomial, last)
    reps = [uv.from_poly(expr, last)[0] for expr in shape.coordinate_exprs]
    reps.append([Fraction(0), Fraction(1)])  # the last variable itself

    hstar: list = []
    for exps, coeff in sorted(current_h.terms.items()):
        term = [coeff]
        for i, e in enumerate(exps):
            if e:
                term = uv.rem(uv.mul(term, uv.pow_mod(reps[i], e, mcs)), mcs)
        hstar = uv.add(hstar, term)
    hstar = uv.rem(hstar, mcs)

    m_chain = _chain_dense(mcs)
    shared = uv.gcd(mcs, hstar) if hstar else list(mcs)
    shared_chain = _chain_dense(shared) if uv.degree(shared) >= 1 else None
    h_chain = _chain_dense(hstar) if hstar else None

    pos = neg = zero = 0
    intervals = isolate_real_roots(shape.minimal_polynomial)
    for lo, hi in intervals:
        if shared_chain is not None and _count_oc(shared_chain, lo, hi) == 1:
            zero += 1
            continue
        s = _sign_at_isolated_root(m_chain, mcs, hstar, h_chain, lo, hi)
        if s > 0:
            pos += 1
        elif s < 0:
            neg += 1
        else:
            raise RuntimeError("sign refinement returned 0 off the shared locus (internal bug)")
    total = len(intervals)
    if pos + neg + zero != total:
        raise RuntimeError("oracle sign counts lost a root (internal bug)")
    return OracleCounts(pos, neg, zero, total)
