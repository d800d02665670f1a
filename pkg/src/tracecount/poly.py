"""Sparse multivariate polynomials over the rationals.

A polynomial is a dict mapping exponent tuples to nonzero rational
coefficients, tied to a ``VarContext`` (an ordered tuple of variable names).
Monomial orders (lex and degree-reverse-lex, with an optional variable
priority permutation) are value objects handed to the operations that need
them; polynomials themselves are order-agnostic.

Instances are treated as immutable: every operation returns a new polynomial
and the term dict is never mutated after construction.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .rational import format_rational


class VarContext:
    """An ordered set of distinct variable names."""

    __slots__ = ("names",)

    def __init__(self, names: Iterable[str]):
        names = tuple(names)
        if not names:
            raise ValueError("a variable context needs at least one variable")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names!r}")
        for n in names:
            if not n or not isinstance(n, str):
                raise ValueError(f"bad variable name {n!r}")
        self.names = names

    @property
    def nvars(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise ValueError(f"unknown variable {name!r} (have {', '.join(self.names)})") from None

    def __len__(self):
        return len(self.names)

    def __eq__(self, other):
        return isinstance(other, VarContext) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"VarContext({', '.join(self.names)})"


class MonomialOrder:
    """A monomial order: ``lex`` or ``degrevlex``, with variable priority.

    ``priority`` is a permutation of variable indices, highest variable first;
    it defaults to declaration order.  ``key(exps)`` returns a tuple that sorts
    monomials ascending under the order, so ``max(terms, key=order.key)`` picks
    the leading monomial.
    """

    __slots__ = ("kind", "nvars", "priority")

    def __init__(self, kind: str, nvars: int, priority=None):
        if kind not in ("lex", "degrevlex"):
            raise ValueError(f"unknown order kind {kind!r}")
        if priority is None:
            priority = tuple(range(nvars))
        else:
            priority = tuple(priority)
            if sorted(priority) != list(range(nvars)):
                raise ValueError(f"priority {priority!r} is not a permutation of 0..{nvars - 1}")
        self.kind = kind
        self.nvars = nvars
        self.priority = priority

    def key(self, exps):
        if self.kind == "lex":
            return tuple(exps[i] for i in self.priority)
        # degrevlex: total degree first; ties broken by *smaller* exponent in
        # the least-priority variable winning, scanned from the bottom up.
        return (sum(exps), tuple(-exps[i] for i in reversed(self.priority)))

    def greater(self, a, b) -> bool:
        return self.key(a) > self.key(b)

    def __eq__(self, other):
        return (
            isinstance(other, MonomialOrder)
            and (self.kind, self.nvars, self.priority) == (other.kind, other.nvars, other.priority)
        )

    def __hash__(self):
        return hash((self.kind, self.nvars, self.priority))

    def __repr__(self):
        return f"MonomialOrder({self.kind!r}, {self.nvars}, priority={self.priority})"


def lex_order(context_or_nvars, priority=None) -> MonomialOrder:
    n = context_or_nvars.nvars if isinstance(context_or_nvars, VarContext) else int(context_or_nvars)
    return MonomialOrder("lex", n, priority)


def degrevlex_order(context_or_nvars, priority=None) -> MonomialOrder:
    n = context_or_nvars.nvars if isinstance(context_or_nvars, VarContext) else int(context_or_nvars)
    return MonomialOrder("degrevlex", n, priority)


def _mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _mono_divides(a, b):
    """Does monomial a divide monomial b?"""
    return all(x <= y for x, y in zip(a, b))


def _mono_div(b, a):
    return tuple(y - x for x, y in zip(a, b))


def _mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


class Polynomial:
    __slots__ = ("context", "terms")

    def __init__(self, context: VarContext, terms: Mapping | Iterable = ()):
        if not isinstance(context, VarContext):
            raise TypeError("context must be a VarContext")
        items = terms.items() if isinstance(terms, Mapping) else terms
        n = context.nvars
        clean: dict = {}
        for exps, coeff in items:
            exps = tuple(exps)
            if len(exps) != n:
                raise ValueError(f"exponent tuple {exps!r} has wrong arity for {context!r}")
            if any((not isinstance(e, int)) or e < 0 for e in exps):
                raise ValueError(f"exponents must be nonnegative integers, got {exps!r}")
            coeff = Fraction(coeff)
            if coeff:
                c = clean.get(exps)
                if c is None:
                    clean[exps] = coeff
                else:
                    c += coeff
                    if c:
                        clean[exps] = c
                    else:
                        del clean[exps]
        self.context = context
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, context: VarContext) -> "Polynomial":
        return cls(context)

    @classmethod
    def constant(cls, context: VarContext, c) -> "Polynomial":
        return cls(context, {(0,) * context.nvars: Fraction(c)})

    @classmethod
    def variable(cls, context: VarContext, which) -> "Polynomial":
        i = which if isinstance(which, int) else context.index(which)
        exps = tuple(1 if j == i else 0 for j in range(context.nvars))
        return cls(context, {exps: Fraction(1)})

    # -- basic queries -----------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_value(self) -> Fraction:
        """The coefficient of the monomial 1 (the value, if constant)."""
        return self.terms.get((0,) * self.context.nvars, Fraction(0))

    def total_degree(self) -> int:
        if not self.terms:
            raise ValueError("the zero polynomial has no degree")
        return max(sum(e) for e in self.terms)

    def degree_in(self, var: int) -> int:
        if not self.terms:
            raise ValueError("the zero polynomial has no degree")
        return max(e[var] for e in self.terms)

    def used_variables(self) -> set:
        used = set()
        for e in self.terms:
            for i, x in enumerate(e):
                if x:
                    used.add(i)
        return used

    def leading_term(self, order: MonomialOrder):
        """(exponent tuple, coefficient) of the order-largest term.

        Raises ValueError on the zero polynomial.
        """
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        exps = max(self.terms, key=order.key)
        return exps, self.terms[exps]

    def coefficient(self, exps) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    # -- ring operations ---------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.context != self.context:
                raise ValueError(
                    f"context mismatch: {self.context!r} vs {other.context!r}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.context, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        merged = dict(self.terms)
        for exps, c in other.terms.items():
            s = merged.get(exps, Fraction(0)) + c
            if s:
                merged[exps] = s
            else:
                merged.pop(exps, None)
        out = Polynomial.__new__(Polynomial)
        out.context = self.context
        out.terms = merged
        return out

    __radd__ = __add__

    def __neg__(self):
        out = Polynomial.__new__(Polynomial)
        out.context = self.context
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            out = Polynomial.__new__(Polynomial)
            out.context = self.context
            out.terms = {} if not c else {e: k * c for e, k in self.terms.items()}
            return out
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        prod: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = _mono_mul(e1, e2)
                s = prod.get(e, Fraction(0)) + c1 * c2
                if s:
                    prod[e] = s
                else:
                    prod.pop(e, None)
        out = Polynomial.__new__(Polynomial)
        out.context = self.context
        out.terms = prod
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers must be nonnegative integers")
        result = Polynomial.constant(self.context, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.context, other)
        return (
            isinstance(other, Polynomial)
            and self.context == other.context
            and self.terms == other.terms
        )

    __hash__ = None  # mutable-dict backed; not hashable

    def __repr__(self):
        return f"Polynomial({format_polynomial(self)})"

    # -- evaluation and substitution ---------------------------------------

    def eval(self, point) -> Fraction:
        """Evaluate at a point given as a sequence of rationals."""
        point = [Fraction(x) for x in point]
        if len(point) != self.context.nvars:
            raise ValueError("point arity does not match the variable context")
        total = Fraction(0)
        for exps, coeff in self.terms.items():
            v = coeff
            for x, e in zip(point, exps):
                if e:
                    v *= x**e
            total += v
        return total

    def derivative(self, var: int) -> "Polynomial":
        terms = {}
        for exps, coeff in self.terms.items():
            e = exps[var]
            if e:
                de = exps[:var] + (e - 1,) + exps[var + 1 :]
                terms[de] = terms.get(de, Fraction(0)) + coeff * e
        return Polynomial(self.context, terms)

    def substitute(self, var: int, replacement: "Polynomial") -> "Polynomial":
        """Replace one variable by a polynomial (same context)."""
        if replacement.context != self.context:
            raise ValueError("substitution replacement lives in a different context")
        # group terms by the exponent of the substituted variable, then expand
        # with cached powers of the replacement
        powers = {0: Polynomial.constant(self.context, 1)}
        out = Polynomial.zero(self.context)
        for exps, coeff in sorted(self.terms.items()):
            e = exps[var]
            if e not in powers:
                p = max(k for k in powers if k <= e)
                acc = powers[p]
                while p < e:
                    acc = acc * replacement
                    p += 1
                    powers[p] = acc
            rest = exps[:var] + (0,) + exps[var + 1 :]
            out = out + Polynomial(self.context, {rest: coeff}) * powers[e]
        return out


def variables(context: VarContext):
    """All variables of a context as polynomials, in declaration order."""
    return tuple(Polynomial.variable(context, i) for i in range(context.nvars))


def format_polynomial(p: Polynomial, order: MonomialOrder | None = None) -> str:
    """Canonical text form: terms sorted descending (degrevlex by default)."""
    if not p.terms:
        return "0"
    if order is None:
        order = degrevlex_order(p.context)
    names = p.context.names
    pieces = []
    for exps in sorted(p.terms, key=order.key, reverse=True):
        coeff = p.terms[exps]
        factors = [
            name if e == 1 else f"{name}^{e}"
            for name, e in zip(names, exps)
            if e
        ]
        mag = abs(coeff)
        if not factors:
            body = format_rational(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([format_rational(mag)] + factors)
        pieces.append(("-" if coeff < 0 else "+", body))
    sign0, body0 = pieces[0]
    text = ("-" if sign0 == "-" else "") + body0
    for s, body in pieces[1:]:
        text += f" {s} {body}"
    return text


def general_position_transform(system, t) -> list:
    """Shear the last coordinate: substitute X_n -> X_n - sum_{i<n} t^i X_i.

    A point (a_1, .., a_n) of the original system corresponds to the point
    with last coordinate a_n + sum_{i<n} t^i a_i of the transformed one (other
    coordinates unchanged), so for all but finitely many t the transformed
    solutions have pairwise distinct last coordinates.
    """
    system = list(system)
    if not system:
        raise ValueError("empty system")
    ctx = system[0].context
    t = Fraction(t)
    if not t:
        raise ValueError("the shear parameter t must be nonzero")
    n = ctx.nvars
    if n == 1:
        return system
    last = Polynomial.variable(ctx, n - 1)
    shear = last - sum(
        (Polynomial.variable(ctx, i) * t ** (i + 1) for i in range(n - 1)),
        Polynomial.zero(ctx),
    )
    return [p.substitute(n - 1, shear) for p in system]


def inverse_general_position_transform(system, t) -> list:
    """Undo :func:`general_position_transform` with the same t."""
    system = list(system)
    if not system:
        raise ValueError("empty system")
    ctx = system[0].context
    t = Fraction(t)
    if not t:
        raise ValueError("the shear parameter t must be nonzero")
    n = ctx.nvars
    if n == 1:
        return system
    last = Polynomial.variable(ctx, n - 1)
    unshear = last + sum(
        (Polynomial.variable(ctx, i) * t ** (i + 1) for i in range(n - 1)),
        Polynomial.zero(ctx),
    )
    return [p.substitute(n - 1, unshear) for p in system]
