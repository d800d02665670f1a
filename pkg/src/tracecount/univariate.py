"""Dense univariate helpers over the rationals.

Coefficient lists run low degree to high ([c0, c1, ..], no trailing zeros);
the zero polynomial is the empty list.  These back the Sturm oracle, the
squarefree computations and the shape-basis reduction, where dense arithmetic
is simpler and faster than going through the sparse multivariate type.
"""

from __future__ import annotations

from fractions import Fraction

from .poly import Polynomial, VarContext


def trim(cs: list) -> list:
    while cs and not cs[-1]:
        cs.pop()
    return cs


def degree(cs) -> int:
    """Degree; -1 for the zero polynomial."""
    return len(cs) - 1


def is_zero(cs) -> bool:
    return not cs


def add(a, b) -> list:
    n = max(len(a), len(b))
    out = [Fraction(0)] * n
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return trim(out)


def neg(a) -> list:
    return [-c for c in a]


def sub(a, b) -> list:
    return add(a, neg(b))


def scale(a, k) -> list:
    k = Fraction(k)
    if not k:
        return []
    return [c * k for c in a]


def mul(a, b) -> list:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if not ca:
            continue
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return trim(out)


def divmod_poly(a, b):
    """Exact rational division with remainder: a = q*b + r, deg r < deg b."""
    if not b:
        raise ZeroDivisionError("univariate division by zero")
    r = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    db, lead = len(b) - 1, b[-1]
    while len(r) - 1 >= db and r:
        k = len(r) - 1 - db
        c = r[-1] / lead
        q[k] = c
        for i, cb in enumerate(b):
            r[k + i] -= c * cb
        trim(r)
    return trim(q), r


def rem(a, b) -> list:
    return divmod_poly(a, b)[1]


def exact_div(a, b) -> list:
    q, r = divmod_poly(a, b)
    if r:
        raise ArithmeticError("division was expected to be exact")
    return q


def monic(a) -> list:
    if not a:
        raise ValueError("cannot normalize the zero polynomial")
    lead = a[-1]
    return [c / lead for c in a]


def derivative(a) -> list:
    return trim([c * i for i, c in enumerate(a)][1:])


def eval_at(a, x) -> Fraction:
    """Horner evaluation."""
    x = Fraction(x)
    total = Fraction(0)
    for c in reversed(a):
        total = total * x + c
    return total


def gcd(a, b) -> list:
    """Monic gcd by the Euclidean algorithm (monic(a) if b = 0, etc.)."""
    a, b = list(a), list(b)
    while b:
        a, b = b, rem(a, b)
    return monic(a) if a else []


def squarefree_part(a) -> list:
    """Monic a / gcd(a, a'): same roots, all simple."""
    if not a:
        raise ValueError("the zero polynomial has no squarefree part")
    if len(a) == 1:
        return [Fraction(1)]
    return monic(exact_div(a, gcd(a, derivative(a))))


def is_squarefree(a) -> bool:
    return degree(gcd(a, derivative(a))) == 0 if a else False


def pow_mod(base, n: int, modulus) -> list:
    """base^n reduced modulo a nonzero polynomial, by repeated squaring."""
    result = [Fraction(1)]
    base = rem(base, modulus)
    while n:
        if n & 1:
            result = rem(mul(result, base), modulus)
        n >>= 1
        if n:
            base = rem(mul(base, base), modulus)
    return result


def from_poly(p: Polynomial, var: int | None = None):
    """Dense coefficients of a univariate polynomial; returns (coeffs, var).

    With ``var=None`` the variable is inferred; constants report var 0.
    Raises ValueError if other variables occur.
    """
    used = p.used_variables()
    if var is None:
        if len(used) > 1:
            names = ", ".join(p.context.names[i] for i in sorted(used))
            raise ValueError(f"polynomial is not univariate (uses {names})")
        var = used.pop() if used else 0
    elif used - {var}:
        extra = ", ".join(p.context.names[i] for i in sorted(used - {var}))
        raise ValueError(f"polynomial involves {extra}, not just {p.context.names[var]}")
    if not p.terms:
        return [], var
    out = [Fraction(0)] * (p.degree_in(var) + 1)
    for exps, coeff in p.terms.items():
        out[exps[var]] = coeff
    return trim(out), var


def to_poly(context: VarContext, var: int, cs) -> Polynomial:
    n = context.nvars
    terms = {}
    for i, c in enumerate(cs):
        if c:
            exps = tuple(i if j == var else 0 for j in range(n))
            terms[exps] = c
    return Polynomial(context, terms)


def univariate_squarefree_part(p: Polynomial) -> Polynomial:
    """Monic squarefree part of a univariate polynomial (same context)."""
    if not p:
        raise ValueError("the zero polynomial has no squarefree part")
    cs, var = from_poly(p)
    return to_poly(p.context, var, squarefree_part(cs))
