"""Exact rational scalars.

Every number in this package is a rational in canonical form: reduced
numerator/denominator, positive denominator.  The stdlib ``fractions.Fraction``
already guarantees exactly that on construction, so ``Rational`` is an alias
rather than a reimplementation; this module adds the few helpers the rest of
the code needs (sign, text parsing/formatting of ``a/b`` literals).
"""

from __future__ import annotations

from fractions import Fraction

Rational = Fraction


def rat(numerator, denominator=1) -> Fraction:
    """Build a rational in canonical form.  ``rat(-10, -4) == rat(5, 2)``."""
    return Fraction(numerator, denominator)


def sign(a) -> int:
    """-1, 0 or +1."""
    a = Fraction(a)
    if a > 0:
        return 1
    if a < 0:
        return -1
    return 0


def parse_rational(text: str) -> Fraction:
    """Parse ``"3"``, ``"-2/5"`` etc.  Raises ValueError on malformed input."""
    s = text.strip()
    if not s:
        raise ValueError("empty rational literal")
    if "/" in s:
        num, _, den = s.partition("/")
        try:
            n, d = int(num), int(den)
        except ValueError:
            raise ValueError(f"malformed rational literal {text!r}") from None
        if d == 0:
            raise ValueError(f"zero denominator in {text!r}")
        return Fraction(n, d)
    try:
        return Fraction(int(s))
    except ValueError:
        raise ValueError(f"malformed rational literal {text!r}") from None


def format_rational(a) -> str:
    """Canonical text form: ``"5/6"``, ``"-3"``, ``"0"``."""
    return str(Fraction(a))
