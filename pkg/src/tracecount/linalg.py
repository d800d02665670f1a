"""Small exact dense matrix helpers (lists of lists of Fractions)."""

from __future__ import annotations

from fractions import Fraction


def zeros(n: int, m: int | None = None) -> list:
    m = n if m is None else m
    return [[Fraction(0)] * m for _ in range(n)]


def identity(n: int) -> list:
    out = zeros(n)
    for i in range(n):
        out[i][i] = Fraction(1)
    return out


def copy_rows(a) -> list:
    return [list(row) for row in a]


def transpose(a) -> list:
    return [list(col) for col in zip(*a)] if a else []


def mat_mul(a, b) -> list:
    if not a or not b:
        return []
    n, k, m = len(a), len(b), len(b[0])
    out = zeros(n, m)
    for i in range(n):
        arow = a[i]
        orow = out[i]
        for t in range(k):
            c = arow[t]
            if not c:
                continue
            brow = b[t]
            for j in range(m):
                orow[j] += c * brow[j]
    return out


def mat_vec(a, v) -> list:
    return [sum((c * x for c, x in zip(row, v)), Fraction(0)) for row in a]


def mat_add(a, b) -> list:
    return [[x + y for x, y in zip(r, s)] for r, s in zip(a, b)]


def mat_sub(a, b) -> list:
    return [[x - y for x, y in zip(r, s)] for r, s in zip(a, b)]


def mat_scale(a, k) -> list:
    k = Fraction(k)
    return [[x * k for x in row] for row in a]


def trace(a) -> Fraction:
    return sum((a[i][i] for i in range(len(a))), Fraction(0))


def det(a) -> Fraction:
    """Determinant by fraction elimination with partial pivoting."""
    n = len(a)
    m = copy_rows(a)
    sign = 1
    d = Fraction(1)
    for k in range(n):
        pivot = next((i for i in range(k, n) if m[i][k]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != k:
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        d *= m[k][k]
        inv = 1 / m[k][k]
        for i in range(k + 1, n):
            if m[i][k]:
                f = m[i][k] * inv
                for j in range(k, n):
                    m[i][j] -= f * m[k][j]
    return d * sign
