"""Text formats: polynomial expressions, system files, matrix files.

System files look like::

    # unit circle cut by a line
    vars x, y
    x^2 + y^2 - 1
    y - x
    H: x

One polynomial per line after the ``vars`` header; ``H:`` lines declare sign
condition polynomials; ``#`` starts a comment.  Expressions use ``+ - * ^``
and parentheses with integer or ``a/b`` rational literals; ``^`` takes a
nonnegative integer exponent and multiplication is always written ``*``
(implicit multiplication like ``2x`` is rejected).

Matrix files: first significant line is the dimension n, then n lines of n
whitespace-separated rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .poly import Polynomial, VarContext
from .rational import parse_rational


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        self.message = message
        self.line = line
        self.col = col
        where = ""
        if line is not None:
            where = f"line {line}: " if col is None else f"line {line}, column {col}: "
        super().__init__(where + message)


class Token(NamedTuple):
    kind: str   # NUM, IDENT or the operator character itself
    text: str
    line: int
    col: int


def _tokenize(text: str, line_no: int) -> list:
    tokens = []
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c in " \t":
            i += 1
            continue
        col = i + 1
        if c.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(Token("NUM", text[i:j], line_no, col))
            i = j
        elif c.isalpha() or c == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(Token("IDENT", text[i:j], line_no, col))
            i = j
        elif c in "+-*^()/,:":
            tokens.append(Token(c, c, line_no, col))
            i += 1
        else:
            raise ParseError(f"unexpected character {c!r}", line_no, col)
    return tokens


class _ExprParser:
    """Recursive descent over one line of tokens."""

    def __init__(self, tokens, context: VarContext, line_no: int):
        self.tokens = tokens
        self.pos = 0
        self.context = context
        self.line = line_no

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        if tok is not None:
            self.pos += 1
        return tok

    def fail(self, message, tok=None):
        if tok is None:
            raise ParseError(message, self.line)
        raise ParseError(message, tok.line, tok.col)

    def parse(self) -> Polynomial:
        p = self.expr()
        tok = self.peek()
        if tok is not None:
            if tok.kind in ("NUM", "IDENT", "("):
                self.fail("implicit multiplication is not allowed; write '*'", tok)
            self.fail(f"unexpected {tok.text!r}", tok)
        return p

    def expr(self) -> Polynomial:
        p = self.term()
        while True:
            tok = self.peek()
            if tok is not None and tok.kind in "+-":
                self.take()
                q = self.term()
                p = p + q if tok.kind == "+" else p - q
            else:
                return p

    def term(self) -> Polynomial:
        p = self.factor()
        while True:
            tok = self.peek()
            if tok is not None and tok.kind == "*":
                self.take()
                p = p * self.factor()
            else:
                return p

    def factor(self) -> Polynomial:
        negate = False
        while True:
            tok = self.peek()
            if tok is not None and tok.kind in "+-":
                self.take()
                if tok.kind == "-":
                    negate = not negate
            else:
                break
        p = self.power()
        return -p if negate else p

    def power(self) -> Polynomial:
        p = self.primary()
        tok = self.peek()
        if tok is not None and tok.kind == "^":
            self.take()
            e = self.take()
            if e is None or e.kind != "NUM":
                self.fail("'^' needs a nonnegative integer exponent", e or tok)
            p = p ** int(e.text)
        return p

    def primary(self) -> Polynomial:
        tok = self.take()
        if tok is None:
            self.fail("unexpected end of expression")
        if tok.kind == "NUM":
            value = Fraction(int(tok.text))
            nxt = self.peek()
            if nxt is not None and nxt.kind == "/":
                self.take()
                den = self.take()
                if den is None or den.kind != "NUM":
                    self.fail("expected an integer denominator after '/'", den or nxt)
                if int(den.text) == 0:
                    self.fail("zero denominator", den)
                value /= int(den.text)
            return Polynomial.constant(self.context, value)
        if tok.kind == "IDENT":
            try:
                idx = self.context.index(tok.text)
            except ValueError:
                self.fail(
                    f"unknown variable {tok.text!r} (declared: {', '.join(self.context.names)})",
                    tok,
                )
            return Polynomial.variable(self.context, idx)
        if tok.kind == "(":
            p = self.expr()
            closing = self.take()
            if closing is None or closing.kind != ")":
                self.fail("unbalanced parenthesis", closing or tok)
            return p
        if tok.kind == "/":
            self.fail("'/' is only allowed inside rational literals like 2/3", tok)
        self.fail(f"unexpected {tok.text!r}", tok)


def parse_polynomial(text: str, context: VarContext, line_no: int = 1) -> Polynomial:
    """Parse a single expression against a fixed variable context."""
    tokens = _tokenize(text, line_no)
    if not tokens:
        raise ParseError("empty expression", line_no)
    return _ExprParser(tokens, context, line_no).parse()


def parse_univariate(text: str, default_var: str = "x") -> Polynomial:
    """Parse an expression, inferring the (single) variable name."""
    tokens = _tokenize(text, 1)
    names = []
    for tok in tokens:
        if tok.kind == "IDENT" and tok.text not in names:
            names.append(tok.text)
    if len(names) > 1:
        raise ParseError(
            f"expected one variable, found {', '.join(sorted(names))}", 1, tokens[0].col
        )
    context = VarContext(names or [default_var])
    if not tokens:
        raise ParseError("empty expression", 1)
    return _ExprParser(tokens, context, 1).parse()


@dataclass(frozen=True)
class ParsedSystem:
    context: VarContext
    system: tuple
    h_polys: tuple


def _significant_lines(text: str):
    for line_no, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            yield line_no, body


def parse_system(text: str) -> ParsedSystem:
    """Parse a system file: vars header, polynomial lines, H: lines."""
    lines = list(_significant_lines(text))
    if not lines:
        raise ParseError("empty input: expected a 'vars' header")
    header_no, header = lines[0]
    tokens = _tokenize(header, header_no)
    if not tokens or tokens[0].kind != "IDENT" or tokens[0].text != "vars":
        raise ParseError("first line must be a 'vars' header like 'vars x, y'", header_no)
    names = []
    expect_name = True
    for tok in tokens[1:]:
        if expect_name:
            if tok.kind != "IDENT":
                raise ParseError("expected a variable name", tok.line, tok.col)
            if tok.text in names:
                raise ParseError(f"duplicate variable {tok.text!r}", tok.line, tok.col)
            names.append(tok.text)
            expect_name = False
        else:
            if tok.kind != ",":
                raise ParseError("expected ',' between variable names", tok.line, tok.col)
            expect_name = True
    if expect_name or not names:
        raise ParseError("expected a variable name", header_no)
    context = VarContext(names)

    system = []
    h_polys = []
    for line_no, body in lines[1:]:
        tokens = _tokenize(body, line_no)
        if (
            len(tokens) >= 2
            and tokens[0].kind == "IDENT"
            and tokens[0].text == "H"
            and tokens[1].kind == ":"
        ):
            if len(tokens) == 2:
                raise ParseError("empty H: line", line_no)
            h_polys.append(_ExprParser(tokens[2:], context, line_no).parse())
        else:
            system.append(_ExprParser(tokens, context, line_no).parse())
    if not system:
        raise ParseError("no system polynomials (only comments and H: lines)", header_no)
    return ParsedSystem(context, tuple(system), tuple(h_polys))


def parse_matrix(text: str) -> list:
    """Parse a matrix file into rows of Fractions."""
    lines = list(_significant_lines(text))
    if not lines:
        raise ParseError("empty input: expected a dimension line")
    dim_no, dim_text = lines[0]
    try:
        n = int(dim_text)
    except ValueError:
        raise ParseError(f"expected the dimension, got {dim_text!r}", dim_no) from None
    if n < 0:
        raise ParseError("dimension must be nonnegative", dim_no)
    if len(lines) - 1 != n:
        raise ParseError(
            f"expected {n} matrix rows, found {len(lines) - 1}", dim_no
        )
    rows = []
    for line_no, body in lines[1:]:
        parts = body.split()
        if len(parts) != n:
            raise ParseError(f"expected {n} entries, found {len(parts)}", line_no)
        try:
            rows.append([parse_rational(p) for p in parts])
        except ValueError as e:
            raise ParseError(str(e), line_no) from None
    return rows
