"""Polynomial expression parsing and canonical printing.

Grammar (whitespace insignificant):

    expr   := ["-"] term (("+" | "-") term)*
    term   := factor ("*" factor)*
    factor := atom ("^" nat)*
    atom   := coeff | "T" | "(" expr ")"
    coeff  := nat | nat "/" nat

Signs enter through the binary minus and the optional leading minus,
which the canonical printer needs for negative leading coefficients.
Fractional coefficients are interpreted in the target field, so "1/2"
means the inverse of 2 there; a denominator that vanishes in the field
is rejected.

The printer emits descending powers with explicit "*", and parsing its
output returns the original polynomial exactly.
"""

from fractions import Fraction

from ..errors import CoefficientNotInField, ParseError
from .fields import ExtField, PrimeField, Rationals
from .poly import Poly, poly_constant, poly_gen

_INT = "int"
_VAR = "var"
_OP = "op"
_END = "end"


def _tokenize(text):
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append((_INT, int(text[i:j]), i))
            i = j
            continue
        if ch == "T":
            tokens.append((_VAR, None, i))
            i += 1
            continue
        if ch in "+-*/^()":
            tokens.append((_OP, ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append((_END, None, n))
    return tokens


class _Parser:
    def __init__(self, text, field):
        self.text = text
        self.field = field
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_op(self, ch):
        kind, val, at = self.take()
        if kind != _OP or val != ch:
            raise ParseError(f"expected {ch!r}", at)

    def parse(self):
        value = self.expr()
        kind, _, at = self.peek()
        if kind != _END:
            raise ParseError("unexpected trailing input", at)
        return value

    def expr(self):
        kind, val, _ = self.peek()
        negate = kind == _OP and val == "-"
        if negate:
            self.take()
        value = self.term()
        if negate:
            value = -value
        while True:
            kind, val, _ = self.peek()
            if kind == _OP and val in "+-":
                self.take()
                rhs = self.term()
                value = value + rhs if val == "+" else value - rhs
            else:
                return value

    def term(self):
        value = self.factor()
        while True:
            kind, val, _ = self.peek()
            if kind == _OP and val == "*":
                self.take()
                value = value * self.factor()
            else:
                return value

    def factor(self):
        value = self.atom()
        while True:
            kind, val, _ = self.peek()
            if kind == _OP and val == "^":
                self.take()
                ekind, exp, at = self.take()
                if ekind != _INT:
                    raise ParseError("exponent must be a nonnegative integer", at)
                value = value**exp
            else:
                return value

    def atom(self):
        kind, val, at = self.take()
        if kind == _INT:
            nxt_kind, nxt_val, _ = self.peek()
            if nxt_kind == _OP and nxt_val == "/":
                self.take()
                dkind, den, dat = self.take()
                if dkind != _INT:
                    # "/" here belongs to no rule other than a fraction.
                    raise ParseError("expected an integer denominator", dat)
                if den == 0:
                    raise ParseError("zero denominator in coefficient", dat)
                return poly_constant(self.field, Fraction(val, den))
            return poly_constant(self.field, val)
        if kind == _VAR:
            return poly_gen(self.field)
        if kind == _OP and val == "(":
            value = self.expr()
            self.expect_op(")")
            return value
        raise ParseError("expected a coefficient, 'T', or '('", at)


def parse_poly(text, field):
    """Parse an expression in the grammar above into a Poly over field."""
    return _Parser(text, field).parse()


def _coeff_pieces(field, raw):
    """(sign, magnitude string) for one raw coefficient."""
    if isinstance(field, Rationals):
        if raw < 0:
            return "-", str(-raw)
        return "+", str(raw)
    if isinstance(field, PrimeField):
        return "+", str(raw)
    if isinstance(field, ExtField):
        inner = format_poly(Poly._make(field.subfield, list(raw)))
        return "+", f"({inner})"
    return "+", repr(raw)


def format_poly(poly):
    """Canonical printer: descending powers, explicit '*', no unary plus."""
    if poly.is_zero:
        return "0"
    field = poly.field
    raw = poly.raw_coeffs
    parts = []
    for i in range(len(raw) - 1, -1, -1):
        c = raw[i]
        if c == field.raw_zero:
            continue
        sign, mag = _coeff_pieces(field, c)
        if i == 0:
            body = mag
        else:
            var = "T" if i == 1 else f"T^{i}"
            body = var if mag == "1" else f"{mag}*{var}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = [first_body if first_sign == "+" else f"-{first_body}"]
    for sign, body in parts[1:]:
        out.append(f" {'+' if sign == '+' else '-'} {body}")
    return "".join(out)


def format_ratfunc(rf):
    """Printer for rational functions: num or (num)/(den)."""
    num = format_poly(rf.num)
    if rf.den.degree == 0 or rf.den.is_zero:
        return num
    return f"({num})/({format_poly(rf.den)})"
