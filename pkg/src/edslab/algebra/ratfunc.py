"""Rational functions over a coefficient field, always kept normalized.

A RatFunc stores a numerator and denominator Poly with gcd 1 and a monic
denominator; zero is 0/1. Equality of normalized pairs is then plain
structural equality, which the rest of the package relies on.

Normalization is the hot spot of the whole library: elliptic-curve point
arithmetic over Q(T) produces numerator/denominator pairs whose common
factor is nearly the whole polynomial. Over a prime field the kernel gcd
is used directly; over Q large pairs are cleared to integer polynomials
and cancelled with the verified modular engine, which avoids the
coefficient blowup of fraction-arithmetic Euclid.
"""

from fractions import Fraction

from ..errors import DescriptorMismatch, DivisionByZero, ZeroDenominator
from . import _kernels as K
from .fields import FieldDescriptor, FieldElem, PrimeField, Rationals
from .poly import Poly, poly_constant, poly_gcd, poly_gen

_QCANCEL_MIN = 65  # combined coefficient count before the modular path pays off


def _normalize(num, den):
    field = num.field
    if den.is_zero:
        raise ZeroDenominator("denominator is the zero polynomial")
    if num.is_zero:
        one = poly_constant(field, 1)
        return Poly._make(field, []), one
    if den.degree == 0:
        inv = field.div(field.raw_one, den.raw_coeffs[0])
        return num.scale(inv), poly_constant(field, 1)

    if isinstance(field, PrimeField):
        p = field.p
        a, b = num.raw_coeffs, den.raw_coeffs
        g = K.pgcd(a, b, p)
        if len(g) > 1:
            a = K.pdivmod(a, g, p)[0]
            b = K.pdivmod(b, g, p)[0]
        if b[-1] != 1:
            inv = pow(b[-1], -1, p)
            a = [c * inv % p for c in a]
            b = [c * inv % p for c in b]
        return Poly._make(field, list(a)), Poly._make(field, list(b))

    if isinstance(field, Rationals) and len(num.raw_coeffs) + len(den.raw_coeffs) >= _QCANCEL_MIN:
        return _normalize_q_big(field, num, den)

    g = poly_gcd(num, den)
    if g.degree > 0:
        num = num // g
        den = den // g
    lc = den.raw_coeffs[-1]
    if lc != field.raw_one:
        inv = field.div(field.raw_one, lc)
        num = num.scale(inv)
        den = den.scale(inv)
    return num, den


def _normalize_q_big(field, num, den):
    from .poly import _q_clear

    dn, zn = _q_clear(num.raw_coeffs)
    dd, zd = _q_clear(den.raw_coeffs)
    cn, pn = K.zprimitive(zn)
    cd, pd = K.zprimitive(zd)
    u, v = K.qcancel(pn, pd)
    # num/den = (cn/dn)pn / ((cd/dd)pd) = (cn*dd)/(cd*dn) * (u/v)
    scale = Fraction(cn * dd, cd * dn)
    lcv = v[-1]
    new_den = Poly._make(field, [Fraction(c, lcv) for c in v])
    s = scale / lcv
    new_num = Poly._make(field, [c * s for c in u])
    return new_num, new_den


class RatFunc:
    """A normalized fraction of polynomials over one coefficient field."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, *, _normalized=False):
        if not isinstance(num, Poly):
            raise TypeError(f"numerator must be a Poly, got {type(num).__name__}")
        if den is None:
            den = poly_constant(num.field, 1)
        if not isinstance(den, Poly):
            raise TypeError(f"denominator must be a Poly, got {type(den).__name__}")
        if den.field != num.field:
            raise DescriptorMismatch("numerator and denominator fields differ")
        if not _normalized:
            num, den = _normalize(num, den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    @property
    def field(self):
        return self.num.field

    @property
    def is_zero(self):
        return self.num.is_zero

    @property
    def is_constant(self):
        return self.num.degree <= 0 and self.den.degree <= 0

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            if other.field != self.field:
                raise DescriptorMismatch("rational functions over different fields")
            return other
        if isinstance(other, Poly):
            if other.field != self.field:
                raise DescriptorMismatch("rational functions over different fields")
            return RatFunc(other)
        if isinstance(other, (int, Fraction)) or isinstance(other, FieldElem):
            return RatFunc(poly_constant(self.field, other))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        num = self.num * o.den + o.num * self.den
        den = self.den * o.den
        return RatFunc(num, den)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        num = self.num * o.den - o.num * self.den
        return RatFunc(num, self.den * o.den)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero:
            raise DivisionByZero("division by the zero rational function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return RatFunc(-self.num, self.den, _normalized=True)

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return (RatFunc(poly_constant(self.field, 1)) / self) ** (-e)
        return RatFunc(self.num**e, self.den**e)

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (Poly, int, Fraction, FieldElem)):
            o = self._coerce(other)
            return self.num == o.num and self.den == o.den
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        from .parse import format_ratfunc

        return f"RatFunc({format_ratfunc(self)})"

    def inverse(self):
        if self.is_zero:
            raise DivisionByZero("zero rational function has no inverse")
        return RatFunc(self.den, self.num)


def ratfunc_make(num, den=None):
    """Build a normalized rational function from a numerator/denominator pair."""
    return RatFunc(num, den)


class FunctionField:
    """The field k(T) of rational functions over a coefficient field k.

    This plays the same descriptor role as the scalar field classes: curve
    code asks a base for zero, one, and element coercion without caring
    whether points live over a scalar field or over k(T).
    """

    kind = "function-field"

    def __init__(self, coefficient_field):
        if not isinstance(coefficient_field, FieldDescriptor):
            raise TypeError("coefficient field must be a field descriptor")
        self.coefficient_field = coefficient_field
        self.characteristic = coefficient_field.characteristic

    def elem(self, value):
        if isinstance(value, RatFunc):
            if value.field != self.coefficient_field:
                raise DescriptorMismatch("rational function over a different field")
            return value
        if isinstance(value, Poly):
            if value.field != self.coefficient_field:
                raise DescriptorMismatch("polynomial over a different field")
            return RatFunc(value)
        return RatFunc(poly_constant(self.coefficient_field, value))

    def zero(self):
        return RatFunc(Poly._make(self.coefficient_field, []), poly_constant(self.coefficient_field, 1), _normalized=True)

    def one(self):
        return self.elem(1)

    def gen(self):
        return RatFunc(poly_gen(self.coefficient_field))

    def __eq__(self, other):
        if isinstance(other, FunctionField):
            return self.coefficient_field == other.coefficient_field
        return NotImplemented

    def __hash__(self):
        return hash(("function-field", self.coefficient_field))

    def __repr__(self):
        return f"FunctionField({self.coefficient_field!r})"
