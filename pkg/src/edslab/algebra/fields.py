"""The coefficient-field tower: Q, F_p, and F_p[T]/(pi).

A FieldDescriptor owns the arithmetic on raw coefficient values and
knows how to canonicalize inputs; FieldElem is a thin immutable wrapper
pairing a raw value with its descriptor.  Raw representations:

* Rationals   -- fractions.Fraction (always in lowest terms, den > 0)
* PrimeField  -- int in range(p)
* ExtField    -- tuple of ints, the residue polynomial's coefficients
                 in ascending order with trailing zeros stripped

Keeping raw values primitive lets the polynomial layer operate on bare
lists when speed matters, while the wrapper provides the operator
interface everything else is written against.
"""

from fractions import Fraction
from math import isqrt

from ..errors import (
    CoefficientNotInField,
    DescriptorMismatch,
    DivisionByZero,
    NotIrreducible,
    RangeTooLarge,
)
from . import _kernels as _k


class FieldDescriptor:
    """Common interface for the three coefficient fields."""

    kind = None
    characteristic = None

    def canon(self, value):
        raise NotImplementedError

    def elem(self, value):
        return FieldElem(self, self.canon(value))

    def zero(self):
        return FieldElem(self, self.raw_zero)

    def one(self):
        return FieldElem(self, self.raw_one)

    def __ne__(self, other):
        return not self.__eq__(other)


class Rationals(FieldDescriptor):
    kind = "rationals"
    characteristic = 0
    raw_zero = Fraction(0)
    raw_one = Fraction(1)

    def canon(self, value):
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, FieldElem):
            if value.field != self:
                raise DescriptorMismatch("element of a different field")
            return value.raw
        raise TypeError(f"cannot interpret {value!r} as a rational")

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def div(a, b):
        if not b:
            raise DivisionByZero("division by zero in Q")
        return a / b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def inv(a):
        if not a:
            raise DivisionByZero("inverse of zero in Q")
        return 1 / a

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("rationals")

    def __repr__(self):
        return "Q"


class PrimeField(FieldDescriptor):
    """F_p for a word-sized prime p, verified prime by trial division."""

    kind = "prime"

    def __init__(self, p):
        if not isinstance(p, int) or p < 2:
            raise ValueError("field size must be an integer >= 2")
        if p >= 1 << 40:
            raise RangeTooLarge("prime exceeds the supported word-size guard")
        d = 2
        root = isqrt(p)
        while d <= root:
            if p % d == 0:
                raise ValueError(f"{p} is not prime (divisible by {d})")
            d += 1
        self.p = p
        self.characteristic = p
        self.raw_zero = 0
        self.raw_one = 1

    def canon(self, value):
        if isinstance(value, int):
            return value % self.p
        if isinstance(value, Fraction):
            den = value.denominator % self.p
            if den == 0:
                raise CoefficientNotInField(
                    f"denominator {value.denominator} vanishes mod {self.p}"
                )
            return value.numerator * pow(den, -1, self.p) % self.p
        if isinstance(value, FieldElem):
            if value.field != self:
                raise DescriptorMismatch("element of a different field")
            return value.raw
        raise TypeError(f"cannot interpret {value!r} mod {self.p}")

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def div(self, a, b):
        if not b:
            raise DivisionByZero(f"division by zero in F_{self.p}")
        return a * pow(b, -1, self.p) % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if not a:
            raise DivisionByZero(f"inverse of zero in F_{self.p}")
        return pow(a, -1, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("prime", self.p))

    def __repr__(self):
        return f"F_{self.p}"


class ExtField(FieldDescriptor):
    """F_p[T]/(pi) for a monic irreducible pi; residues are int tuples."""

    kind = "ext"

    def __init__(self, modulus):
        # Imported here: Poly depends on descriptors, so the top level of
        # this module must not depend on Poly.
        from .poly import Poly, poly_is_irreducible

        if not isinstance(modulus, Poly) or not isinstance(modulus.field, PrimeField):
            raise TypeError("modulus must be a polynomial over a prime field")
        if modulus.degree < 1:
            raise NotIrreducible("modulus must be nonconstant")
        if modulus.leading.raw != 1:
            raise ValueError("modulus must be monic")
        if not poly_is_irreducible(modulus):
            raise NotIrreducible(f"{modulus!r} factors over F_{modulus.field.p}")
        self.p = modulus.field.p
        self.characteristic = self.p
        self.subfield = modulus.field
        self.modulus = modulus
        self._m = list(modulus.raw_coeffs)
        self.degree = modulus.degree
        self.raw_zero = ()
        self.raw_one = (1,)

    def canon(self, value):
        from .poly import Poly

        if isinstance(value, tuple):
            return self._reduce([c % self.p for c in value])
        if isinstance(value, (int, Fraction)):
            c = self.subfield.canon(value)
            return (c,) if c else ()
        if isinstance(value, Poly):
            if value.field != self.subfield:
                raise DescriptorMismatch("polynomial over a different prime field")
            return self._reduce(list(value.raw_coeffs))
        if isinstance(value, FieldElem):
            if value.field == self:
                return value.raw
            if value.field == self.subfield:
                return (value.raw,) if value.raw else ()
            raise DescriptorMismatch("element of a different field")
        raise TypeError(f"cannot interpret {value!r} in {self!r}")

    def _reduce(self, coeffs):
        if len(coeffs) >= len(self._m):
            coeffs = _k.pdivmod(coeffs, self._m, self.p)[1]
        else:
            coeffs = _k.ztrim(list(coeffs))
        return tuple(coeffs)

    def add(self, a, b):
        return tuple(_k.padd(list(a), list(b), self.p))

    def sub(self, a, b):
        return tuple(_k.psub(list(a), list(b), self.p))

    def mul(self, a, b):
        return self._reduce(_k.pmul(list(a), list(b), self.p))

    def inv(self, a):
        if not a:
            raise DivisionByZero(f"inverse of zero in {self!r}")
        r = _k.pinv_mod(list(a), self._m, self.p)
        if r is None:
            raise NotIrreducible("modulus is not irreducible after all")
        return tuple(r)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def neg(self, a):
        return tuple(-c % self.p for c in a)

    def __eq__(self, other):
        return (
            isinstance(other, ExtField)
            and other.p == self.p
            and other._m == self._m
        )

    def __hash__(self):
        return hash(("ext", self.p, tuple(self._m)))

    def __repr__(self):
        return f"F_{self.p}[T]/({self.modulus!r})"


class FieldElem:
    """One field element: a descriptor plus its canonical raw value."""

    __slots__ = ("field", "raw")

    def __init__(self, field, raw):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "raw", raw)

    def __setattr__(self, name, value):
        raise AttributeError("field elements are immutable")

    @property
    def is_zero(self):
        return self.raw == self.field.raw_zero

    @property
    def value(self):
        return self.raw

    def _coerce(self, other):
        if isinstance(other, FieldElem):
            if other.field != self.field:
                raise DescriptorMismatch(
                    f"cannot mix {self.field!r} and {other.field!r}"
                )
            return other.raw
        if isinstance(other, (int, Fraction)):
            return self.field.canon(other)
        return None

    def __add__(self, other):
        raw = self._coerce(other)
        if raw is None:
            return NotImplemented
        return FieldElem(self.field, self.field.add(self.raw, raw))

    __radd__ = __add__

    def __sub__(self, other):
        raw = self._coerce(other)
        if raw is None:
            return NotImplemented
        return FieldElem(self.field, self.field.sub(self.raw, raw))

    def __rsub__(self, other):
        raw = self._coerce(other)
        if raw is None:
            return NotImplemented
        return FieldElem(self.field, self.field.sub(raw, self.raw))

    def __mul__(self, other):
        raw = self._coerce(other)
        if raw is None:
            return NotImplemented
        return FieldElem(self.field, self.field.mul(self.raw, raw))

    __rmul__ = __mul__

    def __truediv__(self, other):
        raw = self._coerce(other)
        if raw is None:
            return NotImplemented
        return FieldElem(self.field, self.field.div(self.raw, raw))

    def __rtruediv__(self, other):
        raw = self._coerce(other)
        if raw is None:
            return NotImplemented
        return FieldElem(self.field, self.field.div(raw, self.raw))

    def __neg__(self):
        return FieldElem(self.field, self.field.neg(self.raw))

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            return (self ** (-e)).inverse()
        out = FieldElem(self.field, self.field.raw_one)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def inverse(self):
        return FieldElem(self.field, self.field.inv(self.raw))

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.field == other.field and self.raw == other.raw
        if isinstance(other, (int, Fraction)):
            try:
                return self.raw == self.field.canon(other)
            except (CoefficientNotInField, TypeError):
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.raw))

    def __repr__(self):
        return f"{self.raw!r} in {self.field!r}"


_OPS = {
    "add": lambda a, b: a + b,
    "sub": lambda a, b: a - b,
    "mul": lambda a, b: a * b,
    "div": lambda a, b: a / b,
}


def field_arith(a, b, op):
    """Apply one of add/sub/mul/div to two elements of the same field."""
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None
    return fn(a, b)


RATIONALS = Rationals()
