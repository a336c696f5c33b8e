"""Field descriptor tower: Q, F_p, and F_p[T]/(pi)."""

import itertools
from fractions import Fraction

import pytest

from edslab.algebra.fields import ExtField, FieldElem, PrimeField, Rationals
from edslab.algebra.poly import Poly
from edslab.errors import DescriptorMismatch, DivisionByZero, NotIrreducible, RangeTooLarge


class TestRationals:
    def test_arithmetic_matches_fraction(self):
        Q = Rationals()
        a = Q.elem(Fraction(3, 4))
        b = Q.elem(Fraction(-2, 5))
        assert (a + b).raw == Fraction(3, 4) + Fraction(-2, 5)
        assert (a * b).raw == Fraction(3, 4) * Fraction(-2, 5)
        assert (a - b).raw == Fraction(23, 20)
        assert (a / b).raw == Fraction(3, 4) / Fraction(-2, 5)
        assert (-a).raw == Fraction(-3, 4)

    def test_int_coercion(self):
        Q = Rationals()
        assert (Q.elem(2) + 1).raw == Fraction(3)
        assert (Q.elem(Fraction(1, 2)) * 4).raw == Fraction(2)

    def test_division_by_zero(self):
        Q = Rationals()
        with pytest.raises(DivisionByZero):
            Q.elem(1) / Q.elem(0)

    def test_descriptor_identity(self):
        assert Rationals() == Rationals()
        assert Rationals().characteristic == 0


class TestPrimeField:
    def test_rejects_composites(self):
        with pytest.raises(ValueError):
            PrimeField(15)
        with pytest.raises(ValueError):
            PrimeField(1)
        with pytest.raises(RangeTooLarge):
            PrimeField((1 << 41) + 1)

    def test_canon_wraps(self):
        F = PrimeField(7)
        assert F.elem(10).raw == 3
        assert F.elem(-1).raw == 6
        assert F.elem(Fraction(1, 2)).raw == 4  # 2 * 4 = 8 = 1

    def test_inverse_exhaustive_oracle(self):
        # independent oracle: scan for the inverse instead of using pow
        F = PrimeField(5)
        for a in range(1, 5):
            found = [b for b in range(1, 5) if a * b % 5 == 1]
            assert len(found) == 1
            assert (F.one() / F.elem(a)).raw == found[0]

    def test_field_axioms_sampled(self):
        F = PrimeField(11)
        elems = [F.elem(v) for v in range(11)]
        for a, b in itertools.product(elems[:5], elems[3:8]):
            assert a + b == b + a
            assert a * b == b * a
            assert (a + b) * elems[2] == a * elems[2] + b * elems[2]

    def test_descriptor_mismatch(self):
        with pytest.raises(DescriptorMismatch):
            PrimeField(5).elem(1) + PrimeField(7).elem(1)

    def test_characteristic(self):
        assert PrimeField(13).characteristic == 13


class TestExtField:
    def pi(self):
        return Poly(PrimeField(5), [2, 0, 1])  # T^2 + 2, irreducible over F_5

    def test_requires_irreducible_modulus(self):
        F5 = PrimeField(5)
        with pytest.raises(NotIrreducible):
            ExtField(Poly(F5, [4, 0, 1]))  # T^2 + 4 = (T+1)(T+4)

    def test_size_and_characteristic(self):
        R = ExtField(self.pi())
        assert R.characteristic == 5
        elems = {R.elem(Poly(PrimeField(5), [a, b])).raw for a in range(5) for b in range(5)}
        assert len(elems) == 25

    def test_inverse_exhaustive(self):
        R = ExtField(self.pi())
        F5 = PrimeField(5)
        nonzero = [
            R.elem(Poly(F5, [a, b]))
            for a in range(5)
            for b in range(5)
            if (a, b) != (0, 0)
        ]
        one = R.one()
        for x in nonzero:
            inv = one / x
            assert x * inv == one

    def test_frobenius_fixes_base(self):
        # x^25 = x for every element of F_25
        R = ExtField(self.pi())
        F5 = PrimeField(5)
        for a in range(5):
            for b in range(5):
                x = R.elem(Poly(F5, [a, b]))
                y = x
                for _ in range(24):
                    y = y * x
                assert y == x

    def test_reduction_respects_modulus(self):
        R = ExtField(self.pi())
        F5 = PrimeField(5)
        t = R.elem(Poly(F5, [0, 1]))
        assert t * t == R.elem(Poly(F5, [-2]))  # T^2 = -2 mod T^2 + 2


class TestFieldElem:
    def test_immutability(self):
        x = PrimeField(5).elem(2)
        with pytest.raises(AttributeError):
            x.raw = 3

    def test_cross_field_rejected(self):
        with pytest.raises(DescriptorMismatch):
            Rationals().elem(1) + PrimeField(5).elem(1)
