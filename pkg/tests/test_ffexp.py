"""Positive-characteristic pipeline: counting, symbols, lower bounds."""

import itertools
import math

import pytest

from edslab.algebra.fields import PrimeField
from edslab.algebra.poly import Poly, enumerate_irreducibles, poly_gcd
from edslab.curve import CurvePoint, reduce_point_mod, scalar_mul
from edslab.eds import denominator_of
from edslab.errors import (
    BadDelta,
    DegreeGuard,
    DeltaNotIrreducible,
    HasseViolation,
    NotCoprime,
    NotIrreducible,
    PointNotOnCurve,
    PTooSmall,
    RangeTooLarge,
    SingularConstants,
)
from edslab.ffexp import (
    annihilation_check,
    classify_primes,
    count_points,
    legendre_symbol,
    lower_bound_experiment,
    make_twist_spec,
    ppower_check,
    reciprocity_check,
    trace_sequence,
)

F5 = PrimeField(5)
F7 = PrimeField(7)
T5 = Poly(F5, [0, 1])


def p5(*cs):
    return Poly(F5, list(cs))


@pytest.fixture(scope="module")
def spec():
    return make_twist_spec(5, 1, 1, p5(1, 1, 0, 1))


class TestPointCounting:
    def test_fixture_curve(self):
        assert count_points(1, 1, 5) == (9, -3)

    def test_exhaustive_oracle(self):
        for a, b, p in ((1, 1, 5), (1, 2, 5), (3, 4, 7), (2, 5, 11)):
            pts = 1
            for x in range(p):
                for y in range(p):
                    if (y * y - (x**3 + a * x + b)) % p == 0:
                        pts += 1
            count, a1 = count_points(a, b, p)
            assert count == pts
            assert a1 == p + 1 - pts
            assert a1 * a1 <= 4 * p

    def test_guards(self):
        with pytest.raises(PTooSmall):
            count_points(1, 1, 3)
        with pytest.raises(SingularConstants):
            count_points(0, 0, 5)
        with pytest.raises(RangeTooLarge):
            count_points(1, 1, 20023)

    def test_composite_rejected(self):
        with pytest.raises(ValueError):
            count_points(1, 1, 15)


class TestTraces:
    def test_recurrence_fixture(self):
        ts = trace_sequence(-3, 5, 3)
        assert ts.values == (-3, -1, 18)
        assert ts.values[1] == (-3) ** 2 - 2 * 5
        assert ts.values[2] == (-3) * ts.values[1] - 5 * (-3)

    def test_weil_bound_enforced(self):
        with pytest.raises(HasseViolation):
            trace_sequence(5, 5, 2)
        for n, a in enumerate(trace_sequence(-3, 5, 8).values, start=1):
            assert a * a <= 4 * 5**n


class TestLegendre:
    def test_fixtures(self):
        assert legendre_symbol(T5, p5(1, 1)) == 1
        assert legendre_symbol(T5, p5(2, 1)) == -1
        assert legendre_symbol(T5, T5) == 0

    def test_reducible_modulus_rejected(self):
        with pytest.raises(NotIrreducible):
            legendre_symbol(T5, p5(4, 0, 1))

    @pytest.mark.parametrize("p", [5, 7])
    def test_exhaustive_square_oracle(self, p):
        k = PrimeField(p)
        for dpi in (1, 2):
            for pi in enumerate_irreducibles(p, dpi):
                squares = set()
                for cs in itertools.product(range(p), repeat=dpi):
                    f = Poly(k, list(cs))
                    squares.add(tuple((f * f % pi).raw_coeffs))
                for cs in itertools.product(range(p), repeat=dpi):
                    d = Poly(k, list(cs))
                    r = d % pi
                    if r.is_zero:
                        want = 0
                    elif tuple(r.raw_coeffs) in squares:
                        want = 1
                    else:
                        want = -1
                    assert legendre_symbol(d, pi) == want


class TestReciprocity:
    def test_degenerate_sign_for_q5(self):
        holds, _, _, sign = reciprocity_check(p5(1, 1), p5(2, 1))
        assert holds and sign == 1

    def test_odd_half_q_sign(self):
        lin = enumerate_irreducibles(7, 1)
        holds, _, _, sign = reciprocity_check(lin[0], lin[1])
        assert holds and sign == -1

    def test_exhaustive_low_degree(self):
        for d1 in (1, 2):
            for d2 in (1, 2):
                for da in enumerate_irreducibles(7, d1):
                    for pb in enumerate_irreducibles(7, d2):
                        if poly_gcd(da, pb).degree > 0:
                            continue
                        holds, _, _, _ = reciprocity_check(da, pb)
                        assert holds

    def test_guards(self):
        with pytest.raises(DeltaNotIrreducible):
            reciprocity_check(p5(4, 0, 1), T5)
        with pytest.raises(NotCoprime):
            reciprocity_check(T5, T5)


class TestTwistSpec:
    def test_canonical_point_and_default_q(self, spec):
        assert spec.q_dependent
        assert spec.P.x.num == T5 * spec.delta
        assert spec.Q == scalar_mul(spec.curve, 2, spec.P)

    def test_explicit_points(self, spec):
        other = make_twist_spec(5, 1, 1, spec.delta, P=spec.P, Q=spec.Q)
        assert not other.q_dependent

    def test_doctored_point_rejected(self, spec):
        ff = spec.curve.base
        bad = CurvePoint(spec.P.x, spec.P.y + ff.one())
        with pytest.raises(PointNotOnCurve):
            make_twist_spec(5, 1, 1, spec.delta, P=bad)
        with pytest.raises(PointNotOnCurve):
            make_twist_spec(5, 1, 1, spec.delta, Q=bad)

    def test_guards(self):
        with pytest.raises(PTooSmall):
            make_twist_spec(3, 1, 1, Poly(PrimeField(3), [1, 1, 0, 1]))
        with pytest.raises(BadDelta):
            make_twist_spec(5, 1, 1, p5(1, 1))
        with pytest.raises(TypeError):
            make_twist_spec(5, 1, 1, "T^3 + T + 1")
        with pytest.raises(TypeError):
            make_twist_spec(5, 1, 1, Poly(F7, [1, 1, 0, 1]))


class TestClassification:
    def test_linear_primes(self, spec):
        sp, sm, exc = classify_primes(spec, 1)
        assert [str(x) for x in sp] == ["T", "T + 1", "T + 2", "T + 3"]
        assert [str(x) for x in sm] == ["T + 4"]
        assert exc == []

    def test_cubics_exclude_delta(self, spec):
        sp, sm, exc = classify_primes(spec, 3)
        assert [e[0] for e in exc] == [spec.delta]
        assert exc[0][1] == "divides delta"
        assert len(sp) + len(sm) == 40 - 1

    def test_partition_is_disjoint(self, spec):
        sp, sm, exc = classify_primes(spec, 2)
        names = [tuple(x.raw_coeffs) for x in sp + sm] + [
            tuple(e[0].raw_coeffs) for e in exc
        ]
        assert len(names) == len(set(names))
        assert len(names) == len(enumerate_irreducibles(5, 2))


class TestLowerBound:
    def test_degree_one(self, spec):
        reps = lower_bound_experiment(spec, 1)
        assert [r.sign for r in reps] == [1, -1]
        rp, rm = reps
        assert (rp.n, rm.n) == (9, 3)
        assert len(rp.rows) == 4 and rp.sum_deg == 4
        assert len(rm.rows) == 1 and rm.sum_deg == 1
        assert all(r.annihilates_P and r.annihilates_Q for r in rp.rows + rm.rows)
        assert rp.comparison == (9, 4.5, 2.5, 4)

    def test_degree_two_drops_multiple_of_p(self, spec):
        reps = lower_bound_experiment(spec, 2)
        assert [r.sign for r in reps] == [1]
        assert reps[0].n == 27
        assert len(reps[0].rows) == len(classify_primes(spec, 2)[0])
        assert all(r.annihilates_P and r.annihilates_Q for r in reps[0].rows)

    def test_degree_three_mass_and_floor(self, spec):
        reps = lower_bound_experiment(spec, 3)
        assert [(r.sign, r.n) for r in reps] == [(1, 108), (-1, 144)]
        total = sum(r.sum_deg for r in reps)
        assert total == 3 * 39
        floor = 125 / 2 - 3 * math.sqrt(125) - 3
        assert reps[0].sum_deg >= floor

    def test_annihilation_direct(self, spec):
        assert annihilation_check(spec, T5, 9) == (True, True)
        Ered, Pred = reduce_point_mod(spec.curve, spec.P, T5)
        assert scalar_mul(Ered, 9, Pred).is_infinity
        assert not scalar_mul(Ered, 3, Pred).is_infinity

    def test_gcd_collects_classified_primes(self, spec):
        E = spec.curve
        d9p = denominator_of(E, scalar_mul(E, 9, spec.P)).D
        d9q = denominator_of(E, scalar_mul(E, 9, spec.Q)).D
        g = poly_gcd(d9p, d9q)
        sp, _, _ = classify_primes(spec, 1)
        for pi in sp:
            assert (g % pi).is_zero


class TestPPower:
    def test_exponent_zero_is_identity(self, spec):
        rep = ppower_check(spec, 3, 0)
        assert rep.deg_base == rep.deg_lifted and rep.holds and not rep.vacuous

    def test_lift_multiplies_degree(self, spec):
        rep = ppower_check(spec, 3, 1)
        assert rep.holds and not rep.vacuous
        assert rep.deg_base > 0
        assert rep.bound == 5 * rep.deg_base
        assert rep.deg_lifted >= rep.bound

    def test_degree_guard(self, spec):
        with pytest.raises(DegreeGuard):
            ppower_check(spec, 3, 3)

    def test_trivial_base_is_vacuous(self, spec):
        rep = ppower_check(spec, 1, 1)
        assert rep.vacuous and rep.holds and rep.deg_base == 0
