"""Positive-characteristic experiments on quadratic twists over F_p(T).

The pipeline here starts from a twist y^2 = x^3 + a*delta^2*x + b*delta^3
over F_p(T) with a marked point, classifies the degree-N monic irreducibles
pi by the quadratic character of delta, and verifies that a single integer
(one of the two candidate group orders q^N + 1 -+ a_N) annihilates the
reduction of the point modulo every prime in the matching class. Summing
deg pi over the class then gives a lower bound on the common divisor of
the division denominators that grows linearly in q^N, which is the whole
point of the exercise.

Group orders of the reductions never have to be counted one prime at a
time: a point count over the constant field F_p pins down the trace a_1,
and the second-order recurrence a_{N+1} = a_1 a_N - q a_{N-1} produces
the trace over every extension. The quadratic character of delta at pi
decides which of the two twisted orders applies.

A separate check lifts a base multiple through powers of p and compares
common-divisor degrees before and after, exercising the inseparability
mechanism that lets the lower bound be amplified by p^i.
"""

import math
from dataclasses import dataclass

from .algebra.fields import PrimeField
from .algebra.poly import (
    Poly,
    enumerate_irreducibles,
    poly_gcd,
    poly_is_irreducible,
    poly_pow_mod,
)
from .curve import (
    CurvePoint,
    curve_invariants,
    nontorsion_evidence,
    on_curve,
    quadratic_twist,
    reduce_point_mod,
    scalar_mul,
)
from .eds import denominator_of
from .errors import (
    BadDelta,
    DegreeGuard,
    DeltaNotIrreducible,
    HasseViolation,
    NoAdmissibleN,
    NotCoprime,
    NotIrreducible,
    PointNotOnCurve,
    PTooSmall,
    RangeTooLarge,
    SingularConstants,
    ValidationError,
)

POINT_COUNT_GUARD = 10**4

# Ceiling on deg(delta) * n^2, the projected size of the division
# denominator at index n. The default admits n = base_n * p^i up to
# about 50 for a cubic delta.
DEFAULT_DEGREE_GUARD = 7500


@dataclass(frozen=True)
class TwistSpec:
    """A twist over F_p(T) with marked points, ready for the experiments.

    q_dependent records whether Q was defaulted to 2P, in which case any
    annihilation statement about Q is a corollary of the one about P and
    the reports say nothing independent.
    """

    p: int
    a: int
    b: int
    delta: Poly
    twist: object
    P: CurvePoint
    Q: CurvePoint
    q_dependent: bool

    @property
    def curve(self):
        return self.twist.curve


@dataclass(frozen=True)
class TraceSeq:
    """Frobenius traces a_N for N = 1..len(values) over F_{q^N}."""

    q: int
    a1: int
    values: tuple


@dataclass(frozen=True)
class PrimeRow:
    """One good prime's annihilation record.

    n_pi is the order of the reduced group predicted by the trace and
    the character: q^N + 1 - legendre * a_N.
    """

    pi: Poly
    degree: int
    legendre: int
    n_pi: int
    annihilates_P: bool
    annihilates_Q: bool


@dataclass(frozen=True)
class FFReport:
    """Outcome of the lower-bound experiment for one sign class.

    comparison lays out (n, n/2, q^N/2, sum_deg) so the ratio of the
    measured degree sum to the annihilating index is visible at a
    glance; the heuristic value of that ratio is about one half and it
    is reported, never asserted.
    """

    N: int
    sign: int
    n: int
    rows: tuple
    excluded: tuple
    sum_deg: int
    comparison: tuple
    q_dependent: bool


@dataclass(frozen=True)
class PPowerReport:
    """Common-divisor degrees before and after scaling by p^i."""

    base_n: int
    i: int
    deg_base: int
    deg_lifted: int
    bound: int
    holds: bool
    vacuous: bool


def make_twist_spec(p, a, b, delta, P=None, Q=None):
    """Assemble a TwistSpec over F_p(T), validating every ingredient.

    a and b are reduced into 0..p-1; the twist construction enforces
    that delta is monic, squarefree, nonconstant, that a*b != 0 in F_p,
    and that the constants are nonsingular. When delta = T^3 + aT + b
    the twist carries the canonical point (T*delta, delta^2) and P may
    be omitted; otherwise P is required. Q defaults to 2P. Both points
    must pass the empirical nontorsion check.
    """
    if not isinstance(p, int) or p < 5:
        raise PTooSmall(f"characteristic must be a prime >= 5, got {p!r}")
    k = PrimeField(p)
    a %= p
    b %= p
    if not isinstance(delta, Poly) or delta.field != k:
        raise TypeError(f"delta must be a polynomial over F_{p}")
    twist = quadratic_twist(k.elem(a), k.elem(b), delta)
    E = twist.curve
    if P is None:
        P = twist.point
        if P is None:
            raise BadDelta(
                "delta is not T^3 + a*T + b, so there is no canonical "
                "point; pass P explicitly"
            )
    else:
        if not on_curve(E, P):
            raise PointNotOnCurve("supplied P does not satisfy the twist equation")
    q_dependent = Q is None
    if Q is None:
        Q = scalar_mul(E, 2, P, check=False)
    elif not on_curve(E, Q):
        raise PointNotOnCurve("supplied Q does not satisfy the twist equation")
    for name, point in (("P", P), ("Q", Q)):
        if not nontorsion_evidence(E, point):
            raise ValidationError(name, "failed the empirical nontorsion check")
    return TwistSpec(p, a, b, delta, twist, P, Q, q_dependent)


def count_points(a, b, p):
    """Point count of y^2 = x^3 + ax + b over F_p, returned as (count, a1).

    Exhaustive: each x contributes 1 + chi(x^3 + ax + b) points where
    chi is the quadratic character of F_p, and infinity contributes one
    more. a1 = p + 1 - count is the trace. Guarded to p <= 10^4.
    """
    if not isinstance(p, int) or p < 5:
        raise PTooSmall(f"characteristic must be a prime >= 5, got {p!r}")
    if p > POINT_COUNT_GUARD:
        raise RangeTooLarge(f"exhaustive count wants p <= {POINT_COUNT_GUARD}")
    PrimeField(p)  # validates primality
    a %= p
    b %= p
    if (4 * a * a * a + 27 * b * b) % p == 0:
        raise SingularConstants(f"4a^3 + 27b^2 = 0 in F_{p}")
    half = (p - 1) // 2
    count = p + 1
    for x in range(p):
        t = (x * x * x + a * x + b) % p
        if t == 0:
            continue
        chi = pow(t, half, p)
        count += 1 if chi == 1 else -1
    a1 = p + 1 - count
    if a1 * a1 > 4 * p:
        raise HasseViolation(f"|{a1}| > 2*sqrt({p})")
    return count, a1


def trace_sequence(a1, q, n_max):
    """Traces over F_{q^N} for N = 1..n_max from the base trace a1.

    Uses a_{N+1} = a1 * a_N - q * a_{N-1} with a_0 = 2, checking the
    Weil bound |a_N| <= 2 q^{N/2} at every step.
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    if a1 * a1 > 4 * q:
        raise HasseViolation(f"base trace {a1} violates |a1| <= 2*sqrt({q})")
    values = []
    prev, cur = 2, a1
    qn = q
    for n in range(1, n_max + 1):
        if cur * cur > 4 * qn:
            raise HasseViolation(f"a_{n} = {cur} violates the Weil bound")
        values.append(cur)
        prev, cur = cur, a1 * cur - q * prev
        qn *= q
    return TraceSeq(q, a1, tuple(values))


def legendre_symbol(delta, pi):
    """Quadratic character of delta modulo the irreducible pi.

    Returns +1 when delta is a nonzero square in F_p[T]/(pi), -1 when it
    is a nonsquare, 0 when pi divides delta. Computed by the Euler
    criterion: delta^((q^N - 1)/2) mod pi with q = p and N = deg pi.
    """
    if not isinstance(delta, Poly) or not isinstance(pi, Poly):
        raise TypeError("legendre_symbol wants two polynomials")
    if delta.field != pi.field:
        raise TypeError("delta and pi live over different fields")
    k = pi.field
    if not isinstance(k, PrimeField):
        raise TypeError("quadratic characters need a prime coefficient field")
    if k.p < 5:
        raise PTooSmall("characteristic must be at least 5")
    if not poly_is_irreducible(pi):
        raise NotIrreducible(f"{pi!r} factors over F_{k.p}")
    r = delta % pi
    if r.is_zero:
        return 0
    e = (k.p ** pi.degree - 1) // 2
    s = poly_pow_mod(r, e, pi)
    if s == Poly(k, [1]):
        return 1
    if s == Poly(k, [k.p - 1]):
        return -1
    raise AssertionError("Euler criterion returned a value other than +-1")


def reciprocity_check(delta, pi):
    """Verify the quadratic reciprocity relation for a pair of irreducibles.

    Both arguments must be monic irreducible and coprime. The relation
    ties (delta | pi) to (pi | delta) through the sign
    (-1)^(((q-1)/2) * deg(delta) * deg(pi)). Returns a tuple
    (holds, lhs, rhs, sign).
    """
    if not isinstance(delta, Poly) or not isinstance(pi, Poly):
        raise TypeError("reciprocity_check wants two polynomials")
    if delta.field != pi.field:
        raise TypeError("delta and pi live over different fields")
    if not poly_is_irreducible(delta):
        raise DeltaNotIrreducible(f"{delta!r} factors, so both symbols are not defined")
    if poly_gcd(delta, pi).degree > 0:
        raise NotCoprime("delta and pi share a factor")
    lhs = legendre_symbol(delta, pi)
    rhs = legendre_symbol(pi, delta)
    q = delta.field.p
    exponent = ((q - 1) // 2) * delta.degree * pi.degree
    sign = -1 if exponent % 2 else 1
    return lhs == sign * rhs, lhs, rhs, sign


def classify_primes(spec, N):
    """Partition the degree-N monic irreducibles by the character of delta.

    Returns (s_plus, s_minus, excluded) where the first two lists hold
    the primes of good reduction with (delta | pi) = +1 and -1, and
    excluded holds (pi, reason) pairs for primes dividing delta or the
    discriminant. Ordering is lexicographic throughout.
    """
    disc_num = curve_invariants(spec.curve).disc.num
    s_plus, s_minus, excluded = [], [], []
    for pi in enumerate_irreducibles(spec.p, N):
        if (spec.delta % pi).is_zero:
            excluded.append((pi, "divides delta"))
            continue
        if (disc_num % pi).is_zero:
            excluded.append((pi, "bad reduction"))
            continue
        if legendre_symbol(spec.delta, pi) == 1:
            s_plus.append(pi)
        else:
            s_minus.append(pi)
    return s_plus, s_minus, excluded


def annihilation_check(spec, pi, n):
    """Whether n kills the reductions of P and Q modulo pi.

    Reduces the twist and both points modulo the irreducible pi and
    tests n * Pbar = O and n * Qbar = O in the reduced group. Primes of
    bad reduction are rejected by the reduction itself.
    """
    if n < 1:
        raise ValueError("n must be positive")
    Ered, Pred = reduce_point_mod(spec.curve, spec.P, pi)
    _, Qred = reduce_point_mod(spec.curve, spec.Q, pi)
    ann_p = scalar_mul(Ered, n, Pred, check=False).is_infinity
    ann_q = scalar_mul(Ered, n, Qred, check=False).is_infinity
    return ann_p, ann_q


def _hasse_interval_check(n_pi, qn):
    return (n_pi - (qn + 1)) ** 2 <= 4 * qn


def lower_bound_experiment(spec, N):
    """Run the annihilation experiment at degree N, one report per sign.

    The candidate annihilating indices are n = q^N + 1 -+ a_N; each one
    coprime to p is run against its sign class (+ pairs with the minus
    sign in the formula, because (delta | pi) = +1 means the reduction
    is the untwisted curve with trace a_N). Annihilation must hold for
    every good prime in the class, and the degree sum must clear the
    floor q^N / 2 - 3 q^{N/2} minus the excluded mass; both are hard
    assertions, since a failure means the trace bookkeeping is wrong.
    Reports come back in the order (+1, -1), skipping inadmissible
    signs; if p divides both candidates, NoAdmissibleN is raised.
    """
    if N < 1:
        raise ValueError("N must be at least 1")
    q = spec.p
    _, a1 = count_points(spec.a, spec.b, spec.p)
    a_n = trace_sequence(a1, q, N).values[N - 1]
    qn = q**N
    s_plus, s_minus, excluded = classify_primes(spec, N)
    classes = {1: s_plus, -1: s_minus}
    excluded_mass = sum(pi.degree for pi, _ in excluded)
    floor = qn / 2 - 3 * math.sqrt(qn) - excluded_mass

    reports = []
    for sign in (1, -1):
        n = qn + 1 - sign * a_n
        if n % spec.p == 0:
            continue
        if not _hasse_interval_check(n, qn):
            raise HasseViolation(f"predicted order {n} outside the Weil interval")
        rows = []
        sum_deg = 0
        for pi in classes[sign]:
            ann_p, ann_q = annihilation_check(spec, pi, n)
            rows.append(PrimeRow(pi, N, sign, n, ann_p, ann_q))
            sum_deg += pi.degree
        if not all(r.annihilates_P and r.annihilates_Q for r in rows):
            bad = [r.pi for r in rows if not (r.annihilates_P and r.annihilates_Q)]
            raise AssertionError(f"annihilation failed at {bad}; trace bookkeeping is wrong")
        if rows and sum_deg < floor:
            raise AssertionError(
                f"degree sum {sum_deg} fell below the floor {floor:.2f}"
            )
        reports.append(
            FFReport(
                N=N,
                sign=sign,
                n=n,
                rows=tuple(rows),
                excluded=tuple(excluded),
                sum_deg=sum_deg,
                comparison=(n, n / 2, qn / 2, sum_deg),
                q_dependent=spec.q_dependent,
            )
        )
    if not reports:
        raise NoAdmissibleN(f"p = {spec.p} divides both candidate orders at N = {N}")
    return reports


def ppower_check(spec, base_n, i, guard_degree=DEFAULT_DEGREE_GUARD):
    """Compare common-divisor degrees at base_n and p^i * base_n.

    Computes R = base_n * P and S = base_n * Q on the twist, takes the
    gcd of their division denominators, then scales both points by p^i
    and takes it again. Inseparability of multiplication by p forces
    deg gcd to grow at least by the factor p^i, which is asserted. When
    the base gcd is trivial the bound holds vacuously and the report
    says so. i = 0 is allowed and degenerates to an equality.
    """
    if base_n < 1:
        raise ValueError("base_n must be positive")
    if i < 0:
        raise ValueError("i must be nonnegative")
    n_full = base_n * spec.p**i
    projected = spec.delta.degree * n_full * n_full
    if projected > guard_degree:
        raise DegreeGuard(
            f"projected denominator degree {projected} exceeds {guard_degree}"
        )
    E = spec.curve
    R = scalar_mul(E, base_n, spec.P, check=False)
    S = scalar_mul(E, base_n, spec.Q, check=False)
    g0 = poly_gcd(denominator_of(E, R).D, denominator_of(E, S).D)
    Rl = scalar_mul(E, spec.p**i, R, check=False)
    Sl = scalar_mul(E, spec.p**i, S, check=False)
    g1 = poly_gcd(denominator_of(E, Rl).D, denominator_of(E, Sl).D)
    bound = spec.p**i * g0.degree
    holds = g1.degree >= bound
    if not holds:
        raise AssertionError(
            f"deg gcd dropped below the p-power bound: {g1.degree} < {bound}"
        )
    return PPowerReport(
        base_n=base_n,
        i=i,
        deg_base=g0.degree,
        deg_lifted=g1.degree,
        bound=bound,
        holds=holds,
        vacuous=g0.degree == 0,
    )
