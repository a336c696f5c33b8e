"""Weierstrass curves, the group law, quadratic twists, and reduction.

Curves live over any base the package knows: Q, a prime field, an
extension field, or a function field k(T). Coordinates are FieldElem or
RatFunc values; the chord-and-tangent formulas below are written against
the operator interface both share, so one implementation of the group
law serves every base.

The long-form law, for reference (P1 = (x1, y1), P2 = (x2, y2)):

    distinct x:  lam = (y2 - y1)/(x2 - x1)
    doubling:    lam = (3*x1^2 + 2*a2*x1 + a4 - a1*y1)/(2*y1 + a1*x1 + a3)
    x3 = lam^2 + a1*lam - a2 - x1 - x2
    y3 = lam*(x1 - x3) - y1 - a1*x3 - a3
    -(x, y) = (x, -y - a1*x - a3)
"""

from dataclasses import dataclass

from .algebra.fields import ExtField, FieldDescriptor, PrimeField, Rationals
from .algebra.poly import (
    Poly,
    poly_constant,
    poly_div_exact,
    poly_gen,
    poly_is_irreducible,
    poly_is_squarefree,
    poly_sqrt,
)
from .algebra.ratfunc import FunctionField, RatFunc, _normalize
from .errors import (
    BadDelta,
    BadReduction,
    ForbiddenJInvariant,
    NonIntegralModel,
    NotIrreducible,
    PointNotOnCurve,
    PTooSmall,
    SingularConstants,
    SingularCurve,
)


class CurvePoint:
    """A point on a Weierstrass curve: affine (x, y) or the identity.

    The private _droot slot caches the monic square root of the
    x-denominator for points over a function field (the D with
    den(x) = D^2 and den(y) = D^3 on integral models); the arithmetic
    fast path fills it in so chains never recompute square roots.
    """

    __slots__ = ("x", "y", "infinite", "_droot")

    def __init__(self, x, y):
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "infinite", False)
        object.__setattr__(self, "_droot", None)

    def __setattr__(self, name, value):
        raise AttributeError("points are immutable")

    @classmethod
    def infinity(cls):
        self = object.__new__(cls)
        object.__setattr__(self, "x", None)
        object.__setattr__(self, "y", None)
        object.__setattr__(self, "infinite", True)
        object.__setattr__(self, "_droot", None)
        return self

    @property
    def is_infinity(self):
        return self.infinite

    def __eq__(self, other):
        if not isinstance(other, CurvePoint):
            return NotImplemented
        if self.infinite or other.infinite:
            return self.infinite and other.infinite
        return self.x == other.x and self.y == other.y

    def __hash__(self):
        if self.infinite:
            return hash("point-at-infinity")
        return hash((self.x, self.y))

    def __repr__(self):
        if self.infinite:
            return "CurvePoint(infinity)"
        return f"CurvePoint({self.x!r}, {self.y!r})"


@dataclass(frozen=True)
class CurveInvariants:
    b2: object
    b4: object
    b6: object
    b8: object
    c4: object
    disc: object
    j: object
    j_is_constant: bool


class WeierstrassCurve:
    """y^2 + a1*x*y + a3*y = x^3 + a2*x^2 + a4*x + a6 over a base."""

    __slots__ = ("base", "a1", "a2", "a3", "a4", "a6")

    def __init__(self, base, a1, a2, a3, a4, a6):
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "a1", a1)
        object.__setattr__(self, "a2", a2)
        object.__setattr__(self, "a3", a3)
        object.__setattr__(self, "a4", a4)
        object.__setattr__(self, "a6", a6)

    def __setattr__(self, name, value):
        raise AttributeError("curves are immutable")

    @property
    def is_short(self):
        zero = self.base.zero()
        return self.a1 == zero and self.a2 == zero and self.a3 == zero

    def __eq__(self, other):
        if not isinstance(other, WeierstrassCurve):
            return NotImplemented
        return self.base == other.base and all(
            getattr(self, k) == getattr(other, k)
            for k in ("a1", "a2", "a3", "a4", "a6")
        )

    def __hash__(self):
        return hash((self.base, self.a1, self.a2, self.a3, self.a4, self.a6))

    def __repr__(self):
        return (
            f"WeierstrassCurve(a1={self.a1!r}, a2={self.a2!r}, a3={self.a3!r}, "
            f"a4={self.a4!r}, a6={self.a6!r})"
        )


def curve_new(base, a1, a2, a3, a4, a6):
    """Validated curve constructor.

    Function-field bases additionally require integral coefficients
    (polynomials, not proper rational functions), which reduction and
    denominator extraction both rely on.
    """
    if not isinstance(base, (FieldDescriptor, FunctionField)):
        raise TypeError("base must be a field descriptor or a function field")
    coeffs = [base.elem(v) for v in (a1, a2, a3, a4, a6)]
    if isinstance(base, FunctionField):
        for name, c in zip(("a1", "a2", "a3", "a4", "a6"), coeffs):
            if c.den.degree > 0:
                raise NonIntegralModel(f"coefficient {name} has a nonconstant denominator")
    curve = WeierstrassCurve(base, *coeffs)
    if _disc(curve) == base.zero():
        raise SingularCurve("discriminant vanishes")
    return curve


def _disc(E):
    a1, a2, a3, a4, a6 = E.a1, E.a2, E.a3, E.a4, E.a6
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
    return -(b2 * b2 * b8) - 8 * (b4 * b4 * b4) - 27 * (b6 * b6) + 9 * (b2 * b4 * b6)


def curve_invariants(E):
    a1, a2, a3, a4, a6 = E.a1, E.a2, E.a3, E.a4, E.a6
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
    c4 = b2 * b2 - 24 * b4
    disc = -(b2 * b2 * b8) - 8 * (b4 * b4 * b4) - 27 * (b6 * b6) + 9 * (b2 * b4 * b6)
    j = (c4 * c4 * c4) / disc
    constant = j.is_constant if isinstance(j, RatFunc) else True
    return CurveInvariants(b2, b4, b6, b8, c4, disc, j, constant)


def on_curve(E, P):
    if P.is_infinity:
        return True
    x, y = P.x, P.y
    lhs = y * y + E.a1 * x * y + E.a3 * y
    rhs = x * x * x + E.a2 * x * x + E.a4 * x + E.a6
    return lhs == rhs


def neg(E, P):
    if P.is_infinity:
        return P
    R = CurvePoint(P.x, -P.y - E.a1 * P.x - E.a3)
    if P._droot is not None:
        object.__setattr__(R, "_droot", P._droot)
    return R


def add(E, P, Q, check=True):
    if check:
        for R in (P, Q):
            if not on_curve(E, R):
                raise PointNotOnCurve(f"{R!r} does not satisfy the curve equation")
    if P.is_infinity:
        return Q
    if Q.is_infinity:
        return P
    if isinstance(E.base, FunctionField):
        if E.is_short:
            return _add_short(E, P, Q)
        return _add_fractions(E, P, Q)
    x1, y1 = P.x, P.y
    x2, y2 = Q.x, Q.y
    if x1 == x2:
        if y2 == -y1 - E.a1 * x1 - E.a3:
            return CurvePoint.infinity()
        lam = (3 * x1 * x1 + 2 * E.a2 * x1 + E.a4 - E.a1 * y1) / (
            2 * y1 + E.a1 * x1 + E.a3
        )
    else:
        lam = (y2 - y1) / (x2 - x1)
    x3 = lam * lam + E.a1 * lam - E.a2 - x1 - x2
    y3 = lam * (x1 - x3) - y1 - E.a1 * x3 - E.a3
    return CurvePoint(x3, y3)


def _add_fractions(E, P, Q):
    """The same chord-and-tangent formula over k(T), assembled on common
    denominators so each output coordinate is normalized exactly once.

    Rational-function coordinates make every intermediate sum or product
    trigger a gcd cancellation if done through RatFunc operators; on the
    big chains this module exists to produce, those intermediates
    dominate the runtime. Here lam, x3, y3 are built as raw Poly
    numerator/denominator pairs and handed to RatFunc at the end.
    """
    a1, a2, a3, a4 = (E.a1.num, E.a2.num, E.a3.num, E.a4.num)
    x1n, x1d = P.x.num, P.x.den
    y1n, y1d = P.y.num, P.y.den
    x2n, x2d = Q.x.num, Q.x.den
    y2n, y2d = Q.y.num, Q.y.den
    if P.x == Q.x:
        if Q.y == -P.y - E.a1 * P.x - E.a3:
            return CurvePoint.infinity()
        # lam = (3x^2 + 2a2*x + a4 - a1*y) / (2y + a1*x + a3) over x1d^2*y1d
        xd2 = x1d * x1d
        ln = (
            3 * (x1n * x1n * y1d)
            + 2 * (a2 * (x1n * (x1d * y1d)))
            + a4 * (xd2 * y1d)
            - a1 * (y1n * xd2)
        )
        ld = 2 * (y1n * xd2) + a1 * (x1n * (x1d * y1d)) + a3 * (xd2 * y1d)
    else:
        # lam = (y2 - y1)/(x2 - x1) over the obvious common denominators
        ln = (y2n * y1d - y1n * y2d) * (x1d * x2d)
        ld = (x2n * x1d - x1n * x2d) * (y1d * y2d)
    lam = RatFunc(ln, ld)
    ln, ld = lam.num, lam.den

    # x3 = lam^2 + a1*lam - a2 - x1 - x2 over ld^2 * x1d * x2d
    ld2 = ld * ld
    xx = x1d * x2d
    ld2xx = ld2 * xx
    x3n = (
        (ln * ln) * xx
        + a1 * ((ln * ld) * xx)
        - a2 * ld2xx
        - (x1n * (ld2 * x2d))
        - (x2n * (ld2 * x1d))
    )
    X3 = RatFunc(x3n, ld2xx)
    x3n, x3d = X3.num, X3.den

    # y3 = lam*(x1 - x3) - y1 - a1*x3 - a3 over ld * x1d * x3d * y1d
    y3n = (
        (ln * (x1n * x3d - x3n * x1d)) * y1d
        - y1n * (ld * (x1d * x3d))
        - a1 * (x3n * (ld * (x1d * y1d)))
        - a3 * (ld * ((x1d * x3d) * y1d))
    )
    y3d = ld * ((x1d * x3d) * y1d)
    return CurvePoint(X3, RatFunc(y3n, y3d))


def _den_root(P):
    """The monic D with den(x) = D^2 and den(y) = D^3, cached on the point.

    On an integral model every affine point has this shape: a pole of x
    at a finite place forces val(x) = -2m and val(y) = -3m there, so the
    two denominators share one monic root. The root is verified on first
    extraction (poly_sqrt checks its square, and the cubic relation is
    checked directly) and then rides along on the point.
    """
    D = P._droot
    if D is None:
        D = poly_sqrt(P.x.den)
        if P.y.den != P.x.den * D:
            raise PointNotOnCurve("denominators do not come from an integral model point")
        object.__setattr__(P, "_droot", D)
    return D


def _add_short(E, P, Q):
    """The group law on a short model over k(T), written in terms of the
    shared denominator root D of each point.

    With x = A/E and y = B/F where E = D^2 and F = D^3, the slope is
    lam = ln/(wr*D1*D2) for a reduced pair (ln, wr): U/W reduced, with
    U = B2*F1 - B1*F2 and W = A2*E1 - A1*E2 (tangent case analogous,
    with D2 = 1). The factor D1*D2 is never multiplied out; the
    formulas below only ever need its square E1*E2 and the combination
    D1*D2*E1 = F1*D2, so every intermediate stays as small as the
    algebra allows. The y-coordinate skips gcd extraction entirely: its
    reduced denominator is forced to be E3*D3 on an integral model, so
    the numerator comes out by certified exact division, and any failure
    of that tower is raised rather than repaired.
    """
    A1, E1 = P.x.num, P.x.den
    B1, F1 = P.y.num, P.y.den
    if P.x == Q.x:
        if Q.y.num == -B1:
            return CurvePoint.infinity()
        _den_root(P)
        # tangent: lam = (3A^2 + a4*E^2) / (2*B*D); reduce against 2B only
        ln, wr = _normalize(3 * (A1 * A1) + E.a4.num * (E1 * E1), 2 * B1)
        wr2 = wr * wr
        # x3 = lam^2 - 2*x1 over wr^2 * E1
        x3n_raw = ln * ln - 2 * (A1 * wr2)
        x3d_raw = wr2 * E1
        m = None
    else:
        _den_root(P)
        m = _den_root(Q)
        A2, E2 = Q.x.num, Q.x.den
        B2, F2 = Q.y.num, Q.y.den
        ln, wr = _normalize(B2 * F1 - B1 * F2, A2 * E1 - A1 * E2)
        wr2 = wr * wr
        # x3 = lam^2 - x1 - x2 over wr^2 * E1 * E2
        x3n_raw = ln * ln - (A1 * E2 + A2 * E1) * wr2
        x3d_raw = wr2 * (E1 * E2)
    A3, E3 = _normalize(x3n_raw, x3d_raw)
    D3 = poly_sqrt(E3)
    # y3 = lam*(x1 - x3) - y1 over the raw denominator wr*D2*E3*F1, whose
    # reduced form is exactly E3*D3; divide the known parts out.
    S = A1 * E3 - A3 * E1
    wm = wr if m is None else wr * m
    y3n_raw = ln * S - B1 * (wm * E3)
    cofactor = poly_div_exact(wm * F1, D3)
    B3 = None if cofactor is None else poly_div_exact(y3n_raw, cofactor)
    if B3 is None:
        raise PointNotOnCurve("group law output violated the denominator tower")
    R = CurvePoint(
        RatFunc(A3, E3, _normalized=True),
        RatFunc(B3, E3 * D3, _normalized=True),
    )
    object.__setattr__(R, "_droot", D3)
    return R


def scalar_mul(E, n, P, check=True):
    """n*P by double and add; negative n through point negation."""
    if not isinstance(n, int):
        raise TypeError("multiplier must be an integer")
    if check and not on_curve(E, P):
        raise PointNotOnCurve(f"{P!r} does not satisfy the curve equation")
    if n < 0:
        return scalar_mul(E, -n, neg(E, P), check=False)
    result = CurvePoint.infinity()
    addend = P
    while n:
        if n & 1:
            result = add(E, result, addend, check=False)
        n >>= 1
        if n:
            addend = add(E, addend, addend, check=False)
    return result


@dataclass(frozen=True)
class TwistData:
    a: object
    b: object
    delta: Poly
    curve: WeierstrassCurve
    point: CurvePoint


def quadratic_twist(a, b, delta):
    """The curve y^2 = x^3 + a*delta^2*x + b*delta^3 over k(T).

    delta must be a monic squarefree nonconstant polynomial over k; a
    and b are constants with a*b != 0 (keeping the j-invariant away from
    the two special values) and 4a^3 + 27b^2 != 0. When delta happens to
    equal T^3 + a*T + b the twist carries the obvious rational point
    (T*delta, delta^2), returned alongside; otherwise point is None.
    """
    if not isinstance(delta, Poly):
        raise TypeError("delta must be a polynomial")
    k = delta.field
    if not isinstance(k, (PrimeField, Rationals)):
        raise TypeError("delta must live over Q or a prime field")
    if k.characteristic in (2, 3):
        raise PTooSmall("characteristic must be 0 or at least 5")
    av = k.elem(a)
    bv = k.elem(b)
    if av.is_zero or bv.is_zero:
        raise ForbiddenJInvariant(
            "a*b = 0 lands on a special j-invariant; both constants must be nonzero"
        )
    if (4 * av * av * av + 27 * bv * bv).is_zero:
        raise SingularConstants("4a^3 + 27b^2 = 0")
    if delta.degree < 1:
        raise BadDelta(
            "constant delta gives the trivial twist; the statements hold vacuously"
        )
    if not delta.is_monic:
        raise BadDelta("delta must be monic")
    if not poly_is_squarefree(delta):
        raise BadDelta("delta must be squarefree")

    ff = FunctionField(k)
    a4 = delta * delta * av
    a6 = delta * delta * delta * bv
    curve = curve_new(ff, 0, 0, 0, a4, a6)

    t = poly_gen(k)
    cubic = t * t * t + t * av + poly_constant(k, bv)
    point = None
    if delta == cubic:
        point = CurvePoint(ff.elem(t * delta), ff.elem(delta * delta))
        if not on_curve(curve, point):
            raise AssertionError("canonical twist point failed the curve equation")
    return TwistData(av, bv, delta, curve, point)


def reduce_point_mod(E, P, pi):
    """Reduce a curve/point pair over F_p(T) modulo an irreducible pi.

    Returns the reduced curve over F_p[T]/(pi) together with the image
    of P, which is the point at infinity when the coordinates have a
    pole at pi. Rejects primes of bad reduction.
    """
    base = E.base
    if not isinstance(base, FunctionField) or not isinstance(
        base.coefficient_field, PrimeField
    ):
        raise TypeError("reduction needs a curve over F_p(T)")
    k = base.coefficient_field
    if not isinstance(pi, Poly) or pi.field != k:
        raise TypeError("pi must be a polynomial over the same prime field")
    if not poly_is_irreducible(pi):
        raise NotIrreducible(f"{pi!r} factors over F_{k.p}")

    disc = curve_invariants(E).disc
    if (disc.num % pi).is_zero:
        raise BadReduction(f"{pi!r} divides the discriminant")

    R = ExtField(pi)

    def red_coeff(c):
        return R.elem(c.num)

    curve = curve_new(
        R, red_coeff(E.a1), red_coeff(E.a2), red_coeff(E.a3), red_coeff(E.a4), red_coeff(E.a6)
    )
    if P.is_infinity:
        return curve, CurvePoint.infinity()

    dx = P.x.den % pi
    dy = P.y.den % pi
    if dx.is_zero or dy.is_zero:
        if dx.is_zero != dy.is_zero:
            raise AssertionError("coordinates disagree about the pole at pi")
        return curve, CurvePoint.infinity()
    xr = R.elem(P.x.num) / R.elem(P.x.den)
    yr = R.elem(P.y.num) / R.elem(P.y.den)
    Pr = CurvePoint(xr, yr)
    if not on_curve(curve, Pr):
        raise AssertionError("reduced point failed the reduced curve equation")
    return curve, Pr


def nontorsion_evidence(E, P, n_max=12):
    """Cheap empirical check that P is not torsion.

    Verifies n*P stays affine for n up to n_max and, over a function
    field, that the numerator degree of x(n*P) grows along n = 1, 2, 4,
    8: strictly across 2 -> 4 -> 8 and overall from 1 to 8. The 1 -> 2
    step alone is exempt because doubling a point of the canonical form
    (T*delta, delta^2) cancels down to a degree-4 numerator, the same
    degree it started at. Returns False at the first failure.
    """
    if P.is_infinity:
        return False
    functional = isinstance(E.base, FunctionField)
    degs = {}
    if functional:
        degs[1] = P.x.num.degree
    cur = P
    for n in range(2, n_max + 1):
        cur = add(E, cur, P, check=False)
        if cur.is_infinity:
            return False
        if functional and n in (2, 4, 8):
            degs[n] = cur.x.num.degree
    if functional:
        track = [degs[n] for n in (2, 4, 8) if n in degs]
        if any(b <= a for a, b in zip(track, track[1:])):
            return False
        if track and track[-1] <= degs[1]:
            return False
    return True
