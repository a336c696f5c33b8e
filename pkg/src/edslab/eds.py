"""Elliptic divisibility sequences and their gcd statistics.

Every affine multiple of a point on an integral model has an x-coordinate
of the shape A/D^2 with gcd(A, D) = 1; the D values indexed by the
multiplier form the divisibility sequence this module extracts and
studies. Operations cover three layers:

  * sequence extraction (denominator_of, eds_sequence) and the basic
    structural checks on one sequence (divisibility_check, the factor-free
    valuation comparison lemma1_check, and the division-polynomial
    cross-validation),
  * two-sequence statistics: gcd tables over a grid of index pairs and the
    diagonal stability scan that looks for a coprimality pattern in the
    indices where gcd(D_{nP}, D_{nQ}) returns to its n = 1 value,
  * the multiplicative-group warm-up gm_gcd_scan, the same gcd question
    for a^n - 1 against b^n - 1 plus the order-stability identity that
    drives it.

Function-field sequences use monic polynomial gcds throughout; rational
sequences use positive integers with the bit length standing in for the
degree. Nothing here factors anything.
"""

import math
from dataclasses import dataclass

from .algebra.fields import Rationals
from .algebra.poly import Poly, poly_constant, poly_gcd, poly_sqrt
from .algebra.ratfunc import FunctionField, RatFunc
from .curve import add, on_curve, scalar_mul
from .errors import (
    ConstantInput,
    DescriptorMismatch,
    NonSquareDenominator,
    NoNontrivialDenominator,
    NotASquare,
    PointAtInfinity,
    PointNotOnCurve,
    PositiveCharacteristic,
    RangeTooLarge,
    SharedFactorGuard,
    ShortFormRequired,
    TorsionEncountered,
)

LEMMA1_SEARCH_BOUND = 8
DIVPOLY_MAX_INDEX = 10


@dataclass(frozen=True)
class EdsEntry:
    """One term of the sequence: x_{nP} = A/D^2 in lowest terms."""

    n: int
    A: object
    D: object
    degD: int


@dataclass(frozen=True)
class GcdRow:
    n1: int
    n2: int
    g: object
    degg: int


@dataclass(frozen=True)
class StabilityReport:
    baseline: GcdRow
    stable_set: list
    exceptional_set: list
    modulus_estimate: object


@dataclass(frozen=True)
class Lemma1Row:
    m: int
    divides: bool
    cofactor_coprime: bool


@dataclass(frozen=True)
class Lemma1Report:
    base_index: int
    base_D: object
    rows: list
    all_ok: bool


@dataclass(frozen=True)
class DivisibilityReport:
    n_max: int
    pairs_checked: int
    counterexamples: list
    all_ok: bool


@dataclass(frozen=True)
class DivPolyRow:
    k: int
    match: bool


@dataclass(frozen=True)
class DivPolyReport:
    rows: list
    all_ok: bool


@dataclass(frozen=True)
class GmRow:
    n: int
    g: Poly
    degg: int


@dataclass(frozen=True)
class GmOrderRow:
    m: int
    coprime: bool


@dataclass(frozen=True)
class GmReport:
    rows: list
    order_rows: list
    degenerate: bool
    order_all_ok: bool


def _size(d):
    """Degree of a monic polynomial, or the dyadic log of a positive integer."""
    if isinstance(d, Poly):
        return d.degree
    return d.bit_length() - 1


def denominator_of(E, P):
    """EdsEntry for P itself: the reduced x-denominator pulled apart as D^2.

    Over k(T) the denominator is monic and D = poly_sqrt of it; over Q it
    is a positive integer and D its integer square root. A denominator
    that is not a perfect square contradicts the integral-model
    assumption and is reported, never patched.
    """
    if P.is_infinity:
        raise PointAtInfinity("the identity has no denominator")
    base = E.base
    if isinstance(base, FunctionField):
        den = P.x.den
        try:
            D = poly_sqrt(den)
        except NotASquare as exc:
            raise NonSquareDenominator(str(exc)) from exc
        return EdsEntry(1, P.x.num, D, D.degree)
    if isinstance(base, Rationals):
        value = P.x.raw
        D = math.isqrt(value.denominator)
        if D * D != value.denominator:
            raise NonSquareDenominator(f"{value.denominator} is not a square")
        return EdsEntry(1, value.numerator, D, D.bit_length() - 1)
    raise TypeError("denominators live over k(T) or Q only")


def eds_sequence(E, P, n_max):
    """Entries for n = 1..n_max, computed incrementally as nP = (n-1)P + P."""
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    if not on_curve(E, P):
        raise PointNotOnCurve("base point is not on the curve")
    first = denominator_of(E, P)
    entries = [first]
    cur = P
    for n in range(2, n_max + 1):
        cur = add(E, cur, P, check=False)
        if cur.is_infinity:
            raise TorsionEncountered(n)
        e = denominator_of(E, cur)
        entries.append(EdsEntry(n, e.A, e.D, e.degD))
    return entries


def _gcd_pair(d1, d2):
    if isinstance(d1, Poly):
        return poly_gcd(d1, d2)
    return math.gcd(d1, d2)


def _sequences_for(E1, P1, E2, P2, n1_max, n2_max):
    if E1.base != E2.base:
        raise DescriptorMismatch("the two curves live over different bases")
    if E1 == E2 and P1 == P2:
        seq = eds_sequence(E1, P1, max(n1_max, n2_max))
        return seq[:n1_max], seq[:n2_max]
    return eds_sequence(E1, P1, n1_max), eds_sequence(E2, P2, n2_max)


def gcd_table(E1, P1, E2, P2, grid):
    """GcdRow list for every (n1, n2) in the grid, in lexicographic order."""
    cells = sorted(set(grid))
    if not cells:
        return []
    if any(n1 < 1 or n2 < 1 for n1, n2 in cells):
        raise ValueError("grid indices must be at least 1")
    n1_max = max(n1 for n1, _ in cells)
    n2_max = max(n2 for _, n2 in cells)
    seq1, seq2 = _sequences_for(E1, P1, E2, P2, n1_max, n2_max)
    rows = []
    for n1, n2 in cells:
        g = _gcd_pair(seq1[n1 - 1].D, seq2[n2 - 1].D)
        rows.append(GcdRow(n1, n2, g, _size(g)))
    return rows


def stability_scan(E1, P1, E2, P2, n_max):
    """Diagonal scan g_n = gcd(D_{nP1}, D_{nP2}) compared against g_1.

    The modulus estimate is the smallest N <= n_max whose coprime residues
    all landed in the stable set; it is a consistency statement about the
    window scanned, not a claim about all n.
    """
    seq1, seq2 = _sequences_for(E1, P1, E2, P2, n_max, n_max)
    gs = [_gcd_pair(seq1[n - 1].D, seq2[n - 1].D) for n in range(1, n_max + 1)]
    baseline = GcdRow(1, 1, gs[0], _size(gs[0]))
    stable = [n for n in range(1, n_max + 1) if gs[n - 1] == gs[0]]
    stable_set = set(stable)
    exceptional = [n for n in range(1, n_max + 1) if n not in stable_set]
    modulus = None
    for N in range(1, n_max + 1):
        if all(
            n in stable_set
            for n in range(1, n_max + 1)
            if math.gcd(n, N) == 1
        ):
            modulus = N
            break
    return StabilityReport(baseline, stable, exceptional, modulus)


def lemma1_check(E, P, m_max, search_bound=LEMMA1_SEARCH_BOUND):
    """Factor-free check that every divisor of D_R keeps its multiplicity
    in D_{mR}: D_R | D_{mR} and gcd(D_{mR}/D_R, D_R) = 1 for m = 2..m_max.

    R is the first multiple of P with a nontrivial denominator. The
    statement needs every residue characteristic to vanish, so the base
    must be k(T) with k of characteristic zero: F_p coefficients fail
    directly, and Q fails too because its places have positive residue
    characteristic (ord_2 of the D sequence on y^2 = x^3 + x + 1 grows
    like 1 + v_2(m) along D_{2m}, so the multiplicity is not stable).
    """
    if not isinstance(E.base, FunctionField) or E.base.characteristic != 0:
        raise PositiveCharacteristic(
            "valuation stability needs residue characteristic zero: "
            "only k(T) with char k = 0 qualifies"
        )
    probe = eds_sequence(E, P, search_bound)
    base_index = None
    for e in probe:
        if _size(e.D) > 0:
            base_index = e.n
            break
    if base_index is None:
        raise NoNontrivialDenominator(
            f"no multiple up to {search_bound}P has a nontrivial denominator"
        )
    seq = eds_sequence(E, P, base_index * m_max) if m_max >= 2 else probe
    DR = seq[base_index - 1].D
    rows = []
    for m in range(2, m_max + 1):
        DmR = seq[m * base_index - 1].D
        if isinstance(DR, Poly):
            quot, rem = divmod(DmR, DR)
            divides = rem.is_zero
            coprime = divides and poly_gcd(quot, DR).degree == 0
        else:
            divides = DmR % DR == 0
            coprime = divides and math.gcd(DmR // DR, DR) == 1
        rows.append(Lemma1Row(m, divides, coprime))
    ok = all(r.divides and r.cofactor_coprime for r in rows)
    return Lemma1Report(base_index, DR, rows, ok)


def divisibility_check(E, P, n_max):
    """Verify D_{mP} | D_{nP} for every m | n <= n_max; list any failures."""
    seq = eds_sequence(E, P, n_max)
    counterexamples = []
    checked = 0
    for n in range(1, n_max + 1):
        Dn = seq[n - 1].D
        for m in range(1, n + 1):
            if n % m:
                continue
            checked += 1
            Dm = seq[m - 1].D
            if isinstance(Dn, Poly):
                ok = divmod(Dn, Dm)[1].is_zero
            else:
                ok = Dn % Dm == 0
            if not ok:
                counterexamples.append((m, n))
    return DivisibilityReport(n_max, checked, counterexamples, not counterexamples)


def division_poly_crosscheck(E, P, n):
    """Check x_{kP} = x - psi_{k-1} psi_{k+1} / psi_k^2 for k = 2..n.

    The psi values are computed at P through the classical recurrences,
    so the comparison pits the division-polynomial route against the
    chord-and-tangent route; the two share no code beyond field
    arithmetic.
    """
    if n > DIVPOLY_MAX_INDEX:
        raise RangeTooLarge(f"crosscheck index capped at {DIVPOLY_MAX_INDEX}")
    if not E.is_short:
        raise ShortFormRequired("division polynomials here assume y^2 = x^3 + ax + b")
    if P.is_infinity:
        raise PointAtInfinity("need an affine base point")
    if not on_curve(E, P):
        raise PointNotOnCurve("base point is not on the curve")
    multiples = {}
    for k in range(2, n + 1):
        S = scalar_mul(E, k, P, check=False)
        if S.is_infinity:
            raise TorsionEncountered(k)
        multiples[k] = S

    x, y = P.x, P.y
    a, b = E.a4, E.a6
    x2 = x * x
    x3 = x2 * x
    psi = {
        0: E.base.zero(),
        1: E.base.one(),
        2: 2 * y,
        3: 3 * (x2 * x2) + 6 * (a * x2) + 12 * (b * x) - a * a,
        4: 4
        * y
        * (
            x3 * x3
            + 5 * (a * (x2 * x2))
            + 20 * (b * x3)
            - 5 * (a * a * x2)
            - 4 * (a * (b * x))
            - 8 * (b * b)
            - a * (a * a)
        ),
    }
    for k in range(5, n + 2):
        m = k // 2
        if k % 2:
            psi[k] = psi[m + 2] * psi[m] ** 3 - psi[m - 1] * psi[m + 1] ** 3
        else:
            psi[k] = (psi[m] / psi[2]) * (
                psi[m + 2] * psi[m - 1] ** 2 - psi[m - 2] * psi[m + 1] ** 2
            )
    rows = []
    for k in range(2, n + 1):
        expected = x - (psi[k - 1] * psi[k + 1]) / (psi[k] * psi[k])
        rows.append(DivPolyRow(k, expected == multiples[k].x))
    return DivPolyReport(rows, all(r.match for r in rows))


def _gm_operand(value, name):
    if isinstance(value, RatFunc):
        num, den = value.num, value.den
    elif isinstance(value, Poly):
        num, den = value, poly_constant(value.field, 1)
    else:
        raise TypeError(f"{name} must be a polynomial or rational function")
    if num.field.characteristic != 0:
        raise PositiveCharacteristic("the warm-up scan is a characteristic-zero check")
    if num.degree <= 0 and den.degree <= 0:
        raise ConstantInput(f"{name} is constant")
    return num, den


def gm_gcd_scan(a, b, n_max):
    """gcd(a^n - 1, b^n - 1) for n = 1..n_max, plus the order-stability rows.

    For rational inputs a = A/B the scan uses the numerator A^n - B^n of
    a^n - 1. The order-stability part checks gcd((A^m - B^m)/(A - B), A - B) = 1
    through the explicit cofactor sum, under the hypothesis
    gcd(A - B, B) = 1; its failure raises SharedFactorGuard. a = b is a
    degenerate diagonal and is flagged rather than asserted against.
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    A1, B1 = _gm_operand(a, "a")
    A2, B2 = _gm_operand(b, "b")
    degenerate = A1 * B2 == A2 * B1
    rows = []
    pa, qa, pb, qb = A1, B1, A2, B2
    for n in range(1, n_max + 1):
        g = poly_gcd(pa - qa, pb - qb)
        rows.append(GmRow(n, g, g.degree))
        if n < n_max:
            pa, qa, pb, qb = pa * A1, qa * B1, pb * A2, qb * B2

    diff = A1 - B1
    if poly_gcd(diff, B1).degree > 0:
        raise SharedFactorGuard("gcd(A - B, B) must be trivial for the order check")
    order_rows = []
    cof = poly_constant(A1.field, 1)
    bpow = poly_constant(A1.field, 1)
    for m in range(1, n_max + 1):
        # cof = sum_{i<m} A^(m-1-i) B^i, so (A^m - B^m) = cof * (A - B)
        order_rows.append(GmOrderRow(m, poly_gcd(cof, diff).degree == 0))
        bpow = bpow * B1
        cof = cof * A1 + bpow
    return GmReport(rows, order_rows, degenerate, all(r.coprime for r in order_rows))
