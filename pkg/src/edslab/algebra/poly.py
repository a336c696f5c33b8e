"""Dense univariate polynomials over a coefficient field.

A Poly stores raw coefficient values (see fields.py for the raw
representations) in ascending order with no trailing zeros; the zero
polynomial has an empty coefficient tuple and degree -inf.  Arithmetic
dispatches per field: prime-field work runs on bare int lists through
the kernel module (vectorized where profitable), rational work clears
denominators and runs on integer lists, and anything else falls back to
generic schoolbook/Karatsuba over field operations.  The switchover to
Karatsuba happens above degree 64 on every path.
"""

import itertools
from fractions import Fraction
from math import lcm

from ..errors import (
    BothZero,
    DescriptorMismatch,
    DivisionByZero,
    NotASquare,
    NotSquarefreeDecidable,
    RangeTooLarge,
    ZeroInput,
    ZeroModulus,
)
from . import _kernels as _k
from .fields import ExtField, FieldDescriptor, FieldElem, PrimeField, Rationals

NEG_INF = float("-inf")

_ENUM_GUARD = 10**7


class Poly:
    """Immutable dense polynomial over a FieldDescriptor."""

    __slots__ = ("field", "_c")

    def __init__(self, field, coeffs=()):
        if not isinstance(field, FieldDescriptor):
            raise TypeError("first argument must be a FieldDescriptor")
        raw = [field.canon(c) for c in coeffs]
        while raw and raw[-1] == field.raw_zero:
            raw.pop()
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "_c", tuple(raw))

    def __setattr__(self, name, value):
        raise AttributeError("polynomials are immutable")

    @classmethod
    def _make(cls, field, raw):
        """Wrap an already-canonical raw list (takes ownership)."""
        self = object.__new__(cls)
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "_c", tuple(raw))
        return self

    # --- structure -----------------------------------------------------

    @property
    def raw_coeffs(self):
        return self._c

    @property
    def coeffs(self):
        return tuple(FieldElem(self.field, c) for c in self._c)

    def coefficient(self, i):
        if 0 <= i < len(self._c):
            return FieldElem(self.field, self._c[i])
        return self.field.zero()

    @property
    def degree(self):
        return len(self._c) - 1 if self._c else NEG_INF

    @property
    def is_zero(self):
        return not self._c

    @property
    def leading(self):
        if not self._c:
            raise ZeroInput("zero polynomial has no leading coefficient")
        return FieldElem(self.field, self._c[-1])

    @property
    def is_monic(self):
        return bool(self._c) and self._c[-1] == self.field.raw_one

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.field == other.field and self._c == other._c
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self._c))

    def __repr__(self):
        from .parse import format_poly

        return format_poly(self)

    def __bool__(self):
        return bool(self._c)

    # --- arithmetic ------------------------------------------------------

    def _check(self, other):
        if not isinstance(other, Poly):
            raise TypeError(f"expected a polynomial, got {other!r}")
        if other.field != self.field:
            raise DescriptorMismatch("polynomials over different fields")

    def __add__(self, other):
        self._check(other)
        f = self.field
        if isinstance(f, PrimeField):
            raw = _k.padd(list(self._c), list(other._c), f.p)
        else:
            a, b = self._c, other._c
            if len(a) < len(b):
                a, b = b, a
            raw = list(a)
            for i, v in enumerate(b):
                raw[i] = f.add(raw[i], v)
            while raw and raw[-1] == f.raw_zero:
                raw.pop()
        return Poly._make(f, raw)

    def __sub__(self, other):
        self._check(other)
        f = self.field
        if isinstance(f, PrimeField):
            raw = _k.psub(list(self._c), list(other._c), f.p)
        else:
            a, b = self._c, other._c
            raw = list(a) + [f.raw_zero] * (len(b) - len(a))
            for i, v in enumerate(b):
                raw[i] = f.sub(raw[i], v)
            while raw and raw[-1] == f.raw_zero:
                raw.pop()
        return Poly._make(f, raw)

    def __neg__(self):
        f = self.field
        return Poly._make(f, [f.neg(c) for c in self._c])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, FieldElem)):
            return self.scale(other)
        self._check(other)
        f = self.field
        if not self._c or not other._c:
            return Poly._make(f, [])
        if isinstance(f, PrimeField):
            raw = _k.pmul(list(self._c), list(other._c), f.p)
        elif isinstance(f, Rationals):
            raw = _q_mul(self._c, other._c)
        else:
            raw = _generic_mul(f, self._c, other._c)
        return Poly._make(f, raw)

    __rmul__ = __mul__

    def scale(self, c):
        f = self.field
        cv = f.canon(c)
        if cv == f.raw_zero:
            return Poly._make(f, [])
        return Poly._make(f, [f.mul(v, cv) for v in self._c])

    def __divmod__(self, other):
        self._check(other)
        if other.is_zero:
            raise DivisionByZero("polynomial division by zero")
        f = self.field
        if isinstance(f, PrimeField):
            q, r = _k.pdivmod(list(self._c), list(other._c), f.p)
        else:
            q, r = _generic_divmod(f, self._c, other._c)
        return Poly._make(f, q), Poly._make(f, r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise ValueError("polynomial powers take nonnegative integers")
        out = Poly._make(self.field, [self.field.raw_one])
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base if e > 1 else base
            e >>= 1
        return out

    # --- helpers ---------------------------------------------------------

    def monic(self):
        if not self._c:
            raise ZeroInput("cannot normalize the zero polynomial")
        f = self.field
        lc = self._c[-1]
        if lc == f.raw_one:
            return self
        inv = f.inv(lc)
        return Poly._make(f, [f.mul(c, inv) for c in self._c])

    def derivative(self):
        f = self.field
        raw = [f.mul(c, f.canon(i)) for i, c in enumerate(self._c) if i]
        while raw and raw[-1] == f.raw_zero:
            raw.pop()
        return Poly._make(f, raw)

    def evaluate(self, x):
        f = self.field
        xv = f.canon(x)
        acc = f.raw_zero
        for c in reversed(self._c):
            acc = f.add(f.mul(acc, xv), c)
        return FieldElem(f, acc)

    def shift(self, k):
        """Multiply by T^k."""
        if not self._c:
            return self
        return Poly._make(self.field, [self.field.raw_zero] * k + list(self._c))


def poly_from_coeffs(field, coeffs):
    return Poly(field, coeffs)


def poly_constant(field, value):
    return Poly(field, [value])


def poly_gen(field):
    """The polynomial T."""
    return Poly(field, [0, 1])


# --- generic-field helpers ---------------------------------------------------

def _generic_mul(f, a, b):
    if min(len(a), len(b)) <= _k.KARATSUBA_CUTOFF:
        out = [f.raw_zero] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai != f.raw_zero:
                for j, bj in enumerate(b):
                    out[i + j] = f.add(out[i + j], f.mul(ai, bj))
        while out and out[-1] == f.raw_zero:
            out.pop()
        return out
    k = min(len(a), len(b)) // 2
    za = f.raw_zero

    def trim(c):
        while c and c[-1] == za:
            c.pop()
        return c

    def add(u, v):
        if len(u) < len(v):
            u, v = v, u
        out = list(u)
        for i, x in enumerate(v):
            out[i] = f.add(out[i], x)
        return trim(out)

    a0, a1 = trim(list(a[:k])), list(a[k:])
    b0, b1 = trim(list(b[:k])), list(b[k:])
    z0 = _generic_mul(f, a0, b0) if a0 and b0 else []
    z2 = _generic_mul(f, a1, b1) if a1 and b1 else []
    mid_a, mid_b = add(a0, a1), add(b0, b1)
    z1 = _generic_mul(f, mid_a, mid_b) if mid_a and mid_b else []
    out = [f.raw_zero] * (len(a) + len(b) - 1)
    for i, v in enumerate(z0):
        out[i] = f.add(out[i], v)
    for i, v in enumerate(z2):
        out[i + 2 * k] = f.add(out[i + 2 * k], v)
    neg = [f.sub(f.sub(z1[i] if i < len(z1) else za,
                       z0[i] if i < len(z0) else za),
                 z2[i] if i < len(z2) else za)
           for i in range(max(len(z1), len(z0), len(z2)))]
    for i, v in enumerate(neg):
        out[i + k] = f.add(out[i + k], v)
    while out and out[-1] == za:
        out.pop()
    return out


def _generic_divmod(f, a, b):
    inv = f.inv(b[-1])
    r = list(a)
    nq = max(0, len(a) - len(b) + 1)
    q = [f.raw_zero] * nq
    for k in range(nq - 1, -1, -1):
        c = f.mul(r[k + len(b) - 1], inv)
        if c != f.raw_zero:
            q[k] = c
            for i in range(len(b)):
                r[k + i] = f.sub(r[k + i], f.mul(c, b[i]))
    del r[len(b) - 1:]
    while r and r[-1] == f.raw_zero:
        r.pop()
    return q, r


# --- rational-coefficient fast paths -----------------------------------------

def _q_clear(c):
    """Common denominator d and integer list l with l[i]/d the coefficients."""
    d = 1
    for v in c:
        d = lcm(d, v.denominator)
    return d, [v.numerator * (d // v.denominator) for v in c]


def _q_mul(a, b):
    if len(a) + len(b) <= 8:
        # Tiny products stay on Fractions; anything larger pays a gcd
        # per elementary operation here, so it goes through the integer
        # kernels and normalizes once per output coefficient instead.
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        while out and not out[-1]:
            out.pop()
        return out
    da, za = _q_clear(a)
    db, zb = _q_clear(b)
    prod = _k.zmul(za, zb)
    d = da * db
    if d == 1:
        return [Fraction(v) for v in prod]
    return [Fraction(v, d) for v in prod]


def _q_gcd_modular(a, b):
    """Monic gcd over Q via integer primitives and residue reconstruction."""
    _, za = _q_clear(a)
    _, zb = _q_clear(b)
    _, za = _k.zprimitive(za)
    _, zb = _k.zprimitive(zb)
    g = _k.qcancel(za, zb, want_gcd=True)[2]
    lc = g[-1]
    return [Fraction(v, lc) for v in g]


def poly_div_exact(f, g):
    """f/g when g divides f exactly, else None.

    Over Q the quotient comes from certified integer reconstruction
    (scaled through the contents), over a prime field from one division
    with a zero-remainder check; both routes prove g*q == f before
    returning q.
    """
    if g.is_zero:
        raise ZeroDivisionError("exact division by the zero polynomial")
    if f.is_zero:
        return f
    if f.degree < g.degree:
        return None
    fld = f.field
    if isinstance(fld, Rationals):
        da, za = _q_clear(f.raw_coeffs)
        db, zb = _q_clear(g.raw_coeffs)
        ca, za = _k.zprimitive(za)
        cb, zb = _k.zprimitive(zb)
        qz = _k.zdiv_exact(za, zb)
        if qz is None:
            return None
        scale = Fraction(ca * db, da * cb)
        return Poly._make(fld, [scale * v for v in qz])
    q, r = divmod(f, g)
    return q if r.is_zero else None


# --- the operation set --------------------------------------------------------

def poly_arith(f, g, op):
    """add/sub/mul/divrem on two polynomials over one field."""
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    if op == "divrem":
        return divmod(f, g)
    raise ValueError(f"unknown operation {op!r}")


def poly_gcd(f, g):
    """Monic greatest common divisor; gcd with zero is the monic other."""
    if not isinstance(f, Poly) or not isinstance(g, Poly):
        raise TypeError("poly_gcd expects two polynomials")
    if f.field != g.field:
        raise DescriptorMismatch("polynomials over different fields")
    if f.is_zero and g.is_zero:
        raise BothZero("gcd(0, 0) is undefined")
    if f.is_zero:
        return g.monic()
    if g.is_zero:
        return f.monic()
    fld = f.field
    if isinstance(fld, PrimeField):
        raw = _k.pgcd(list(f.raw_coeffs), list(g.raw_coeffs), fld.p)
        return Poly._make(fld, raw)
    if isinstance(fld, Rationals) and max(len(f.raw_coeffs), len(g.raw_coeffs)) > 33:
        return Poly._make(fld, _q_gcd_modular(f.raw_coeffs, g.raw_coeffs))
    a, b = f, g
    while not b.is_zero:
        a, b = b, (a % b)
        if not b.is_zero:
            b = b.monic()
    return a.monic()


def poly_pow_mod(f, e, m):
    """f^e mod m by square and multiply; requires deg m >= 1."""
    if not isinstance(e, int) or e < 0:
        raise ValueError("exponent must be a nonnegative integer")
    if m.is_zero or m.degree < 1:
        raise ZeroModulus("modulus must have degree at least 1")
    if f.field != m.field:
        raise DescriptorMismatch("operands over different fields")
    fld = f.field
    if isinstance(fld, PrimeField):
        raw = _k.ppow_mod(list(f.raw_coeffs), e, list(m.raw_coeffs), fld.p)
        return Poly._make(fld, raw)
    out = poly_constant(fld, 1)
    base = f % m
    while e:
        if e & 1:
            out = (out * base) % m
        base = (base * base) % m
        e >>= 1
    return out


def _sqrt_int_core(h, half, lead):
    """Integer square-root recursion: find G with G^2 = h, lc(G) = lead.

    h must have degree 2*half and leading coefficient lead^2; raises
    NotASquare as soon as a coefficient fails to divide exactly.  Only
    the top half of h constrains G; callers must verify the product.
    """
    g = [0] * (half + 1)
    g[half] = lead
    two_lead = 2 * lead
    for i in range(half - 1, -1, -1):
        acc = h[i + half] if i + half < len(h) else 0
        lo = i + 1
        hi = half - 1
        for a in range(lo, hi + 1):
            b = i + half - a
            if lo <= b <= hi:
                acc -= g[a] * g[b]
        if acc % two_lead:
            raise NotASquare("coefficient recursion failed")
        g[i] = acc // two_lead
    return g


def _sqrt_prime_field(f, raw):
    p = f.p
    if p == 2:
        raise NotImplementedError("square roots in characteristic 2 are unsupported")
    half = (len(raw) - 1) // 2
    inv_lc = pow(raw[-1], -1, p)
    h = [v * inv_lc % p for v in raw]
    inv2 = pow(2, -1, p)
    if 128 <= half < (1 << 15) and p < (1 << 24):
        import numpy as np

        g = np.zeros(half + 1, dtype=np.int64)
        g[half] = 1
        for i in range(half - 1, -1, -1):
            seg = g[i + 1:half]
            acc = int(np.dot(seg, seg[::-1])) if len(seg) else 0
            g[i] = (h[i + half] - acc) * inv2 % p
        gl = g.tolist()
    else:
        gl = [0] * (half + 1)
        gl[half] = 1
        for i in range(half - 1, -1, -1):
            acc = 0
            for a in range(i + 1, half):
                acc += gl[a] * gl[i + half - a]
            gl[i] = (h[i + half] - acc) * inv2 % p
    if _k.pmul(gl, gl, p) != h:
        raise NotASquare("not a perfect square")
    return Poly._make(f, gl)


def _sqrt_rationals(f, c):
    half = (len(c) - 1) // 2
    lc = c[-1]
    mono = [v / lc for v in c]
    den, z = _q_clear(mono)
    h = [v * den for v in z]          # den^2 * monic input, leading den^2
    g = _sqrt_int_core(h, half, den)
    prod = _k.zmul(g, g)
    if prod != h:
        raise NotASquare("not a perfect square")
    return Poly._make(f, [Fraction(v, den) for v in g])


def poly_sqrt(f):
    """Monic g with g^2 = c*f for the leading unit c, else NotASquare."""
    if f.is_zero:
        raise ZeroInput("square root of the zero polynomial")
    if f.degree % 2:
        raise NotASquare("odd degree")
    fld = f.field
    if f.degree == 0:
        return poly_constant(fld, 1)
    if fld.characteristic == 2:
        raise NotImplementedError("square roots in characteristic 2 are unsupported")
    raw = list(f.raw_coeffs)
    if isinstance(fld, PrimeField):
        return _sqrt_prime_field(fld, raw)
    if isinstance(fld, Rationals):
        return _sqrt_rationals(fld, raw)
    half = f.degree // 2
    mono = f.monic()
    g = [fld.raw_zero] * (half + 1)
    g[half] = fld.raw_one
    inv2 = fld.inv(fld.canon(2))
    mc = mono.raw_coeffs
    for i in range(half - 1, -1, -1):
        acc = mc[i + half] if i + half < len(mc) else fld.raw_zero
        for a in range(i + 1, half):
            acc = fld.sub(acc, fld.mul(g[a], g[i + half - a]))
        g[i] = fld.mul(acc, inv2)
    cand = Poly._make(fld, g)
    if cand * cand != mono:
        raise NotASquare("not a perfect square")
    return cand


def poly_is_squarefree(f):
    """gcd(f, f') test; refuses to guess when f' vanishes in char p."""
    if f.is_zero:
        raise ZeroInput("squarefreeness of the zero polynomial")
    if f.degree == 0:
        return True
    d = f.derivative()
    if d.is_zero:
        raise NotSquarefreeDecidable(
            "derivative vanished identically (inseparable input)"
        )
    return poly_gcd(f, d).degree == 0


def poly_is_irreducible(f):
    """Rabin's criterion over a prime field."""
    if not isinstance(f.field, PrimeField):
        raise TypeError("irreducibility test requires a prime-field polynomial")
    if f.degree < 1:
        raise ZeroInput("irreducibility needs degree at least 1")
    p = f.field.p
    n = f.degree
    if n == 1:
        return True
    fr = list(f.raw_coeffs)
    t_red = _k.pdivmod([0, 1], fr, p)[1]
    frob = [None, _k.ppow_mod([0, 1], p, fr, p)]
    for _ in range(2, n + 1):
        frob.append(_k.ppow_mod(frob[-1], p, fr, p))
    if frob[n] != t_red:
        return False
    for ell in _prime_divisors(n):
        u = _k.psub(frob[n // ell], t_red, p)
        if _k.pgcd(u, fr, p) != [1]:
            return False
    return True


def _prime_divisors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _moebius(n):
    mu = 1
    for d in _prime_divisors(n):
        n_copy = n
        count = 0
        while n_copy % d == 0:
            n_copy //= d
            count += 1
        if count > 1:
            return 0
        mu = -mu
    return mu


def irreducible_count(p, n):
    """Number of monic irreducible degree-n polynomials over F_p."""
    total = 0
    for d in range(1, n + 1):
        if n % d == 0:
            total += _moebius(n // d) * p**d
    return total // n


def enumerate_irreducibles(p, n):
    """All monic irreducible degree-n polynomials over F_p.

    Ordered lexicographically by the coefficient tuple (constant term
    first); guarded so p^n stays at desk scale.
    """
    field = PrimeField(p)
    if n < 1:
        raise ZeroInput("degree must be at least 1")
    if p**n > _ENUM_GUARD:
        raise RangeTooLarge(f"{p}^{n} exceeds the enumeration guard {_ENUM_GUARD}")
    out = []
    for tail in itertools.product(range(p), repeat=n):
        cand = Poly._make(field, list(tail) + [1])
        if poly_is_irreducible(cand):
            out.append(cand)
    return out
