"""Low-level dense polynomial kernels.

Polynomials here are plain Python lists of ints, little-endian (index i
holds the coefficient of T^i), with no trailing zeros; [] is the zero
polynomial.  Three families of routines live side by side:

* integer-coefficient convolution with a Karatsuba switchover,
* arithmetic modulo a word-sized prime, with vectorized numpy paths
  engaged automatically for large operands whenever the prime is small
  enough for safe int64 accumulation,
* a residue-based cancellation engine for quotients of integer
  polynomials.  Rational-function normalization over Q needs the fully
  reduced numerator/denominator pair of fractions whose raw degrees
  reach the thousands; classical Euclid with exact rationals is useless
  there, so the engine reconstructs the reduced pair from images modulo
  word primes and then proves the answer exact before returning it.

Everything is deterministic: the prime stream is fixed, and every
reconstructed object is verified by congruences whose combined modulus
exceeds twice a bound on the integers being compared.
"""

from math import gcd as int_gcd

import numpy as np

KARATSUBA_CUTOFF = 64

# Largest prime size for which int64 convolution cannot overflow:
# coefficients < 2^24 give products < 2^48, and up to 2^15 of them may
# be accumulated per output coefficient.
_NP_MUL_PRIME = 1 << 24
_NP_MUL_TERMS = 1 << 15
# Elimination steps only ever form c*b_i with c, b_i < p, so any prime
# below 2^31 is safe for the vectorized division/gcd loops.
_NP_ELIM_PRIME = 1 << 31


def ztrim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def zadd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, v in enumerate(b):
        out[i] += v
    return ztrim(out)


def zneg(a):
    return [-v for v in a]


def zsub(a, b):
    out = list(a) + [0] * (len(b) - len(a))
    for i, v in enumerate(b):
        out[i] -= v
    return ztrim(out)


def zscale(a, k):
    if k == 0:
        return []
    return [v * k for v in a]


def _zmul_school(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def zmul_karatsuba(a, b):
    """Reference list-level Karatsuba; kept for cross-checking zmul."""
    if not a or not b:
        return []
    if min(len(a), len(b)) <= KARATSUBA_CUTOFF:
        return _zmul_school(a, b)
    k = min(len(a), len(b)) // 2
    a0, a1 = ztrim(a[:k]), a[k:]
    b0, b1 = ztrim(b[:k]), b[k:]
    z0 = zmul_karatsuba(a0, b0)
    z2 = zmul_karatsuba(a1, b1)
    z1 = zsub(zmul_karatsuba(zadd(a0, a1), zadd(b0, b1)), zadd(z0, z2))
    out = [0] * (len(a) + len(b) - 1)
    for i, v in enumerate(z0):
        out[i] += v
    for i, v in enumerate(z1):
        out[i + k] += v
    for i, v in enumerate(z2):
        out[i + 2 * k] += v
    return ztrim(out)


def _kron_pack(a, nb):
    """Evaluate the integer polynomial at 2^(8*nb), exactly, as one int.

    Positive and negative coefficients are packed into separate byte
    buffers (each coefficient must fit in nb bytes) and combined with a
    single big-integer subtraction.
    """
    pos = bytearray(len(a) * nb)
    neg = bytearray(len(a) * nb)
    has_neg = False
    for i, v in enumerate(a):
        if v > 0:
            pos[i * nb:(i + 1) * nb] = v.to_bytes(nb, "little")
        elif v:
            has_neg = True
            neg[i * nb:(i + 1) * nb] = (-v).to_bytes(nb, "little")
    out = int.from_bytes(pos, "little")
    if has_neg:
        out -= int.from_bytes(neg, "little")
    return out


def _kron_unpack(c, nb, n_out):
    """Recover n_out balanced base-2^(8*nb) digits of the integer c.

    Valid when every digit has magnitude below 2^(8*nb - 1): adding the
    constant with 2^(8*nb - 1) in every digit slot makes all digits
    plain nonnegative window reads.
    """
    s = 8 * nb
    half = 1 << (s - 1)
    offset = int.from_bytes((b"\x00" * (nb - 1) + b"\x80") * n_out, "little")
    raw = (c + offset).to_bytes(nb * n_out, "little")
    return [
        int.from_bytes(raw[k * nb:(k + 1) * nb], "little") - half
        for k in range(n_out)
    ]


def _zmul_kron(a, b):
    bound = zmaxabs(a) * zmaxabs(b) * min(len(a), len(b))
    nb = (bound.bit_length() + 9) // 8
    c = _kron_pack(a, nb) * _kron_pack(b, nb)
    return ztrim(_kron_unpack(c, nb, len(a) + len(b) - 1))


def zmul(a, b):
    """Product over Z: schoolbook when tiny, else Kronecker packing.

    Packing both operands into single integers hands the O(d^2) work to
    the interpreter's own subquadratic integer multiplication, which is
    far faster than list-level coefficient loops at these sizes.
    """
    if not a or not b:
        return []
    if min(len(a), len(b)) <= 4 or len(a) + len(b) <= 40:
        return _zmul_school(a, b)
    return _zmul_kron(a, b)


def zcontent(a):
    c = 0
    for v in a:
        c = int_gcd(c, v)
        if c == 1:
            break
    return c


def zprimitive(a):
    """Split a nonzero integer polynomial as content * primitive part.

    The primitive part has positive leading coefficient; the content
    carries the sign, so a == [content * v for v in primitive].
    """
    c = zcontent(a)
    if a[-1] < 0:
        c = -c
    return c, [v // c for v in a]


def zmaxabs(a):
    return max((abs(v) for v in a), default=0)


# --- arithmetic modulo a word prime -----------------------------------------

def pmod(a, p):
    return ztrim([v % p for v in a])


def padd(a, b, p):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, v in enumerate(b):
        out[i] = (out[i] + v) % p
    return ztrim(out)


def psub(a, b, p):
    out = list(a) + [0] * (len(b) - len(a))
    for i, v in enumerate(b):
        out[i] = (out[i] - v) % p
    return ztrim(out)


def pmul(a, b, p):
    if not a or not b:
        return []
    if (
        p < _NP_MUL_PRIME
        and len(a) * len(b) >= 4096
        and min(len(a), len(b)) < _NP_MUL_TERMS
    ):
        va = np.array(a, dtype=np.int64)
        vb = np.array(b, dtype=np.int64)
        return ztrim((np.convolve(va, vb) % p).tolist())
    return pmod(zmul(a, b), p)


def _pdivmod_py(a, b, p):
    inv = pow(b[-1], -1, p)
    r = list(a)
    q = [0] * max(0, len(a) - len(b) + 1)
    for k in range(len(a) - len(b), -1, -1):
        c = r[k + len(b) - 1] * inv % p
        if c:
            q[k] = c
            for i in range(len(b) - 1):
                r[k + i] = (r[k + i] - c * b[i]) % p
            r[k + len(b) - 1] = 0
    del r[len(b) - 1:]
    return q, ztrim(r)


def _pdivmod_np(a, b, p):
    inv = pow(b[-1], -1, p)
    r = np.array(a, dtype=np.int64)
    vb = np.array(b[:-1], dtype=np.int64)
    m = len(b) - 1
    q = [0] * (len(a) - len(b) + 1)
    for k in range(len(a) - len(b), -1, -1):
        c = int(r[k + m]) * inv % p
        if c:
            q[k] = c
            if m:
                r[k:k + m] = (r[k:k + m] - c * vb) % p
    return q, ztrim(r[:m].tolist())


def pdivmod(a, b, p):
    """Quotient and remainder mod p; b must be nonzero."""
    if len(a) < len(b):
        return [], list(a)
    if p < _NP_ELIM_PRIME and len(a) >= 200 and len(b) >= 16:
        return _pdivmod_np(a, b, p)
    return _pdivmod_py(a, b, p)


def pmonic(a, p):
    if not a or a[-1] == 1:
        return list(a)
    inv = pow(a[-1], -1, p)
    return [v * inv % p for v in a]


def _pgcd_np(a, b, p):
    """Euclid with in-place vectorized elimination; a, b big."""
    ra = np.array(a, dtype=np.int64)
    rb = np.array(b, dtype=np.int64)
    da, db = len(a) - 1, len(b) - 1
    while db >= 0:
        if da < db:
            ra, rb, da, db = rb, ra, db, da
            continue
        inv = pow(int(rb[db]), -1, p)
        while da >= db:
            c = int(ra[da]) * inv % p
            if c:
                if db:
                    ra[da - db:da] = (ra[da - db:da] - c * rb[:db]) % p
                ra[da] = 0
            da -= 1
            while da >= 0 and ra[da] == 0:
                da -= 1
        ra, rb, da, db = rb, ra, db, da
    if da < 0:
        return []
    return pmonic(ra[:da + 1].tolist(), p)


def pgcd(a, b, p):
    """Monic gcd mod p (zero if both inputs are zero)."""
    a, b = list(a), list(b)
    if max(len(a), len(b)) >= 200 and p < _NP_ELIM_PRIME:
        return _pgcd_np(a, b, p)
    while b:
        a, b = b, _pdivmod_py(a, b, p)[1]
    return pmonic(a, p)


def ppow_mod(f, e, m, p):
    """f^e mod (m, p) by square and multiply."""
    f = pdivmod(f, m, p)[1] if len(f) >= len(m) else list(f)
    out = [1 % p]
    while e:
        if e & 1:
            out = pdivmod(pmul(out, f, p), m, p)[1]
        f = pdivmod(pmul(f, f, p), m, p)[1]
        e >>= 1
    return out


def pinv_mod(f, m, p):
    """Inverse of f modulo (m, p) via extended Euclid; None if not coprime."""
    r0, r1 = list(m), pdivmod(f, m, p)[1] if len(f) >= len(m) else list(f)
    s0, s1 = [], [1]
    while r1:
        q, r = pdivmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, psub(s0, pmul(q, s1, p), p)
    if len(r0) != 1:
        return None
    inv = pow(r0[0], -1, p)
    return [v * inv % p for v in s0]


# --- deterministic word primes ----------------------------------------------

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n):
    """Deterministic Miller-Rabin for word-sized n (valid far beyond 2^64)."""
    if n < 2:
        return False
    for q in _MR_WITNESSES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def word_primes():
    """Primes just below 2^24, descending; the shared deterministic stream."""
    n = _NP_MUL_PRIME - 1
    while n > 2:
        if is_prime(n):
            yield n
        n -= 2


# --- residue reconstruction -------------------------------------------------

class CrtVector:
    """Coefficient vector rebuilt from residues modulo a growing prime set.

    add() folds in one residue image and reports whether the
    symmetric-range lift was unchanged by it, which is the usual signal
    that enough primes have been seen.
    """

    def __init__(self, size):
        self.size = size
        self.modulus = 1
        self.vals = [0] * size
        self.lifted = None

    def add(self, residues, p):
        inv = pow(self.modulus % p, -1, p)
        m = self.modulus
        vals = self.vals
        for i in range(self.size):
            r = residues[i] if i < len(residues) else 0
            vals[i] += m * ((r - vals[i]) % p * inv % p)
        self.modulus = m * p
        half = self.modulus >> 1
        lift = [v - self.modulus if v > half else v for v in vals]
        stable = lift == self.lifted
        self.lifted = lift
        return stable


def qcancel(f, h, want_gcd=False):
    """Fully reduce the fraction f/h of nonzero integer polynomials.

    Returns (u, v) with f*v == h*u and gcd(u, v) = 1 in Z[T], equal to
    f, h divided by their full gcd g (content times primitive part, g
    with positive leading coefficient, so signs ride along unchanged).
    With want_gcd, returns (u, v, g) instead.

    The pair is rebuilt coefficient-by-coefficient from monic gcd images
    modulo the deterministic word-prime stream, then certified exact:
    the cross-product identity f*v = h*u is checked by computing both
    integer products outright, and coprimality of (u, v) is witnessed by
    a single residue image at a prime dividing neither leading
    coefficient.  Those two facts force u = f/g and v = h/g for the true
    gcd g, so unlucky primes only ever delay the answer, never corrupt
    it.
    """
    if not f or not h:
        raise ZeroDivisionError("qcancel requires nonzero inputs")
    cf, pf = zprimitive(f)
    ch, ph = zprimitive(h)
    cg = int_gcd(cf, ch)
    if abs(cf) != 1 or abs(ch) != 1:
        # Reduce the primitive parts, then restore the content cofactors;
        # the CRT loop below assumes unit contents and would otherwise
        # wait forever for its content-matching condition.
        out = qcancel(pf, ph, want_gcd)
        u = zscale(out[0], cf // cg)
        v = zscale(out[1], ch // cg)
        if want_gcd:
            return u, v, zscale(out[2], cg)
        return u, v
    stream = word_primes()
    stored = []          # (p, monic gcd image) kept for a want_gcd second pass
    dmin = None
    acc_u = acc_v = None
    lf, lh = f[-1], h[-1]
    while True:
        p = next(stream)
        if lf % p == 0 or lh % p == 0:
            continue
        fp = pmod(f, p)
        hp = pmod(h, p)
        g = pgcd(fp, hp, p)
        d = len(g) - 1
        if d == 0:
            if want_gcd:
                return list(f), list(h), [1]
            return list(f), list(h)
        if dmin is None or d < dmin:
            dmin = d
            stored = []
            acc_u = CrtVector(len(f) - d)
            acc_v = CrtVector(len(h) - d)
        elif d > dmin:
            continue
        stored.append((p, g))
        qu, ru = pdivmod(fp, g, p)
        qv, rv = pdivmod(hp, g, p)
        if ru or rv:
            raise RuntimeError("gcd image failed to divide its source")
        stable_u = acc_u.add(qu, p)
        stable_v = acc_v.add(qv, p)
        if not (stable_u and stable_v) or acc_u.modulus.bit_length() < 40:
            continue
        cu, u = zprimitive(acc_u.lifted)
        cv, v = zprimitive(acc_v.lifted)
        # Both contents must equal +/- lc(gcd); mismatch means more primes.
        if abs(cu) != abs(cv):
            continue
        if cu < 0:
            u = zneg(u)
        if cv < 0:
            v = zneg(v)
        if zmul(f, v) != zmul(h, u):
            continue
        coprime = False
        for q in stream:
            if u[-1] % q == 0 or v[-1] % q == 0:
                continue
            coprime = pgcd(pmod(u, q), pmod(v, q), q) == [1]
            break
        if not coprime:
            continue
        if not want_gcd:
            return u, v
        lcg = abs(cu)
        acc_g = CrtVector(dmin + 1)
        stable = False
        for q, img in stored:
            stable = acc_g.add([c * lcg % q for c in img], q)
        while not stable:
            q = next(stream)
            if lf % q == 0 or lh % q == 0:
                continue
            img = pgcd(pmod(f, q), pmod(h, q), q)
            if len(img) - 1 != dmin:
                continue
            stable = acc_g.add([c * lcg % q for c in img], q)
        gg = acc_g.lifted
        if zmul(gg, u) != list(f):
            continue
        return u, v, gg


def zdiv_exact(a, b):
    """Quotient q with b*q == a in Z[T], or None when b does not divide a.

    The quotient is rebuilt from images modulo word primes and certified
    by recomputing the full product b*q, so a None return or a returned
    list is always exact. A nonzero remainder at any good prime proves
    indivisibility outright and short-circuits.
    """
    if not b:
        raise ZeroDivisionError("exact division by the zero polynomial")
    if not a:
        return []
    if len(a) < len(b):
        return None
    if len(b) == 1:
        d = b[0]
        if any(c % d for c in a):
            return None
        return [c // d for c in a]
    acc = CrtVector(len(a) - len(b) + 1)
    budget = 8 * (zmaxabs(a).bit_length() + zmaxabs(b).bit_length() + 64)
    for p in word_primes():
        if b[-1] % p == 0:
            continue
        q, r = pdivmod(pmod(a, p), pmod(b, p), p)
        if r:
            return None
        stable = acc.add(q, p)
        budget -= p.bit_length()
        if stable and acc.modulus.bit_length() >= 40:
            cand = acc.lifted
            if zmul(b, cand) == list(a):
                return ztrim(cand)
        if budget < 0:
            return None
    return None
