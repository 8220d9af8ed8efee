"""Exact arithmetic in Z/p^N with absolute-precision semantics.

A value is an integer residue known modulo p^N together with the exponent N
(its absolute precision).  Operations propagate the provable precision:
add/sub keep the minimum, a product of values with valuations v1, v2 is known
modulo p^{min(N1+v2, N2+v1)}, and exact division by p^v costs v digits.  The
base is Q_p with uniformizer p, p an odd prime; all values are immutable.

The module also carries the polynomial layer used by the spectral code:
valued polynomials, Newton polygons (slopes are root valuations, listed
increasing) and Hensel-style slope splitting along a polygon vertex.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NoSlopeGap, PrecisionError


def _ensure_odd_prime(p: int) -> None:
    if p < 3 or p % 2 == 0:
        raise ValueError(f"p must be an odd prime, got {p}")
    d = 3
    while d * d <= p:
        if p % d == 0:
            raise ValueError(f"p must be an odd prime, got {p}")
        d += 2


def int_valuation(n: int, p: int) -> int:
    """v_p(n) for a nonzero integer."""
    if n == 0:
        raise ValueError("valuation of 0 is unbounded")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def _log_floor(n: int, p: int) -> int:
    e = 0
    q = p
    while q <= n:
        e += 1
        q *= p
    return e


def factorial_valuation(n: int, p: int) -> int:
    """v_p(n!) by Legendre."""
    v = 0
    q = p
    while q <= n:
        v += n // q
        q *= p
    return v


class ValuationBound:
    """Lower bound '>= bound' returned for residues that vanish at precision."""

    __slots__ = ("bound",)

    def __init__(self, bound: int):
        self.bound = bound

    def __repr__(self):
        return f">= {self.bound}"

    def __eq__(self, other):
        return isinstance(other, ValuationBound) and self.bound == other.bound

    def __ge__(self, other):
        if isinstance(other, ValuationBound):
            return self.bound >= other.bound
        return self.bound >= other

    def __hash__(self):
        return hash(("ValuationBound", self.bound))


class PadicScalar:
    """Integer modulo p^prec with tracked absolute precision."""

    __slots__ = ("p", "prec", "residue")

    def __init__(self, p: int, residue: int, prec: int):
        if prec < 0:
            raise PrecisionError("negative precision")
        self.p = p
        self.prec = prec
        self.residue = residue % (p ** prec) if prec > 0 else 0

    @classmethod
    def from_int(cls, p: int, value: int, prec: int) -> "PadicScalar":
        return cls(p, value, prec)

    @classmethod
    def from_fraction(cls, p: int, value, prec: int) -> "PadicScalar":
        """Embed a rational with p-unit denominator."""
        value = Fraction(value)
        num, den = value.numerator, value.denominator
        if den % p == 0:
            raise ValueError("denominator not a p-adic unit")
        return cls(p, num * pow(den, -1, p ** prec), prec)

    @classmethod
    def zero(cls, p: int, prec: int) -> "PadicScalar":
        return cls(p, 0, prec)

    @classmethod
    def one(cls, p: int, prec: int) -> "PadicScalar":
        return cls(p, 1, prec)

    def _coerce(self, other) -> "PadicScalar":
        if isinstance(other, int):
            return PadicScalar(self.p, other, self.prec)
        if isinstance(other, PadicScalar):
            if self.p != other.p:
                raise ValueError("mixed primes")
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return PadicScalar(self.p, self.residue + other.residue, min(self.prec, other.prec))

    __radd__ = __add__

    def __neg__(self):
        return PadicScalar(self.p, -self.residue, self.prec)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        v1 = self.prec if self.residue == 0 else int_valuation(self.residue, self.p)
        v2 = other.prec if other.residue == 0 else int_valuation(other.residue, other.p)
        return PadicScalar(self.p, self.residue * other.residue, min(self.prec + v2, other.prec + v1))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out = PadicScalar.one(self.p, self.prec)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        return (
            isinstance(other, PadicScalar)
            and self.p == other.p
            and self.prec == other.prec
            and self.residue == other.residue
        )

    def __hash__(self):
        return hash((self.p, self.prec, self.residue))

    def __repr__(self):
        return f"{self.residue} + O({self.p}^{self.prec})"

    def valuation(self):
        """Largest e <= prec with p^e | residue; a ValuationBound when residue = 0."""
        if self.residue == 0:
            return ValuationBound(self.prec)
        return int_valuation(self.residue, self.p)

    def valuation_floor(self) -> int:
        v = self.valuation()
        return v.bound if isinstance(v, ValuationBound) else v

    def is_zero_at_precision(self) -> bool:
        return self.residue == 0

    def is_unit(self) -> bool:
        return self.prec > 0 and self.residue % self.p != 0

    def inverse(self) -> "PadicScalar":
        if not self.is_unit():
            raise ZeroDivisionError("not a unit at stated precision")
        return PadicScalar(self.p, pow(self.residue, -1, self.p ** self.prec), self.prec)

    def divexact_p(self, v: int) -> "PadicScalar":
        """Exact division by p^v; costs v digits of absolute precision."""
        if v == 0:
            return self
        if self.prec < v:
            raise PrecisionError("no digits left after division")
        q, r = divmod(self.residue, self.p ** v)
        if r != 0:
            raise ValueError(f"residue not divisible by p^{v}")
        return PadicScalar(self.p, q, self.prec - v)

    def unit_part(self) -> "PadicScalar":
        if self.residue == 0:
            raise ZeroDivisionError("zero at precision has no unit part")
        return self.divexact_p(int_valuation(self.residue, self.p))

    def reduce(self, prec: int) -> "PadicScalar":
        if prec > self.prec:
            raise PrecisionError(f"cannot lift {self.prec} digits to {prec}")
        return PadicScalar(self.p, self.residue, prec)

    def agrees_with(self, other: "PadicScalar", digits: int | None = None) -> bool:
        n = min(self.prec, other.prec)
        if digits is not None:
            n = min(n, digits)
        return (self.residue - other.residue) % (self.p ** n) == 0


def valuation(x: PadicScalar):
    return x.valuation()


def teichmuller(p: int, a: int, prec: int) -> PadicScalar:
    """The (p-1)-th root of unity congruent to a mod p, to prec digits."""
    _ensure_odd_prime(p)
    if a % p == 0:
        raise ValueError("Teichmuller lift needs a unit")
    m = p ** prec
    x = a % m
    for _ in range(prec + 2):
        y = pow(x, p, m)
        if y == x:
            break
        x = y
    assert pow(x, p, m) == x
    return PadicScalar(p, x, prec)


def log1p(x: PadicScalar) -> PadicScalar:
    """log(1+x) for v(x) >= 1; keeps the full absolute precision of x.

    Terms are summed while m*v(x) - v_p(m) < prec; the bound m*v(x) - v_p(m)
    is nondecreasing in m for v(x) >= 1, so every dropped term provably lies
    in p^prec.
    """
    p, prec = x.p, x.prec
    _ensure_odd_prime(p)
    vx = x.valuation_floor()
    if vx < 1:
        raise ValueError("log1p needs v(x) >= 1")
    if x.residue == 0:
        return PadicScalar.zero(p, prec)
    M = 1
    while (M + 1) * vx - _log_floor(M + 1, p) < prec:
        M += 1
    W = prec + _log_floor(M, p) + 1
    mod = p ** W
    xr = x.residue % mod
    acc = 0
    power = 1
    for m in range(1, M + 1):
        power = (power * xr) % mod
        vm = int_valuation(m, p) if m % p == 0 else 0
        unit = m // (p ** vm)
        term = (power // (p ** vm)) * pow(unit, -1, mod) if vm else power * pow(unit, -1, mod)
        acc = (acc + (term if m % 2 == 1 else -term)) % mod
    return PadicScalar(p, acc, prec)


def exp(x: PadicScalar) -> PadicScalar:
    """exp(x) for v(x) >= 1, p odd; keeps the full absolute precision of x.

    Term m has valuation >= m*v(x) - (m-1)/(p-1), strictly increasing in m.
    """
    p, prec = x.p, x.prec
    _ensure_odd_prime(p)
    vx = x.valuation_floor()
    if vx < 1:
        raise ValueError("exp needs v(x) >= 1")
    M = 1
    while (M + 1) * vx - M // (p - 1) < prec:
        M += 1
    W = prec + factorial_valuation(M, p) + 1
    mod = p ** W
    xr = x.residue % mod
    acc = 1
    term = 1
    for m in range(1, M + 1):
        term = (term * xr) % mod
        vm = int_valuation(m, p) if m % p == 0 else 0
        if vm:
            q, r = divmod(term, p ** vm)
            assert r == 0, "exp term lost integrality"
            term = (q * pow(m // (p ** vm), -1, mod)) % mod
        else:
            term = (term * pow(m, -1, mod)) % mod
        acc = (acc + term) % mod
    return PadicScalar(p, acc, prec)


def binom_zp(z: PadicScalar, n: int) -> PadicScalar:
    """Generalized binomial z(z-1)...(z-n+1)/n!, with v(n!) precision loss accounted."""
    if n < 0:
        raise ValueError("n must be >= 0")
    out = PadicScalar.one(z.p, z.prec)
    for j in range(1, n + 1):
        out = out * (z - (j - 1))
        vj = int_valuation(j, z.p) if j % z.p == 0 else 0
        unit = j // (z.p ** vj)
        if unit > 1:
            out = out * PadicScalar(z.p, pow(unit, -1, z.p ** max(out.prec, 1)), out.prec)
        if vj:
            out = out.divexact_p(vj)
    return out


# ---------------------------------------------------------------------------
# polynomials and Newton polygons


class NewtonPolygon:
    """Lower convex hull data; slopes are root valuations, strictly increasing."""

    __slots__ = ("vertices",)

    def __init__(self, vertices):
        self.vertices = tuple((int(i), Fraction(v)) for i, v in vertices)
        slopes = self.slopes()
        assert all(slopes[i] < slopes[i + 1] for i in range(len(slopes) - 1))

    @classmethod
    def of_points(cls, points) -> "NewtonPolygon":
        """Lower hull of (i, v_i) pairs."""
        pts = sorted((int(i), Fraction(v)) for i, v in points)
        hull: list[tuple[int, Fraction]] = []
        for q in pts:
            while len(hull) >= 2:
                a, b = hull[-2], hull[-1]
                if (b[1] - a[1]) * (q[0] - a[0]) >= (q[1] - a[1]) * (b[0] - a[0]):
                    hull.pop()
                else:
                    break
            hull.append(q)
        return cls(hull)

    def segments(self):
        """(slope, horizontal length) pairs, left to right."""
        return [
            (Fraction(v1 - v0, i1 - i0), i1 - i0)
            for (i0, v0), (i1, v1) in zip(self.vertices, self.vertices[1:])
        ]

    def slopes(self):
        return [s for s, _ in self.segments()]

    def root_count_at_most(self, h) -> int:
        """Number of roots (with multiplicity) of valuation <= h."""
        h = Fraction(h)
        return sum(length for s, length in self.segments() if s <= h)

    def height_at(self, x: int):
        vs = self.vertices
        if x < vs[0][0] or x > vs[-1][0]:
            return None
        for (i0, v0), (i1, v1) in zip(vs, vs[1:]):
            if i0 <= x <= i1:
                return v0 + Fraction(v1 - v0, i1 - i0) * (x - i0)
        return vs[0][1]

    def __eq__(self, other):
        return isinstance(other, NewtonPolygon) and self.vertices == other.vertices

    def __repr__(self):
        return f"NewtonPolygon({list(self.vertices)})"


class ValuedPolynomial:
    """Polynomial with PadicScalar coefficients, index = degree."""

    __slots__ = ("p", "coeffs")

    def __init__(self, coeffs):
        coeffs = list(coeffs)
        if not coeffs:
            raise ValueError("empty coefficient list")
        self.p = coeffs[0].p
        while len(coeffs) > 1 and coeffs[-1].residue == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @classmethod
    def from_ints(cls, p: int, ints, prec: int) -> "ValuedPolynomial":
        return cls([PadicScalar(p, c, prec) for c in ints])

    @classmethod
    def one(cls, p: int, prec: int) -> "ValuedPolynomial":
        return cls([PadicScalar.one(p, prec)])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return all(c.residue == 0 for c in self.coeffs)

    def min_prec(self) -> int:
        return min(c.prec for c in self.coeffs)

    def __mul__(self, other: "ValuedPolynomial") -> "ValuedPolynomial":
        prec = min(self.min_prec(), other.min_prec())
        out = [PadicScalar.zero(self.p, prec)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return ValuedPolynomial(out)

    def __add__(self, other: "ValuedPolynomial") -> "ValuedPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        prec = min(self.min_prec(), other.min_prec())
        z = PadicScalar.zero(self.p, prec)
        a = list(self.coeffs) + [z] * (n - len(self.coeffs))
        b = list(other.coeffs) + [z] * (n - len(other.coeffs))
        return ValuedPolynomial([x + y for x, y in zip(a, b)])

    def evaluate(self, x: PadicScalar) -> PadicScalar:
        acc = PadicScalar.zero(self.p, self.coeffs[-1].prec)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def agrees_with(self, other: "ValuedPolynomial", digits: int) -> bool:
        n = max(len(self.coeffs), len(other.coeffs))
        za = PadicScalar.zero(self.p, digits)
        a = list(self.coeffs) + [za] * (n - len(self.coeffs))
        b = list(other.coeffs) + [za] * (n - len(other.coeffs))
        return all(x.agrees_with(y, digits) for x, y in zip(a, b))

    def __eq__(self, other):
        return isinstance(other, ValuedPolynomial) and self.coeffs == other.coeffs

    def __repr__(self):
        return "ValuedPolynomial([" + ", ".join(repr(c) for c in self.coeffs) + "])"


def newton_polygon(poly: ValuedPolynomial) -> NewtonPolygon:
    """Polygon of a nonzero polynomial; slope s of length m <=> m roots of valuation s.

    Points are indexed from the leading coefficient, so slopes are literal root
    valuations and increase left to right.
    """
    if poly.is_zero():
        raise NoSlopeGap("all coefficients indistinguishable from 0 at stated precision")
    D = poly.degree
    pts = []
    unknown = []
    for i, c in enumerate(poly.coeffs):
        j = D - i
        if c.residue == 0:
            unknown.append((j, c.prec))
        else:
            pts.append((j, int_valuation(c.residue, poly.p)))
    hull = NewtonPolygon.of_points(pts)
    for j, bound in unknown:
        h = hull.height_at(j)
        if h is not None and Fraction(bound) <= h:
            raise PrecisionError(
                f"coefficient of t^{D - j} vanishes at precision {bound}, below the hull"
            )
    return hull


# -- integer-coefficient polynomial helpers (little-endian lists mod m) ------


def _poly_trim(a):
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


def _poly_mul_mod(a, b, m):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % m
    return out


def _poly_divmod_monic(a, b, m):
    """Divide a by monic b over Z/m; returns (q, r) with deg r < deg b."""
    a = [c % m for c in a]
    db = len(b) - 1
    q = [0] * max(1, len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            q[i - db] = c
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - c * b[j]) % m
    r = a[:db] if db > 0 else [0]
    return q, _poly_trim(r if r else [0])


def _fp_norm(c, p):
    c = [x % p for x in c]
    return _poly_trim(c)


def _fp_poly_divmod(a, b, p):
    a = _fp_norm(a, p)
    b = _fp_norm(b, p)
    inv = pow(b[-1], -1, p)
    q = [0] * max(1, len(a) - len(b) + 1)
    r = list(a)
    while len(r) >= len(b) and any(r):
        if r[-1] == 0:
            r.pop()
            continue
        f = (r[-1] * inv) % p
        shift = len(r) - len(b)
        q[shift] = f
        for i, x in enumerate(b):
            r[shift + i] = (r[shift + i] - f * x) % p
        r = _poly_trim(r)
        if all(x == 0 for x in r):
            r = [0]
            break
    return _fp_norm(q, p), _fp_norm(r, p)


def _fp_poly_xgcd(a, b, p):
    """Extended gcd over F_p[t]: (g, s, t) with s*a + t*b = g, g monic."""
    r0, r1 = _fp_norm(a, p), _fp_norm(b, p)
    s0, s1 = [1], [0]
    t0, t1 = [0], [1]
    while any(r1):
        q, r = _fp_poly_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _fp_norm([x - y for x, y in _zip_pad(s0, _poly_mul_mod(q, s1, p))], p)
        t0, t1 = t1, _fp_norm([x - y for x, y in _zip_pad(t0, _poly_mul_mod(q, t1, p))], p)
    inv = pow(r0[-1], -1, p)
    return (
        [(x * inv) % p for x in r0],
        [(x * inv) % p for x in s0],
        [(x * inv) % p for x in t0],
    )


def _zip_pad(a, b, fill=0):
    n = max(len(a), len(b))
    return zip(a + [fill] * (n - len(a)), b + [fill] * (n - len(b)))


def hensel_unit_split(coeffs, p: int, W: int):
    """Split a monic polynomial over Z/p^W as (unit-root part) * (positive-part).

    Input is little-endian with leading coefficient 1.  Returns monic (A, B)
    with A*B = input mod p^W, A the factor whose roots are units, B reducing
    to t^deg(B) mod p.  Quadratic Hensel lifting; the mod-p parts are coprime
    since A mod p has nonzero constant term.
    """
    m = p ** W
    coeffs = [c % m for c in coeffs]
    assert coeffs[-1] == 1, "hensel_unit_split needs a monic input"
    fbar = [c % p for c in coeffs]
    k = 0
    while k < len(fbar) - 1 and fbar[k] == 0:
        k += 1
    if k == 0:
        return list(coeffs), [1]
    if k == len(coeffs) - 1:
        return [1], list(coeffs)
    A = [c % p for c in coeffs[k:]]  # mod-p unit-root part, monic of degree D-k
    B = [0] * k + [1]
    g, s, t = _fp_poly_xgcd(A, B, p)
    assert g == [1], "mod-p parts not coprime"
    S, T = list(s), list(t)
    kappa = 1
    while kappa < W:
        kappa = min(2 * kappa, W)
        mk = p ** kappa
        f = [c % mk for c in coeffs]
        ab = _poly_mul_mod(A, B, mk)
        e = [(x - y) % mk for x, y in _zip_pad(f, ab)]
        te = _poly_mul_mod(T, e, mk)
        q, dA = _poly_divmod_monic(te, A, mk)
        se = _poly_mul_mod(S, e, mk)
        qb = _poly_mul_mod(q, B, mk)
        dB = [(x + y) % mk for x, y in _zip_pad(se, qb)]
        A = [(x + y) % mk for x, y in _zip_pad(A, dA[: len(A) - 1])]
        B = [(x + y) % mk for x, y in _zip_pad(B, dB[: len(B) - 1])]
        # refresh the Bezout pair to the new modulus
        sa = _poly_mul_mod(S, A, mk)
        tb = _poly_mul_mod(T, B, mk)
        ep = [(x + y) % mk for x, y in _zip_pad(sa, tb)]
        ep[0] = (ep[0] - 1) % mk
        u = _poly_mul_mod(S, ep, mk)
        q2, r2 = _poly_divmod_monic(u, B, mk)
        S = _poly_trim([(x - y) % mk for x, y in _zip_pad(S, r2)])
        tep = _poly_mul_mod(T, ep, mk)
        q2a = _poly_mul_mod(q2, A, mk)
        tq = [(x + y) % mk for x, y in _zip_pad(tep, q2a)]
        T = _poly_trim([(x - y) % mk for x, y in _zip_pad(T, tq)])
    check = _poly_mul_mod(A, B, m)
    assert all(x == y for x, y in _zip_pad(check, [c % m for c in coeffs])), "Hensel product check failed"
    return A, B


def _shifted_positive_part(B, p, W):
    """B1(t) = B(pt)/p^deg(B) for monic B with all root valuations >= 1."""
    dB = len(B) - 1
    if W <= dB:
        raise PrecisionError("working precision exhausted by p-shift")
    W1 = W - dB
    m1 = p ** W1
    out = []
    for i, c in enumerate(B):
        num = (c % (p ** W)) * p ** i
        q, r = divmod(num, p ** dB)
        if r != 0:
            raise PrecisionError("positive part not divisible under p-shift")
        out.append(q % m1)
    return out, W1


def _monic_split_by_valuation(coeffs, p, W, h: Fraction):
    """Split monic integral coeffs into (roots v <= h) * (roots v > h).

    Returns (low, high, loss); factors are monic over Z/p^{W-loss}.  Recursion
    strips the unit-root block and p-shifts, so every slope block strictly
    below the cut must sit at an integral valuation.
    """
    if len(coeffs) - 1 == 0:
        return [1], [1], 0
    if h < 0:
        return [1], list(coeffs), 0
    A, B = hensel_unit_split(coeffs, p, W)
    if len(B) == 1:
        return A, [1], 0
    dB = len(B) - 1
    pts = [(dB - i, int_valuation(c, p)) for i, c in enumerate(B) if c % (p ** W) != 0]
    min_slope = NewtonPolygon.of_points(pts).slopes()
    min_slope = min_slope[0] if min_slope else Fraction(W)
    if h < min_slope:
        return A, B, 0
    if min_slope < 1:
        raise NoSlopeGap(
            f"slope block at {min_slope} below bound {h} is non-integral; "
            "unit-edge lifting cannot reach this split"
        )
    B1, W1 = _shifted_positive_part(B, p, W)
    low1, high1, loss1 = _monic_split_by_valuation(B1, p, W1, h - 1)
    loss = dB + loss1
    Wf = W - loss
    mf = p ** Wf

    def unshift(Q):  # Q1 -> p^deg(Q1) * Q1(t/p), monic again
        d = len(Q) - 1
        return [(Q[i] * p ** (d - i)) % mf for i in range(len(Q))]

    low = _poly_mul_mod([c % mf for c in A], unshift(low1), mf)
    return low, unshift(high1), loss


def slope_split(poly: ValuedPolynomial, h) -> tuple[ValuedPolynomial, ValuedPolynomial]:
    """Factor poly = P_low * P_high by root valuation: v <= h versus v > h.

    Roots at t = 0 (constant coefficients vanishing at precision) count as
    valuation above any bound and land in P_high.  Requires the Newton polygon
    to separate at h; Hensel lifting along the vertex.  The product of the two
    factors agrees with poly up to a unit at the reported precision.
    """
    h = Fraction(h)
    p = poly.p
    newton_polygon(poly)  # raises on the degenerate cases
    W0 = poly.min_prec()
    coeffs = [c.residue % (p ** W0) for c in poly.coeffs]
    ord0 = 0
    while ord0 < len(coeffs) - 1 and coeffs[ord0] == 0:
        ord0 += 1
    core = coeffs[ord0:]
    Dc = len(core) - 1
    if Dc == 0:
        return (
            ValuedPolynomial.one(p, W0),
            ValuedPolynomial([PadicScalar(p, c, W0) for c in coeffs]),
        )
    # make all roots integral: replace core(t) by p^(a*Dc) core(t/p^a), a >= -min slope
    vals = [int_valuation(c, p) if c else None for c in core]
    pts = [(Dc - i, v) for i, v in enumerate(vals) if v is not None]
    slopes = NewtonPolygon.of_points(pts).slopes()
    s_min = min(slopes) if slopes else Fraction(0)
    a = 0
    if s_min < 0:
        a = int(-s_min) if s_min.denominator == 1 else int(-s_min) + 1
    work = [core[i] * p ** (a * (Dc - i)) for i in range(len(core))]
    # scaling multiplies coefficient i by an exact p-power; residues stay exact mod p^W0
    W = W0
    m = p ** W
    work = [c % m for c in work]
    content = min(int_valuation(c, p) if c else W for c in work)
    if content >= W:
        raise NoSlopeGap("polynomial vanishes at stated precision")
    if content:
        work = [(c // p ** content) if c else 0 for c in work]
        W -= content
        m = p ** W
        work = [c % m for c in work]
    lead = work[-1]
    assert lead % p != 0, "leading coefficient must be a unit after normalization"
    lead_inv = pow(lead, -1, m)
    monic = [(c * lead_inv) % m for c in work]
    low, high, loss = _monic_split_by_valuation(monic, p, W, h + a)
    Wf = W - loss

    def deshift(Q, Wq):
        # factor with roots p^a*alpha -> factor with roots alpha, integrally normalized
        if a == 0:
            return Q, Wq
        d = len(Q) - 1
        shifts = []
        for i, c in enumerate(Q):
            v = int_valuation(c, p) if c % (p ** Wq) else Wq
            shifts.append(v - a * (d - i))
        c_norm = -min(shifts)
        out = []
        drop = 0
        for i, c in enumerate(Q):
            e = c_norm - a * (d - i)
            if e >= 0:
                out.append((c * p ** e) % (p ** Wq))
            else:
                q, r = divmod(c % (p ** Wq), p ** (-e))
                if r != 0:
                    raise PrecisionError("deshift lost integrality")
                out.append(q)
                drop = max(drop, -e)
        return out, Wq - drop

    low, Wl = deshift(low, Wf)
    high, Wh = deshift(high, Wf)
    Wout = min(Wl, Wh)
    if Wout <= 0:
        raise PrecisionError("slope split exhausted the working precision")
    mo = p ** Wout
    # normalize the global scalar into P_high so that P_low * P_high ~ poly
    prod = _poly_mul_mod([c % mo for c in low], [c % mo for c in high], mo)
    ref = [c % mo for c in core]
    pivot = next(i for i, c in enumerate(prod) if c % p != 0)
    lam = (ref[pivot] * pow(prod[pivot], -1, mo)) % mo
    high = [(c * lam) % mo for c in high]
    check = _poly_mul_mod([c % mo for c in low], high, mo)
    if any((x - y) % mo for x, y in _zip_pad(check, ref)):
        raise PrecisionError("slope split product check failed")
    P_low = ValuedPolynomial.from_ints(p, low, Wout)
    P_high = ValuedPolynomial.from_ints(p, [0] * ord0 + high, Wout)
    return P_low, P_high
