"""Raw coefficient-ring contexts for the matrix kernels.

Hot loops (operator assembly, characteristic polynomials, elimination) work on
plain representations: ints for Z/p^W, int tuples for the wedge ring
Lambda/(p,T)^W, Fractions for the exact rational tier.  The public classes
PadicScalar / WedgeElement wrap these at the API boundary.
"""

from __future__ import annotations

from fractions import Fraction

from .padic import int_valuation
from .weights import WedgeElement


class ZpRing:
    """Z/p^W; elements are ints reduced into [0, p^W)."""

    kind = "zp"

    def __init__(self, p: int, prec: int):
        self.p = p
        self.prec = prec
        self.mod = p ** prec

    def zero(self):
        return 0

    def one(self):
        return 1

    def from_int(self, n: int):
        return n % self.mod

    def add(self, a, b):
        return (a + b) % self.mod

    def sub(self, a, b):
        return (a - b) % self.mod

    def neg(self, a):
        return (-a) % self.mod

    def mul(self, a, b):
        return (a * b) % self.mod

    def is_zero(self, a):
        return a % self.mod == 0

    def is_unit(self, a):
        return a % self.p != 0

    def inv(self, a):
        return pow(a, -1, self.mod)

    def val(self, a):
        """m-adic order, capped at the working precision."""
        a %= self.mod
        return self.prec if a == 0 else int_valuation(a, self.p)

    def residue(self, a):
        return a % self.p

    def scale_by_int(self, a, n: int):
        return (a * n) % self.mod

    def reduce_prec(self, a, prec: int):
        return a % self.p ** prec

    def random(self, rng):
        return rng.randrange(self.mod)


class WedgeRing:
    """Lambda/(p,T)^W; elements are tuples (c_0..c_{W-1}), c_j mod p^{W-j}."""

    kind = "wedge"

    def __init__(self, p: int, prec: int):
        self.p = p
        self.prec = prec
        self.pows = [p ** e for e in range(prec + 1)]

    def zero(self):
        return (0,) * self.prec

    def one(self):
        return (1,) + (0,) * (self.prec - 1)

    def from_int(self, n: int):
        return (n % self.pows[self.prec],) + (0,) * (self.prec - 1)

    def from_coeffs(self, coeffs):
        W = self.prec
        cs = list(coeffs)[:W] + [0] * max(0, W - len(coeffs))
        return tuple(c % self.pows[W - j] for j, c in enumerate(cs))

    def from_wedge(self, x: WedgeElement):
        if x.level < self.prec:
            raise ValueError(f"wedge level {x.level} below ring precision {self.prec}")
        return self.from_coeffs(x.coeffs)

    def to_wedge(self, a) -> WedgeElement:
        return WedgeElement(self.p, list(a), self.prec)

    def add(self, a, b):
        W = self.prec
        pw = self.pows
        return tuple((a[j] + b[j]) % pw[W - j] for j in range(W))

    def sub(self, a, b):
        W = self.prec
        pw = self.pows
        return tuple((a[j] - b[j]) % pw[W - j] for j in range(W))

    def neg(self, a):
        W = self.prec
        pw = self.pows
        return tuple((-a[j]) % pw[W - j] for j in range(W))

    def mul(self, a, b):
        W = self.prec
        out = [0] * W
        for i in range(W):
            ai = a[i]
            if ai:
                for j in range(W - i):
                    bj = b[j]
                    if bj:
                        out[i + j] += ai * bj
        pw = self.pows
        return tuple(out[j] % pw[W - j] for j in range(W))

    def is_zero(self, a):
        return not any(a)

    def is_unit(self, a):
        return a[0] % self.p != 0

    def inv(self, a):
        W = self.prec
        m = self.pows[W]
        inv0 = pow(a[0], -1, m)
        out = [inv0] + [0] * (W - 1)
        for j in range(1, W):
            acc = 0
            for i in range(1, j + 1):
                acc += a[i] * out[j - i]
            out[j] = (-inv0 * acc) % m
        return tuple(out[j] % self.pows[W - j] for j in range(W))

    def val(self, a):
        """(p,T)-adic order, capped at the working precision."""
        best = self.prec
        for j, c in enumerate(a):
            if c:
                v = j + int_valuation(c, self.p)
                if v < best:
                    best = v
            if j >= best:
                break
        return best

    def residue(self, a):
        return a[0] % self.p

    def scale_by_int(self, a, n: int):
        W = self.prec
        pw = self.pows
        return tuple((a[j] * n) % pw[W - j] for j in range(W))

    def random(self, rng):
        return self.from_coeffs([rng.randrange(self.pows[self.prec]) for _ in range(self.prec)])


class FractionRing:
    """Exact rationals, for the classical oracle tier."""

    kind = "fraction"

    def __init__(self):
        self.prec = None

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def from_int(self, n: int):
        return Fraction(n)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def is_zero(self, a):
        return a == 0

    def is_unit(self, a):
        return a != 0

    def inv(self, a):
        return 1 / a

    def val(self, a):
        raise TypeError("exact rationals carry no truncation order")

    def scale_by_int(self, a, n: int):
        return a * n

    def random(self, rng):
        return Fraction(rng.randrange(-50, 50), rng.randrange(1, 20))
