"""Coefficient rings for weight families and the weight-space conventions.

The family ring is Lambda/(p,T)^n with the coefficient of T^j stored modulo
p^{n-j} (the weak-topology truncation).  The weight disk is the radius-|p|
disk about an integer center k0, with coordinate fixed by
k(1+p) = (1+p)^{k0} (1+pT); a classical weight k = k0 mod (p-1) then sits at
T = ((1+p)^{k-k0} - 1)/p.  That convention keeps the exponent
a = k0 + log(1+pT)/log(1+p) integral, so family computations never leave the
integral ring.
"""

from __future__ import annotations

from .errors import PrecisionError
from .padic import (
    PadicScalar,
    binom_zp,
    exp,
    factorial_valuation,
    int_valuation,
    log1p,
    teichmuller,
)


class WedgeElement:
    """Class in Lambda/(p,T)^n: coefficient of T^j stored mod p^{n-j}."""

    __slots__ = ("p", "level", "coeffs")

    def __init__(self, p: int, coeffs, level: int):
        if level < 1:
            raise PrecisionError("wedge level must be >= 1")
        self.p = p
        self.level = level
        cs = list(coeffs)[:level]
        cs += [0] * (level - len(cs))
        self.coeffs = tuple(c % p ** (level - j) for j, c in enumerate(cs))

    @classmethod
    def zero(cls, p: int, level: int) -> "WedgeElement":
        return cls(p, [], level)

    @classmethod
    def one(cls, p: int, level: int) -> "WedgeElement":
        return cls(p, [1], level)

    @classmethod
    def T(cls, p: int, level: int) -> "WedgeElement":
        return cls(p, [0, 1], level)

    @classmethod
    def constant(cls, p: int, c: int, level: int) -> "WedgeElement":
        return cls(p, [c], level)

    def _check(self, other: "WedgeElement") -> None:
        if self.p != other.p:
            raise ValueError("mixed primes")

    def __add__(self, other):
        if isinstance(other, int):
            other = WedgeElement.constant(self.p, other, self.level)
        self._check(other)
        n = min(self.level, other.level)
        return WedgeElement(self.p, [a + b for a, b in zip(self.coeffs, other.coeffs)], n)

    __radd__ = __add__

    def __neg__(self):
        return WedgeElement(self.p, [-c for c in self.coeffs], self.level)

    def __sub__(self, other):
        if isinstance(other, int):
            other = WedgeElement.constant(self.p, other, self.level)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return WedgeElement(self.p, [c * other for c in self.coeffs], self.level)
        if isinstance(other, PadicScalar):
            # uncertainty: (p,T)^n * s + c * p^prec, so the level becomes
            # min(n + v(s), prec(s))
            vs = other.valuation_floor()
            n = min(self.level + vs, other.prec)
            if n < 1:
                raise PrecisionError("scalar too shallow for this wedge element")
            return WedgeElement(self.p, [c * other.residue for c in self.coeffs[:n]], n)
        self._check(other)
        n = min(self.level, other.level)
        out = [0] * n
        for i, a in enumerate(self.coeffs[:n]):
            if a:
                for j, b in enumerate(other.coeffs[: n - i]):
                    out[i + j] += a * b
        return WedgeElement(self.p, out, n)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = WedgeElement.one(self.p, self.level)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        return (
            isinstance(other, WedgeElement)
            and self.p == other.p
            and self.level == other.level
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.p, self.level, self.coeffs))

    def __repr__(self):
        return f"WedgeElement(p={self.p}, level={self.level}, {list(self.coeffs)})"

    def constant_term(self) -> PadicScalar:
        return PadicScalar(self.p, self.coeffs[0], self.level)

    def is_unit(self) -> bool:
        return self.coeffs[0] % self.p != 0

    def inverse(self) -> "WedgeElement":
        """Power-series inverse of a unit, valid in the same quotient."""
        if not self.is_unit():
            raise ZeroDivisionError("constant term not a unit")
        n = self.level
        m = self.p ** n
        inv0 = pow(self.coeffs[0], -1, m)
        out = [inv0] + [0] * (n - 1)
        for j in range(1, n):
            acc = 0
            for i in range(1, j + 1):
                acc += self.coeffs[i] * out[j - i] if i < n else 0
            out[j] = (-inv0 * acc) % m
        return WedgeElement(self.p, out, n)

    def mval(self) -> int:
        """Largest e <= level with the element in (p,T)^e."""
        best = self.level
        for j, c in enumerate(self.coeffs):
            v = j + (int_valuation(c, self.p) if c else self.level)
            best = min(best, v)
        return best

    def is_zero_at_precision(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def reduce(self, level: int) -> "WedgeElement":
        if level > self.level:
            raise PrecisionError(f"cannot lift wedge level {self.level} to {level}")
        return WedgeElement(self.p, self.coeffs, level)

    def divexact_int(self, d: int) -> "WedgeElement":
        """Exact division by an integer d = unit * p^v; drops the level by v."""
        v = int_valuation(d, self.p) if d % self.p == 0 else 0
        unit = d // self.p ** v
        n = self.level - v
        if n < 1:
            raise PrecisionError("no wedge digits left after division")
        out = []
        for j in range(n):
            m = self.p ** (n - j)
            c = self.coeffs[j] * pow(unit, -1, m * self.p ** v)
            c %= m * self.p ** v
            q, r = divmod(c, self.p ** v)
            if r != 0:
                raise ValueError(f"coefficient of T^{j} not divisible by p^{v}")
            out.append(q % m)
        return WedgeElement(self.p, out, n)

    def agrees_with(self, other: "WedgeElement", level: int | None = None) -> bool:
        n = min(self.level, other.level)
        if level is not None:
            n = min(n, level)
        return all(
            (a - b) % self.p ** (n - j) == 0
            for j, (a, b) in enumerate(zip(self.coeffs[:n], other.coeffs[:n]))
        )

    def specialize(self, tau: PadicScalar) -> PadicScalar:
        """Evaluate at T = tau with the honest certified precision.

        The ideal (p,T)^n evaluates at tau into p^{min_{0<=j<=n}(n-j+j*v(tau))},
        so interior points (v(tau) >= 1) keep all n digits while boundary
        points (v(tau) = 0) certify nothing: the generator T^n carries no
        p-power at all.  The returned scalar records that honest certificate.
        """
        if tau.p != self.p:
            raise ValueError("mixed primes")
        n = self.level
        if tau.prec < n:
            raise PrecisionError("specialization point carries fewer digits than the level")
        vt = tau.valuation_floor()
        cert = min((n - j) + j * vt for j in range(n + 1))
        cert = min(cert, tau.prec)
        acc = 0
        mod = self.p ** max(cert, 1)
        tpow = 1
        for j in range(n):
            acc = (acc + self.coeffs[j] * tpow) % mod
            tpow = (tpow * tau.residue) % mod
        return PadicScalar(self.p, acc, cert)


# ---------------------------------------------------------------------------
# weight space


class WeightDisk:
    """Radius-|p| disk about an integer center; k(1+p) = (1+p)^{k0}(1+pT)."""

    __slots__ = ("p", "center")

    def __init__(self, p: int, center: int):
        self.p = p
        self.center = center

    def contains_classical(self, k: int) -> bool:
        return (k - self.center) % (self.p - 1) == 0

    def coordinate(self, k: int, prec: int) -> PadicScalar:
        """T-coordinate ((1+p)^{k-k0} - 1)/p of a classical weight in the disk."""
        if not self.contains_classical(k):
            raise ValueError(f"weight {k} outside the disk about {self.center}")
        p = self.p
        m = p ** (prec + 1)
        val = pow(1 + p, k - self.center, m) if k >= self.center else pow(
            pow(1 + p, -1, m), self.center - k, m
        )
        return PadicScalar(p, (val - 1) // p, prec)

    def uniformizer(self, k: int, level: int) -> WedgeElement:
        """T - tau_k: vanishes to first order at k and nowhere else on the disk."""
        tau = self.coordinate(k, level)
        return WedgeElement(self.p, [-tau.residue, 1], level)

    def specialize(self, x: WedgeElement, k: int) -> PadicScalar:
        return x.specialize(self.coordinate(k, x.level))

    def __eq__(self, other):
        return isinstance(other, WeightDisk) and (self.p, self.center) == (other.p, other.center)

    def __repr__(self):
        return f"WeightDisk(p={self.p}, center={self.center})"


class Weight:
    """Base class; see ClassicalWeight, AccessibleWeight, UniversalWeight."""

    p: int

    def is_classical(self) -> bool:
        return isinstance(self, ClassicalWeight)

    def is_universal(self) -> bool:
        return isinstance(self, UniversalWeight)


class ClassicalWeight(Weight):
    """The character a -> a^k for an integer k."""

    __slots__ = ("p", "k")

    def __init__(self, p: int, k: int):
        self.p = p
        self.k = k

    def __repr__(self):
        return f"ClassicalWeight(p={self.p}, k={self.k})"

    def __eq__(self, other):
        return isinstance(other, ClassicalWeight) and (self.p, self.k) == (other.p, other.k)

    def __hash__(self):
        return hash(("cl", self.p, self.k))


class AccessibleWeight(Weight):
    """Weight with v(<k(1+p)> - 1) >= 1, determined by k(1+p) and a tame index."""

    __slots__ = ("p", "tame", "gamma_value")

    def __init__(self, p: int, tame: int, gamma_value: PadicScalar):
        self.p = p
        self.tame = tame % (p - 1)
        if not gamma_value.is_unit():
            raise ValueError("k(1+p) must be a unit")
        if (gamma_value - 1).valuation_floor() < 1:
            raise ValueError("not an r=1 accessible weight: v(k(1+p)-1) < 1")
        self.gamma_value = gamma_value

    def __repr__(self):
        return f"AccessibleWeight(p={self.p}, tame={self.tame}, k(1+p)={self.gamma_value!r})"


class UniversalWeight(Weight):
    """The universal character of a weight disk."""

    __slots__ = ("p", "disk")

    def __init__(self, disk: WeightDisk):
        self.p = disk.p
        self.disk = disk

    def __repr__(self):
        return f"UniversalWeight({self.disk!r})"


def _omega_and_one_unit(t: PadicScalar) -> tuple[PadicScalar, PadicScalar]:
    """Split a unit as omega(t) * <t> with <t> a 1-unit."""
    if not t.is_unit():
        raise ValueError("t must be a unit")
    om = teichmuller(t.p, t.residue, t.prec)
    return om, t * om.inverse()


def _one_unit_exponent(t1: PadicScalar) -> PadicScalar:
    """s = log(t1)/log(1+p) in Z_p for a 1-unit t1."""
    p = t1.p
    lg = log1p(t1 - 1)
    base = log1p(PadicScalar(p, p, t1.prec))
    return lg.divexact_p(1) * base.divexact_p(1).inverse()


def a_param(weight: Weight, level: int):
    """The exponent a with k(t) = exp(a log t) on 1-units.

    Classical k gives the constant k; the universal weight gives
    k0 + log(1+pT)/log(1+p), integral for this disk convention.  Accessible
    weights need k(1+p) to one digit beyond the requested level (the division
    by log(1+p) costs one digit).
    """
    p = weight.p
    if isinstance(weight, ClassicalWeight):
        return PadicScalar(p, weight.k, level)
    if isinstance(weight, AccessibleWeight):
        if weight.gamma_value.prec < level + 1:
            raise PrecisionError("k(1+p) carries fewer digits than level + 1")
        return _one_unit_exponent(weight.gamma_value).reduce(level)
    if isinstance(weight, UniversalWeight):
        return _universal_a(p, weight.disk.center, level)
    raise TypeError(f"not a weight: {weight!r}")


def _universal_a(p: int, k0: int, level: int) -> WedgeElement:
    # log(1+pT) at level+2; coefficient of T^m is (-1)^(m+1) p^m / m
    n1 = level + 2
    coeffs = [0]
    for m_ in range(1, n1):
        v = int_valuation(m_, p) if m_ % p == 0 else 0
        unit = m_ // p ** v
        c = p ** (m_ - v) * pow(unit, -1, p ** (n1 - m_ + v))
        if m_ % 2 == 0:
            c = -c
        coeffs.append(c)
    log_num = WedgeElement(p, coeffs, n1)
    u = log1p(PadicScalar(p, p, n1)).divexact_p(1)  # log(1+p)/p, a unit
    out = (log_num * u.inverse()).divexact_int(p)
    return (WedgeElement.constant(p, k0, out.level) + out).reduce(level)


def char_eval(weight: Weight, t, level: int):
    """Value of the weight character at a unit t, in B/m^level.

    Universal weights return omega(t)^{k0} <t>^{k0} (1+pT)^{log<t>/log(1+p)}
    as a WedgeElement (one extra digit of t required); classical and
    accessible weights return a PadicScalar.
    """
    p = weight.p
    if isinstance(weight, ClassicalWeight):
        if isinstance(t, int):
            t = PadicScalar(p, t, level)
        if t.prec < level:
            raise PrecisionError(f"t needs {level} digits for level {level}")
        if not t.is_unit():
            raise ValueError("characters are evaluated on units")
        return (t ** weight.k).reduce(level)
    if isinstance(weight, AccessibleWeight):
        if isinstance(t, int):
            t = PadicScalar(p, t, level)
        if t.prec < level:
            raise PrecisionError(f"t needs {level} digits for level {level}")
        if not t.is_unit():
            raise ValueError("characters are evaluated on units")
        om, t1 = _omega_and_one_unit(t)
        a = _one_unit_exponent(weight.gamma_value)
        if a.prec < 1:
            raise PrecisionError("k(1+p) too shallow")
        return (om ** weight.tame * exp(a * log1p(t1 - 1))).reduce(level)
    if isinstance(weight, UniversalWeight):
        work = level + 2 + factorial_valuation(level, p)
        if isinstance(t, int):
            t = PadicScalar(p, t, work)
        if t.prec < level + 1:
            raise PrecisionError(f"t needs {level + 1} digits for universal level {level}")
        if not t.is_unit():
            raise ValueError("characters are evaluated on units")
        work = min(work, t.prec)
        om, t1 = _omega_and_one_unit(PadicScalar(p, t.residue, work))
        k0 = weight.disk.center
        s = _one_unit_exponent(t1)
        head = om ** (k0 % (p - 1)) * t1 ** k0
        coeffs = []
        for j in range(level):
            cj = head * binom_zp(s, j) * (PadicScalar(p, p, work) ** j)
            if cj.prec < level - j:
                raise PrecisionError("insufficient working digits in char_eval")
            coeffs.append(cj.residue)
        return WedgeElement(p, coeffs, level)
    raise TypeError(f"not a weight: {weight!r}")


def specialize_coeff(x: WedgeElement, disk: WeightDisk, k: int) -> PadicScalar:
    """Evaluate a family coefficient at a classical weight of the disk."""
    return disk.specialize(x, k)


def uniformizer(disk: WeightDisk, k: int, level: int) -> WedgeElement:
    return disk.uniformizer(k, level)
