"""Truncated distribution modules with their monoid action.

An element of the level-n module is the moment vector (mu_0, ..., mu_{n-1})
with mu_j known in B/m^{n-j}: the finite quotient by the canonical filtration.
The matrix monoid (a unit, c divisible by p) acts through the z-expansion of
k(a+cz) ((b+dz)/(a+cz))^j; column j of the action matrix lists those
coefficients.  Sub-diagonal entries of the matrix land in m^{i-j}, which is
exactly what makes the filtration stable and the truncated action well
defined.
"""

from __future__ import annotations

from .errors import PrecisionError
from .padic import PadicScalar, binom_zp, factorial_valuation
from .rings import WedgeRing, ZpRing
from .weights import (
    ClassicalWeight,
    UniversalWeight,
    WedgeElement,
    Weight,
    a_param,
    char_eval,
)


class MonoidElement:
    """Integer matrix [[a,b],[c,d]] with a a p-unit, p | c, det nonzero."""

    __slots__ = ("p", "a", "b", "c", "d")

    def __init__(self, p: int, a: int, b: int, c: int, d: int):
        if a % p == 0:
            raise ValueError("upper-left entry must be a p-adic unit")
        if c % p != 0:
            raise ValueError("lower-left entry must be divisible by p")
        if a * d - b * c == 0:
            raise ValueError("determinant must be nonzero")
        self.p = p
        self.a, self.b, self.c, self.d = a, b, c, d

    @classmethod
    def identity(cls, p: int) -> "MonoidElement":
        return cls(p, 1, 0, 0, 1)

    @classmethod
    def from_matrix(cls, p: int, m) -> "MonoidElement":
        (a, b), (c, d) = m
        return cls(p, a, b, c, d)

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def matrix(self):
        return ((self.a, self.b), (self.c, self.d))

    def __mul__(self, other: "MonoidElement") -> "MonoidElement":
        if self.p != other.p:
            raise ValueError("mixed primes")
        a = self.a * other.a + self.b * other.c
        b = self.a * other.b + self.b * other.d
        c = self.c * other.a + self.d * other.c
        d = self.c * other.b + self.d * other.d
        return MonoidElement(self.p, a, b, c, d)

    def inverse(self) -> "MonoidElement":
        if abs(self.det) != 1:
            raise ValueError("only determinant +-1 elements invert integrally")
        s = self.det
        return MonoidElement(self.p, s * self.d, -s * self.b, -s * self.c, s * self.a)

    def __eq__(self, other):
        return isinstance(other, MonoidElement) and (
            (self.p, self.a, self.b, self.c, self.d)
            == (other.p, other.a, other.b, other.c, other.d)
        )

    def __hash__(self):
        return hash((self.p, self.a, self.b, self.c, self.d))

    def __repr__(self):
        return f"MonoidElement(p={self.p}, [[{self.a},{self.b}],[{self.c},{self.d}]])"


def working_precision(n: int, p: int, extra: int = 0) -> int:
    """Internal digit budget for level-n series work: n + ceil(n/(p-1)) + 2."""
    return n + -(-n // (p - 1)) + 2 + extra


def _e_series(weight: Weight, w_int: int, count: int, W: int):
    """Coefficients of k(1 + wz) = sum C(a_param, i) w^i z^i as ring-raw values.

    The standalone binomial C(a_U, i) need not be integral over the family
    ring (ramified points of the open disk defeat it), but C(a_U, i) w^i is,
    since v(w) >= 1 dominates v(i!).  The chain therefore folds one factor of
    w into each step before the exact division by i.
    """
    p = weight.p
    pad = W + factorial_valuation(max(count - 1, 1), p) + 1
    a = a_param(weight, pad)
    out = []
    if isinstance(a, WedgeElement):
        ring = WedgeRing(p, W)
        acc = WedgeElement.one(p, pad)
        for i in range(count):
            if i > 0:
                acc = (acc * (a - (i - 1))) * w_int
                acc = acc.divexact_int(i)
            if acc.level < W:
                raise PrecisionError("e-series ran out of digits; raise the buffer")
            out.append(ring.from_wedge(acc))
        return out, ring
    ring = ZpRing(p, W)
    acc = PadicScalar.one(p, pad)
    w_scalar = PadicScalar(p, w_int, pad)
    for i in range(count):
        if i > 0:
            acc = acc * (a - (i - 1)) * w_scalar
            vi = factorial_valuation(i, p) - factorial_valuation(i - 1, p)
            unit = i // p ** vi
            if unit > 1:
                acc = acc * PadicScalar(p, pow(unit, -1, p ** acc.prec), acc.prec)
            if vi:
                acc = acc.divexact_p(vi)
        if acc.prec < W:
            raise PrecisionError("e-series ran out of digits; raise the buffer")
        out.append(acc.residue % ring.mod)
    return out, ring


def action_matrix_raw(gamma: MonoidElement, weight: Weight, n: int, W: int):
    """Level-n action matrix with all entries at uniform working precision W.

    Returns (ring, rows) with rows[i][j] the coefficient of z^i in the
    z-expansion of k(a+cz) ((b+dz)/(a+cz))^j.
    """
    p = gamma.p
    pad = W + factorial_valuation(max(n - 1, 1), p) + 1
    a_inv_pad = pow(gamma.a, -1, p ** pad)
    E, ring = _e_series(weight, (gamma.c * a_inv_pad) % p ** pad, n, W)
    mod = p ** W
    a_inv = a_inv_pad % mod
    w = (gamma.c * a_inv) % mod
    # R(z) = (b + dz)/(a + cz) as scalar series: R_m = ainv(b(-w)^m + d(-w)^(m-1))
    inv_pows = [1]
    for _ in range(n):
        inv_pows.append((inv_pows[-1] * (-w)) % mod)
    R = [
        (a_inv * (gamma.b * inv_pows[m] + (gamma.d * inv_pows[m - 1] if m >= 1 else 0))) % mod
        for m in range(n)
    ]
    k_at_a = char_eval(weight, PadicScalar(p, gamma.a, W + 2), W)
    if isinstance(k_at_a, WedgeElement):
        head = ring.from_wedge(k_at_a)
    else:
        head = ring.from_int(k_at_a.residue)
    col = [ring.mul(head, e) for e in E]
    cols = [col]
    for _ in range(1, n):
        col = _scalar_series_mul(ring, col, R, n)
        cols.append(col)
    rows = [[cols[j][i] for j in range(n)] for i in range(n)]
    return ring, rows


def _scalar_series_mul(ring, col, R, n):
    out = [ring.zero()] * n
    for i, ci in enumerate(col):
        if ring.is_zero(ci):
            continue
        for m in range(n - i):
            rm = R[m]
            if rm:
                out[i + m] = ring.add(out[i + m], ring.scale_by_int(ci, rm))
    return out


class ActionMatrix:
    """Action matrix on the level-n module, rows carried at profile precision.

    entries[i][j] is the coefficient of the basis element i in the image of
    basis element j; row i is stored in B/m^{n-i}.  Sub-diagonal smallness
    (entries[i][j] in m^{i-j} for i > j) certifies filtration stability.
    """

    __slots__ = ("weight", "level", "gamma", "entries", "_ring", "_raw")

    def __init__(self, weight, level, gamma, entries, ring, raw):
        self.weight = weight
        self.level = level
        self.gamma = gamma
        self.entries = entries
        self._ring = ring
        self._raw = raw

    def profile_entry(self, i: int, j: int):
        return self.entries[i][j]

    def subdiagonal_certified(self) -> bool:
        """Check entries[i][j] in m^{i-j} for i > j, as far as row precision sees."""
        for i in range(self.level):
            for j in range(i):
                e = self.entries[i][j]
                depth = e.mval() if isinstance(e, WedgeElement) else e.valuation_floor()
                if depth < min(i - j, self.level - i):
                    return False
        return True

    def __repr__(self):
        return f"ActionMatrix(level={self.level}, gamma={self.gamma!r})"


def action_matrix(gamma: MonoidElement, weight: Weight, n: int, extra_prec: int = 0) -> ActionMatrix:
    """Public profile-typed action matrix; see action_matrix_raw for the kernel."""
    p = gamma.p
    W = working_precision(n, p, extra_prec)
    ring, raw = action_matrix_raw(gamma, weight, n, W)
    entries = []
    for i in range(n):
        prec_i = n - i
        row = []
        for j in range(n):
            e = raw[i][j]
            if ring.kind == "wedge":
                row.append(WedgeElement(p, list(e), prec_i))
            else:
                row.append(PadicScalar(p, e, prec_i))
        entries.append(row)
    return ActionMatrix(weight, n, gamma, entries, ring, raw)


class TruncatedDistribution:
    """Moment vector (mu_0, ..., mu_{n-1}) with mu_j in B/m^{n-j}.

    Moments may carry fewer digits than the nominal profile (a boundary-weight
    specialization certifies less); they are never lifted beyond what they
    carry.
    """

    __slots__ = ("weight", "level", "moments")

    def __init__(self, weight: Weight, level: int, moments):
        moments = list(moments)
        if len(moments) != level:
            raise ValueError(f"need {level} moments, got {len(moments)}")
        fixed = []
        for j, mu in enumerate(moments):
            want = level - j
            if isinstance(mu, int):
                if isinstance(weight, UniversalWeight):
                    mu = WedgeElement.constant(weight.p, mu, want)
                else:
                    mu = PadicScalar(weight.p, mu, want)
            elif isinstance(mu, WedgeElement):
                if mu.level > want:
                    mu = mu.reduce(want)
            else:
                if mu.prec > want:
                    mu = mu.reduce(want)
            fixed.append(mu)
        self.weight = weight
        self.level = level
        self.moments = tuple(fixed)

    def at_full_profile(self) -> bool:
        return all(
            (m.level if isinstance(m, WedgeElement) else m.prec) == self.level - j
            for j, m in enumerate(self.moments)
        )

    @classmethod
    def zero(cls, weight: Weight, level: int) -> "TruncatedDistribution":
        return cls(weight, level, [0] * level)

    def __add__(self, other):
        self._compat(other)
        return TruncatedDistribution(
            self.weight, self.level, [a + b for a, b in zip(self.moments, other.moments)]
        )

    def __sub__(self, other):
        self._compat(other)
        return TruncatedDistribution(
            self.weight, self.level, [a - b for a, b in zip(self.moments, other.moments)]
        )

    def __neg__(self):
        return TruncatedDistribution(self.weight, self.level, [-a for a in self.moments])

    def _compat(self, other):
        if self.level != other.level:
            raise ValueError("level mismatch")
        if self.weight.p != other.weight.p:
            raise ValueError("mixed primes")

    def scale(self, x) -> "TruncatedDistribution":
        """Multiply every moment by a ring element (wedge scalar for families)."""
        return TruncatedDistribution(self.weight, self.level, [mu * x for mu in self.moments])

    def in_filtration_depth(self, m: int) -> bool:
        """True when the vector lies in Fil^m: mu_j in m^{m-j} for j < m."""
        for j, mu in enumerate(self.moments[: min(m, self.level)]):
            need = min(m - j, self.level - j)
            mval = mu.mval() if isinstance(mu, WedgeElement) else min(
                mu.valuation_floor(), mu.prec
            )
            if mval < need:
                return False
        return True

    def agrees_with(self, other: "TruncatedDistribution") -> bool:
        if self.level != other.level:
            return False
        for a, b in zip(self.moments, other.moments):
            if isinstance(a, WedgeElement):
                if not a.agrees_with(b):
                    return False
            else:
                if not a.agrees_with(b):
                    return False
        return True

    def __eq__(self, other):
        return (
            isinstance(other, TruncatedDistribution)
            and self.level == other.level
            and self.moments == other.moments
        )

    def __repr__(self):
        return f"TruncatedDistribution(level={self.level}, moments={list(self.moments)})"


def act(mu: TruncatedDistribution, gamma: MonoidElement, matrix: ActionMatrix | None = None) -> TruncatedDistribution:
    """Right action (mu|gamma)_i = sum_j A[j][i] mu_j on the truncated module.

    Moments are lifted to the working precision by an arbitrary representative
    (zero digits); the sub-diagonal smallness of the matrix absorbs the lift
    ambiguity, so output moment i is correct in B/m^{n-i}.
    """
    n = mu.level
    if not mu.at_full_profile():
        raise PrecisionError("distribution does not carry the full level profile")
    if matrix is None:
        matrix = action_matrix(gamma, mu.weight, n)
    if matrix.level != n:
        raise ValueError("level mismatch between matrix and distribution")
    ring = matrix._ring
    raw = matrix._raw
    if ring.kind == "wedge":
        mus = [ring.from_coeffs(m.coeffs) for m in mu.moments]
    else:
        mus = [m.residue for m in mu.moments]
    out = []
    for i in range(n):
        acc = ring.zero()
        for j in range(n):
            m_j = mus[j]
            e = raw[j][i]
            if ring.kind == "wedge":
                acc = ring.add(acc, ring.mul(e, m_j))
            else:
                acc = (acc + e * m_j) % ring.mod
        if ring.kind == "wedge":
            out.append(WedgeElement(mu.weight.p, list(acc), n - i))
        else:
            out.append(PadicScalar(mu.weight.p, acc, n - i))
    return TruncatedDistribution(mu.weight, n, out)


def specialize_dist(mu: TruncatedDistribution, k: int) -> TruncatedDistribution:
    """Family-to-fiber specialization, moment by moment; level preserved.

    At interior classical weights every moment keeps its full m^{n-j} class;
    boundary weights yield the honest (smaller) certificates.
    """
    if not isinstance(mu.weight, UniversalWeight):
        raise TypeError("specialize_dist needs a family distribution")
    disk = mu.weight.disk
    out = [disk.specialize(m, k) for m in mu.moments]
    return TruncatedDistribution(ClassicalWeight(mu.weight.p, k), mu.level, out)


def rho_k(mu: TruncatedDistribution, k: int):
    """Classical projection: the first k+1 moments (x^{k-j} y^j duals)."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if mu.level < k + 1:
        raise ValueError(f"level {mu.level} too small for classical weight {k}")
    return list(mu.moments[: k + 1])


def symk_action_matrix(a: int, b: int, c: int, d: int, k: int):
    """Exact integer action on Symm^k moment vectors: column j expands
    (a+cz)^{k-j} (b+dz)^j; all polynomials of degree <= k."""
    from math import comb

    n = k + 1
    cols = []
    for j in range(n):
        # (a+cz)^(k-j) coefficients
        pa = [comb(k - j, i) * a ** (k - j - i) * c ** i for i in range(k - j + 1)]
        pb = [comb(j, i) * b ** (j - i) * d ** i for i in range(j + 1)]
        col = [0] * n
        for i1, x in enumerate(pa):
            for i2, y in enumerate(pb):
                if i1 + i2 <= k:
                    col[i1 + i2] += x * y
        cols.append(col)
    return [[cols[j][i] for j in range(n)] for i in range(n)]
