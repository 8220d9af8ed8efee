import random

import pytest

from ovmodsym.errors import PrecisionError
from ovmodsym.padic import PadicScalar, exp, log1p
from ovmodsym.weights import (
    AccessibleWeight,
    ClassicalWeight,
    UniversalWeight,
    WedgeElement,
    WeightDisk,
    a_param,
    char_eval,
    specialize_coeff,
    uniformizer,
)


def _poly_mul_reduce(p, a, b, n):
    """Oracle: multiply integer polynomials, then reduce into the wedge profile."""
    out = [0] * n
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            if i + j < n:
                out[i + j] += x * y
    return tuple(c % p ** (n - j) for j, c in enumerate(out))


class TestWedgeRing:
    def test_reduction_profile(self):
        x = WedgeElement(5, [5 ** 8, 5 ** 7, 3], 4)
        assert x.coeffs == (0, 0, 3, 0)

    def test_ring_axioms_500_random_triples(self):
        rng = random.Random(42)
        p, n = 5, 6
        for _ in range(500):
            xs = [
                WedgeElement(p, [rng.randrange(p ** n) for _ in range(n)], n)
                for _ in range(3)
            ]
            x, y, z = xs
            assert (x + y) + z == x + (y + z)
            assert x + y == y + x
            assert x * y == y * x
            assert (x * y) * z == x * (y * z)
            assert x * (y + z) == x * y + x * z

    def test_mul_agrees_with_polynomial_reduce(self):
        rng = random.Random(7)
        p, n = 5, 5
        for _ in range(200):
            a = [rng.randrange(p ** n) for _ in range(n)]
            b = [rng.randrange(p ** n) for _ in range(n)]
            x = WedgeElement(p, a, n)
            y = WedgeElement(p, b, n)
            # representatives differ from a, b only inside the ideal; products agree
            assert (x * y).coeffs == _poly_mul_reduce(p, x.coeffs, y.coeffs, n)

    def test_well_defined_on_classes(self):
        p, n = 5, 4
        x = WedgeElement(p, [3, 2, 1, 4], n)
        y = WedgeElement(p, [1, 7, 2, 0], n)
        # perturb representatives inside (p,T)^n and compare products
        x2 = WedgeElement(p, [3 + p ** 4, 2 + p ** 3, 1 + p ** 2, 4 + p], n)
        assert x == x2
        assert x * y == x2 * y

    def test_inverse(self):
        p, n = 7, 5
        x = WedgeElement(p, [3, 5, 1, 2, 6], n)
        assert (x * x.inverse()) == WedgeElement.one(p, n)

    def test_divexact(self):
        p, n = 5, 5
        x = WedgeElement(p, [25, 50, 75, 100, 125], n)
        y = x.divexact_int(25)
        assert y.level == n - 2
        assert y.coeffs == (1, 2, 3)

    def test_mval(self):
        p, n = 5, 6
        assert WedgeElement(p, [0, 0, 5, 0, 0, 0], n).mval() == 3
        assert WedgeElement.zero(p, n).mval() == n
        assert WedgeElement(p, [25], n).mval() == 2


class TestDisk:
    def test_coordinate_of_center(self):
        d = WeightDisk(5, 0)
        assert d.coordinate(0, 8).residue == 0

    def test_coordinate_of_shifted_weight(self):
        p, prec = 5, 8
        d = WeightDisk(p, 0)
        tau = d.coordinate(p - 1, prec)
        want = (pow(1 + p, p - 1, p ** (prec + 1)) - 1) // p
        assert tau.residue == want % p ** prec
        assert tau.valuation_floor() == 0  # boundary weight

    def test_uniformizer(self):
        p, n = 5, 6
        d = WeightDisk(p, 0)
        u0 = d.uniformizer(0, n)
        assert u0 == WedgeElement.T(p, n)
        u4 = d.uniformizer(4, n)
        assert d.specialize(u4, 4).residue == 0
        # at a second classical point the uniformizer does not vanish
        other = d.specialize(u4, 0)
        assert other.residue != 0

    def test_outside_disk_rejected(self):
        d = WeightDisk(5, 0)
        with pytest.raises(ValueError):
            d.coordinate(3, 6)

    def test_specialize_is_ring_map(self):
        rng = random.Random(9)
        p, n = 5, 6
        d = WeightDisk(p, 0)
        # k = 0 is the center (full strength); k = 20 is interior with v = 1;
        # k = 4 sits on the boundary and certifies nothing, trivially passing
        for k in (0, 20, 4):
            for _ in range(50):
                x = WedgeElement(p, [rng.randrange(p ** n) for _ in range(n)], n)
                y = WedgeElement(p, [rng.randrange(p ** n) for _ in range(n)], n)
                sx, sy = d.specialize(x, k), d.specialize(y, k)
                sxy = d.specialize(x * y, k)
                sxpy = d.specialize(x + y, k)
                assert sxy.agrees_with(sx * sy, sxy.prec)
                assert sxpy.agrees_with(sx + sy, sxpy.prec)
        assert d.specialize(WedgeElement.one(p, n), 0).prec == n
        assert d.specialize(WedgeElement.one(p, n), 20).prec == n

    def test_specialize_kills_exactly_uniformizer_multiples(self):
        rng = random.Random(10)
        p, n = 5, 6
        d = WeightDisk(p, 0)
        t0 = d.uniformizer(0, n)
        for _ in range(30):
            x = WedgeElement(p, [rng.randrange(p ** n) for _ in range(n)], n)
            prod = t0 * x
            assert d.specialize(prod, 0).residue == 0

    def test_interior_vs_boundary_certificates(self):
        p, n = 5, 8
        d = WeightDisk(p, 0)
        x = WedgeElement(p, [3, 1, 4, 1, 5, 9, 2, 6], n)
        assert d.specialize(x, 0).prec == n  # center: full level
        assert d.specialize(x, 4).prec == 0  # boundary: T^n kills every digit
        assert d.specialize(x, 4 * p).prec == n  # v(k - k0) = 1: interior


class TestCharacters:
    def test_classical(self):
        w = ClassicalWeight(5, 3)
        assert char_eval(w, 2, 4).residue == 8

    def test_universal_at_one_plus_p_is_coordinate_series(self):
        p, n = 5, 6
        w = UniversalWeight(WeightDisk(p, 0))
        got = char_eval(w, 1 + p, n)
        assert got == WedgeElement(p, [1, p], n)
        w3 = UniversalWeight(WeightDisk(p, 3))
        got3 = char_eval(w3, 1 + p, n)
        head = pow(1 + p, 3, p ** n)
        assert got3 == WedgeElement(p, [head, head * p], n)

    def test_universal_center_specialization(self):
        p, n = 5, 6
        disk = WeightDisk(p, 2)  # wait for p=5 classical center 2: 2 mod 4
        w = UniversalWeight(disk)
        rng = random.Random(1)
        for _ in range(20):
            t = rng.randrange(1, p ** (n + 3))
            if t % p == 0:
                continue
            val = char_eval(w, t, n)
            at_center = disk.specialize(val, disk.center)
            want = char_eval(ClassicalWeight(p, disk.center), t, at_center.prec)
            assert at_center.agrees_with(want)

    def test_char_multiplicative(self):
        p, n = 5, 5
        rng = random.Random(2)
        for w in (
            ClassicalWeight(p, 7),
            UniversalWeight(WeightDisk(p, 0)),
            AccessibleWeight(p, 2, PadicScalar(p, pow(1 + p, 9, 5 ** 12), 12)),
        ):
            for _ in range(25):
                s = rng.randrange(1, p ** (n + 3))
                t = rng.randrange(1, p ** (n + 3))
                if s % p == 0 or t % p == 0:
                    continue
                lhs = char_eval(w, s * t, n)
                rhs = char_eval(w, s, n) * char_eval(w, t, n)
                if isinstance(lhs, WedgeElement):
                    assert lhs.agrees_with(rhs, min(lhs.level, rhs.level))
                else:
                    assert lhs.agrees_with(rhs, min(lhs.prec, rhs.prec))

    def test_char_eval_matches_exp_a_log(self):
        # the defining identity of the exponent a on 1-units
        p, n = 5, 6
        rng = random.Random(3)
        for w in (ClassicalWeight(p, 4), ClassicalWeight(p, 0), ClassicalWeight(p, 9)):
            a = a_param(w, n)
            for _ in range(30):
                t = 1 + p * rng.randrange(1, p ** (n + 1))
                tt = PadicScalar(p, t, n)
                want = exp(a * log1p(tt - 1))
                got = char_eval(w, tt, n)
                assert got.agrees_with(want)

    def test_universal_a_identity(self):
        p, n = 5, 5
        w = UniversalWeight(WeightDisk(p, 0))
        a = a_param(w, n)
        # constant term of a is the center
        assert a.coeffs[0] == 0
        # coefficient of T: p/log(1+p) is a unit
        assert a.coeffs[1] % p != 0
        # specializing a at classical k with v(k) >= 1 recovers k
        kk = p * (p - 1)
        disk = WeightDisk(p, 0)
        got = disk.specialize(a, kk)
        assert got.agrees_with(PadicScalar(p, kk, got.prec))

    def test_universal_char_times_char_eval_consistency(self):
        # k_U(t) specialized at an interior classical weight equals t^k
        p, n = 5, 6
        disk = WeightDisk(p, 0)
        w = UniversalWeight(disk)
        k = p * (p - 1)  # interior: v(k - k0) >= 1
        for t in (2, 3, 7, 1 + p):
            fam = char_eval(w, t, n)
            sp = disk.specialize(fam, k)
            want = char_eval(ClassicalWeight(p, k), t, sp.prec)
            assert sp.agrees_with(want)

    def test_precision_errors(self):
        w = UniversalWeight(WeightDisk(5, 0))
        with pytest.raises(PrecisionError):
            char_eval(w, PadicScalar(5, 2, 3), 6)

    def test_accessible_weight_guardrails(self):
        with pytest.raises(ValueError):
            AccessibleWeight(5, 0, PadicScalar(5, 2, 8))  # v(2-1) = 0: not r=1

    def test_module_level_helpers(self):
        d = WeightDisk(5, 0)
        x = WedgeElement(5, [2, 3, 4], 3)
        assert specialize_coeff(x, d, 0).residue == 2
        assert uniformizer(d, 0, 4) == WedgeElement.T(5, 4)
