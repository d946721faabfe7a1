"""Classical engine: frozen reference values plus independent scipy
cross-checks."""

import math

import numpy as np
import pytest
import scipy.special as sp

from knugamma import scalar
from knugamma.errors import DivergentSeries, NonPositiveArgument

LN_24 = 3.1780538303479458
LN_SQRT_PI = 0.5723649429247001
EULER_GAMMA = 0.5772156649015329
PI2_6 = math.pi**2 / 6.0
ZETA3 = 1.2020569031595943  # partial sums + integral tail bound


class TestLnGamma:
    def test_at_one(self):
        assert scalar.ln_gamma(1.0) == pytest.approx(0.0, abs=1e-14)

    def test_factorial(self):
        assert scalar.ln_gamma(5.0) == pytest.approx(LN_24, rel=1e-14)

    def test_half(self):
        assert scalar.ln_gamma(0.5) == pytest.approx(LN_SQRT_PI, rel=1e-14)

    def test_against_scipy_wide_range(self):
        xs = np.geomspace(1e-3, 1e3, 400)
        got = np.array([scalar.ln_gamma(float(x)) for x in xs])
        ref = sp.gammaln(xs)
        scale = np.maximum(1.0, np.abs(ref))
        assert np.max(np.abs(got - ref) / scale) < 1e-13

    def test_recurrence(self):
        for x in (0.1, 0.5, 1.7, 3.3, 9.9):
            assert abs(scalar.ln_gamma(x + 1.0) - scalar.ln_gamma(x) - math.log(x)) <= 1e-12

    def test_rejects_nonpositive(self):
        with pytest.raises(NonPositiveArgument):
            scalar.ln_gamma(0.0)
        with pytest.raises(NonPositiveArgument):
            scalar.ln_gamma(-2.0)


class TestDigamma:
    def test_at_one(self):
        # the series telescopes to -gamma
        assert scalar.digamma(1.0) == pytest.approx(-EULER_GAMMA, rel=1e-14)

    def test_at_two(self):
        assert scalar.digamma(2.0) == pytest.approx(1.0 - EULER_GAMMA, rel=1e-14)

    def test_at_half(self):
        # duplication at x = 1/2
        assert scalar.digamma(0.5) == pytest.approx(-EULER_GAMMA - 2.0 * math.log(2.0), rel=1e-14)

    def test_against_scipy(self):
        xs = np.geomspace(1e-3, 1e3, 300)
        got = np.array([scalar.digamma(float(x)) for x in xs])
        ref = sp.psi(xs)
        assert np.max(np.abs(got - ref) / np.maximum(1.0, np.abs(ref))) < 1e-12

    def test_strictly_increasing(self):
        xs = np.linspace(0.05, 100.0, 500)
        vals = [scalar.digamma(float(x)) for x in xs]
        assert all(b > a for a, b in zip(vals, vals[1:]))

    def test_rejects_nonpositive(self):
        with pytest.raises(NonPositiveArgument):
            scalar.digamma(-1.0)


class TestPolygamma:
    def test_basel(self):
        assert scalar.polygamma(1, 1.0) == pytest.approx(PI2_6, rel=1e-13)

    def test_basel_shifted(self):
        assert scalar.polygamma(1, 2.0) == pytest.approx(PI2_6 - 1.0, rel=1e-13)

    def test_m2(self):
        assert scalar.polygamma(2, 1.0) == pytest.approx(-2.0 * ZETA3, rel=1e-13)

    def test_against_scipy(self):
        for m in (1, 2, 3, 4, 5, 7):
            for x in (1e-3, 0.2, 1.0, 3.7, 25.0, 400.0):
                ref = float(sp.polygamma(m, x))
                assert scalar.polygamma(m, x) == pytest.approx(ref, rel=1e-11)

    def test_sign_alternates(self):
        for m in range(1, 6):
            want = 1.0 if m % 2 == 1 else -1.0
            for x in (0.3, 1.0, 4.2, 50.0):
                assert math.copysign(1.0, scalar.polygamma(m, x)) == want

    def test_rejects_bad_args(self):
        with pytest.raises(NonPositiveArgument):
            scalar.polygamma(1, 0.0)
        with pytest.raises(ValueError):
            scalar.polygamma(0, 1.0)


class TestZeta:
    def test_basel(self):
        assert scalar.riemann_zeta(2.0) == pytest.approx(PI2_6, rel=1e-14)

    def test_four(self):
        assert scalar.riemann_zeta(4.0) == pytest.approx(math.pi**4 / 90.0, rel=1e-14)

    def test_three(self):
        assert scalar.riemann_zeta(3.0) == pytest.approx(ZETA3, rel=1e-13)

    def test_against_scipy(self):
        for s in (1.001, 1.5, 2.5, 6.0, 14.0, 30.0):
            assert scalar.riemann_zeta(s) == pytest.approx(float(sp.zeta(s)), rel=1e-12)

    def test_divergent(self):
        with pytest.raises(DivergentSeries):
            scalar.riemann_zeta(1.0)
        with pytest.raises(DivergentSeries):
            scalar.riemann_zeta(0.2)


class TestHurwitzZeta:
    def test_reduces_to_riemann(self):
        assert scalar.hurwitz_zeta(2.0, 1.0) == pytest.approx(PI2_6, rel=1e-13)

    def test_half_offset(self):
        # equals psi'(1/2) = pi^2/2 via the polygamma series
        assert scalar.hurwitz_zeta(2.0, 0.5) == pytest.approx(math.pi**2 / 2.0, rel=1e-13)

    def test_index_shift(self):
        assert scalar.hurwitz_zeta(2.0, 2.0) == pytest.approx(PI2_6 - 1.0, rel=1e-13)

    def test_recurrence(self):
        for s in (1.5, 2.0, 4.0):
            for q in (0.3, 1.0, 7.0):
                lhs = scalar.hurwitz_zeta(s, q) - scalar.hurwitz_zeta(s, q + 1.0)
                assert lhs == pytest.approx(q**-s, rel=1e-11)

    def test_against_scipy(self):
        for s in (1.2, 2.0, 3.5, 9.0):
            for q in (0.05, 0.7, 1.0, 12.0, 3000.0):
                assert scalar.hurwitz_zeta(s, q) == pytest.approx(
                    float(sp.zeta(s, q)), rel=1e-11
                )

    def test_domain(self):
        with pytest.raises(DivergentSeries):
            scalar.hurwitz_zeta(0.9, 1.0)
        with pytest.raises(NonPositiveArgument):
            scalar.hurwitz_zeta(2.0, 0.0)
