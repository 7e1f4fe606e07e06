"""Series-inversion oracle: descriptor expansions and Lagrange coefficients."""

import math
import random
from fractions import Fraction as F

import pytest

from glambertw.engine import (
    DoubleExp,
    ExpOverLinear,
    ExpTimesLinear,
    Gauss,
    PlainExp,
    PoleAtBaseError,
    SqExpRecip,
    f_series,
    lagrange_coefficients,
    lagrange_coefficients_exact,
    series_eval,
    sum_terms,
)
from glambertw.numeric import lambert_w_principal


class TestDescriptorSeries:
    def test_plainexp_at_zero(self):
        s = f_series(PlainExp(), 0, 3)
        assert s.coeffs == (F(1), F(1), F(1, 2), F(1, 6))

    def test_expoverlinear_cancellation_at_zero(self):
        # d/dx e^x/(x+1) vanishes at 0
        s = f_series(ExpOverLinear(-1), 0, 1)
        assert s.coeffs == (F(1), F(0))

    def test_exptimeslinear_order_zero(self):
        s = f_series(ExpTimesLinear(1), 0, 0)
        assert s.coeffs == (F(-1),)

    def test_float_backend_matches_exact(self):
        for desc in (PlainExp(), ExpOverLinear(F(-3)), ExpTimesLinear(F(2))):
            exact = f_series(desc, F(1, 2), 8).as_floats()
            descf = type(desc)(*[float(v) for v in vars(desc).values()]) if vars(desc) else desc
            floating = f_series(descf, 0.5, 8)
            for ce, cf in zip(exact.coeffs, floating.coeffs):
                assert cf == pytest.approx(ce, rel=1e-12)

    def test_pole_errors(self):
        with pytest.raises(PoleAtBaseError):
            f_series(ExpOverLinear(2.0), 2.0, 4)
        with pytest.raises(PoleAtBaseError):
            f_series(SqExpRecip(), 0, 4)

    def test_gauss_series_values(self):
        # f(a+w) reproduces exp(-(a+w)^2/2) pointwise
        s = f_series(Gauss(), 0.7, 30).as_floats()
        for w in (-0.3, 0.0, 0.2):
            assert s.eval(w) == pytest.approx(math.exp(-0.5 * (0.7 + w) ** 2), rel=1e-12)

    def test_doubleexp_series_values(self):
        s = f_series(DoubleExp(), 0.1, 30)
        for w in (-0.2, 0.15):
            assert s.eval(w) == pytest.approx(math.exp(math.exp(0.1 + w)), rel=1e-10)

    def test_sqexprecip_series_values(self):
        s = f_series(SqExpRecip(), 1.0, 30)
        for w in (-0.2, 0.25):
            x = 1.0 + w
            assert s.eval(w) == pytest.approx(x * x * math.exp(-2.0 / x), rel=1e-10)

    def test_sqexprecip_exact_backend_matches_float(self):
        exact = f_series(SqExpRecip(), F(1), 10).as_floats()
        floating = f_series(SqExpRecip(), 1.0, 10)
        for ce, cf in zip(exact.coeffs, floating.coeffs):
            assert cf == pytest.approx(ce, rel=1e-12)


class TestLagrangeCoefficients:
    def test_tree_function_exact(self):
        # c_n * n! * n^(1-n) == 1
        pairs = lagrange_coefficients_exact(PlainExp(), 0, 20)
        for n, (q, esc) in enumerate(pairs, 1):
            assert q * math.factorial(n) == F(n) ** (n - 1)
            assert esc == n

    def test_tree_function_floats(self):
        sol = lagrange_coefficients(PlainExp(), 0, 6)
        assert sol.coeffs[0] == pytest.approx(1.0)
        assert sol.coeffs[1] == pytest.approx(1.0)
        assert sol.coeffs[2] == pytest.approx(1.5)
        assert sol.coeffs[3] == pytest.approx(8.0 / 3.0)

    def test_first_coefficient_is_f_at_base(self):
        cases = [
            (PlainExp(), 0.3),
            (ExpOverLinear(-2.0), 0.5),
            (ExpTimesLinear(1.5), -0.2),
            (Gauss(), 0.8),
            (DoubleExp(), -0.4),
            (SqExpRecip(), 1.3),
        ]
        for desc, a in cases:
            sol = lagrange_coefficients(desc, a, 5)
            assert sol.coeffs[0] == pytest.approx(desc.value(a), rel=1e-12)

    def test_expoverlinear_second_coefficient_frozen(self):
        # (1/2) d/dx [e^{2x} (x+3)^{-2}] at 0 = 1/9 - 1/27 = 2/27
        pairs = lagrange_coefficients_exact(ExpOverLinear(F(-3)), F(0), 2)
        assert pairs[1] == (F(2, 27), 2)

    def test_gauss_low_order_pattern(self):
        sol = lagrange_coefficients(Gauss(), 0, 5)
        assert sol.coeffs[0] == pytest.approx(1.0)
        assert sol.coeffs[1] == 0.0
        assert sol.coeffs[2] == pytest.approx(-0.5)

    def test_exact_backend_unavailable_for_doubleexp(self):
        with pytest.raises(ValueError):
            lagrange_coefficients_exact(DoubleExp(), 0, 4)

    def test_order_consistency_exact(self):
        short = lagrange_coefficients_exact(ExpOverLinear(F(-3)), F(0), 10)
        long = lagrange_coefficients_exact(ExpOverLinear(F(-3)), F(0), 20)
        assert long[:10] == short

    def test_order_consistency_float(self):
        short = lagrange_coefficients(Gauss(), 0.4, 10)
        long = lagrange_coefficients(Gauss(), 0.4, 20)
        assert long.coeffs[:10] == short.coeffs


class TestSeriesEval:
    def test_zero_coupling(self):
        sol = lagrange_coefficients(PlainExp(), 0.7, 10)
        value, used, diverged = series_eval(sol, 0.0)
        assert (value, used, diverged) == (0.7, 0, False)

    def test_plainexp_small_coupling_residual(self):
        sol = lagrange_coefficients(PlainExp(), 0, 40)
        x, used, diverged = series_eval(sol, 0.1)
        assert not diverged and used < 40
        assert abs(x - 0.1 * math.exp(x)) <= 1e-12

    def test_plainexp_outside_radius_diverges(self):
        sol = lagrange_coefficients(PlainExp(), 0, 40)
        _, _, diverged = series_eval(sol, 1.0)
        assert diverged

    def test_sum_terms_lacunary_series_not_cut_short(self):
        # every even term zero; the sum must keep going
        def term(n):
            return 0.0 if n % 2 == 0 else 0.1**n

        res = sum_terms(0.0, term, 30, 1e-12)
        expected = 0.1 / (1.0 - 0.01)
        assert res.value == pytest.approx(expected, rel=1e-12)
        assert res.stopped_early
        assert res.terms_used > 5


class TestResidualProperty:
    def test_converged_evaluations_satisfy_equation(self):
        rng = random.Random(1207)
        converged = 0
        for _ in range(200):
            kind = rng.randrange(6)
            a = rng.uniform(-1.5, 1.5)
            if kind == 0:
                desc = PlainExp()
            elif kind == 1:
                b = a + rng.choice((-1, 1)) * rng.uniform(0.8, 4.0)
                desc = ExpOverLinear(b)
            elif kind == 2:
                desc = ExpTimesLinear(rng.uniform(-2.0, 2.0))
            elif kind == 3:
                desc = Gauss()
            elif kind == 4:
                desc = DoubleExp()
            else:
                a = rng.choice((-1, 1)) * rng.uniform(0.5, 2.0)
                desc = SqExpRecip()
            fa = desc.value(a)
            if fa == 0.0 or not math.isfinite(fa):
                continue
            scale = max(1.0, abs(a))
            l = rng.uniform(-0.1, 0.1) * scale / abs(fa)
            sol = lagrange_coefficients(desc, a, 40)
            x, used, diverged = series_eval(sol, l)
            if diverged or used >= 40:
                continue
            converged += 1
            assert abs(x - a - l * desc.value(x)) <= 1e-8
        assert converged >= 150
