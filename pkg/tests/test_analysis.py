import warnings

import numpy as np
import pytest

from specbasis import (CHEBYSHEV, DIFFERENCE, QUADFACTOR, ROOTS,
                       CoefficientVector, SingularFunction, aliasing_error,
                       aliasing_power_law, basis_endpoint_slope,
                       endpoint_slope_sweep, error_report, eval_u, fit_slope,
                       gegenbauer_eval, inner_product, interpolate,
                       least_squares, quad_ls_bound, reference_coeffs,
                       tail_bounds, truncate)
from specbasis.analysis import error_norm_sweep, sample_points, v_error_norm_sweep
from specbasis.approximators import _project_cheb
from specbasis.cheb_core import roots_angles


class TestErrorReport:
    def test_exact_approximant(self):
        f = SingularFunction(g_cheb=(1.0,), phi=1.0, vartheta=0)
        rep = error_report(f, truncate(f, CHEBYSHEV, 4))
        assert rep.linf_full < 1e-14
        assert rep.linf_interior <= rep.linf_full

    def test_sampling_contract(self, exemplar):
        rep = error_report(exemplar, truncate(exemplar, CHEBYSHEV, 16))
        xs = rep.samples[:, 0]
        assert len(xs) >= 1000
        # boundary-layer points within 2/N^2 of each endpoint, N up to 1e4
        assert np.min(1.0 - xs[xs > 0]) <= 2e-8
        assert np.min(xs[xs < 0] + 1.0) <= 2e-8
        assert rep.linf_interior <= rep.linf_full

    def test_chebyshev_truncation_has_boundary_spikes(self, exemplar):
        # endpoint boundary layers run roughly 10x above the interior level
        rep = error_report(exemplar, truncate(exemplar, CHEBYSHEV, 50))
        assert 3.0 < rep.linf_full / rep.linf_interior < 50.0

    def test_constrained_interpolation_is_nearly_uniform(self, exemplar):
        rep = error_report(exemplar, interpolate(exemplar, QUADFACTOR, ROOTS, 100))
        assert rep.linf_full / np.median(rep.samples[:, 1]) < 20.0


class TestFitSlope:
    def test_exact_power_law(self):
        n = np.arange(1, 400)
        vals = np.concatenate([[1.0], 1.0 / n**3])
        assert fit_slope(vals, 8, 256) == pytest.approx(-3.0, abs=1e-6)

    def test_exemplar_chebyshev_slope(self, exemplar_refs):
        assert fit_slope(exemplar_refs["a"].values, 32, 256) == pytest.approx(-5.0, abs=0.3)

    def test_power52_quadfactor_slope(self, power52_refs):
        assert fit_slope(power52_refs["c"].values, 32, 256) == pytest.approx(-4.0, abs=0.1)

    def test_window_errors(self):
        with pytest.raises(ValueError):
            fit_slope(np.ones(10), 4, 6)          # window narrower than 2x
        with pytest.raises(ValueError):
            fit_slope(np.zeros(300), 8, 256)      # no usable points


class TestAliasingError:
    def test_single_high_mode(self):
        # u = T_{3N/2}: the N-point interpolant picks up -T_{N/2}
        n_grid = 50
        vals = np.zeros(6 * n_grid)
        vals[75] = 1.0
        a_ref = CoefficientVector(CHEBYSHEV, vals)
        assert aliasing_error(a_ref, n_grid, 25) == pytest.approx(-1.0, abs=1e-15)
        assert aliasing_error(a_ref, n_grid, 10) == 0.0

    def test_zero_tail_polynomial(self):
        n_grid = 32
        vals = np.zeros(6 * n_grid)
        vals[:n_grid] = np.random.default_rng(7).standard_normal(n_grid)
        a_ref = CoefficientVector(CHEBYSHEV, vals)
        for n in range(n_grid):
            assert aliasing_error(a_ref, n_grid, n) == 0.0

    def test_exemplar_against_direct_interpolation(self, exemplar):
        # oracle: an actual 100-point interpolation of the exemplar; the
        # reference must be long enough that its own tail is < 1e-12
        n_grid, length = 100, 2600
        a_ref = reference_coeffs(exemplar, CHEBYSHEV, length, m_ref=2 * length)
        t = roots_angles(n_grid)
        a_interp = _project_cheb(eval_u(exemplar, np.cos(t)), t, n_grid)
        measured = a_interp[10] - a_ref.values[10]
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")  # tail-limited by construction
            predicted = aliasing_error(a_ref, n_grid, 10)
        assert predicted == pytest.approx(measured, abs=1e-12)

    def test_tail_warning(self, exemplar):
        short = reference_coeffs(exemplar, CHEBYSHEV, 130, m_ref=1040)
        with pytest.warns(UserWarning):
            aliasing_error(short, 64, 10)


class TestAliasingPowerLaw:
    def test_relative_bound_formula(self):
        out = aliasing_power_law(3, 10, 100)
        assert out.relative_bound == pytest.approx(0.25 * 1e-3)

    @staticmethod
    @pytest.fixture(scope="class")
    def synthetic():
        vals = np.zeros(200000)
        vals[1:] = np.arange(1, 200000, dtype=float) ** -4.0
        return CoefficientVector(CHEBYSHEV, vals)

    def test_small_n_estimate_matches_series(self, synthetic):
        exact = aliasing_error(synthetic, 64, 8)
        est = aliasing_power_law(4, 8, 64, amp=1.0).estimate
        assert est == pytest.approx(exact, rel=0.05)

    def test_near_limit_estimate(self, synthetic):
        # a^I_{N-m} ~ (A/N^k)(2km/N), within 10% of the exact value
        for m in (1, 2, 4):
            n = 64 - m
            exact = synthetic.values[n] + aliasing_error(synthetic, 64, n)
            est = aliasing_power_law(4, n, 64, amp=1.0).near_limit
            assert est == pytest.approx(exact, rel=0.10)

    def test_curl_down_pattern(self, synthetic):
        # near the aliasing limit the interpolant coefficient collapses to
        # roughly 2km/N of the true one
        n = 60
        a_i = synthetic.values[n] + aliasing_error(synthetic, 64, n)
        assert 0.3 < a_i / synthetic.values[n] < 0.55


class TestTailBounds:
    def test_known_series(self):
        tb = tail_bounds(2, 1)
        assert tb.lower == pytest.approx(0.5)
        assert tb.upper == pytest.approx(1.0)
        assert tb.lower < np.pi**2 / 6 - 1 < tb.upper

    def test_brute_force_k5(self):
        n = 100
        m = np.arange(n + 1, 10**7, dtype=float)
        tail = float(np.sum((m**-5.0)[::-1]))
        tb = tail_bounds(5, n)
        assert tb.lower < tail < tb.upper

    def test_even_tail_estimate(self):
        n = 100
        m = np.arange(n + 1, 10**7, dtype=float)
        even_tail = float(np.sum(((2 * m)**-5.0)[::-1]))
        tb = tail_bounds(5, n)
        # the estimate carries a 1 + O(1/N) factor; measured 2.02% at N = 100
        assert tb.even_tail_estimate == pytest.approx(even_tail, rel=0.025)

    def test_validation(self):
        with pytest.raises(ValueError):
            tail_bounds(1, 10)
        with pytest.raises(ValueError):
            tail_bounds(3, 0)


class TestQuadLSBound:
    def test_formula(self):
        assert quad_ls_bound(1.0, 1.0, 10) == pytest.approx(0.015)

    def test_power_law_scaling(self):
        assert quad_ls_bound(1.0, 1.5, 20) / quad_ls_bound(1.0, 1.5, 40) == pytest.approx(2**3)

    def test_exemplar_ls_error_within_bound(self, exemplar):
        # fit W from the Gegenbauer-2 coefficients of v just above the cut
        phi, n = 2.0, 32
        w32 = lambda x: ((1 - x) * (1 + x)) ** 1.5
        ratios = []
        for m in range(n + 1, 2 * n + 1):
            geg = lambda x, m=m: gegenbauer_eval(2, m, x)
            num = inner_product(lambda x: np.asarray(
                eval_u(exemplar, x) / ((1 - x) * (1 + x))), lambda x, m=m: geg(x) * w32(x), 0.0, 2048)
            den = inner_product(geg, lambda x, m=m: geg(x) * w32(x), 0.0, 2048)
            ratios.append(abs(num / den) * m ** (2 * phi - 1.0))
        w_fit = max(ratios)
        ls = least_squares(exemplar, QUADFACTOR, n, 2048, 0.0)
        xs = sample_points()
        err = np.max(np.abs(eval_u(exemplar, xs) - ls(xs)))
        assert err <= quad_ls_bound(w_fit, phi, n)

    def test_validation(self):
        with pytest.raises(ValueError):
            quad_ls_bound(-1.0, 2.0, 10)
        with pytest.raises(ValueError):
            quad_ls_bound(1.0, 0.25, 10)


class TestEndpointSlopeSweep:
    def test_exact_laws(self):
        rows = endpoint_slope_sweep(CHEBYSHEV, [10, 100, 1000])
        assert [r["basis_slope"] for r in rows] == [100, 10000, 1000000]
        rows = endpoint_slope_sweep(DIFFERENCE, [10, 100])
        assert [r["basis_slope"] for r in rows] == [44, 404]

    def test_assembled_approximant(self, exemplar):
        rows = endpoint_slope_sweep(QUADFACTOR, [20, 40], f=exemplar)
        for row in rows:
            assert row["basis_slope"] == -2
            assert np.isfinite(row["approx_deriv"])


class TestSweeps:
    def test_truncation_sweep_slopes(self, exemplar):
        ns = np.unique(np.geomspace(16, 256, 12).astype(int))
        rows = error_norm_sweep(exemplar, CHEBYSHEV, "truncation", list(ns))
        full = [r[1] for r in rows]
        interior = [r[2] for r in rows]
        assert fit_slope(full, 16, 256, ns=ns) == pytest.approx(-4.0, abs=0.3)
        assert fit_slope(interior, 16, 256, ns=ns) == pytest.approx(-5.0, abs=0.3)

    def test_v_norm_sweep_slope(self, exemplar):
        ns = np.unique(np.geomspace(16, 256, 12).astype(int))
        rows = v_error_norm_sweep(exemplar, list(ns))
        assert fit_slope([r[1] for r in rows], 16, 256, ns=ns) == pytest.approx(-2.0, abs=0.3)
