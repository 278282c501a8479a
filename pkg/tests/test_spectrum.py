"""Tests for the dispersion relation, essential-spectrum bound and discrete eigenvalues."""

import math

import numpy as np
import pytest

from slep_pulse.bifurcation import hopf_point
from slep_pulse.domain.exceptions import PositiveBound, ResolutionError
from slep_pulse.domain.value_objects import ModelParams, TimeScaleRegime
from slep_pulse.pulse import build_pulse
from slep_pulse.spectrum import (
    background_slope,
    cubic_coefficients,
    discrete_linearization_eigs,
    dispersion_roots,
    dispersion_samples,
    essential_bound,
    o1_critical_eigenvalue,
    relative_residual,
    solve_cubic,
    xi_grid,
)

SLOW_POINTS = [(3.0, 2.0), (13.0, 0.5), (5.0, 4.0), (8.2, 3.7)]


class TestDispersion:
    def test_decoupled_roots_at_zero_wavenumber(self):
        p = ModelParams(1.0, 2.0, 2.0, 2.0, 0.0)
        roots = dispersion_roots(0.0, p, TimeScaleRegime.order_one(1.5, 4.0)).roots
        assert [r.real for r in roots] == pytest.approx([-2.0, -1 / 1.5, -0.25], abs=1e-12)
        assert all(abs(r.imag) < 1e-12 for r in roots)

    def test_background_slope(self, reference_params):
        assert background_slope(ModelParams(1.0, 2.0, 2.0, 2.0, 0.0)) == pytest.approx(-2.0)
        assert background_slope(reference_params) == pytest.approx(-2.0, abs=0.05)

    def test_large_wavenumber_asymptotics(self, reference_params):
        p, xi = reference_params, 100.0
        m = background_slope(p)
        regime = TimeScaleRegime.order_one(1.0, 1.0)
        roots = sorted(r.real for r in dispersion_roots(xi, p, regime).roots)
        expected = sorted([-(p.epsilon**2) * xi**2 + m, -(xi**2 + 1), -(p.D**2 * xi**2 + 1)])
        assert roots == pytest.approx(expected, rel=1e-2)

    @pytest.mark.parametrize("xi", [0.0, 1e-3, 0.5, 3.0, 40.0, 1e3])
    @pytest.mark.parametrize("tau_hat, theta_hat", SLOW_POINTS)
    def test_residuals(self, reference_params, xi, tau_hat, theta_hat):
        regime = TimeScaleRegime.slow(tau_hat, theta_hat)
        coeffs = cubic_coefficients(xi, reference_params, regime)
        for root in solve_cubic(coeffs):
            assert relative_residual(root, coeffs) < 1e-10

    def test_even_in_wavenumber(self, reference_params):
        regime = TimeScaleRegime.slow(3.0, 2.0)
        assert dispersion_roots(2.5, reference_params, regime).roots == dispersion_roots(
            -2.5, reference_params, regime
        ).roots

    def test_companion_fallback_for_vanishing_leading_term(self):
        # c3 = 0: a quadratic with roots 1 and 2, third root pushed to -inf
        roots = solve_cubic((0.0, 1.0, -3.0, 2.0))
        finite = sorted(r.real for r in roots if math.isfinite(r.real))
        assert finite == pytest.approx([1.0, 2.0])

    def test_roots_sorted(self):
        roots = solve_cubic((1.0, 0.0, 0.0, -1.0))
        assert [r.real for r in roots] == sorted(r.real for r in roots)
        assert roots[-1] == pytest.approx(1.0)


class TestEssentialBound:
    def test_order_one_bound(self, reference_params):
        bound = essential_bound(reference_params, TimeScaleRegime.order_one(1.0, 1.0), n_samples=400)
        assert bound.bound <= -0.9
        assert bound.scaled_bound is None
        assert math.isfinite(bound.argmax_xi)

    @pytest.mark.parametrize("tau_hat, theta_hat", SLOW_POINTS)
    def test_slow_regime_bound(self, reference_params, tau_hat, theta_hat):
        bound = essential_bound(reference_params, TimeScaleRegime.slow(tau_hat, theta_hat), n_samples=400)
        assert bound.bound < 0
        assert bound.scaled_bound == pytest.approx(bound.bound / reference_params.epsilon**2)
        assert bound.scaled_bound < 0

    def test_monotone_in_tau(self, reference_params):
        bounds = [
            essential_bound(reference_params, TimeScaleRegime.order_one(tau, 0.1), n_samples=400).bound
            for tau in (4.0, 2.0, 1.0)
        ]
        assert bounds[0] >= bounds[1] >= bounds[2]

    def test_positive_bound_rejected(self, monkeypatch):
        # an activator growing at infinity: m = f'(u_bar) > 0
        monkeypatch.setattr("slep_pulse.spectrum.essential.background_slope", lambda p: 1.0)
        p = ModelParams(0.0, 0.0, 0.0, 1.0, 0.1)
        with pytest.raises(PositiveBound):
            essential_bound(p, TimeScaleRegime.order_one(1.0, 1.0), n_samples=50)

    def test_threads_agree(self, reference_params):
        regime = TimeScaleRegime.slow(3.0, 2.0)
        grid = xi_grid(10.0, 50)
        serial = dispersion_samples(reference_params, regime, grid)
        pooled = dispersion_samples(reference_params, regime, grid, threads=4)
        assert [s.roots for s in serial] == [s.roots for s in pooled]

    def test_xi_grid(self):
        half = xi_grid(10.0, 20)
        assert half[0] == 0.0 and half[-1] == pytest.approx(10.0)
        assert len(half) == 21
        full = xi_grid(10.0, 20, full=True)
        assert len(full) == 41
        assert np.allclose(full, -full[::-1])

    def test_critical_eigenvalues(self, ctx):
        even, odd = o1_critical_eigenvalue(ctx)
        assert even == pytest.approx(-3 * math.sqrt(2) * 1.26793, rel=1e-4)
        assert odd == pytest.approx(0.0, abs=1e-12)


class TestDiscreteSpectrum:
    def test_coarse_grid_rejected(self, reference_params):
        with pytest.raises(ResolutionError):
            discrete_linearization_eigs(build_pulse(reference_params), TimeScaleRegime.order_one(1.0, 1.0), n_grid=100)

    def test_bad_parity(self, reference_params):
        with pytest.raises(ValueError):
            discrete_linearization_eigs(build_pulse(reference_params), TimeScaleRegime.order_one(1.0, 1.0), parity="left")

    @pytest.mark.slow
    def test_order_one_critical_eigenvalues(self, reference_params, ctx):
        pulse = build_pulse(reference_params)
        regime = TimeScaleRegime.order_one(1.0, 1.0)
        eps2 = reference_params.epsilon**2
        expected, _ = o1_critical_eigenvalue(ctx)

        odd = discrete_linearization_eigs(pulse, regime, parity="odd").eigenvalues
        assert abs(odd[0]) < reference_params.epsilon**3

        even = discrete_linearization_eigs(pulse, regime, parity="even").eigenvalues
        nearest = even[0]
        assert abs(nearest.imag) < 1e-10
        assert nearest.real / eps2 == pytest.approx(expected, rel=0.25)

    @pytest.mark.slow
    def test_slow_regime_hopf_pair(self, reference_params, ctx):
        point = hopf_point(math.pi / 4, ctx, with_fd=False)
        eps2 = reference_params.epsilon**2
        regime = TimeScaleRegime.slow(point.tau_hat, point.theta_hat)
        spectrum = discrete_linearization_eigs(
            build_pulse(reference_params), regime, parity="even", target=1j * point.xi_star * eps2
        )
        lam = spectrum.eigenvalues[0] / eps2
        assert abs(lam.real) < 0.2 * point.xi_star
        assert lam.imag == pytest.approx(point.xi_star, rel=0.25)
        assert spectrum.target == pytest.approx(1j * point.xi_star * eps2)

    @pytest.mark.slow
    def test_second_order_in_grid_spacing(self, reference_params):
        pulse = build_pulse(reference_params)
        regime = TimeScaleRegime.order_one(1.0, 1.0)
        nearest = [
            discrete_linearization_eigs(pulse, regime, n_grid=n, parity="even").eigenvalues[0]
            for n in (2561, 5121, 10241)
        ]
        slope = math.log2(abs(nearest[0] - nearest[1]) / abs(nearest[1] - nearest[2]))
        assert slope == pytest.approx(2.0, abs=0.3)
