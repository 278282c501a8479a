"""Tests for Hopf points, real-eigenvalue landmarks, the eigenvalue path and region labels."""

import math

import numpy as np
import pytest

from slep_pulse.bifurcation import (
    classify_region,
    codim2_points,
    complex_newton,
    complex_root_at,
    critical_radius,
    default_psi_grid,
    drift_line,
    even_G,
    hopf_curve,
    hopf_point,
    lambda_under,
    local_model,
    minimum_value,
    real_eig_landmarks,
    real_roots,
    splitting_constants,
    trace_eigen_path,
    transversality_fd,
)
from slep_pulse.domain.enums import RegionLabel, RootKind
from slep_pulse.bifurcation.hopf import R_hat
from slep_pulse.domain.exceptions import DomainError, NoConvergence

QUARTER = math.pi / 4


@pytest.fixture(scope="module")
def landmarks(ctx):
    return real_eig_landmarks(QUARTER, ctx)


class TestHopfPoint:
    @pytest.mark.parametrize("psi", [math.pi / 8, math.pi / 4, 3 * math.pi / 8])
    def test_residual_and_transversality(self, ctx, psi):
        point = hopf_point(psi, ctx)
        assert point.residual < 1e-10
        assert point.xi_star > 0
        assert point.s_star > 0
        assert point.transversality_fd is not None and point.transversality_fd > 0
        assert point.transversality == pytest.approx(point.transversality_fd, rel=1e-2)

    def test_polar_coordinates(self, ctx):
        point = hopf_point(0.3, ctx, with_fd=False)
        assert math.hypot(point.tau_hat, point.theta_hat) == pytest.approx(point.s_star, rel=1e-12)
        assert point.eta_star == pytest.approx(point.s_star * point.xi_star, rel=1e-10)

    @pytest.mark.parametrize("psi", [0.0, math.pi / 2, -0.1, 2.0])
    def test_angle_outside_quadrant(self, ctx, psi):
        with pytest.raises(DomainError):
            hopf_point(psi, ctx)

    def test_curve_over_grid(self, ctx):
        grid = default_psi_grid(21)
        curve = hopf_curve(grid, ctx, threads=2)
        assert not curve.failures
        assert [p.psi for p in curve.points] == pytest.approx(list(grid))
        assert all(p.residual < 1e-10 for p in curve.points)

    def test_curve_threads_agree(self, ctx):
        grid = default_psi_grid(7)
        serial = hopf_curve(grid, ctx)
        pooled = hopf_curve(grid, ctx, threads=3)
        assert [p.s_star for p in serial.points] == [p.s_star for p in pooled.points]

    def test_empty_grid(self, ctx):
        with pytest.raises(DomainError):
            hopf_curve([], ctx)

    @pytest.mark.parametrize("psi", [0.2, QUARTER, 1.3])
    def test_eta_independent_of_bracket(self, ctx, psi):
        etas = [hopf_point(psi, ctx, initial_upper=hi, with_fd=False).eta_star for hi in np.geomspace(1e-2, 1e2, 10)]
        assert max(etas) - min(etas) < 1e-10

    def test_radial_sum_strictly_decreasing(self, ctx):
        values = [R_hat(eta, QUARTER, ctx) for eta in np.linspace(0.0, 20.0, 201)]
        assert np.all(np.diff(values) < 0)
        assert values[0] > ctx.zeta0_star

    @pytest.mark.slow
    def test_curve_crosses_drift_line_twice(self, ctx):
        curve = hopf_curve(default_psi_grid(61), ctx, threads=2)
        assert not curve.failures
        line = drift_line(ctx)
        excess = np.array([line.value(p.tau_hat, p.theta_hat) - 1.0 for p in curve.points])
        assert np.count_nonzero(np.diff(np.sign(excess)) != 0) == 2

    def test_fd_transversality_matches_closed_form(self, ctx):
        point = hopf_point(1.0, ctx, with_fd=False)
        fd = transversality_fd(point.xi_star, point.s_star, point.psi, ctx)
        assert fd == pytest.approx(point.transversality, rel=1e-2)


class TestLandmarks:
    def test_ordering(self, ctx, landmarks):
        s_star = hopf_point(QUARTER, ctx, with_fd=False).s_star
        assert landmarks.s_under < s_star < landmarks.s_over
        assert landmarks.s_under < landmarks.s_c < landmarks.s_over
        assert landmarks.s_c == pytest.approx(critical_radius(QUARTER, ctx))

    def test_double_roots(self, ctx, landmarks):
        for lam, s in ((landmarks.lambda_under, landmarks.s_under), (landmarks.lambda_over, landmarks.s_over)):
            assert abs(even_G(lam, s, QUARTER, ctx)) < 1e-9
        assert landmarks.lambda_under < 0 < landmarks.lambda_over

    def test_real_roots_by_segment(self, ctx, landmarks):
        before = real_roots(0.5 * landmarks.s_under, QUARTER, ctx)
        assert len(before) == 2 and all(lam < 0 for lam in before)
        middle = 0.5 * (landmarks.s_under + landmarks.s_over)
        assert real_roots(middle, QUARTER, ctx) == []
        after = real_roots(1.5 * landmarks.s_over, QUARTER, ctx)
        assert len(after) == 2 and all(lam > 0 for lam in after)

    def test_minimizer_decay(self, ctx):
        s = np.geomspace(1e3, 1e5, 5)
        lam = np.array([abs(lambda_under(v, QUARTER, ctx)) for v in s])
        slope = np.polyfit(np.log(s), np.log(lam), 1)[0]
        assert slope == pytest.approx(-1.0 / 3.0, abs=0.02)

    def test_minimum_tends_to_minus_zeta(self, ctx):
        assert minimum_value(1e12, QUARTER, ctx) == pytest.approx(-ctx.zeta0_star, rel=1e-3)

    @pytest.mark.parametrize("side", ["below", "above"])
    @pytest.mark.parametrize("seed", range(50))
    def test_newton_off_window_finds_only_real_roots(self, ctx, landmarks, side, seed):
        rng = np.random.default_rng(seed)
        s = 0.9 * landmarks.s_under if side == "below" else 1.1 * landmarks.s_over
        bound = 2.0 * ctx.zeta0_star
        for _ in range(4):
            guess = complex(rng.uniform(-bound, bound), bound - rng.uniform(0.0, bound))
            try:
                lam, _ = complex_newton(guess, s, QUARTER, ctx, maxiter=60)
            except NoConvergence:
                continue
            assert abs(lam.imag) < 1e-8


class TestEigenPath:
    def test_splitting_signs(self, ctx, landmarks):
        c_minus, c_plus = splitting_constants(landmarks, ctx)
        assert c_minus < 0 < c_plus

    def test_square_root_model_near_merge(self, ctx, landmarks):
        c_minus, _ = splitting_constants(landmarks, ctx)
        s = landmarks.s_under + 2e-3 * (landmarks.s_over - landmarks.s_under)
        model = local_model(landmarks.lambda_under, landmarks.s_under, c_minus, s)
        actual = complex_root_at(s, QUARTER, ctx, landmarks)
        assert abs(actual - model) <= 0.05 * abs(model - landmarks.lambda_under)

    @pytest.mark.parametrize("end", ["merge", "split"])
    def test_square_root_exponent(self, ctx, landmarks, end):
        c_minus, c_plus = splitting_constants(landmarks, ctx)
        if end == "merge":
            s0, lam0, c, direction = landmarks.s_under, landmarks.lambda_under, c_minus, 1.0
        else:
            s0, lam0, c, direction = landmarks.s_over, landmarks.lambda_over, c_plus, -1.0
        offsets = np.geomspace(1e-6, 1e-4, 5) * s0
        imag = np.array([complex_root_at(s0 + direction * d, QUARTER, ctx, landmarks).imag for d in offsets])
        exponent = np.polyfit(np.log(offsets), np.log(imag), 1)[0]
        assert exponent == pytest.approx(0.5, abs=0.05)
        assert imag[0] / np.sqrt(offsets[0]) == pytest.approx(np.sqrt(abs(c)), rel=0.05)

    def test_complex_root_outside_window(self, ctx, landmarks):
        with pytest.raises(ValueError):
            complex_root_at(0.5 * landmarks.s_under, QUARTER, ctx, landmarks)

    @pytest.mark.slow
    def test_trace(self, ctx, landmarks):
        path = trace_eigen_path(QUARTER, ctx, n_samples=60)
        kinds = {sample.kind for sample in path.samples}
        assert kinds == {RootKind.REAL, RootKind.DOUBLE, RootKind.COMPLEX_PAIR}
        assert path.c_minus < 0 < path.c_plus

        pairs = [sample for sample in path.samples if sample.kind is RootKind.COMPLEX_PAIR]
        assert all(sample.lam.imag > 0 for sample in pairs)
        for sample in pairs:
            assert abs(even_G(sample.lam, sample.s, QUARTER, ctx)) < 1e-8
        hopf = [sample for sample in pairs if sample.s == path.s_star]
        assert len(hopf) == 1
        assert abs(hopf[0].lam.real) < 1e-8

        stable = [sample for sample in pairs if sample.s < path.s_star]
        unstable = [sample for sample in pairs if sample.s > path.s_star]
        assert all(sample.lam.real < 0 for sample in stable)
        assert all(sample.lam.real > 0 for sample in unstable)


class TestCodim2:
    @pytest.mark.slow
    def test_two_intersections(self, ctx):
        points = codim2_points(ctx, default_psi_grid(61), threads=2)
        assert len(points) == 2
        line = drift_line(ctx)
        for point in points:
            assert point.line_residual < 1e-8
            assert point.hopf_residual < 1e-8
            assert line.value(point.tau_hat, point.theta_hat) == pytest.approx(1.0, abs=1e-8)
        assert points[0].psi < points[1].psi


class TestRegions:
    @pytest.mark.parametrize(
        "tau_hat, theta_hat, label",
        [
            (3.0, 2.0, RegionLabel.STABLE),
            (13.0, 0.5, RegionLabel.DRIFT),
            (5.0, 4.0, RegionLabel.HOPF),
        ],
    )
    def test_reference_points(self, ctx, tau_hat, theta_hat, label):
        region = classify_region(tau_hat, theta_hat, ctx)
        assert region.label is label

    def test_hopf_kind_is_complex(self, ctx):
        region = classify_region(5.0, 4.0, ctx)
        assert region.hopf
        assert region.even_instability == "complex"

    def test_drift_flag_beyond_line(self, ctx):
        region = classify_region(8.2, 3.7, ctx)
        assert region.drift
        assert region.label in (RegionLabel.DRIFT, RegionLabel.DRIFT_HOPF)

    def test_tie_counts_as_drift(self, ctx):
        line = drift_line(ctx)
        tau_hat = 2.0
        theta_hat = (1 - line.C1 * tau_hat) / line.C2
        assert classify_region(tau_hat, theta_hat, ctx).drift

    @pytest.mark.parametrize("tau_hat, theta_hat", [(0.0, 1.0), (1.0, -1.0)])
    def test_non_positive_point(self, ctx, tau_hat, theta_hat):
        with pytest.raises(DomainError):
            classify_region(tau_hat, theta_hat, ctx)
