"""Tests for parameter validation, regimes and the background state."""

import logging
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import optimize

from slep_pulse.domain.enums import Regime
from slep_pulse.domain.exceptions import (
    ExistenceViolation,
    MissingParameter,
    NonPositiveParameter,
)
from slep_pulse.domain.params import background_residual, background_state, validate, validate_regime
from slep_pulse.domain.value_objects import ModelParams, TimeScaleRegime

from .conftest import REFERENCE


def _bisection_root(p: ModelParams) -> float:
    return optimize.bisect(background_residual, -1.5, -0.5, args=(p,), xtol=1e-14)


valid_params = st.builds(
    lambda a, b, frac, D, eps: ModelParams(a, b, frac * (a + b), D, eps),
    st.floats(0.2, 5.0),
    st.floats(0.2, 5.0),
    st.floats(0.05, 0.95),
    st.floats(0.2, 5.0),
    st.floats(1e-4, 0.1),
)


class TestValidate:
    def test_reference_params_valid(self):
        p = validate(REFERENCE)
        assert p == ModelParams(1.0, 2.0, 2.0, 2.0, 0.012)

    def test_existence_violation(self):
        with pytest.raises(ExistenceViolation):
            validate(REFERENCE | {"gamma": 3.5})

    def test_boundary_gamma_rejected(self):
        with pytest.raises(ExistenceViolation):
            validate(REFERENCE | {"gamma": 3.0})

    def test_negative_alpha_named(self):
        with pytest.raises(NonPositiveParameter) as exc_info:
            validate(REFERENCE | {"alpha": -1.0})
        assert exc_info.value.name == "alpha"

    def test_zero_epsilon_rejected(self):
        with pytest.raises(NonPositiveParameter):
            validate(REFERENCE | {"epsilon": 0.0})

    def test_missing_key(self):
        raw = dict(REFERENCE)
        del raw["gamma"]
        with pytest.raises(MissingParameter) as exc_info:
            validate(raw)
        assert exc_info.value.name == "gamma"

    def test_idempotent(self):
        p = validate(REFERENCE)
        assert validate(p) == p

    def test_string_values_accepted(self):
        assert validate({k: str(v) for k, v in REFERENCE.items()}) == validate(REFERENCE)

    def test_large_epsilon_warns(self, caplog):
        with caplog.at_level(logging.WARNING):
            validate(REFERENCE | {"epsilon": 0.2})
        assert "epsilon" in caplog.text


class TestRegime:
    def test_slow_relaxation_times(self, reference_params):
        regime = TimeScaleRegime.slow(3.0, 2.0)
        tau, theta = regime.relaxation_times(reference_params)
        assert tau == pytest.approx(3.0 / 0.012**2)
        assert theta == pytest.approx(2.0 / 0.012**2)
        assert regime.scaled_times(reference_params) == (3.0, 2.0)

    def test_order_one_passthrough(self, reference_params):
        regime = TimeScaleRegime.order_one(1.5, 0.5)
        assert regime.relaxation_times(reference_params) == (1.5, 0.5)
        assert not regime.is_slow

    def test_nonpositive_rate_rejected(self):
        with pytest.raises(NonPositiveParameter) as exc_info:
            TimeScaleRegime.slow(0.0, 1.0)
        assert exc_info.value.name == "tau_hat"

    def test_validate_regime_defaults_to_slow(self):
        regime = validate_regime({"tau_hat": 3, "theta_hat": 2})
        assert regime.kind is Regime.ORDER_EPS_MINUS2

    def test_validate_regime_missing_rate(self):
        with pytest.raises(MissingParameter):
            validate_regime({"regime": "order1", "tau": 1.0})

    def test_from_polar(self):
        regime = TimeScaleRegime.from_polar(2.0, math.pi / 4)
        assert regime.tau == pytest.approx(math.sqrt(2.0))
        assert regime.theta == pytest.approx(math.sqrt(2.0))


class TestBackgroundState:
    def test_epsilon_zero(self):
        state = background_state(ModelParams(1.0, 2.0, 2.0, 2.0, 0.0))
        assert state.u_bar == -1.0
        assert state.u_bar == state.v_bar == state.w_bar

    def test_reference_params_near_first_order(self, reference_params):
        state = background_state(reference_params)
        expected = -1.0 + 0.012 * (1.0 + 2.0 - 2.0) / 2.0
        assert abs(state.u_bar - expected) < 2 * 0.012**2
        assert state.u_bar == pytest.approx(_bisection_root(reference_params), abs=1e-12)

    def test_balanced_coupling_gives_minus_one(self):
        p = ModelParams(1.0, 1.0, 2.0, 2.0, 0.012)
        state = background_state(p)
        assert state.u_bar == pytest.approx(-1.0, abs=1e-14)
        assert abs(background_residual(state.u_bar, p)) < 1e-12

    @given(valid_params)
    @settings(max_examples=100, deadline=None)
    def test_residual_small(self, p):
        state = background_state(p)
        assert abs(background_residual(state.u_bar, p)) < 1e-12
        assert state.u_bar < 0

    def test_first_order_slope(self):
        base = ModelParams(1.0, 2.0, 1.5, 2.0, 1e-2)
        slopes = []
        for eps in (1e-2, 1e-3, 1e-4):
            p = ModelParams(base.alpha, base.beta, base.gamma, base.D, eps)
            slopes.append((background_state(p).u_bar + 1.0) / eps)
        target = (base.alpha + base.beta - base.gamma) / 2.0
        errors = [abs(s - target) for s in slopes]
        assert errors[-1] < 1e-3
        # error shrinks linearly in epsilon
        assert math.log10(errors[0] / errors[1]) == pytest.approx(1.0, abs=0.05)
