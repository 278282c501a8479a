"""Shared test fixtures for slep_pulse tests."""

from __future__ import annotations

import pytest

from slep_pulse.domain.params import validate
from slep_pulse.domain.value_objects import ModelParams
from slep_pulse.slep import SlepContext

REFERENCE = {"alpha": 1.0, "beta": 2.0, "gamma": 2.0, "D": 2.0, "epsilon": 0.012}
REFERENCE_X_STAR = 0.311905


@pytest.fixture(scope="session")
def reference_params() -> ModelParams:
    return validate(REFERENCE)


@pytest.fixture(scope="session")
def ctx(reference_params: ModelParams) -> SlepContext:
    return SlepContext.from_params(reference_params)


@pytest.fixture
def reference_config_file(tmp_path):
    path = tmp_path / "reference.cfg"
    path.write_text(
        "# reference parameters\n"
        "alpha = 1.0\n"
        "beta = 2.0\n"
        "gamma = 2.0\n"
        "D = 2.0\n"
        "epsilon = 0.012\n"
        "regime = order_eps_minus2\n"
        "tau_hat = 3.0\n"
        "theta_hat = 2.0\n",
        encoding="utf-8",
    )
    return path
