"""Enumerations shared across the numerical modules."""

from __future__ import annotations

from enum import Enum


class Regime(Enum):
    ORDER_ONE = "order1"
    ORDER_EPS_MINUS2 = "order_eps_minus2"

    @classmethod
    def from_string(cls, value: str) -> Regime | None:
        return _REGIME_MAPPING.get(value.strip().lower())


class Mode(Enum):
    EVEN = "even"
    ODD = "odd"


class Component(Enum):
    Q = "q"
    R = "r"


class Side(Enum):
    INSIDE = "inside"
    OUTSIDE = "outside"


class RootKind(Enum):
    REAL = "real"
    DOUBLE = "double"
    COMPLEX_PAIR = "complex"


class RegionLabel(Enum):
    STABLE = "stable"
    DRIFT = "drift"
    HOPF = "hopf"
    DRIFT_HOPF = "drift+hopf"

    @classmethod
    def from_flags(cls, drift: bool, hopf: bool) -> RegionLabel:
        return _REGION_FLAGS[(drift, hopf)]


class DynamicsLabel(Enum):
    STANDING = "standing"
    TRAVELING = "traveling"
    STANDING_BREATHER = "standing-breather"
    TRAVELING_BREATHER = "traveling-breather"
    COLLAPSED = "collapsed"
    INDETERMINATE = "indeterminate"

    @classmethod
    def from_flags(cls, drift: bool, breathe: bool) -> DynamicsLabel:
        return _DYNAMICS_FLAGS[(drift, breathe)]


class InitialCondition(Enum):
    ASYMPTOTIC = "asymptotic"
    PERTURBED = "perturbed"
    FILE = "file"


class PerturbationMode(Enum):
    SYMMETRIC = "symmetric"
    ANTISYMMETRIC = "antisymmetric"


class SimClock(Enum):
    """Time unit of a simulation: t itself, or the slow time eps^2 t."""

    FAST = "fast"
    SLOW = "slow"


_REGIME_MAPPING: dict[str, Regime] = {
    "order1": Regime.ORDER_ONE,
    "o1": Regime.ORDER_ONE,
    "order_eps_minus2": Regime.ORDER_EPS_MINUS2,
    "slow": Regime.ORDER_EPS_MINUS2,
}

_REGION_FLAGS = {
    (False, False): RegionLabel.STABLE,
    (True, False): RegionLabel.DRIFT,
    (False, True): RegionLabel.HOPF,
    (True, True): RegionLabel.DRIFT_HOPF,
}

_DYNAMICS_FLAGS = {
    (False, False): DynamicsLabel.STANDING,
    (True, False): DynamicsLabel.TRAVELING,
    (False, True): DynamicsLabel.STANDING_BREATHER,
    (True, True): DynamicsLabel.TRAVELING_BREATHER,
}
