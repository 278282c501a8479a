"""Domain exception hierarchy.

Every family carries the process exit code the CLI reports for it.
"""


class SlepPulseException(Exception):
    exit_code = 4


# -- configuration / validation (exit 2) --------------------------------------


class ConfigError(SlepPulseException):
    exit_code = 2


class NonPositiveParameter(ConfigError):
    def __init__(self, name: str, value: float) -> None:
        super().__init__(f"Parameter '{name}' must be positive, got {value!r}")
        self.name = name
        self.value = value


class ExistenceViolation(ConfigError):
    pass


class MissingParameter(ConfigError):
    def __init__(self, name: str) -> None:
        super().__init__(f"Missing required parameter '{name}'")
        self.name = name


class UnknownKey(ConfigError):
    def __init__(self, key: str) -> None:
        super().__init__(f"Unknown config key '{key}'")
        self.key = key


# -- numerical failures (exit 3) ----------------------------------------------


class NumericalFailure(SlepPulseException):
    exit_code = 3


class NoConvergence(NumericalFailure):
    pass


class BranchViolation(NumericalFailure):
    pass


class DomainError(NumericalFailure):
    pass


class DomainMismatch(NumericalFailure):
    pass


class GridTooCoarse(NumericalFailure):
    pass


class ResolutionError(NumericalFailure):
    pass


class ContinuationStall(NumericalFailure):
    pass


class BlowUp(NumericalFailure):
    def __init__(self, time: float, max_abs: float) -> None:
        super().__init__(f"Solution blew up at t={time:.6g} (max|u|={max_abs:.3g})")
        self.time = time
        self.max_abs = max_abs


class NoCrossing(NumericalFailure):
    pass


class IndeterminateDynamics(NumericalFailure):
    pass


# -- internal inconsistency (exit 4) ------------------------------------------


class InternalInconsistency(SlepPulseException):
    exit_code = 4


class BracketFailure(InternalInconsistency):
    pass


class DegenerateBracket(InternalInconsistency):
    pass


class PositiveBound(InternalInconsistency):
    pass
