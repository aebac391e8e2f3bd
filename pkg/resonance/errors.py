"""
Exceptions raised by the solver.
"""


class ResonanceError(Exception):
    "Base class of all solver errors."


class ConfigError(ResonanceError, ValueError):
    "Invalid run configuration or inadmissible problem."


class DomainError(ResonanceError, ValueError):
    "Argument outside the domain of a special function."


class ShapeError(ResonanceError, ValueError):
    "Field length does not match its grid."


class UnscalableForcingError(ConfigError):
    "Target mass requested for a profile with no first-mode component."


class NumericalFailure(ResonanceError, ArithmeticError):
    "An iteration failed to converge or a computation broke down."


class SingularSystemError(NumericalFailure):
    """
    Shifted operator is numerically singular.
    """

    def __init__(self, shift, detail=""):
        msg = "singular system at shift %.17g" % shift
        if detail:
            msg += " (%s)" % detail

        super(SingularSystemError, self).__init__(msg)
        self.shift = shift


class DegenerateLinearizationError(NumericalFailure):
    "Linearized operator has an eigenvalue at zero."


class OverflowBlowup(NumericalFailure):
    """
    A state value exceeds the exponent guard.
    """

    def __init__(self, value, guard):
        super(OverflowBlowup, self).__init__(
            "state value %.6g exceeds exponent guard %g" % (value, guard))
        self.value = value
        self.guard = guard
