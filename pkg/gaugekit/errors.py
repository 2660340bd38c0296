"""
Exceptions raised by gaugekit.

Two families exist. `InputError`s are problems with what the caller handed over
(the CLI exits with code 1). `ComputationError`s happen while computing on valid
inputs (the CLI exits with code 2).
"""


class GaugekitError(Exception):
    """Base class of every gaugekit exception."""


class InputError(GaugekitError, ValueError):
    """The caller provided invalid input."""


class GeometryFormatError(InputError):
    """
    Malformed geometry JSON.

    The message starts with the path of the offending field, e.g. `hrep[2].a`.
    """

    def __init__(self, field: str, message: str) -> None:
        super().__init__(f"{field}: {message}")
        self.field = field
        """Path of the offending field."""


class EmptyInputError(InputError):
    """An operation received no points at all."""


class InvalidGaugeError(InputError):
    """The body cannot be used as a gauge (0 not interior, or not full-dimensional)."""


class UnsupportedDimensionError(InputError):
    """The ambient dimension is outside what the operation supports."""


class QuantityFormatError(InputError):
    """Malformed quantity name or search-grid override."""


class ComputationError(GaugekitError):
    """A computation on valid inputs could not produce a result."""


class UnboundedError(ComputationError):
    """A halfspace intersection (or an LP that must be bounded) is unbounded."""


class EmptySetError(ComputationError):
    """An operation that needs a nonempty polytope received the Empty polytope."""


class DegenerateBodyError(ComputationError):
    """The body is lower-dimensional where a full-dimensional one is required."""


class RadiusTooSmallError(ComputationError):
    """The radius is below the circumradius, so the ball intersection is empty."""


class NumericalFailureError(ComputationError):
    """The LP solver hit its iteration cap or produced an uncertifiable optimum."""
