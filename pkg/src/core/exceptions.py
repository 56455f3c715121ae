"""
Error hierarchy for FilterLab
"""


class FilterLabError(Exception):
    """Base class for every error raised by FilterLab"""


class InvalidParameterError(FilterLabError, ValueError):
    """A parameter lies outside its documented domain"""


class InvalidInputError(FilterLabError, ValueError):
    """Input data is empty or not finite"""


class ShapeError(FilterLabError, ValueError):
    """Array dimensions do not chain or do not match"""


class NoCrossingError(FilterLabError):
    """The magnitude response never drops below the requested threshold"""


class NoBandEdgeError(FilterLabError):
    """No multiple of the nominal frequency step lies inside the pass band"""


class NoSideLobeError(FilterLabError):
    """The magnitude response has no spectral zero inside (0, pi)"""


class UnsupportedActivationError(FilterLabError):
    """The operation needs piecewise-linear activations"""


class InvalidProbeError(FilterLabError, ValueError):
    """The probe signal leaves the declared input range"""


class ModelFormatError(FilterLabError):
    """A serialized model could not be parsed or validated"""

    def __init__(
        self,
        message: str,
        field: str | None = None,
        line: int | None = None,
        column: int | None = None,
    ):
        self.field = field
        self.line = line
        self.column = column
        location = []
        if field:
            location.append(f"field '{field}'")
        if line is not None:
            location.append(f"line {line}, column {column}")
        if location:
            message = f"{message} ({'; '.join(location)})"
        super().__init__(message)
