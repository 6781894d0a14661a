from .errors import (
    BoundaryError,
    ParameterError,
    PoleError,
    ConsistencyError,
    PrecisionError,
    exit_code_for,
)
from .tools import format_fraction
