"""Error classes and the exit codes the CLI maps them to."""

EXIT_OK = 0
EXIT_PARAMETER = 2
EXIT_CONSISTENCY = 3
EXIT_PRECISION = 4


class BoundaryError(RuntimeError):
    exit_code = 1


class ParameterError(BoundaryError):
    """Bad user input: unsupported ring, malformed ideal, out-of-range bound."""

    exit_code = EXIT_PARAMETER


class PoleError(ParameterError):
    """A zeta function has a pole at S = q^(r-1), so the value at s = 1-r is undefined."""


class ConsistencyError(BoundaryError):
    """A result contradicts a theorem or an independent oracle.

    These are never rounded or clamped away: they point at an implementation bug.
    """

    exit_code = EXIT_CONSISTENCY


class PrecisionError(BoundaryError):
    exit_code = EXIT_PRECISION


def exit_code_for(exc):
    if isinstance(exc, BoundaryError):
        return exc.exit_code
    if isinstance(exc, (KeyError, ValueError, AssertionError)):
        # yacs rejects unknown keys with KeyError (files) or AssertionError (opts), bad literals with ValueError
        return EXIT_PARAMETER
    return 1
