"""Exception hierarchy with stable machine-readable error codes.

Every error the library raises on bad input carries a ``code`` attribute
that the CLI forwards verbatim in its JSON error output.
"""


class IcpError(Exception):
    """Base class for all errors raised by this package."""

    code = "ERROR"


class ConfigError(IcpError):
    """Invalid configuration value (alpha, predictor count, flags...)."""

    code = "CONFIG"


class DataError(IcpError):
    """Invalid input data."""

    code = "DATA"


class MissingColumnError(DataError):
    code = "MISSING_COLUMN"


class SingleEnvironmentError(DataError):
    code = "SINGLE_ENVIRONMENT"


class NonNumericPredictorError(DataError):
    code = "NON_NUMERIC_PREDICTOR"


class NonFiniteValueError(DataError):
    code = "NON_FINITE"


class InsufficientDataError(DataError):
    code = "INSUFFICIENT_DATA"


class RankDeficientError(DataError):
    code = "RANK_DEFICIENT"
