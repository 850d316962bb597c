"""
Error hierarchy for the ybx toolkit.
InputError and its subclasses signal bad caller data and map to exit code 2.
"""


class YBXError(Exception):
    """Root of every toolkit error."""


class InputError(YBXError, ValueError):
    """Caller supplied invalid data."""


class KindMismatchError(InputError):
    """Two scalar kinds were mixed in one operation."""


class DimensionError(InputError):
    """Shapes or sizes do not fit together."""


class DomainError(InputError):
    """A value lies outside the domain of a map or function."""


class StructureError(InputError):
    """Structure constants violate the axioms of their algebra type."""


class SchemaError(InputError):
    """A JSON document is missing a field or carries an invalid one."""

    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(f"{field}: {message}")


class ConfigError(YBXError):
    """An environment setting could not be parsed."""


class ConvergenceError(YBXError):
    """A series or quadrature did not converge."""
