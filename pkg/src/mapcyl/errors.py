"""Exception types raised across the package."""


class MapCylError(Exception):
    """Base class for all package errors."""


class CatalogError(MapCylError, KeyError):
    """Unknown fixture name."""

    def __str__(self):
        return str(self.args[0]) if self.args else ""


class StructuralError(MapCylError, ValueError):
    """A point has the wrong dimension or non-finite coordinates."""


class PreconditionError(MapCylError, ValueError):
    """An operation was called outside its domain."""


class ConfigurationError(MapCylError, ValueError):
    """Bad parameters for a check, benchmark or CLI run."""
