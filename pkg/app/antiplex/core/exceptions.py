"""
Exceptions module for antiplex.
"""
from typing import Optional


class PlexError(Exception):
    """Base class for all antiplex exceptions."""
    pass


class ConfigError(PlexError):
    """Raised when there is an error in the configuration."""
    pass


class GraphError(PlexError):
    """Base class for all graph-related exceptions."""
    pass


class GraphParseError(GraphError):
    """Raised when a signed edge list line cannot be parsed."""

    def __init__(self, message: str, line_number: Optional[int] = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class ParameterError(PlexError):
    """Raised when (k, t) or another run parameter is invalid."""
    pass


class OracleError(PlexError):
    """Base class for all oracle-related exceptions."""
    pass


class OracleRefusalError(OracleError):
    """Raised when the brute-force oracle is asked to scan a graph that is too large."""
    pass


class GeneratorError(PlexError):
    """Raised when a synthetic graph specification is invalid."""
    pass


class EnumerationError(PlexError):
    """Base class for all enumeration-related exceptions."""
    pass


class EnumerationTimeoutError(EnumerationError):
    """Raised when an enumeration exceeds its deadline."""
    pass


class FixtureError(PlexError):
    """Raised when an embedded fixture no longer matches its expected output."""
    pass
