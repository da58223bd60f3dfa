"""Exception types shared across the package."""


class UscutError(Exception):
    """Base class for all package-specific errors."""


class FormatError(UscutError, ValueError):
    """Raised for unreadable or unsupported file contents."""


class PgmFormatError(FormatError):
    """Raised for unreadable or unsupported PGM data; names the offending field."""


class DomainError(UscutError, ValueError):
    """Raised when an argument is outside an operation's domain (e.g. seed out of bounds)."""


class ConfigError(UscutError, ValueError):
    """Raised for invalid template configurations."""


class PhantomSpecError(UscutError, ValueError):
    """Raised when a phantom description violates one of its constraints."""


class GraphConstructionError(UscutError, ValueError):
    """Raised when a flow network violates its structural invariants."""
