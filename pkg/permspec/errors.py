"""
Exception hierarchy shared by every permspec module.

Verification failures are reported, not raised; these exceptions cover
misuse, exhausted resources and broken internal bookkeeping.
"""


class PermSpecError(Exception):
    """Base class for all permspec errors."""

    exit_code = 1


class UsageError(PermSpecError, ValueError):
    """Bad arguments: degree mismatch, unassigned variable, bad indices."""

    exit_code = 2


class RegistryError(UsageError):
    """No predicted spectrum is registered for the requested (kind, n)."""


class ResourceLimitError(PermSpecError):
    """A configured size cap would be exceeded."""

    exit_code = 3


class CertificationSetupError(PermSpecError):
    """Random assignments kept colliding predicted eigenvalues."""


class InvariantViolation(PermSpecError, AssertionError):
    """An internal consistency check failed."""
