"""Exception types shared across the package."""


class RilabError(Exception):
    """Base class for all package errors."""


class ContractViolation(RilabError, ValueError):
    """An argument violates a documented precondition (e.g. dimension mismatch)."""


class TruncationError(RilabError, ValueError):
    """Truncation radius too small or otherwise unusable for the request."""


class MemoryGuardError(RilabError, ValueError):
    """A lattice box exceeds the configured memory budget."""


class RejectionBudgetError(RilabError, RuntimeError):
    """A rejection sampler exhausted its attempt budget."""


class SearchBudgetError(RilabError, RuntimeError):
    """A combinatorial search exceeded its expansion budget."""


class ConfigError(RilabError, ValueError):
    """Invalid experiment configuration; message carries the field path."""

    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(f"{field}: {message}")
