# lattice_spectra/errors.py
from __future__ import annotations


class SpectraError(ValueError):
    """Base class for every error raised by lattice_spectra."""


class DomainError(SpectraError):
    """Bad input or a violated precondition (CLI exit code 1)."""


class ExactValueError(DomainError):
    """Division by zero, unsupported radicals, or an unparsable exact value."""


class SearchExhausted(SpectraError):
    """A witness search reached its cap without a verified answer (CLI exit code 2)."""

    def __init__(self, message: str, *, bound: int, trace_length: int = 0):
        super().__init__(message)
        self.bound = bound
        self.trace_length = trace_length
