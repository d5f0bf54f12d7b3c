"""Exception types shared across the package."""


class SymsensError(Exception):
    """Base class for all package errors."""


class SizeError(SymsensError, ValueError):
    """A requested size exceeds a configured cap."""


class FormatError(SymsensError, ValueError):
    """Input could not be parsed into the expected representation."""


class DomainError(SymsensError, ValueError):
    """Argument lies outside the domain of a counting function."""


class SingularError(SymsensError, ZeroDivisionError):
    """Rational generating function has a zero constant term in its denominator."""
