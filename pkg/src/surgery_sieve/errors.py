"""Exception types shared across the package."""


class SurgerySieveError(Exception):
    """Base class for all package errors."""


class DomainError(SurgerySieveError, ValueError):
    """An input is outside the domain of an operation."""


class PreconditionError(DomainError):
    """A theorem or lemma was applied outside its hypotheses."""


class NotApplicable(PreconditionError):
    """The requested construction does not exist for these parameters."""


class NonGenericError(DomainError):
    """A point sits exactly on a puncture row with no infinitesimal tie-break."""


class ParseError(SurgerySieveError):
    """Malformed command-line input.  ``position`` is a 0-based character offset."""

    def __init__(self, text: str, position: int, expected: str):
        self.text = text
        self.position = position
        self.expected = expected
        super().__init__(f"at position {position} of {text!r}: expected {expected}")
