"""Exception hierarchy."""


class PlacticError(Exception):
    """Base class for errors raised by this package."""


class InvalidWordError(PlacticError, ValueError):
    """A word contains a non-positive letter or cannot be parsed."""


class InvalidTableauError(PlacticError, ValueError):
    """Rows do not form a semistandard tableau or a valid skew configuration."""


class ResourceGuardError(PlacticError):
    """An enumeration would exceed the configured object budget."""

    def __init__(self, what: str, needed: int, guard: int):
        super().__init__(f"{what}: {needed} objects exceeds guard {guard}")
        self.what = what
        self.needed = needed
        self.guard = guard


class AlphabetError(PlacticError, ValueError):
    """Input violates the alphabet precondition of a characterization."""


class SingleLetterCase(AlphabetError):
    """A two-letter characterization was asked about a word missing one letter.

    Such words fall under the single-letter (``a^n``) characterization.
    """


class InconsistentValuesError(PlacticError, ValueError):
    """Supplied values are not those of a polynomial of the declared degree."""
