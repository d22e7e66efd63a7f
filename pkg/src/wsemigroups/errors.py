"""Shared exception types.

Everything raised on bad input derives from ValueError so callers can
catch one base class; the CLI maps all of these to exit code 2.
"""


class ArityMismatch(ValueError):
    """Operands or windows do not agree on the number of variables."""


class InvalidSemigroup(ValueError):
    """Input data cannot define a semigroup of the requested kind."""


class AxiomViolation(InvalidSemigroup):
    """A semigroup axiom fails; carries explicit witnesses."""

    def __init__(self, message, witnesses=()):
        super().__init__(message)
        self.witnesses = tuple(witnesses)


class NotSymmetric(ValueError):
    """Operation requires a symmetric semigroup."""


class WindowTooSmall(ValueError):
    """Verification window leaves no room for the 2-cell interior margin."""


class UnknownCheck(ValueError):
    """Verification check id is not recognised."""


class InputError(ValueError):
    """Malformed JSON input or an input incompatible with the verb."""
