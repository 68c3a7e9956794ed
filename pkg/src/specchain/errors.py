"""Exception hierarchy shared by every layer of the kernel."""

from __future__ import annotations


class SpecchainError(Exception):
    """Base class for all kernel errors."""


class FieldError(SpecchainError, ArithmeticError):
    """Invalid field arithmetic: zero divisors, mismatched descriptors."""


class ContextMismatchError(SpecchainError, ValueError):
    """Operands live in different rings or fields."""


class ParseError(SpecchainError, ValueError):
    def __init__(self, message: str, offset: int, text: str = ""):
        self.offset = offset
        self.text = text
        super().__init__(f"{message} at offset {offset}")


class StepLimitError(SpecchainError, RuntimeError):
    """A Groebner basis computation exceeded its step budget."""


class ContainmentError(SpecchainError, ValueError):
    """An ideal is not contained where the computation requires it."""


class NotProperError(SpecchainError, ValueError):
    """The ideal is the unit ideal."""


class ZeroRingError(NotProperError):
    """A presentation whose relations generate the unit ideal."""


class NotPrimeError(SpecchainError, ValueError):
    """A primality assertion failed its sanity check."""


class NotInvertibleError(SpecchainError, ArithmeticError):
    """Element has no inverse in the residue field representation."""


class NotAlgebraicError(SpecchainError, ValueError):
    pass


class NotMaximalError(SpecchainError, ValueError):
    """Computation requires a maximal ideal (finite residue field)."""


class EquidimensionalityError(SpecchainError, ValueError):
    pass


class ProvenanceError(SpecchainError, ValueError):
    """Operation requested on an algebra whose construction does not support it."""


class AvoidanceError(SpecchainError, ValueError):
    """A prime meets the multiplicative set it must avoid."""
