"""Exception types shared across the toolkit."""


class FoxTorsionError(Exception):
    """Base class for every error this package raises on bad input."""


class ParseError(FoxTorsionError):
    """Malformed word text.  ``position`` is the 0-based offset of the offending token."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class WordSizeError(FoxTorsionError):
    """A word or exponent exceeded the configured expansion limits."""


class UnknownGenerator(FoxTorsionError):
    """A word uses a generator that the ambient presentation or map does not know."""


class NontrivialTorsion(FoxTorsionError):
    """The abelianized group has a finite cyclic factor; only free H_1 is supported."""


class InvalidBasis(FoxTorsionError):
    """A user-supplied abelianization basis violates a relator or fails to generate."""


class InexactDivision(FoxTorsionError):
    """Laurent-polynomial division left a nonzero remainder."""


class RankMismatch(FoxTorsionError):
    """Operands live in Laurent rings of different ranks."""


class NotBalanced(FoxTorsionError):
    """Presentation deficiency does not match the number of inclusion words."""


class InternalInexactDivision(FoxTorsionError):
    """A division that fraction-free elimination guarantees to be exact failed.

    This signals a defect in the elimination code, never bad user input.
    """


class ZeroTorsion(FoxTorsionError):
    """The zero torsion class has no support."""


class RankUnsupported(FoxTorsionError):
    """Structured hull data is only available in rank at most 2."""


class OddSutureCount(FoxTorsionError):
    """The suture count of a sutured solid torus must be a positive even integer."""


class NonpositiveP(FoxTorsionError):
    """The longitudinal winding number must be a positive integer."""


class UnsupportedN(FoxTorsionError):
    """The knot-family parameter lies outside the supported range n >= -1."""


class InputFileError(FoxTorsionError):
    """A sectioned CLI input file is malformed."""
