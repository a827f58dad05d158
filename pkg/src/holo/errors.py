"""Exception types shared across the package."""


class HoloError(Exception):
    """Base class for all package-specific errors."""


class DivisionByZero(HoloError, ZeroDivisionError):
    """Division by an exact ring zero."""


class NonInvertibleRingElement(HoloError):
    """Nonzero element sharing a factor with the radical modulus y^k - v."""


class IncompatibleRadicals(HoloError):
    """Two distinct radical extensions requested in one computation."""


class ZeroRadicand(HoloError):
    """k-th roots of zero requested."""


class UndecidedScalar(HoloError):
    """A zero test in a radical tower could not be certified either way."""


class WrongArity(HoloError):
    """Signature arity does not match the operation's requirement."""


class EmptySupport(HoloError):
    """Support-structure extraction on an identically-zero signature."""


class CapExceeded(HoloError):
    """Candidate enumeration passed the configured cap."""

    def __init__(self, tested: int, cap: int):
        super().__init__(f"candidate enumeration passed cap ({tested} > {cap})")
        self.tested = tested
        self.cap = cap


class NotIrreducible(HoloError):
    """Operation requires an irreducible signature."""


class IdenticallyZero(HoloError):
    """Operation undefined for identically-zero signatures."""


class TooManyEdges(HoloError):
    """Grid exceeds the brute-force edge limit."""


class NotOrthogonal(HoloError):
    """General-grid transformation with a non-orthogonal matrix."""


class Degenerate(HoloError):
    """Operation requires a non-degenerate signature."""


class ArityTooSmall(HoloError):
    """Operation requires arity at least 3."""


class ThetaNonZero(HoloError):
    """Canonical-form construction requires theta = 0."""


class NonUniqueRecurrence(HoloError):
    """Second-order recurrence kernel has dimension two or more."""


class ParseError(HoloError):
    """Malformed scalar literal, signature, set, or grid input."""
