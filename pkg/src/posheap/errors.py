"""Exception types shared across the package."""


class PosheapError(Exception):
    """Base class for all errors raised by this package."""


class InvalidText(PosheapError):
    """The text does not end with a letter unique to it."""


class UnknownLetter(PosheapError):
    """A letter is not a member of the given alphabet."""


class UnlabeledInput(PosheapError):
    """An operation that needs edge labels got a sketch without them."""


class NoSuchChild(PosheapError):
    """Suffix-link reconstruction needed a child that does not exist."""


class NegativeSigma(PosheapError):
    """Edge multiplicity balance forced a negative value."""


class LinkInconsistent(PosheapError):
    """A link map cannot belong to any position heap of this shape."""


class AlphabetTooSmall(PosheapError):
    """The alphabet has fewer letters than the root has children."""


class CapExceeded(PosheapError):
    """A brute-force scan was asked to exceed its size cap."""


class FormatError(PosheapError):
    """Malformed PHT document. Carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = "line %d: %s" % (line, message)
        super().__init__(message)
