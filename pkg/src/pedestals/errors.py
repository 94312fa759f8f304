"""Exception hierarchy for validation failures and contract breaches."""


class PedestalError(Exception):
    """Base class for every error raised by this package."""


class NonMonotoneError(PedestalError):
    """Partition parts increase somewhere."""


class NegativePartError(PedestalError):
    """Partition contains a negative part."""


class CycleError(PedestalError):
    """Cover relations contain a directed cycle."""


class UnknownLabelError(PedestalError):
    """A label does not name an element of the poset."""


class ShapeMismatchError(PedestalError):
    """Object does not live over the expected Young diagram."""


class InvalidTableauError(PedestalError):
    """Filling is not a standard tableau of its shape."""


class InvalidExtensionError(PedestalError):
    """Sequence is not a linear extension of the poset."""


class NotMonotoneError(PedestalError):
    """Filling decreases along the partial order."""


class MissingValueError(PedestalError):
    """Filling does not assign a value to every element."""


class NegativeEntryError(PedestalError):
    """Filling entry is negative, or a pointwise subtraction went below zero."""


class TooManyPartsError(PedestalError):
    """Partition has more positive parts than the poset has elements."""


class PosetMismatchError(PedestalError):
    """Operands are defined over different posets."""


class DegreeMismatchError(PedestalError):
    """Monomials or series of different degree cannot be combined."""
