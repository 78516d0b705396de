"""Exception hierarchy shared by every module."""


class PdHyperError(Exception):
    """Base class for all errors raised by pdhyper."""


class InvalidHypergraph(PdHyperError, ValueError):
    pass


class NotSeparated(PdHyperError, ValueError):
    pass


class CoverageBroken(PdHyperError, ValueError):
    pass


class BadPattern(PdHyperError, ValueError):
    pass


class BadIdeal(PdHyperError, ValueError):
    pass


class NonMinimalGenerators(PdHyperError, ValueError):
    pass


class SingleGenerator(PdHyperError, ValueError):
    pass


class EmptyIdeal(PdHyperError, ValueError):
    pass


class UnsupportedShape(PdHyperError, ValueError):
    pass


class PreconditionViolated(PdHyperError, ValueError):
    pass


class TooLarge(PdHyperError, ValueError):
    pass


class InternalMismatch(PdHyperError, AssertionError):
    """Two routes that must agree produced different answers."""
