"""Exception hierarchy shared by every module of the package."""


class NTupledError(Exception):
    """Base class for all errors raised by ``ntupled``."""


class OutOfRangeEntry(NTupledError, ValueError):
    def __init__(self, i, k, value, n):
        self.i, self.k, self.value, self.n = i, k, value, n
        super().__init__(f"entry ({i},{k}) = {value!r} is outside 1..{n}")


class ShapeMismatch(NTupledError, ValueError):
    pass


class DomainViolation(NTupledError, ValueError):
    pass


class DimensionMismatch(NTupledError, ValueError):
    pass


class UnknownPreset(NTupledError, KeyError):
    pass


class BadArity(NTupledError, ValueError):
    pass


class IndexOutOfRange(NTupledError, IndexError):
    pass


class AlphaOutOfRange(NTupledError, ValueError):
    pass


class PartialMapping(NTupledError, KeyError):
    pass


class InfiniteSpaceUndecidable(NTupledError):
    """Raised when an exhaustive check is requested on a non-finite space."""


class PreconditionUnmet(NTupledError):
    pass


class FormPreconditionUnmet(PreconditionUnmet):
    """A pointwise contraction form was requested without its proviso."""


class NoInitialPoint(NTupledError, LookupError):
    pass


class SectionFailure(NTupledError):
    """Some image of F has no preimage under g.

    ``trace`` holds the iterates produced before the failure.
    """

    def __init__(self, message, trace=None):
        super().__init__(message)
        self.trace = trace


class GateFailed(NTupledError):
    """A hard hypothesis gate of the solver did not pass.

    ``reason`` is one of ``NotInU``, ``MonotoneViolation``,
    ``ContractionViolation`` or ``NoInitialPoint``.
    """

    def __init__(self, reason, report=None):
        super().__init__(reason)
        self.reason = reason
        self.report = report


class SizeLimit(NTupledError):
    pass


class HypothesesNotMachineVerified(NTupledError):
    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class ParseError(NTupledError, ValueError):
    def __init__(self, message, line=None, position=None):
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", position {position})" if position is not None else ")")
        super().__init__(message + where)
        self.line = line
        self.position = position
