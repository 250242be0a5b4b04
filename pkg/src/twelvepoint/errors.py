"""Exception hierarchy shared by every module of the toolkit."""


class LatticeError(Exception):
    """Base class for all errors raised by twelvepoint."""


class ArithmeticOverflowError(LatticeError, OverflowError):
    """A value left the signed 64-bit range."""


class InvalidPolygonError(LatticeError, ValueError):
    """The vertex list does not describe a valid convex lattice polygon.

    ``code`` is one of ``too-few-vertices``, ``repeated-vertex``,
    ``collinear``, ``not-convex`` or ``degenerate``.
    """

    def __init__(self, code, message):
        super().__init__(f"{code}: {message}")
        self.code = code


class DegeneratePolygonError(InvalidPolygonError):
    def __init__(self, message):
        super().__init__("degenerate", message)


class NotReflexiveError(LatticeError, ValueError):
    def __init__(self, interior_count):
        super().__init__(f"polygon is not reflexive (interior points: {interior_count})")
        self.interior_count = interior_count


class InconsistentPolygonError(LatticeError):
    """Pick's formula did not produce an integer."""


class ZeroVectorError(LatticeError, ValueError):
    pass


class InvalidOperationError(LatticeError, ValueError):
    """An elementary operation was requested whose precondition fails.

    ``clause`` names the failing precondition.
    """

    def __init__(self, clause, message=""):
        super().__init__(f"{clause}: {message}" if message else clause)
        self.clause = clause


class ProofContractViolation(LatticeError):
    """A guarantee from the reduction argument did not hold at runtime."""


class InvalidMapError(LatticeError, ValueError):
    pass


class ParseError(LatticeError, ValueError):
    def __init__(self, line, message):
        super().__init__(f"parse error at line {line}: {message}")
        self.line = line
