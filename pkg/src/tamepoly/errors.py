"""Exception hierarchy.

Every error that the command line maps to an exit code derives from
:class:`TamePolyError`.
"""


class TamePolyError(Exception):
    """Base class for all package errors."""


class ParseError(TamePolyError, ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.message = message
        self.position = position


class VarspaceMismatch(TamePolyError, ValueError):
    pass


class InvalidIndex(TamePolyError, ValueError):
    """Variable or generator index out of range, repeated, or arity mismatch."""


class DependentSystem(TamePolyError):
    """All maximal jacobian minors vanish: the polynomials are algebraically dependent."""


class ConstantGenerator(TamePolyError, ValueError):
    pass


class ZeroPolynomial(TamePolyError, ValueError):
    pass


class VacuousCheck(TamePolyError):
    """The requested inequality has nothing to check (a formal derivative vanished)."""


class WrongArity(TamePolyError, ValueError):
    pass


class CapTooSmall(TamePolyError, ValueError):
    pass


class SUnknown(TamePolyError):
    """No relation was found within the search cap, so s_i is not known to be finite."""


class NotDegreeOne(TamePolyError, ValueError):
    pass


class NotSquareSystem(TamePolyError, ValueError):
    pass


class NotAutomorphism(TamePolyError):
    """Raised by :func:`tamepoly.tame.decompose`; ``reason`` is a :class:`~tamepoly.tame.RejectReason`."""

    def __init__(self, reason, detail: str = ""):
        super().__init__(f"{reason.value}: {detail}" if detail else reason.value)
        self.reason = reason
        self.detail = detail
