"""Exception hierarchy.

Every exception carries a stable ``code`` string; the CLI prints it as
``error[<code>]: <message>`` so scripts can match on it.
"""

from __future__ import annotations


class NotationError(ValueError):
    code = "error"

    def __init__(self, message: str = "", **context):
        super().__init__(message or self.code)
        self.context = context


class ElementOutOfRange(NotationError):
    code = "element-out-of-range"


class MalformedElement(NotationError):
    code = "malformed-element"


class TooLarge(NotationError):
    code = "too-large"


class InvalidTerm(NotationError):
    code = "invalid-term"


class HViolation(InvalidTerm):
    code = "h-violation"


class BetaZeroViolation(InvalidTerm):
    code = "beta-zero-violation"


class SumOrderViolation(InvalidTerm):
    code = "sum-order-violation"


class ArityViolation(InvalidTerm):
    code = "arity-violation"


class NotALimit(NotationError):
    code = "not-a-limit"


class NotDecomposable(NotationError):
    code = "not-decomposable"


class NotASum(NotationError):
    code = "not-a-sum"


class UnsupportedBase(NotationError):
    code = "unsupported-base"


class PartialTheta(NotationError):
    code = "partial-theta"


class UnmappedElement(NotationError):
    code = "unmapped-element"


class CollapseFailure(NotationError):
    code = "collapse-failure"


class GuardExceeded(NotationError):
    code = "guard-exceeded"


class ParseError(NotationError):
    code = "syntax-error"

    def __init__(self, message: str, position: int, text: str = ""):
        super().__init__(f"{message} at position {position}", position=position)
        self.position = position
        self.text = text


class UsageError(NotationError):
    code = "usage-error"


#: every diagnostic code the package can emit
ERROR_CODES = tuple(
    cls.code
    for cls in (
        ElementOutOfRange, MalformedElement, TooLarge, InvalidTerm, HViolation,
        BetaZeroViolation, SumOrderViolation, ArityViolation, NotALimit,
        NotDecomposable, NotASum, UnsupportedBase, PartialTheta,
        UnmappedElement, CollapseFailure, GuardExceeded, ParseError, UsageError,
    )
)
