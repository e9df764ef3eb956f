"""Exception hierarchy.

Each exception carries a stable machine-readable ``code`` so callers (the
CLI in particular) can map failures to exit codes without parsing messages.
"""


class SubjectiveLogicError(Exception):
    """Base class for all library errors."""

    code = "ERROR"


class InvalidComponentError(SubjectiveLogicError):
    """A belief/disbelief/uncertainty/base-rate value is non-finite or out of range."""

    code = "INVALID_COMPONENT"


class SumViolationError(SubjectiveLogicError):
    """Components do not sum to 1 within tolerance."""

    code = "SUM_VIOLATION"


class UnknownAtomError(SubjectiveLogicError):
    """A subset mentions an atom that is not part of the frame."""

    code = "UNKNOWN_ATOM"


class DegenerateFocusError(SubjectiveLogicError):
    """Focus target is empty or equals the whole frame."""

    code = "DEGENERATE_FOCUS"


class UnknownOperatorError(SubjectiveLogicError):
    """Operator id is not one of the supported binary operators."""

    code = "UNKNOWN_OPERATOR"


class OutsideTriangleError(SubjectiveLogicError):
    """Cartesian point does not lie in the opinion triangle."""

    code = "OUTSIDE_TRIANGLE"


class DirectionRangeError(SubjectiveLogicError):
    """Direction angle outside [0, pi/3]."""

    code = "DIRECTION_OUT_OF_RANGE"


class OperatorNeverDefinedError(SubjectiveLogicError):
    """An audited operator was undefined on every sampled input."""

    code = "OPERATOR_NEVER_DEFINED"
