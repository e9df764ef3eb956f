"""The eleven classical binary opinion operators, fixed at base rate 1/2.

Every operator takes two opinions and returns either a valid opinion or
an :class:`Undefined` marker naming the violated domain condition.
Undefined is a value, not an exception, so auditors can count partial
operators without try/except plumbing.

All formulas are the standard published ones instantiated at relative
atomicity 1/2 for both operands (results carry 1/2 as well).  The
general-atomicity subtraction/division/codivision forms degenerate at
equal atomicities, so those three are implemented as the exact inverses
of this module's addition, multiplication, and comultiplication; the
per-operator docstrings state formula and domain.

Operand-order conventions (both empirically pinned by the requirement
audit, see the discounting and codivision notes):

- ``discount(l, r)``: the left operand discounts the right (left plays
  the trust-in-source role).
- ``codiv(l, r)``: the left operand is the disjunct being removed, the
  right operand the disjunction it is removed from.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import UnknownOperatorError
from .opinion import Opinion, make_opinion

__all__ = [
    "OperatorId",
    "Undefined",
    "apply",
    "operator_domain",
    "CLI_NAMES",
    "operator_from_name",
]

# Negatives larger than this are real domain violations, not rounding fuzz.
_EPS_DOMAIN = 1e-12


class OperatorId(enum.Enum):
    ADDITION = "add"
    SUBTRACTION = "sub"
    MULTIPLICATION = "mul"
    DIVISION = "div"
    COMULTIPLICATION = "comul"
    CODIVISION = "codiv"
    DISCOUNTING = "discount"
    CUMULATIVE_FUSION = "cfuse"
    AVERAGING_FUSION = "afuse"
    CUMULATIVE_UNFUSION = "cunfuse"
    AVERAGING_UNFUSION = "aunfuse"


CLI_NAMES = {op.value: op for op in OperatorId}


def operator_from_name(name: str) -> OperatorId:
    try:
        return CLI_NAMES[name]
    except KeyError:
        raise UnknownOperatorError(
            f"unknown operator {name!r}; expected one of {sorted(CLI_NAMES)}"
        ) from None


@dataclass(frozen=True)
class Undefined:
    """Marker for a domain-condition failure; ``condition`` says which."""

    condition: str

    def to_dict(self) -> dict:
        return {"undefined": self.condition}


Result = Opinion | Undefined


def _finish(b: float, d: float, u: float) -> Result | None:
    """Clamp rounding fuzz and build the result; None if truly invalid."""
    if not (math.isfinite(b) and math.isfinite(d) and math.isfinite(u)):
        return None
    if b < -_EPS_DOMAIN or d < -_EPS_DOMAIN or u < -_EPS_DOMAIN:
        return None
    if b > 1.0 + _EPS_DOMAIN or d > 1.0 + _EPS_DOMAIN or u > 1.0 + _EPS_DOMAIN:
        return None
    if abs(b + d + u - 1.0) > 1e-9:
        # cancellation blew the components off the simplex
        return None
    return make_opinion(
        min(1.0, max(0.0, b)), min(1.0, max(0.0, d)), min(1.0, max(0.0, u))
    )


def _add(x: Opinion, y: Opinion) -> Result:
    """Sum of opinions on mutually exclusive propositions.

    b = b1 + b2, u = (u1 + u2)/2, d = 1 - b - u.
    Domain: b <= 1 and d >= 0.
    """
    b = x.belief + y.belief
    u = (x.uncertainty + y.uncertainty) / 2.0
    d = 1.0 - b - u
    if b > 1.0 + _EPS_DOMAIN:
        return Undefined("belief sum exceeds 1")
    result = _finish(b, d, u)
    return result if result is not None else Undefined("disbelief would go negative")


def _sub(x: Opinion, y: Opinion) -> Result:
    """Difference of opinions; exact inverse of addition at base rate 1/2.

    b = b1 - b2, u = 2*u1 - u2, d = 1 - b - u.
    Domain: b >= 0, u >= 0, b + u <= 1.
    """
    b = x.belief - y.belief
    u = 2.0 * x.uncertainty - y.uncertainty
    d = 1.0 - b - u
    if b < -_EPS_DOMAIN:
        return Undefined("belief would go negative")
    if u < -_EPS_DOMAIN:
        return Undefined("uncertainty would go negative")
    result = _finish(b, d, u)
    return result if result is not None else Undefined("disbelief would go negative")


def _mul(x: Opinion, y: Opinion) -> Result:
    """Conjunction of independent opinions (total).

    b = b1*b2 + (b1*u2 + u1*b2)/3, d = d1 + d2 - d1*d2, u = 1 - b - d.
    """
    b = x.belief * y.belief + (x.belief * y.uncertainty + x.uncertainty * y.belief) / 3.0
    d = x.disbelief + y.disbelief - x.disbelief * y.disbelief
    u = 1.0 - b - d
    result = _finish(b, d, u)
    return result if result is not None else Undefined("result left the simplex")


def _div(x: Opinion, y: Opinion) -> Result:
    """Un-conjunction: the w with mul(w, y) = x, when one exists.

    d = (d1 - d2)/(1 - d2), b = (3*b1 - (1 - d)*b2)/(2*b2 + u2), u = 1 - b - d.
    Domain: d2 < 1, d1 >= d2, 2*b2 + u2 > 0, quotient on the simplex.
    """
    if y.disbelief >= 1.0:
        return Undefined("divisor is full disbelief")
    if 2.0 * y.belief + y.uncertainty <= 0.0:
        return Undefined("divisor has no belief or uncertainty mass")
    d = (x.disbelief - y.disbelief) / (1.0 - y.disbelief)
    if d < -_EPS_DOMAIN:
        return Undefined("dividend disbelief below divisor disbelief")
    s = 1.0 - d
    b = (3.0 * x.belief - s * y.belief) / (2.0 * y.belief + y.uncertainty)
    u = s - b
    if b < -_EPS_DOMAIN:
        return Undefined("quotient belief would go negative")
    if u < -_EPS_DOMAIN:
        return Undefined("quotient uncertainty would go negative")
    result = _finish(b, d, u)
    return result if result is not None else Undefined("quotient left the simplex")


def _comul(x: Opinion, y: Opinion) -> Result:
    """Disjunction of independent opinions (total).

    b = b1 + b2 - b1*b2, d = d1*d2 + (d1*u2 + u1*d2)/3, u = 1 - b - d.
    """
    b = x.belief + y.belief - x.belief * y.belief
    d = (
        x.disbelief * y.disbelief
        + (x.disbelief * y.uncertainty + x.uncertainty * y.disbelief) / 3.0
    )
    u = 1.0 - b - d
    result = _finish(b, d, u)
    return result if result is not None else Undefined("result left the simplex")


def _codiv(x: Opinion, y: Opinion) -> Result:
    """Un-disjunction: the w with comul(w, x) = y, when one exists.

    The left operand is the removed disjunct, the right the disjunction.
    b = (b2 - b1)/(1 - b1), d = (3*d2 - (1 - b)*d1)/(2*d1 + u1), u = 1 - b - d.
    Domain: b1 < 1, b2 >= b1, 2*d1 + u1 > 0, quotient on the simplex.
    """
    if x.belief >= 1.0:
        return Undefined("removed disjunct is full belief")
    if 2.0 * x.disbelief + x.uncertainty <= 0.0:
        return Undefined("removed disjunct has no disbelief or uncertainty mass")
    b = (y.belief - x.belief) / (1.0 - x.belief)
    if b < -_EPS_DOMAIN:
        return Undefined("dividend belief below removed disjunct belief")
    s = 1.0 - b
    d = (3.0 * y.disbelief - s * x.disbelief) / (2.0 * x.disbelief + x.uncertainty)
    u = s - d
    if d < -_EPS_DOMAIN:
        return Undefined("quotient disbelief would go negative")
    if u < -_EPS_DOMAIN:
        return Undefined("quotient uncertainty would go negative")
    result = _finish(b, d, u)
    return result if result is not None else Undefined("quotient left the simplex")


def _discount(x: Opinion, y: Opinion) -> Result:
    """Trust discounting: the left operand discounts the right (total).

    b = b1*b2, d = b1*d2, u = d1 + u1 + b1*u2.
    """
    b = x.belief * y.belief
    d = x.belief * y.disbelief
    u = x.disbelief + x.uncertainty + x.belief * y.uncertainty
    result = _finish(b, d, u)
    return result if result is not None else Undefined("result left the simplex")


def _cfuse(x: Opinion, y: Opinion) -> Result:
    """Cumulative fusion of independent sources (total).

    k = u1 + u2 - u1*u2; b = (b1*u2 + b2*u1)/k, d likewise, u = u1*u2/k.
    Two dogmatic operands use the limit rule with dogmatic weight 1/2.
    """
    k = x.uncertainty + y.uncertainty - x.uncertainty * y.uncertainty
    if k == 0.0:
        result = _finish((x.belief + y.belief) / 2.0, (x.disbelief + y.disbelief) / 2.0, 0.0)
    else:
        result = _finish(
            (x.belief * y.uncertainty + y.belief * x.uncertainty) / k,
            (x.disbelief * y.uncertainty + y.disbelief * x.uncertainty) / k,
            x.uncertainty * y.uncertainty / k,
        )
    return result if result is not None else Undefined("result left the simplex")


def _afuse(x: Opinion, y: Opinion) -> Result:
    """Averaging fusion of dependent sources: the component mean (total).

    b = (b1 + b2)/2, d = (d1 + d2)/2, u = (u1 + u2)/2.
    """
    result = _finish(
        (x.belief + y.belief) / 2.0,
        (x.disbelief + y.disbelief) / 2.0,
        (x.uncertainty + y.uncertainty) / 2.0,
    )
    return result if result is not None else Undefined("result left the simplex")


def _cunfuse(x: Opinion, y: Opinion) -> Result:
    """Cumulative unfusion: remove source y's contribution from fused x.

    den = u2 - u1 + u1*u2; b = (b1*u2 - b2*u1)/den, d likewise,
    u = u1*u2/den.  Two dogmatic operands invert the dogmatic-limit rule:
    b = 2*b1 - b2, d = 2*d1 - d2, u = 0.
    Domain: den != 0 and the result on the simplex.
    """
    if x.uncertainty == 0.0 and y.uncertainty == 0.0:
        result = _finish(2.0 * x.belief - y.belief, 2.0 * x.disbelief - y.disbelief, 0.0)
        return result if result is not None else Undefined("result left the simplex")
    den = y.uncertainty - x.uncertainty + x.uncertainty * y.uncertainty
    if den == 0.0:
        return Undefined("denominator vanishes")
    b = (x.belief * y.uncertainty - y.belief * x.uncertainty) / den
    d = (x.disbelief * y.uncertainty - y.disbelief * x.uncertainty) / den
    u = x.uncertainty * y.uncertainty / den
    result = _finish(b, d, u)
    return result if result is not None else Undefined("result left the simplex")


def _aunfuse(x: Opinion, y: Opinion) -> Result:
    """Averaging unfusion: uncertainty-weighted removal of source y.

    den = 2*u2 - u1; b = (2*b1*u2 - b2*u1)/den, d likewise, u = u1*u2/den.
    Two dogmatic operands invert the dogmatic-limit rule as in cumulative
    unfusion.  Domain: den != 0 and the result on the simplex.
    """
    if x.uncertainty == 0.0 and y.uncertainty == 0.0:
        result = _finish(2.0 * x.belief - y.belief, 2.0 * x.disbelief - y.disbelief, 0.0)
        return result if result is not None else Undefined("result left the simplex")
    den = 2.0 * y.uncertainty - x.uncertainty
    if den == 0.0:
        return Undefined("denominator vanishes")
    b = (2.0 * x.belief * y.uncertainty - y.belief * x.uncertainty) / den
    d = (2.0 * x.disbelief * y.uncertainty - y.disbelief * x.uncertainty) / den
    u = x.uncertainty * y.uncertainty / den
    result = _finish(b, d, u)
    return result if result is not None else Undefined("result left the simplex")


_IMPLEMENTATIONS = {
    OperatorId.ADDITION: _add,
    OperatorId.SUBTRACTION: _sub,
    OperatorId.MULTIPLICATION: _mul,
    OperatorId.DIVISION: _div,
    OperatorId.COMULTIPLICATION: _comul,
    OperatorId.CODIVISION: _codiv,
    OperatorId.DISCOUNTING: _discount,
    OperatorId.CUMULATIVE_FUSION: _cfuse,
    OperatorId.AVERAGING_FUSION: _afuse,
    OperatorId.CUMULATIVE_UNFUSION: _cunfuse,
    OperatorId.AVERAGING_UNFUSION: _aunfuse,
}


def apply(op: OperatorId | str, left: Opinion, right: Opinion) -> Result:
    """Apply a binary operator; returns an Opinion or an Undefined marker."""
    if isinstance(op, str):
        op = operator_from_name(op)
    if not isinstance(op, OperatorId):
        raise UnknownOperatorError(f"unknown operator {op!r}")
    return _IMPLEMENTATIONS[op](left, right)


def operator_domain(op: OperatorId | str, left: Opinion, right: Opinion) -> bool:
    """True iff :func:`apply` would return an Opinion for these operands."""
    return isinstance(apply(op, left, right), Opinion)
