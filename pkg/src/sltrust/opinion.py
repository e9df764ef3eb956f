"""Binomial opinions: the value type everything else operates on.

An opinion is a triple (belief, disbelief, uncertainty) of non-negative
reals summing to one, plus a relative atomicity (base rate) that this
library fixes at 1/2 for every operation it defines.  Opinions are
immutable values; all functions here are pure.

Construction goes through :func:`make_opinion`, which validates, clamps
float fuzz, and renormalizes so the stored components sum to exactly 1.0
(in the canonical order ``belief + disbelief + uncertainty``).  Exact
barycentric coordinates keep the geometry downstream honest.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .constants import DEFAULT_BASE_RATE, EPS_CLASSIFY, EPS_SUM
from .errors import InvalidComponentError, SumViolationError

__all__ = [
    "Opinion",
    "OpinionKind",
    "make_opinion",
    "classify",
    "expectation",
    "opinion_to_dict",
    "opinion_from_dict",
    "FULL_BELIEF",
    "FULL_DISBELIEF",
    "VACUOUS",
]


@dataclass(frozen=True)
class Opinion:
    """A binomial opinion ``<belief, disbelief, uncertainty>`` with a base rate.

    Instances are expected to come from :func:`make_opinion`; direct
    construction performs only cheap validation and no renormalization.
    """

    belief: float
    disbelief: float
    uncertainty: float
    base_rate: float = DEFAULT_BASE_RATE

    def __post_init__(self) -> None:
        for name, value in (
            ("belief", self.belief),
            ("disbelief", self.disbelief),
            ("uncertainty", self.uncertainty),
            ("base_rate", self.base_rate),
        ):
            if not math.isfinite(value):
                raise InvalidComponentError(f"{name} is not finite: {value!r}")
            if value < -EPS_SUM or value > 1.0 + EPS_SUM:
                raise InvalidComponentError(f"{name} out of [0, 1]: {value!r}")
        total = self.belief + self.disbelief + self.uncertainty
        if abs(total - 1.0) > EPS_SUM:
            raise SumViolationError(
                f"components sum to {total!r}, expected 1 within {EPS_SUM}"
            )

    def components(self) -> tuple[float, float, float]:
        return (self.belief, self.disbelief, self.uncertainty)

    def __repr__(self) -> str:  # compact, round-trippable
        return (
            f"Opinion({self.belief!r}, {self.disbelief!r}, "
            f"{self.uncertainty!r}, base_rate={self.base_rate!r})"
        )


class OpinionKind(enum.Enum):
    """Limit-case classification of an opinion."""

    PURE_BELIEF = "PURE_BELIEF"
    PURE_DISBELIEF = "PURE_DISBELIEF"
    VACUOUS = "VACUOUS"
    DOGMATIC = "DOGMATIC"
    GENERAL = "GENERAL"


def make_opinion(
    belief: float,
    disbelief: float,
    uncertainty: float,
    base_rate: float = DEFAULT_BASE_RATE,
) -> Opinion:
    """Validate and normalize a component triple into an :class:`Opinion`.

    Accepts components within ``EPS_SUM`` of the simplex (small negatives
    are clamped to zero, the triple is rescaled to unit sum) and then pins
    the uncertainty component so that ``belief + disbelief + uncertainty``
    evaluates to exactly ``1.0``.

    Raises
    ------
    InvalidComponentError
        If a component is non-finite or negative/over 1 beyond tolerance.
    SumViolationError
        If the components sum to something off 1 by more than ``EPS_SUM``.
    """
    b, d, u = float(belief), float(disbelief), float(uncertainty)
    a = float(base_rate)
    for name, value in (("belief", b), ("disbelief", d), ("uncertainty", u)):
        if not math.isfinite(value):
            raise InvalidComponentError(f"{name} is not finite: {value!r}")
        if value < -EPS_SUM:
            raise InvalidComponentError(f"{name} is negative: {value!r}")
        if value > 1.0 + EPS_SUM:
            raise InvalidComponentError(f"{name} exceeds 1: {value!r}")
    if not math.isfinite(a) or a < 0.0 or a > 1.0:
        raise InvalidComponentError(f"base_rate out of [0, 1]: {a!r}")

    total = b + d + u
    if abs(total - 1.0) > EPS_SUM:
        raise SumViolationError(
            f"components sum to {total!r}, expected 1 within {EPS_SUM}"
        )

    b = min(1.0, max(0.0, b))
    d = min(1.0, max(0.0, d))
    u = min(1.0, max(0.0, u))
    total = b + d + u
    if total != 1.0:
        b, d, u = b / total, d / total, u / total
    # Pin the residual so the canonical sum is bitwise 1.0.
    u = 1.0 - (b + d)
    if u < 0.0:
        u = 0.0
        d = 1.0 - b
    return Opinion(b, d, u, a)


FULL_BELIEF = make_opinion(1.0, 0.0, 0.0)
FULL_DISBELIEF = make_opinion(0.0, 1.0, 0.0)
VACUOUS = make_opinion(0.0, 0.0, 1.0)


def classify(opinion: Opinion) -> OpinionKind:
    """Tag an opinion as a vertex case, dogmatic, or general.

    Vertex tags use ``EPS_CLASSIFY`` per component; DOGMATIC means the
    uncertainty is (numerically) zero without being a vertex.
    """
    b, d, u = opinion.components()

    def near(value: float, target: float) -> bool:
        return abs(value - target) <= EPS_CLASSIFY

    if near(b, 1.0) and near(d, 0.0) and near(u, 0.0):
        return OpinionKind.PURE_BELIEF
    if near(b, 0.0) and near(d, 1.0) and near(u, 0.0):
        return OpinionKind.PURE_DISBELIEF
    if near(b, 0.0) and near(d, 0.0) and near(u, 1.0):
        return OpinionKind.VACUOUS
    if u <= EPS_CLASSIFY:
        return OpinionKind.DOGMATIC
    return OpinionKind.GENERAL


def expectation(opinion: Opinion) -> float:
    """Probability expectation ``belief + base_rate * uncertainty``."""
    return opinion.belief + opinion.base_rate * opinion.uncertainty


def opinion_to_dict(opinion: Opinion) -> dict[str, float]:
    """JSON-ready mapping; float repr preserves all 17 significant digits."""
    return {
        "belief": opinion.belief,
        "disbelief": opinion.disbelief,
        "uncertainty": opinion.uncertainty,
        "base_rate": opinion.base_rate,
    }


def opinion_from_dict(data: dict) -> Opinion:
    """Parse the ``{"belief": ..., "disbelief": ..., "uncertainty": ...}`` form.

    ``base_rate`` is optional and defaults to 1/2.  Schema problems
    (missing or non-numeric fields) raise :class:`ValueError` naming the
    offending field; value problems raise the library's invariant errors.
    """
    if not isinstance(data, dict):
        raise ValueError(f"expected a JSON object, got {type(data).__name__}")
    values = {}
    for field in ("belief", "disbelief", "uncertainty"):
        if field not in data:
            raise ValueError(f"missing field: {field}")
        raw = data[field]
        if isinstance(raw, bool) or not isinstance(raw, (int, float)):
            raise ValueError(f"field {field} is not a number: {raw!r}")
        values[field] = float(raw)
    raw_rate = data.get("base_rate", DEFAULT_BASE_RATE)
    if isinstance(raw_rate, bool) or not isinstance(raw_rate, (int, float)):
        raise ValueError(f"field base_rate is not a number: {raw_rate!r}")
    return make_opinion(
        values["belief"], values["disbelief"], values["uncertainty"], float(raw_rate)
    )
