"""Geometric view of opinions: the triangle, its Cartesian system, angles.

Opinions live in the equilateral triangle with vertices B (full belief,
the origin), D (full disbelief) and U (full uncertainty), scaled so each
altitude has length 1.  The associated Cartesian system has its x axis
along B->D and its y axis along the uncertainty axis.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._kernels import reference as _ref
from .constants import EPS_GEO, PI_OVER_3, SQRT3
from .errors import DirectionRangeError, OutsideTriangleError
from .opinion import Opinion, make_opinion

__all__ = [
    "CartesianPoint",
    "OpinionAngles",
    "to_cartesian",
    "from_cartesian",
    "angles_of",
    "max_point",
    "magnitude_ratio",
    "VERTEX_B",
    "VERTEX_D",
    "VERTEX_U",
]


@dataclass(frozen=True)
class CartesianPoint:
    x: float
    y: float

    def as_tuple(self) -> tuple[float, float]:
        return (self.x, self.y)


@dataclass(frozen=True)
class OpinionAngles:
    """Direction alpha plus the four angles tied to the D and U vertices.

    gamma = pi/3 - beta and epsilon = pi - gamma - delta hold by
    construction, so gamma + delta + epsilon = pi exactly.
    """

    alpha: float
    beta: float
    gamma: float
    delta: float
    epsilon: float


VERTEX_B = CartesianPoint(0.0, 0.0)
VERTEX_D = CartesianPoint(2.0 / SQRT3, 0.0)
VERTEX_U = CartesianPoint(1.0 / SQRT3, 1.0)


def to_cartesian(opinion: Opinion) -> CartesianPoint:
    """Map an opinion to its point: x = (d + u/2)/sin60, y = u."""
    x, y = _ref.cartesian_elem(*opinion.components())
    return CartesianPoint(x, y)


def _inside(x: float, y: float) -> bool:
    return (
        y >= -EPS_GEO
        and SQRT3 * x - y >= -EPS_GEO
        and 2.0 - SQRT3 * x - y >= -EPS_GEO
    )


def from_cartesian(point: CartesianPoint | tuple[float, float]) -> Opinion:
    """Invert :func:`to_cartesian`; rejects points outside the triangle."""
    x, y = point.as_tuple() if isinstance(point, CartesianPoint) else point
    if not _inside(x, y):
        raise OutsideTriangleError(f"point ({x!r}, {y!r}) is outside triangle BDU")
    b, d, u = _ref.from_cartesian_elem(x, y)
    b = min(1.0, max(0.0, b))
    d = min(1.0, max(0.0, d))
    u = min(1.0, max(0.0, u))
    return make_opinion(b, d, u)


def angles_of(opinion: Opinion) -> OpinionAngles:
    """Direction and triangle angles of an opinion (see :class:`OpinionAngles`)."""
    return OpinionAngles(*_ref.angles_elem(*opinion.components()))


def max_point(direction_alpha: float) -> CartesianPoint:
    """Farthest valid opinion along a direction from B; always lies on DU."""
    if not (-EPS_GEO <= direction_alpha <= PI_OVER_3 + EPS_GEO):
        raise DirectionRangeError(
            f"direction {direction_alpha!r} outside [0, pi/3]"
        )
    alpha = min(max(direction_alpha, 0.0), PI_OVER_3)
    return CartesianPoint(*_ref.max_point_elem(alpha))


def magnitude_ratio(opinion: Opinion) -> float:
    """How far toward its maximum point the opinion sits: |B->O| / |B->M_O|.

    Zero exactly at full belief (zero-length vector), one exactly on the
    DU edge.
    """
    return _ref.magnitude_ratio_elem(*opinion.components())
