"""Frames of discernment, belief-mass assignments, and focusing.

A frame is an ordered set of mutually exclusive atomic states.  Mass is
assigned over non-empty subsets of the frame; the belief, disbelief, and
uncertainty functions aggregate that mass relative to a target subset,
and focusing collapses the three values into a binomial opinion.

Subsets are keyed canonically as sorted atom tuples; subsets absent from
the mass map carry zero mass, so sparse assignments stay sparse.  Sums
use ``math.fsum`` so enumeration order never changes a result.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .constants import DEFAULT_BASE_RATE, EPS_SUM, MAX_FRAME_ATOMS
from .errors import DegenerateFocusError, InvalidComponentError, UnknownAtomError
from .opinion import Opinion, make_opinion

__all__ = [
    "Frame",
    "MassAssignment",
    "make_frame",
    "make_mass_assignment",
    "belief_of",
    "disbelief_of",
    "uncertainty_of",
    "focus",
    "mass_assignment_to_dict",
    "mass_assignment_from_dict",
]

Subset = tuple[str, ...]


@dataclass(frozen=True)
class Frame:
    """Ordered set of unique, non-empty atom identifiers (2..16 atoms)."""

    atoms: Subset

    def canonical(self, subset: Iterable[str]) -> Subset:
        """Sort and validate a subset against this frame."""
        atoms = tuple(sorted(set(subset)))
        unknown = [a for a in atoms if a not in self.atoms]
        if unknown:
            raise UnknownAtomError(f"atoms not in frame: {unknown}")
        return atoms


def make_frame(atoms: Iterable[str]) -> Frame:
    atoms = tuple(atoms)
    if len(atoms) < 2:
        raise InvalidComponentError("a frame needs at least 2 atoms")
    if len(atoms) > MAX_FRAME_ATOMS:
        raise InvalidComponentError(f"frame capped at {MAX_FRAME_ATOMS} atoms")
    if len(set(atoms)) != len(atoms):
        raise InvalidComponentError("atom identifiers must be unique")
    if any(not isinstance(a, str) or not a for a in atoms):
        raise InvalidComponentError("atom identifiers must be non-empty strings")
    return Frame(atoms)


@dataclass(frozen=True)
class MassAssignment:
    """Non-negative masses over non-empty subsets, summing to one."""

    frame: Frame
    masses: Mapping[Subset, float] = field(default_factory=dict)


def make_mass_assignment(
    frame: Frame, masses: Mapping[Iterable[str], float] | Iterable[tuple[Iterable[str], float]]
) -> MassAssignment:
    """Validate and normalize a mass map.

    Masses must be non-negative (tiny float fuzz is clamped), the empty
    subset must carry no mass, and the total must be 1 within ``EPS_SUM``;
    the stored masses are rescaled to unit total.
    """
    if isinstance(masses, Mapping):
        items = masses.items()
    else:
        items = list(masses)
    merged: dict[Subset, float] = {}
    for subset, value in items:
        key = tuple(sorted(set(subset)))
        value = float(value)
        if not math.isfinite(value):
            raise InvalidComponentError(f"mass for {key} is not finite: {value!r}")
        if not key:
            if abs(value) > EPS_SUM:
                raise InvalidComponentError("the empty subset must carry zero mass")
            continue
        key = frame.canonical(key)
        if value < -EPS_SUM:
            raise InvalidComponentError(f"mass for {key} is negative: {value!r}")
        merged[key] = merged.get(key, 0.0) + max(0.0, value)
    total = math.fsum(merged.values())
    if abs(total - 1.0) > EPS_SUM:
        raise InvalidComponentError(f"masses sum to {total!r}, expected 1 within {EPS_SUM}")
    if total != 1.0 and total > 0.0:
        merged = {k: v / total for k, v in merged.items()}
    return MassAssignment(frame, merged)


def _target(ma: MassAssignment, subset: Iterable[str]) -> frozenset[str]:
    atoms = ma.frame.canonical(subset)
    if not atoms:
        raise DegenerateFocusError("target subset is empty")
    return frozenset(atoms)


def belief_of(ma: MassAssignment, subset: Iterable[str]) -> float:
    """Total mass of non-empty subsets contained in ``subset``."""
    x = _target(ma, subset)
    return math.fsum(v for k, v in ma.masses.items() if set(k) <= x)


def disbelief_of(ma: MassAssignment, subset: Iterable[str]) -> float:
    """Total mass of subsets disjoint from ``subset``."""
    x = _target(ma, subset)
    return math.fsum(v for k, v in ma.masses.items() if not (set(k) & x))


def uncertainty_of(ma: MassAssignment, subset: Iterable[str]) -> float:
    """Total mass of subsets overlapping ``subset`` without being contained."""
    x = _target(ma, subset)
    return math.fsum(
        v for k, v in ma.masses.items() if (set(k) & x) and not (set(k) <= x)
    )


def focus(ma: MassAssignment, subset: Iterable[str]) -> Opinion:
    """Collapse the frame onto ``subset`` and return the induced opinion.

    The target must be a proper, non-empty subset of the frame.  The
    resulting opinion carries the library-wide base rate of 1/2.
    """
    x = _target(ma, subset)
    if x == set(ma.frame.atoms):
        raise DegenerateFocusError("focus target equals the whole frame")
    return make_opinion(
        belief_of(ma, x), disbelief_of(ma, x), uncertainty_of(ma, x), DEFAULT_BASE_RATE
    )


def mass_assignment_to_dict(ma: MassAssignment) -> dict:
    """JSON form: ``{"atoms": [...], "masses": [{"subset": [...], "mass": f}]}``."""
    return {
        "atoms": list(ma.frame.atoms),
        "masses": [
            {"subset": list(subset), "mass": mass}
            for subset, mass in sorted(ma.masses.items())
        ],
    }


def mass_assignment_from_dict(data: dict) -> MassAssignment:
    if not isinstance(data, dict):
        raise InvalidComponentError("expected a JSON object")
    if "atoms" not in data:
        raise InvalidComponentError("missing field: atoms")
    if "masses" not in data:
        raise InvalidComponentError("missing field: masses")
    frame = make_frame(data["atoms"])
    pairs = []
    for entry in data["masses"]:
        if "subset" not in entry or "mass" not in entry:
            raise InvalidComponentError("each mass entry needs subset and mass")
        pairs.append((entry["subset"], entry["mass"]))
    return make_mass_assignment(frame, pairs)
