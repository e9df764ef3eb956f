"""Subjective-logic opinion algebra with a trust-confidence combination
operator, triangle geometry, an empirical requirement auditor, and a CLI."""

__version__ = "0.1.0"

from .audit import AuditConfig, RequirementVerdict, audit, audit_table
from .combine import CombinationTrace, combine, combine_traced
from .frame import (
    Frame,
    MassAssignment,
    belief_of,
    disbelief_of,
    focus,
    make_frame,
    make_mass_assignment,
    uncertainty_of,
)
from .geometry import (
    CartesianPoint,
    OpinionAngles,
    angles_of,
    from_cartesian,
    magnitude_ratio,
    max_point,
    to_cartesian,
)
from .opinion import (
    FULL_BELIEF,
    FULL_DISBELIEF,
    VACUOUS,
    Opinion,
    OpinionKind,
    classify,
    expectation,
    make_opinion,
    opinion_from_dict,
    opinion_to_dict,
)
from .operators import OperatorId, Undefined, apply, operator_domain

__all__ = [
    "__version__",
    "AuditConfig",
    "RequirementVerdict",
    "audit",
    "audit_table",
    "CombinationTrace",
    "combine",
    "combine_traced",
    "Frame",
    "MassAssignment",
    "belief_of",
    "disbelief_of",
    "focus",
    "make_frame",
    "make_mass_assignment",
    "uncertainty_of",
    "CartesianPoint",
    "OpinionAngles",
    "angles_of",
    "from_cartesian",
    "magnitude_ratio",
    "max_point",
    "to_cartesian",
    "FULL_BELIEF",
    "FULL_DISBELIEF",
    "VACUOUS",
    "Opinion",
    "OpinionKind",
    "classify",
    "expectation",
    "make_opinion",
    "opinion_from_dict",
    "opinion_to_dict",
    "OperatorId",
    "Undefined",
    "apply",
    "operator_domain",
]
