"""Empirical auditor for the four combination requirements.

Any binary opinion operator can be checked against the requirements:

  (a) full-belief confidence preserves the trust opinion: op(T, <1,0,0>) = T;
  (b) full-disbelief confidence dominates: op(T, <0,1,0>) = <0,1,0>;
  (c) vacuous confidence dominates: op(T, <0,0,1>) = <0,0,1>;
  (d) the result's belief never exceeds the trust opinion's belief.

Requirements are universally quantified, so a YES is always evidence at
the configured sample count: no counterexample was found.  Requirements
(a)-(c) are probed at the exact vertex confidence inputs over sampled T;
(d) over sampled (T, C) pairs, skipping pairs where the operator is
undefined.  For (a)-(c), a YES additionally needs the operator defined on
at least one sample; undefined results on the mandated input are recorded
and, when nothing is defined, force a NO.

``audit_table`` runs the eleven classical operators in their reference
order as op(T, C) and can be compared cell-by-cell against the embedded
reference verdicts; mismatches are reported as DISCREPANT rather than
silently normalized.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Mapping, Sequence

import numpy as np

from .constants import AUDIT_TOL, DEFAULT_SEED
from .errors import OperatorNeverDefinedError
from .opinion import FULL_BELIEF, FULL_DISBELIEF, VACUOUS, Opinion, make_opinion, opinion_to_dict
from .operators import OperatorId, Undefined, apply
from .sampling import sample_simplex

__all__ = [
    "AuditConfig",
    "Counterexample",
    "RequirementVerdict",
    "REFERENCE_TABLE",
    "LOW_CONFIDENCE_SAMPLES",
    "audit",
    "audit_table",
    "discrepancies",
    "format_table",
    "report_to_dict",
]

OperatorHandle = Callable[[Opinion, Opinion], Opinion | Undefined]

# Below this sample count, YES verdicts are too easy to hold spuriously.
LOW_CONFIDENCE_SAMPLES = 100

_MAX_COUNTEREXAMPLES = 3

REQUIREMENTS = ("a", "b", "c", "d")

# Reference verdicts for the eleven classical operators, in audit order.
REFERENCE_TABLE: Mapping[OperatorId, tuple[str, str, str, str]] = {
    OperatorId.ADDITION: ("No", "No", "No", "No"),
    OperatorId.SUBTRACTION: ("No", "No", "No", "Yes"),
    OperatorId.MULTIPLICATION: ("No", "Yes", "No", "No"),
    OperatorId.DIVISION: ("No", "No", "No", "No"),
    OperatorId.COMULTIPLICATION: ("No", "No", "No", "No"),
    OperatorId.CODIVISION: ("No", "No", "No", "No"),
    OperatorId.DISCOUNTING: ("No", "No", "Yes", "Yes"),
    OperatorId.CUMULATIVE_FUSION: ("No", "Yes", "No", "No"),
    OperatorId.AVERAGING_FUSION: ("No", "No", "No", "No"),
    OperatorId.CUMULATIVE_UNFUSION: ("No", "Yes", "No", "No"),
    OperatorId.AVERAGING_UNFUSION: ("No", "Yes", "No", "No"),
}


@dataclass(frozen=True)
class AuditConfig:
    """Sampling configuration; identical configs give identical reports."""

    sample_count: int = 10000
    seed: int = DEFAULT_SEED
    tolerance: float = AUDIT_TOL

    def __post_init__(self) -> None:
        if self.sample_count < 1:
            raise ValueError("sample_count must be >= 1")
        if self.tolerance <= 0.0:
            raise ValueError("tolerance must be positive")


@dataclass(frozen=True)
class Counterexample:
    """One witnessed violation: inputs, result (None if undefined), detail."""

    t: Opinion
    c: Opinion
    result: Opinion | None
    detail: str

    def to_dict(self) -> dict:
        return {
            "t": opinion_to_dict(self.t),
            "c": opinion_to_dict(self.c),
            "result": None if self.result is None else opinion_to_dict(self.result),
            "detail": self.detail,
        }


@dataclass(frozen=True)
class RequirementVerdict:
    """Yes/No per requirement plus counterexamples backing every No."""

    req_a: str
    req_b: str
    req_c: str
    req_d: str
    counterexamples: Mapping[str, tuple[Counterexample, ...]] = field(default_factory=dict)

    def as_row(self) -> tuple[str, str, str, str]:
        return (self.req_a, self.req_b, self.req_c, self.req_d)

    def to_dict(self) -> dict:
        return {
            "a": self.req_a,
            "b": self.req_b,
            "c": self.req_c,
            "d": self.req_d,
            "counterexamples": {
                key: [ce.to_dict() for ce in items]
                for key, items in self.counterexamples.items()
            },
        }


def _max_component_gap(w: Opinion, want: Opinion) -> float:
    return max(
        abs(w.belief - want.belief),
        abs(w.disbelief - want.disbelief),
        abs(w.uncertainty - want.uncertainty),
    )


def _vertex_check(
    op: OperatorHandle,
    ts: Sequence[Opinion],
    vertex: Opinion,
    result_should_be_t: bool,
    tol: float,
) -> tuple[str, tuple[Counterexample, ...], int]:
    violations: list[Counterexample] = []
    undefined: list[Counterexample] = []
    defined = 0
    for t in ts:
        w = op(t, vertex)
        if not isinstance(w, Opinion):
            if len(undefined) < _MAX_COUNTEREXAMPLES:
                detail = w.condition if isinstance(w, Undefined) else "undefined"
                undefined.append(Counterexample(t, vertex, None, f"undefined: {detail}"))
            continue
        defined += 1
        want = t if result_should_be_t else vertex
        gap = _max_component_gap(w, want)
        if gap > tol and len(violations) < _MAX_COUNTEREXAMPLES:
            violations.append(
                Counterexample(t, vertex, w, f"max component deviation {gap:.3e}")
            )
    if violations:
        return "No", tuple(violations), defined
    if defined == 0:
        return "No", tuple(undefined), defined
    return "Yes", (), defined


def _belief_bound_check(
    op: OperatorHandle, pairs: Sequence[tuple[Opinion, Opinion]], tol: float
) -> tuple[str, tuple[Counterexample, ...], int]:
    violations: list[Counterexample] = []
    defined = 0
    for t, c in pairs:
        w = op(t, c)
        if not isinstance(w, Opinion):
            continue
        defined += 1
        excess = w.belief - t.belief
        if excess > tol and len(violations) < _MAX_COUNTEREXAMPLES:
            violations.append(
                Counterexample(t, c, w, f"belief exceeds trust belief by {excess:.3e}")
            )
    return ("No" if violations else "Yes"), tuple(violations), defined


def _audit_samples(cfg: AuditConfig) -> tuple[list[Opinion], list[tuple[Opinion, Opinion]]]:
    rows = sample_simplex(3 * cfg.sample_count, cfg.seed)
    opinions = [make_opinion(*row) for row in rows]
    ts = opinions[: cfg.sample_count]
    rest = opinions[cfg.sample_count :]
    pairs = list(zip(rest[0::2], rest[1::2]))
    return ts, pairs


def audit(op: OperatorHandle, cfg: AuditConfig | None = None) -> RequirementVerdict:
    """Audit one operator handle against requirements (a)-(d).

    Raises :class:`OperatorNeverDefinedError` if the operator is undefined
    on every probed input.
    """
    cfg = cfg or AuditConfig()
    ts, pairs = _audit_samples(cfg)
    return _audit_with_samples(op, ts, pairs, cfg.tolerance)


def _audit_with_samples(
    op: OperatorHandle,
    ts: Sequence[Opinion],
    pairs: Sequence[tuple[Opinion, Opinion]],
    tolerance: float,
) -> RequirementVerdict:
    verdicts = {}
    counterexamples: dict[str, tuple[Counterexample, ...]] = {}
    total_defined = 0
    for key, vertex, is_t in (
        ("a", FULL_BELIEF, True),
        ("b", FULL_DISBELIEF, False),
        ("c", VACUOUS, False),
    ):
        verdict, ces, defined = _vertex_check(op, ts, vertex, is_t, tolerance)
        verdicts[key] = verdict
        total_defined += defined
        if ces:
            counterexamples[key] = ces
    verdict_d, ces_d, defined_d = _belief_bound_check(op, pairs, tolerance)
    verdicts["d"] = verdict_d
    total_defined += defined_d
    if ces_d:
        counterexamples["d"] = ces_d
    if total_defined == 0:
        raise OperatorNeverDefinedError("operator undefined on every sampled input")
    return RequirementVerdict(
        req_a=verdicts["a"],
        req_b=verdicts["b"],
        req_c=verdicts["c"],
        req_d=verdicts["d"],
        counterexamples=counterexamples,
    )


def audit_table(cfg: AuditConfig | None = None) -> list[tuple[OperatorId, RequirementVerdict]]:
    """Audit all eleven classical operators as op(T, C), in reference order."""
    cfg = cfg or AuditConfig()
    ts, pairs = _audit_samples(cfg)
    rows = []
    for op_id in REFERENCE_TABLE:
        handle = lambda left, right, _op=op_id: apply(_op, left, right)
        rows.append((op_id, _audit_with_samples(handle, ts, pairs, cfg.tolerance)))
    return rows


def discrepancies(
    rows: Sequence[tuple[OperatorId, RequirementVerdict]]
) -> list[tuple[OperatorId, str, str, str]]:
    """Cells whose audited verdict differs from the reference table.

    Returns (operator, requirement letter, expected, actual) per mismatch.
    """
    out = []
    for op_id, verdict in rows:
        expected = REFERENCE_TABLE[op_id]
        for letter, want, got in zip(REQUIREMENTS, expected, verdict.as_row()):
            if want != got:
                out.append((op_id, letter, want, got))
    return out


def format_table(
    rows: Sequence[tuple[OperatorId, RequirementVerdict]],
    cfg: AuditConfig | None = None,
) -> str:
    """Aligned text table: operator name plus the four Yes/No columns.

    Cells that contradict the reference verdicts are marked DISCREPANT.
    """
    bad = {(op_id, letter) for op_id, letter, _, _ in discrepancies(rows)}
    name_width = max(len(op_id.name.lower()) for op_id, _ in rows)
    header = f"{'operator':<{name_width}}  (a)  (b)  (c)  (d)"
    lines = [header, "-" * len(header)]
    for op_id, verdict in rows:
        cells = []
        for letter, value in zip(REQUIREMENTS, verdict.as_row()):
            mark = "*" if (op_id, letter) in bad else ""
            cells.append(f"{value + mark:<5}")
        lines.append(f"{op_id.name.lower():<{name_width}}  " + "".join(cells).rstrip())
    if bad:
        lines.append("")
        lines.append("* DISCREPANT cell: audited verdict contradicts the reference table")
    if cfg is not None and cfg.sample_count < LOW_CONFIDENCE_SAMPLES:
        lines.append("")
        lines.append(
            f"LOW_CONFIDENCE: only {cfg.sample_count} samples; "
            "Yes verdicts may hold spuriously"
        )
    return "\n".join(lines)


def report_to_dict(
    rows: Sequence[tuple[OperatorId, RequirementVerdict]], cfg: AuditConfig
) -> dict:
    """Machine-readable report including counterexamples and discrepancies."""
    return {
        "sample_count": cfg.sample_count,
        "seed": cfg.seed,
        "tolerance": cfg.tolerance,
        "low_confidence": cfg.sample_count < LOW_CONFIDENCE_SAMPLES,
        "rows": [
            {"operator": op_id.name, "cli_name": op_id.value, **verdict.to_dict()}
            for op_id, verdict in rows
        ],
        "discrepancies": [
            {
                "operator": op_id.name,
                "requirement": letter,
                "expected": want,
                "actual": got,
            }
            for op_id, letter, want, got in discrepancies(rows)
        ],
    }
