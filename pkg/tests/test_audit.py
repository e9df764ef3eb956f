"""Requirement auditor: determinism, verdicts, sampling, report formats."""

import json

import numpy as np
import pytest

from sltrust import AuditConfig, OperatorId, apply, audit, audit_table, combine
from sltrust.audit import (
    LOW_CONFIDENCE_SAMPLES,
    REFERENCE_TABLE,
    _audit_samples,
    _audit_with_samples,
    discrepancies,
    format_table,
    report_to_dict,
)
from sltrust.errors import OperatorNeverDefinedError
from sltrust.opinion import Opinion, make_opinion
from sltrust.operators import Undefined
from sltrust.sampling import sample_simplex

CFG = AuditConfig(sample_count=2000, seed=42)


def handle(op_id):
    return lambda left, right: apply(op_id, left, right)


class TestKnownVerdicts:
    def test_discounting_row(self):
        verdict = audit(handle(OperatorId.DISCOUNTING), CFG)
        assert verdict.as_row() == ("No", "No", "Yes", "Yes")

    def test_subtraction_row(self):
        verdict = audit(handle(OperatorId.SUBTRACTION), CFG)
        assert verdict.as_row() == ("No", "No", "No", "Yes")

    def test_trust_confidence_combination_satisfies_all_four(self):
        verdict = audit(combine, CFG)
        assert verdict.as_row() == ("Yes", "Yes", "Yes", "Yes")
        assert verdict.counterexamples == {}


class TestVerdictStructure:
    def test_every_no_has_counterexamples(self):
        for op_id in REFERENCE_TABLE:
            verdict = audit(handle(op_id), AuditConfig(sample_count=500, seed=9))
            for letter, value in zip("abcd", verdict.as_row()):
                if value == "No":
                    assert verdict.counterexamples.get(letter), (op_id, letter)
                else:
                    assert letter not in verdict.counterexamples

    def test_counterexamples_violate_beyond_tolerance(self):
        cfg = AuditConfig(sample_count=500, seed=9)
        verdict = audit(handle(OperatorId.ADDITION), cfg)
        for ces in verdict.counterexamples.values():
            for ce in ces:
                if ce.result is None:
                    continue  # undefined on a mandated input
                gap = max(
                    max(
                        abs(a - b)
                        for a, b in zip(ce.result.components(), want.components())
                    )
                    for want in (ce.t, ce.c)
                )
                violation = max(gap, ce.result.belief - ce.t.belief)
                assert violation > cfg.tolerance

    def test_never_defined_operator_raises(self):
        def never(_left, _right):
            return Undefined("always out of domain")

        with pytest.raises(OperatorNeverDefinedError):
            audit(never, AuditConfig(sample_count=50, seed=1))

    def test_bad_config_rejected(self):
        with pytest.raises(ValueError):
            AuditConfig(sample_count=0)
        with pytest.raises(ValueError):
            AuditConfig(tolerance=0.0)


class TestDeterminism:
    def test_identical_config_identical_report(self):
        cfg = AuditConfig(sample_count=300, seed=123)
        first = audit(handle(OperatorId.MULTIPLICATION), cfg)
        second = audit(handle(OperatorId.MULTIPLICATION), cfg)
        assert first == second

    def test_identical_table_and_json(self):
        cfg = AuditConfig(sample_count=200, seed=7)
        one = report_to_dict(audit_table(cfg), cfg)
        two = report_to_dict(audit_table(cfg), cfg)
        assert json.dumps(one) == json.dumps(two)

    def test_yes_verdicts_survive_subsetting(self):
        cfg = AuditConfig(sample_count=400, seed=21)
        ts, pairs = _audit_samples(cfg)
        full = _audit_with_samples(combine, ts, pairs, cfg.tolerance)
        subset = _audit_with_samples(combine, ts[:100], pairs[:100], cfg.tolerance)
        for whole, part in zip(full.as_row(), subset.as_row()):
            if whole == "Yes":
                assert part == "Yes"


class TestTableReproduction:
    def test_full_table_matches_reference(self):
        rows = audit_table(CFG)
        assert [op for op, _ in rows] == list(REFERENCE_TABLE)
        for op_id, verdict in rows:
            assert verdict.as_row() == REFERENCE_TABLE[op_id], op_id
        assert discrepancies(rows) == []

    def test_discrepancy_detection(self):
        rows = audit_table(AuditConfig(sample_count=100, seed=3))
        # forge one cell to prove mismatches surface rather than vanish
        op_id, verdict = rows[0]
        forged = (
            op_id,
            type(verdict)(
                req_a="Yes",
                req_b=verdict.req_b,
                req_c=verdict.req_c,
                req_d=verdict.req_d,
                counterexamples={},
            ),
        )
        found = discrepancies([forged] + rows[1:])
        assert (op_id, "a", "No", "Yes") in found
        text = format_table([forged] + rows[1:])
        assert "DISCREPANT" in text

    def test_text_table_layout(self):
        rows = audit_table(AuditConfig(sample_count=100, seed=3))
        text = format_table(rows)
        lines = text.splitlines()
        assert "(a)" in lines[0] and "(d)" in lines[0]
        assert len(lines) == 2 + len(REFERENCE_TABLE)
        assert lines[2].startswith("addition")

    def test_low_confidence_flag(self):
        cfg = AuditConfig(sample_count=1, seed=5)
        rows = audit_table(cfg)
        assert "LOW_CONFIDENCE" in format_table(rows, cfg)
        assert report_to_dict(rows, cfg)["low_confidence"] is True
        big = AuditConfig(sample_count=LOW_CONFIDENCE_SAMPLES, seed=5)
        assert report_to_dict(audit_table(big), big)["low_confidence"] is False

    def test_json_report_shape(self):
        cfg = AuditConfig(sample_count=100, seed=3)
        rows = audit_table(cfg)
        data = json.loads(json.dumps(report_to_dict(rows, cfg)))
        assert data["sample_count"] == 100 and data["seed"] == 3
        assert len(data["rows"]) == 11
        for row in data["rows"]:
            assert row["a"] in ("Yes", "No")
            for ces in row["counterexamples"].values():
                for ce in ces:
                    assert set(ce) == {"t", "c", "result", "detail"}


class TestSampling:
    def test_barycentric_uniform_edge_coverage(self):
        rows = sample_simplex(10_000, seed=42)
        for col in range(3):
            assert (rows[:, col] < 0.01).sum() >= 10

    def test_rows_sum_to_one(self):
        rows = sample_simplex(5000, seed=2)
        assert np.allclose(rows.sum(axis=1), 1.0, atol=1e-12)
        assert (rows >= 0).all()

    def test_deterministic_given_seed(self):
        assert (sample_simplex(100, seed=8) == sample_simplex(100, seed=8)).all()
        assert not (sample_simplex(100, seed=8) == sample_simplex(100, seed=9)).all()

    def test_uniformity_of_means(self):
        rows = sample_simplex(30_000, seed=4)
        assert np.allclose(rows.mean(axis=0), 1.0 / 3.0, atol=0.01)
