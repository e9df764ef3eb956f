"""Classical operator examples, domain markers, and algebraic contracts."""

import pytest
from hypothesis import given, settings

from sltrust import (
    FULL_BELIEF,
    VACUOUS,
    Opinion,
    OperatorId,
    Undefined,
    apply,
    make_opinion,
    operator_domain,
)
from sltrust.errors import UnknownOperatorError
from sltrust.operators import CLI_NAMES, operator_from_name

from strategies import opinions

TOL = 1e-9


def components_close(x, y, tol=TOL):
    return all(abs(a - b) <= tol for a, b in zip(x.components(), y.components()))


class TestExamples:
    def test_vacuous_is_cumulative_fusion_neutral(self):
        """Independent evaluation of the fusion rule over 100 random operands."""
        import numpy as np

        rng = np.random.Generator(np.random.Philox(key=3))
        draws = rng.standard_exponential((100, 3))
        for row in draws / draws.sum(axis=1, keepdims=True):
            x = make_opinion(*row)
            fused = apply(OperatorId.CUMULATIVE_FUSION, VACUOUS, x)
            # independent route: k = 1 + u - u, b = x.b * 1 / k, etc.
            k = 1.0 + x.uncertainty - 1.0 * x.uncertainty
            want = make_opinion(x.belief / k, x.disbelief / k, x.uncertainty / k)
            assert components_close(fused, want, tol=1e-7)
            assert components_close(fused, x, tol=1e-7)

    def test_dogmatic_multiplication(self):
        got = apply(OperatorId.MULTIPLICATION, make_opinion(0.3, 0.7, 0), make_opinion(0.2, 0.8, 0))
        assert components_close(got, make_opinion(0.06, 0.94, 0))

    def test_discounting_by_vacuous_right_operand(self):
        for t in (make_opinion(0.5, 0.2, 0.3), FULL_BELIEF, make_opinion(0, 0.5, 0.5)):
            got = apply(OperatorId.DISCOUNTING, t, VACUOUS)
            assert components_close(got, VACUOUS, tol=1e-12)

    def test_dogmatic_addition(self):
        got = apply(OperatorId.ADDITION, make_opinion(0.3, 0.7, 0), make_opinion(0.2, 0.8, 0))
        assert components_close(got, make_opinion(0.5, 0.5, 0))

    def test_unknown_operator(self):
        with pytest.raises(UnknownOperatorError):
            apply("frobnicate", FULL_BELIEF, VACUOUS)
        with pytest.raises(UnknownOperatorError):
            operator_from_name("nope")

    def test_cli_names_cover_all_operators(self):
        assert sorted(CLI_NAMES) == sorted(
            ["add", "sub", "mul", "div", "comul", "codiv", "discount",
             "cfuse", "afuse", "cunfuse", "aunfuse"]
        )
        assert all(operator_from_name(n) is op for n, op in CLI_NAMES.items())


class TestDomains:
    def test_addition_belief_overflow(self):
        a = make_opinion(0.8, 0.2, 0)
        result = apply(OperatorId.ADDITION, a, a)
        assert isinstance(result, Undefined)
        assert result.condition == "belief sum exceeds 1"
        assert not operator_domain(OperatorId.ADDITION, a, a)

    def test_multiplication_total(self):
        for x in (FULL_BELIEF, VACUOUS, make_opinion(0.2, 0.5, 0.3)):
            for y in (FULL_BELIEF, VACUOUS, make_opinion(0.9, 0.1, 0)):
                assert operator_domain(OperatorId.MULTIPLICATION, x, y)

    def test_subtraction_negative_belief(self):
        result = apply(
            OperatorId.SUBTRACTION, make_opinion(0.2, 0.8, 0), make_opinion(0.5, 0.5, 0)
        )
        assert isinstance(result, Undefined)
        assert result.condition == "belief would go negative"

    def test_domain_mirrors_apply(self):
        pairs = [
            (OperatorId.DIVISION, make_opinion(0.3, 0.3, 0.4), make_opinion(0, 1, 0)),
            (OperatorId.DIVISION, make_opinion(0.3, 0.3, 0.4), make_opinion(0.5, 0.2, 0.3)),
            (OperatorId.CODIVISION, FULL_BELIEF, make_opinion(0.5, 0.2, 0.3)),
            (OperatorId.AVERAGING_UNFUSION, make_opinion(0, 0, 1), make_opinion(0.25, 0.25, 0.5)),
        ]
        for op, left, right in pairs:
            assert operator_domain(op, left, right) == isinstance(
                apply(op, left, right), Opinion
            )


class TestClosure:
    @given(opinions(), opinions())
    @settings(max_examples=300)
    def test_defined_results_are_valid_opinions(self, x, y):
        for op in OperatorId:
            result = apply(op, x, y)
            if isinstance(result, Opinion):
                b, d, u = result.components()
                assert 0.0 <= b <= 1.0 and 0.0 <= d <= 1.0 and 0.0 <= u <= 1.0
                assert abs(b + d + u - 1.0) <= 1e-9
            else:
                assert isinstance(result, Undefined)
                assert result.condition


class TestCommutativity:
    @given(opinions(), opinions())
    @settings(max_examples=300)
    def test_commutative_operators(self, x, y):
        for op in (
            OperatorId.MULTIPLICATION,
            OperatorId.COMULTIPLICATION,
            OperatorId.CUMULATIVE_FUSION,
            OperatorId.AVERAGING_FUSION,
        ):
            xy = apply(op, x, y)
            yx = apply(op, y, x)
            assert isinstance(xy, Opinion) and isinstance(yx, Opinion)
            assert components_close(xy, yx)


class TestInverseRoundTrips:
    @given(opinions(), opinions())
    @settings(max_examples=300)
    def test_subtraction_undoes_addition(self, x, y):
        total = apply(OperatorId.ADDITION, x, y)
        if not isinstance(total, Opinion):
            return
        back = apply(OperatorId.SUBTRACTION, total, y)
        assert isinstance(back, Opinion)
        assert components_close(back, x, tol=1e-7)

    @given(opinions(), opinions())
    @settings(max_examples=300)
    def test_cumulative_unfusion_undoes_fusion(self, x, y):
        # fusing with a (near-)dogmatic operand collapses everything onto
        # it: not injective at u_y = 0, and the inverse's conditioning is
        # ~1/u_y^2, so the numeric domain needs u_y bounded away from 0
        # (the exactly-both-dogmatic branch is covered separately)
        if y.uncertainty < 1e-4 and not (x.uncertainty == 0.0 and y.uncertainty == 0.0):
            return
        fused = apply(OperatorId.CUMULATIVE_FUSION, x, y)
        if not isinstance(fused, Opinion):
            return
        back = apply(OperatorId.CUMULATIVE_UNFUSION, fused, y)
        if not isinstance(back, Opinion):
            return
        assert components_close(back, x, tol=1e-7)

    @given(opinions(), opinions())
    @settings(max_examples=200)
    def test_division_undoes_multiplication(self, x, y):
        product = apply(OperatorId.MULTIPLICATION, x, y)
        if not isinstance(product, Opinion):
            return
        back = apply(OperatorId.DIVISION, product, y)
        if not isinstance(back, Opinion):
            return
        assert components_close(back, x, tol=1e-7)

    @given(opinions(), opinions())
    @settings(max_examples=200)
    def test_codivision_removes_left_disjunct(self, x, y):
        union = apply(OperatorId.COMULTIPLICATION, x, y)
        if not isinstance(union, Opinion):
            return
        back = apply(OperatorId.CODIVISION, y, union)
        if not isinstance(back, Opinion):
            return
        assert components_close(back, x, tol=1e-7)


class TestDiscountingNeutralities:
    @given(opinions())
    def test_full_belief_discounter_is_identity(self, y):
        got = apply(OperatorId.DISCOUNTING, FULL_BELIEF, y)
        assert got.components() == y.components()

    @given(opinions())
    def test_vacuous_right_operand_dominates(self, x):
        got = apply(OperatorId.DISCOUNTING, x, VACUOUS)
        assert got.components() == (0.0, 0.0, 1.0)


class TestFusionDogmaticLimit:
    def test_both_dogmatic_cumulative(self):
        x = make_opinion(0.7, 0.3, 0)
        y = make_opinion(0.1, 0.9, 0)
        got = apply(OperatorId.CUMULATIVE_FUSION, x, y)
        assert components_close(got, make_opinion(0.4, 0.6, 0), tol=1e-12)

    def test_vacuous_neutral_even_for_dogmatic_operand(self):
        x = make_opinion(0.7, 0.3, 0)
        got = apply(OperatorId.CUMULATIVE_FUSION, VACUOUS, x)
        assert components_close(got, x, tol=1e-12)

    def test_both_dogmatic_unfusion_inverts(self):
        x = make_opinion(0.7, 0.3, 0)
        y = make_opinion(0.1, 0.9, 0)
        fused = apply(OperatorId.CUMULATIVE_FUSION, x, y)
        back = apply(OperatorId.CUMULATIVE_UNFUSION, fused, y)
        assert components_close(back, x, tol=1e-12)
