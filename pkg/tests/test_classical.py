import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import repetition4_by_enumeration
from qecfom.classical import (
    ChannelParams,
    ClassicalChannelMatrix,
    evolve_flip_probability,
    mutual_info_entropies,
    mutual_info_generic,
    mutual_info_strategy1,
    mutual_info_strategy2,
    repetition4_channel,
    shannon_example,
    strategy1_joint_table,
    strategy1_matrix,
    success_probabilities,
)
from qecfom.errors import DegenerateChannel, DomainError

probabilities = st.floats(0.0, 1.0, allow_nan=False)


class TestEvolution:
    def test_t_zero(self):
        assert evolve_flip_probability(0.0, 3.0, 0.0) == 0.0

    def test_long_time_limit(self):
        assert evolve_flip_probability(0.0, 1.0, 1e3) == pytest.approx(0.5, abs=1e-15)

    def test_half_unit(self):
        assert evolve_flip_probability(0.0, 1.0, 0.5) == pytest.approx(0.5 - math.exp(-1) / 2, abs=1e-15)
        assert evolve_flip_probability(0.0, 1.0, 0.5) == pytest.approx(0.3161, abs=5e-5)

    def test_finite_difference_matches_rate_equation(self):
        gamma, t, h = 0.7, 0.4, 1e-6
        q = evolve_flip_probability(0.1, gamma, t)
        dq = (evolve_flip_probability(0.1, gamma, t + h) - evolve_flip_probability(0.1, gamma, t - h)) / (2 * h)
        assert dq == pytest.approx(gamma * (1 - q) - gamma * q, rel=1e-7)

    def test_domain(self):
        with pytest.raises(DomainError):
            evolve_flip_probability(1.2, 1.0, 1.0)
        with pytest.raises(DomainError):
            evolve_flip_probability(0.0, -1.0, 1.0)

    def test_channel_params(self):
        p = ChannelParams.from_rate(1.0, 0.5)
        assert p.q == pytest.approx(0.3161, abs=5e-5)
        assert (p.gamma, p.t) == (1.0, 0.5)
        with pytest.raises(DomainError):
            ChannelParams(-0.1)


class TestChannelMatrix:
    def test_noiseless(self):
        m = repetition4_channel(0.0)
        assert (m.p_ok, m.p_err, m.p_unc) == (1.0, 0.0, 0.0)

    def test_half(self):
        m = repetition4_channel(0.5)
        assert (m.p_ok, m.p_err, m.p_unc) == pytest.approx((5 / 16, 5 / 16, 6 / 16), abs=1e-15)

    def test_one_tenth(self):
        m = repetition4_channel(0.1)
        assert (m.p_ok, m.p_err, m.p_unc) == pytest.approx((0.9477, 0.0037, 0.0486), abs=1e-12)

    @given(probabilities)
    def test_matches_enumeration(self, q):
        m = repetition4_channel(q)
        np.testing.assert_allclose((m.p_ok, m.p_err, m.p_unc), repetition4_by_enumeration(q), atol=1e-12)

    def test_validation(self):
        with pytest.raises(DomainError):
            ClassicalChannelMatrix(0.5, 0.5, 0.5)
        with pytest.raises(DomainError):
            repetition4_channel(1.5)


class TestStrategies:
    def test_strategy1_matrix(self):
        assert strategy1_matrix(repetition4_channel(0.0)) == (1.0, 0.0)
        assert strategy1_matrix(repetition4_channel(0.5)) == pytest.approx((0.5, 0.5))
        assert strategy1_matrix(repetition4_channel(0.1)) == pytest.approx((0.9720, 0.0280), abs=1e-12)

    def test_strategy1_information(self):
        assert mutual_info_strategy1(repetition4_channel(0.0)) == 1.0
        assert mutual_info_strategy1(repetition4_channel(0.5)) == pytest.approx(0.0, abs=1e-15)
        # frozen from the joint-table route; rounds to 0.8157, not 0.8158
        assert mutual_info_strategy1(repetition4_channel(0.1)) == pytest.approx(0.8157394066603448, abs=1e-12)
        assert mutual_info_strategy1(repetition4_channel(0.1)) == pytest.approx(0.8158, abs=1e-4)

    def test_strategy2_information(self):
        assert mutual_info_strategy2(repetition4_channel(0.0)) == (1.0, 1.0)
        assert mutual_info_strategy2(repetition4_channel(0.5)) == pytest.approx((0.0, 0.0), abs=1e-15)
        i_ok, i_avg = mutual_info_strategy2(repetition4_channel(0.1))
        # frozen closed-form values; 0.91645 is quoted elsewhere as ~0.9165
        assert i_ok == pytest.approx(0.9632634061777372, abs=1e-12)
        assert i_avg == pytest.approx(0.9164488046374992, abs=1e-12)
        assert i_ok == pytest.approx(0.9633, abs=1e-4)
        assert i_avg == pytest.approx(0.9165, abs=1e-4)
        assert i_avg == pytest.approx((1 - 0.0486) * i_ok, abs=1e-15)

    def test_strategy2_degenerate(self):
        with pytest.raises(DegenerateChannel):
            mutual_info_strategy2(ClassicalChannelMatrix(0.0, 0.0, 1.0))

    def test_ordering_on_grid(self):
        qs = np.linspace(0.0, 0.5, 1000)
        for q in qs:
            m = repetition4_channel(q)
            i1 = mutual_info_strategy1(m)
            i2 = mutual_info_strategy2(m)[1]
            if q in (0.0, 0.5):
                assert i2 == pytest.approx(i1, abs=1e-9)
            else:
                assert i2 - i1 > 1e-9
            p1, p2 = success_probabilities(m)
            assert p1 >= p2

    @given(probabilities)
    def test_informations_in_unit_interval(self, q):
        m = repetition4_channel(q)
        assert 0.0 <= mutual_info_strategy1(m) <= 1.0 + 1e-15
        if m.p_unc < 1:
            i_ok, i_avg = mutual_info_strategy2(m)
            assert 0.0 <= i_avg <= i_ok <= 1.0 + 1e-15

    @given(st.floats(0.0, 0.5))
    def test_q_and_one_minus_q(self, q):
        assert mutual_info_strategy1(repetition4_channel(q)) == pytest.approx(
            mutual_info_strategy1(repetition4_channel(1 - q)), abs=1e-12
        )


class TestGenericInformation:
    def test_perfect_correlation(self):
        assert mutual_info_generic([[0.5, 0.0], [0.0, 0.5]]) == 1.0

    def test_independent(self):
        assert mutual_info_generic([[0.25, 0.25], [0.25, 0.25]]) == 0.0

    def test_three_outputs(self):
        # Table 1 with uniform inputs keeps the uncorrectable column
        m = repetition4_channel(0.1)
        joint = 0.5 * m.as_table()
        assert mutual_info_generic(joint) == pytest.approx(mutual_info_entropies(joint), abs=1e-12)

    def test_matches_strategy1(self):
        joint = strategy1_joint_table(repetition4_channel(0.1))
        assert mutual_info_generic(joint) == pytest.approx(0.8158, abs=1e-4)

    @given(probabilities)
    def test_two_routes(self, q):
        m = repetition4_channel(q)
        joint = strategy1_joint_table(m)
        assert abs(mutual_info_generic(joint) - mutual_info_strategy1(m)) <= 1e-12
        assert abs(mutual_info_generic(joint) - mutual_info_entropies(joint)) <= 1e-12

    def test_domain(self):
        with pytest.raises(DomainError):
            mutual_info_generic([[0.5, 0.6], [0.0, 0.0]])
        with pytest.raises(DomainError):
            mutual_info_generic([[1.5, -0.5], [0.0, 0.0]])


class TestShannonExample:
    def test_one_percent(self):
        res = shannon_example(1000, 0.01)
        assert res.equivocation_rate == pytest.approx(80.8, abs=0.1)
        assert res.similarity_strategy_matches == pytest.approx(995)
        assert res.erasure_loss == pytest.approx(10)

    def test_noiseless(self):
        assert shannon_example(1000, 0.0) == (0.0, 1000.0, 0.0)

    def test_random(self):
        assert shannon_example(1000, 0.5) == pytest.approx((1000, 750, 500))
