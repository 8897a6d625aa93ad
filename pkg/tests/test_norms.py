"""Gauge and Amemiya norms, the K-interval, modulars, and the scaling
threshold.

Frozen reference values in this file were produced by independent runs of
the corresponding routines at tighter tolerances and cross-checked against
closed forms where available.
"""

import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import olk
from olk.errors import DomainError, NotInSpaceError

from conftest import (dyadic, rand_phi, rand_seq, rand_seq_weight, rand_step,
                      rand_step_weight)


# ---------------------------------------------------------------------------
# modular values


def test_modular_of_step_is_weighted_sum(quad_phi):
    w = olk.StepWeight(((2.0, 2.0), (math.inf, 0.5)))
    f = olk.StepFunction(((2.0, 1.0), (1.0, 2.0)))
    # rearranged: value 2 on [0,1) (w=2), value 1 on [1,3) (w mass 2+0.5)
    expected = quad_phi.value(2.0) * 2.0 + quad_phi.value(1.0) * 2.5
    assert olk.rho_modular(quad_phi, w, f) == pytest.approx(
        expected, rel=1e-12)


def test_modular_of_sequence_uses_weight_head(quad_phi):
    w = olk.ExplicitSeqWeight((2.0, 1.0, 0.5))
    f = olk.FiniteSequence((1.0, 3.0))
    expected = quad_phi.value(3.0) * 2.0 + quad_phi.value(1.0) * 1.0
    assert olk.rho_modular(quad_phi, w, f) == pytest.approx(
        expected, rel=1e-12)


def test_modular_of_log_tail_profile_quadrature():
    # with phi(t) = t^2/2 and f(t) = log(1+1/t), the weighted modular over
    # w = 1 is 0.5 * int_0^inf log(1+1/t)^2 dt = pi^2/6
    phi = olk.PowerOrlicz(2.0, 0.5)
    w = olk.StepWeight(((math.inf, 1.0),))
    f = olk.LogTailProfile(1.0)
    assert olk.rho_modular(phi, w, f) == pytest.approx(
        math.pi**2 / 6.0, rel=1e-8)


def test_modular_divergence_detected():
    # 1/log decays too slowly for any power gauge: modular is infinite
    phi = olk.PowerOrlicz(2.0, 0.5)
    w = olk.StepWeight(((math.inf, 1.0),))
    f = olk.LogTailProfile(1.0)
    # the head is integrable but the tail of the square is not summable
    # against w = 1 at scale 1, so the gauge must stay finite anyway; use a
    # power profile with a fat tail instead for a clean divergence
    fat = olk.PowerTailProfile(0.25, 1.0)
    assert math.isinf(olk.rho_modular(phi, w, fat))


def test_modular_of_zero_is_zero(quad_phi, lebesgue_weight):
    assert olk.rho_modular(quad_phi, lebesgue_weight,
                           olk.StepFunction(())) == 0.0


# ---------------------------------------------------------------------------
# closed-form anchors


def test_gauge_norm_anchor(quad_phi, lebesgue_weight):
    # phi(t)=t^2/2, w=1: gauge of the unit indicator is 1/sqrt(2)
    f = olk.StepFunction(((1.0, 1.0),))
    assert olk.luxemburg_norm(quad_phi, lebesgue_weight, f) == pytest.approx(
        1.0 / math.sqrt(2.0), rel=1e-9)


def test_amemiya_norm_anchor(quad_phi, lebesgue_weight):
    f = olk.StepFunction(((1.0, 1.0),))
    assert olk.orlicz_norm_amemiya(
        quad_phi, lebesgue_weight, f) == pytest.approx(
            math.sqrt(2.0), rel=1e-9)


def test_k_interval_anchor(quad_phi, lebesgue_weight):
    f = olk.StepFunction(((1.0, 1.0),))
    ki = olk.k_interval(quad_phi, lebesgue_weight, f)
    assert ki.lower == pytest.approx(math.sqrt(2.0), rel=1e-8)
    assert ki.upper == pytest.approx(math.sqrt(2.0), rel=1e-8)
    assert ki.attained_norm == pytest.approx(math.sqrt(2.0), rel=1e-9)


def test_sequence_norm_anchor(quad_phi):
    # single unit entry, unit weight: same constants as the unit indicator
    w = olk.ConstantSeqWeight(1.0)
    f = olk.FiniteSequence((1.0,))
    assert olk.luxemburg_norm(quad_phi, w, f) == pytest.approx(
        1.0 / math.sqrt(2.0), rel=1e-9)
    assert olk.orlicz_norm_amemiya(quad_phi, w, f) == pytest.approx(
        math.sqrt(2.0), rel=1e-9)


def test_log_tail_gauge_norm_frozen_value():
    phi = olk.ExpOrlicz()
    w = olk.StepWeight(((math.inf, 1.0),))
    f = olk.LogTailProfile(1.0)
    assert olk.luxemburg_norm(phi, w, f) == pytest.approx(
        1.7625687581021339, rel=1e-8)


# ---------------------------------------------------------------------------
# norm properties


def test_zero_element_has_zero_norm(quad_phi, lebesgue_weight):
    z = olk.StepFunction(())
    assert olk.luxemburg_norm(quad_phi, lebesgue_weight, z) == 0.0
    assert olk.orlicz_norm_amemiya(quad_phi, lebesgue_weight, z) == 0.0


@settings(max_examples=40, derandomize=True, deadline=None)
@given(c=st.floats(0.0625, 16.0), seed=st.integers(0, 10_000))
def test_gauge_norm_is_positively_homogeneous(c, seed):
    rng = np.random.default_rng(seed)
    phi = rand_phi(rng)
    f = rand_step(rng)
    w = rand_step_weight(rng)
    if not f.rearranged().atoms:
        return
    base = olk.luxemburg_norm(phi, w, f)
    scaled = olk.luxemburg_norm(phi, w, f.scaled(c))
    assert scaled == pytest.approx(c * base, rel=1e-8)


def test_norm_sandwich_and_unit_ball():
    rng = np.random.default_rng(77)
    for _ in range(80):
        phi = rand_phi(rng)
        if int(rng.integers(0, 2)):
            f, w = rand_step(rng), rand_step_weight(rng)
        else:
            f, w = rand_seq(rng), rand_seq_weight(rng)
        if not f.rearranged().atoms if hasattr(f, "atoms") else False:
            continue
        lux = olk.luxemburg_norm(phi, w, f)
        if lux == 0.0:
            continue
        orl = olk.orlicz_norm_amemiya(phi, w, f)
        assert lux <= orl * (1.0 + 1e-9)
        assert orl <= 2.0 * lux * (1.0 + 1e-9)
        assert olk.rho_modular(phi, w, f.scaled(1.0 / lux)) <= 1.0 + 1e-8


def test_norm_is_rearrangement_invariant(quad_phi):
    w = olk.StepWeight(((1.0, 2.0), (math.inf, 1.0)))
    f = olk.StepFunction(((1.0, 0.5), (3.0, 0.75), (1.0, 0.25)))
    g = f.rearranged()
    # halve one atom into two equal pieces: same rearrangement class
    split = olk.StepFunction(((1.0, 0.5), (3.0, 0.375), (3.0, 0.375),
                              (1.0, 0.25)))
    n1 = olk.luxemburg_norm(quad_phi, w, f)
    assert olk.luxemburg_norm(quad_phi, w, g) == pytest.approx(n1, rel=1e-10)
    assert olk.luxemburg_norm(quad_phi, w, split) == pytest.approx(
        n1, rel=1e-10)


def test_orthogonal_additivity_is_subadditive(quad_phi):
    w = olk.StepWeight(((math.inf, 1.0),))
    rng = np.random.default_rng(78)
    for _ in range(20):
        f, g = rand_step(rng), rand_step(rng)
        s = olk.disjoint_sum(f, g)
        ns = olk.luxemburg_norm(quad_phi, w, s)
        nf = olk.luxemburg_norm(quad_phi, w, f)
        ng = olk.luxemburg_norm(quad_phi, w, g)
        assert ns <= nf + ng + 1e-9
        assert ns >= max(nf, ng) - 1e-9


def test_not_in_space_raises():
    phi = olk.PowerOrlicz(2.0, 0.5)
    w = olk.StepWeight(((math.inf, 1.0),))
    fat = olk.PowerTailProfile(0.25, 1.0)  # t^{-1/4} tail: no scaling helps
    with pytest.raises(NotInSpaceError):
        olk.luxemburg_norm(phi, w, fat)


# ---------------------------------------------------------------------------
# K-interval and pairing diagnostics


def test_amemiya_objective_constant_across_k_interval():
    rng = np.random.default_rng(79)
    checked = 0
    while checked < 15:
        phi = rand_phi(rng)
        if int(rng.integers(0, 2)):
            f, w = rand_step(rng), rand_step_weight(rng)
        else:
            f, w = rand_seq(rng), rand_seq_weight(rng)
        try:
            ki = olk.k_interval(phi, w, f)
        except (olk.ConvergenceError, DomainError):
            continue
        orl = olk.orlicz_norm_amemiya(phi, w, f)
        for k in (ki.lower, 0.5 * (ki.lower + ki.upper), ki.upper):
            val = (1.0 + olk.rho_modular(phi, w, f.scaled(k))) / k
            assert val == pytest.approx(orl, rel=1e-8)
        checked += 1


def test_pairing_report_identity(quad_phi, lebesgue_weight):
    f = olk.StepFunction(((2.0, 0.5), (1.0, 1.0)))
    report = olk.amemiya_pairing_report(quad_phi, lebesgue_weight, f)
    # the weighted pairing at the attaining k reproduces the Amemiya value
    assert report["amemiya_at_k"] == pytest.approx(
        report["orlicz_norm"], rel=1e-8)
    assert report["weighted_pairing"] == pytest.approx(
        report["amemiya_at_k"], rel=1e-6)
    assert set(report) >= {"k", "weighted_pairing", "unweighted_pairing",
                           "amemiya_at_k", "orlicz_norm", "attained_norm"}


def test_dual_sup_oracle_matches_amemiya(quad_phi):
    w = olk.HarmonicSeqWeight()
    f = olk.FiniteSequence((2.0, 1.5, 0.5))
    orl = olk.orlicz_norm_amemiya(quad_phi, w, f)
    sup = olk.orlicz_norm_dual_sup_oracle(quad_phi, w, f)
    assert sup == pytest.approx(orl, rel=1e-6)


# ---------------------------------------------------------------------------
# scaling threshold


def test_theta_zero_for_finite_elements(quad_phi, lebesgue_weight):
    f = olk.StepFunction(((4.0, 0.5),))
    assert olk.theta(quad_phi, lebesgue_weight, f) == 0.0
    s = olk.FiniteSequence((3.0, 1.0))
    assert olk.theta(quad_phi, olk.ConstantSeqWeight(1.0), s) == 0.0


def test_theta_zero_for_banded_profile(quad_phi, lebesgue_weight):
    band = olk.BandRestriction(olk.PowerTailProfile(1.0, 1.0), 0.25, 2.0)
    assert olk.theta(quad_phi, lebesgue_weight, band) == 0.0


def test_theta_of_log_tail_under_exponential_gauge(lebesgue_weight):
    # the log tail needs scaling exactly below 1 before the exponential
    # modular becomes finite
    phi = olk.ExpOrlicz()
    f = olk.LogTailProfile(1.0)
    th = olk.theta(phi, lebesgue_weight, f)
    assert th == pytest.approx(1.0, abs=0.05)


def test_theta_scales_with_amplitude():
    phi = olk.FlatZeroOrlicz()
    w = olk.ConstantSeqWeight(1.0)
    f = olk.LogSeqTail(0.75)
    th = olk.theta(phi, w, f)
    assert th == pytest.approx(0.75, abs=0.04)


def test_theta_below_gauge_norm(lebesgue_weight):
    # the threshold never exceeds the gauge norm
    phi = olk.ExpOrlicz()
    f = olk.LogTailProfile(1.0)
    th = olk.theta(phi, lebesgue_weight, f)
    lux = olk.luxemburg_norm(phi, lebesgue_weight, f)
    assert th <= lux + 1e-9


# ---------------------------------------------------------------------------
# truncation remainders approach the threshold


REMAINDER_GAUGE = {
    2: 1.610542744048871,
    4: 1.4263368640094995,
    8: 1.2557941261911765,
    16: 1.1485574329271913,
    32: 1.0864028925425373,
}

REMAINDER_AMEMIYA = {
    2: 2.98082033044958,
    4: 2.436607292207642,
    8: 1.842886915142111,
    16: 1.4545593930733953,
    32: 1.2476421408244915,
}


def test_remainder_norms_match_frozen_values(lebesgue_weight):
    phi = olk.ExpOrlicz()
    f = olk.LogTailProfile(1.0)
    for n, expected in REMAINDER_GAUGE.items():
        rem = olk.truncation_remainder(f, n)
        assert olk.luxemburg_norm(phi, lebesgue_weight, rem) == pytest.approx(
            expected, rel=1e-8)
    for n, expected in REMAINDER_AMEMIYA.items():
        rem = olk.truncation_remainder(f, n)
        assert olk.orlicz_norm_amemiya(
            phi, lebesgue_weight, rem) == pytest.approx(expected, rel=1e-8)


def test_remainder_norms_decrease_toward_threshold(lebesgue_weight):
    phi = olk.ExpOrlicz()
    f = olk.LogTailProfile(1.0)
    th = olk.theta(phi, lebesgue_weight, f)
    gauge = [REMAINDER_GAUGE[n] for n in (2, 4, 8, 16, 32)]
    amemiya = [REMAINDER_AMEMIYA[n] for n in (2, 4, 8, 16, 32)]
    for seq in (gauge, amemiya):
        assert all(a > b for a, b in zip(seq, seq[1:]))
        assert all(v > th for v in seq)
    # extrapolating the slowly-converging gauge tail confirms the limit is
    # the threshold: Aitken acceleration moves the estimate well inside the
    # plain sequence values
    x0, x1, x2 = gauge[-3:]
    accel = x2 - (x2 - x1) ** 2 / ((x2 - x1) - (x1 - x0))
    assert abs(accel - th) < abs(gauge[-1] - th)
    assert accel == pytest.approx(th, abs=0.05)
