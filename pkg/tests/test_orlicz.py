"""Young-pair behaviour of the convex gauge families."""

import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import olk
from olk.errors import DomainError, ValidationError

from conftest import dyadic, rand_phi

FAMILIES = [
    olk.PowerOrlicz(2.0, 0.5),
    olk.PowerOrlicz(1.5, 1.0),
    olk.PowerOrlicz(3.0, 0.25),
    olk.ExpOrlicz(),
    olk.LogOrlicz(),
    olk.FlatZeroOrlicz(),
]


# ---------------------------------------------------------------------------
# pointwise values and closed forms


def test_power_value_closed_form():
    phi = olk.PowerOrlicz(2.0, 0.5)
    assert phi.value(2.0) == 2.0
    assert phi.value(0.0) == 0.0
    assert phi.derivative(3.0) == pytest.approx(3.0, rel=1e-15)


def test_power_conjugate_closed_form():
    # conjugate of t^2/2 is t^2/2 again
    phi = olk.PowerOrlicz(2.0, 0.5)
    conj = phi.conjugate()
    assert conj.value(2.0) == pytest.approx(2.0, rel=1e-14)
    # conjugate of t^3 has exponent 3/2
    cubic = olk.PowerOrlicz(3.0, 1.0).conjugate()
    for u in (0.5, 1.0, 2.0):
        direct = max(u * v - v**3 for v in np.linspace(0.0, 10.0, 400001))
        assert cubic.value(u) == pytest.approx(direct, rel=1e-6)


def test_exp_and_log_are_mutual_conjugates():
    exp_phi = olk.ExpOrlicz()
    log_phi = olk.LogOrlicz()
    for u in (0.25, 1.0, 3.0):
        assert exp_phi.conjugate().value(u) == pytest.approx(
            log_phi.value(u), rel=1e-12)
        assert log_phi.conjugate().value(u) == pytest.approx(
            exp_phi.value(u), rel=1e-12)


def test_exp_value():
    phi = olk.ExpOrlicz()
    assert phi.value(1.0) == pytest.approx(math.e - 2.0, rel=1e-15)
    assert phi.value(0.0) == 0.0


def test_flat_zero_vanishes_near_origin_but_not_identically():
    phi = olk.FlatZeroOrlicz(cutoff=0.4)
    # extremely flat at the origin: below any power
    assert phi.value(0.01) < 0.01**10
    assert phi.value(1.0) > 0.0
    # still convex and increasing past the cutoff
    assert phi.value(2.0) > phi.value(1.0) > phi.value(0.5)


def test_tabulated_is_piecewise_linear_and_not_n_function():
    phi = olk.TabulatedOrlicz(((0.0, 0.0), (1.0, 0.5), (2.0, 2.0)))
    assert not phi.is_n_function
    assert phi.value(0.5) == pytest.approx(0.25, rel=1e-15)
    assert phi.value(1.5) == pytest.approx(1.25, rel=1e-15)


def test_tabulated_rejects_nonconvex_knots():
    with pytest.raises(ValidationError):
        olk.TabulatedOrlicz(((0.0, 0.0), (1.0, 2.0), (2.0, 2.5)))


def test_power_rejects_bad_parameters():
    with pytest.raises(ValidationError):
        olk.PowerOrlicz(1.0, 1.0)  # linear is not allowed
    with pytest.raises(ValidationError):
        olk.PowerOrlicz(2.0, -1.0)


def test_value_rejects_negative_argument():
    with pytest.raises(DomainError):
        olk.PowerOrlicz(2.0, 0.5).value(-1.0)


# ---------------------------------------------------------------------------
# convexity / monotonicity invariants


@pytest.mark.parametrize("phi", FAMILIES, ids=lambda p: type(p).__name__)
def test_derivative_is_nondecreasing(phi):
    grid = np.linspace(0.01, 6.0, 200)
    dv = np.array([phi.derivative(float(t)) for t in grid])
    assert np.all(np.diff(dv) >= -1e-12 * np.maximum(1.0, dv[:-1]))


@pytest.mark.parametrize("phi", FAMILIES, ids=lambda p: type(p).__name__)
def test_value_is_convex_on_samples(phi):
    grid = np.linspace(0.0, 5.0, 101)
    vals = np.array([phi.value(float(t)) for t in grid])
    mids = 0.5 * (vals[:-2] + vals[2:])
    assert np.all(vals[1:-1] <= mids + 1e-12 * np.maximum(1.0, mids))


@settings(max_examples=60, derandomize=True, deadline=None)
@given(u=st.floats(0.0, 8.0), v=st.floats(0.0, 8.0),
       idx=st.integers(0, len(FAMILIES) - 1))
def test_young_inequality_holds(u, v, idx):
    phi = FAMILIES[idx]
    assert olk.young_gap(phi, u, v) >= -1e-9


@pytest.mark.parametrize("phi", FAMILIES[:5], ids=lambda p: type(p).__name__)
def test_young_equality_at_derivative(phi):
    # at v = phi'(u) the inequality is tight
    for u in (0.25, 1.0, 2.5):
        v = phi.derivative(u)
        gap = olk.young_gap(phi, u, v)
        scale = max(1.0, phi.value(u) + phi.conjugate().value(v))
        assert abs(gap) <= 1e-9 * scale


# ---------------------------------------------------------------------------
# numeric conjugate agreement


def test_numeric_conjugate_matches_closed_forms():
    rng = np.random.default_rng(7)
    for _ in range(10):
        phi = rand_phi(rng)
        numeric = olk.NumericConjugate(phi)
        closed = phi.conjugate()
        for u in (0.1, 0.5, 1.0, 2.0, 4.0):
            assert numeric.value(u) == pytest.approx(
                closed.value(u), rel=1e-7, abs=1e-10)


def test_double_conjugate_recovers_original():
    phi = olk.ExpOrlicz()
    back = olk.NumericConjugate(olk.NumericConjugate(phi))
    for u in (0.25, 1.0, 2.0):
        assert back.value(u) == pytest.approx(phi.value(u), rel=1e-6)


# ---------------------------------------------------------------------------
# growth classification


def test_delta2_classification():
    assert olk.delta2_classify(olk.PowerOrlicz(2.0, 0.5))["global"] is True
    report = olk.delta2_classify(olk.ExpOrlicz())
    assert report["at_infinity"] is False
    assert report["at_zero"] is True
    assert olk.delta2_classify(olk.LogOrlicz())["global"] is True


def test_delta2_power_constant():
    report = olk.delta2_classify(olk.PowerOrlicz(2.0, 0.5))
    assert report["K_estimate"] == pytest.approx(4.0, rel=1e-9)
