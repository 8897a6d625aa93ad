"""Shared test helpers: deterministic dyadic-rational generators and the
acceptance summary hook.

All random data is drawn from seeded ``numpy.random.Generator`` instances
and snapped to multiples of 1/16 so that layout comparisons inside the
library (atom merging, level-interval cuts) are exact in binary floating
point.
"""

import math

import numpy as np
import pytest

import olk

# ---------------------------------------------------------------------------
# deterministic generators


def dyadic(rng, lo, hi, size=None):
    """Dyadic rationals (multiples of 1/16) in [lo, hi]."""
    lo16 = int(math.ceil(lo * 16))
    hi16 = int(math.floor(hi * 16))
    return rng.integers(lo16, hi16 + 1, size=size) / 16.0


def rand_phi(rng, families=("power", "exp", "log")):
    pick = families[int(rng.integers(0, len(families)))]
    if pick == "power":
        r = float(rng.choice([1.5, 2.0, 2.5, 3.0]))
        return olk.PowerOrlicz(r, float(dyadic(rng, 0.25, 2.0)))
    if pick == "exp":
        return olk.ExpOrlicz()
    if pick == "log":
        return olk.LogOrlicz()
    raise ValueError(pick)


def rand_step(rng, max_atoms=5, max_value=6.0):
    n = int(rng.integers(1, max_atoms + 1))
    vals = dyadic(rng, 1 / 16, max_value, n)
    lens = dyadic(rng, 1 / 16, 2.0, n)
    return olk.StepFunction(tuple((float(v), float(l))
                                  for v, l in zip(vals, lens)))


def rand_seq(rng, max_len=6, max_value=6.0):
    n = int(rng.integers(1, max_len + 1))
    vals = dyadic(rng, 1 / 16, max_value, n)
    return olk.FiniteSequence(tuple(float(v) for v in vals))


def rand_step_weight(rng, max_pieces=3):
    n = int(rng.integers(1, max_pieces + 1))
    lengths = dyadic(rng, 0.25, 2.0, n)
    levels = np.sort(dyadic(rng, 0.25, 3.0, n))[::-1]
    pieces = tuple((float(t), float(l)) for t, l in zip(lengths, levels))
    return olk.StepWeight(pieces + ((math.inf, float(levels[-1] / 2)),))


def rand_seq_weight(rng):
    pick = int(rng.integers(0, 4))
    if pick == 0:
        return olk.ConstantSeqWeight(float(dyadic(rng, 0.25, 2.0)))
    if pick == 1:
        return olk.HarmonicSeqWeight()
    if pick == 2:
        return olk.PowerSeqWeight(float(rng.choice([0.25, 0.5, 0.75])))
    head = np.maximum.accumulate(dyadic(rng, 0.25, 2.0, 3)[::-1])[::-1]
    return olk.ExplicitSeqWeight(tuple(float(x) for x in head))


def rand_decreasing_seq(rng, n, lo=0.1, hi=4.0):
    """Nonincreasing dyadic vector, bounded away from zero."""
    vals = np.sort(dyadic(rng, lo, hi, n))[::-1]
    return tuple(float(v) for v in vals)


# ---------------------------------------------------------------------------
# acceptance summary plumbing

ACCEPTANCE_LINES = []


def record_acceptance(number, label, passed, detail):
    status = "PASS" if passed else "FAIL"
    line = f"[criterion {number}] {label}: {status} ({detail})"
    ACCEPTANCE_LINES.append((number, line))
    print(line)
    return line


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(line)


# ---------------------------------------------------------------------------
# shared fixtures


@pytest.fixture
def quad_phi():
    """phi(t) = t^2 / 2, self-conjugate."""
    return olk.PowerOrlicz(2.0, 0.5)


@pytest.fixture
def lebesgue_weight():
    """w = 1 on the half line."""
    return olk.StepWeight(((math.inf, 1.0),))


@pytest.fixture
def finite_lebesgue_weight():
    """w = 1 on [0, 10)."""
    return olk.StepWeight(((10.0, 1.0),))
