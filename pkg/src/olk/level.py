"""Level functions of decreasing data relative to a decreasing weight.

For decreasing step data h and weight w, the level function h0 replaces h on
each maximal "level interval" by a constant multiple of w: on such an
interval (a, b) the ratio

    R(a, b) = integral of h over (a, b) / integral of w over (a, b)

dominates every proper prefix ratio R(a, t), and h0 = R(a, b) * w there.
Outside the maximal intervals h0 = h.  The profile h0 / w is nonincreasing
and each interval preserves the h-mass.

The decomposition is computed with a pool-adjacent-violators sweep: atoms are
split at weight breakpoints so every piece carries a single (value, level)
pair, pieces are pushed left to right, and a new piece is merged into its
predecessor while the predecessor's ratio does not exceed the newcomer's
(ties merge).  Ratio comparisons cross-multiply the masses, so data with
exactly representable products compares exactly.

The sequence variant replaces integrals by sums over index blocks (a, b] =
{a + 1, ..., b}.
"""

import bisect
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .rearrange import (FiniteSequence, SequenceWeight, StepFunction, Weight)

__all__ = ["LevelInterval", "LevelDecomposition", "level_function",
           "level_sequence", "evaluate_level"]


@dataclass(frozen=True)
class LevelInterval:
    """One maximal level interval; sequence intervals cover (lower, upper]."""

    lower: float
    upper: float
    ratio: float
    h_mass: float
    w_mass: float


@dataclass(frozen=True)
class LevelDecomposition:
    intervals: tuple
    setting: str            # "function" or "sequence"
    support_end: float      # h and h0 vanish beyond this point
    source: object
    weight: object

    @property
    def ratios(self):
        return tuple(block.ratio for block in self.intervals)

    def value(self, t):
        return evaluate_level(self, t)


def _require_canonical(h):
    if not h.is_canonical:
        raise DomainError(
            "input must be in canonical decreasing form; rearrange first")


def _merge_blocks(blocks):
    """PAVA sweep over (h_mass, w_mass, lower, upper) tuples."""
    stack = []
    for block in blocks:
        h_new, w_new, lo_new, up_new = block
        while stack:
            h_top, w_top, lo_top, _ = stack[-1]
            # merge while ratio(top) <= ratio(new), compared exactly via
            # cross-multiplication
            if h_top * w_new <= h_new * w_top:
                stack.pop()
                h_new += h_top
                w_new += w_top
                lo_new = lo_top
            else:
                break
        stack.append((h_new, w_new, lo_new, up_new))
    return stack


def level_function(h, w):
    """Level decomposition of a canonical step function against a weight."""
    if not isinstance(h, StepFunction) or not isinstance(w, Weight):
        raise DomainError("expected a StepFunction and a function weight")
    _require_canonical(h)
    total = h.total_measure
    if total > w.gamma:
        raise DomainError("element support exceeds the weight domain")
    # split atom boundaries at weight breakpoints so each piece has a single
    # value and a single weight level
    cuts = [0.0]
    for _, measure in h.atoms:
        cuts.append(cuts[-1] + measure)
    boundaries = sorted(set(cuts) | {b for b in w.breakpoints() if b < total})
    values = []
    for left, right in zip(boundaries, boundaries[1:]):
        mid = 0.5 * (left + right)
        pos = bisect.bisect_right(cuts, mid) - 1
        values.append(h.atoms[pos][0])
    w_cum = w.cumulative(np.asarray(boundaries))
    blocks = []
    for k, (left, right) in enumerate(zip(boundaries, boundaries[1:])):
        h_mass = values[k] * (right - left)
        w_mass = float(w_cum[k + 1] - w_cum[k])
        blocks.append((h_mass, w_mass, left, right))
    merged = _merge_blocks(blocks)
    intervals = tuple(
        LevelInterval(lo, up, hm / wm, hm, wm)
        for hm, wm, lo, up in merged if hm > 0.0)
    return LevelDecomposition(intervals, "function", total, h, w)


def level_sequence(h, w):
    """Level decomposition of a canonical finite sequence against a weight."""
    if not isinstance(h, FiniteSequence) or not isinstance(w, SequenceWeight):
        raise DomainError("expected a FiniteSequence and a sequence weight")
    _require_canonical(h)
    n = len(h.entries)
    weights = w.head(n)
    blocks = [(h.entries[i], float(weights[i]), i, i + 1) for i in range(n)]
    merged = _merge_blocks(blocks)
    intervals = tuple(
        LevelInterval(lo, up, hm / wm, hm, wm)
        for hm, wm, lo, up in merged if hm > 0.0)
    return LevelDecomposition(intervals, "sequence", n, h, w)


def evaluate_level(dec, t):
    """h0 at a point of the domain; zero beyond the support."""
    if dec.setting == "function":
        gamma = dec.weight.gamma
        if not (0.0 <= t < gamma):
            raise DomainError("argument outside [0, gamma)")
        for block in dec.intervals:
            if block.lower <= t < block.upper:
                return block.ratio * dec.weight.value(t)
        return 0.0
    index = int(t)
    if index != t or index < 1:
        raise DomainError("sequence positions are integers >= 1")
    for block in dec.intervals:
        if block.lower < index <= block.upper:
            return block.ratio * dec.weight.value(index)
    return 0.0
