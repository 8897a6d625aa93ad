"""Level functions: the concave-majorant smoothing behind the dual modular.

Shows how a decreasing step function is replaced, on maximal "level"
intervals, by constant multiples of the weight — the slopes of the least
concave majorant of cumulative mass against cumulative weight — and checks
the structural facts that make the construction work: mass preservation,
a globally decreasing result, and idempotence.

Run:  python demos/level_functions.py
"""

import math

import olk


def main():
    # Two atoms against a two-level weight: a single merged interval appears.
    h = olk.StepFunction(((4.0, 1.0), (3.0, 1.0)))
    w = olk.StepWeight(((1.0, 4.0), (math.inf, 1.0)))

    print("h* = 4 on (0,1), 3 on (1,2);  w = 4 on (0,1), 1 afterwards")
    dec = olk.level_function(h, w)
    for iv in dec.intervals:
        print(f"  level interval ({iv.lower:g}, {iv.upper:g}): "
              f"ratio {iv.ratio:.6f}, h-mass {iv.h_mass:g}, "
              f"w-mass {iv.w_mass:g}")
    print("  On each interval the level element equals ratio * w(t):")
    for t in (0.5, 1.5):
        print(f"    t = {t}: h0(t) = {olk.evaluate_level(dec, t):.6f}")
    print()

    # A case that genuinely needs merging: increasing ratios must be pooled.
    h2 = olk.StepFunction(((1.0, 2.0),))   # h* = 1 on (0, 2)
    w2 = olk.StepWeight(((1.0, 2.0), (math.inf, 1.0)))
    print("h* = 1 on (0,2);  w = 2 on (0,1), 1 afterwards")
    dec2 = olk.level_function(h2, w2)
    for iv in dec2.intervals:
        print(f"  level interval ({iv.lower:g}, {iv.upper:g}): "
              f"ratio {iv.ratio:.6f} = h-mass {iv.h_mass:g} "
              f"/ w-mass {iv.w_mass:g}")
    print()

    # Structural checks.
    print("Mass preservation: on each interval, h-mass = ratio * w-mass")
    for iv in dec2.intervals:
        print(f"  {iv.h_mass:g} = {iv.ratio:.6f} * {iv.w_mass:g}")
    print()

    print("The level element is globally decreasing:")
    ts = [0.25, 0.75, 1.25, 1.75, 1.95]
    vals = [olk.evaluate_level(dec2, t) for t in ts]
    print("  t:   ", "  ".join(f"{t:6.2f}" for t in ts))
    print("  h0:  ", "  ".join(f"{v:6.3f}" for v in vals))
    assert all(a >= b - 1e-12 for a, b in zip(vals, vals[1:]))
    print()

    # Sequence version: weights (2, 1), values (1, 1) pool into one block.
    x = olk.FiniteSequence((1.0, 1.0))
    wseq = olk.ExplicitSeqWeight((2.0, 1.0))
    blocks = olk.level_sequence(x, wseq)
    print("Sequence version: x = (1,1), w = (2,1)")
    for blk in blocks.intervals:
        print(f"  block [{int(blk.lower)}..{int(blk.upper)}): "
              f"ratio {blk.ratio:.6f}  (2/3 expected)")
    print()

    print("Idempotence: applying the construction to its own output "
          "changes nothing.")
    # The level element is ratio * w(t), so it steps wherever w does: here
    # 4/3 on (0,1) and 2/3 on (1,2).  Feed that back in.
    h0 = olk.StepFunction(((4.0 / 3.0, 1.0), (2.0 / 3.0, 1.0)))
    again = olk.level_function(h0, w2)
    for t in (0.5, 1.5):
        print(f"  t = {t}: {olk.evaluate_level(dec2, t):.9f} -> "
              f"{olk.evaluate_level(again, t):.9f}")
    assert all(
        abs(olk.evaluate_level(dec2, t) - olk.evaluate_level(again, t))
        <= 1e-12 for t in (0.25, 0.75, 1.25, 1.75))


if __name__ == "__main__":
    main()
