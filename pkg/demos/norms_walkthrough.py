"""Walk through the two norms on a weighted rearrangement-invariant space.

Builds a space from a quadratic Orlicz function and the constant weight,
computes the modular, the gauge (Luxemburg) norm, and the Amemiya form of
the Orlicz norm, then shows the sandwich inequality, the unit-ball property,
and the interval of minimizing scale factors.

Run:  python demos/norms_walkthrough.py
"""

import math

import olk


def main():
    phi = olk.PowerOrlicz(2.0, 0.5)           # phi(t) = t^2 / 2
    w = olk.StepWeight(((math.inf, 1.0),))    # w = 1 on [0, inf)
    f = olk.StepFunction(((1.0, 1.0),))       # indicator of a unit interval

    print("Space: phi(t) = t^2/2, weight w = 1, function setting")
    print("Element: indicator of an interval of measure 1")
    print()

    rho = olk.rho_modular(phi, w, f)
    lux = olk.luxemburg_norm(phi, w, f)
    orl = olk.orlicz_norm_amemiya(phi, w, f)
    print(f"modular rho(f)          = {rho:.12f}   (phi(1) * 1 = 1/2)")
    print(f"gauge norm  ||f||       = {lux:.12f}   (= 1/sqrt(2))")
    print(f"Amemiya norm ||f||^0    = {orl:.12f}   (= sqrt(2))")
    print()

    print("Sandwich: ||f|| <= ||f||^0 <= 2 ||f||")
    print(f"  {lux:.6f} <= {orl:.6f} <= {2 * lux:.6f}")
    print()

    unit = olk.rho_modular(phi, w, f.scaled(1.0 / lux))
    print(f"Unit-ball property: rho(f / ||f||) = {unit:.12f}  (<= 1)")
    print()

    ki = olk.k_interval(phi, w, f)
    print("Scale factors minimizing (1 + rho(k f)) / k:")
    print(f"  k* = {ki.lower:.12f}, k** = {ki.upper:.12f}")
    for k in (ki.lower, 0.5 * (ki.lower + ki.upper), ki.upper):
        val = (1.0 + olk.rho_modular(phi, w, f.scaled(k))) / k
        print(f"  (1 + rho({k:.6f} f)) / {k:.6f} = {val:.12f}")
    print()

    pairing = olk.amemiya_pairing_report(phi, w, f)
    print("Pairing view of the Amemiya norm (holds with equality here):")
    for key, val in pairing.items():
        print(f"  {key:24s} = {val:.12f}")

    print()
    print("The same machinery covers sequences:")
    x = olk.FiniteSequence((3.0, 1.0, 2.0))
    wseq = olk.HarmonicSeqWeight()            # w_n = 1/n
    print(f"  x = (3, 1, 2), w_n = 1/n")
    print(f"  gauge norm   = {olk.luxemburg_norm(phi, wseq, x):.12f}")
    print(f"  Amemiya norm = {olk.orlicz_norm_amemiya(phi, wseq, x):.12f}")


if __name__ == "__main__":
    main()
