"""Four roads from arctangent fractions to pi.

arctan(m/n) = m/(n + m^2/(3n + 4m^2/(5n + 9m^2/(7n + ...))))
"""

from fractions import Fraction

from quadcf import (
    atan_cf_spec,
    brouncker_cf_spec,
    convergents,
    eval_backward,
    pi_cf,
    pi_ref,
)

TRUTH = pi_ref(192)


def report(label, estimate):
    err = abs(float(estimate.value.to_fraction() - TRUTH.to_fraction()))
    print(f"{label:<14} depth {estimate.depth:>6}:  {estimate.value!s:.20}...  off by {err:.2e}")


if __name__ == "__main__":
    # pi/4 = arctan(1): the slowest road, worth seeing term by term
    print("arctan(1) convergents (4x each approximates pi):")
    for c in convergents(atan_cf_spec(1, 1), 6)[1:]:
        print(f"  {c.k}: {c.p}/{c.q} -> {4 * float(c.value):.6f}")
    print()

    report("atan(1)", pi_cf("atan11", tol=Fraction(1, 10**15)))

    # arctan(sqrt(3)/3) = pi/6: the fraction is built for the m-stripped value,
    # so its convergents stay rational; sqrt(3) enters only at evaluation
    report("sqrt3", pi_cf("sqrt3", tol=Fraction(1, 10**15)))

    # splitting the right angle: arctan(1/2) + arctan(1/3) = pi/4
    report("machin-split", pi_cf("machin-split", tol=Fraction(1, 10**15)))

    # Brouncker's fraction 1/(2 + 9/(2 + 25/(2 + ...))) resembles the
    # arctan(1) fraction; numerically its limit is 4/pi - 1, but it converges
    # like ~0.4/depth, so it is a curiosity rather than an algorithm
    report("brouncker", pi_cf("brouncker", depth=4000))
    v = eval_backward(brouncker_cf_spec(), 4000, 128)
    print(f"\nbrouncker value itself: {float(v):.8f}  vs  4/pi - 1 = "
          f"{float(4 / TRUTH - 1):.8f}")
