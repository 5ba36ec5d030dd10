"""The closed-form law for gaps between successive convergents.

With q_k the unreduced convergent denominators, the determinant identity
p_k q_{k-1} - p_{k-1} q_k = (-1)^(k-1) prod(alpha) collapses to

    value(k) - value(k-1) = +- lead * ((k-1)!)^2 * m^(2k-2) / (q_{k-1} q_k)

so the error budget of a truncation can be written down before evaluating
anything.  For the logarithm family every gap is positive (the convergents
climb); for the arctangent family they alternate.
"""

from quadcf import FamilyKind, atan_cf_spec, convergents, difference_closed_form, log_cf_spec


def table(kind, n, msq, depth=8):
    build = log_cf_spec if kind is FamilyKind.LOG_NM else atan_cf_spec
    cf = build(n, msq)
    cs = convergents(cf, depth)
    print(f"{kind.value} family, n={n}, msq={msq}")
    print(f"  {'k':>2} {'closed-form gap':>24} {'actual gap':>24}")
    for k in range(1, depth + 1):
        law = difference_closed_form(k, n, msq, kind)
        actual = cs[k].value - cs[k - 1].value
        mark = "ok" if law == actual else "MISMATCH"
        print(f"  {k:>2} {str(law):>24} {str(actual):>24}  {mark}")
    print()


if __name__ == "__main__":
    table(FamilyKind.LOG_NM, 2, 1)  # the ln 3 fraction
    table(FamilyKind.LOG_NM, 5, 1)  # the ln(3/2) fraction: gaps shrink fast
    table(FamilyKind.ATAN_NM, 1, 1)  # pi/4: alternating gaps
    table(FamilyKind.ATAN_NM, 3, 3)  # pi/(6 sqrt 3), m-stripped
