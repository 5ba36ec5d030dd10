"""The integral family I_n = integral of x^n/sqrt(a^2 - 2bx + cx^2) dx.

Everything reduces to I_0: the three-term relation

    n a^2 I_{n-1} = (2n+1) b I_n - (n+1) c I_{n+1}

pushes powers down, and iterating it upward turns the ratio of consecutive
integrals into a continued fraction.  At the radicand root the boundary terms
vanish and each I_n collapses to (exact rational)*delta - (exact rational),
where delta is a logarithm when c > 0 and an arctangent when c < 0.
"""

from fractions import Fraction

from quadcf import (
    AT_ROOT,
    QuadraticForm,
    coeffs,
    completed_cf_value,
    delta,
    eval_backward,
    integral_at_root,
    integral_to,
    quad_integral,
    ratio_cf_spec,
    roots,
)


def tour(a, b, c):
    form = QuadraticForm(Fraction(a), Fraction(b), Fraction(c))
    print(f"form a={a}, b={b}, c={c}   ({form.case.value} case)")
    xs, xo = roots(form)
    print(f"  radicand roots: x* = {float(xs):.12f}, companion {float(xo):.6f}")
    d = delta(form)
    print(f"  delta = I_0(x*) = {d}")

    print("  closed forms I_n(x*) = N*delta - K:")
    for n in range(5):
        cf = coeffs(n, form)
        val = integral_at_root(n, form)
        print(f"    n={n}: N = {cf.delta_coeff!s:>12}  K = {cf.constant!s:>10}   I = {float(val):.12e}")

    # cross-check the n=3 value against blind quadrature
    q = quad_integral(3, form, AT_ROOT, Fraction(1, 10**25))
    v = integral_at_root(3, form, 160)
    print(f"  quadrature check (n=3): closed {float(v):.15e}")
    print(f"                          oracle {float(q.value):.15e}  (est err {float(q.est_error):.1e})")

    # an interior upper limit
    x = xs.to_fraction() / 2
    v = integral_to(2, form, x, 160)
    q = quad_integral(2, form, x, Fraction(1, 10**25))
    print(f"  I_2 to x*/2: closed {float(v):.15e}, oracle {float(q.value):.15e}")

    # the fraction the reduction generates: n a^2 I_{n-1}/I_n ...
    got = eval_backward(ratio_cf_spec(1, form), 150, 128)
    want = form.a**2 * integral_at_root(0, form, 160) / integral_at_root(1, form, 160)
    print(f"  ratio fraction (n=1): {float(got):.15f} vs integrals {float(want):.15f}")

    # ... and, completed by one head term, a/delta itself
    got = completed_cf_value(form, 150)
    print(f"  completed fraction:   {float(got):.15f} vs a/delta   {float(form.a / d):.15f}")
    print()


if __name__ == "__main__":
    tour(1, 2, 1)  # logarithmic case: delta = (1/2) ln 3
    tour(1, 1, -1)  # trigonometric case: delta = pi/4
