"""Logarithms as continued fractions.

ln((n+m)/(n-m)) = 2m/(n - m^2/(3n - 4m^2/(5n - 9m^2/(7n - ...))))

Picking n = p+q, m = p-q gives ln(p/q) for any integers p > q >= 1.  The
convergents are exact fractions; the smaller (p-q)/(p+q) is, the faster they
close in on the logarithm.
"""

from fractions import Fraction

from quadcf import auto_terms, convergents, eval_backward, ln_ref, log_of_fraction


def show(p, q, depth):
    cf = log_of_fraction(p, q)
    truth = ln_ref(Fraction(p, q), 192)
    print(f"ln({p}/{q})  [n = {p + q}, m = {p - q}]")
    for c in convergents(cf, depth)[1:]:
        err = abs(float(c.value) - float(truth))
        frac = f"{c.p}/{c.q}"
        print(f"  {c.k} terms: {frac:>18} = {float(c.value):.10f}   off by {err:.2e}")
    print(f"  series value         = {float(truth):.10f}\n")


if __name__ == "__main__":
    # ln 2 converges sedately: the fraction is 2/(3 - 1/(9 - 4/(15 - ...)))
    show(2, 1, 5)

    # ln(3/2) converges much faster (m/n = 1/5)
    show(3, 2, 5)

    # ln 10 through the same machinery
    show(10, 1, 8)

    # how many terms buy a given accuracy (a-priori, from the difference law)
    for tol in (Fraction(1, 10**6), Fraction(1, 10**12), Fraction(1, 10**24)):
        cf = log_of_fraction(3, 2)
        k = auto_terms(cf, tol)
        got = eval_backward(cf, k, 128)
        err = abs(got.to_fraction() - ln_ref(Fraction(3, 2), 192).to_fraction())
        print(f"tol {float(tol):.0e}: {k:>3} terms suffice (actual error {float(err):.2e})")
