"""Tests for the tanh-sinh quadrature oracle."""

import random
from fractions import Fraction
from concurrent.futures import ThreadPoolExecutor

import pytest

from quadcf import (
    AT_ROOT,
    Case,
    ConvergenceError,
    DomainError,
    QuadraticForm,
    delta,
    integral_at_root,
    pi_ref,
    quad_integral,
    roots,
)

LOG_FORM = QuadraticForm(1, 2, 1)
TRIG_FORM = QuadraticForm(1, 1, -1)


def test_zero_upper_limit():
    r = quad_integral(0, LOG_FORM, Fraction(0), Fraction(1, 10**10))
    assert r.value == 0
    assert r.est_error == 0
    assert r.evaluations == 0


def test_quarter_pi_to_twenty_digits():
    tol = Fraction(1, 10**20)
    r = quad_integral(0, TRIG_FORM, AT_ROOT, tol)
    want = (pi_ref(256) / 4).to_fraction()
    assert abs(r.value.to_fraction() - want) <= tol
    assert r.est_error.to_fraction() <= tol
    assert r.est_error >= 0


def test_first_moment_against_closed_form():
    tol = Fraction(1, 10**15)
    r = quad_integral(1, LOG_FORM, AT_ROOT, tol)
    want = integral_at_root(1, LOG_FORM, 256).to_fraction()  # 2*delta - 1
    assert abs(r.value.to_fraction() - want) <= tol


def test_rational_root_upper_limit_uses_singular_path():
    form = QuadraticForm(3, 5, 1)  # x* = 1
    tol = Fraction(1, 10**15)
    r = quad_integral(0, form, Fraction(1), tol)
    want = delta(form, 256).to_fraction()
    assert abs(r.value.to_fraction() - want) <= tol


def test_substitution_correctness_on_interior_limits():
    rng = random.Random(11)
    for form in (LOG_FORM, TRIG_FORM, QuadraticForm(2, 3, Fraction(5, 4))):
        xs = roots(form, 128)[0].to_fraction()
        for _ in range(3):
            x = xs * Fraction(rng.randint(1, 9), 10)
            tol = Fraction(1, 10**15)
            plain = quad_integral(2, form, x, tol)
            subst = quad_integral(2, form, x, tol, force_substitution=True)
            bound = 2 * (plain.est_error.to_fraction() + subst.est_error.to_fraction())
            assert abs(plain.value.to_fraction() - subst.value.to_fraction()) <= bound


def test_tolerance_honesty():
    rng = random.Random(606)
    for _ in range(20):
        case = rng.choice([Case.LOG, Case.TRIG])
        a = Fraction(rng.randint(1, 5))
        b = Fraction(rng.randint(1, 8))
        if case is Case.LOG:
            c = Fraction(rng.randint(1, 5))
            if b**2 <= a**2 * c:
                c = Fraction(1, 1 + (a * a * 4 // (b * b + 1)))
                if b**2 <= a**2 * c:
                    continue
        else:
            c = Fraction(-rng.randint(1, 5))
        form = QuadraticForm(a, b, c)
        n = rng.randint(0, 5)
        upper = AT_ROOT if rng.random() < 0.5 else roots(form, 128)[0].to_fraction() * Fraction(2, 3)
        tol = Fraction(1, 10**12)
        r1 = quad_integral(n, form, upper, tol)
        r2 = quad_integral(n, form, upper, tol / 2)
        assert abs(r1.value.to_fraction() - r2.value.to_fraction()) <= r1.est_error.to_fraction()


def test_determinism_across_threads():
    tol = Fraction(1, 10**18)

    def run(_):
        return quad_integral(3, TRIG_FORM, AT_ROOT, tol).value.to_fraction()

    sequential = run(None)
    with ThreadPoolExecutor(max_workers=4) as pool:
        results = list(pool.map(run, range(4)))
    assert all(r == sequential for r in results)


def test_unreachable_tolerance_raises_with_best():
    with pytest.raises(ConvergenceError) as err:
        quad_integral(0, TRIG_FORM, AT_ROOT, Fraction(1, 10**18), max_level=1)
    best = err.value.best
    assert best is not None
    assert best.est_error.to_fraction() > Fraction(1, 10**18)
    # the coarse value is still in the right neighbourhood
    assert abs(float(best.value) - 0.785398) < 2e-2


def test_domain_validation():
    with pytest.raises(DomainError):
        quad_integral(-1, LOG_FORM, AT_ROOT, Fraction(1, 10**10))
    with pytest.raises(DomainError):
        quad_integral(0, LOG_FORM, Fraction(-1), Fraction(1, 10**10))
    with pytest.raises(DomainError):
        quad_integral(0, LOG_FORM, Fraction(1), Fraction(1, 10**10))  # beyond x*
    with pytest.raises(DomainError):
        quad_integral(0, LOG_FORM, AT_ROOT, Fraction(0))
    with pytest.raises(DomainError):
        quad_integral(0, LOG_FORM, 0.25, Fraction(1, 10**10))  # silent floats rejected
