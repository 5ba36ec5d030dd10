"""Independent high-precision quadrature of the integral family.

This module never touches the closed forms or continued fractions: it
evaluates  integral of x^n / sqrt(a^2 - 2bx + c x^2)  numerically, so that
every formula elsewhere in the package can be cross-checked against it.

The integrand has an inverse-square-root singularity at the radicand root
x*.  For upper limits at (or rationally equal to) the root, the substitution

    x = x* (1 - u^2),    dx = -2 x* u du

is applied first.  Factoring the radicand as (x* - x) * (b + sqrt(disc) - cx)
shows the transformed integrand

    2 x* (x*(1-u^2))^n / sqrt(x* * (b + sqrt(disc) - c x))

is smooth on [0, 1]: the substitution removes the singularity exactly.
Interior upper limits are integrated directly (their integrand is smooth).

The kernel is doubling-level tanh-sinh quadrature on mpfr scalars; the error
estimate is the difference between the last two refinement levels with a x4
safety factor, and a result is returned only once that estimate meets the
requested tolerance.  Evaluation is strictly sequential with a fixed
summation order, so identical inputs give bit-identical results.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import gmpy2
from gmpy2 import mpfr, mpq

from .errors import ConvergenceError, DomainError
from .integrals import AtRoot, Case, QuadraticForm, radicand
from .numerics import DEFAULT_PREC, HPFloat

__all__ = ["QuadratureResult", "quad_integral"]


@dataclass(frozen=True)
class QuadratureResult:
    """Value, error estimate, and integrand-evaluation count of one quadrature."""

    value: HPFloat
    est_error: HPFloat
    evaluations: int


def _tol_to_fraction(tol) -> Fraction:
    if isinstance(tol, HPFloat):
        out = tol.to_fraction()
    elif isinstance(tol, (int, Fraction)):
        out = Fraction(tol)
    elif isinstance(tol, float):
        out = Fraction(tol)
    elif isinstance(tol, str):
        out = Fraction(tol)
    else:
        raise DomainError(f"unsupported tolerance type: {type(tol).__name__}")
    if out <= 0:
        raise DomainError(f"tolerance must be positive, got {tol}")
    return out


def _bits_for(tol: Fraction) -> int:
    if tol >= 1:
        return 1
    return (tol.denominator // tol.numerator).bit_length() + 1


def _tanh_sinh(f, lo, hi, tol, work, max_level):
    """Tanh-sinh quadrature of ``f`` over [lo, hi] at ``work`` bits.

    Returns (sum, est_error, evaluations).  ``f`` must be smooth and bounded
    on the closed interval.  Refinement halves the mesh until the x4-padded
    difference of consecutive levels drops below ``tol``.
    """
    half = (hi - lo) / 2
    mid = (hi + lo) / 2
    pi_half = gmpy2.const_pi() / 2
    # Nodes with weight below this contribute nothing at working precision.
    weight_floor = mpfr(2) ** (-(work + 16))
    evaluations = 0

    def node_sum(h, step_only_odd):
        """Sum of w(t)*f(x(t)) over the mesh t = k*h (odd k only on refinement)."""
        nonlocal evaluations
        total = mpfr(0)
        k = 1 if step_only_odd else 0
        step = 2 if step_only_odd else 1
        while True:
            t = k * h
            sh = gmpy2.sinh(t)
            ch = gmpy2.cosh(t)
            arg = pi_half * sh
            sech = 1 / gmpy2.cosh(arg)
            weight = pi_half * ch * sech * sech
            if weight < weight_floor and k > 2 / h:
                break
            u = gmpy2.tanh(arg)
            x_pos = mid + half * u
            x_neg = mid - half * u
            if k == 0:
                total += weight * f(x_pos)
                evaluations += 1
            else:
                total += weight * (f(x_pos) + f(x_neg))
                evaluations += 2
            k += step
        return total

    h = mpfr(1)
    level_sum = node_sum(h, step_only_odd=False)
    value = half * h * level_sum
    prev_value = None
    est = None
    for _ in range(max_level):
        h = h / 2
        level_sum = level_sum + node_sum(h, step_only_odd=True)
        prev_value, value = value, half * h * level_sum
        est = 4 * abs(value - prev_value)
        if est <= tol:
            return value, est, evaluations
    raise ConvergenceError(
        f"tanh-sinh did not reach tolerance {tol} within {max_level} levels "
        f"(last estimate {est})",
        best=QuadratureResult(
            value=HPFloat(value, value.precision),
            est_error=HPFloat(est, est.precision),
            evaluations=evaluations,
        ),
    )


def quad_integral(
    n: int,
    form: QuadraticForm,
    upper,
    tol,
    *,
    max_level: int = 14,
    force_substitution: bool = False,
) -> QuadratureResult:
    """Adaptive quadrature of x^n / sqrt(a^2 - 2bx + cx^2) from 0 to ``upper``.

    ``upper`` is a rational in [0, x*] or the sentinel ``AT_ROOT``.  The
    returned value satisfies |value - integral| <= est_error <= tol; if the
    estimate cannot be pushed below ``tol`` a :class:`ConvergenceError`
    carrying the best estimate is raised.  ``force_substitution`` routes
    interior upper limits through the root substitution as well (used to
    cross-check the substitution itself).
    """
    if n < 0:
        raise DomainError(f"exponent must be >= 0, got {n}")
    tol_f = _tol_to_fraction(tol)
    work = max(DEFAULT_PREC, _bits_for(tol_f) + 96)

    at_root = isinstance(upper, AtRoot)
    x_up = None
    if not at_root:
        if isinstance(upper, int):
            upper = Fraction(upper)
        if not isinstance(upper, Fraction):
            raise DomainError(
                f"upper limit must be an exact rational or AT_ROOT, got {upper!r}"
            )
        x_up = upper
        if x_up < 0:
            raise DomainError(f"upper limit must be >= 0, got {x_up}")
        rad_up = radicand(form, x_up)
        if rad_up < 0 or (form.case is Case.LOG and x_up > form.b / form.c):
            raise DomainError(f"upper limit {x_up} lies beyond the radicand root")
        if x_up == 0:
            zero = HPFloat(0, DEFAULT_PREC)
            return QuadratureResult(value=zero, est_error=zero, evaluations=0)
        if rad_up == 0:
            at_root = True  # rational root: the singular path applies

    with gmpy2.context(precision=work):
        tol_m = mpfr(mpq(tol_f))
        a2 = mpq(form.a**2)
        two_b = mpq(2 * form.b)
        c = mpq(form.c)

        if at_root or force_substitution:
            if at_root and x_up is None:
                sd = gmpy2.sqrt(mpfr(mpq(form.disc)))
                xs = mpfr(a2) / (mpq(form.b) + sd)
            else:
                xs = mpfr(mpq(x_up))

            if at_root:
                # Radicand factored as (xs - x) * lin(x), lin = b + sqrt(disc) - c*x.
                sd = gmpy2.sqrt(mpfr(mpq(form.disc)))
                b_plus_sd = mpq(form.b) + sd

                def g(u):
                    x = xs * (1 - u * u)
                    lin = b_plus_sd - c * x
                    return 2 * xs * x**n / gmpy2.sqrt(xs * lin)

            else:

                def g(u):
                    x = xs * (1 - u * u)
                    rad = a2 - two_b * x + c * x * x
                    return 2 * xs * u * x**n / gmpy2.sqrt(rad)

            value, est, evals = _tanh_sinh(g, mpfr(0), mpfr(1), tol_m, work, max_level)
        else:

            def f(x):
                rad = a2 - two_b * x + c * x * x
                return x**n / gmpy2.sqrt(rad)

            value, est, evals = _tanh_sinh(
                f, mpfr(0), mpfr(mpq(x_up)), tol_m, work, max_level
            )

    return QuadratureResult(
        value=HPFloat(value, work),
        est_error=HPFloat(est, work),
        evaluations=evals,
    )
