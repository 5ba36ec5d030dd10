"""The integral family  I_n(X) = integral of x^n / sqrt(a^2 - 2bx + c x^2) dx from 0 to X.

A :class:`QuadraticForm` is the rational triple (a, b, c) with a, b > 0 and
c != 0.  The sign of c splits the family into two cases:

* ``LOG``  (c > 0): the closed forms are logarithms; validity needs
  b^2 > a^2 c, otherwise the radicand has no real root (or the value
  degenerates when b^2 == a^2 c).
* ``TRIG`` (c < 0, write c = -g^2): the closed forms are arctangents.

``x*`` denotes the smallest positive root of the radicand; the radicand is
positive on [0, x*).  ``delta`` is I_0 evaluated at x*, ``big_pi`` is I_0 at a
general upper limit in [0, x*].  ``coeffs`` produces the exact rationals
(N, K) with  I_n(x*) = N*delta - K  via the three-term reduction

    n a^2 I_{n-1} = (2n+1) b I_n  -  (n+1) c I_{n+1}   (at the root)

and ``integral_to`` runs the same reduction with the boundary term
``x^n * sqrt(radicand)`` restored for interior upper limits.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Union

from .errors import DomainError
from .numerics import DEFAULT_PREC, HPFloat, atan_ref, ln_ref, pi_ref, sqrt_hp

__all__ = [
    "Case",
    "QuadraticForm",
    "ClosedFormCoeffs",
    "AtRoot",
    "AT_ROOT",
    "IntegralSpec",
    "radicand",
    "roots",
    "delta",
    "big_pi",
    "coeffs",
    "integral_at_root",
    "integral_to",
]


class Case(Enum):
    LOG = "log"  # c > 0
    TRIG = "trig"  # c < 0


class AtRoot:
    """Sentinel upper limit: integrate up to the radicand's smallest positive root."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "AT_ROOT"


AT_ROOT = AtRoot()

Upper = Union[Fraction, AtRoot]


def _as_fraction(x, name: str) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise DomainError(f"{name} must be an exact rational, got {type(x).__name__}")


@dataclass(frozen=True)
class QuadraticForm:
    """Rational coefficients (a, b, c) of the radicand a^2 - 2bx + c x^2."""

    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", _as_fraction(self.a, "a"))
        object.__setattr__(self, "b", _as_fraction(self.b, "b"))
        object.__setattr__(self, "c", _as_fraction(self.c, "c"))
        if self.a <= 0:
            raise DomainError(f"a must be positive, got {self.a}")
        if self.b <= 0:
            raise DomainError(f"b must be positive, got {self.b}")
        if self.c == 0:
            raise DomainError("c must be nonzero (the radicand must be quadratic)")
        if self.c > 0:
            disc = self.b**2 - self.a**2 * self.c
            if disc == 0:
                raise DomainError(
                    "b^2 == a^2*c: the value degenerates to the vanishing "
                    "fraction (see degenerate_cf_spec); not a valid form"
                )
            if disc < 0:
                raise DomainError(
                    "b^2 < a^2*c: the radicand has no real root and the "
                    "closed forms go complex"
                )

    @property
    def case(self) -> Case:
        return Case.LOG if self.c > 0 else Case.TRIG

    @property
    def disc(self) -> Fraction:
        """b^2 - a^2 c; positive for every valid form."""
        return self.b**2 - self.a**2 * self.c


@dataclass(frozen=True)
class ClosedFormCoeffs:
    """Exact rationals of the at-root closed form I_n(x*) = delta_coeff*delta - constant."""

    n: int
    delta_coeff: Fraction
    constant: Fraction


@dataclass(frozen=True)
class IntegralSpec:
    """One member of the family: a form, an exponent, and an upper limit."""

    form: QuadraticForm
    n: int
    upper: Upper

    def __post_init__(self):
        if self.n < 0:
            raise DomainError(f"exponent must be >= 0, got {self.n}")
        if not isinstance(self.upper, AtRoot):
            _check_upper(self.form, _as_fraction(self.upper, "upper"))


def radicand(form: QuadraticForm, x: Fraction) -> Fraction:
    """Exact value of a^2 - 2bx + c x^2 at a rational x."""
    x = _as_fraction(x, "x")
    return form.a**2 - 2 * form.b * x + form.c * x**2


def _check_upper(form: QuadraticForm, x: Fraction) -> Fraction:
    """Validate 0 <= x <= x* using exact arithmetic only."""
    x = _as_fraction(x, "x")
    if x < 0:
        raise DomainError(f"upper limit must be >= 0, got {x}")
    if radicand(form, x) < 0:
        raise DomainError(f"upper limit {x} lies beyond the radicand root")
    if form.case is Case.LOG and x > form.b / form.c:
        # Positive radicand beyond the larger root does not count.
        raise DomainError(f"upper limit {x} lies beyond the radicand root")
    return x


def roots(form: QuadraticForm, prec: int = DEFAULT_PREC) -> tuple[HPFloat, HPFloat]:
    """(x*, other root) of the radicand.

    x* is the smallest positive root in both cases; it is computed in the
    rationalised form a^2 / (b + sqrt(b^2 - a^2 c)), which avoids cancellation.
    The companion root is larger than x* in the LOG case and negative in the
    TRIG case.
    """
    work = prec + 32
    sd = sqrt_hp(form.disc, work)
    xstar = form.a**2 / (form.b + sd)
    xother = (form.b + sd) / form.c
    return HPFloat(xstar, prec), HPFloat(xother, prec)


def delta(form: QuadraticForm, prec: int = DEFAULT_PREC) -> HPFloat:
    """I_0 at the root:  (1/(2f))*ln((b+af)/(b-af)) for c = f^2,
    (1/g)*atan(a g / b) for c = -g^2."""
    work = prec + 32
    if form.case is Case.LOG:
        f = sqrt_hp(form.c, work)
        num = form.b + form.a * f
        den = form.b - form.a * f
        val = ln_ref(num / den, work) / (2 * f)
    else:
        g = sqrt_hp(-form.c, work)
        val = atan_ref(form.a * g / form.b, work) / g
    return HPFloat(val, prec)


def big_pi(form: QuadraticForm, x: Fraction, prec: int = DEFAULT_PREC) -> HPFloat:
    """I_0 at a rational upper limit x in [0, x*]; vanishes at 0, equals
    ``delta`` at the root, and is strictly increasing in between.

    LOG case:   (1/f) * ln((b - c x - f*sqrt(R(x))) / (b - a f))
    TRIG case:  (1/g) * (asin((b - c x)/sqrt(disc)) - asin(b/sqrt(disc)))
                with the arcsines expressed through ``atan_ref`` so that the
                radicand enters exactly.
    """
    x = _check_upper(form, x)
    if x == 0:
        return HPFloat(0, prec)
    work = prec + 32
    rad = radicand(form, x)
    if form.case is Case.LOG:
        f = sqrt_hp(form.c, work)
        num = form.b - form.c * x - f * sqrt_hp(rad, work)
        den = form.b - form.a * f
        val = ln_ref(num / den, work) / f
    else:
        g = sqrt_hp(-form.c, work)
        # asin((b-cx)/sqrt(disc)) == atan((b-cx)/(g*sqrt(R))), and R == 0
        # exactly at a rational root, where the arcsine is pi/2.
        if rad == 0:
            upper_angle = pi_ref(work) / 2
        else:
            upper_angle = atan_ref(
                (form.b - form.c * x) / (g * sqrt_hp(rad, work)), work
            )
        base_angle = atan_ref(form.b / (form.a * g), work)
        val = (upper_angle - base_angle) / g
    return HPFloat(val, prec)


@lru_cache(maxsize=None)
def _coeff_pair(n: int, form: QuadraticForm) -> tuple[Fraction, Fraction]:
    if n == 0:
        return Fraction(1), Fraction(0)
    if n == 1:
        return form.b / form.c, form.a / form.c
    dc_prev2, ct_prev2 = _coeff_pair(n - 2, form)
    dc_prev, ct_prev = _coeff_pair(n - 1, form)
    k = n - 1
    scale = Fraction(1, (k + 1)) / form.c
    dc = ((2 * k + 1) * form.b * dc_prev - k * form.a**2 * dc_prev2) * scale
    ct = ((2 * k + 1) * form.b * ct_prev - k * form.a**2 * ct_prev2) * scale
    return dc, ct


def coeffs(n: int, form: QuadraticForm) -> ClosedFormCoeffs:
    """Exact closed-form coefficients with I_n(x*) = delta_coeff*delta - constant."""
    if n < 0:
        raise DomainError(f"exponent must be >= 0, got {n}")
    dc, ct = _coeff_pair(n, form)
    return ClosedFormCoeffs(n=n, delta_coeff=dc, constant=ct)


def integral_at_root(
    n: int, form: QuadraticForm, prec: int = DEFAULT_PREC
) -> HPFloat:
    """I_n evaluated at the smallest positive radicand root."""
    cf = coeffs(n, form)
    work = prec + 32
    val = cf.delta_coeff * delta(form, work) - cf.constant
    return HPFloat(val, prec)


def integral_to(
    n: int, form: QuadraticForm, x: Fraction, prec: int = DEFAULT_PREC
) -> HPFloat:
    """I_n at a rational upper limit x in [0, x*], by the forward reduction

        I_{k+1} = ((2k+1) b I_k - k a^2 I_{k-1} + x^k sqrt(R(x))) / ((k+1) c)

    seeded with I_0 = big_pi(x) and I_1 = (b*I_0 + sqrt(R(x)) - a)/c.  The
    boundary term vanishes at the root, where this reproduces
    ``integral_at_root``.
    """
    if n < 0:
        raise DomainError(f"exponent must be >= 0, got {n}")
    x = _check_upper(form, x)
    if x == 0:
        return HPFloat(0, prec)
    work = prec + 32
    i_prev = big_pi(form, x, work)
    if n == 0:
        return HPFloat(i_prev, prec)
    root = sqrt_hp(radicand(form, x), work)
    i_cur = (form.b * i_prev + root - form.a) / form.c
    for k in range(1, n):
        boundary = x**k * root
        i_next = (
            (2 * k + 1) * form.b * i_cur - k * form.a**2 * i_prev + boundary
        ) / ((k + 1) * form.c)
        i_prev, i_cur = i_cur, i_next
    return HPFloat(i_cur, prec)
