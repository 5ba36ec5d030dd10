"""Exact rationals, arbitrary-precision floats, and reference transcendentals.

Two scalar carriers are used throughout the package:

* ``Rational`` -- an exact fraction of arbitrary-precision integers.  This is
  the standard-library :class:`fractions.Fraction`, which already maintains
  the canonical form (positive denominator, gcd 1).
* :class:`HPFloat` -- an immutable arbitrary-precision binary float with an
  explicit precision in bits (at least 64, default 128).  Arithmetic between
  two values is carried out at the larger of their precisions, each primitive
  operation correctly rounded (round-to-nearest) via MPFR.

``ln_ref``, ``atan_ref`` and ``pi_ref`` are *reference* evaluators: classical
power series with argument reduction.  They deliberately share no code with
the continued-fraction machinery elsewhere in this package, so they can act
as independent cross-checks for it.  Internally they work with 64 guard bits
and round once at the end; the exported accuracy contract is <= 4 units in
the last place at the requested precision (<= 2 ulp for ``sqrt_hp`` and
``pi_ref``).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

import gmpy2
from gmpy2 import mpfr, mpq, mpz

from .errors import DomainError

__all__ = [
    "Rational",
    "HPFloat",
    "DEFAULT_PREC",
    "MIN_PREC",
    "sqrt_hp",
    "ln_ref",
    "atan_ref",
    "pi_ref",
    "ulp",
    "ulp_distance",
]

Rational = Fraction

DEFAULT_PREC = 128
MIN_PREC = 64
_GUARD = 64

Scalar = Union["HPFloat", int, Fraction]


def _ctx(prec: int):
    return gmpy2.context(precision=prec)


def _to_exact(x) -> mpq:
    """Convert an exact operand (int / Fraction / mpq / mpz) to ``mpq``."""
    if isinstance(x, (int, mpz)):
        return mpq(x)
    if isinstance(x, (Fraction, mpq)):
        return mpq(x)
    raise TypeError(f"not an exact scalar: {type(x).__name__}")


class HPFloat:
    """Immutable binary float with explicit precision in bits.

    ``HPFloat(x, prec)`` rounds ``x`` (an int, Fraction, str, float, mpfr or
    another HPFloat) once to ``prec`` bits.  ``prec`` defaults to 128 and must
    be at least 64.
    """

    __slots__ = ("_v",)

    def __init__(self, value, prec: int | None = None):
        if prec is None:
            if isinstance(value, HPFloat):
                self._v = value._v
                return
            if isinstance(value, mpfr) and value.precision >= MIN_PREC:
                self._v = value
                return
            prec = DEFAULT_PREC
        prec = int(prec)
        if prec < MIN_PREC:
            raise DomainError(f"precision must be >= {MIN_PREC} bits, got {prec}")
        if isinstance(value, HPFloat):
            value = value._v
        elif isinstance(value, Fraction):
            value = mpq(value)
        with _ctx(prec):
            self._v = mpfr(value)

    @property
    def value(self) -> mpfr:
        return self._v

    @property
    def prec_bits(self) -> int:
        return self._v.precision

    def to_fraction(self) -> Fraction:
        """Exact rational value of this float."""
        if not gmpy2.is_finite(self._v):
            raise DomainError("cannot convert a non-finite value to a fraction")
        n, d = self._v.as_integer_ratio()
        return Fraction(int(n), int(d))

    # -- arithmetic ---------------------------------------------------------

    def _binary(self, other, op, swapped=False):
        if isinstance(other, HPFloat):
            prec = max(self.prec_bits, other.prec_bits)
            rhs = other._v
        elif isinstance(other, (int, Fraction, mpq, mpz)):
            prec = self.prec_bits
            rhs = _to_exact(other)
        else:
            return NotImplemented
        a, b = (rhs, self._v) if swapped else (self._v, rhs)
        with _ctx(prec):
            return HPFloat(op(a, b), prec)

    def __add__(self, other):
        return self._binary(other, gmpy2.add)

    __radd__ = __add__

    def __sub__(self, other):
        return self._binary(other, gmpy2.sub)

    def __rsub__(self, other):
        return self._binary(other, gmpy2.sub, swapped=True)

    def __mul__(self, other):
        return self._binary(other, gmpy2.mul)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self._binary(other, gmpy2.div)

    def __rtruediv__(self, other):
        return self._binary(other, gmpy2.div, swapped=True)

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            return NotImplemented
        with _ctx(self.prec_bits):
            return HPFloat(self._v ** exponent, self.prec_bits)

    def __neg__(self):
        # unary ops round at the active context, so pin it to our precision
        with _ctx(self.prec_bits):
            return HPFloat(-self._v, self.prec_bits)

    def __abs__(self):
        with _ctx(self.prec_bits):
            return HPFloat(abs(self._v), self.prec_bits)

    # -- comparisons (exact, precision-independent) --------------------------

    def _cmp_other(self, other):
        if isinstance(other, HPFloat):
            return other._v
        if isinstance(other, (int, Fraction, mpq, mpz)):
            return _to_exact(other)
        return NotImplemented

    def __eq__(self, other):
        rhs = self._cmp_other(other)
        return NotImplemented if rhs is NotImplemented else self._v == rhs

    def __lt__(self, other):
        rhs = self._cmp_other(other)
        return NotImplemented if rhs is NotImplemented else self._v < rhs

    def __le__(self, other):
        rhs = self._cmp_other(other)
        return NotImplemented if rhs is NotImplemented else self._v <= rhs

    def __gt__(self, other):
        rhs = self._cmp_other(other)
        return NotImplemented if rhs is NotImplemented else self._v > rhs

    def __ge__(self, other):
        rhs = self._cmp_other(other)
        return NotImplemented if rhs is NotImplemented else self._v >= rhs

    def __hash__(self):
        return hash(self._v)

    def __float__(self):
        return float(self._v)

    def __format__(self, spec):
        return format(self._v, spec)

    def __repr__(self):
        return f"HPFloat({self._v!r}, prec={self.prec_bits})"

    def __str__(self):
        return str(self._v)


def ulp(x) -> Fraction:
    """Unit in the last place of ``x`` as an exact fraction.

    Zero for x == 0 and for exact (int/Fraction) operands, which carry no
    rounding grain.
    """
    if isinstance(x, (int, Fraction, mpq, mpz)):
        return Fraction(0)
    v = x.value if isinstance(x, HPFloat) else x
    if v == 0:
        return Fraction(0)
    _, exp = v.as_mantissa_exp()
    return Fraction(2) ** int(exp)


def ulp_distance(a, b) -> Fraction:
    """|a - b| measured in ulps of the coarser operand (exact arithmetic).

    Exact operands contribute no grain; comparing two exact values returns 0
    when they are equal and raises otherwise (there is no ulp to scale by).
    """
    fa = a.to_fraction() if isinstance(a, HPFloat) else Fraction(a)
    fb = b.to_fraction() if isinstance(b, HPFloat) else Fraction(b)
    ua = max(ulp(a), ulp(b))
    if ua == 0:
        if fa == fb:
            return Fraction(0)
        raise DomainError("ulp distance of two exact, unequal values is undefined")
    return abs(fa - fb) / ua


def _operand(x: Scalar, prec: int | None):
    """Resolve (exact-or-mpfr operand, output precision) for a unary op."""
    if isinstance(x, HPFloat):
        return x.value, (prec or x.prec_bits)
    if isinstance(x, (int, Fraction, mpq, mpz)):
        return _to_exact(x), (prec or DEFAULT_PREC)
    raise TypeError(f"unsupported operand type: {type(x).__name__}")


def sqrt_hp(x: Scalar, prec: int | None = None) -> HPFloat:
    """Square root, correctly rounded at the operand's precision.

    Raises :class:`DomainError` for negative input.
    """
    v, p = _operand(x, prec)
    if v < 0:
        raise DomainError("square root of a negative value")
    with _ctx(p):
        return HPFloat(gmpy2.sqrt(v), p)


# -- reference transcendentals ------------------------------------------------

_LN2_CACHE: dict[int, mpfr] = {}
_PI_CACHE: dict[int, mpfr] = {}


def _atanh_series(t: mpfr) -> mpfr:
    """atanh(t) = t + t^3/3 + t^5/5 + ... for |t| < 1, at context precision."""
    s = t
    power = t
    tsq = t * t
    k = 1
    last = None
    while s != last:
        last = s
        power *= tsq
        s += power / (2 * k + 1)
        k += 1
    return s


def _atan_series(t: mpfr) -> mpfr:
    """atan(t) = t - t^3/3 + t^5/5 - ... for small |t|, at context precision."""
    s = t
    power = t
    neg_tsq = -t * t
    k = 1
    last = None
    while s != last:
        last = s
        power *= neg_tsq
        s += power / (2 * k + 1)
        k += 1
    return s


def _ln2(work: int) -> mpfr:
    cached = _LN2_CACHE.get(work)
    if cached is None:
        with _ctx(work):
            cached = 2 * _atanh_series(mpfr(mpq(1, 3)))
        _LN2_CACHE[work] = cached
    return cached


def _pi_at(work: int) -> mpfr:
    """pi at ``work`` bits from the classic four-term arctangent split
    16*atan(1/5) - 4*atan(1/239)."""
    cached = _PI_CACHE.get(work)
    if cached is None:
        with _ctx(work):
            cached = 16 * _atan_series(mpfr(mpq(1, 5))) - 4 * _atan_series(
                mpfr(mpq(1, 239))
            )
        _PI_CACHE[work] = cached
    return cached


def pi_ref(prec: int = DEFAULT_PREC) -> HPFloat:
    """Reference value of pi at ``prec`` bits (relative error <= 2 ulp)."""
    if prec < MIN_PREC:
        raise DomainError(f"precision must be >= {MIN_PREC} bits, got {prec}")
    work = prec + _GUARD
    v = _pi_at(work)
    with _ctx(prec):
        return HPFloat(mpfr(v), prec)


def ln_ref(x: Scalar, prec: int | None = None) -> HPFloat:
    """Natural logarithm by binary argument reduction plus the atanh series.

    Writes x = m * 2^e with m in [sqrt(1/2), sqrt(2)), evaluates
    ln m = 2*atanh((m-1)/(m+1)) by series, and adds e*ln 2.  Relative error
    <= 4 ulp at the result precision.  Raises :class:`DomainError` for
    x <= 0.
    """
    v, p = _operand(x, prec)
    if v <= 0:
        raise DomainError("logarithm of a non-positive value")
    work = p + _GUARD
    with _ctx(work):
        xv = mpfr(v)
        e, m = gmpy2.frexp(xv)  # x = m * 2^e, m in [0.5, 1)
        if m < gmpy2.sqrt(mpfr(1) / 2):
            m = m * 2
            e -= 1
        t = (m - 1) / (m + 1)
        r = 2 * _atanh_series(t) + e * _ln2(work)
    with _ctx(p):
        return HPFloat(mpfr(r), p)


def atan_ref(x: Scalar, prec: int | None = None) -> HPFloat:
    """Arctangent by halving reduction plus the alternating power series.

    Uses atan(x) = pi/2 - atan(1/x) for x > 1 and the halving identity
    atan(x) = 2*atan(x / (1 + sqrt(1 + x^2))) until the argument is small,
    then sums the series.  Odd by construction: atan_ref(-x) == -atan_ref(x)
    exactly.  Relative error <= 4 ulp.
    """
    v, p = _operand(x, prec)
    if v == 0:
        return HPFloat(0, p)
    if v < 0:
        return -_atan_positive(-v, p)
    return _atan_positive(v, p)


def _atan_positive(v, p: int) -> HPFloat:
    work = p + _GUARD
    with _ctx(work):
        xv = mpfr(v)
        flip = xv > 1
        if flip:
            xv = 1 / xv
        halvings = 0
        small = mpfr(1) / 16
        while xv > small:
            xv = xv / (1 + gmpy2.sqrt(1 + xv * xv))
            halvings += 1
        r = _atan_series(xv) * (2 ** halvings)
        if flip:
            r = _pi_at(work) / 2 - r
    with _ctx(p):
        return HPFloat(mpfr(r), p)
