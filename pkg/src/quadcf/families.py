"""The concrete continued-fraction families and their closed-form laws.

Every family below is an instance of one pattern: the three-term reduction of
the integral family turns the ratio of two consecutive integrals into a
continued fraction whose partial numerators are squares.  Specialising gives

* the logarithm family (value ``ln((n+m)/(n-m))``)::

      2m / (n - m^2/(3n - 4m^2/(5n - 9m^2/(7n - ...))))

* the arctangent family (value ``arctan(m/n)``) -- the same with all partial
  numerators positive::

      m / (n + m^2/(3n + 4m^2/(5n + 9m^2/(7n + ...))))

* the general ratio fraction, equal to ``n a^2 I_{n-1}(x*) / I_n(x*)``::

      (2n+1)b - (n+1)^2 a^2 c/((2n+3)b - (n+2)^2 a^2 c/((2n+5)b - ...))

* the completed fraction, equal to ``a / delta``::

      b - a^2 c/(3b - 4 a^2 c/(5b - 9 a^2 c/(7b - ...)))

* the vanishing fraction ``0 = 1 - 1/(3 - 4/(5 - 9/(7 - ...)))`` (the
  boundary case m == n) together with its tails ``T_k -> k``, and
* Brouncker's classical fraction ``1/(2 + 9/(2 + 25/(2 + 49/(2 + ...))))``,
  kept as an empirical cross-check against ``4/pi - 1``.

When the square root ``m = sqrt(msq)`` is rational it is folded into the
leading partial numerator, reproducing the classical unreduced convergent
tables digit for digit.  When it is irrational the fraction is built for the
m-stripped value (``ln(.)/m`` resp. ``arctan(m/n)/m``), whose convergents are
exact rationals, and the multiplication by ``sqrt(msq)`` is deferred to
floating-point evaluation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional

from .cf import FRONT_ONE, CFTermSeq, FrontFactor, eval_backward
from .errors import ConvergenceError, DomainError
from .integrals import QuadraticForm
from .numerics import DEFAULT_PREC, HPFloat

__all__ = [
    "FamilyKind",
    "CFFamily",
    "log_cf_spec",
    "log_of_integer",
    "log_of_fraction",
    "atan_cf_spec",
    "ratio_cf_spec",
    "completed_cf_spec",
    "completed_cf_value",
    "brouncker_cf_spec",
    "degenerate_cf_spec",
    "degenerate_tail_spec",
    "degenerate_tail",
    "difference_closed_form",
    "auto_terms",
    "PiEstimate",
    "PI_METHODS",
    "pi_cf",
]


class FamilyKind(Enum):
    LOG_NM = "log"
    ATAN_NM = "atan"
    RATIO_GENERAL_N = "ratio"
    COMPLETED_A_DELTA = "completed"
    BROUNCKER = "brouncker"
    DEGENERATE_ZERO = "degenerate"


@dataclass(frozen=True)
class CFFamily:
    """Which family a term sequence belongs to, with its parameters."""

    kind: FamilyKind
    n: Optional[Fraction] = None
    msq: Optional[Fraction] = None
    nexp: Optional[int] = None
    form: Optional[QuadraticForm] = None


def _fraction(x, name: str) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise DomainError(f"{name} must be an exact rational, got {type(x).__name__}")


def _sqrt_exact(q: Fraction) -> Optional[Fraction]:
    """sqrt(q) if q is a perfect square of a rational, else None."""
    if q < 0:
        return None
    rn = math.isqrt(q.numerator)
    rd = math.isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


def _square_family(
    n: Fraction, msq: Fraction, sign: int, lead: int, kind: FamilyKind
) -> CFTermSeq:
    """Common builder for the log (sign=-1) and atan (sign=+1) families.

    ``lead`` is the rational factor of the leading partial numerator (2 for
    the logarithm, 1 for the arctangent); the exact or deferred square root
    of ``msq`` multiplies it.
    """
    m = _sqrt_exact(msq)
    if m is not None:
        alpha1 = lead * m
        front = FRONT_ONE
    else:
        alpha1 = Fraction(lead)
        front = FrontFactor(sqrt_of=msq)

    def terms(k: int) -> tuple[Fraction, Fraction]:
        if k == 1:
            return alpha1, n
        return sign * (k - 1) ** 2 * msq, (2 * k - 1) * n

    return CFTermSeq(
        beta0=Fraction(0),
        terms=terms,
        front=front,
        meta=CFFamily(kind, n=n, msq=msq),
    )


def log_cf_spec(n, msq) -> CFTermSeq:
    """Fraction with value ln((n+m)/(n-m)), m = sqrt(msq).

    Terms: leading numerator 2m over n, then partial numerators
    -(k-1)^2 * msq over (2k-1) * n.  Requires n > 0 and 0 < msq < n^2; at
    msq == n^2 the value would be infinite and beyond it complex.
    """
    n = _fraction(n, "n")
    msq = _fraction(msq, "msq")
    if n <= 0:
        raise DomainError(f"n must be positive, got {n}")
    if msq <= 0:
        raise DomainError(f"msq must be positive, got {msq}")
    if msq >= n * n:
        raise DomainError(
            f"msq={msq} >= n^2={n * n}: value would be infinite or complex"
        )
    return _square_family(n, msq, sign=-1, lead=2, kind=FamilyKind.LOG_NM)


def log_of_integer(i: int) -> CFTermSeq:
    """Fraction with value ln(i) for an integer i >= 2 (n = i+1, m = i-1)."""
    if not isinstance(i, int) or i < 2:
        raise DomainError(f"log_of_integer needs an integer >= 2, got {i!r}")
    return log_cf_spec(Fraction(i + 1), Fraction((i - 1) ** 2))


def log_of_fraction(p: int, q: int) -> CFTermSeq:
    """Fraction with value ln(p/q) for integers p > q >= 1 (n = p+q, m = p-q).

    Convergence accelerates as (p-q)/(p+q) shrinks.
    """
    if not isinstance(p, int) or not isinstance(q, int) or not p > q >= 1:
        raise DomainError(f"log_of_fraction needs integers p > q >= 1, got {p!r}/{q!r}")
    return log_cf_spec(Fraction(p + q), Fraction((p - q) ** 2))


def atan_cf_spec(n, msq) -> CFTermSeq:
    """Fraction with value arctan(m/n), m = sqrt(msq): the logarithm family
    with every partial numerator taken positive.  Requires n > 0, msq > 0."""
    n = _fraction(n, "n")
    msq = _fraction(msq, "msq")
    if n <= 0:
        raise DomainError(f"n must be positive, got {n}")
    if msq <= 0:
        raise DomainError(f"msq must be positive, got {msq}")
    return _square_family(n, msq, sign=+1, lead=1, kind=FamilyKind.ATAN_NM)


def ratio_cf_spec(nexp: int, form: QuadraticForm) -> CFTermSeq:
    """Fraction with value nexp * a^2 * I_{nexp-1}(x*) / I_nexp(x*):

        (2n+1)b - (n+1)^2 a^2 c / ((2n+3)b - (n+2)^2 a^2 c / (...))
    """
    if not isinstance(nexp, int) or nexp < 1:
        raise DomainError(f"exponent must be an integer >= 1, got {nexp!r}")
    a2c = form.a**2 * form.c
    b = form.b

    def terms(k: int) -> tuple[Fraction, Fraction]:
        j = nexp + k
        return -(j**2) * a2c, (2 * j + 1) * b

    return CFTermSeq(
        beta0=(2 * nexp + 1) * b,
        terms=terms,
        meta=CFFamily(FamilyKind.RATIO_GENERAL_N, nexp=nexp, form=form),
    )


def completed_cf_spec(form: QuadraticForm) -> CFTermSeq:
    """Fraction with value a/delta: the ratio fraction for exponent 1 with the
    missing head term restored:

        b - a^2 c / (3b - 4 a^2 c / (5b - 9 a^2 c / (7b - ...)))
    """
    a2c = form.a**2 * form.c
    b = form.b

    def terms(k: int) -> tuple[Fraction, Fraction]:
        return -(k**2) * a2c, (2 * k + 1) * b

    return CFTermSeq(
        beta0=b,
        terms=terms,
        meta=CFFamily(FamilyKind.COMPLETED_A_DELTA, form=form),
    )


def completed_cf_value(
    form: QuadraticForm, depth: int, prec: int = DEFAULT_PREC
) -> HPFloat:
    """Depth-``depth`` evaluation of the a/delta fraction."""
    return eval_backward(completed_cf_spec(form), depth, prec)


def brouncker_cf_spec() -> CFTermSeq:
    """Brouncker's fraction 1/(2 + 9/(2 + 25/(2 + 49/(2 + ...)))).

    Its limit is checked empirically against 4/pi - 1 (convergence is slow,
    like the alternating odd-reciprocal series it rearranges); the identity is
    not assumed anywhere else in the package.
    """

    def terms(k: int) -> tuple[Fraction, Fraction]:
        alpha = Fraction(1) if k == 1 else Fraction((2 * k - 1) ** 2)
        return alpha, Fraction(2)

    return CFTermSeq(
        beta0=Fraction(0), terms=terms, meta=CFFamily(FamilyKind.BROUNCKER)
    )


def degenerate_cf_spec() -> CFTermSeq:
    """The vanishing fraction 1 - 1/(3 - 4/(5 - 9/(7 - 16/(9 - ...)))).

    This is the logarithm family at the boundary m == n == 1, where the value
    collapses to 0; its truncations are exact rationals that decrease
    strictly toward the limit.
    """

    def terms(k: int) -> tuple[Fraction, Fraction]:
        return Fraction(-(k**2)), Fraction(2 * k + 1)

    return CFTermSeq(
        beta0=Fraction(1), terms=terms, meta=CFFamily(FamilyKind.DEGENERATE_ZERO)
    )


def degenerate_tail_spec(k: int) -> CFTermSeq:
    """Tail T_k = (2k+1) - (k+1)^2/((2k+3) - (k+2)^2/(...)) of the vanishing
    fraction; the infinite tail equals k."""
    if k < 1:
        raise DomainError(f"tail index must be >= 1, got {k}")

    def terms(j: int) -> tuple[Fraction, Fraction]:
        i = k + j
        return Fraction(-(i**2)), Fraction(2 * i + 1)

    return CFTermSeq(beta0=Fraction(2 * k + 1), terms=terms)


def degenerate_tail(k: int, depth: int, prec: int = DEFAULT_PREC) -> HPFloat:
    """Depth-``depth`` truncation of the tail T_k (depth 0 is the bare seed
    2k+1).  Strictly decreasing in depth and bounded below by k."""
    if depth < 0:
        raise DomainError(f"depth must be >= 0, got {depth}")
    spec = degenerate_tail_spec(k)
    if depth == 0:
        return HPFloat(spec.beta0, prec)
    return eval_backward(spec, depth, prec)


def _family_denominators(cf: CFTermSeq, count: int) -> list[Fraction]:
    q_prev, q = Fraction(0), Fraction(1)
    out = [q]
    for k in range(1, count + 1):
        alpha, beta = cf.term(k)
        q, q_prev = beta * q + alpha * q_prev, q
        out.append(q)
    return out


def difference_closed_form(k: int, n, msq, kind: FamilyKind) -> Fraction:
    """Closed form for value(convergent k) - value(convergent k-1).

    The determinant identity gives, with a1 the leading partial numerator and
    q the (unreduced) convergent denominators,

        diff(k) = s * a1 * ((k-1)!)^2 * msq^(k-1) / (q_{k-1} * q_k)

    where s = +1 throughout for the logarithm family (its convergents climb
    monotonically) and s = (-1)^(k-1) for the arctangent family (its
    convergents alternate around the limit).  Exact in the same convention as
    the family's convergents (m folded in when rational, stripped otherwise).
    """
    if k < 1:
        raise DomainError(f"difference index must be >= 1, got {k}")
    if kind is FamilyKind.LOG_NM:
        cf = log_cf_spec(n, msq)
        sign = 1
    elif kind is FamilyKind.ATAN_NM:
        cf = atan_cf_spec(n, msq)
        sign = (-1) ** (k - 1)
    else:
        raise DomainError(f"no closed-form difference law for {kind}")
    alpha1, _ = cf.term(1)
    qs = _family_denominators(cf, k)
    msq = _fraction(msq, "msq")
    magnitude = (
        alpha1
        * Fraction(math.factorial(k - 1)) ** 2
        * msq ** (k - 1)
        / (qs[k - 1] * qs[k])
    )
    return sign * magnitude


def _tol_fraction(tol) -> Fraction:
    if isinstance(tol, HPFloat):
        out = tol.to_fraction()
    elif isinstance(tol, Fraction):
        out = tol
    elif isinstance(tol, int):
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


_AUTO_TERMS_CAP = 100_000


def auto_terms(cf: CFTermSeq, tol) -> int:
    """Smallest k with |closed-form difference at k+1| < tol.

    Uses the difference law as an a-priori error model for the logarithm and
    arctangent families, then verifies a posteriori that refining the
    evaluation by one more term moves it by less than ``tol``.  The front
    factor (for irrational m) is included in the comparison.
    """
    fam = cf.meta
    if not isinstance(fam, CFFamily) or fam.kind not in (
        FamilyKind.LOG_NM,
        FamilyKind.ATAN_NM,
    ):
        raise DomainError("auto_terms needs a logarithm- or arctangent-family fraction")
    tol_f = _tol_fraction(tol)
    alpha_abs = abs(cf.term(1)[0])
    msq = fam.msq
    front_sq = cf.front.rational**2 * cf.front.sqrt_of
    tol_sq = tol_f * tol_f

    # Incremental scan of |diff(k+1)| = a1 * (k!)^2 * msq^k / (q_k * q_{k+1}).
    qs = _family_denominators(cf, 2)
    q_k, q_k1 = qs[1], qs[2]
    fact_sq = Fraction(1)  # (k!)^2
    power = Fraction(1)  # msq^k
    k = 1
    while k <= _AUTO_TERMS_CAP:
        fact_sq *= k * k
        power *= msq
        diff_next = alpha_abs * fact_sq * power / abs(q_k * q_k1)
        if diff_next**2 * front_sq < tol_sq:
            prec = max(DEFAULT_PREC, _bits_for(tol_f) + 32)
            a = eval_backward(cf, k, prec).to_fraction()
            b = eval_backward(cf, k + 1, prec).to_fraction()
            if abs(a - b) < tol_f:
                return k
        k += 1
        alpha, beta = cf.term(k + 1)
        q_k, q_k1 = q_k1, beta * q_k1 + alpha * q_k
    raise ConvergenceError(
        f"no truncation depth below {_AUTO_TERMS_CAP} meets tolerance {tol_f}"
    )


def _bits_for(tol: Fraction) -> int:
    """Number of bits needed to resolve ``tol`` (roughly -log2 tol)."""
    if tol >= 1:
        return 1
    return (tol.denominator // tol.numerator).bit_length() + 1


# -- pi evaluators -------------------------------------------------------------


@dataclass(frozen=True)
class PiEstimate:
    """A pi evaluation together with the method and truncation depth used."""

    value: HPFloat
    method: str
    depth: int


PI_METHODS = ("atan11", "sqrt3", "machin-split", "brouncker")

_DEFAULT_PI_TOL = Fraction(1, 10**15)
_BROUNCKER_DEPTH_CAP = 2_000_000


def pi_cf(
    method: str,
    prec: int = DEFAULT_PREC,
    depth: int | None = None,
    tol=None,
) -> PiEstimate:
    """Evaluate pi through one of the arctangent fractions.

    * ``atan11``:        pi = 4 * arctan(1/1)
    * ``sqrt3``:         pi = 6 * sqrt(3) * (arctan(sqrt(3)/3)/sqrt(3))
    * ``machin-split``:  pi = 4 * (arctan(1/2) + arctan(1/3))
    * ``brouncker``:     pi = 4 / (1 + brouncker), empirical; converges like
      1/depth, so tolerance-driven use is capped (depth <= 2e6).

    Exactly one of ``depth`` / ``tol`` may be given; with neither, a relative
    target of 1e-15 is used (``brouncker`` defaults to depth 400).
    """
    if method not in PI_METHODS:
        raise DomainError(f"unknown pi method {method!r}; choose from {PI_METHODS}")
    if depth is not None and tol is not None:
        raise DomainError("give either a depth or a tolerance, not both")

    if method == "brouncker":
        if depth is None:
            if tol is None:
                depth = 400
            else:
                tol_f = _tol_fraction(tol)
                depth = int(Fraction(11, 10) / tol_f) + 1
                if depth > _BROUNCKER_DEPTH_CAP:
                    raise ConvergenceError(
                        f"brouncker needs ~{depth} terms for tolerance {tol_f}; "
                        f"cap is {_BROUNCKER_DEPTH_CAP}"
                    )
        work = prec + 32
        v = eval_backward(brouncker_cf_spec(), depth, work)
        return PiEstimate(HPFloat(4 / (1 + v), prec), method, depth)

    if method == "atan11":
        seqs = [atan_cf_spec(1, 1)]
        scale = 4
    elif method == "sqrt3":
        seqs = [atan_cf_spec(3, 3)]
        scale = 6
    else:  # machin-split
        seqs = [atan_cf_spec(2, 1), atan_cf_spec(3, 1)]
        scale = 4

    if depth is None:
        tol_f = _tol_fraction(tol) if tol is not None else _DEFAULT_PI_TOL
        per_term = tol_f / (scale * len(seqs))
        depth = max(auto_terms(seq, per_term) + 1 for seq in seqs)

    work = max(prec, (_bits_for(_tol_fraction(tol)) if tol is not None else 0)) + 32
    total = HPFloat(0, work)
    for seq in seqs:
        total = total + eval_backward(seq, depth, work)
    return PiEstimate(HPFloat(scale * total, prec), method, depth)
