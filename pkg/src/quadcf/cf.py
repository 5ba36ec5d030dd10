"""Generic continued-fraction machinery.

A continued fraction is described by a leading term ``beta0`` and a pure
index-based generator of partial-term pairs::

    value = beta0 + a1/(b1 + a2/(b2 + a3/(b3 + ...)))
            terms(k) == (a_k, b_k)   for k >= 1

All terms are exact rationals.  Truncating after ``a_d/b_d`` gives the
depth-``d`` convergent ``p_d/q_d``, produced here by the forward three-term
recurrence

    p_k = b_k*p_{k-1} + a_k*p_{k-2}        p_{-1} = 1,  p_0 = beta0
    q_k = b_k*q_{k-1} + a_k*q_{k-2}        q_{-1} = 0,  q_0 = 1

The (p, q) pairs are intentionally *not* reduced to lowest terms -- the
classical convergent tables this package reproduces are unreduced -- but
:attr:`Convergent.value` returns the canonical fraction.

Irrational overall factors (a square root of a rational in front of the whole
fraction) are kept out of the term sequence: they are described by
:class:`FrontFactor` and applied only during floating-point evaluation, so
convergents stay exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import gmpy2
from gmpy2 import mpfr, mpq

from .errors import CFEvaluationError, DomainError
from .numerics import DEFAULT_PREC, HPFloat, sqrt_hp

__all__ = [
    "FrontFactor",
    "CFTermSeq",
    "Convergent",
    "convergents",
    "eval_backward",
    "determinant_identity_check",
    "alternate_sign_transform",
]

_ONE = Fraction(1)


@dataclass(frozen=True)
class FrontFactor:
    """Scalar multiplier ``rational * sqrt(sqrt_of)`` applied after evaluation."""

    rational: Fraction = _ONE
    sqrt_of: Fraction = _ONE

    @property
    def is_one(self) -> bool:
        return self.rational == 1 and self.sqrt_of == 1

    @property
    def is_rational(self) -> bool:
        return self.sqrt_of == 1

    def apply(self, x: HPFloat) -> HPFloat:
        if self.is_one:
            return x
        prec = x.prec_bits
        out = x
        with gmpy2.context(precision=prec + 32):
            if self.sqrt_of != 1:
                out = out * sqrt_hp(self.sqrt_of, prec + 32)
            if self.rational != 1:
                out = out * self.rational
        return HPFloat(out, prec)


FRONT_ONE = FrontFactor()


@dataclass(frozen=True)
class CFTermSeq:
    """A continued fraction: leading term, term generator, optional front factor.

    ``terms`` must be pure: the same index always yields the same pair, and
    every partial numerator must be nonzero.  ``meta`` is an opaque slot used
    by the concrete families to remember their parameters.
    """

    beta0: Fraction
    terms: Callable[[int], tuple[Fraction, Fraction]]
    front: FrontFactor = FRONT_ONE
    meta: object = field(default=None, compare=False)

    def term(self, k: int) -> tuple[Fraction, Fraction]:
        if k < 1:
            raise DomainError(f"term index must be >= 1, got {k}")
        alpha, beta = self.terms(k)
        if alpha == 0:
            raise DomainError(f"partial numerator at level {k} is zero")
        return alpha, beta


@dataclass(frozen=True)
class Convergent:
    """Exact truncation ``p/q`` of a continued fraction at depth ``k``.

    The pair is kept unreduced; ``value`` is the canonical fraction.
    """

    k: int
    p: Fraction
    q: Fraction

    @property
    def value(self) -> Fraction:
        if self.q == 0:
            raise DomainError(f"convergent {self.k} has a zero denominator")
        return self.p / self.q


def convergents(cf: CFTermSeq, count: int) -> list[Convergent]:
    """Convergents 0..count of ``cf`` by the forward three-term recurrence."""
    if count < 1:
        raise DomainError(f"count must be >= 1, got {count}")
    p_prev, q_prev = _ONE, Fraction(0)  # index -1
    p, q = cf.beta0, _ONE  # index 0
    out = [Convergent(0, p, q)]
    for k in range(1, count + 1):
        alpha, beta = cf.term(k)
        p, p_prev = beta * p + alpha * p_prev, p
        q, q_prev = beta * q + alpha * q_prev, q
        out.append(Convergent(k, p, q))
    return out


def eval_backward(cf: CFTermSeq, depth: int, prec: int = DEFAULT_PREC) -> HPFloat:
    """Evaluate the depth-``depth`` truncation tail-first in floating point.

    Agrees with ``convergents(cf, depth)[depth].value`` to within 4 ulp at
    ``prec`` (the backward sweep is self-stabilising for the families this
    package emits).  The front factor is applied to the result.  A tail that
    evaluates to exactly zero raises :class:`CFEvaluationError` naming the
    offending level.
    """
    if depth < 1:
        raise DomainError(f"depth must be >= 1, got {depth}")
    work = prec + 32 + max(0, depth).bit_length()
    with gmpy2.context(precision=work):
        _, beta_d = cf.term(depth)
        tail = mpfr(mpq(beta_d))
        for k in range(depth - 1, 0, -1):
            alpha_next, _ = cf.term(k + 1)
            if tail == 0:
                raise CFEvaluationError(
                    f"tail denominator vanished at level {k + 1} "
                    f"(degenerate truncation at depth {depth})",
                    level=k + 1,
                )
            _, beta_k = cf.term(k)
            tail = mpq(beta_k) + mpq(alpha_next) / tail
        if tail == 0:
            raise CFEvaluationError(
                f"tail denominator vanished at level 1 "
                f"(degenerate truncation at depth {depth})",
                level=1,
            )
        alpha1, _ = cf.term(1)
        result = mpq(cf.beta0) + mpq(alpha1) / tail
    return cf.front.apply(HPFloat(mpfr(result, prec), prec))


def determinant_identity_check(convs: list[Convergent], cf: CFTermSeq) -> bool:
    """Exact check of p_k*q_{k-1} - p_{k-1}*q_k == (-1)^(k-1) * prod(a_1..a_k).

    ``convs`` must be a prefix of ``convergents(cf, .)``; the identity is the
    source of the closed-form law for differences of successive convergents.
    """
    prod_alpha = _ONE
    for k in range(1, len(convs)):
        alpha, _ = cf.term(k)
        prod_alpha *= alpha
        lhs = convs[k].p * convs[k - 1].q - convs[k - 1].p * convs[k].q
        if lhs != (-1) ** (k - 1) * prod_alpha:
            return False
    return True


def alternate_sign_transform(cf: CFTermSeq) -> CFTermSeq:
    """Equivalent fraction with every alpha negated and odd-position betas flipped.

    This is the sign pattern obtained by rescaling level k with (-1)^k; every
    truncation of the transformed fraction equals the original truncation
    exactly.
    """

    def flipped(k: int) -> tuple[Fraction, Fraction]:
        alpha, beta = cf.term(k)
        return -alpha, beta if k % 2 == 0 else -beta

    return CFTermSeq(beta0=cf.beta0, terms=flipped, front=cf.front, meta=cf.meta)
