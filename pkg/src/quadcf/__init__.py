"""quadcf: exact continued fractions for logarithms, arctangents and pi,
together with the quadratic-radical integral family they reduce.

The package has five layers:

* :mod:`quadcf.numerics` -- exact rationals, explicit-precision floats, and
  series-based reference evaluators for ln, arctan and pi.
* :mod:`quadcf.cf` -- generic continued-fraction machinery: exact convergents
  by the forward three-term recurrence, backward floating evaluation, and the
  determinant identity.
* :mod:`quadcf.families` -- the concrete fraction families (logarithm,
  arctangent, integral ratio, a/delta, Brouncker, the vanishing fraction),
  the closed-form difference law, and a-priori term-count selection.
* :mod:`quadcf.integrals` / :mod:`quadcf.quadrature` -- closed forms of
  integral of x^n/sqrt(a^2 - 2bx + cx^2) and an independent tanh-sinh
  quadrature oracle that cross-checks them.
* :mod:`quadcf.errata` -- machine-readable corrections to the typesetting
  slips in the classical printed source of these tables.

The command line (``python -m quadcf`` or the ``quadcf`` script) exposes all
of it; ``quadcf verify`` runs the full acceptance suite.
"""

from .cf import (
    CFTermSeq,
    Convergent,
    FrontFactor,
    alternate_sign_transform,
    convergents,
    determinant_identity_check,
    eval_backward,
)
from .errata import ERRATA, Erratum
from .errors import CFEvaluationError, ConvergenceError, DomainError
from .families import (
    CFFamily,
    FamilyKind,
    PiEstimate,
    PI_METHODS,
    atan_cf_spec,
    auto_terms,
    brouncker_cf_spec,
    completed_cf_spec,
    completed_cf_value,
    degenerate_cf_spec,
    degenerate_tail,
    degenerate_tail_spec,
    difference_closed_form,
    log_cf_spec,
    log_of_fraction,
    log_of_integer,
    pi_cf,
    ratio_cf_spec,
)
from .integrals import (
    AT_ROOT,
    AtRoot,
    Case,
    ClosedFormCoeffs,
    IntegralSpec,
    QuadraticForm,
    big_pi,
    coeffs,
    delta,
    integral_at_root,
    integral_to,
    radicand,
    roots,
)
from .numerics import (
    DEFAULT_PREC,
    HPFloat,
    MIN_PREC,
    Rational,
    atan_ref,
    ln_ref,
    pi_ref,
    sqrt_hp,
    ulp,
    ulp_distance,
)
from .quadrature import QuadratureResult, quad_integral

__version__ = "0.1.0"

__all__ = [
    "AT_ROOT",
    "AtRoot",
    "CFEvaluationError",
    "CFFamily",
    "CFTermSeq",
    "Case",
    "ClosedFormCoeffs",
    "Convergent",
    "ConvergenceError",
    "DEFAULT_PREC",
    "DomainError",
    "ERRATA",
    "Erratum",
    "FamilyKind",
    "FrontFactor",
    "HPFloat",
    "IntegralSpec",
    "MIN_PREC",
    "PI_METHODS",
    "PiEstimate",
    "QuadraticForm",
    "QuadratureResult",
    "Rational",
    "alternate_sign_transform",
    "atan_cf_spec",
    "atan_ref",
    "auto_terms",
    "big_pi",
    "brouncker_cf_spec",
    "coeffs",
    "completed_cf_spec",
    "completed_cf_value",
    "convergents",
    "degenerate_cf_spec",
    "degenerate_tail",
    "degenerate_tail_spec",
    "delta",
    "determinant_identity_check",
    "difference_closed_form",
    "eval_backward",
    "integral_at_root",
    "integral_to",
    "ln_ref",
    "log_cf_spec",
    "log_of_fraction",
    "log_of_integer",
    "pi_cf",
    "pi_ref",
    "quad_integral",
    "radicand",
    "ratio_cf_spec",
    "roots",
    "sqrt_hp",
    "ulp",
    "ulp_distance",
]
