"""The acceptance suite: one callable per criterion, plus a runner.

Each criterion returns a :class:`CriterionResult` whose status is

* ``PASS``  -- every sub-check holds;
* ``XFAIL`` -- the criterion contains a sub-check that exact arithmetic shows
  cannot hold as literally stated; the implementation reproduces the
  documented failure *exactly* (measured value asserted against the recorded
  analysis) and every attainable sub-check passes.  Treated as expected;
* ``XPASS`` -- a documented-defect check unexpectedly passed (a bug: the
  analysis no longer matches the code) -- treated as failure;
* ``FAIL``  -- an attainable sub-check failed.

``run()`` prints one line per criterion and returns a process exit code
(0 when nothing failed unexpectedly).  ``deep=True`` appends the slower
randomised invariant sweeps.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction

from .cf import alternate_sign_transform, convergents, determinant_identity_check, eval_backward
from .errata import by_key
from .families import (
    FamilyKind,
    atan_cf_spec,
    auto_terms,
    brouncker_cf_spec,
    completed_cf_spec,
    degenerate_cf_spec,
    degenerate_tail_spec,
    difference_closed_form,
    log_cf_spec,
    log_of_fraction,
)
from .integrals import AT_ROOT, Case, QuadraticForm, coeffs, integral_at_root, integral_to, roots
from .numerics import atan_ref, ln_ref, pi_ref, sqrt_hp
from .quadrature import quad_integral

__all__ = ["CriterionResult", "CRITERIA", "run", "run_criterion", "deep_checks"]

RNG_SEED = 606


@dataclass
class CriterionResult:
    cid: str
    title: str
    status: str  # PASS | FAIL | XFAIL | XPASS
    detail: str
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return self.status in ("PASS", "XFAIL")


class _Checks:
    """Collects sub-check outcomes for one criterion."""

    def __init__(self):
        self.failures: list[str] = []
        self.notes: list[str] = []

    def check(self, cond: bool, label: str):
        if not cond:
            self.failures.append(label)

    def note(self, text: str):
        self.notes.append(text)

    def result(self, cid, title, expected_failures: list[str] | None = None):
        """Build the result; ``expected_failures`` are labels that MUST fail."""
        expected = set(expected_failures or [])
        unexpected = [f for f in self.failures if f not in expected]
        missing = [e for e in expected if e not in self.failures]
        if unexpected:
            status = "FAIL"
        elif missing:
            status = "XPASS"
        elif expected:
            status = "XFAIL"
        else:
            status = "PASS"
        detail = "; ".join(self.notes)
        if unexpected:
            detail = "failed: " + ", ".join(unexpected) + ("; " + detail if detail else "")
        if missing:
            detail = (
                "documented-defect check unexpectedly passed: "
                + ", ".join(missing)
                + ("; " + detail if detail else "")
            )
        return CriterionResult(cid, title, status, detail)


def _close(value: Fraction, target: Fraction, tol: Fraction) -> bool:
    return abs(value - target) <= tol


def criterion_1() -> CriterionResult:
    """ln 2: convergents 2/3, 9/13, 262/378; printed decimals; 3e-5 bound."""
    c = _Checks()
    cs = convergents(log_of_fraction(2, 1), 3)
    c.check(cs[1].value == Fraction(2, 3), "depth-1 == 2/3")
    c.check(cs[2].value == Fraction(9, 13), "depth-2 == 9/13")
    c.check(cs[3].value == Fraction(262, 378), "depth-3 == 262/378")
    c.check((cs[3].p, cs[3].q) == (262, 378), "depth-3 pair unreduced")
    c.check(_close(cs[1].value, Fraction("0.666666"), Fraction(1, 10**6)), "print 0.666666")
    c.check(_close(cs[2].value, Fraction("0.6923"), Fraction(1, 10**4)), "print 0.6923")
    c.check(_close(cs[3].value, Fraction("0.693121"), Fraction(1, 10**6)), "print 0.693121")
    err = abs(cs[3].value - ln_ref(2, 192).to_fraction())
    c.check(err <= Fraction(3, 10**5), "|depth-3 - ln 2| <= 3e-5")
    c.note(f"|262/378 - ln 2| = {float(err):.3e} <= 3e-05")
    return c.result("C1", "ln 2 convergents and decimals")


def criterion_2() -> CriterionResult:
    """ln(3/2): 2/5 = 0.400000; 0.40540; 0.4054645 (erratum-corrected); 1e-6 oracle."""
    c = _Checks()
    cs = convergents(log_of_fraction(3, 2), 3)
    c.check(cs[1].value == Fraction(2, 5), "depth-1 == 2/5")
    c.check(cs[1].value == Fraction("0.400000"), "print 0.400000 exact")
    c.check(cs[2].value == Fraction(15, 37), "depth-2 == 15/37")
    # printed 0.40540 is a truncation; one unit in its last place
    d2 = abs(cs[2].value - Fraction("0.40540"))
    c.check(d2 <= Fraction(1, 10**5), "print 0.40540 to its resolution")
    c.note(
        f"depth-2 vs truncated print: {float(d2):.4e} <= 1e-05 "
        f"(the strict +-5e-6 reading misses: exact gap is 1/185000)"
    )
    c.check(cs[3].value == Fraction(371, 915), "depth-3 == 371/915")
    d3 = abs(cs[3].value - Fraction("0.4054645"))
    c.check(d3 <= Fraction(5, 10**8), "corrected print 0.4054645 within 5e-8")
    c.note(
        f"depth-3 vs corrected print 0.4054645: {float(d3):.2e} <= 5e-08 "
        f"(printed 0.4054654 transposes digits; errata "
        f"'{by_key('log-three-halves-depth3-decimal').key}')"
    )
    err = abs(cs[3].value - ln_ref(Fraction(3, 2), 192).to_fraction())
    c.check(err <= Fraction(1, 10**6), "|depth-3 - ln(3/2)| <= 1e-6")
    c.note(f"|depth-3 - ln(3/2)| = {float(err):.3e} <= 1e-06")
    return c.result("C2", "ln(3/2) convergents and decimals")


def criterion_3() -> CriterionResult:
    """pi/4: 1, 3/4, 19/24 exact; 7e-3 bound; depth-4 error analysis."""
    c = _Checks()
    cs = convergents(atan_cf_spec(1, 1), 4)
    c.check(cs[1].value == 1, "depth-1 == 1")
    c.check(cs[2].value == Fraction(3, 4), "depth-2 == 3/4")
    c.check(cs[3].value == Fraction(19, 24), "depth-3 == 19/24")
    pi4 = (pi_ref(192) / 4).to_fraction()
    err3 = abs(Fraction(19, 24) - pi4)
    c.check(err3 <= Fraction(7, 10**3), "|19/24 - pi/4| <= 7e-3")
    c.check(cs[4].value == Fraction(40, 51), "depth-4 == 160/204 == 40/51")
    err4 = abs(Fraction(40, 51) - pi4)
    # literal bound: provably unattainable (exact error is 1.0844e-3)
    c.check(err4 < Fraction(1, 10**3), "depth-4 error < 1e-3 (as stated)")
    c.check(
        Fraction(1, 10**3) < err4 < Fraction(2, 10**3),
        "depth-4 error sits in the third decimal place",
    )
    c.note(
        f"|19/24 - pi/4| = {float(err3):.3e}; depth-4 error = {float(err4):.6e}: "
        f"in the third decimal place as the source says, but not below 1e-3"
    )
    return c.result(
        "C3",
        "pi/4 convergents",
        expected_failures=["depth-4 error < 1e-3 (as stated)"],
    )


def criterion_4() -> CriterionResult:
    """pi/(6 sqrt 3): stripped convergents 1/3, 3/10, 49/162; 2e-4 bound."""
    c = _Checks()
    cs = convergents(atan_cf_spec(3, 3), 3)
    c.check(cs[1].value == Fraction(1, 3), "depth-1 == 1/3")
    c.check(cs[2].value == Fraction(3, 10), "depth-2 == 3/10")
    c.check(cs[3].value == Fraction(49, 162), "depth-3 == 49/162 (erratum-corrected)")
    target = (pi_ref(192) / (6 * sqrt_hp(3, 192))).to_fraction()
    c.check(_close(Fraction(49, 162), target, Fraction(2, 10**4)), "|49/162 - target| <= 2e-4")
    c.check(
        _close(target, Fraction("0.3022998"), Fraction(1, 10**7)),
        "printed constant 0.3022998",
    )
    err = abs(Fraction(49, 162) - target)
    c.note(
        f"|49/162 - pi/(6*sqrt(3))| = {float(err):.3e} <= 2e-04 "
        f"(printed 49/102 corrected by its own decimal 0.30247)"
    )
    return c.result("C4", "pi/(6 sqrt 3) stripped convergents")


def criterion_5() -> CriterionResult:
    """Split right angle: atan(1/2) + atan(1/3) fractions sum to pi/4 (1e-12)."""
    c = _Checks()
    total = (
        eval_backward(atan_cf_spec(2, 1), 40, 128).to_fraction()
        + eval_backward(atan_cf_spec(3, 1), 40, 128).to_fraction()
    )
    err = abs(total - (pi_ref(192) / 4).to_fraction())
    c.check(err <= Fraction(1, 10**12), "sum within 1e-12 of pi/4 at depth 40")
    c.note(f"|atanCF(1/2)+atanCF(1/3) - pi/4| = {float(err):.3e} <= 1e-12")
    return c.result("C5", "split right angle identity")


def criterion_6() -> CriterionResult:
    """Closed-form convergent tables, 20 randomised (m, n), exact pairs."""
    c = _Checks()
    rng = random.Random(RNG_SEED)
    for trial in range(20):
        n = rng.randint(2, 40)
        m = rng.randint(1, n - 1)
        cs = convergents(log_cf_spec(n, m * m), 5)
        table = [
            (2 * m, n),
            (6 * m * n, 3 * n**2 - m**2),
            (30 * m * n**2 - 8 * m**3, 15 * n**3 - 9 * m**2 * n),
            (210 * m * n**3 - 110 * m**3 * n, 105 * n**4 - 90 * m**2 * n**2 + 9 * m**4),
            (
                1890 * m * n**4 - 1470 * m**3 * n**2 + 128 * m**5,
                945 * n**5 - 1050 * m**2 * n**3 + 225 * m**4 * n,
            ),
        ]
        for k, pair in enumerate(table, start=1):
            c.check((cs[k].p, cs[k].q) == pair, f"log table (m={m}, n={n}) depth {k}")
        na = rng.randint(1, 40)
        ma = rng.randint(1, 40)
        acs = convergents(atan_cf_spec(na, ma * ma), 4)
        atable = [
            (ma, na),
            (3 * ma * na, 3 * na**2 + ma**2),
            (15 * ma * na**2 + 4 * ma**3, 15 * na**3 + 9 * ma**2 * na),
            (
                105 * ma * na**3 + 55 * ma**3 * na,
                105 * na**4 + 90 * ma**2 * na**2 + 9 * ma**4,
            ),
        ]
        for k, pair in enumerate(atable, start=1):
            c.check((acs[k].p, acs[k].q) == pair, f"atan table (m={ma}, n={na}) depth {k}")
    c.note("both tables exact for 20 randomised parameter pairs (3 recorded errata applied)")
    return c.result("C6", "closed-form convergent tables")


def criterion_7() -> CriterionResult:
    """Difference law to k=20 and determinant identity to k=200, exactly."""
    c = _Checks()
    rng = random.Random(RNG_SEED + 1)
    for trial in range(20):
        n = rng.randint(2, 30)
        m = rng.randint(1, n - 1)
        for kind, cf in (
            (FamilyKind.LOG_NM, log_cf_spec(n, m * m)),
            (FamilyKind.ATAN_NM, atan_cf_spec(n, m * m)),
        ):
            cs = convergents(cf, 20)
            for k in range(2, 21):
                want = cs[k].value - cs[k - 1].value
                got = difference_closed_form(k, n, m * m, kind)
                c.check(got == want, f"{kind.value} diff law (m={m}, n={n}, k={k})")
    for cf in (log_cf_spec(17, 9), atan_cf_spec(13, 25), completed_cf_spec(QuadraticForm(1, 2, 1))):
        c.check(
            determinant_identity_check(convergents(cf, 200), cf),
            "determinant identity to k=200",
        )
    c.note("closed-form differences equal exact convergent gaps; determinant identity exact to k=200")
    return c.result("C7", "difference law and determinant identity")


_C8_FORMS = (
    QuadraticForm(1, 2, 1),
    QuadraticForm(1, 3, 2),
    QuadraticForm(1, 1, -1),
    QuadraticForm(1, 2, -3),
)


def criterion_8() -> CriterionResult:
    """Ratio fraction == n a^2 I_{n-1}/I_n and completed fraction == a/delta (1e-15)."""
    from .families import completed_cf_value, ratio_cf_spec
    from .integrals import delta as delta_fn

    c = _Checks()
    tol = Fraction(1, 10**15)
    worst = Fraction(0)
    for form in _C8_FORMS:
        for nexp in (1, 2, 3):
            got = eval_backward(ratio_cf_spec(nexp, form), 200, 128).to_fraction()
            want = (
                nexp
                * form.a**2
                * integral_at_root(nexp - 1, form, 160)
                / integral_at_root(nexp, form, 160)
            ).to_fraction()
            err = abs(got - want)
            worst = max(worst, err)
            c.check(err <= tol, f"ratio fraction (form {form.a},{form.b},{form.c}, n={nexp})")
        got = completed_cf_value(form, 200, 128).to_fraction()
        want = (form.a / delta_fn(form, 160)).to_fraction()
        err = abs(got - want)
        worst = max(worst, err)
        c.check(err <= tol, f"completed fraction (form {form.a},{form.b},{form.c})")
    c.note(f"worst deviation {float(worst):.3e} <= 1e-15 at depth 200, 128 bits")
    return c.result("C8", "integral-ratio and a/delta fractions")


def criterion_9() -> CriterionResult:
    """Closed forms vs quadrature for n <= 8, both sign cases; factor table n <= 4."""
    c = _Checks()
    t0 = time.perf_counter()
    tol = Fraction(1, 10**12)
    rel_bound = Fraction(1, 10**10)
    worst = Fraction(0)
    for form in (QuadraticForm(1, 2, 1), QuadraticForm(1, 1, -1)):
        interior = roots(form, 128)[0].to_fraction() * Fraction(4, 5)
        for n in range(9):
            closed = integral_at_root(n, form, 160).to_fraction()
            quad = quad_integral(n, form, AT_ROOT, tol).value.to_fraction()
            rel = abs(closed - quad) / abs(quad)
            worst = max(worst, rel)
            c.check(rel <= rel_bound, f"at-root n={n} form ({form.a},{form.b},{form.c})")
            closed = integral_to(n, form, interior, 160).to_fraction()
            quad = quad_integral(n, form, interior, tol).value.to_fraction()
            rel = abs(closed - quad) / abs(quad)
            worst = max(worst, rel)
            c.check(rel <= rel_bound, f"interior n={n} form ({form.a},{form.b},{form.c})")
    # factor-form coefficient table rows for n <= 4 (errata applied)
    for form in (QuadraticForm(2, 7, 3), QuadraticForm(2, 3, -5)):
        a, b, cc = form.a, form.b, form.c
        rows = {
            0: (Fraction(1), Fraction(0)),
            1: (b / cc, a / cc),
            2: (3 * b**2 / (2 * cc**2) - a**2 / (2 * cc), 3 * a * b / (2 * cc**2)),
            3: (
                15 * b**3 / (6 * cc**3) - 9 * a**2 * b / (6 * cc**2),
                15 * a * b**2 / (6 * cc**3) - 4 * a**3 / (6 * cc**2),
            ),
            4: (
                105 * b**4 / (24 * cc**4)
                - 90 * a**2 * b**2 / (24 * cc**3)
                + 9 * a**4 / (24 * cc**2),
                105 * a * b**3 / (24 * cc**4) - 55 * a**3 * b / (24 * cc**3),
            ),
        }
        for n, (dc, ct) in rows.items():
            got = coeffs(n, form)
            c.check(
                (got.delta_coeff, got.constant) == (dc, ct),
                f"factor table n={n} form ({a},{b},{cc})",
            )
    elapsed = time.perf_counter() - t0
    c.check(elapsed < 60, "runtime under one minute")
    c.note(f"worst relative deviation {float(worst):.3e} <= 1e-10; {elapsed:.1f}s")
    return c.result("C9", "integrals vs quadrature oracle")


def criterion_10() -> CriterionResult:
    """Vanishing fraction: monotone truncations and tails, depth 1000, exact."""
    c = _Checks()
    cs = convergents(degenerate_cf_spec(), 1000)
    ok_dec = all(
        cs[k].p * cs[k - 1].q < cs[k - 1].p * cs[k].q for k in range(1, 1001)
    )
    ok_pos = all(cs[k].p > 0 and cs[k].q > 0 for k in range(1001))
    c.check(ok_dec, "truncations strictly decreasing to depth 1000")
    c.check(ok_pos, "truncations positive to depth 1000")
    for k in range(1, 11):
        tcs = convergents(degenerate_tail_spec(k), 1000)
        above = all(tcs[d].p > k * tcs[d].q for d in range(1001))
        dec = all(
            tcs[d].p * tcs[d - 1].q < tcs[d - 1].p * tcs[d].q for d in range(1, 1001)
        )
        c.check(above, f"tail {k} stays above {k}")
        c.check(dec, f"tail {k} strictly decreasing")
    c.note("all comparisons exact (integer cross-multiplication)")
    return c.result("C10", "vanishing fraction monotonicity")


def criterion_11() -> CriterionResult:
    """Brouncker's fraction vs 4/pi - 1 (empirical identity).

    As stated -- depth-400 value within 1e-6 -- the bound is unattainable:
    the truncation error of this fraction decays like ~0.405/depth, so at
    depth 400 it is ~1.0e-3.  That measured value is asserted here, and the
    empirical identity itself is confirmed at a depth where 1e-6 is reachable.
    """
    c = _Checks()
    target = (4 / pi_ref(256) - 1).to_fraction()
    v400 = eval_backward(brouncker_cf_spec(), 400, 160).to_fraction()
    err400 = abs(v400 - target)
    c.check(err400 <= Fraction(1, 10**6), "depth-400 within 1e-6 (as stated)")
    c.check(
        Fraction(9, 10**4) < err400 < Fraction(11, 10**4),
        "depth-400 error matches the ~1/depth analysis",
    )
    v_deep = eval_backward(brouncker_cf_spec(), 450_000, 160).to_fraction()
    err_deep = abs(v_deep - target)
    c.check(err_deep <= Fraction(1, 10**6), "empirical identity at depth 450000")
    c.note(
        f"empirical identity (not asserted by the source): depth-400 error "
        f"{float(err400):.3e}; depth-450000 error {float(err_deep):.3e} <= 1e-06"
    )
    return c.result(
        "C11",
        "Brouncker fraction empirical check",
        expected_failures=["depth-400 within 1e-6 (as stated)"],
    )


CRITERIA = [
    criterion_1,
    criterion_2,
    criterion_3,
    criterion_4,
    criterion_5,
    criterion_6,
    criterion_7,
    criterion_8,
    criterion_9,
    criterion_10,
    criterion_11,
]


def run_criterion(fn) -> CriterionResult:
    t0 = time.perf_counter()
    res = fn()
    res.seconds = time.perf_counter() - t0
    return res


# -- deep sweeps -----------------------------------------------------------------


def _deep_oracle_agreement() -> CriterionResult:
    c = _Checks()
    rng = random.Random(RNG_SEED + 2)
    tol = Fraction(1, 10**20)
    for _ in range(50):
        p = rng.randint(2, 200)
        q = rng.randint(1, p - 1)
        cf = log_of_fraction(p, q)
        got = eval_backward(cf, auto_terms(cf, tol), 160).to_fraction()
        want = ln_ref(Fraction(p, q), 224).to_fraction()
        c.check(abs(got - want) / want < Fraction(1, 10**18), f"ln({p}/{q})")
    for _ in range(50):
        n = rng.randint(2, 50)
        m = rng.randint(1, n - 1)
        cf = atan_cf_spec(n, m * m)
        got = eval_backward(cf, auto_terms(cf, tol), 160).to_fraction()
        want = atan_ref(Fraction(m, n), 224).to_fraction()
        c.check(abs(got - want) / want < Fraction(1, 10**18), f"atan({m}/{n})")
    c.note("100 randomised fractions within 1e-18 relative of the series oracles")
    return c.result("D1", "fraction values vs series oracles")


def _deep_sign_equivalence() -> CriterionResult:
    c = _Checks()
    rng = random.Random(RNG_SEED + 3)
    for _ in range(10):
        n = rng.randint(2, 30)
        m = rng.randint(1, n - 1)
        cf = log_cf_spec(n, m * m)
        alt = alternate_sign_transform(cf)
        a = convergents(cf, 30)
        b = convergents(alt, 30)
        c.check(
            all(a[k].value == b[k].value for k in range(31)),
            f"sign equivalence (m={m}, n={n})",
        )
    c.note("alternating sign transform leaves every truncation exactly equal")
    return c.result("D2", "negative-coefficient sign equivalence")


def _deep_quadrature_honesty() -> CriterionResult:
    c = _Checks()
    rng = random.Random(RNG_SEED + 4)
    for _ in range(20):
        case = rng.choice([Case.LOG, Case.TRIG])
        a = Fraction(rng.randint(1, 5))
        b = Fraction(rng.randint(1, 8))
        c_val = Fraction(rng.randint(1, 5)) if case is Case.LOG else Fraction(-rng.randint(1, 5))
        if case is Case.LOG and b**2 <= a**2 * c_val:
            continue
        form = QuadraticForm(a, b, c_val)
        n = rng.randint(0, 5)
        upper = AT_ROOT if rng.random() < 0.5 else roots(form, 128)[0].to_fraction() / 2
        tol = Fraction(1, 10**12)
        r1 = quad_integral(n, form, upper, tol)
        r2 = quad_integral(n, form, upper, tol / 2)
        c.check(
            abs(r1.value.to_fraction() - r2.value.to_fraction())
            <= r1.est_error.to_fraction(),
            f"halved tolerance moved the value beyond the estimate (n={n})",
        )
    c.note("halving the tolerance never moves a value beyond its error estimate")
    return c.result("D3", "quadrature tolerance honesty")


def deep_checks():
    return [_deep_oracle_agreement, _deep_sign_equivalence, _deep_quadrature_honesty]


def run(deep: bool = False, emit=print) -> int:
    """Run every criterion (and optionally the deep sweeps); 0 when clean."""
    results = [run_criterion(fn) for fn in CRITERIA]
    if deep:
        results += [run_criterion(fn) for fn in deep_checks()]
    width = max(len(r.cid) for r in results)
    failed = 0
    for r in results:
        mark = {"PASS": "PASS ", "XFAIL": "XFAIL", "FAIL": "FAIL ", "XPASS": "XPASS"}[r.status]
        emit(f"{r.cid:<{width}}  {mark}  {r.title}  ({r.seconds:.2f}s)")
        if r.detail:
            emit(f"{'':<{width}}         {r.detail}")
        if not r.ok:
            failed += 1
    emit(
        f"{sum(r.status == 'PASS' for r in results)} passed, "
        f"{sum(r.status == 'XFAIL' for r in results)} documented-defect, "
        f"{failed} failed"
    )
    return 0 if failed == 0 else 1
