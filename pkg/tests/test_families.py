"""Tests for the concrete fraction families, the difference law, the vanishing
fraction, and term-count selection.

Closed-form convergent tables asserted here (exact pair equality):

    log family   k:  1      2                3                        4
      p:             2m     6mn              30mn^2 - 8m^3            210mn^3 - 110m^3 n
      q:             n      3n^2 - m^2       15n^3 - 9m^2 n           105n^4 - 90m^2 n^2 + 9m^4
      p (k=5):       1890mn^4 - 1470m^3 n^2 + 128m^5
      q (k=5):       945n^5 - 1050m^2 n^3 + 225m^4 n

    atan family  k:  1      2                3                        4
      p:             m      3mn              15mn^2 + 4m^3            105mn^3 + 55m^3 n
      q:             n      3n^2 + m^2       15n^3 + 9m^2 n           105n^4 + 90m^2 n^2 + 9m^4

Both were rederived with the forward recurrence (relation scales
(2k-1)n, -+(k-1)^2 m^2), which also pins the corrected entries of the errata
table.
"""

import random
from fractions import Fraction

import pytest

from quadcf import (
    ConvergenceError,
    DomainError,
    FamilyKind,
    HPFloat,
    QuadraticForm,
    atan_cf_spec,
    atan_ref,
    auto_terms,
    brouncker_cf_spec,
    completed_cf_value,
    convergents,
    degenerate_cf_spec,
    degenerate_tail,
    degenerate_tail_spec,
    difference_closed_form,
    eval_backward,
    integral_at_root,
    ln_ref,
    log_cf_spec,
    log_of_fraction,
    log_of_integer,
    pi_cf,
    pi_ref,
    ratio_cf_spec,
    ulp_distance,
)

RNG_SEED = 606


# --- builders and preconditions -------------------------------------------------


def test_log_term_pattern_all_integer_case():
    # n=2, m=1 gives the all-integer pattern 2/(2 - 1/(6 - 4/(10 - 9/(14 ...))))
    cf = log_cf_spec(2, 1)
    assert cf.beta0 == 0
    assert [cf.term(k) for k in range(1, 5)] == [
        (2, 2),
        (-1, 6),
        (-4, 10),
        (-9, 14),
    ]


def test_log_rejects_noncontractive():
    with pytest.raises(DomainError, match="infinite or complex"):
        log_cf_spec(2, 4)  # msq == n^2
    with pytest.raises(DomainError, match="infinite or complex"):
        log_cf_spec(2, 5)  # msq > n^2
    with pytest.raises(DomainError):
        log_cf_spec(0, 1)
    with pytest.raises(DomainError):
        log_cf_spec(2, 0)


def test_log_of_integer_delegation():
    # i=2 -> n=3, m=1
    assert convergents(log_of_integer(2), 3) == convergents(log_cf_spec(3, 1), 3)
    with pytest.raises(DomainError):
        log_of_integer(1)


def test_log_of_fraction_delegation_and_bounds():
    assert convergents(log_of_fraction(3, 2), 3) == convergents(log_cf_spec(5, 1), 3)
    with pytest.raises(DomainError):
        log_of_fraction(2, 2)
    with pytest.raises(DomainError):
        log_of_fraction(2, 3)


def test_rational_square_root_is_folded():
    # msq = 9/4 is the square of 3/2: the front factor stays trivial
    cf = log_cf_spec(4, Fraction(9, 4))
    assert cf.front.is_one
    assert cf.term(1)[0] == 2 * Fraction(3, 2)
    # msq = 3 is not a rational square: stripped terms, deferred sqrt
    cf3 = atan_cf_spec(3, 3)
    assert not cf3.front.is_one
    assert cf3.front.sqrt_of == 3
    assert cf3.term(1)[0] == 1


# --- values against the reference evaluators -------------------------------------


def test_log_of_integer_three():
    cf = log_of_integer(3)  # n=4, m=2
    d3 = eval_backward(cf, 3, 128)
    assert abs(float(d3) - 1.0980) < 5e-5
    d40 = eval_backward(cf, 40, 128)
    assert abs(d40.to_fraction() - ln_ref(3, 192).to_fraction()) < Fraction(1, 10**12)


def test_log_of_integer_ten_converges():
    got = eval_backward(log_of_integer(10), 60, 128)
    want = ln_ref(10, 192)
    assert abs(got.to_fraction() - want.to_fraction()) < Fraction(1, 10**12)


def test_log_of_fraction_three_halves_convergents():
    cs = convergents(log_of_fraction(3, 2), 3)
    assert cs[1].value == Fraction(2, 5)
    assert (cs[2].p, cs[2].q) == (30, 74)
    assert (cs[3].p, cs[3].q) == (742, 1830)


def test_atan_first_convergents():
    cs = convergents(atan_cf_spec(1, 1), 3)
    assert [c.value for c in cs[1:]] == [1, Fraction(3, 4), Fraction(19, 24)]


def test_atan_sqrt3_stripped_convergents():
    cs = convergents(atan_cf_spec(3, 3), 3)
    assert (cs[1].p, cs[1].q) == (1, 3)
    assert (cs[2].p, cs[2].q) == (9, 30)
    assert (cs[3].p, cs[3].q) == (147, 486)
    assert cs[2].value == Fraction(3, 10)
    assert cs[3].value == Fraction(49, 162)


def test_atan_sqrt3_value_is_pi_over_six():
    got = eval_backward(atan_cf_spec(3, 3), 50, 128)
    want = pi_ref(192) / 6
    assert abs(got.to_fraction() - want.to_fraction()) < Fraction(1, 10**12)


def test_atan_depth_one_tends_to_zero():
    # depth-1 value is m/n, the arctan(0) limit direction as n grows
    for n in (10, 1000, 10**6):
        assert convergents(atan_cf_spec(n, 1), 1)[1].value == Fraction(1, n)


# --- ratio and completed fractions -----------------------------------------------


def test_ratio_head_terms():
    form = QuadraticForm(1, 2, 1)
    cf = ratio_cf_spec(1, form)
    assert cf.beta0 == 3 * form.b
    assert [cf.term(k) for k in (1, 2, 3)] == [
        (-4, 10),
        (-9, 14),
        (-16, 18),
    ]


def test_ratio_nexp_one_closed_value():
    # value = a^2 c delta / (b delta - a); for (1,1,-1) that is
    # (pi/4)/(1 - pi/4) = 3.65979...
    form = QuadraticForm(1, 1, -1)
    d = pi_ref(192) / 4
    want = (form.a**2 * form.c * d) / (form.b * d - form.a)
    got = eval_backward(ratio_cf_spec(1, form), 200, 128)
    assert abs(got.to_fraction() - want.to_fraction()) < Fraction(1, 10**15)
    assert abs(float(got) - 3.65979) < 5e-6


def test_ratio_matches_integral_ratio():
    form = QuadraticForm(1, 2, 1)
    got = eval_backward(ratio_cf_spec(2, form), 200, 128)
    want = 2 * form.a**2 * integral_at_root(1, form, 160) / integral_at_root(2, form, 160)
    assert abs(got.to_fraction() - want.to_fraction()) < Fraction(1, 10**15)


def test_ratio_validates_exponent():
    with pytest.raises(DomainError):
        ratio_cf_spec(0, QuadraticForm(1, 2, 1))


def test_completed_values():
    got = completed_cf_value(QuadraticForm(1, 1, -1), 200, 128)
    want = 4 / pi_ref(192)
    assert abs(got.to_fraction() - want.to_fraction()) < Fraction(1, 10**15)
    got = completed_cf_value(QuadraticForm(1, 2, 1), 60, 128)
    want = 2 / ln_ref(3, 192)
    assert abs(got.to_fraction() - want.to_fraction()) < Fraction(1, 10**15)


def test_completed_boundary_form_rejected():
    # b = a*sqrt(c) collapses to the vanishing fraction and is not a valid form
    with pytest.raises(DomainError, match="degenerate"):
        QuadraticForm(1, 1, 1)


# --- Brouncker ------------------------------------------------------------------


def test_brouncker_depth_one():
    assert convergents(brouncker_cf_spec(), 1)[1].value == Fraction(1, 2)


def test_brouncker_term_pattern():
    cf = brouncker_cf_spec()
    assert [cf.term(k)[0] for k in range(1, 6)] == [1, 9, 25, 49, 81]
    assert all(cf.term(k)[1] == 2 for k in range(1, 6))


def test_brouncker_convergents_bracket_limit():
    cf = brouncker_cf_spec()
    cs = convergents(cf, 100)
    target = (4 / pi_ref(256)).to_fraction() - 1
    for k in range(1, 100):
        v = cs[k].value
        assert v > 0
        if k % 2 == 0:
            assert v < target < cs[k + 1].value
        else:
            assert v > target > cs[k + 1].value


def test_brouncker_slow_convergence_scale():
    # the depth-400 truncation still sits ~1e-3 away from 4/pi - 1
    got = eval_backward(brouncker_cf_spec(), 400, 128)
    target = 4 / pi_ref(192) - 1
    err = abs(got.to_fraction() - target.to_fraction())
    assert Fraction(1, 10**3) < err < Fraction(2, 10**3)


# --- vanishing fraction and its tails --------------------------------------------


def test_degenerate_first_truncations():
    cs = convergents(degenerate_cf_spec(), 2)
    assert cs[1].value == Fraction(2, 3)
    assert cs[2].value == Fraction(6, 11)


def test_degenerate_monotone_positive_to_depth_1000():
    cs = convergents(degenerate_cf_spec(), 1000)
    for k in range(1, 1001):
        assert cs[k].q > 0
        assert cs[k].p > 0
        # strictly decreasing: p_k/q_k < p_{k-1}/q_{k-1}
        assert cs[k].p * cs[k - 1].q < cs[k - 1].p * cs[k].q


def test_degenerate_tail_hand_values():
    assert float(degenerate_tail(1, 1)) == pytest.approx(2.2, abs=1e-12)
    assert ulp_distance(degenerate_tail(2, 1), HPFloat(Fraction(26, 7), 128)) <= 4
    assert degenerate_tail(4, 0) == 9


def test_degenerate_tails_decrease_and_stay_above_k():
    for k in range(1, 11):
        cs = convergents(degenerate_tail_spec(k), 1000)
        prev = None
        for d in range(1001):
            v_num, v_den = cs[d].p, cs[d].q
            assert v_den > 0
            assert v_num > k * v_den  # T_k(d) > k
            if prev is not None:
                pn, pd = prev
                assert v_num * pd < pn * v_den  # strictly decreasing
            prev = (v_num, v_den)


def test_degenerate_tail_backward_matches_forward():
    for k, depth in ((1, 7), (3, 20), (10, 150)):
        exact = convergents(degenerate_tail_spec(k), depth)[depth].value
        got = degenerate_tail(k, depth, 128)
        assert ulp_distance(got, HPFloat(exact, 128)) <= 4


# --- difference law ---------------------------------------------------------------


def test_difference_hand_values_log():
    assert difference_closed_form(1, 2, 1, FamilyKind.LOG_NM) == 1  # 2m/n
    assert difference_closed_form(2, 2, 1, FamilyKind.LOG_NM) == Fraction(1, 11)
    assert difference_closed_form(3, 2, 1, FamilyKind.LOG_NM) == Fraction(4, 561)


def test_difference_hand_values_atan():
    assert difference_closed_form(1, 1, 1, FamilyKind.ATAN_NM) == 1
    assert difference_closed_form(2, 1, 1, FamilyKind.ATAN_NM) == Fraction(-1, 4)
    assert difference_closed_form(3, 1, 1, FamilyKind.ATAN_NM) == Fraction(1, 24)


@pytest.mark.parametrize("kind", [FamilyKind.LOG_NM, FamilyKind.ATAN_NM])
def test_difference_matches_exact_convergents(kind):
    rng = random.Random(RNG_SEED)
    for _ in range(20):
        n = rng.randint(2, 30)
        m = rng.randint(1, n - 1) if kind is FamilyKind.LOG_NM else rng.randint(1, 30)
        cf = (
            log_cf_spec(n, m * m)
            if kind is FamilyKind.LOG_NM
            else atan_cf_spec(n, m * m)
        )
        cs = convergents(cf, 20)
        for k in range(1, 21):
            want = cs[k].value - cs[k - 1].value
            got = difference_closed_form(k, n, m * m, kind)
            assert got == want
            if kind is FamilyKind.LOG_NM:
                assert got > 0
            else:
                assert (got > 0) == (k % 2 == 1)


def test_difference_rejects_other_kinds():
    with pytest.raises(DomainError):
        difference_closed_form(2, 2, 1, FamilyKind.BROUNCKER)


# --- closed-form convergent tables ------------------------------------------------


def _log_table(m, n):
    return [
        (2 * m, n),
        (6 * m * n, 3 * n**2 - m**2),
        (30 * m * n**2 - 8 * m**3, 15 * n**3 - 9 * m**2 * n),
        (210 * m * n**3 - 110 * m**3 * n, 105 * n**4 - 90 * m**2 * n**2 + 9 * m**4),
        (
            1890 * m * n**4 - 1470 * m**3 * n**2 + 128 * m**5,
            945 * n**5 - 1050 * m**2 * n**3 + 225 * m**4 * n,
        ),
    ]


def _atan_table(m, n):
    return [
        (m, n),
        (3 * m * n, 3 * n**2 + m**2),
        (15 * m * n**2 + 4 * m**3, 15 * n**3 + 9 * m**2 * n),
        (105 * m * n**3 + 55 * m**3 * n, 105 * n**4 + 90 * m**2 * n**2 + 9 * m**4),
    ]


def test_log_table_law_randomised():
    rng = random.Random(RNG_SEED + 1)
    for _ in range(20):
        n = rng.randint(2, 40)
        m = rng.randint(1, n - 1)
        cs = convergents(log_cf_spec(n, m * m), 5)
        for k, (pn, qn) in enumerate(_log_table(m, n), start=1):
            assert (cs[k].p, cs[k].q) == (pn, qn)


def test_atan_table_law_randomised():
    rng = random.Random(RNG_SEED + 2)
    for _ in range(20):
        n = rng.randint(1, 40)
        m = rng.randint(1, 40)
        cs = convergents(atan_cf_spec(n, m * m), 4)
        for k, (pn, qn) in enumerate(_atan_table(m, n), start=1):
            assert (cs[k].p, cs[k].q) == (pn, qn)


# --- term-count selection ----------------------------------------------------------


def test_auto_terms_post_condition():
    cf = log_of_fraction(3, 2)  # m=1, n=5
    tol = Fraction(1, 10**6)
    k = auto_terms(cf, tol)
    # smallest k whose next closed-form increment is below tol
    assert abs(difference_closed_form(k + 1, 5, 1, FamilyKind.LOG_NM)) < tol
    assert abs(difference_closed_form(k, 5, 1, FamilyKind.LOG_NM)) >= tol
    # a posteriori: one more term moves the value by less than tol
    a = eval_backward(cf, k, 128).to_fraction()
    b = eval_backward(cf, k + 1, 128).to_fraction()
    assert abs(a - b) < tol
    # and the truncation itself is already within tol of the limit here
    assert abs(a - ln_ref(Fraction(3, 2), 192).to_fraction()) < tol


def test_auto_terms_small_example_value():
    # m=1, n=5: increments are 6.2e-7 (k=4) and 6.4e-9 (k=5), so k=3 is the
    # smallest truncation whose next increment is below 1e-6
    assert auto_terms(log_of_fraction(3, 2), Fraction(1, 10**6)) == 3
    assert abs(
        difference_closed_form(5, 5, 1, FamilyKind.LOG_NM)
    ) < Fraction(1, 10**6)


def test_auto_terms_huge_tolerance():
    assert auto_terms(log_of_fraction(3, 2), Fraction(10)) == 1


def test_auto_terms_requires_square_family():
    with pytest.raises(DomainError):
        auto_terms(brouncker_cf_spec(), Fraction(1, 100))
    with pytest.raises(DomainError):
        auto_terms(degenerate_cf_spec(), Fraction(1, 100))


def test_auto_terms_with_irrational_front():
    cf = atan_cf_spec(3, 3)
    tol = Fraction(1, 10**10)
    k = auto_terms(cf, tol)
    a = eval_backward(cf, k, 160).to_fraction()
    assert abs(a - (pi_ref(256) / 6).to_fraction()) < tol


# --- oracle agreement sweeps --------------------------------------------------------


def test_log_family_against_oracle_sweep():
    rng = random.Random(RNG_SEED + 3)
    tol = Fraction(1, 10**20)
    for _ in range(50):
        p = rng.randint(2, 200)
        q = rng.randint(1, p - 1)
        cf = log_of_fraction(p, q)
        depth = auto_terms(cf, tol)
        got = eval_backward(cf, depth, 160).to_fraction()
        want = ln_ref(Fraction(p, q), 224).to_fraction()
        assert abs(got - want) / want < Fraction(1, 10**18)


def test_atan_family_against_oracle_sweep():
    rng = random.Random(RNG_SEED + 4)
    tol = Fraction(1, 10**20)
    for _ in range(50):
        n = rng.randint(2, 50)
        m = rng.randint(1, n - 1)
        cf = atan_cf_spec(n, m * m)
        depth = auto_terms(cf, tol)
        got = eval_backward(cf, depth, 160).to_fraction()
        want = atan_ref(Fraction(m, n), 224).to_fraction()
        assert abs(got - want) / want < Fraction(1, 10**18)


# --- pi evaluators -------------------------------------------------------------------


def test_machin_split_identity():
    tol = Fraction(1, 10**12)
    total = (
        eval_backward(atan_cf_spec(2, 1), 40, 128).to_fraction()
        + eval_backward(atan_cf_spec(3, 1), 40, 128).to_fraction()
    )
    assert abs(total - (pi_ref(192) / 4).to_fraction()) < tol


@pytest.mark.parametrize("method", ["atan11", "sqrt3", "machin-split"])
def test_pi_methods_meet_tolerance(method):
    tol = Fraction(1, 10**12)
    est = pi_cf(method, prec=128, tol=tol)
    assert abs(est.value.to_fraction() - pi_ref(192).to_fraction()) < tol


def test_pi_brouncker_default_depth():
    est = pi_cf("brouncker")
    assert est.depth == 400
    assert abs(est.value.to_fraction() - pi_ref(192).to_fraction()) < Fraction(3, 10**3)


def test_pi_brouncker_tolerance_capped():
    with pytest.raises(ConvergenceError):
        pi_cf("brouncker", tol=Fraction(1, 10**9))


def test_pi_unknown_method():
    with pytest.raises(DomainError):
        pi_cf("leibniz")
