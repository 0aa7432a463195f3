"""Telescoping families: instances, symbolic induction steps, limits."""

import dataclasses
import random

from gmpy2 import mpq

from binomseries.telescopes import (FAMILIES, closed_form_partial, family_by_tag,
                                    induction_residual, partial_sum_exact,
                                    verify_induction_step, verify_instances,
                                    verify_shift_identity)
from binomseries.telescopes import _bp

M_SAMPLES = [mpq(1), mpq(-8), mpq(1, 8), mpq(8, 9), mpq(-2), mpq(-24),
             mpq(-192), mpq(16), mpq(3)]


def test_single_term_hand_values():
    assert partial_sum_exact(family_by_tag("L21_K"), 1, 1) == -9
    assert partial_sum_exact(family_by_tag("L21_3K2"), 1, 1) == mpq(9, 4)
    assert closed_form_partial(family_by_tag("L21_3K2"), 1, 1) == mpq(9, 4)
    assert closed_form_partial(family_by_tag("L21_K"), 1, 1) == 6 - mpq(3 * 4 * 5, 4)
    t13 = family_by_tag("T13_ODD")
    assert partial_sum_exact(t13, 16, 0) == -1
    assert closed_form_partial(t13, 16, 0) == -1
    assert closed_form_partial(family_by_tag("L36_3K2"), 16, 0) == 12


def test_instances_all_families():
    for fam in FAMILIES:
        report = verify_instances(fam, M_SAMPLES, 60)
        assert report.passed, (fam.tag, report.first_failure)


def test_instances_t13_deep():
    report = verify_instances(family_by_tag("T13_ODD"), [mpq(16)], 200)
    assert report.passed


def test_induction_step_all_families():
    for fam in FAMILIES:
        report = verify_induction_step(fam)
        assert report.base_ok and report.step_ok, fam.tag
        assert report.residual_terms == 0


def test_mutated_family_detected():
    # swap one sign: nonzero residual, failing instance at small n
    fam = family_by_tag("L21_3K2")
    bad = dataclasses.replace(
        fam, term_num=_bp(mn3=256, n3=-27, mn2=-384, n2=-27, mn=176, n=-6, m=-24))
    assert not induction_residual(bad).is_zero()
    report = verify_instances(bad, [mpq(1)], 5)
    assert not report.passed and report.first_failure[1] <= 2


def test_shift_identity():
    report = verify_shift_identity(500)
    assert report.numeric_ok and report.symbolic_ok
    # hand values from the defining ratio
    from binomseries.exact import binomial
    assert mpq(3 * binomial(4, 1), 1 * 3 * 1) == 4 == mpq(8 * binomial(0, 0), 1 * 2) * 1
    assert mpq(6 * binomial(8, 2), 3 * 7 * 5) == mpq(8, 5) == mpq(8 * binomial(4, 1), 4 * 5)


def test_closed_form_converges_to_limit():
    # |closed(m, n) - limit| decreases monotonically beyond a start point
    # for random admissible m
    rng = random.Random(11)
    for fam in FAMILIES:
        if fam.fixed_m is not None:
            samples = [fam.fixed_m]
        else:
            # stay a factor 2 above the admissibility threshold so the
            # geometric decay dominates the polynomial factors by n = 12
            samples = []
            while len(samples) < 20:
                m = mpq(rng.randint(-600, 600), rng.randint(1, 12))
                if abs(m) > 2 * fam.min_abs_m:
                    samples.append(m)
        for m in samples:
            limit = fam.limit_value(m)
            gaps = [abs(closed_form_partial(fam, m, n) - limit)
                    for n in range(max(2, fam.start), 40)]
            n0 = 12
            assert all(a > b for a, b in zip(gaps[n0:], gaps[n0 + 1:])), \
                (fam.tag, m)
            assert gaps[-1] < gaps[0]


def test_induction_implies_instances_crosscheck():
    # consistency: the symbolic step passing implies every tested instance
    for fam in FAMILIES:
        assert verify_induction_step(fam).passed
        assert verify_instances(fam, [mpq(5, 7), mpq(-31)], 25).passed
