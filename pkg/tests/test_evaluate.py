"""Series evaluation: oracle equivalence, tail soundness, precision scaling."""

import dataclasses

import pytest
from gmpy2 import mpq

from binomseries.closedforms import ClosedForm, ConstantMonomial
from binomseries.corpus import corpus_by_id, corpus_filter
from binomseries.evaluate import (TailBoundError, batch_verify, evaluate_series,
                                  exact_partial_sum, precision_for_digits,
                                  verify_identity)
from binomseries.evaluate import _rigorous_ratio_bound, _sum_terms


def test_exact_oracle_equivalence():
    # exact-rational partial sums agree with the ball path within radii
    for claim in corpus_filter(kind="series"):
        if claim.summand.has_harmonics():
            continue
        n_terms = 200
        exact = exact_partial_sum(claim, n_terms)
        total, _ = _sum_terms(claim, claim.start_index + n_terms - 1,
                              precision_for_digits(40))
        assert total.contains_rational(exact), claim.id


def test_rigorous_mode_for_every_pure_summand():
    for claim in corpus_filter(kind="series"):
        if claim.summand.has_harmonics():
            continue
        value, cert = evaluate_series(claim, 25)
        assert cert.mode == "RIGOROUS", claim.id
        assert cert.ratio_bound < 1


def test_heuristic_entries_are_labeled():
    claim = corpus_by_id("c-harm4096")
    _, cert = evaluate_series(claim, 25)
    assert cert.mode == "HEURISTIC"
    assert "heuristic" in cert.justification.lower()
    with pytest.raises(TailBoundError):
        evaluate_series(claim, 25, allow_heuristic=False)


def test_tail_soundness_doubling():
    # extending the cutoff to 2N moves the midpoint by less than the
    # claimed tail bound at N, for D = 30 across the corpus
    for claim in corpus_filter(kind="series"):
        value, cert = evaluate_series(claim, 30)
        prec = precision_for_digits(30)
        double, _ = _sum_terms(claim, 2 * cert.cutoff, prec)
        shift = abs(mpq(value.mid) - mpq(double.mid))
        assert shift <= mpq(cert.tail_bound) + mpq(value.rad) + mpq(double.rad), \
            claim.id


def test_precision_scaling():
    # D = 30 and D = 60 agree to >= 27 digits on every entry
    for claim in corpus_filter(kind="series"):
        lo, _ = evaluate_series(claim, 30)
        hi, _ = evaluate_series(claim, 60)
        scale = max(mpq(1), abs(mpq(hi.mid)))
        diff = abs(mpq(lo.mid) - mpq(hi.mid))
        assert diff <= scale / mpq(10) ** 27, claim.id


def test_verify_sensitivity_to_corrupted_rhs():
    claim = corpus_by_id("t-8")
    good = verify_identity(claim, 40)
    assert good.passed and good.digits_agreed >= 37
    corrupted = ClosedForm([ConstantMonomial(
        mpq(3, 2) + mpq(1, 10**10), claim.rhs.terms[0].factors)])
    bad = dataclasses.replace(claim, rhs=corrupted)
    report = verify_identity(bad, 40)
    assert not report.passed
    assert report.digits_agreed < 12


def test_batch_ordering_and_parallel_determinism():
    thms = corpus_filter(status="THEOREM")
    serial = batch_verify(thms, 30)
    assert [r.id for r in serial] == sorted(r.id for r in serial)
    parallel = batch_verify(thms, 30, parallel=4)
    assert [r.id for r in parallel] == [r.id for r in serial]
    for a, b in zip(serial, parallel):
        assert mpq(a.lhs.mid) == mpq(b.lhs.mid)
        assert a.digits_agreed == b.digits_agreed
    assert all(r.passed for r in serial)


def test_empty_batch():
    assert batch_verify([], 30) == []


def test_width_contract():
    for digits in (30, 50):
        value, _ = evaluate_series(corpus_by_id("t-98"), digits)
        scale = max(mpq(1), abs(mpq(value.mid)))
        assert 2 * mpq(value.rad) <= scale / mpq(10) ** (digits - 1)


def test_ratio_bound_certificate_examples():
    q, reason = _rigorous_ratio_bound(corpus_by_id("t-8"), 900)
    assert mpq(27, 32) <= q < 1
    assert "monotone" in reason


def test_lemma_grade_conjectures_at_sixty_digits():
    # the telescoping-provable remark identities must sustain 60 digits
    entries = corpus_filter(status="LEMMA_GRADE_CONJECTURE")
    assert len(entries) == 9
    for entry in entries:
        report = verify_identity(entry, 60)
        assert report.passed and report.digits_agreed >= 57, entry.id
