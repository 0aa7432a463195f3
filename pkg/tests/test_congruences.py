"""Congruence lab: exact sums, symbolic right-hand sides, scans."""

import dataclasses

import pytest
from gmpy2 import mpq

from binomseries.congruences import (AdmissibilityError, Checkpoint,
                                     check_congruence,
                                     check_integer_divisibility,
                                     check_padic_integrality, congruence_scan,
                                     eval_rhs_symbolic, sum_range_exact)
from binomseries.corpus import corpus_by_id, corpus_filter
from binomseries.exact import binomial, harmonic, primes_in
from binomseries.model import (CongruenceClaim, PolyK, PrimeConstraint,
                               RhsTerm, SummandSpec)


def test_sum_range_exact_direct():
    claim = corpus_by_id("cg-1681-php")
    direct = sum(mpq((11 * k * k + 8 * k + 1) * binomial(4 * k, k),
                     (3 * k + 1) * (3 * k + 2) * 16**k) for k in range(1, 5))
    assert sum_range_exact(claim.summand, 5, claim.range_kind) == direct


def test_rhs_symbolic_examples():
    claim = corpus_by_id("cg-1681-php")
    # (21/4) * 5 * H_4 = (21/4)*5*(25/12)
    assert eval_rhs_symbolic(claim.rhs_terms, 5) == mpq(21, 4) * 5 * harmonic(4)
    qp_claim = corpus_by_id("cg-16k-qp2")
    # -10 q_3(2) = -10
    assert eval_rhs_symbolic(qp_claim.rhs_terms[:1], 3) == -10


def test_congruence_scan_5_to_31():
    claim = corpus_by_id("cg-1681-php")
    results = congruence_scan(claim, primes_in(5, 31))
    assert all(r.passed for r in results)
    assert all(r.achieved >= 4 for r in results)


def test_admissibility():
    claim = corpus_by_id("cg-4096h3")  # p > 3, p != 7
    with pytest.raises(AdmissibilityError):
        check_congruence(claim, 7)
    with pytest.raises(AdmissibilityError):
        check_congruence(claim, 3)
    results = congruence_scan(claim, [5, 7, 11])
    assert [r.skipped != "" for r in results] == [False, True, False]
    assert all(r.passed for r in results)


def test_seeded_wrong_rhs_fails():
    claim = corpus_by_id("cg-1681-php")
    bad_terms = (RhsTerm(mpq(22, 4), claim.rhs_terms[0].factors),)
    bad = dataclasses.replace(claim, rhs_terms=bad_terms)
    result = check_congruence(bad, 7)
    assert not result.passed and result.achieved < result.required


def test_wolstenholme_control_claim():
    # H_{p-1} = 0 (mod p^2) as a CongruenceClaim: validates the plumbing
    claim = CongruenceClaim(
        id="control-wolstenholme", section="-", source_anchor="-",
        summand=SummandSpec(poly_den=PolyK([((mpq(0), mpq(1)), 1)])),
        range_kind="1..p-1", rhs_terms=(), modulus_exponent=2,
        prime=PrimeConstraint(5))
    for p in primes_in(5, 97):
        assert check_congruence(claim, p).passed


def test_integrality_1681():
    claim = corpus_by_id("ig-1681-pn3")
    for p in (5, 7):
        for n in (1, 2, 3):
            result = check_padic_integrality(claim, p, n)
            assert result.passed, (p, n)


def test_integrality_with_legendre_factor():
    claim = corpus_by_id("ig-103-pn2")
    for p, n in ((2, 1), (3, 3), (5, 2), (7, 1)):
        assert check_padic_integrality(claim, p, n).passed


def test_integer_divisibility():
    claim = corpus_by_id("ig-145-div")
    # n = 1: sum is 18, divisor 6*1*1*C(3,1) = 18
    first = claim.summand.eval(0)
    assert first == 18
    assert 6 * 1 * 1 * binomial(3, 1) == 18
    for n in range(1, 51):
        assert check_integer_divisibility(claim, n).passed, n


def test_cross_validation_with_series():
    # the congruence summand of cg-1681-php is a truncation of t-16-3k12
    series = corpus_by_id("t-16-3k12")
    claim = corpus_by_id("cg-1681-php")
    p = 11
    from_series = sum(series.term(k) for k in range(1, p))
    assert sum_range_exact(claim.summand, p, claim.range_kind) == from_series


def test_checkpoint_resume(tmp_path):
    path = tmp_path / "scan.ckpt"
    claim = corpus_by_id("cg-1681-php")
    first = congruence_scan(claim, [5, 7], Checkpoint(path))
    assert len(first) == 2
    again = congruence_scan(claim, [5, 7, 11], Checkpoint(path))
    assert [r.p for r in again] == [11]


def test_half_range_resolution_in_claims():
    hi = corpus_by_id("cg-5k1-hk-hi")
    total = sum_range_exact(hi.summand, 7, hi.range_kind)
    direct = sum(hi.summand.eval(k) for k in (4, 5, 6))
    assert total == direct


def test_all_bundled_claims_at_two_primes():
    for claim in corpus_filter(kind="congruence"):
        primes = [p for p in primes_in(claim.prime.min_p, 60)
                  if claim.prime.admits(p)][:2]
        for p in primes:
            assert check_congruence(claim, p).passed, (claim.id, p)
