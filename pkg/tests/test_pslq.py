"""PSLQ relation detection and closed-form rediscovery."""

import random

import pytest
from gmpy2 import mpfr, mpq

from binomseries.balls import Ball
from binomseries.closedforms import ConstFactor, ConstantMonomial
from binomseries.constants import (const_catalan, const_log, const_pi,
                                   const_sqrt, const_zeta)
from binomseries.corpus import corpus_by_id, corpus_filter
from binomseries.pslq import PrecisionError, discover_rhs, pslq

PREC = 360


def test_trivial_relation():
    r = pslq([Ball.from_rational(1, PREC), Ball.from_rational(1, PREC)])
    assert r is not None and r.coefficients == [1, -1]


def test_gosper_series_relation():
    # the pi/2-valued series against [1, pi, log 2] recovers (2, 0, -1, 0)
    from binomseries.evaluate import evaluate_series
    value, _ = evaluate_series(corpus_by_id("c-gosper"), 100)
    basis = [Ball.from_rational(1, PREC), const_pi(PREC), const_log(2, PREC)]
    r = pslq([value] + basis, precision=330)
    assert r is not None and r.coefficients == [2, 0, -1, 0]
    assert r.confidence_digits > 50


def test_no_small_relation_for_sqrt2():
    prec = 130  # about 30 digits
    r = pslq([Ball.from_rational(1, prec), const_sqrt(2, prec)],
             max_coeff_bits=24)
    assert r is None


def test_refuses_wide_balls():
    wide = Ball(mpfr("1.5"), mpfr("0.25"))
    with pytest.raises(PrecisionError):
        pslq([wide, const_pi(64)])


def test_round_trip_theorems():
    for entry in corpus_filter(status="THEOREM"):
        basis = [ConstantMonomial(mpq(1), t.factors) for t in entry.rhs.terms
                 if t.factors]
        basis.append(ConstantMonomial(mpq(1), ()))
        found = discover_rhs(entry, basis, digits=100)
        assert found is not None, entry.id
        assert found == entry.rhs, (entry.id, found.describe())


def test_log_normalization_round_trip():
    # log(3/4) discovered over prime logs folds back to the claimed form
    entry = corpus_by_id("t-m192")
    basis = [ConstantMonomial(mpq(1), (ConstFactor("LOG", mpq(2), 1),)),
             ConstantMonomial(mpq(1), (ConstFactor("LOG", mpq(3), 1),)),
             ConstantMonomial(mpq(1), ())]
    found = discover_rhs(entry, basis, digits=100)
    assert found is not None
    assert found == entry.rhs  # canonical comparison over prime logs


def test_stability_under_precision_increase():
    entry = corpus_by_id("t-98")
    basis = [ConstantMonomial(mpq(1), t.factors) for t in entry.rhs.terms]
    basis.append(ConstantMonomial(mpq(1), ()))
    a = discover_rhs(entry, basis, digits=100)
    b = discover_rhs(entry, basis, digits=120)
    assert a == b == entry.rhs


def test_wrong_basis_returns_none():
    entry = corpus_by_id("t-8")
    basis = [ConstantMonomial(mpq(1), (ConstFactor("ZETA", 3, 1),)),
             ConstantMonomial(mpq(1), ())]
    assert discover_rhs(entry, basis, digits=60) is None


def test_no_false_positives_random_bases():
    prec = 260  # 60+ digits
    pool = [const_sqrt(2, prec), const_sqrt(3, prec), const_sqrt(5, prec),
            const_sqrt(7, prec), const_sqrt(11, prec), const_pi(prec),
            const_zeta(3, prec), const_catalan(prec), const_log(2, prec),
            const_log(3, prec), const_log(5, prec), const_zeta(5, prec)]
    rng = random.Random(2718)
    for _ in range(20):
        values = rng.sample(pool, 4)
        assert pslq(values, max_coeff_bits=28) is None
