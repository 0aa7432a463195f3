"""Acceptance criteria, one test per criterion, at the stated tolerances.

Run with ``pytest tests/test_acceptance.py -v -s`` to see one line per
criterion.
"""

import random
import time

from gmpy2 import mpq, mpz

from binomseries.balls import Ball
from binomseries.congruences import (check_congruence,
                                     check_integer_divisibility,
                                     check_padic_integrality)
from binomseries.constants import const_zeta, hurwitz_zeta
from binomseries.corpus import corpus_by_id, corpus_filter
from binomseries.evaluate import evaluate_series, verify_identity
from binomseries.exact import (bernoulli_number, binomial, euler_number,
                               euler_poly, harmonic, padic_valuation,
                               primes_in)
from binomseries.pslq import discover_rhs
from binomseries.closedforms import ConstantMonomial


def _report(criterion: str, ok: bool, detail: str = "") -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] acceptance {criterion}"
    if detail:
        line += f"  ({detail})"
    print(line)
    assert ok, line


def test_criterion_1_telescoping():
    from binomseries.telescopes import (FAMILIES, verify_induction_step,
                                        verify_instances)
    t0 = time.perf_counter()
    m_samples = [mpq(x) for x in ("1 -8 1/8 8/9 -2 -24 -192 16 3".split())]
    ok = True
    for fam in FAMILIES:
        step = verify_induction_step(fam)
        inst = verify_instances(fam, m_samples, 60)
        ok = ok and step.passed and step.residual_terms == 0 and inst.passed
    elapsed = time.perf_counter() - t0
    _report("1: telescoping families", ok and elapsed < 10,
            f"8 families, {elapsed:.2f}s < 10s")


THEOREM_GRADE_IDS = [
    "t-98", "t-8", "t-m2", "t-m8", "t-m24", "t-m192",
    "t-16-k1", "t-16-3k12", "t-16-odd",
    "l-12635", "l-8-4k1", "l-8-k",
    "l-m8-4k1", "l-m8-k",
    "l-m2-4k1", "l-m24-4k1", "l-m192-4k1",
    "l-m2-k", "l-m24-k", "l-m192-k",
    "l-16-m5", "l-m8-2k1", "l-m8-4k3",
    "c-gosper", "c-r4096", "c-zeta5", "c-harm4096",
]


def test_criterion_2_theorem_grade_values():
    ok = True
    slow = []
    for cid in THEOREM_GRADE_IDS:
        report = verify_identity(corpus_by_id(cid), 60)
        good = report.passed and report.digits_agreed >= 57 \
            and report.seconds < 5
        if not good:
            slow.append((cid, report.digits_agreed, report.seconds))
        ok = ok and good
    _report("2: theorem-grade reproduction at 60 digits", ok,
            f"{len(THEOREM_GRADE_IDS)} series" + (f"; failures {slow}" if slow else ""))


def test_criterion_3_conjecture_sweep():
    t0 = time.perf_counter()
    entries = corpus_filter(section="4", kind="series") + \
        corpus_filter(section="5", kind="series")
    assert any(e.id == "j5-4096h4" for e in entries)
    failures = []
    heuristic = 0
    for entry in entries:
        report = verify_identity(entry, 40)
        if report.tail and report.tail.mode == "HEURISTIC":
            heuristic += 1
        if not (report.passed and report.digits_agreed >= 37):
            failures.append((entry.id, report.digits_agreed, report.error))
    # the abstract's series must be present and pass
    abstract = verify_identity(corpus_by_id("j5-4096h4"), 40)
    elapsed = time.perf_counter() - t0
    ok = not failures and abstract.passed and elapsed < 900
    _report("3: conjecture evidence sweep at 40 digits", ok,
            f"{len(entries)} series, {heuristic} heuristic tails, "
            f"{elapsed:.1f}s < 900s" + (f"; failures {failures}" if failures else ""))


def test_criterion_4_congruence_evidence():
    t0 = time.perf_counter()
    ok = True
    detail = []

    for cid in ("cg-16k-qp2", "cg-1681-php"):
        claim = corpus_by_id(cid)
        for p in primes_in(5, 31):
            if claim.prime.admits(p):
                result = check_congruence(claim, p)
                ok = ok and result.passed

    # at least six further section-5 claims, with the required alphabet
    extra_ids = ["cg-103-b13", "cg-4k1-b13", "cg-8k3-b13", "cg-5k1-hk2",
                 "cg-28k-full", "cg-8k-qp4", "cg-360-half", "cg-5k1-hk-lo"]
    has_b13 = has_euler = False
    for cid in extra_ids:
        claim = corpus_by_id(cid)
        assert claim.section == "5"
        syms = {f.sym for t in claim.rhs_terms for f in t.factors}
        has_b13 = has_b13 or "bernoulli_poly" in syms
        has_euler = has_euler or "euler" in syms
        count = 0
        for p in primes_in(5, 31):
            if claim.prime.admits(p):
                result = check_congruence(claim, p)
                ok = ok and result.passed
                count += 1
        detail.append(f"{cid}x{count}")
    ok = ok and has_b13 and has_euler and len(extra_ids) >= 6

    divis = corpus_by_id("ig-145-div")
    for n in range(1, 201):
        ok = ok and check_integer_divisibility(divis, n).passed
    pn3 = corpus_by_id("ig-1681-pn3")
    for p in (5, 7):
        for n in (1, 2, 3):
            ok = ok and check_padic_integrality(pn3, p, n).passed

    elapsed = time.perf_counter() - t0
    _report("4: congruence evidence sweep", ok and elapsed < 300,
            f"{elapsed:.1f}s < 300s")


def test_criterion_5_certificates():
    from binomseries.certificates import (check_certificate,
                                          load_bundled_certificates,
                                          verify_functional_equation)
    t0 = time.perf_counter()
    certs = {c.id: c for c in load_bundled_certificates()}
    ok = True
    for cert in certs.values():
        report = check_certificate(cert, endpoint_digits=30,
                                   quadrature_digits=25)
        ok = ok and report.passed
    # branch correction must be detected at x = 1/sqrt(2)
    report8 = check_certificate(certs["cert-8-arctan"])
    crossing_ok = len(report8.crossings) == 1 and \
        float(report8.crossings[0].location[0]) < 0.7071067811865476 < \
        float(report8.crossings[0].location[1])
    fe_ok, _ = verify_functional_equation(200)
    elapsed = time.perf_counter() - t0
    _report("5: integration certificates",
            ok and crossing_ok and fe_ok,
            f"4 certificates + functional equation to order 200, {elapsed:.1f}s")


def test_criterion_6_pslq_round_trip():
    ok = True
    ids = [e.id for e in corpus_filter(status="THEOREM")] + ["c-gosper"]
    for cid in ids:
        entry = corpus_by_id(cid)
        basis = [ConstantMonomial(mpq(1), t.factors) for t in entry.rhs.terms
                 if t.factors]
        basis.append(ConstantMonomial(mpq(1), ()))
        a = discover_rhs(entry, basis, digits=100)
        b = discover_rhs(entry, basis, digits=120)
        ok = ok and a is not None and a == entry.rhs and b == a
    _report("6: closed-form rediscovery round-trip", ok,
            f"{len(ids)} identities at 100 and 120 digits")


def test_criterion_7_performance():
    t0 = time.perf_counter()
    evaluate_series(corpus_by_id("t-98"), 1000)
    t98 = time.perf_counter() - t0
    t0 = time.perf_counter()
    evaluate_series(corpus_by_id("t-8"), 1000)
    t8 = time.perf_counter() - t0
    _report("7: thousand-digit evaluations", t98 < 10 and t8 < 60,
            f"fast-rate series {t98:.2f}s < 10s, slow-rate series {t8:.2f}s < 60s")


def test_criterion_8_property_suites():
    ok = True

    # ball containment trials
    rng = random.Random(8)
    for _ in range(1000):
        a = mpq(rng.randint(-10**6, 10**6), rng.randint(1, 10**6))
        b = mpq(rng.randint(-10**6, 10**6), rng.randint(1, 10**6))
        ba, bb = Ball.from_rational(a, 96), Ball.from_rational(b, 96)
        ok = ok and (ba + bb).contains_rational(a + b)
        ok = ok and (ba * bb).contains_rational(a * b)

    # tail-soundness doubling spot test
    from binomseries.evaluate import _sum_terms, precision_for_digits
    for cid in ("t-8", "c-harm4096", "j5-2p15"):
        entry = corpus_by_id(cid)
        value, cert = evaluate_series(entry, 30)
        double, _ = _sum_terms(entry, 2 * cert.cutoff, precision_for_digits(30))
        ok = ok and abs(mpq(value.mid) - mpq(double.mid)) <= \
            mpq(cert.tail_bound) + mpq(value.rad) + mpq(double.rad)

    # harmonic / Bernoulli / Euler recurrences
    for n in range(1, 200):
        ok = ok and harmonic(n, 3) - harmonic(n - 1, 3) == mpq(1, mpz(n) ** 3)
    for n in range(1, 120):
        ok = ok and sum(binomial(n + 1, j) * bernoulli_number(j)
                        for j in range(n + 1)) == 0
    for n in range(0, 60):
        ok = ok and euler_number(n) == mpz(2) ** n * euler_poly(n, mpq(1, 2))

    # Wolstenholme control
    for p in primes_in(5, 97):
        ok = ok and padic_valuation(harmonic(p - 1, 1), p) >= 2

    # Hurwitz-zeta multiplication identities
    for s in (2, 3, 4, 5, 6):
        z = const_zeta(s, 160)
        ok = ok and hurwitz_zeta(s, mpq(1, 2), 160).overlaps(
            z.scale(mpz(2) ** s - 1))
        ok = ok and (hurwitz_zeta(s, mpq(1, 3), 160)
                     + hurwitz_zeta(s, mpq(2, 3), 160)).overlaps(
            z.scale(mpz(3) ** s - 1))

    _report("8: property suites", ok)
