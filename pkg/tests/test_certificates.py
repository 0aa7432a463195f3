"""Certificate checker: moments, substitutions, derivatives, branch handling."""

import pytest
from gmpy2 import mpq

from binomseries.certificates import (beta_rational, branch_corrections,
                                      check_certificate,
                                      corrected_endpoint_difference,
                                      geometric_moment_closed_form,
                                      load_bundled_certificates,
                                      substitute_and_normalize,
                                      verify_functional_equation)
from binomseries.constants import const_pi
from binomseries.exact import binomial
from binomseries.quadrature import integrate_rational
from binomseries.symbolic import Poly, Quad, RatFunc


def pasc(*desc):
    return Poly(list(reversed([mpq(str(c)) for c in desc])))


def test_moment_closed_forms():
    # P = 15k^2-124k-40 -> (99z^2-29z-40)/(1-z)^3
    assert geometric_moment_closed_form(pasc(15, -124, -40)) == \
        RatFunc(pasc(99, -29, -40), Poly([1, -1]).pow(3))
    # P = 18675k^2+7627k+670 -> 2(5859z^2+12481z+335)/(1-z)^3
    assert geometric_moment_closed_form(pasc(18675, 7627, 670)) == \
        RatFunc(pasc(11718, 24962, 670), Poly([1, -1]).pow(3))
    assert geometric_moment_closed_form(Poly([1])) == \
        RatFunc(Poly([1]), Poly([1, -1]))
    # start index 1 subtracts the k = 0 term
    assert geometric_moment_closed_form(Poly([1]), start=1) == \
        RatFunc(Poly([0, 1]), Poly([1, -1]))


def test_moment_against_series_prefix():
    p = pasc(7, -3, 2)
    closed = geometric_moment_closed_form(p)
    z = mpq(1, 5)
    direct = sum(p.eval(k) * z**k for k in range(200))
    assert abs(closed.eval(z) - direct) < mpq(1, 10**120)


def test_substitution_identity():
    r = RatFunc(pasc(1, 2, 3), pasc(1, 0, 1))
    out = substitute_and_normalize(r, 1, 1, 0, 1)
    # z := x(1-x); evaluating both at x = 1/3 must agree
    x = mpq(1, 3)
    z = x * (1 - x)
    assert out.eval(x) == r.eval(z)


def test_derivative_of_log_term():
    from binomseries.certificates import ElementaryExpr
    cubic = pasc(1, 1, 2, 4)
    expr = ElementaryExpr(d=1, rational_parts=[],
                          logs=[(Quad.of(15, 1), cubic)], arctans=[])
    # d/dx [15 log(x^3+x^2+2x+4)] = 15(3x^2+2x+2)/(x^3+x^2+2x+4)
    target = RatFunc(pasc(45, 30, 30).scale(Quad.of(1, 1)),
                     cubic.scale(Quad.of(1, 1)))
    assert (expr.derivative() - target).is_zero()


def test_bundled_certificates_all_pass():
    certs = load_bundled_certificates()
    assert {c.id for c in certs} == {"cert-98-chain", "cert-8-arctan",
                                     "cert-m8-chain", "cert-int-g"}
    for cert in certs:
        report = check_certificate(cert)
        assert report.passed, (cert.id, [k for k, v in report.stages.items()
                                         if not v])


def test_branch_crossing_detected_at_inverse_sqrt2():
    cert = {c.id: c for c in load_bundled_certificates()}["cert-8-arctan"]
    crossings = branch_corrections(cert.components[0].antiderivative)
    assert len(crossings) == 1
    interval = crossings[0][1].location
    # 1/sqrt(2) = 0.7071... lies inside the isolating interval
    assert float(interval[0]) < 0.70710678 < float(interval[1])
    assert 2 * interval[0] ** 2 < 1 < 2 * interval[1] ** 2


def test_naive_endpoint_wrong_without_correction():
    cert = {c.id: c for c in load_bundled_certificates()}["cert-8-arctan"]
    F = cert.components[0].antiderivative
    naive = F.eval_ball(1, 192) - F.eval_ball(0, 192)
    corrected = corrected_endpoint_difference(F, 192)
    pi = const_pi(192)
    assert corrected.overlaps(naive - pi.scale(mpq(3, 2)))
    assert not corrected.overlaps(naive)


def test_int_certificate_quadrature_crosscheck():
    cert = {c.id: c for c in load_bundled_certificates()}["cert-int-g"]
    comp = cert.components[0]
    quad = integrate_rational(comp.piece, 26)
    claimed = comp.value.evaluate(192)
    diff = abs(mpq(quad.mid) - mpq(claimed.mid))
    assert diff <= mpq(quad.rad) + mpq(claimed.rad) + mpq(1, 10**25)


def test_mutated_certificate_detected():
    import copy
    cert = {c.id: c for c in load_bundled_certificates()}["cert-int-g"]
    bad = copy.deepcopy(cert)
    coeffs = list(bad.components[0].piece.num.coeffs)
    coeffs[0] += 1
    bad.components[0].piece = RatFunc(Poly(coeffs), bad.components[0].piece.den)
    report = check_certificate(bad, endpoint_digits=20, quadrature_digits=15)
    assert not report.passed


def test_functional_equation():
    ok, idx = verify_functional_equation(50)
    assert ok and idx == -1


def test_functional_equation_mutation_sensitivity():
    # (f-1)(3f+1)^2 != x(4f)^4 already at low order
    from binomseries.exact import binomial as C
    from gmpy2 import mpz
    n = 8
    f = [C(4 * k, k) for k in range(n)]

    def mul(a, b):
        out = [mpz(0)] * n
        for i, ai in enumerate(a):
            for j in range(min(len(b), n - i)):
                out[i + j] += ai * b[j]
        return out

    fm1 = list(f)
    fm1[0] -= 1
    tf1 = [3 * c for c in f]
    tf1[0] += 1
    lhs = mul(fm1, mul(tf1, tf1))  # square instead of cube
    ff = [4 * c for c in f]
    rhs = [mpz(0)] + mul(mul(ff, ff), mul(ff, ff))[: n - 1]
    assert any(a != b for a, b in zip(lhs, rhs))


def test_beta_rational():
    assert beta_rational(4, 2) == mpq(1, 20)
    for k in range(1, 101):
        assert beta_rational(3 * k + 1, k) == mpq(1, k * binomial(4 * k, k))
        assert beta_rational(3 * k + 1, k + 1) == \
            mpq(1, (4 * k + 1) * binomial(4 * k, k))
    with pytest.raises(ValueError):
        beta_rational(0, 1)


def test_log_positivity_flagging():
    from binomseries.certificates import ElementaryExpr
    bad = ElementaryExpr(d=1, rational_parts=[],
                         logs=[(Quad.of(1, 1), pasc(1, -1))], arctans=[])
    assert not bad.log_args_positive()  # x - 1 vanishes at 1
    good = ElementaryExpr(d=1, rational_parts=[],
                          logs=[(Quad.of(1, 1), pasc(1, 1))], arctans=[])
    assert good.log_args_positive()
