"""Constant evaluators against independent oracles."""

from gmpy2 import mpq, mpz

from binomseries.constants import (const_G, const_K, const_beta4, const_catalan,
                                   const_log, const_pi, const_sqrt, const_zeta,
                                   hurwitz_zeta)


def machin_pi(scale_bits: int) -> tuple[mpq, mpq]:
    """pi via Machin's formula with an exact alternating-tail bound."""
    def atan_inv(x: int) -> tuple[mpq, mpq]:
        total = mpq(0)
        k = 0
        while True:
            term = mpq((-1) ** k, (2 * k + 1) * mpz(x) ** (2 * k + 1))
            if abs(term) < mpq(1, mpz(2) ** scale_bits):
                return total, abs(term)
            total += term
            k += 1
    a5, e5 = atan_inv(5)
    a239, e239 = atan_inv(239)
    return 16 * a5 - 4 * a239, 16 * e5 + 4 * e239


def test_pi_against_arctan_series():
    mid, err = machin_pi(200)
    ball = const_pi(192)
    assert abs(mpq(ball.mid) - mid) <= mpq(ball.rad) + err


def test_pi_contract():
    for prec in (64, 128, 256):
        ball = const_pi(prec)
        assert mpq(ball.rad) <= mpq(2) ** (4 - prec)
    assert float(const_pi(256).rad) < float(const_pi(128).rad)
    # determinism: cached call returns the identical ball
    a = const_pi(128)
    b = const_pi(128)
    assert a is b


def test_log_contract_and_additivity():
    assert const_log(1, 128).rad == 0 and const_log(1, 128).mid == 0
    l2 = const_log(2, 192)
    l3 = const_log(3, 192)
    l23 = const_log(mpq(2, 3), 192)
    assert (l2 - l3).overlaps(l23)
    l4 = const_log(4, 192)
    assert l4.overlaps(l2.scale(2))
    for q in (mpq(2), mpq(2, 3), mpq(3, 4), mpq(5)):
        ball = const_log(q, 128)
        bound = mpq(2) ** (4 - 128) * max(mpq(1), abs(mpq(ball.mid)))
        assert mpq(ball.rad) <= bound
    try:
        const_log(mpq(-1, 2), 128)
        assert False
    except ValueError:
        pass


def test_hurwitz_zeta_identities():
    # zeta(s, 1/2) = (2^s - 1) zeta(s); zeta(s,1/3)+zeta(s,2/3) = (3^s-1) zeta(s)
    for s in (2, 3, 4, 5, 6):
        z = const_zeta(s, 160)
        half = hurwitz_zeta(s, mpq(1, 2), 160)
        assert half.overlaps(z.scale(mpz(2) ** s - 1)), s
        thirds = hurwitz_zeta(s, mpq(1, 3), 160) + hurwitz_zeta(s, mpq(2, 3), 160)
        assert thirds.overlaps(z.scale(mpz(3) ** s - 1)), s


def test_zeta2_is_pi_squared_over_six():
    z2 = const_zeta(2, 192)
    pi = const_pi(192)
    assert z2.overlaps((pi * pi).scale(mpq(1, 6)))


def test_hurwitz_rejects_bad_arguments():
    for bad_s, bad_a in ((1, mpq(1, 2)), (2, mpq(0)), (2, mpq(3, 2))):
        try:
            hurwitz_zeta(bad_s, bad_a, 128)
            assert False, (bad_s, bad_a)
        except ValueError:
            pass


def _scaled_sum(terms, shift_bits, num, den):
    """sum of num(j)/den(j) floor-scaled by 2^shift_bits; error <= terms."""
    acc = mpz(0)
    for j in range(terms):
        acc += (mpz(2) ** shift_bits) // den(j)
    return acc


def test_K_against_defining_series():
    # direct sum of 1/(3n+1)^2 - 1/(3n+2)^2 with integer scaling and an
    # exact tail bound; every term positive and eventually < integral bound
    shift = 80
    terms = 200000
    pos = _scaled_sum(terms, shift, None, lambda j: mpz(3 * j + 1) ** 2)
    neg = _scaled_sum(terms, shift, None, lambda j: mpz(3 * j + 2) ** 2)
    mid = mpq(pos - neg, mpz(2) ** shift)
    # floor error <= 2*terms ulps; tail bounded by sum of 6/(3j)^3 ~ integral
    err = mpq(2 * terms, mpz(2) ** shift) + mpq(1, 3 * (terms - 1) ** 2)
    ball = const_K(160)
    assert abs(mpq(ball.mid) - mid) <= mpq(ball.rad) + err


def test_G_against_alternating_series():
    shift = 80
    terms = 120000
    acc = mpz(0)
    for k in range(terms):
        q = (mpz(2) ** shift) // mpz(2 * k + 1) ** 2
        acc += q if k % 2 == 0 else -q
    mid = mpq(acc, mpz(2) ** shift)
    err = mpq(terms, mpz(2) ** shift) + mpq(1, (2 * terms + 1) ** 2)
    ball = const_G(160)
    assert abs(mpq(ball.mid) - mid) <= mpq(ball.rad) + err
    assert const_G is const_catalan or const_G(160).overlaps(const_catalan(160))


def test_beta4_against_alternating_series():
    shift = 64
    terms = 40000
    acc = mpz(0)
    for k in range(terms):
        q = (mpz(2) ** shift) // mpz(2 * k + 1) ** 4
        acc += q if k % 2 == 0 else -q
    mid = mpq(acc, mpz(2) ** shift)
    err = mpq(terms, mpz(2) ** shift) + mpq(1, (2 * terms + 1) ** 4)
    ball = const_beta4(160)
    assert abs(mpq(ball.mid) - mid) <= mpq(ball.rad) + err


def test_radius_halves_when_precision_doubles():
    for maker in (const_pi, const_K, const_G, const_beta4,
                  lambda p: const_zeta(3, p), lambda p: const_log(2, p),
                  lambda p: const_sqrt(3, p)):
        r1 = maker(128).rad
        r2 = maker(256).rad
        assert float(r2) < float(r1) / 2
