"""Exact-core: special sequences against independent oracles."""

import math

import pytest
from gmpy2 import mpq, mpz
from hypothesis import given, settings
from hypothesis import strategies as st

from binomseries.exact import (PADIC_INFINITY, bernoulli_number, bernoulli_poly,
                               binomial, euler_number, euler_poly,
                               fermat_quotient, harmonic, harmonic_gap,
                               is_prime, legendre_symbol, padic_valuation,
                               primes_in, rational)


def test_binomial_small_cases():
    assert binomial(8, 2) == 28
    assert binomial(4, 1) == 4
    # factorial-formula oracle
    assert binomial(12, 3) == math.factorial(12) // (math.factorial(3) * math.factorial(9))
    assert binomial(3, 7) == 0
    with pytest.raises(ValueError):
        binomial(-1, 0)


def test_binomial_pascal_grid():
    # Pascal's rule on a 500x500 grid
    prev = [mpz(1)]
    for n in range(1, 500):
        row = [binomial(n, k) for k in range(n + 1)]
        assert row[0] == 1 and row[-1] == 1
        for k in range(1, n):
            assert row[k] == prev[k - 1] + prev[k]
        prev = row


def test_harmonic_small():
    assert harmonic(0, 1) == 0
    assert harmonic(3, 1) == mpq(11, 6)
    # direct-summation oracle
    assert harmonic(4, 2) == sum(mpq(1, j * j) for j in range(1, 5)) == mpq(205, 144)


def test_harmonic_increments_exact():
    for m in range(1, 9):
        prev = mpq(0)
        for n in range(1, 2001):
            cur = harmonic(n, m)
            assert cur - prev == mpq(1, mpz(n) ** m)
            prev = cur


def test_harmonic_gap_defining_formulas_agree():
    assert harmonic_gap(0) == 0
    assert harmonic_gap(1) == mpq(2, 3)
    # odd-reciprocal oracle: 2 * sum_{k<=j<2k} 1/(2j+1)
    for k in range(0, 2001):
        odd_form = 2 * sum(mpq(1, 2 * j + 1) for j in range(k, 2 * k))
        assert harmonic_gap(k) == odd_form


def test_bernoulli_values():
    assert bernoulli_number(0) == 1
    assert bernoulli_number(1) == mpq(-1, 2)
    assert bernoulli_number(2) == mpq(1, 6)
    assert bernoulli_number(12) == mpq(-691, 2730)
    assert bernoulli_number(13) == 0


def test_bernoulli_recurrence():
    # sum_{j=0}^n C(n+1, j) B_j = 0 for n >= 1
    for n in range(1, 201):
        acc = sum(binomial(n + 1, j) * bernoulli_number(j) for j in range(n + 1))
        assert acc == 0, n


def test_von_staudt_clausen():
    for n in range(1, 101):
        denom = bernoulli_number(2 * n).denominator
        expected = mpz(1)
        for p in primes_in(2, 2 * n + 1):
            if (2 * n) % (p - 1) == 0:
                expected *= p
        assert denom == expected, n


def test_bernoulli_poly():
    assert bernoulli_poly(1, 0) == mpq(-1, 2)
    assert bernoulli_poly(2, mpq(1, 3)) == mpq(1, 9) - mpq(1, 3) + mpq(1, 6) == mpq(-1, 18)
    for n in (1, 3, 5, 7, 9):
        assert bernoulli_poly(n, mpq(1, 2)) == 0


def test_euler_numbers():
    assert euler_number(0) == 1
    assert euler_number(1) == 0
    assert euler_number(2) == -1
    assert euler_number(4) == 5
    assert euler_number(6) == -61
    for n in range(1, 101, 2):
        assert euler_number(n) == 0


def test_euler_polynomial_consistency():
    assert euler_poly(0, mpq(1, 4)) == 1
    assert euler_poly(1, mpq(1, 2)) == 0
    assert euler_poly(2, mpq(1, 4)) == mpq(1, 16) - mpq(1, 4) == mpq(-3, 16)
    for n in range(0, 101):
        assert euler_number(n) == mpz(2) ** n * euler_poly(n, mpq(1, 2))


def test_legendre_symbol():
    assert legendre_symbol(3, 7) == -1
    assert legendre_symbol(25, 5) == 0
    assert legendre_symbol(2, 17) == 1
    # Euler-criterion oracle on a grid
    for p in primes_in(3, 50):
        for a in range(1, p):
            sq = any(x * x % p == a for x in range(1, p))
            assert legendre_symbol(a, p) == (1 if sq else -1)
    with pytest.raises(ValueError):
        legendre_symbol(3, 2)
    with pytest.raises(ValueError):
        legendre_symbol(3, 15)


def test_fermat_quotient():
    assert fermat_quotient(2, 7) == 9
    assert fermat_quotient(3, 2) == 1
    # Wieferich sanity: q_1093(2) = 0 mod 1093
    assert fermat_quotient(2, 1093) % 1093 == 0
    with pytest.raises(ValueError):
        fermat_quotient(14, 7)


def test_padic_valuation():
    assert padic_valuation(mpq(9, 4), 3) == 2
    assert padic_valuation(mpq(9, 4), 2) == -2
    assert padic_valuation(0, 5) == PADIC_INFINITY
    assert PADIC_INFINITY >= 10**9
    assert padic_valuation(mpq(7, 11), 5) == 0


def test_wolstenholme_control():
    # external theorem used as an oracle for the valuation plumbing
    for p in primes_in(5, 97):
        assert padic_valuation(harmonic(p - 1, 1), p) >= 2


@given(st.integers(min_value=1, max_value=400), st.integers(min_value=1, max_value=4))
@settings(max_examples=60, deadline=None)
def test_harmonic_difference_property(n, m):
    assert harmonic(n, m) - harmonic(n - 1, m) == mpq(1, mpz(n) ** m)


@given(st.integers(min_value=-10**6, max_value=10**6),
       st.integers(min_value=1, max_value=10**6))
@settings(max_examples=80, deadline=None)
def test_padic_valuation_multiplicative(num, den):
    q = mpq(num, den)
    for p in (2, 3, 5):
        v = padic_valuation(q, p)
        if q == 0:
            assert v == PADIC_INFINITY
        else:
            assert padic_valuation(q * p, p) == v + 1


def test_rational_parsing():
    assert rational("-3/7") == mpq(-3, 7)
    assert rational(5) == 5
    assert is_prime(2) and is_prime(97) and not is_prime(1) and not is_prime(91)
