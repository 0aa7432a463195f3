"""Exact integer/rational arithmetic and number-theoretic sequences.

Everything here is exact: big integers (gmpy2.mpz), reduced rationals
(gmpy2.mpq), and memoized special sequences (harmonic numbers, Bernoulli
and Euler numbers/polynomials).  No floating point.
"""

from __future__ import annotations

import threading
from typing import Union

import gmpy2
from gmpy2 import mpq, mpz

__all__ = [
    "Rational",
    "PADIC_INFINITY",
    "rational",
    "binomial",
    "is_prime",
    "primes_in",
    "harmonic",
    "harmonic_gap",
    "bernoulli_number",
    "bernoulli_poly",
    "euler_number",
    "euler_poly",
    "legendre_symbol",
    "fermat_quotient",
    "padic_valuation",
]

# The exact-arithmetic workhorse: arbitrary precision, always stored reduced
# with positive denominator (gmpy2 guarantees both invariants).
Rational = mpq

# v_p(0); compares correctly against any finite required exponent.
PADIC_INFINITY = float("inf")

RationalLike = Union[int, str, mpq, mpz]


def rational(x: RationalLike) -> mpq:
    """Coerce ints, mpz/mpq, or strings like '-3/7' to an exact rational."""
    if isinstance(x, mpq):
        return x
    if isinstance(x, str):
        return mpq(x.strip())
    return mpq(x)


def binomial(n: int, k: int) -> mpz:
    """Exact binomial coefficient; zero when k > n, both arguments >= 0."""
    if n < 0 or k < 0:
        raise ValueError(f"binomial({n}, {k}): arguments must be nonnegative")
    if k > n:
        return mpz(0)
    return gmpy2.bincoef(n, k)


def is_prime(n: int) -> bool:
    """Deterministic for the desk-scale inputs used here."""
    return n >= 2 and bool(gmpy2.is_prime(n))


def primes_in(lo: int, hi: int) -> list[int]:
    """All primes p with lo <= p <= hi."""
    out = []
    p = max(2, lo)
    while p <= hi:
        if is_prime(p):
            out.append(p)
        p += 1
    return out


class _HarmonicCache:
    """Per-order prefix cache of H_n^(m); concurrent reads, serialized extends."""

    def __init__(self) -> None:
        self._tables: dict[int, list[mpq]] = {}
        self._lock = threading.Lock()

    def value(self, n: int, m: int) -> mpq:
        table = self._tables.get(m)
        if table is not None and n < len(table):
            return table[n]
        with self._lock:
            table = self._tables.setdefault(m, [mpq(0)])
            while len(table) <= n:
                j = len(table)
                table.append(table[j - 1] + mpq(1, mpz(j) ** m))
        return table[n]


_HARMONIC = _HarmonicCache()


def harmonic(n: int, m: int = 1) -> mpq:
    """Generalized harmonic number H_n^(m) = sum_{0<k<=n} k^-m, H_0 = 0."""
    if n < 0:
        raise ValueError(f"harmonic({n}, {m}): n must be nonnegative")
    if m < 1:
        raise ValueError(f"harmonic({n}, {m}): order must be positive")
    return _HARMONIC.value(n, m)


def harmonic_gap(k: int) -> mpq:
    """The combination 2*H_{4k} - 3*H_{2k} + H_k (equals 2*sum_{k<=j<2k} 1/(2j+1))."""
    if k < 0:
        raise ValueError("harmonic_gap: k must be nonnegative")
    return 2 * harmonic(4 * k) - 3 * harmonic(2 * k) + harmonic(k)


class _Memo:
    """Index-extensible memo list with serialized writes."""

    def __init__(self, extend) -> None:
        self._values: list = []
        self._extend = extend
        self._lock = threading.Lock()

    def get(self, n: int):
        if n < len(self._values):
            return self._values[n]
        with self._lock:
            while len(self._values) <= n:
                self._extend(self._values)
        return self._values[n]


def _extend_bernoulli(values: list) -> None:
    # Defining recurrence sum_{j<=n} C(n+1, j) B_j = [n == 0]; B_1 = -1/2.
    n = len(values)
    if n == 0:
        values.append(mpq(1))
        return
    if n == 1:
        values.append(mpq(-1, 2))
        return
    if n % 2 == 1:
        values.append(mpq(0))
        return
    acc = mpq(0)
    for j in range(n):
        if values[j]:
            acc += binomial(n + 1, j) * values[j]
    values.append(-acc / (n + 1))


_BERNOULLI = _Memo(_extend_bernoulli)


def bernoulli_number(n: int) -> mpq:
    """Bernoulli number B_n with the B_1 = -1/2 convention."""
    if n < 0:
        raise ValueError("bernoulli_number: n must be nonnegative")
    return _BERNOULLI.get(n)


def bernoulli_poly(n: int, x: RationalLike) -> mpq:
    """Bernoulli polynomial B_n(x) = sum_j C(n, j) B_j x^(n-j), evaluated exactly."""
    if n < 0:
        raise ValueError("bernoulli_poly: n must be nonnegative")
    xq = rational(x)
    acc = mpq(0)
    power = mpq(1)  # x^(n-j), built from the j = n end downward
    for j in range(n, -1, -1):
        b = bernoulli_number(j)
        if b:
            acc += binomial(n, j) * b * power
        power *= xq
    return acc


def _extend_euler(values: list) -> None:
    # Secant-expansion convention: sum_{j even <= 2m} C(2m, j) E_j = 0 for m >= 1.
    n = len(values)
    if n == 0:
        values.append(mpz(1))
        return
    if n % 2 == 1:
        values.append(mpz(0))
        return
    acc = mpz(0)
    for j in range(0, n, 2):
        acc += binomial(n, j) * values[j]
    values.append(-acc)


_EULER = _Memo(_extend_euler)


def euler_number(n: int) -> mpz:
    """Euler number E_n (secant convention: E_0 = 1, E_2 = -1, E_4 = 5; odd ones 0)."""
    if n < 0:
        raise ValueError("euler_number: n must be nonnegative")
    return _EULER.get(n)


def euler_poly(n: int, x: RationalLike) -> mpq:
    """Euler polynomial E_n(x) = sum_j C(n, j) (E_j / 2^j) (x - 1/2)^(n-j)."""
    if n < 0:
        raise ValueError("euler_poly: n must be nonnegative")
    xq = rational(x) - mpq(1, 2)
    acc = mpq(0)
    power = mpq(1)
    for j in range(n, -1, -1):
        e = euler_number(j)
        if e:
            acc += binomial(n, j) * mpq(e, mpz(2) ** j) * power
        power *= xq
    return acc


def legendre_symbol(a: int, p: int) -> int:
    """Legendre symbol (a|p) for an odd prime p, via Euler's criterion."""
    if p == 2 or not is_prime(p):
        raise ValueError(f"legendre_symbol: modulus {p} is not an odd prime")
    a = int(a) % p
    if a == 0:
        return 0
    r = int(gmpy2.powmod(a, (p - 1) // 2, p))
    return 1 if r == 1 else -1


def fermat_quotient(a: int, p: int) -> mpz:
    """Fermat quotient q_p(a) = (a^(p-1) - 1) / p; requires gcd(a, p) = 1."""
    if not is_prime(p):
        raise ValueError(f"fermat_quotient: {p} is not prime")
    if a % p == 0:
        raise ValueError(f"fermat_quotient: {a} is divisible by {p}")
    return (mpz(a) ** (p - 1) - 1) // p


def padic_valuation(q: RationalLike, p: int) -> Union[int, float]:
    """p-adic valuation of a rational; PADIC_INFINITY for zero."""
    if not is_prime(p):
        raise ValueError(f"padic_valuation: {p} is not prime")
    qq = rational(q)
    if qq == 0:
        return PADIC_INFINITY
    num, den = qq.numerator, qq.denominator
    if num % p == 0:
        return int(gmpy2.remove(num, p)[1])
    if den % p == 0:
        return -int(gmpy2.remove(den, p)[1])
    return 0
