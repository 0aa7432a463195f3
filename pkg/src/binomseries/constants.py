"""Rigorous evaluators for the named constants on identity right-hand sides.

Everything reduces to four primitives: pi, square roots of integers, logs
of positive rationals, and the Hurwitz zeta function at integer s >= 2.
The two L-series constants and the beta value are differences of Hurwitz
zeta values:

    K     = (zeta(2, 1/3) - zeta(2, 2/3)) / 9
    G     = (zeta(2, 1/4) - zeta(2, 3/4)) / 16
    beta4 = (zeta(4, 1/4) - zeta(4, 3/4)) / 256

Hurwitz zeta uses Euler-Maclaurin with the exact remainder bound

    |R_J| <= |B_{2J+2}| / (2J+2)! * s(s+1)...(s+2J) * (M+a)^(-s-2J-1),

which is folded into the ball radius, so every returned enclosure is a
proven containment interval.
"""

from __future__ import annotations

import math
import threading

import gmpy2
from gmpy2 import mpq, mpz

from .balls import Ball, mid_context
from .exact import bernoulli_number

__all__ = [
    "const_pi",
    "const_sqrt",
    "const_log",
    "hurwitz_zeta",
    "const_zeta",
    "const_K",
    "const_G",
    "const_catalan",
    "const_beta4",
]

_cache: dict[tuple, Ball] = {}
_cache_lock = threading.Lock()


def _cached(key: tuple, compute) -> Ball:
    ball = _cache.get(key)
    if ball is None:
        ball = compute()
        with _cache_lock:
            ball = _cache.setdefault(key, ball)
    return ball


def const_pi(prec: int) -> Ball:
    """Ball containing pi, radius <= 2^(2-prec)."""
    _check_prec(prec)

    def compute() -> Ball:
        mid = mid_context(prec).const_pi()
        # correctly rounded: error <= |pi| * 2^-prec < 2^(2-prec)
        return Ball(mid, gmpy2.mpfr(mpq(1, mpz(2) ** (prec - 2)), 2))

    return _cached(("pi", prec), compute)


def const_sqrt(d: int, prec: int) -> Ball:
    """Ball containing sqrt(d) for a positive integer d."""
    _check_prec(prec)
    if d <= 0:
        raise ValueError("const_sqrt: d must be positive")
    return _cached(("sqrt", d, prec),
                   lambda: Ball.from_rational(d, prec).sqrt())


def const_log(q, prec: int) -> Ball:
    """Ball containing log(q) for a positive rational q; exact zero for q = 1."""
    _check_prec(prec)
    q = mpq(q)
    if q <= 0:
        raise ValueError(f"const_log: argument {q} is not positive")

    def compute() -> Ball:
        if q == 1:
            return Ball.exact_zero()
        return Ball.from_rational(q, prec).log()

    return _cached(("log", q, prec), compute)


def hurwitz_zeta(s: int, a, prec: int) -> Ball:
    """Ball containing zeta(s, a) = sum_{n>=0} (n+a)^(-s) for s >= 2, 0 < a <= 1."""
    _check_prec(prec)
    if s < 2:
        raise ValueError(f"hurwitz_zeta: s = {s} < 2 is out of range")
    a = mpq(a)
    if not (0 < a <= 1):
        raise ValueError(f"hurwitz_zeta: a = {a} is outside (0, 1]")
    return _cached(("hz", s, a, prec), lambda: _hurwitz_em(s, a, prec))


def const_zeta(n: int, prec: int) -> Ball:
    """Riemann zeta at an integer n >= 2."""
    return _cached(("zeta", n, prec), lambda: hurwitz_zeta(n, 1, prec))


def const_K(prec: int) -> Ball:
    """The L-series value sum_{n>=0} (1/(3n+1)^2 - 1/(3n+2)^2)."""
    def compute() -> Ball:
        diff = hurwitz_zeta(2, mpq(1, 3), prec) - hurwitz_zeta(2, mpq(2, 3), prec)
        return diff.scale(mpq(1, 9))

    return _cached(("K", prec), compute)


def const_catalan(prec: int) -> Ball:
    """Catalan's constant sum_{k>=0} (-1)^k / (2k+1)^2."""
    def compute() -> Ball:
        diff = hurwitz_zeta(2, mpq(1, 4), prec) - hurwitz_zeta(2, mpq(3, 4), prec)
        return diff.scale(mpq(1, 16))

    return _cached(("G", prec), compute)


const_G = const_catalan


def const_beta4(prec: int) -> Ball:
    """Dirichlet beta at 4: sum_{k>=0} (-1)^k / (2k+1)^4."""
    def compute() -> Ball:
        diff = hurwitz_zeta(4, mpq(1, 4), prec) - hurwitz_zeta(4, mpq(3, 4), prec)
        return diff.scale(mpq(1, 256))

    return _cached(("beta4", prec), compute)


def _check_prec(prec: int) -> None:
    if prec < 64:
        raise ValueError(f"precision {prec} below the 64-bit minimum")


def _hurwitz_em(s: int, a: mpq, prec: int) -> Ball:
    work = prec + 24
    target = mpq(1, mpz(2) ** (prec + 8))
    M, J, remainder = _em_plan(s, a, target)

    # Direct part: sum_{n<M} (n+a)^(-s), each term an exact rational.
    total = Ball.from_rational(0, work)
    for n in range(M):
        total = total + Ball.from_rational(1 / (n + a) ** s, work)

    # Integral and boundary terms at the cut.
    Ma = M + a
    total = total + Ball.from_rational(1 / ((s - 1) * Ma ** (s - 1)), work)
    total = total + Ball.from_rational(1 / (2 * Ma ** s), work)

    # Bernoulli corrections.
    for j in range(1, J + 1):
        term = (bernoulli_number(2 * j) / math.factorial(2 * j)) \
            * _rising(s, 2 * j - 1) / Ma ** (s + 2 * j - 1)
        total = total + Ball.from_rational(term, work)

    up = gmpy2.context(precision=30, round=gmpy2.RoundUp)
    rad = up.add(total.rad, up.add(gmpy2.mpfr(0), remainder))
    return Ball(total.mid, rad)


def _rising(s: int, m: int) -> mpz:
    acc = mpz(1)
    for i in range(m):
        acc *= s + i
    return acc


def _em_plan(s: int, a: mpq, target: mpq) -> tuple[int, int, mpq]:
    """Pick a cut M and correction depth J with remainder bound below target."""
    M = max(s, 16)
    while True:
        best: tuple[int, mpq] | None = None
        Ma = M + a
        for J in range(1, 4 * M):
            bound = abs(bernoulli_number(2 * J + 2)) / math.factorial(2 * J + 2) \
                * _rising(s, 2 * J + 1) / Ma ** (s + 2 * J + 1)
            if bound <= target:
                return M, J, bound
            if best is not None and bound > best[1]:
                break  # terms started growing; M is too small
            if best is None or bound < best[1]:
                best = (J, bound)
        M *= 2
        if M > 1 << 22:
            raise RuntimeError("hurwitz zeta: no Euler-Maclaurin plan found")
