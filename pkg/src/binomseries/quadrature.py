"""Rigorous integration of rational functions on [0, 1].

Per panel [c-h, c+h] the integrand N/D is expanded as an exact Taylor
series around c: the shifted denominator D(c+t) is inverted as a power
series with exact rational coefficients, and the truncation error is
bounded via Cauchy estimates.  If rho satisfies
sum_{i>=1} |d_i| rho^i <= |d_0|/2, then |N/D| <= C := 2*max|N|/|d_0| on
the complex disk |t| <= rho, so the m-th Taylor coefficient is at most
C/rho^m and the integrated tail beyond order T is <= 4*h*C*(h/rho)^(T+1)
for h <= rho/2.  Everything is computed in exact rational arithmetic and
only converted to a ball at the very end.
"""

from __future__ import annotations

from gmpy2 import mpq

from .balls import Ball
from .symbolic import Poly, RatFunc

__all__ = ["integrate_rational"]


def _bound_on_disk(coeffs: list[mpq], rho: mpq) -> mpq:
    acc = mpq(0)
    power = mpq(1)
    for c in coeffs:
        acc += abs(c) * power
        power *= rho
    return acc


def _panel(num: Poly, den: Poly, a: mpq, b: mpq, terms: int) -> tuple[mpq, mpq] | None:
    """Exact (value, error_bound) for one panel, or None if it must split."""
    c = (a + b) / 2
    h = (b - a) / 2
    dsh = den.shift(c).coeffs
    nsh = num.shift(c).coeffs
    if not dsh or dsh[0] == 0:
        return None
    d0 = abs(dsh[0])

    # largest dyadic rho >= 2h with sum_{i>=1} |d_i| rho^i <= |d_0|/2
    rho = 2 * h
    grown = rho
    for _ in range(12):
        if _bound_on_disk([mpq(0)] + [abs(x) for x in dsh[1:]], grown * 2) <= d0 / 2:
            grown *= 2
        else:
            break
    rho = grown
    if _bound_on_disk([mpq(0)] + [abs(x) for x in dsh[1:]], rho) > d0 / 2:
        return None

    # series inversion of D(c+t), then multiply by N(c+t); exact throughout
    inv = [1 / dsh[0]]
    for m in range(1, terms + 1):
        acc = mpq(0)
        for i in range(1, min(m, len(dsh) - 1) + 1):
            acc += dsh[i] * inv[m - i]
        inv.append(-acc / dsh[0])
    f = [mpq(0)] * (terms + 1)
    for i, nc in enumerate(nsh):
        if nc == 0 or i > terms:
            continue
        for m in range(i, terms + 1):
            f[m] += nc * inv[m - i]

    # integrate even powers over [-h, h]
    value = mpq(0)
    hpow = h  # h^(m+1)
    for m in range(0, terms + 1):
        if m % 2 == 0 and f[m]:
            value += f[m] * 2 * hpow / (m + 1)
        hpow *= h

    c_bound = 2 * _bound_on_disk(nsh, rho) / d0
    ratio = h / rho  # <= 1/2
    tail = 4 * h * c_bound * ratio ** (terms + 1) / (1 - ratio)
    return value, tail


def integrate_rational(func: RatFunc, digits: int,
                       lo=mpq(0), hi=mpq(1)) -> Ball:
    """Ball containing the integral of a pole-free rational function."""
    lo, hi = mpq(lo), mpq(hi)
    terms = 4 * (digits + 8)
    target = mpq(1, 10) ** (digits + 4)
    queue: list[tuple[mpq, mpq]] = [(lo + mpq(i, 8) * (hi - lo),
                                     lo + mpq(i + 1, 8) * (hi - lo))
                                    for i in range(8)]
    total = mpq(0)
    err = mpq(0)
    depth_guard = 0
    while queue:
        a, b = queue.pop()
        result = _panel(func.num, func.den, a, b, terms)
        if result is None or result[1] > target * (b - a):
            depth_guard += 1
            if depth_guard > 4000:
                raise RuntimeError("quadrature: panel subdivision did not converge "
                                   "(pole on or near the contour?)")
            mid = (a + b) / 2
            queue.append((a, mid))
            queue.append((mid, b))
            continue
        total += result[0]
        err += result[1]

    prec = max(64, int(digits * 3.33) + 32)
    out = Ball.from_rational(total, prec)
    import gmpy2
    up = gmpy2.context(precision=30, round=gmpy2.RoundUp,
                       emin=gmpy2.get_emin_min(), emax=gmpy2.get_emax_max())
    rad = up.add(out.rad, up.add(gmpy2.mpfr(0), err))
    return Ball(out.mid, rad)
