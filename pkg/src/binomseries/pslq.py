"""Integer relation detection (PSLQ) over ball-valued inputs.

The classical PSLQ iteration runs on MPFR midpoints at the working
precision; any candidate relation is then confirmed against the original
balls: it is accepted only when |sum c_i v_i| is within the combined
radii, so a reported relation is numerically certified at the input
precision rather than trusted from the iteration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import gmpy2
from gmpy2 import mpfr, mpq, mpz

from .balls import Ball, mid_context
from .closedforms import ClosedForm, ConstantMonomial
from .evaluate import evaluate_series, precision_for_digits

__all__ = ["RelationResult", "PrecisionError", "pslq", "discover_rhs"]


class PrecisionError(ValueError):
    """Input balls are too wide for the requested detection precision."""


@dataclass
class RelationResult:
    coefficients: list[int]
    residual_bound: float      # |sum c_i v_i| is below this, from the balls
    confidence_digits: int
    norm_bound: float          # no relation smaller than this was missed
    basis_labels: list[str]

    def to_json(self) -> dict:
        return {"coefficients": self.coefficients,
                "residual_bound": self.residual_bound,
                "confidence_digits": self.confidence_digits,
                "norm_bound": self.norm_bound,
                "labels": self.basis_labels}


def _confirm(values: list[Ball], coeffs: list[int]) -> tuple[bool, mpq]:
    """Exact-midpoint check that the relation is within the combined radii."""
    mid = mpq(0)
    rad = mpq(0)
    for c, v in zip(coeffs, values):
        mid += c * mpq(v.mid)
        rad += abs(c) * mpq(v.rad)
    scale = max((abs(c) * max(abs(mpq(v.mid)), mpq(1))
                 for c, v in zip(coeffs, values)), default=mpq(1))
    # residual must be far below the size of the terms it cancels
    ok = abs(mid) <= rad + scale / mpq(10) ** 10
    return ok, abs(mid) + rad


def pslq(values: list[Ball], max_coeff_bits: int = 40,
         precision: int | None = None, labels: list[str] | None = None
         ) -> RelationResult | None:
    """Find an integer relation among the ball values, or return None.

    Returns None only with a certified lower bound on the norm of any
    relation (up to the working precision); refuses to run when the input
    radii are too wide to support detection.
    """
    n = len(values)
    if n < 2:
        raise ValueError("pslq needs at least two values")
    prec = precision or max(v.prec for v in values)
    labels = labels or [f"v{i}" for i in range(n)]

    # precondition: radii small relative to scale at the working precision
    for v in values:
        scale = max(abs(mpq(v.mid)), mpq(1))
        if mpq(v.rad) > scale / mpq(2) ** max(prec - 40, 32):
            raise PrecisionError("ball radii too wide for relation detection")

    ctx = mid_context(prec)
    one = mpfr(1, prec)

    def f(x) -> mpfr:
        return ctx.add(mpfr(0), x) if not isinstance(x, mpfr) else x

    x = [ctx.add(mpfr(0), v.mid) for v in values]
    gamma = ctx.sqrt(ctx.div(mpfr(4), mpfr(3)))
    gamma = ctx.add(gamma, ctx.div(one, mpfr(1 << 20)))

    # partial norms
    s = [mpfr(0)] * n
    acc = mpfr(0)
    for k in range(n - 1, -1, -1):
        acc = ctx.add(acc, ctx.mul(x[k], x[k]))
        s[k] = ctx.sqrt(acc)
    t = ctx.div(one, s[0])
    y = [ctx.mul(xk, t) for xk in x]
    s = [ctx.mul(sk, t) for sk in s]

    H = [[mpfr(0)] * (n - 1) for _ in range(n)]
    for i in range(n):
        if i < n - 1:
            H[i][i] = ctx.div(s[i + 1], s[i])
        for j in range(i):
            H[i][j] = ctx.div(ctx.mul(ctx.minus(y[i]), y[j]),
                              ctx.mul(s[j], s[j + 1]))

    B = [[mpz(1) if i == j else mpz(0) for j in range(n)] for i in range(n)]

    def reduce_row(i: int, j_top: int) -> None:
        for j in range(min(i - 1, j_top), -1, -1):
            if H[j][j] == 0:
                continue
            q = gmpy2.rint(ctx.div(H[i][j], H[j][j]))
            if q == 0:
                continue
            qz = mpz(q)
            y[j] = ctx.add(y[j], ctx.mul(q, y[i]))
            for k in range(j + 1):
                H[i][k] = ctx.sub(H[i][k], ctx.mul(q, H[j][k]))
            for k in range(n):
                B[k][j] = B[k][j] + qz * B[k][i]

    for i in range(1, n):
        reduce_row(i, n - 2)

    max_iter = 64 * n * n * max(prec, 64)
    eps_detect = ctx.exp2(mpfr(-(prec - 32)))
    norm_bound = 0.0

    for _ in range(max_iter):
        # certified-by-confirmation detection on the smallest |y|
        jmin = min(range(n), key=lambda j: abs(y[j]))
        if abs(y[jmin]) < eps_detect:
            coeffs = [int(B[k][jmin]) for k in range(n)]
            if any(coeffs) and max(abs(c) for c in coeffs).bit_length() <= max_coeff_bits:
                ok, resid = _confirm(values, coeffs)
                if ok:
                    if coeffs[0] < 0:
                        coeffs = [-c for c in coeffs]
                    digits = int(-math.log10(float(resid))) if resid else prec
                    return RelationResult(coeffs, float(resid), digits,
                                          norm_bound, labels)

        # norm bound 1/max|H_jj|
        hmax = max(abs(H[j][j]) for j in range(n - 1))
        if hmax > 0:
            norm_bound = max(norm_bound, float(ctx.div(one, hmax)))
        if norm_bound > 2.0 ** max_coeff_bits:
            return None

        # select row maximizing gamma^i |H_ii|
        best, best_val = 0, mpfr(-1)
        g = one
        for i in range(n - 1):
            val = ctx.mul(g, abs(H[i][i]))
            if val > best_val:
                best, best_val = i, val
            g = ctx.mul(g, gamma)
        m = best

        y[m], y[m + 1] = y[m + 1], y[m]
        H[m], H[m + 1] = H[m + 1], H[m]
        for k in range(n):
            B[k][m], B[k][m + 1] = B[k][m + 1], B[k][m]

        if m < n - 2:
            t0 = ctx.sqrt(ctx.add(ctx.mul(H[m][m], H[m][m]),
                                  ctx.mul(H[m][m + 1], H[m][m + 1])))
            if t0 != 0:
                t1 = ctx.div(H[m][m], t0)
                t2 = ctx.div(H[m][m + 1], t0)
                for i in range(m, n):
                    a, b = H[i][m], H[i][m + 1]
                    H[i][m] = ctx.add(ctx.mul(t1, a), ctx.mul(t2, b))
                    H[i][m + 1] = ctx.sub(ctx.mul(t1, b), ctx.mul(t2, a))

        for i in range(m + 1, n):
            reduce_row(i, min(i - 1, m + 1))

    return None


def discover_rhs(identity, basis: list[ConstantMonomial], digits: int = 100,
                 max_coeff_bits: int = 48, value_multiplier: int = 1
                 ) -> ClosedForm | None:
    """Recover a closed-form candidate for a series value by integer relation.

    The candidate is evidence only: it is emitted for human review, never
    promoted into the corpus.
    """
    prec = precision_for_digits(digits)
    value, _cert = evaluate_series(identity, digits)
    if value_multiplier != 1:
        value = value.scale(mpq(value_multiplier))
    balls = [value] + [m.ball(prec) for m in basis]
    labels = ["series"] + [ClosedForm([m]).describe() for m in basis]
    rel = pslq(balls, max_coeff_bits=max_coeff_bits, precision=prec,
               labels=labels)
    if rel is None or rel.coefficients[0] == 0:
        return None
    c0 = rel.coefficients[0] * value_multiplier
    terms = []
    for coeff, mono in zip(rel.coefficients[1:], basis):
        if coeff == 0:
            continue
        terms.append(ConstantMonomial(mpq(-coeff, c0) * mono.coeff, mono.factors))
    return ClosedForm(terms)
