"""Exact verification of congruence, p-adic integrality, and divisibility claims.

Everything is exact big-rational arithmetic: harmonic arguments crossing p
and binomials acquiring p-factors cancel exactly, and x = y (mod p^e) for
rationals means v_p(x - y) >= e.  No floating point enters this module.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from pathlib import Path

from gmpy2 import mpq

from .exact import (PADIC_INFINITY, bernoulli_number, bernoulli_poly, binomial,
                    euler_number, euler_poly, fermat_quotient, harmonic,
                    legendre_symbol, padic_valuation)
from .model import CongruenceClaim, IntegralityClaim, SummandSpec, resolve_range

__all__ = ["CongruenceResult", "IntegralityResult", "AdmissibilityError",
           "sum_range_exact", "eval_rhs_symbolic", "check_congruence",
           "check_padic_integrality", "check_integer_divisibility",
           "congruence_scan", "Checkpoint"]


class AdmissibilityError(ValueError):
    """The prime is excluded by the claim's constraints."""


@dataclass
class CongruenceResult:
    claim_id: str
    p: int
    achieved: float  # valuation; may be PADIC_INFINITY
    required: int
    passed: bool
    seconds: float
    skipped: str = ""

    def to_json(self) -> dict:
        achieved = ("inf" if self.achieved == PADIC_INFINITY
                    else int(self.achieved))
        return {"id": self.claim_id, "p": self.p, "achieved": achieved,
                "required": self.required, "pass": self.passed,
                **({"skipped": self.skipped} if self.skipped else {}),
                "seconds": round(self.seconds, 4)}


@dataclass
class IntegralityResult:
    claim_id: str
    p: int | None
    n: int
    achieved: float | None  # p-adic valuation, or None for INTEGER claims
    passed: bool
    seconds: float

    def to_json(self) -> dict:
        achieved = self.achieved
        if achieved == PADIC_INFINITY:
            achieved = "inf"
        elif achieved is not None:
            achieved = int(achieved)
        return {"id": self.claim_id, "p": self.p, "n": self.n,
                "achieved": achieved, "pass": self.passed,
                "seconds": round(self.seconds, 4)}


def sum_range_exact(summand: SummandSpec, p: int, range_kind: str) -> mpq:
    """Exact rational sum of the summand over the claim's resolved k-range."""
    acc = mpq(0)
    for k in resolve_range(range_kind, p):
        acc += summand.eval(k)
    return acc


def _symbol_value(sym, p: int) -> mpq:
    if sym.sym == "p":
        return mpq(p)
    if sym.sym == "qp":
        return mpq(fermat_quotient(sym.a, p))
    if sym.sym == "legendre":
        return mpq(legendre_symbol(sym.a, p))
    if sym.sym == "legendre_p":
        return mpq(legendre_symbol(p, sym.a))
    if sym.sym == "bernoulli":
        return bernoulli_number(p + sym.offset)
    if sym.sym == "bernoulli_poly":
        return bernoulli_poly(p + sym.offset, sym.x)
    if sym.sym == "euler":
        return mpq(euler_number(p + sym.offset))
    if sym.sym == "euler_poly":
        return euler_poly(p + sym.offset, sym.x)
    if sym.sym == "harmonic":
        return harmonic(p + sym.offset, sym.order or 1)
    raise ValueError(f"unknown rhs symbol {sym.sym!r}")


def eval_rhs_symbolic(rhs_terms, p: int) -> mpq:
    """Exact value of a congruence right-hand side at a given prime."""
    acc = mpq(0)
    for term in rhs_terms:
        v = term.coeff
        for f in term.factors:
            v *= _symbol_value(f, p) ** f.power
        acc += v
    return acc


def check_congruence(claim: CongruenceClaim, p: int) -> CongruenceResult:
    """v_p(multiplier * LHS - RHS) compared against the required exponent."""
    if not claim.prime.admits(p):
        raise AdmissibilityError(f"{claim.id}: {claim.prime.why_rejected(p)}")
    t0 = time.perf_counter()
    lhs = claim.multiplier_at(p) * sum_range_exact(claim.summand, p, claim.range_kind)
    rhs = eval_rhs_symbolic(claim.rhs_terms, p)
    achieved = padic_valuation(lhs - rhs, p)
    return CongruenceResult(
        claim_id=claim.id, p=p, achieved=achieved,
        required=claim.modulus_exponent,
        passed=achieved >= claim.modulus_exponent,
        seconds=time.perf_counter() - t0)


def _resolve_bound(expr: str, p: int, n: int) -> int:
    if expr == "0":
        return 0
    if expr == "n":
        return n
    if expr == "n-1":
        return n - 1
    if expr == "p-1":
        return p - 1
    if expr == "pn-1":
        return p * n - 1
    raise ValueError(f"unknown range bound {expr!r}")


def _plain_sum(summand: SummandSpec, lo: int, hi: int) -> mpq:
    acc = mpq(0)
    for k in range(lo, hi + 1):
        acc += summand.eval(k)
    return acc


def check_padic_integrality(claim: IntegralityClaim, p: int, n: int) -> IntegralityResult:
    """v_p((main - factor*aux)/divisor) >= 0, all in exact arithmetic."""
    if claim.claim_kind != "P_ADIC":
        raise ValueError(f"{claim.id} is not a p-adic claim")
    if not claim.prime.admits(p):
        raise AdmissibilityError(f"{claim.id}: {claim.prime.why_rejected(p)}")
    t0 = time.perf_counter()
    value = _plain_sum(claim.summand, _resolve_bound(claim.main_lower, p, n),
                       _resolve_bound(claim.main_upper, p, n))
    if claim.aux_upper is not None:
        aux = _plain_sum(claim.summand, 0, _resolve_bound(claim.aux_upper, p, n))
        factor = mpq(legendre_symbol(p, 3)) if claim.aux_factor == "legendre_p3" \
            else mpq(p)
        value -= factor * aux
    if claim.divisor_form != "pn_pow":
        raise ValueError(f"{claim.id}: p-adic claim needs a (pn)^e divisor")
    value /= mpq(p * n) ** claim.divisor_exp
    achieved = padic_valuation(value, p)
    return IntegralityResult(claim.id, p, n, achieved, achieved >= 0,
                             time.perf_counter() - t0)


def check_integer_divisibility(claim: IntegralityClaim, n: int) -> IntegralityResult:
    """Exact divisibility of the integer sum by the claim's integer divisor."""
    if claim.claim_kind != "INTEGER":
        raise ValueError(f"{claim.id} is not an integer-divisibility claim")
    t0 = time.perf_counter()
    total = _plain_sum(claim.summand, _resolve_bound(claim.main_lower, 0, n),
                       _resolve_bound(claim.main_upper, 0, n))
    divisor = 6 * n * (2 * n - 1) * binomial(3 * n, n)
    quotient = total / divisor
    passed = quotient.denominator == 1
    return IntegralityResult(claim.id, None, n, None, passed,
                             time.perf_counter() - t0)


class Checkpoint:
    """Resumable scan state: one 'claim_id p' line per completed check."""

    def __init__(self, path: str | Path | None):
        self.path = Path(path) if path else None
        self.done: set[tuple[str, int]] = set()
        if self.path and self.path.exists():
            for line in self.path.read_text().splitlines():
                parts = line.split()
                if len(parts) == 2:
                    self.done.add((parts[0], int(parts[1])))

    def seen(self, claim_id: str, p: int) -> bool:
        return (claim_id, p) in self.done

    def record(self, claim_id: str, p: int) -> None:
        self.done.add((claim_id, p))
        if self.path:
            with self.path.open("a") as fh:
                fh.write(f"{claim_id} {p}\n")


def congruence_scan(claim: CongruenceClaim, primes, checkpoint: Checkpoint | None = None
                    ) -> list[CongruenceResult]:
    """Run check_congruence across primes; never aborts on failures."""
    out = []
    for p in primes:
        if checkpoint and checkpoint.seen(claim.id, p):
            continue
        if not claim.prime.admits(p):
            out.append(CongruenceResult(
                claim_id=claim.id, p=p, achieved=0,
                required=claim.modulus_exponent, passed=True, seconds=0.0,
                skipped=claim.prime.why_rejected(p)))
            continue
        out.append(check_congruence(claim, p))
        if checkpoint:
            checkpoint.record(claim.id, p)
    return out
