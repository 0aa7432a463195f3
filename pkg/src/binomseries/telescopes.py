"""Exact verification of the eight finite telescoping families.

Each family states  sum_{k=start}^{n} T(m,k) * C(4k,k)^sigma / (D_t(k) m^k)
= closed(m,n), with closed(m,n) = A(m) + S(m,n) * C(4n,n)^sigma /
(D_c(n) m^n).  Two verification modes:

* instance checks: exact rational partial sums vs the closed form;
* induction-step check: the difference closed(n) - closed(n-1) - term(n)
  is reduced to a bivariate rational function of (m, n) by replacing the
  ratio C(4n,n)/C(4n-4,n-1) with (4n-3)(4n-2)(4n-1)(4n)/(n(3n-2)(3n-1)(3n)),
  cleared of denominators, and checked to be the zero polynomial.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from gmpy2 import mpq

from .exact import binomial, rational
from .symbolic import BiPoly, Poly

__all__ = ["TelescopeFamily", "FAMILIES", "family_by_tag", "partial_sum_exact",
           "closed_form_partial", "verify_instances", "verify_induction_step",
           "verify_shift_identity", "InstanceReport", "InductionReport"]


def _bp(**monomials) -> BiPoly:
    """BiPoly from {'m<i>n<j>': coeff} keys like c, m, n, mn, n2, mn3."""
    terms = {}
    for key, coeff in monomials.items():
        i = j = 0
        rest = key
        if rest.startswith("m"):
            i = 1
            rest = rest[1:]
            if rest and rest[0].isdigit():
                i = int(rest[0])
                rest = rest[1:]
        if rest.startswith("n"):
            j = 1
            rest = rest[1:]
            if rest:
                j = int(rest)
        terms[(i, j)] = rational(coeff)
    return BiPoly(terms)


def _poly(*descending) -> Poly:
    return Poly(list(reversed([rational(c) for c in descending])))


@dataclass(frozen=True)
class TelescopeFamily:
    tag: str
    start: int                 # first summation index
    sigma: int                 # +1 binomial in numerator, -1 in denominator
    term_num: BiPoly           # T(m, k) with the BiPoly's n-slot holding k
    term_den: Poly             # D_t(k), m-free
    closed_const: BiPoly       # A(m)
    closed_num: BiPoly         # S(m, n)
    closed_den: Poly           # D_c(n)
    limit: BiPoly              # value of the infinite sum for admissible m
    min_abs_m: mpq             # limit valid for |m| > this bound
    fixed_m: mpq | None = None

    def term(self, m: mpq, k: int) -> mpq:
        b = mpq(binomial(4 * k, k)) ** self.sigma
        return (self.term_num.eval(m, k) * b
                / (self.term_den.eval(k) * m ** k))

    def closed(self, m: mpq, n: int) -> mpq:
        b = mpq(binomial(4 * n, n)) ** self.sigma
        return (self.closed_const.eval(m, 0)
                + self.closed_num.eval(m, n) * b
                / (self.closed_den.eval(n) * m ** n))

    def limit_value(self, m: mpq) -> mpq:
        return self.limit.eval(m, 0)


def _l21(tag: str, term_num: BiPoly, term_den: Poly,
         const: int, closed_num: BiPoly, closed_den: Poly) -> TelescopeFamily:
    return TelescopeFamily(
        tag=tag, start=1, sigma=-1,
        term_num=term_num, term_den=term_den,
        closed_const=_bp(c=const), closed_num=closed_num, closed_den=closed_den,
        limit=_bp(c=const), min_abs_m=mpq(27, 256))


FAMILIES: tuple[TelescopeFamily, ...] = (
    _l21("L21_K",
         _bp(mn3=256, n3=-27, mn2=-384, n2=-27, mn=176, n=-6, m=-24),
         _poly(1, 0),
         6, _bp(n2=-27, n=-27, c=-6), Poly([1])),
    _l21("L21_4K1",
         _bp(mn3=256, n3=-27, mn2=-128, n2=-54, mn=-16, n=-33, m=8, c=-6),
         _poly(4, 1),
         6, _bp(c=-3) * _bp(n=1, c=1) * _bp(n=3, c=1) * _bp(n=3, c=2),
         _poly(4, 1)),
    _l21("L21_3K1",
         _bp(mn3=256, n3=-27, mn2=-384, mn=176, n=3, m=-24),
         _poly(3, -1, 0),
         3, _bp(n=-9, c=-3), Poly([1])),
    _l21("L21_3K2",
         _bp(mn3=256, n3=-27, mn2=-384, n2=27, mn=176, n=-6, m=-24),
         _poly(1, 0) * _poly(3, -1) * _poly(3, -2),
         3, _bp(c=-3), Poly([1])),
    TelescopeFamily(
        tag="L36_K1", start=0, sigma=1,
        term_num=_bp(n3=256, mn3=-27, n2=384, n=176, mn=21, m=-6, c=24),
        term_den=_poly(1, 1),
        closed_const=_bp(m=-6),
        closed_num=_bp(c=8) * _bp(n=2, c=1) * _bp(n=4, c=1) * _bp(n=4, c=3),
        closed_den=_poly(1, 1),
        limit=_bp(m=-6), min_abs_m=mpq(256, 27)),
    TelescopeFamily(
        tag="L36_3K1", start=0, sigma=1,
        term_num=_bp(n3=256, mn3=-27, n2=384, n=176, mn=3, c=24),
        term_den=_poly(3, 1),
        closed_const=_bp(),
        closed_num=_bp(c=8) * _bp(n=2, c=1) * _bp(n=4, c=1) * _bp(n=4, c=3),
        closed_den=_poly(3, 1),
        limit=_bp(), min_abs_m=mpq(256, 27)),
    TelescopeFamily(
        tag="L36_3K2", start=0, sigma=1,
        term_num=_bp(n3=256, mn3=-27, n2=384, mn2=-27, n=176, mn=-6, c=24),
        term_den=_poly(3, 1) * _poly(3, 2),
        closed_const=_bp(),
        closed_num=_bp(c=8) * _bp(n=2, c=1) * _bp(n=4, c=1) * _bp(n=4, c=3),
        closed_den=_poly(3, 1) * _poly(3, 2),
        limit=_bp(), min_abs_m=mpq(256, 27)),
    TelescopeFamily(
        tag="T13_ODD", start=0, sigma=1,
        term_num=_bp(n3=22, n2=-6, n=-10, c=3),
        term_den=_poly(2, -1) * _poly(4, -1) * _poly(4, -3),
        closed_const=_bp(),
        closed_num=_bp(c=-1),
        closed_den=Poly([1]),
        limit=_bp(), min_abs_m=mpq(256, 27), fixed_m=mpq(16)),
)


def family_by_tag(tag: str) -> TelescopeFamily:
    for fam in FAMILIES:
        if fam.tag == tag:
            return fam
    raise KeyError(f"unknown telescope family {tag!r}")


def partial_sum_exact(family: TelescopeFamily, m, n: int) -> mpq:
    """Exact sum of the family's terms from the start index through n."""
    m = rational(m)
    if m == 0:
        raise ValueError("telescoping families require m != 0")
    if family.fixed_m is not None and m != family.fixed_m:
        raise ValueError(f"{family.tag} is stated only for m = {family.fixed_m}")
    acc = mpq(0)
    for k in range(family.start, n + 1):
        if family.term_den.eval(k) == 0:
            raise ZeroDivisionError(f"{family.tag}: term denominator zero at k={k}")
        acc += family.term(m, k)
    return acc


def closed_form_partial(family: TelescopeFamily, m, n: int) -> mpq:
    m = rational(m)
    if m == 0:
        raise ValueError("telescoping families require m != 0")
    return family.closed(m, n)


@dataclass
class InstanceReport:
    tag: str
    checked: int
    passed: bool
    first_failure: tuple | None
    seconds: float

    def to_json(self) -> dict:
        return {"family": self.tag, "instances": self.checked,
                "pass": self.passed,
                "first_failure": (None if self.first_failure is None
                                  else [str(x) for x in self.first_failure]),
                "seconds": round(self.seconds, 4)}


def verify_instances(family: TelescopeFamily, m_samples, n_max: int) -> InstanceReport:
    """Exact equality of partial sums and closed forms on a grid of (m, n)."""
    t0 = time.perf_counter()
    checked = 0
    if family.fixed_m is not None:
        m_samples = [family.fixed_m]
    for m in m_samples:
        m = rational(m)
        acc = mpq(0)
        for n in range(family.start, n_max + 1):
            acc += family.term(m, n)
            checked += 1
            if acc != family.closed(m, n):
                return InstanceReport(family.tag, checked, False,
                                      (m, n), time.perf_counter() - t0)
    return InstanceReport(family.tag, checked, True, None,
                          time.perf_counter() - t0)


@dataclass
class InductionReport:
    tag: str
    base_ok: bool
    step_ok: bool
    residual_terms: int
    seconds: float

    @property
    def passed(self) -> bool:
        return self.base_ok and self.step_ok

    def to_json(self) -> dict:
        return {"family": self.tag, "base": self.base_ok, "step": self.step_ok,
                "residual_terms": self.residual_terms,
                "pass": self.passed, "seconds": round(self.seconds, 4)}


# C(4n,n)/C(4n-4,n-1) as an exact rational function of n.
_RATIO_NUM = _poly(4, -3) * _poly(4, -2) * _poly(4, -1) * _poly(4, 0)
_RATIO_DEN = _poly(1, 0) * _poly(3, -2) * _poly(3, -1) * _poly(3, 0)


def _shift_n(p: BiPoly, delta: int) -> BiPoly:
    """Substitute n -> n + delta."""
    out = BiPoly()
    for (i, j), c in p.terms.items():
        shifted = Poly([0, 1]).shift(delta).pow(j).scale(c)
        out = out + BiPoly({(i, jj): cc for jj, cc in enumerate(shifted.coeffs)})
    return out


def induction_residual(family: TelescopeFamily) -> BiPoly:
    """Cleared-denominator residual of closed(n)-closed(n-1)-term(n); zero iff valid."""
    s_n = family.closed_num
    s_prev = _shift_n(family.closed_num, -1)
    dc_n = BiPoly.from_poly_in_n(family.closed_den)
    dc_prev = BiPoly.from_poly_in_n(Poly(family.closed_den.coeffs).shift(-1))
    dt_n = BiPoly.from_poly_in_n(family.term_den)
    t_n = family.term_num
    m = BiPoly.var_m()
    num_r = BiPoly.from_poly_in_n(_RATIO_NUM)
    den_r = BiPoly.from_poly_in_n(_RATIO_DEN)

    # closed(n)-closed(n-1)-term(n) over the common factor w = C^sigma/m^n:
    #   S(n)/Dc(n) - S(n-1)*m*R^(-sigma)/Dc(n-1) - T(n)/Dt(n) == 0
    if family.sigma == -1:
        # R^(+1) = num_r/den_r
        a = s_n * dc_prev * dt_n * den_r
        b = s_prev * m * num_r * dc_n * dt_n
        c = t_n * dc_n * dc_prev * den_r
    else:
        # R^(-1) = den_r/num_r
        a = s_n * dc_prev * dt_n * num_r
        b = s_prev * m * den_r * dc_n * dt_n
        c = t_n * dc_n * dc_prev * num_r
    residual = a - b - c
    if family.fixed_m is not None:
        return BiPoly.from_poly_in_n(residual.subst_m(family.fixed_m))
    return residual


def verify_induction_step(family: TelescopeFamily) -> InductionReport:
    """Base case plus the symbolic telescoping step, both exact."""
    t0 = time.perf_counter()
    residual = induction_residual(family)
    step_ok = residual.is_zero()

    # base: for start 1 the empty sum closed(m, 0) must vanish identically;
    # for start 0 the single term at k=0 must equal closed(m, 0)
    dc0 = family.closed_den.eval(0)
    if dc0 == 0:
        return InductionReport(family.tag, False, step_ok,
                               len(residual.terms), time.perf_counter() - t0)
    if family.start == 1:
        base = family.closed_const.scale(dc0) + _subst_n_zero(family.closed_num)
        base_ok = base.is_zero()
    else:
        dt0 = family.term_den.eval(0)
        if dt0 == 0:
            return InductionReport(family.tag, False, step_ok,
                                   len(residual.terms), time.perf_counter() - t0)
        lhs = family.closed_const.scale(dc0 * dt0) + \
            _subst_n_zero(family.closed_num).scale(dt0)
        rhs = _subst_n_zero(family.term_num).scale(dc0)
        diff = lhs - rhs
        if family.fixed_m is not None:
            diff = BiPoly.from_poly_in_n(diff.subst_m(family.fixed_m))
        base_ok = diff.is_zero()

    return InductionReport(family.tag, base_ok, step_ok,
                           len(residual.terms), time.perf_counter() - t0)


def _subst_n_zero(p: BiPoly) -> BiPoly:
    return BiPoly({(i, 0): c for (i, j), c in p.terms.items() if j == 0})


@dataclass
class ShiftReport:
    numeric_max_k: int
    numeric_ok: bool
    symbolic_ok: bool
    seconds: float

    @property
    def passed(self) -> bool:
        return self.numeric_ok and self.symbolic_ok

    def to_json(self) -> dict:
        return {"check": "index-shift ratio identity",
                "numeric_max_k": self.numeric_max_k,
                "numeric": self.numeric_ok, "symbolic": self.symbolic_ok,
                "pass": self.passed, "seconds": round(self.seconds, 4)}


def verify_shift_identity(k_max: int = 500) -> ShiftReport:
    """3k*C(4k,k)/((2k-1)(4k-1)(4k-3)) == 8*C(4k-4,k-1)/((3k-2)(3k-1)), k >= 1."""
    t0 = time.perf_counter()
    numeric_ok = True
    for k in range(1, k_max + 1):
        lhs = mpq(3 * k * binomial(4 * k, k),
                  (2 * k - 1) * (4 * k - 1) * (4 * k - 3))
        rhs = mpq(8 * binomial(4 * k - 4, k - 1), (3 * k - 2) * (3 * k - 1))
        if lhs != rhs:
            numeric_ok = False
            break
    # symbolic: replace C(4k,k) by C(4k-4,k-1) * num_R/den_R and clear
    three_k = _poly(3, 0)
    lhs_poly = three_k * _RATIO_NUM * _poly(3, -2) * _poly(3, -1)
    rhs_poly = Poly([8]) * _RATIO_DEN * _poly(2, -1) * _poly(4, -1) * _poly(4, -3)
    symbolic_ok = (lhs_poly - rhs_poly).is_zero()
    return ShiftReport(k_max, numeric_ok, symbolic_ok, time.perf_counter() - t0)
