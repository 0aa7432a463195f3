"""Exact verification of integration certificates behind the closed forms.

A certificate packages the chain that evaluates a series through a beta
integral: a geometric-moment closed form, a substitution z := c x^s (1-x),
a split of the resulting rational integrand into components, and for each
component an elementary antiderivative F with scale * F' == component
exactly.  Endpoint differences get branch corrections where an arctan
argument crosses a pole inside (0, 1); a rigorous quadrature of the same
component is the independent cross-check.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from gmpy2 import mpq, mpz

import gmpy2

from .balls import Ball
from .closedforms import ClosedForm
from .constants import const_pi
from .exact import binomial, rational
from .quadrature import integrate_rational
from .symbolic import Poly, Quad, RatFunc, isolate_roots, refine_root, sturm_root_count

__all__ = ["ElementaryExpr", "Certificate", "CertificateReport",
           "geometric_moment_closed_form", "substitute_and_normalize",
           "differentiate_elementary", "check_certificate",
           "corrected_endpoint_difference", "verify_functional_equation",
           "beta_rational", "branch_corrections", "CertComponent"]


# ---------------------------------------------------------------- moments


def geometric_moment_closed_form(p: Poly, start: int = 0) -> RatFunc:
    """Exact rational function equal to sum_{k>=start} P(k) z^k for |z| < 1.

    Newton's forward-difference form P(k) = sum_j (Delta^j P)(0) C(k, j)
    turns the sum into sum_j (Delta^j P)(0) z^j / (1-z)^(j+1).
    """
    if p.degree > 4:
        raise ValueError("moment machinery stops at degree 4")
    out = RatFunc.const(0)
    one_minus_z = Poly([1, -1])
    diff = Poly(p.coeffs)
    j = 0
    while not diff.is_zero():
        c = diff.eval(0)
        if c:
            out = out + RatFunc(Poly([0] * j + [c]), one_minus_z.pow(j + 1))
        diff = diff.shift(1) - diff
        j += 1
    if start == 1:
        out = out - RatFunc.const(p.eval(0))
    elif start != 0:
        raise ValueError("moment start index must be 0 or 1")
    return out


def substitute_and_normalize(r: RatFunc, c, s: int, t: int = 0,
                             scalar=1) -> RatFunc:
    """Compose with z := c x^s (1 - x), multiply by scalar * x^t."""
    c = rational(c)
    z = Poly([0] * s + [c, -c])  # c x^s - c x^(s+1)
    num = _compose(r.num, z)
    den = _compose(r.den, z)
    # clear the powers of z's denominator:  num/den are already polynomial
    out = RatFunc(num * Poly([0] * t + [1]), den).scale(rational(scalar))
    return out


def _compose(p: Poly, inner: Poly) -> Poly:
    acc = Poly()
    for coeff in reversed(p.coeffs):
        acc = acc * inner + Poly.const(coeff)
    return acc


# ------------------------------------------------------ elementary functions


@dataclass
class ElementaryExpr:
    """rational part + sum coeff_i log(arg_i) + sum coeff_j arctan(arg_j).

    Coefficients live in Q(sqrt d); log arguments are polynomials over Q
    (required strictly positive on [0, 1]); arctan arguments are rational
    functions whose poles in (0, 1) drive branch corrections.
    """

    d: int
    rational_parts: list[RatFunc]
    logs: list[tuple[Quad, Poly]]
    arctans: list[tuple[Quad, RatFunc]]

    def derivative(self) -> RatFunc:
        out = RatFunc.const(Quad.of(0, self.d))
        for piece in self.rational_parts:
            out = out + piece.derivative()
        for coeff, arg in self.logs:
            out = out + RatFunc(arg.derivative().scale(coeff), arg)
        for coeff, arg in self.arctans:
            un, ud = arg.num, arg.den
            dnum = un.derivative() * ud - un * ud.derivative()
            out = out + RatFunc(dnum.scale(coeff), ud * ud + un * un)
        return out

    def log_args_positive(self) -> bool:
        """Strict positivity of every log argument on [0, 1]."""
        for _, arg in self.logs:
            if any(isinstance(c, Quad) for c in arg.coeffs):
                raise ValueError("log arguments must have rational coefficients")
            if arg.eval(mpq(0)) <= 0 or arg.eval(mpq(1)) <= 0:
                return False
            if sturm_root_count(arg, mpq(0), mpq(1)) != 0:
                return False
        return True

    def eval_ball(self, x, prec: int) -> Ball:
        x = rational(x)
        acc = Ball.from_rational(0, prec)
        for piece in self.rational_parts:
            acc = acc + _quad_eval_ball(piece, x, prec, self.d)
        for coeff, arg in self.logs:
            v = arg.eval(x)
            acc = acc + Ball.from_rational(v, prec).log() * coeff.ball(prec)
        for coeff, arg in self.arctans:
            v = _quad_ratfunc_eval(arg, x, self.d)
            acc = acc + v.ball(prec).atan() * coeff.ball(prec)
        return acc


def _quad_eval_ball(piece: RatFunc, x: mpq, prec: int, d: int) -> Ball:
    num = piece.num.eval(x)
    den = piece.den.eval(x)
    num = Quad.of(num, d)
    den = Quad.of(den, d)
    return num.ball(prec) / den.ball(prec)


def _quad_ratfunc_eval(arg: RatFunc, x: mpq, d: int) -> Quad:
    num = Quad.of(arg.num.eval(x), d)
    den = Quad.of(arg.den.eval(x), d)
    return num / den


def differentiate_elementary(expr: ElementaryExpr) -> RatFunc:
    """Exact symbolic derivative as a single rational function over Q(sqrt d)."""
    return expr.derivative()


def _ratfunc_to_rational(r: RatFunc) -> RatFunc:
    """Collapse Quad coefficients with zero sqrt part back to plain mpq."""
    def conv(p: Poly) -> Poly:
        out = []
        for c in p.coeffs:
            if isinstance(c, Quad):
                out.append(c.rational_value())
            else:
                out.append(c)
        return Poly(out)
    return RatFunc(conv(r.num), conv(r.den))


# --------------------------------------------------------- branch correction


@dataclass
class BranchCrossing:
    location: tuple[mpq, mpq]   # isolating interval of the pole
    jump_sign: int              # arctan jumps by jump_sign * pi

    def to_json(self) -> dict:
        return {"interval": [str(self.location[0]), str(self.location[1])],
                "jump_sign": self.jump_sign}


def branch_corrections(expr: ElementaryExpr) -> list[tuple[Quad, BranchCrossing]]:
    """Sign-resolved arctan jumps at argument poles inside (0, 1)."""
    out = []
    for coeff, arg in expr.arctans:
        den = arg.den
        if den.degree <= 0:
            continue
        if any(isinstance(c, Quad) for c in den.coeffs):
            raise ValueError("pole isolation needs rational denominator coefficients")
        num = _require_rational_poly(arg.num)
        dden = den.derivative()
        for interval in isolate_roots(den, mpq(0), mpq(1)):
            iv = interval
            # shrink until numerator and den' are root-free on the interval
            width = (iv[1] - iv[0])
            for _ in range(200):
                if (sturm_root_count(num, iv[0], iv[1]) == 0
                        and sturm_root_count(dden, iv[0], iv[1]) == 0
                        and num.eval(iv[0]) != 0 and dden.eval(iv[0]) != 0):
                    break
                width /= 2
                iv = refine_root(den, iv, width)
            else:
                raise RuntimeError("could not separate arctan pole from numerator root")
            s_num = 1 if num.eval(iv[0]) > 0 else -1
            s_der = 1 if dden.eval(iv[0]) > 0 else -1
            # near a simple root x0: arg ~ num(x0) / (den'(x0) (x - x0));
            # right limit sign s = s_num * s_der, arctan jumps by s * pi
            out.append((coeff, BranchCrossing(iv, s_num * s_der)))
    return out


def _require_rational_poly(p: Poly) -> Poly:
    coeffs = []
    for c in p.coeffs:
        if isinstance(c, Quad):
            coeffs.append(c.rational_value())
        else:
            coeffs.append(c)
    return Poly(coeffs)


def corrected_endpoint_difference(expr: ElementaryExpr, prec: int) -> Ball:
    """integral_0^1 of expr' : F(1) - F(0) minus the arctan jump corrections."""
    naive = expr.eval_ball(1, prec) - expr.eval_ball(0, prec)
    pi = const_pi(prec)
    for coeff, crossing in branch_corrections(expr):
        jump = pi.scale(crossing.jump_sign) * coeff.ball(prec)
        naive = naive - jump
    return naive


# -------------------------------------------------------------- certificates


@dataclass
class CertComponent:
    label: str
    piece: RatFunc                 # exact rational integrand component (over Q)
    deriv_scale: mpq               # claim: deriv_scale * F' == piece
    antiderivative: ElementaryExpr
    value: ClosedForm              # claimed integral of the component over [0,1]


@dataclass
class Certificate:
    id: str
    anchor: str
    d: int
    components: list[CertComponent]
    moment_poly: Poly | None = None
    moment_shift: int = 0          # evaluate P at (j + shift) inside the moment
    moment_start: int = 0
    moment_expected: RatFunc | None = None
    subst: tuple | None = None     # (c, s, t, scalar)
    integrand_expected: RatFunc | None = None
    series_id: str | None = None
    total_value: ClosedForm | None = None
    prefix_order: int = 30


@dataclass
class CertificateReport:
    id: str
    stages: dict[str, bool]
    crossings: list[BranchCrossing]
    endpoint_digits: int
    quadrature_digits: int
    seconds: float

    @property
    def passed(self) -> bool:
        return all(self.stages.values())

    def to_json(self) -> dict:
        return {"id": self.id, "stages": self.stages,
                "crossings": [c.to_json() for c in self.crossings],
                "endpoint_digits": self.endpoint_digits,
                "quadrature_digits": self.quadrature_digits,
                "pass": self.passed, "seconds": round(self.seconds, 4)}


def _sum_components(cert: Certificate) -> RatFunc:
    acc = RatFunc.const(0)
    for comp in cert.components:
        acc = acc + comp.piece
    return acc


def check_certificate(cert: Certificate, endpoint_digits: int = 30,
                      quadrature_digits: int = 25) -> CertificateReport:
    """Run every exact stage plus the numeric endpoint and quadrature checks."""
    t0 = time.perf_counter()
    stages: dict[str, bool] = {}
    crossings: list[BranchCrossing] = []

    # (a) geometric-moment closed form
    if cert.moment_poly is not None:
        shifted = cert.moment_poly.shift(cert.moment_shift)
        computed = geometric_moment_closed_form(shifted, cert.moment_start)
        stages["moment"] = (cert.moment_expected is None
                            or computed == cert.moment_expected)
    else:
        computed = None

    # (b) substitution produces the stated integrand
    if cert.subst is not None and computed is not None:
        c, s, t, scalar = cert.subst
        integrand = substitute_and_normalize(computed, c, s, t, scalar)
        stages["substitution"] = (cert.integrand_expected is None
                                  or integrand == cert.integrand_expected)
    elif cert.integrand_expected is not None:
        integrand = cert.integrand_expected
        stages.setdefault("substitution", True)
    else:
        integrand = None

    # (d) the component split recombines to the integrand exactly
    if integrand is not None:
        stages["split"] = _sum_components(cert) == integrand

    # (c) exact derivative check per component, (e) endpoints, quadrature
    prec = max(128, int(endpoint_digits * 3.33) + 48)
    total = Ball.from_rational(0, prec)
    for comp in cert.components:
        derivative = comp.antiderivative.derivative()
        target = RatFunc(comp.piece.num.scale(Quad.of(1, cert.d)),
                         comp.piece.den.scale(Quad.of(1, cert.d)))
        diff = derivative.scale(Quad.of(comp.deriv_scale, cert.d)) - target
        stages[f"derivative:{comp.label}"] = diff.is_zero()
        stages[f"log-positivity:{comp.label}"] = \
            comp.antiderivative.log_args_positive()

        endpoint = corrected_endpoint_difference(comp.antiderivative, prec)
        endpoint = endpoint.scale(comp.deriv_scale)
        for coeff, crossing in branch_corrections(comp.antiderivative):
            crossings.append(crossing)
        claimed = comp.value.evaluate(prec)
        tol = mpq(1, 10) ** endpoint_digits * _scale_of(claimed)
        stages[f"endpoint:{comp.label}"] = _close(endpoint, claimed, tol)

        quad = integrate_rational(comp.piece, quadrature_digits)
        tol_q = mpq(1, 10) ** quadrature_digits * _scale_of(claimed)
        stages[f"quadrature:{comp.label}"] = _close(quad, claimed, tol_q)
        total = total + endpoint

    if cert.total_value is not None:
        claimed_total = cert.total_value.evaluate(prec)
        tol = mpq(1, 10) ** endpoint_digits * _scale_of(claimed_total)
        stages["total"] = _close(total, claimed_total, tol)

    # power-series prefix: Taylor coefficients of the integrand match the
    # explicit truncated sum of P(k) (c x^s (1-x))^(k-shifted) * x^t
    if cert.subst is not None and cert.moment_poly is not None \
            and integrand is not None:
        stages["series-prefix"] = _prefix_matches(cert, integrand)

    return CertificateReport(cert.id, stages, crossings, endpoint_digits,
                             quadrature_digits, time.perf_counter() - t0)


def _scale_of(ball: Ball) -> mpq:
    return max(mpq(1), abs(mpq(ball.mid)))


def _close(a: Ball, b: Ball, tol: mpq) -> bool:
    return abs(mpq(a.mid) - mpq(b.mid)) <= mpq(a.rad) + mpq(b.rad) + tol


def _taylor_prefix(r: RatFunc, order: int) -> list[mpq]:
    num = [mpq(c) for c in r.num.coeffs] + [mpq(0)] * (order + 1)
    den = [mpq(c) for c in r.den.coeffs] + [mpq(0)] * (order + 1)
    if den[0] == 0:
        raise ZeroDivisionError("integrand has a pole at 0")
    out = []
    for m in range(order + 1):
        acc = num[m]
        for i in range(1, m + 1):
            acc -= den[i] * out[m - i]
        out.append(acc / den[0])
    return out


def _prefix_matches(cert: Certificate, integrand: RatFunc) -> bool:
    order = cert.prefix_order
    c, s, t, scalar = cert.subst
    c = rational(c)
    z = Poly([0] * s + [c, -c])
    acc = Poly()
    k = cert.moment_start
    zpow = z.pow(k)
    # P(k + shift) z^k x^t, truncated beyond x^order
    while k * s <= order:
        coeff = cert.moment_poly.eval(k + cert.moment_shift)
        acc = acc + zpow.scale(coeff * rational(scalar))
        zpow = zpow * z
        k += 1
    acc = acc * Poly([0] * t + [1])
    expected = _taylor_prefix(integrand, order)
    have = list(acc.coeffs[: order + 1]) + [mpq(0)] * (order + 1 - len(acc.coeffs))
    return all(mpq(a) == b for a, b in zip(have[: order + 1], expected))


# ------------------------------------------------- functional equation, beta


def verify_functional_equation(order: int) -> tuple[bool, int]:
    """(f-1)(3f+1)^3 == x(4f)^4 as power series to the given order,
    with f(x) = sum_k C(4k,k) x^k.  Returns (ok, first_bad_index)."""
    n = order + 1
    f = [binomial(4 * k, k) for k in range(n)]

    def mul(a, b):
        out = [mpz(0)] * n
        for i, ai in enumerate(a):
            if ai:
                for j in range(min(len(b), n - i)):
                    if b[j]:
                        out[i + j] += ai * b[j]
        return out

    fm1 = list(f)
    fm1[0] -= 1
    tf1 = [3 * c for c in f]
    tf1[0] += 1
    lhs = mul(fm1, mul(tf1, mul(tf1, tf1)))
    ff = [4 * c for c in f]
    f4 = mul(mul(ff, ff), mul(ff, ff))
    rhs = [mpz(0)] + f4[: n - 1]
    for i in range(n):
        if lhs[i] != rhs[i]:
            return False, i
    return True, -1


def beta_rational(a: int, b: int) -> mpq:
    """Euler beta at positive integers: (a-1)!(b-1)!/(a+b-1)!."""
    if a < 1 or b < 1:
        raise ValueError("beta_rational needs positive integer arguments")
    return mpq(gmpy2.fac(a - 1) * gmpy2.fac(b - 1), gmpy2.fac(a + b - 1))


# ------------------------------------------------------------- serialization


def _poly_to_json(p: Poly) -> list:
    out = []
    for c in p.coeffs:
        if isinstance(c, Quad):
            if c.b:
                out.append([str(c.a), str(c.b)])
            else:
                out.append(str(c.a))
        else:
            out.append(str(c))
    return out


def _poly_from_json(doc: list, d: int) -> Poly:
    coeffs = []
    for c in doc:
        if isinstance(c, list):
            coeffs.append(Quad(rational(c[0]), rational(c[1]), d))
        else:
            coeffs.append(rational(c))
    return Poly(coeffs)


def _ratfunc_to_json(r: RatFunc) -> dict:
    return {"num": _poly_to_json(r.num), "den": _poly_to_json(r.den)}


def _ratfunc_from_json(doc: dict, d: int) -> RatFunc:
    return RatFunc(_poly_from_json(doc["num"], d), _poly_from_json(doc["den"], d))


def _quad_to_json(q: Quad) -> list:
    return [str(q.a), str(q.b)]


def _quad_from_json(doc, d: int) -> Quad:
    return Quad(rational(doc[0]), rational(doc[1]), d)


def elementary_to_json(expr: ElementaryExpr) -> dict:
    return {
        "rational": [_ratfunc_to_json(r) for r in expr.rational_parts],
        "logs": [{"coeff": _quad_to_json(c), "arg": _poly_to_json(a)}
                 for c, a in expr.logs],
        "arctans": [{"coeff": _quad_to_json(c), **_ratfunc_to_json(a)}
                    for c, a in expr.arctans],
    }


def elementary_from_json(doc: dict, d: int) -> ElementaryExpr:
    return ElementaryExpr(
        d=d,
        rational_parts=[_ratfunc_from_json(r, d) for r in doc.get("rational", ())],
        logs=[(_quad_from_json(entry["coeff"], d),
               _poly_from_json(entry["arg"], d))
              for entry in doc.get("logs", ())],
        arctans=[(_quad_from_json(entry["coeff"], d),
                  _ratfunc_from_json({"num": entry["num"], "den": entry["den"]}, d))
                 for entry in doc.get("arctans", ())],
    )


def certificate_to_json(cert: Certificate) -> dict:
    out: dict = {"kind": "certificate", "id": cert.id, "anchor": cert.anchor,
                 "d": cert.d}
    if cert.series_id:
        out["series_id"] = cert.series_id
    if cert.moment_poly is not None:
        out["moment"] = {
            "poly": _poly_to_json(cert.moment_poly),
            "shift": cert.moment_shift,
            "start": cert.moment_start,
            "expected": (_ratfunc_to_json(cert.moment_expected)
                         if cert.moment_expected is not None else None),
        }
    if cert.subst is not None:
        c, s, t, scalar = cert.subst
        out["subst"] = {"c": str(c), "s": s, "t": t, "scalar": str(scalar)}
    if cert.integrand_expected is not None:
        out["integrand"] = _ratfunc_to_json(cert.integrand_expected)
    out["components"] = [{
        "label": comp.label,
        "piece": _ratfunc_to_json(comp.piece),
        "deriv_scale": str(comp.deriv_scale),
        "antiderivative": elementary_to_json(comp.antiderivative),
        "value": comp.value.to_json(),
    } for comp in cert.components]
    if cert.total_value is not None:
        out["total_value"] = cert.total_value.to_json()
    return out


def certificate_from_json(doc: dict) -> Certificate:
    from .closedforms import ClosedForm
    d = doc["d"]
    moment = doc.get("moment")
    subst = doc.get("subst")
    return Certificate(
        id=doc["id"],
        anchor=doc["anchor"],
        d=d,
        components=[CertComponent(
            label=comp["label"],
            piece=_ratfunc_from_json(comp["piece"], d),
            deriv_scale=rational(comp["deriv_scale"]),
            antiderivative=elementary_from_json(comp["antiderivative"], d),
            value=ClosedForm.from_json(comp["value"]),
        ) for comp in doc["components"]],
        moment_poly=(_poly_from_json(moment["poly"], d)
                     if moment is not None else None),
        moment_shift=moment["shift"] if moment is not None else 0,
        moment_start=moment["start"] if moment is not None else 0,
        moment_expected=(_ratfunc_from_json(moment["expected"], d)
                         if moment is not None and moment.get("expected")
                         else None),
        subst=((rational(subst["c"]), subst["s"], subst["t"],
                rational(subst["scalar"])) if subst is not None else None),
        integrand_expected=(_ratfunc_from_json(doc["integrand"], d)
                            if doc.get("integrand") else None),
        series_id=doc.get("series_id"),
        total_value=(ClosedForm.from_json(doc["total_value"])
                     if doc.get("total_value") else None),
    )


def load_bundled_certificates() -> list[Certificate]:
    from .corpus import load_certificates
    return [certificate_from_json(doc) for doc in load_certificates()]
