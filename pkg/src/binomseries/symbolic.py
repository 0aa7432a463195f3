"""Exact univariate/bivariate polynomial and rational-function arithmetic.

Coefficients live either in Q (gmpy2.mpq) or in a real quadratic field
Q(sqrt(d)) represented by ``Quad``.  Polynomials are dense ascending
coefficient lists.  Also provides Sturm-sequence real-root counting and
isolation on rational intervals, used by the certificate checker for
branch analysis and log-argument positivity.
"""

from __future__ import annotations

from dataclasses import dataclass

from gmpy2 import mpq

from .exact import rational

__all__ = ["Quad", "Poly", "RatFunc", "BiPoly", "sturm_root_count", "isolate_roots"]


@dataclass(frozen=True)
class Quad:
    """Element a + b*sqrt(d) of a real quadratic field (d square-free, d >= 1)."""

    a: mpq
    b: mpq
    d: int

    @staticmethod
    def of(x, d: int) -> "Quad":
        if isinstance(x, Quad):
            if x.d != d and x.b != 0:
                raise ValueError("mixing different quadratic fields")
            return Quad(x.a, x.b, d)
        return Quad(rational(x), mpq(0), d)

    def _lift(self, other) -> "Quad":
        if isinstance(other, Quad):
            if other.d != self.d and other.b != 0 and self.b != 0:
                raise ValueError("mixing different quadratic fields")
            return Quad(other.a, other.b, self.d)
        return Quad(rational(other), mpq(0), self.d)

    def __add__(self, other):
        o = self._lift(other)
        return Quad(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __neg__(self):
        return Quad(-self.a, -self.b, self.d)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        return Quad(self.a * o.a + self.d * self.b * o.b,
                    self.a * o.b + self.b * o.a, self.d)

    __rmul__ = __mul__

    def inverse(self) -> "Quad":
        norm = self.a * self.a - self.d * self.b * self.b
        if norm == 0:
            raise ZeroDivisionError("zero or degenerate quadratic element")
        return Quad(self.a / norm, -self.b / norm, self.d)

    def __truediv__(self, other):
        return self * self._lift(other).inverse()

    def __rtruediv__(self, other):
        return self._lift(other) * self.inverse()

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    def __eq__(self, other) -> bool:
        o = self._lift(other) if not isinstance(other, Quad) else other
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        return hash((self.a, self.b, self.d if self.b else 0))

    def rational_value(self) -> mpq:
        if self.b != 0:
            raise ValueError(f"{self} is irrational")
        return self.a

    def ball(self, prec: int):
        from .balls import Ball
        from .constants import const_sqrt
        out = Ball.from_rational(self.a, prec)
        if self.b:
            out = out + const_sqrt(self.d, prec).scale(self.b)
        return out

    def __repr__(self):
        if not self.b:
            return str(self.a)
        return f"({self.a}+{self.b}*sqrt{self.d})"


def _coeff(x):
    """Coerce a scalar to mpq, passing Quad through untouched."""
    return x if isinstance(x, Quad) else rational(x)


class Poly:
    """Dense univariate polynomial, coefficients ascending; field Q or Q(sqrt d)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_coeff(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = cs

    @staticmethod
    def const(c) -> "Poly":
        return Poly([c])

    @staticmethod
    def x() -> "Poly":
        return Poly([0, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self):
        if not self.coeffs:
            return mpq(0)
        return self.coeffs[-1]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(self.coeffs))

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(out)

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        if self.is_zero() or other.is_zero():
            return Poly()
        a, b = self.coeffs, other.coeffs
        out = [mpq(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if not ca:
                continue
            for j, cb in enumerate(b):
                if cb:
                    out[i + j] = out[i + j] + ca * cb
        return Poly(out)

    def scale(self, c) -> "Poly":
        c = _coeff(c)
        return Poly([ci * c for ci in self.coeffs])

    def pow(self, n: int) -> "Poly":
        out = Poly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def eval(self, x):
        """Horner evaluation at an exact scalar (mpq, int, or Quad)."""
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        if acc is None:
            return mpq(0)
        return acc

    def eval_ball(self, x, prec: int):
        from .balls import Ball
        acc = Ball.from_rational(0, prec)
        for c in reversed(self.coeffs):
            cb = c.ball(prec) if isinstance(c, Quad) else Ball.from_rational(c, prec)
            acc = acc * x + cb
        return acc

    def derivative(self) -> "Poly":
        return Poly([c * i for i, c in enumerate(self.coeffs)][1:])

    def shift(self, c) -> "Poly":
        """Compose with x -> x + c."""
        out = Poly()
        xc = Poly([_coeff(c), 1])
        power = Poly.const(1)
        for coeff in self.coeffs:
            out = out + power.scale(coeff)
            power = power * xc
        return out

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        den = other.coeffs
        qdeg = len(rem) - len(den)
        if qdeg < 0:
            return Poly(), Poly(rem)
        quo = [mpq(0)] * (qdeg + 1)
        inv_lead = 1 / den[-1]
        for i in range(qdeg, -1, -1):
            c = rem[i + len(den) - 1] * inv_lead
            quo[i] = c
            if c:
                for j, dj in enumerate(den):
                    rem[i + j] = rem[i + j] - c * dj
        return Poly(quo), Poly(rem[: len(den) - 1])

    def gcd(self, other: "Poly") -> "Poly":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a.divmod(b)[1]
        if a.is_zero():
            return a
        return a.scale(1 / a.leading())

    def squarefree_part(self) -> "Poly":
        g = self.gcd(self.derivative())
        if g.degree <= 0:
            return self
        return self.divmod(g)[0]

    def cauchy_root_bound(self) -> mpq:
        """All real roots lie in [-B, B]."""
        if self.degree <= 0:
            return mpq(0)
        lead = abs(self.coeffs[-1])
        m = max((abs(c) for c in self.coeffs[:-1]), default=mpq(0))
        return 1 + m / lead

    def __repr__(self):
        if not self.coeffs:
            return "Poly(0)"
        terms = [f"{c}*x^{i}" for i, c in enumerate(self.coeffs) if c]
        return "Poly(" + " + ".join(terms) + ")"


class RatFunc:
    """Quotient of polynomials; equality is exact (cross multiplication)."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly | None = None):
        if den is None:
            den = Poly.const(1)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        self.num = num
        self.den = den

    @staticmethod
    def const(c) -> "RatFunc":
        return RatFunc(Poly.const(c))

    def __add__(self, other: "RatFunc") -> "RatFunc":
        return RatFunc(self.num * other.den + other.num * self.den,
                       self.den * other.den)

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den)

    def __sub__(self, other: "RatFunc") -> "RatFunc":
        return self + (-other)

    def __mul__(self, other: "RatFunc") -> "RatFunc":
        return RatFunc(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "RatFunc") -> "RatFunc":
        if other.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def scale(self, c) -> "RatFunc":
        return RatFunc(self.num.scale(c), self.den)

    def derivative(self) -> "RatFunc":
        return RatFunc(self.num.derivative() * self.den
                       - self.num * self.den.derivative(),
                       self.den * self.den)

    def eval(self, x):
        d = self.den.eval(x)
        if not d:
            raise ZeroDivisionError(f"rational function pole at {x}")
        return self.num.eval(x) / d

    def eval_ball(self, x, prec: int):
        return self.num.eval_ball(x, prec) / self.den.eval_ball(x, prec)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatFunc):
            return NotImplemented
        return (self.num * other.den - other.num * self.den).is_zero()

    def __hash__(self):
        raise TypeError("RatFunc is unhashable")

    def __repr__(self):
        return f"RatFunc({self.num!r} / {self.den!r})"


# ----------------------------------------------------------------- bivariate


class BiPoly:
    """Sparse bivariate polynomial over Q in variables (m, n)."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[tuple[int, int], mpq] | None = None):
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @staticmethod
    def const(c) -> "BiPoly":
        c = rational(c)
        return BiPoly({(0, 0): c} if c else {})

    @staticmethod
    def var_m() -> "BiPoly":
        return BiPoly({(1, 0): mpq(1)})

    @staticmethod
    def var_n() -> "BiPoly":
        return BiPoly({(0, 1): mpq(1)})

    @staticmethod
    def from_poly_in_n(p: Poly) -> "BiPoly":
        return BiPoly({(0, i): c for i, c in enumerate(p.coeffs)})

    def __add__(self, other: "BiPoly") -> "BiPoly":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, mpq(0)) + v
        return BiPoly(out)

    def __neg__(self) -> "BiPoly":
        return BiPoly({k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "BiPoly") -> "BiPoly":
        return self + (-other)

    def __mul__(self, other: "BiPoly") -> "BiPoly":
        out: dict[tuple[int, int], mpq] = {}
        for (i1, j1), v1 in self.terms.items():
            for (i2, j2), v2 in other.terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, mpq(0)) + v1 * v2
        return BiPoly(out)

    def scale(self, c) -> "BiPoly":
        c = rational(c)
        return BiPoly({k: v * c for k, v in self.terms.items()})

    def subst_m(self, value) -> Poly:
        """Substitute an exact rational for m, leaving a polynomial in n."""
        value = rational(value)
        out: dict[int, mpq] = {}
        for (i, j), v in self.terms.items():
            out[j] = out.get(j, mpq(0)) + v * value ** i
        size = max(out) + 1 if out else 0
        return Poly([out.get(i, mpq(0)) for i in range(size)])

    def eval(self, m, n) -> mpq:
        m, n = rational(m), rational(n)
        acc = mpq(0)
        for (i, j), v in self.terms.items():
            acc += v * m ** i * n ** j
        return acc

    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self):
        if not self.terms:
            return "BiPoly(0)"
        bits = [f"{v}*m^{i}*n^{j}" for (i, j), v in sorted(self.terms.items())]
        return "BiPoly(" + " + ".join(bits) + ")"


# ------------------------------------------------------------- root isolation


def _sign_at(p: Poly, x: mpq) -> int:
    v = p.eval(x)
    return (v > 0) - (v < 0)


def _sturm_chain(p: Poly) -> list[Poly]:
    chain = [p, p.derivative()]
    while not chain[-1].is_zero() and chain[-1].degree > 0:
        rem = chain[-2].divmod(chain[-1])[1]
        if rem.is_zero():
            break
        chain.append(-rem)
    return [q for q in chain if not q.is_zero()]


def _sign_changes(chain: list[Poly], x: mpq) -> int:
    signs = [s for s in (_sign_at(q, x) for q in chain) if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def sturm_root_count(p: Poly, lo: mpq, hi: mpq) -> int:
    """Number of distinct real roots of p in (lo, hi]; p need not be square-free."""
    sf = p.squarefree_part()
    if sf.degree <= 0:
        return 0
    chain = _sturm_chain(sf)
    return _sign_changes(chain, rational(lo)) - _sign_changes(chain, rational(hi))


def count_roots_above(p: Poly, lo) -> int:
    """Number of distinct real roots of p in (lo, +infinity)."""
    sf = p.squarefree_part()
    if sf.degree <= 0:
        return 0
    chain = _sturm_chain(sf)
    at_inf = [s for s in ((1 if q.leading() > 0 else -1) for q in chain) if s != 0]
    changes_inf = sum(1 for a, b in zip(at_inf, at_inf[1:]) if a != b)
    return _sign_changes(chain, rational(lo)) - changes_inf


def isolate_roots(p: Poly, lo, hi) -> list[tuple[mpq, mpq]]:
    """Disjoint rational intervals (a, b] in (lo, hi], one distinct root each."""
    lo, hi = rational(lo), rational(hi)
    sf = p.squarefree_part()
    if sf.degree <= 0:
        return []
    chain = _sturm_chain(sf)

    def count(a: mpq, b: mpq) -> int:
        return _sign_changes(chain, a) - _sign_changes(chain, b)

    out: list[tuple[mpq, mpq]] = []

    def recurse(a: mpq, b: mpq) -> None:
        c = count(a, b)
        if c == 0:
            return
        if c == 1:
            out.append((a, b))
            return
        m = (a + b) / 2
        recurse(a, m)
        recurse(m, b)

    recurse(lo, hi)
    return sorted(out)


def refine_root(p: Poly, interval: tuple[mpq, mpq], width: mpq) -> tuple[mpq, mpq]:
    """Shrink an isolating interval (a, b] by Sturm bisection until b - a <= width."""
    sf = p.squarefree_part()
    chain = _sturm_chain(sf)

    def count(a: mpq, b: mpq) -> int:
        return _sign_changes(chain, a) - _sign_changes(chain, b)

    a, b = interval
    while b - a > width:
        m = (a + b) / 2
        if count(a, m) == 1:
            b = m
        else:
            a = m
    return a, b
