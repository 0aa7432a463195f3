"""Data model for series identities, congruence claims, and integrality claims.

A summand is a hypergeometric core (binomial-coefficient powers times a
geometric base^k factor times a rational function of k) optionally
multiplied by a bracket that is linear in generalized harmonic numbers:

    t_k = prod_i C(a_i k + a0_i, b_i k + b0_i)^{e_i} * base^{k or k-1}
          * N(k)/D(k) * [ c_0(k) + sum_j c_j(k) * H^{(m_j)}_{l_j k + s_j} ]

All invariants are checked at construction; corpus documents are JSON
objects mirroring these types field by field.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from gmpy2 import mpq, mpz

from .closedforms import ClosedForm
from .exact import binomial, harmonic, rational
from .symbolic import Poly

__all__ = [
    "ValidationError",
    "BinomialFactor",
    "HarmonicSpec",
    "PolyK",
    "RatK",
    "SummandSpec",
    "SeriesIdentity",
    "CongruenceClaim",
    "IntegralityClaim",
    "STATUSES",
    "RANGE_KINDS",
    "resolve_range",
]

STATUSES = ("THEOREM", "LEMMA", "CONJECTURE", "CITED", "LEMMA_GRADE_CONJECTURE")

RANGE_KINDS = ("1..p-1", "0..p-1", "0..(p-1)/2", "1..(p-1)/2", "0..(p-3)/2",
               "(p-1)/2<k<p")


class ValidationError(ValueError):
    """A corpus document violates a structural invariant."""


# --------------------------------------------------------------- polynomials


class PolyK:
    """Polynomial in k kept as a product of factors (the source's factored form)."""

    __slots__ = ("factors", "_dense")

    def __init__(self, factors):
        self.factors = tuple((tuple(rational(c) for c in coeffs), int(power))
                             for coeffs, power in factors)
        self._dense = None

    @staticmethod
    def one() -> "PolyK":
        return PolyK(())

    @staticmethod
    def from_coeffs(coeffs) -> "PolyK":
        return PolyK(((tuple(coeffs), 1),))

    def dense(self) -> Poly:
        if self._dense is None:
            acc = Poly.const(1)
            for coeffs, power in self.factors:
                acc = acc * Poly(coeffs).pow(power)
            self._dense = acc
        return self._dense

    def eval(self, k) -> mpq:
        acc = mpq(1)
        for coeffs, power in self.factors:
            v = mpq(0)
            for c in reversed(coeffs):
                v = v * k + c
            acc *= v ** power
        return acc

    def degree(self) -> int:
        return sum((len(c) - 1) * p for c, p in self.factors)

    def is_one(self) -> bool:
        return all(len(c) == 1 and c[0] == 1 for c, _ in self.factors)

    def shift(self, delta: int) -> "PolyK":
        """Compose with k -> k + delta, factor by factor."""
        out = []
        for coeffs, power in self.factors:
            out.append((tuple(Poly(coeffs).shift(delta).coeffs), power))
        return PolyK(out)

    def to_json(self):
        if len(self.factors) == 1 and self.factors[0][1] == 1:
            return {"coeffs": [str(c) for c in self.factors[0][0]]}
        return {"factors": [{"coeffs": [str(c) for c in coeffs],
                             **({"power": power} if power != 1 else {})}
                            for coeffs, power in self.factors]}

    @staticmethod
    def from_json(doc) -> "PolyK":
        if doc is None:
            return PolyK.one()
        if "coeffs" in doc:
            return PolyK.from_coeffs([rational(c) for c in doc["coeffs"]])
        return PolyK([(tuple(rational(c) for c in f["coeffs"]), f.get("power", 1))
                      for f in doc["factors"]])

    def __eq__(self, other):
        return isinstance(other, PolyK) and self.factors == other.factors

    def __hash__(self):
        return hash(self.factors)


class RatK:
    """Rational function of k as a PolyK quotient."""

    __slots__ = ("num", "den")

    def __init__(self, num: PolyK, den: PolyK | None = None):
        self.num = num
        self.den = den if den is not None else PolyK.one()

    @staticmethod
    def one() -> "RatK":
        return RatK(PolyK.one())

    @staticmethod
    def zero() -> "RatK":
        return RatK(PolyK.from_coeffs([mpq(0)]))

    def eval(self, k) -> mpq:
        d = self.den.eval(k)
        if d == 0:
            raise ZeroDivisionError(f"rational-function pole at k = {k}")
        return self.num.eval(k) / d

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def is_zero(self) -> bool:
        return self.num.dense().is_zero()

    def to_json(self):
        out = {"num": self.num.to_json()}
        if not self.den.is_one():
            out["den"] = self.den.to_json()
        return out

    @staticmethod
    def from_json(doc) -> "RatK":
        if doc is None:
            return RatK.one()
        return RatK(PolyK.from_json(doc["num"]), PolyK.from_json(doc.get("den")))

    def __eq__(self, other):
        return (isinstance(other, RatK) and self.num == other.num
                and self.den == other.den)

    def __hash__(self):
        return hash((self.num, self.den))


# ------------------------------------------------------------------- factors


@dataclass(frozen=True)
class BinomialFactor:
    """C(top_slope*k + top_offset, bottom_slope*k + bottom_offset)^power."""

    top_slope: int
    top_offset: int
    bottom_slope: int
    bottom_offset: int
    power: int

    def __post_init__(self):
        if self.power == 0:
            raise ValidationError("binomial factor with zero exponent")

    def value(self, k: int) -> mpz:
        return binomial(self.top_slope * k + self.top_offset,
                        self.bottom_slope * k + self.bottom_offset)

    def step_ratio(self, k: int) -> mpq:
        """C(...)(k+1) / C(...)(k) as an exact rational (denominator nonzero)."""
        num = mpq(1)
        t, t0 = self.top_slope, self.top_offset
        b, b0 = self.bottom_slope, self.bottom_offset
        for i in range(1, t + 1):
            num *= t * k + t0 + i
        den = mpq(1)
        for i in range(1, b + 1):
            den *= b * k + b0 + i
        for i in range(1, t - b + 1):
            den *= (t - b) * k + (t0 - b0) + i
        return num / den

    def step_ratio_polys(self) -> tuple[Poly, Poly]:
        """Numerator/denominator of the step ratio as polynomials in k."""
        num = Poly.const(1)
        t, t0 = self.top_slope, self.top_offset
        b, b0 = self.bottom_slope, self.bottom_offset
        for i in range(1, t + 1):
            num = num * Poly([t0 + i, t])
        den = Poly.const(1)
        for i in range(1, b + 1):
            den = den * Poly([b0 + i, b])
        for i in range(1, t - b + 1):
            den = den * Poly([t0 - b0 + i, t - b])
        return num, den

    def limit_factor(self) -> mpq:
        """Limit of C((k+1)...)/C(k...) as k -> infinity."""
        t, b = self.top_slope, self.bottom_slope
        d = t - b
        num = mpz(t) ** t
        den = (mpz(b) ** b if b else mpz(1)) * (mpz(d) ** d if d else mpz(1))
        return mpq(num, den) ** self.power if self.power >= 0 else \
            mpq(den, num) ** (-self.power)

    def validate(self, start: int) -> None:
        for slope, offset, name in ((self.top_slope, self.top_offset, "top"),
                                    (self.bottom_slope, self.bottom_offset, "bottom")):
            if slope < 0 or slope * start + offset < 0:
                raise ValidationError(
                    f"binomial {name} argument {slope}k+{offset} negative at k>={start}")
        diff_slope = self.top_slope - self.bottom_slope
        diff_off = self.top_offset - self.bottom_offset
        if self.power < 0:
            if diff_slope < 0 or diff_slope * start + diff_off < 0:
                raise ValidationError(
                    "binomial in a denominator vanishes for some k >= start")

    def to_json(self) -> dict:
        return {"top": [self.top_slope, self.top_offset],
                "bottom": [self.bottom_slope, self.bottom_offset],
                "power": self.power}

    @staticmethod
    def from_json(doc: dict) -> "BinomialFactor":
        return BinomialFactor(doc["top"][0], doc["top"][1],
                              doc["bottom"][0], doc["bottom"][1], doc["power"])


@dataclass(frozen=True)
class HarmonicSpec:
    """H^{(order)} evaluated at slope*k + offset."""

    order: int
    slope: int
    offset: int

    def __post_init__(self):
        if self.order < 1:
            raise ValidationError("harmonic order must be >= 1")
        if self.slope < 0:
            raise ValidationError("harmonic index slope must be nonnegative")

    def argument(self, k: int) -> int:
        return self.slope * k + self.offset

    def value(self, k: int) -> mpq:
        return harmonic(self.argument(k), self.order)

    def validate(self, start: int) -> None:
        if self.argument(start) < 0:
            raise ValidationError(
                f"harmonic argument {self.slope}k+{self.offset} negative at k={start}")

    def to_json(self) -> dict:
        return {"order": self.order, "slope": self.slope, "offset": self.offset}

    @staticmethod
    def from_json(doc: dict) -> "HarmonicSpec":
        return HarmonicSpec(doc["order"], doc["slope"], doc["offset"])


# ------------------------------------------------------------------- summand


@dataclass(frozen=True)
class SummandSpec:
    binomials: tuple[BinomialFactor, ...] = ()
    base: mpq = mpq(1)
    base_shift: bool = False  # exponent k-1 instead of k
    poly_num: PolyK = field(default_factory=PolyK.one)
    poly_den: PolyK = field(default_factory=PolyK.one)
    harmonic_terms: tuple[tuple[RatK, HarmonicSpec], ...] = ()
    constant_term: RatK = field(default_factory=RatK.one)

    def __post_init__(self):
        if self.base == 0:
            raise ValidationError("summand base must be nonzero")

    # ------------------------------------------------------------ evaluation

    def hyper_eval(self, k: int) -> mpq:
        """Hypergeometric part: binomials, base power, and N(k)/D(k)."""
        acc = mpq(1)
        for b in self.binomials:
            v = b.value(k)
            if v == 0 and b.power < 0:
                raise ZeroDivisionError(f"binomial factor zero at k = {k}")
            acc *= mpq(v) ** b.power
        acc *= self.base ** (k - 1 if self.base_shift else k)
        den = self.poly_den.eval(k)
        if den == 0:
            raise ZeroDivisionError(f"summand denominator zero at k = {k}")
        return acc * self.poly_num.eval(k) / den

    def weight_eval(self, k: int) -> mpq:
        """The harmonic bracket c_0(k) + sum_j c_j(k) H(...)."""
        acc = self.constant_term.eval(k) if not self.constant_term.is_one() else mpq(1)
        for coeff, hspec in self.harmonic_terms:
            acc += coeff.eval(k) * hspec.value(k)
        return acc

    def eval(self, k: int) -> mpq:
        return self.hyper_eval(k) * self.weight_eval(k)

    # ------------------------------------------------------------ structure

    def has_harmonics(self) -> bool:
        return bool(self.harmonic_terms)

    def stripped(self) -> "SummandSpec":
        """Hypergeometric core with the harmonic bracket removed."""
        return SummandSpec(self.binomials, self.base, self.base_shift,
                           self.poly_num, self.poly_den)

    def limit_ratio(self) -> mpq:
        """Signed limit of t_{k+1}/t_k of the hypergeometric core."""
        r = self.base
        for b in self.binomials:
            r *= b.limit_factor()
        return r

    def core_ratio(self, k: int) -> mpq:
        """Exact t_{k+1}/t_k of the hypergeometric core at integer k."""
        acc = self.base
        for b in self.binomials:
            sr = b.step_ratio(k)
            acc *= sr ** 1 if b.power == 1 else sr ** b.power
        num_k1 = self.poly_num.eval(k + 1)
        num_k = self.poly_num.eval(k)
        if num_k == 0:
            raise ZeroDivisionError(f"core ratio undefined at k = {k} (zero term)")
        return acc * num_k1 / num_k * self.poly_den.eval(k) / self.poly_den.eval(k + 1)

    def core_ratio_polys(self) -> tuple[Poly, Poly]:
        """t_{k+1}/t_k of the core as an exact polynomial quotient in k."""
        num = Poly.const(self.base.numerator)
        den = Poly.const(self.base.denominator)
        for b in self.binomials:
            bn, bd = b.step_ratio_polys()
            if b.power >= 0:
                num = num * bn.pow(b.power)
                den = den * bd.pow(b.power)
            else:
                num = num * bd.pow(-b.power)
                den = den * bn.pow(-b.power)
        num = num * self.poly_num.shift(1).dense() * self.poly_den.dense()
        den = den * self.poly_num.dense() * self.poly_den.shift(1).dense()
        return num, den

    def max_harmonic_order(self) -> int:
        return max((h.order for _, h in self.harmonic_terms), default=0)

    def max_harmonic_slope(self) -> int:
        return max((h.slope for _, h in self.harmonic_terms), default=0)

    # ------------------------------------------------------------ validation

    def validate(self, start: int) -> None:
        for b in self.binomials:
            b.validate(start)
        for _, h in self.harmonic_terms:
            h.validate(start)
        for label, poly in (("denominator", self.poly_den),
                            ("constant-term denominator", self.constant_term.den),
                            *((f"harmonic coefficient denominator {i}", c.den)
                              for i, (c, _) in enumerate(self.harmonic_terms))):
            self._check_no_integer_roots(poly, start, label)

    @staticmethod
    def _check_no_integer_roots(poly: PolyK, start: int, label: str) -> None:
        dense = poly.dense()
        if dense.is_zero():
            raise ValidationError(f"{label} is identically zero")
        bound = math.ceil(dense.cauchy_root_bound()) + 1
        for k in range(start, max(start, bound) + 1):
            if dense.eval(k) == 0:
                raise ValidationError(f"{label} vanishes at admissible k = {k}")

    # ------------------------------------------------------------------ JSON

    def to_json(self) -> dict:
        out: dict = {}
        if self.binomials:
            out["binomials"] = [b.to_json() for b in self.binomials]
        if self.base != 1:
            out["base"] = str(self.base)
        if self.base_shift:
            out["base_shift"] = True
        if not self.poly_num.is_one():
            out["poly_num"] = self.poly_num.to_json()
        if not self.poly_den.is_one():
            out["poly_den"] = self.poly_den.to_json()
        if self.harmonic_terms:
            out["harmonic_terms"] = [{"coeff": c.to_json(), **h.to_json()}
                                     for c, h in self.harmonic_terms]
        if not self.constant_term.is_one():
            out["constant_term"] = self.constant_term.to_json()
        return out

    @staticmethod
    def from_json(doc: dict) -> "SummandSpec":
        harmonic_terms = tuple(
            (RatK.from_json(h["coeff"]),
             HarmonicSpec(h["order"], h["slope"], h["offset"]))
            for h in doc.get("harmonic_terms", ()))
        return SummandSpec(
            binomials=tuple(BinomialFactor.from_json(b)
                            for b in doc.get("binomials", ())),
            base=rational(doc.get("base", 1)),
            base_shift=bool(doc.get("base_shift", False)),
            poly_num=PolyK.from_json(doc.get("poly_num")),
            poly_den=PolyK.from_json(doc.get("poly_den")),
            harmonic_terms=harmonic_terms,
            constant_term=RatK.from_json(doc.get("constant_term")),
        )


# -------------------------------------------------------------------- claims


@dataclass(frozen=True)
class SeriesIdentity:
    id: str
    status: str
    section: str
    source_anchor: str
    start_index: int
    summand: SummandSpec
    rhs: ClosedForm
    rate: mpq
    notes: str = ""

    kind = "series"

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValidationError(f"{self.id}: unknown status {self.status!r}")
        if self.start_index not in (0, 1):
            raise ValidationError(f"{self.id}: start index must be 0 or 1")
        if abs(self.rate) >= 1:
            raise ValidationError(f"{self.id}: converging rate {self.rate} not in (-1,1)")
        self.summand.validate(self.start_index)
        computed = self.summand.limit_ratio()
        if computed != self.rate:
            raise ValidationError(
                f"{self.id}: stored rate {self.rate} != computed limit {computed}")

    def term(self, k: int) -> mpq:
        if k < self.start_index:
            raise ValueError(f"{self.id}: k = {k} below start index")
        return self.summand.eval(k)

    def partial_sum(self, n_terms: int) -> mpq:
        """Exact sum of the first n_terms terms (the test oracle path)."""
        acc = mpq(0)
        for k in range(self.start_index, self.start_index + n_terms):
            acc += self.term(k)
        return acc

    def to_json(self) -> dict:
        return {
            "kind": "series",
            "id": self.id,
            "status": self.status,
            "section": self.section,
            "source_anchor": self.source_anchor,
            "start_index": self.start_index,
            "summand": self.summand.to_json(),
            "rhs": self.rhs.to_json(),
            "rate": str(self.rate),
            **({"notes": self.notes} if self.notes else {}),
        }

    @staticmethod
    def from_json(doc: dict) -> "SeriesIdentity":
        return SeriesIdentity(
            id=doc["id"],
            status=doc["status"],
            section=str(doc["section"]),
            source_anchor=doc["source_anchor"],
            start_index=int(doc["start_index"]),
            summand=SummandSpec.from_json(doc["summand"]),
            rhs=ClosedForm.from_json(doc["rhs"]),
            rate=rational(doc["rate"]),
            notes=doc.get("notes", ""),
        )


def resolve_range(kind: str, p: int) -> range:
    """Concrete k-range of a congruence sum for a given odd prime."""
    if kind == "1..p-1":
        return range(1, p)
    if kind == "0..p-1":
        return range(0, p)
    if kind == "0..(p-1)/2":
        return range(0, (p - 1) // 2 + 1)
    if kind == "1..(p-1)/2":
        return range(1, (p - 1) // 2 + 1)
    if kind == "0..(p-3)/2":
        return range(0, (p - 3) // 2 + 1)
    if kind == "(p-1)/2<k<p":
        return range((p + 1) // 2, p)
    raise ValidationError(f"unknown range kind {kind!r}")


@dataclass(frozen=True)
class PrimeConstraint:
    min_p: int = 3
    exclude: tuple[int, ...] = ()

    def admits(self, p: int) -> bool:
        return p >= self.min_p and p not in self.exclude

    def why_rejected(self, p: int) -> str:
        if p < self.min_p:
            return f"p = {p} below minimum {self.min_p}"
        return f"p = {p} is excluded for this claim"

    def to_json(self) -> dict:
        out: dict = {"min_p": self.min_p}
        if self.exclude:
            out["exclude"] = list(self.exclude)
        return out

    @staticmethod
    def from_json(doc: dict | None) -> "PrimeConstraint":
        if doc is None:
            return PrimeConstraint()
        return PrimeConstraint(doc.get("min_p", 3), tuple(doc.get("exclude", ())))


@dataclass(frozen=True)
class RhsSymbol:
    """One factor of a congruence right-hand side term."""

    sym: str
    power: int = 1
    a: int | None = None          # qp / legendre argument
    offset: int | None = None     # index offset from p (bernoulli/euler/harmonic)
    x: mpq | None = None          # polynomial evaluation point
    order: int | None = None      # harmonic order

    def to_json(self) -> dict:
        out: dict = {"sym": self.sym}
        if self.power != 1:
            out["power"] = self.power
        for name in ("a", "offset", "order"):
            v = getattr(self, name)
            if v is not None:
                out[name] = v
        if self.x is not None:
            out["x"] = str(self.x)
        return out

    @staticmethod
    def from_json(doc: dict) -> "RhsSymbol":
        return RhsSymbol(
            sym=doc["sym"],
            power=doc.get("power", 1),
            a=doc.get("a"),
            offset=doc.get("offset"),
            x=rational(doc["x"]) if "x" in doc else None,
            order=doc.get("order"),
        )


RHS_SYMBOLS = ("p", "qp", "legendre", "legendre_p", "bernoulli",
               "bernoulli_poly", "euler", "euler_poly", "harmonic")


@dataclass(frozen=True)
class RhsTerm:
    coeff: mpq
    factors: tuple[RhsSymbol, ...] = ()

    def to_json(self) -> dict:
        return {"coeff": str(self.coeff),
                "factors": [f.to_json() for f in self.factors]}

    @staticmethod
    def from_json(doc: dict) -> "RhsTerm":
        return RhsTerm(rational(doc["coeff"]),
                       tuple(RhsSymbol.from_json(f) for f in doc.get("factors", ())))


@dataclass(frozen=True)
class CongruenceClaim:
    id: str
    section: str
    source_anchor: str
    summand: SummandSpec
    range_kind: str
    rhs_terms: tuple[RhsTerm, ...]
    modulus_exponent: int
    prime: PrimeConstraint = field(default_factory=PrimeConstraint)
    outer_multiplier: tuple[mpq, ...] = (mpq(1),)  # polynomial in p, ascending
    notes: str = ""

    kind = "congruence"

    def __post_init__(self):
        if self.range_kind not in RANGE_KINDS:
            raise ValidationError(f"{self.id}: unknown range kind {self.range_kind!r}")
        if self.modulus_exponent < 1:
            raise ValidationError(f"{self.id}: modulus exponent must be positive")
        for term in self.rhs_terms:
            for f in term.factors:
                if f.sym not in RHS_SYMBOLS:
                    raise ValidationError(f"{self.id}: unknown rhs symbol {f.sym!r}")
        self.summand.validate(resolve_range(self.range_kind, 5).start)

    def multiplier_at(self, p: int) -> mpq:
        acc = mpq(0)
        for i, c in enumerate(self.outer_multiplier):
            acc += c * mpz(p) ** i
        return acc

    def to_json(self) -> dict:
        out = {
            "kind": "congruence",
            "id": self.id,
            "section": self.section,
            "source_anchor": self.source_anchor,
            "summand": self.summand.to_json(),
            "range": self.range_kind,
            "rhs_terms": [t.to_json() for t in self.rhs_terms],
            "modulus_exponent": self.modulus_exponent,
            "prime": self.prime.to_json(),
        }
        if self.outer_multiplier != (mpq(1),):
            out["outer_multiplier"] = [str(c) for c in self.outer_multiplier]
        if self.notes:
            out["notes"] = self.notes
        return out

    @staticmethod
    def from_json(doc: dict) -> "CongruenceClaim":
        return CongruenceClaim(
            id=doc["id"],
            section=str(doc["section"]),
            source_anchor=doc["source_anchor"],
            summand=SummandSpec.from_json(doc["summand"]),
            range_kind=doc["range"],
            rhs_terms=tuple(RhsTerm.from_json(t) for t in doc["rhs_terms"]),
            modulus_exponent=int(doc["modulus_exponent"]),
            prime=PrimeConstraint.from_json(doc.get("prime")),
            outer_multiplier=tuple(rational(c) for c in
                                   doc.get("outer_multiplier", ["1"])),
            notes=doc.get("notes", ""),
        )


DIVISOR_FORMS = ("pn_pow", "6n(2n-1)C(3n,n)")

UPPER_BOUNDS = ("pn-1", "n-1", "p-1")
LOWER_BOUNDS = ("0", "n")
AUX_FACTORS = ("legendre_p3", "p")


@dataclass(frozen=True)
class IntegralityClaim:
    """Claims of the form  (main sum - factor * aux sum) / divisor  is integral."""

    id: str
    section: str
    source_anchor: str
    summand: SummandSpec
    claim_kind: str  # P_ADIC | INTEGER
    main_lower: str
    main_upper: str
    divisor_form: str
    divisor_exp: int = 1
    aux_upper: str | None = None
    aux_factor: str | None = None
    prime: PrimeConstraint = field(default_factory=lambda: PrimeConstraint(2))
    notes: str = ""

    kind = "integrality"

    def __post_init__(self):
        if self.claim_kind not in ("P_ADIC", "INTEGER"):
            raise ValidationError(f"{self.id}: bad claim kind {self.claim_kind!r}")
        if self.divisor_form not in DIVISOR_FORMS:
            raise ValidationError(f"{self.id}: bad divisor form {self.divisor_form!r}")
        if self.main_lower not in LOWER_BOUNDS or self.main_upper not in UPPER_BOUNDS:
            raise ValidationError(f"{self.id}: bad main range")
        if (self.aux_upper is None) != (self.aux_factor is None):
            raise ValidationError(f"{self.id}: aux range and factor go together")
        if self.aux_factor is not None and self.aux_factor not in AUX_FACTORS:
            raise ValidationError(f"{self.id}: bad aux factor {self.aux_factor!r}")
        self.summand.validate(0)

    def to_json(self) -> dict:
        out = {
            "kind": "integrality",
            "id": self.id,
            "section": self.section,
            "source_anchor": self.source_anchor,
            "summand": self.summand.to_json(),
            "claim_kind": self.claim_kind,
            "main_lower": self.main_lower,
            "main_upper": self.main_upper,
            "divisor_form": self.divisor_form,
        }
        if self.divisor_exp != 1:
            out["divisor_exp"] = self.divisor_exp
        if self.aux_upper is not None:
            out["aux_upper"] = self.aux_upper
            out["aux_factor"] = self.aux_factor
        out["prime"] = self.prime.to_json()
        if self.notes:
            out["notes"] = self.notes
        return out

    @staticmethod
    def from_json(doc: dict) -> "IntegralityClaim":
        return IntegralityClaim(
            id=doc["id"],
            section=str(doc["section"]),
            source_anchor=doc["source_anchor"],
            summand=SummandSpec.from_json(doc["summand"]),
            claim_kind=doc["claim_kind"],
            main_lower=doc["main_lower"],
            main_upper=doc["main_upper"],
            divisor_form=doc["divisor_form"],
            divisor_exp=doc.get("divisor_exp", 1),
            aux_upper=doc.get("aux_upper"),
            aux_factor=doc.get("aux_factor"),
            prime=PrimeConstraint.from_json(doc.get("prime")),
            notes=doc.get("notes", ""),
        )
