"""Closed forms: rational linear combinations of monomials in named constants.

A ``ConstantMonomial`` is a rational coefficient times a product of powers
of tagged constants (pi, sqrt(d), log(q), zeta(n), G, K, beta(4)); the
empty product encodes a plain rational term.  A ``ClosedForm`` is a sum of
such monomials.  Canonicalisation expands log(q) over prime logarithms so
that structurally different spellings (log 4/3 vs 2 log 2 - log 3) compare
equal.
"""

from __future__ import annotations

from dataclasses import dataclass

from gmpy2 import mpq, mpz

from .balls import Ball
from . import constants
from .exact import rational

__all__ = ["ConstFactor", "ConstantMonomial", "ClosedForm", "TAGS"]

TAGS = ("PI", "SQRT", "LOG", "ZETA", "CATALAN_G", "K3", "BETA4")

_ARGLESS = {"PI", "CATALAN_G", "K3", "BETA4"}


def _squarefree_check(d: int) -> None:
    if d <= 0:
        raise ValueError(f"SQRT argument {d} must be positive")
    f = 2
    n = d
    while f * f <= n:
        if n % (f * f) == 0:
            raise ValueError(f"SQRT argument {d} is not square-free")
        if n % f == 0:
            n //= f
        f += 1


@dataclass(frozen=True)
class ConstFactor:
    """One constant raised to a nonzero integer power."""

    tag: str
    arg: object  # None | int (SQRT d, ZETA n) | mpq (LOG q)
    power: int

    def __post_init__(self):
        if self.tag not in TAGS:
            raise ValueError(f"unknown constant tag {self.tag!r}")
        if self.power == 0:
            raise ValueError("constant factor with zero exponent")
        if self.tag in _ARGLESS:
            if self.arg is not None:
                raise ValueError(f"{self.tag} takes no argument")
        elif self.tag == "SQRT":
            _squarefree_check(int(self.arg))
        elif self.tag == "ZETA":
            if int(self.arg) < 2:
                raise ValueError("ZETA argument must be >= 2")
        elif self.tag == "LOG":
            q = rational(self.arg)
            if q <= 0 or q == 1:
                raise ValueError(f"LOG argument {q} must be positive and != 1")
            object.__setattr__(self, "arg", q)

    def key(self) -> tuple:
        return (self.tag, str(self.arg))

    def ball(self, prec: int) -> Ball:
        if self.tag == "PI":
            base = constants.const_pi(prec)
        elif self.tag == "SQRT":
            base = constants.const_sqrt(int(self.arg), prec)
        elif self.tag == "LOG":
            base = constants.const_log(self.arg, prec)
        elif self.tag == "ZETA":
            base = constants.const_zeta(int(self.arg), prec)
        elif self.tag == "CATALAN_G":
            base = constants.const_catalan(prec)
        elif self.tag == "K3":
            base = constants.const_K(prec)
        else:
            base = constants.const_beta4(prec)
        return base.pow_int(self.power)

    def to_json(self) -> dict:
        out: dict = {"tag": self.tag, "power": self.power}
        if self.arg is not None:
            out["arg"] = str(self.arg)
        return out

    @staticmethod
    def from_json(doc: dict) -> "ConstFactor":
        tag = doc["tag"]
        arg = doc.get("arg")
        if arg is not None:
            arg = rational(arg) if tag == "LOG" else int(arg)
        return ConstFactor(tag, arg, int(doc["power"]))


@dataclass(frozen=True)
class ConstantMonomial:
    coeff: mpq
    factors: tuple[ConstFactor, ...]

    def factor_key(self) -> tuple:
        return tuple(sorted((f.key(), f.power) for f in self.factors))

    def ball(self, prec: int) -> Ball:
        acc = Ball.from_rational(self.coeff, prec)
        for f in self.factors:
            acc = acc * f.ball(prec)
        return acc

    def to_json(self) -> dict:
        return {"coeff": str(self.coeff),
                "factors": [f.to_json() for f in self.factors]}

    @staticmethod
    def from_json(doc: dict) -> "ConstantMonomial":
        return ConstantMonomial(
            rational(doc["coeff"]),
            tuple(ConstFactor.from_json(f) for f in doc.get("factors", ())),
        )


class ClosedForm:
    """A sum of constant monomials; the empty sum is exactly zero."""

    def __init__(self, terms=()):
        terms = tuple(terms)
        seen = set()
        for t in terms:
            key = t.factor_key()
            if key in seen:
                raise ValueError("closed form repeats a factor multiset")
            seen.add(key)
        self.terms = terms

    def evaluate(self, prec: int) -> Ball:
        acc = Ball.from_rational(0, prec)
        for t in self.terms:
            acc = acc + t.ball(prec)
        return acc

    def is_zero(self) -> bool:
        return all(t.coeff == 0 for t in self.terms)

    def rational_part(self) -> mpq:
        for t in self.terms:
            if not t.factors:
                return t.coeff
        return mpq(0)

    def canonical(self) -> dict[tuple, mpq]:
        """Coefficient map on atomic monomials, with logs expanded over primes."""
        out: dict[tuple, mpq] = {}
        for term in self.terms:
            for coeff, atoms in _expand_monomial(term):
                if coeff == 0:
                    continue
                key = tuple(sorted(atoms.items()))
                out[key] = out.get(key, mpq(0)) + coeff
        return {k: v for k, v in out.items() if v != 0}

    def __eq__(self, other) -> bool:
        if not isinstance(other, ClosedForm):
            return NotImplemented
        return self.canonical() == other.canonical()

    def __hash__(self):
        return hash(tuple(sorted((k, str(v)) for k, v in self.canonical().items())))

    def describe(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for t in self.terms:
            bits = [] if t.coeff == 1 and t.factors else [str(t.coeff)]
            if t.coeff == -1 and t.factors:
                bits = ["-"]
            for f in t.factors:
                name = {"PI": "pi", "CATALAN_G": "G", "K3": "K", "BETA4": "beta(4)"}.get(f.tag)
                if name is None:
                    name = f"{f.tag.lower()}({f.arg})"
                parts_pow = name if f.power == 1 else f"{name}^{f.power}"
                bits.append(parts_pow)
            joined = "*".join(b for b in bits if b not in ("-",))
            if bits and bits[0] == "-":
                joined = "-" + joined
            parts.append(joined)
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self) -> list:
        return [t.to_json() for t in self.terms]

    @staticmethod
    def from_json(doc: list) -> "ClosedForm":
        return ClosedForm(ConstantMonomial.from_json(t) for t in doc)


def _factorize(n: mpz) -> list[tuple[int, int]]:
    """Trial-division factorization; log arguments here are tiny integers."""
    out = []
    n = int(n)
    f = 2
    while f * f <= n:
        if n % f == 0:
            e = 0
            while n % f == 0:
                n //= f
                e += 1
            out.append((f, e))
        f += 1
    if n > 1:
        out.append((n, 1))
    return out


def _expand_monomial(term: ConstantMonomial):
    """Expand one monomial into (coeff, atom-counter) pieces over prime logs."""
    pieces: list[tuple[mpq, dict]] = [(term.coeff, {})]
    for f in term.factors:
        if f.tag == "LOG":
            q = rational(f.arg)
            basis: dict[tuple, int] = {}
            for p, e in _factorize(q.numerator):
                basis[("LOG", str(p))] = basis.get(("LOG", str(p)), 0) + e
            for p, e in _factorize(q.denominator):
                basis[("LOG", str(p))] = basis.get(("LOG", str(p)), 0) - e
            # (sum_i e_i log p_i)^power, power >= 1, expanded by repeated product
            for _ in range(f.power):
                new_pieces = []
                for coeff, atoms in pieces:
                    for atom, e in basis.items():
                        grown = dict(atoms)
                        grown[atom] = grown.get(atom, 0) + 1
                        new_pieces.append((coeff * e, grown))
                pieces = _merge(new_pieces)
        elif f.tag == "SQRT":
            d = int(f.arg)
            whole, parity = divmod(f.power, 2)
            new_pieces = []
            for coeff, atoms in pieces:
                coeff = coeff * mpq(d) ** whole
                if parity:
                    atoms = dict(atoms)
                    atoms[("SQRT", str(d))] = atoms.get(("SQRT", str(d)), 0) + 1
                new_pieces.append((coeff, atoms))
            pieces = new_pieces
        else:
            key = f.key()
            new_pieces = []
            for coeff, atoms in pieces:
                atoms = dict(atoms)
                atoms[key] = atoms.get(key, 0) + f.power
                if atoms[key] == 0:
                    del atoms[key]
                new_pieces.append((coeff, atoms))
            pieces = new_pieces
    return _merge(pieces)


def _merge(pieces):
    acc: dict[tuple, tuple[mpq, dict]] = {}
    for coeff, atoms in pieces:
        key = tuple(sorted(atoms.items()))
        if key in acc:
            acc[key] = (acc[key][0] + coeff, atoms)
        else:
            acc[key] = (coeff, atoms)
    return [(c, a) for c, a in acc.values() if c != 0]
