"""Rigorous real arithmetic on midpoint +/- radius enclosures.

Midpoints are MPFR floats at the working precision; radii are kept at a
small fixed precision and always rounded outward (toward +inf).  Every
operation returns a ball that contains the exact image of its input balls,
relying on MPFR's correctly rounded primitives for the midpoint error,
which is folded into the radius as |result| * 2^(1-P).

All mpfr operations go through explicit contexts: gmpy2's operator
overloads round to the *global* context and must not touch midpoints or
radius bounds.
"""

from __future__ import annotations

import threading

import gmpy2
from gmpy2 import mpfr, mpq, mpz

__all__ = ["Ball", "mid_context"]

_RAD_PREC = 30

_EMIN = gmpy2.get_emin_min()
_EMAX = gmpy2.get_emax_max()

# Radius arithmetic: outward (up) for upper bounds, down for lower bounds.
_R_UP = gmpy2.context(precision=_RAD_PREC, round=gmpy2.RoundUp, emin=_EMIN, emax=_EMAX)
_R_DOWN = gmpy2.context(precision=_RAD_PREC, round=gmpy2.RoundDown, emin=_EMIN, emax=_EMAX)

_ZERO = mpfr(0)
_ONE = mpfr(1)

_ctx_cache: dict[int, gmpy2.context] = {}
_ctx_lock = threading.Lock()


def mid_context(prec: int) -> gmpy2.context:
    """Shared round-to-nearest context at the given midpoint precision."""
    ctx = _ctx_cache.get(prec)
    if ctx is None:
        with _ctx_lock:
            ctx = _ctx_cache.setdefault(
                prec,
                gmpy2.context(precision=prec, round=gmpy2.RoundToNearest,
                              emin=_EMIN, emax=_EMAX),
            )
    return ctx


_eps_cache: dict[int, mpfr] = {}


def _eps(prec: int) -> mpfr:
    # Bound on the relative error of one correctly rounded operation.
    e = _eps_cache.get(prec)
    if e is None:
        e = _R_UP.exp2(mpfr(1 - prec))
        with _ctx_lock:
            _eps_cache.setdefault(prec, e)
    return e


def _ulp_err(mid: mpfr, prec: int) -> mpfr:
    if mid == 0:
        return _ZERO
    return _R_UP.mul(_R_UP.abs(mid), _eps(prec))


class Ball:
    """A closed interval [mid - rad, mid + rad] guaranteed to contain the true value."""

    __slots__ = ("mid", "rad")

    def __init__(self, mid: mpfr, rad: mpfr):
        if rad < 0:
            raise ValueError("ball radius must be nonnegative")
        self.mid = mid
        self.rad = rad

    # ------------------------------------------------------------------ build

    @staticmethod
    def from_rational(q, prec: int) -> "Ball":
        """Enclose an exact int/mpz/mpq; radius 0 when the conversion is exact."""
        q = mpq(q)
        mid = mid_context(prec).add(_ZERO, q)
        rad = _ZERO if mpq(mid) == q else _ulp_err(mid, prec)
        return Ball(mid, rad)

    @staticmethod
    def exact_zero() -> "Ball":
        return Ball(_ZERO, _ZERO)

    # ------------------------------------------------------------- inspection

    @property
    def prec(self) -> int:
        return max(self.mid.precision, 2)

    def lower(self) -> mpfr:
        return _R_DOWN.sub(self.mid, self.rad)

    def upper(self) -> mpfr:
        return _R_UP.add(self.mid, self.rad)

    def abs_upper(self) -> mpfr:
        return _R_UP.add(_R_UP.abs(self.mid), self.rad)

    def abs_lower(self) -> mpfr:
        """A nonnegative lower bound for |value|."""
        lo = _R_DOWN.sub(_R_DOWN.abs(self.mid), self.rad)
        return lo if lo > 0 else _ZERO

    def contains_rational(self, q) -> bool:
        """Exact containment test for a rational point."""
        return abs(mpq(self.mid) - mpq(q)) <= mpq(self.rad)

    def overlaps(self, other: "Ball") -> bool:
        return abs(mpq(self.mid) - mpq(other.mid)) <= mpq(self.rad) + mpq(other.rad)

    def is_nonzero(self) -> bool:
        return _R_DOWN.abs(self.mid) > self.rad

    def __repr__(self) -> str:
        return f"Ball({self.mid!r} +/- {self.rad!r})"

    def __float__(self) -> float:
        return float(self.mid)

    def mid_digits(self, digits: int) -> str:
        return format(self.mid, f".{digits}g")

    # ------------------------------------------------------------- arithmetic

    def _binary_prec(self, other: "Ball") -> int:
        return max(self.prec, other.prec)

    def __neg__(self) -> "Ball":
        return Ball(mid_context(self.prec).minus(self.mid), self.rad)

    def __abs__(self) -> "Ball":
        return Ball(mid_context(self.prec).abs(self.mid), self.rad)

    def __add__(self, other) -> "Ball":
        other = _coerce(other, self.prec)
        prec = self._binary_prec(other)
        mid = mid_context(prec).add(self.mid, other.mid)
        rad = _R_UP.add(_R_UP.add(self.rad, other.rad), _ulp_err(mid, prec))
        return Ball(mid, rad)

    __radd__ = __add__

    def __sub__(self, other) -> "Ball":
        other = _coerce(other, self.prec)
        prec = self._binary_prec(other)
        mid = mid_context(prec).sub(self.mid, other.mid)
        rad = _R_UP.add(_R_UP.add(self.rad, other.rad), _ulp_err(mid, prec))
        return Ball(mid, rad)

    def __rsub__(self, other) -> "Ball":
        return _coerce(other, self.prec).__sub__(self)

    def __mul__(self, other) -> "Ball":
        other = _coerce(other, self.prec)
        prec = self._binary_prec(other)
        mid = mid_context(prec).mul(self.mid, other.mid)
        cross = _R_UP.add(
            _R_UP.add(_R_UP.mul(_R_UP.abs(self.mid), other.rad),
                      _R_UP.mul(_R_UP.abs(other.mid), self.rad)),
            _R_UP.mul(self.rad, other.rad),
        )
        rad = _R_UP.add(cross, _ulp_err(mid, prec))
        return Ball(mid, rad)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Ball":
        other = _coerce(other, self.prec)
        prec = self._binary_prec(other)
        denom_low = _R_DOWN.sub(_R_DOWN.abs(other.mid), other.rad)
        if denom_low <= 0:
            raise ZeroDivisionError("ball division by an interval containing zero")
        mid = mid_context(prec).div(self.mid, other.mid)
        num = _R_UP.add(self.rad, _R_UP.mul(_R_UP.abs(mid), other.rad))
        # |mid| underestimates |a/b| by at most one rounding; widen before use
        num = _R_UP.mul(num, _R_UP.add(_ONE, _eps(prec)))
        rad = _R_UP.add(_R_UP.div(num, denom_low), _ulp_err(mid, prec))
        return Ball(mid, rad)

    def __rtruediv__(self, other) -> "Ball":
        return _coerce(other, self.prec).__truediv__(self)

    def scale(self, q) -> "Ball":
        """Multiply by an exact rational (single rounding on the midpoint)."""
        q = mpq(q)
        prec = self.prec
        mid = mid_context(prec).mul(self.mid, q)
        rad = _R_UP.add(_R_UP.mul(self.rad, abs(q)), _ulp_err(mid, prec))
        return Ball(mid, rad)

    def pow_int(self, n: int) -> "Ball":
        if n == 0:
            return Ball.from_rational(1, self.prec)
        if n < 0:
            return Ball.from_rational(1, self.prec) / self.pow_int(-n)
        result = self
        # left-to-right binary powering keeps containment at every step
        for b in bin(n)[3:]:
            result = result * result
            if b == "1":
                result = result * self
        return result

    def sqrt(self) -> "Ball":
        prec = self.prec
        low = _R_DOWN.sub(self.mid, self.rad)
        if low < 0:
            raise ValueError("ball sqrt of an interval reaching below zero")
        mid = mid_context(prec).sqrt(self.mid)
        if self.rad == 0:
            rad = _ulp_err(mid, prec)
        else:
            root_low = _R_DOWN.sqrt(low)
            if root_low > 0:
                rad = _R_UP.add(_R_UP.div(self.rad, root_low), _ulp_err(mid, prec))
            else:
                # interval touches zero: hull [0, sqrt(upper)] from the midpoint
                rad = _R_UP.add(_R_UP.sqrt(self.upper()), _ulp_err(mid, prec))
        return Ball(mid, rad)

    def log(self) -> "Ball":
        prec = self.prec
        low = _R_DOWN.sub(self.mid, self.rad)
        if low <= 0:
            raise ValueError("ball log of an interval reaching below zero")
        mid = mid_context(prec).log(self.mid)
        rad = _R_UP.add(_R_UP.div(self.rad, low), _ulp_err(mid, prec))
        return Ball(mid, rad)

    def atan(self) -> "Ball":
        prec = self.prec
        mid = mid_context(prec).atan(self.mid)
        # |atan'| <= 1 everywhere
        rad = _R_UP.add(self.rad, _ulp_err(mid, prec))
        return Ball(mid, rad)


def _coerce(x, prec: int) -> Ball:
    if isinstance(x, Ball):
        return x
    if isinstance(x, (int, mpz, mpq)):
        return Ball.from_rational(x, prec)
    raise TypeError(f"cannot mix Ball with {type(x).__name__}")
