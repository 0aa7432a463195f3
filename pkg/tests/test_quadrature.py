"""Rigorous rational-function quadrature."""

import pytest
from gmpy2 import mpq

from binomseries.constants import const_log, const_pi
from binomseries.quadrature import integrate_rational
from binomseries.symbolic import Poly, RatFunc


def test_arctan_kernel():
    value = integrate_rational(RatFunc(Poly([1]), Poly([1, 0, 1])), 30)
    assert value.overlaps(const_pi(160).scale(mpq(1, 4)))
    assert float(value.rad) < 1e-30


def test_log_kernel():
    value = integrate_rational(RatFunc(Poly([1]), Poly([1, 1])), 30)
    assert value.overlaps(const_log(2, 160))


def test_polynomial_exact():
    # integral of 6x^2 + 2x on [0,1] is 3 exactly
    value = integrate_rational(RatFunc(Poly([0, 2, 6]), Poly([1])), 20)
    assert value.contains_rational(3)


def test_partial_interval():
    value = integrate_rational(RatFunc(Poly([1]), Poly([1, 1])),
                               25, mpq(1, 2), mpq(1))
    expected = const_log(2, 160) - const_log(mpq(3, 2), 160)
    assert value.overlaps(expected)


def test_pole_on_contour_raises():
    with pytest.raises(RuntimeError):
        integrate_rational(RatFunc(Poly([1]), Poly([-1, 2])), 15)  # pole at 1/2
