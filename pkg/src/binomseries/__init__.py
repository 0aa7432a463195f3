"""Verification workbench for series identities built from binomial coefficients.

Exact arithmetic for the number theory, ball arithmetic for everything
transcendental, a machine-readable corpus of every bundled identity and
congruence claim, and verifiers for each claim class: high-precision
series evaluation with certified tails, finite telescoping checks with
symbolic induction steps, exact congruence scans at desk-scale primes,
antiderivative certificates, and PSLQ closed-form rediscovery.
"""

__version__ = "0.1.0"

from .balls import Ball
from .closedforms import ClosedForm, ConstFactor, ConstantMonomial
from .corpus import corpus_by_id, corpus_filter, corpus_load
from .exact import (PADIC_INFINITY, Rational, bernoulli_number, bernoulli_poly,
                    binomial, euler_number, euler_poly, fermat_quotient,
                    harmonic, harmonic_gap, legendre_symbol, padic_valuation)
from .model import (BinomialFactor, CongruenceClaim, HarmonicSpec,
                    IntegralityClaim, SeriesIdentity, SummandSpec)

__all__ = [
    "__version__", "Ball", "ClosedForm", "ConstFactor", "ConstantMonomial",
    "corpus_by_id", "corpus_filter", "corpus_load", "PADIC_INFINITY",
    "Rational", "bernoulli_number", "bernoulli_poly", "binomial",
    "euler_number", "euler_poly", "fermat_quotient", "harmonic",
    "harmonic_gap", "legendre_symbol", "padic_valuation", "BinomialFactor",
    "CongruenceClaim", "HarmonicSpec", "IntegralityClaim", "SeriesIdentity",
    "SummandSpec",
]
