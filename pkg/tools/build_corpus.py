#!/usr/bin/env python3
"""Regenerate the bundled claim corpus under src/binomseries/corpus_data/.

Every series entry is numerically verified against its closed form while
building (low precision), every congruence/integrality claim is checked
at small admissible parameters, and every certificate is run through the
full checker.  A transcription slip fails the build.

Usage: python tools/build_corpus.py [--fast]
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from gmpy2 import mpq

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from binomseries.closedforms import ClosedForm, ConstFactor, ConstantMonomial
from binomseries.model import (BinomialFactor, CongruenceClaim, HarmonicSpec,
                               IntegralityClaim, PolyK, PrimeConstraint, RatK,
                               RhsSymbol, RhsTerm, SeriesIdentity, SummandSpec)

OUT = Path(__file__).resolve().parent.parent / "src" / "binomseries" / "corpus_data"

# ------------------------------------------------------------------ helpers


def pk(*desc) -> PolyK:
    """Polynomial in k from coefficients in the customary descending order."""
    return PolyK.from_coeffs(list(reversed([mpq(str(c)) for c in desc])))


def lf(*factors) -> PolyK:
    """Product of linear-ish factors: (a, b) means a*k + b, (a, b, e) a power."""
    out = []
    for f in factors:
        a, b = f[0], f[1]
        power = f[2] if len(f) > 2 else 1
        out.append(((mpq(str(b)), mpq(str(a))), power))
    return PolyK(out)


def pmul(*parts) -> PolyK:
    """Product of PolyK values and scalars."""
    factors = []
    for part in parts:
        if isinstance(part, PolyK):
            factors.extend(part.factors)
        else:
            factors.append(((mpq(str(part)),), 1))
    return PolyK(factors)


def rk(num, den=None) -> RatK:
    if not isinstance(num, PolyK):
        num = pk(num)
    if den is not None and not isinstance(den, PolyK):
        den = pk(den)
    return RatK(num, den)


def bino(ts, to, bs, bo, power=1) -> BinomialFactor:
    return BinomialFactor(ts, to, bs, bo, power)


def C2K(p=1): return bino(2, 0, 1, 0, p)
def C3K(p=1): return bino(3, 0, 1, 0, p)
def C4K(p=1): return bino(4, 0, 1, 0, p)
def C42(p=1): return bino(4, 0, 2, 0, p)
def C63(p=1): return bino(6, 0, 3, 0, p)


def H(order, slope, offset) -> HarmonicSpec:
    return HarmonicSpec(order, slope, offset)


def mono(coeff, *factors) -> ConstantMonomial:
    return ConstantMonomial(mpq(str(coeff)), tuple(factors))


def PI(power=1): return ConstFactor("PI", None, power)
def SQ(d, power=1): return ConstFactor("SQRT", d, power)
def LG(q, power=1): return ConstFactor("LOG", mpq(str(q)), power)
def ZE(n, power=1): return ConstFactor("ZETA", n, power)
def GG(power=1): return ConstFactor("CATALAN_G", None, power)
def KK(power=1): return ConstFactor("K3", None, power)
def B4(power=1): return ConstFactor("BETA4", None, power)


def cf(*monos) -> ClosedForm:
    return ClosedForm(monos)


def S(binomials=(), base="1", shift=False, num=None, den=None,
      harm=(), const=None) -> SummandSpec:
    return SummandSpec(
        binomials=tuple(binomials),
        base=mpq(str(base)),
        base_shift=shift,
        poly_num=num if num is not None else PolyK.one(),
        poly_den=den if den is not None else PolyK.one(),
        harmonic_terms=tuple(harm),
        constant_term=const if const is not None else RatK.one(),
    )


SERIES: list[tuple[str, SeriesIdentity]] = []
CONGRUENCES: list[CongruenceClaim] = []
INTEGRALITY: list[IntegralityClaim] = []


def series(file, id, status, section, anchor, start, summand, rhs, notes=""):
    SERIES.append((file, SeriesIdentity(
        id=id, status=status, section=section, source_anchor=anchor,
        start_index=start, summand=summand, rhs=rhs,
        rate=summand.limit_ratio(), notes=notes)))


def rt(coeff, *factors) -> RhsTerm:
    return RhsTerm(mpq(str(coeff)), tuple(factors))


def sp(power=1): return RhsSymbol("p", power)
def qp(a, power=1): return RhsSymbol("qp", power, a=a)
def leg(a): return RhsSymbol("legendre", 1, a=a)
def legp(modulus): return RhsSymbol("legendre_p", 1, a=modulus)
def bern(offset, power=1): return RhsSymbol("bernoulli", power, offset=offset)
def bernp(offset, x): return RhsSymbol("bernoulli_poly", 1, offset=offset, x=mpq(str(x)))
def eul(offset): return RhsSymbol("euler", 1, offset=offset)
def eulp(offset, x): return RhsSymbol("euler_poly", 1, offset=offset, x=mpq(str(x)))
def harm_p(offset, order=1): return RhsSymbol("harmonic", 1, offset=offset, order=order)


def cong(id, section, anchor, summand, range_kind, rhs_terms, exponent,
         min_p=3, exclude=(), outer=None, notes=""):
    CONGRUENCES.append(CongruenceClaim(
        id=id, section=section, source_anchor=anchor, summand=summand,
        range_kind=range_kind, rhs_terms=tuple(rhs_terms),
        modulus_exponent=exponent,
        prime=PrimeConstraint(min_p, tuple(exclude)),
        outer_multiplier=tuple(outer) if outer else (mpq(1),),
        notes=notes))


# =========================================================== main theorems

DEN_K31_32 = lf((1, 0), (3, -1), (3, -2))
DEN_3K12 = lf((3, 1), (3, 2))
DEN_ODD = lf((2, -1), (4, -1), (4, -3))

series("series_theorems.json", "t-98", "THEOREM", "1",
       "(95k^2-84k+16)(9/8)^{k-1}", 1,
       S([C4K(-1)], "9/8", True, pk(95, -84, 16), DEN_K31_32),
       cf(mono("2/3", SQ(3), PI())))
series("series_theorems.json", "t-8", "THEOREM", "1",
       "(5k^2-4k+1)8^{k}", 1,
       S([C4K(-1)], 8, False, pk(5, -4, 1), DEN_K31_32),
       cf(mono("3/2", PI())))
series("series_theorems.json", "t-m2", "THEOREM", "1",
       "77k^2-53k+10", 1,
       S([C4K(-1)], "-1/2", False, pk(77, -53, 10), DEN_K31_32),
       cf(mono(-3, LG(2))))
series("series_theorems.json", "t-m8", "THEOREM", "1",
       "415k^2-343k+62", 1,
       S([C4K(-1)], "-1/8", False, pk(415, -343, 62), DEN_K31_32),
       cf(mono(-3, LG(2))))
series("series_theorems.json", "t-m24", "THEOREM", "1",
       "187k^2-131k+22", 1,
       S([C4K(-1)], "-1/24", False, pk(187, -131, 22), DEN_K31_32),
       cf(mono(1, LG("2/3"))))
series("series_theorems.json", "t-m192", "THEOREM", "1",
       "1261k^2-989k+170", 1,
       S([C4K(-1)], "-1/192", False, pk(1261, -989, 170), DEN_K31_32),
       cf(mono(1, LG("3/4"))))
series("series_theorems.json", "t-16-k1", "THEOREM", "1",
       "(22k^2+17k-2)\\bi{4k}k", 0,
       S([C4K(1)], "1/16", False, pk(22, 17, -2), lf((1, 1))),
       cf(mono(17)))
series("series_theorems.json", "t-16-3k12", "THEOREM", "1",
       "(11k^2+8k+1)\\bi{4k}k", 0,
       S([C4K(1)], "1/16", False, pk(11, 8, 1), DEN_3K12),
       cf(mono(1)))
series("series_theorems.json", "t-16-odd", "THEOREM", "1",
       "(22k^2-18k+3)\\bi{4k}k", 0,
       S([C4K(1)], "1/16", False, pk(22, -18, 3), DEN_ODD),
       cf(mono("-1/3")))

# ===================================================== intermediate lemmas

series("series_lemmas.json", "l-12635", "LEMMA", "2",
       "12635k^2-5259k+832", 1,
       S([C4K(-1)], "9/8", True, pk(12635, -5259, 832), lf((1, 0))),
       cf(mono(1944), mono("640/3", SQ(3), PI())))
series("series_lemmas.json", "l-98-1805", "LEMMA", "2",
       "1805k^3-3072k^2+1435k-192", 1,
       S([C4K(-1)], "9/8", True, pk(1805, -3072, 1435, -192), lf((1, 0), (3, -1))),
       cf(mono(24)))
series("series_lemmas.json", "l-98-24", "LEMMA", "2",
       "1805k^3-2829k^2+1354k-192", 1,
       S([C4K(-1)], "9/8", True, pk(1805, -2829, 1354, -192), DEN_K31_32),
       cf(mono(24)))
series("series_lemmas.json", "l-98-160", "LEMMA", "2",
       "1805k^2-1119k+160", 1,
       S([C4K(-1)], "9/8", True, pk(1805, -1119, 160), lf((1, 0), (3, -1))),
       cf(mono(72), mono("32/3", SQ(3), PI())))
series("series_lemmas.json", "l-8-4k1", "LEMMA", "2",
       "(15k^2-124k-40)8^k", 1,
       S([C4K(-1)], 8, False, pk(15, -124, -40), lf((4, 1))),
       cf(mono(30), mono("-3/2", PI())))
series("series_lemmas.json", "l-8-k", "LEMMA", "2",
       "(35k^2-316k+43)8^k", 1,
       S([C4K(-1)], 8, False, pk(35, -316, 43), lf((1, 0))),
       cf(mono(108), mono("15/2", PI())))
series("series_lemmas.json", "l-8-5k3", "LEMMA", "2",
       "(5k^3-75k^2+16k-3)8^k", 1,
       S([C4K(-1)], 8, False, pk(5, -75, 16, -3), lf((1, 0))),
       cf(mono(6)))
series("series_lemmas.json", "l-8-65", "LEMMA", "2",
       "(k^3-14k^2-7k-1)8^k", 1,
       S([C4K(-1)], 8, False, pk(1, -14, -7, -1), lf((4, 1))),
       cf(mono("6/5")))
series("series_lemmas.json", "l-8-92", "LEMMA", "2",
       "(43k^2-624k-52)8^k", 1,
       S([C4K(-1)], 8, False, pk(43, -624, -52)),
       cf(mono("582/5"), mono("9/2", PI())))
series("series_lemmas.json", "l-8-3", "LEMMA", "2",
       "(5k^3-48k^2+25k-3)8^k", 1,
       S([C4K(-1)], 8, False, pk(5, -48, 25, -3), lf((1, 0), (3, -1))),
       cf(mono(3)))
series("series_lemmas.json", "l-8-53", "LEMMA", "2",
       "(5k^3-21k^2+16k-3)8^k", 1,
       S([C4K(-1)], 8, False, pk(5, -21, 16, -3), DEN_K31_32),
       cf(mono(3)))
series("series_lemmas.json", "l-8-932", "LEMMA", "2",
       "(5k^2-16k+4)8^k", 1,
       S([C4K(-1)], 8, False, pk(5, -16, 4), lf((1, 0), (3, -1))),
       cf(mono(9), mono("3/2", PI())))

series("series_lemmas.json", "l-m8-4k1", "LEMMA", "3",
       "18675k^2+7627k+670", 1,
       S([C4K(-1)], "-1/8", False, pk(18675, 7627, 670), lf((4, 1))),
       cf(mono(-30), mono(-192, LG(2))))
series("series_lemmas.json", "l-m8-k", "LEMMA", "3",
       "26975k^2-17111k+2968", 1,
       S([C4K(-1)], "-1/8", False, pk(26975, -17111, 2968), lf((1, 0))),
       cf(mono(-297), mono(-120, LG(2))))
series("series_lemmas.json", "l-m8-6", "LEMMA", "3",
       "2075k^3-3045k^2+1414k-192", 1,
       S([C4K(-1)], "-1/8", False, pk(2075, -3045, 1414, -192), lf((1, 0))),
       cf(mono(-6)))
series("series_lemmas.json", "l-m8-65", "LEMMA", "3",
       "415k^3-194k^2-19k+14", 1,
       S([C4K(-1)], "-1/8", False, pk(415, -194, -19, 14), lf((4, 1))),
       cf(mono("-6/5")))
series("series_lemmas.json", "l-m8-0", "LEMMA", "3",
       "153965k^2-96459k+22786", 1,
       S([C4K(-1)], "-1/8", False, pk(153965, -96459, 22786)),
       cf(mono("-9354/5"), mono(-576, LG(2))))
series("series_lemmas.json", "l-m8-3", "LEMMA", "3",
       "2075k^3-3072k^2+1405k-192", 1,
       S([C4K(-1)], "-1/8", False, pk(2075, -3072, 1405, -192), lf((1, 0), (3, -1))),
       cf(mono(-3)))
series("series_lemmas.json", "l-m8-53", "LEMMA", "3",
       "2075k^3-3099k^2+1414k-192", 1,
       S([C4K(-1)], "-1/8", False, pk(2075, -3099, 1414, -192), DEN_K31_32),
       cf(mono(-3)))
series("series_lemmas.json", "l-m8-180", "LEMMA", "3",
       "2075k^2-1439k+226", 1,
       S([C4K(-1)], "-1/8", False, pk(2075, -1439, 226), lf((1, 0), (3, -1))),
       cf(mono(-9), mono(-6, LG(2))))
series("series_lemmas.json", "l-m8-2k1", "LEMMA", "3",
       "524975k^2+195959k-32986", 0,
       S([C4K(-1)], "-1/8", False, pk(524975, 195959, -32986), lf((2, 1))),
       cf(mono(-37888), mono(-2880, LG(2))))
series("series_lemmas.json", "l-m8-4k3", "LEMMA", "3",
       "1819775k^2+669431k-521898", 0,
       S([C4K(-1)], "-1/8", False, pk(1819775, 669431, -521898), lf((4, 3))),
       cf(mono(-180352), mono(-2880, LG(2))))
series("series_lemmas.json", "l-m2-4k1", "LEMMA", "3",
       "11319k^2-497k-746", 1,
       S([C4K(-1)], "-1/2", False, pk(11319, -497, -746), lf((4, 1))),
       cf(mono(-246), mono(48, LG(2))))
series("series_lemmas.json", "l-m24-4k1", "LEMMA", "3",
       "39083k^2-2829k-3106", 1,
       S([C4K(-1)], "-1/24", False, pk(39083, -2829, -3106), lf((4, 1))),
       cf(mono(-94), mono(-64, LG("2/3"))))
series("series_lemmas.json", "l-m192-4k1", "LEMMA", "3",
       "442611k^2+41347k-17434", 1,
       S([C4K(-1)], "-1/192", False, pk(442611, 41347, -17434), lf((4, 1))),
       cf(mono(26), mono(512, LG("3/4"))))
series("series_lemmas.json", "l-m2-k", "LEMMA", "3",
       "5929k^2-4675k+914", 1,
       S([C4K(-1)], "-1/2", False, pk(5929, -4675, 914), lf((1, 0))),
       cf(mono(-189), mono(-30, LG(2))))
series("series_lemmas.json", "l-m24-k", "LEMMA", "3",
       "39083k^2-31627k+5624", 1,
       S([C4K(-1)], "-1/24", False, pk(39083, -31627, 5624), lf((1, 0))),
       cf(mono(-117), mono(40, LG("2/3"))))
series("series_lemmas.json", "l-m192-k", "LEMMA", "3",
       "475397k^2-335665k+55072", 1,
       S([C4K(-1)], "-1/192", False, pk(475397, -335665, 55072), lf((1, 0))),
       cf(mono(-207), mono(160, LG("3/4"))))
series("series_lemmas.json", "l-16-m5", "LEMMA", "3",
       "(22k^2-92k+11)\\f{\\bi{4k}k}{16^k}", 0,
       S([C4K(1)], "1/16", False, pk(22, -92, 11)),
       cf(mono(-5)))
series("series_lemmas.json", "l-16-12", "LEMMA", "3",
       "(22k^3-48k^2-64k+9)", 0,
       S([C4K(1)], "1/16", False, pk(22, -48, -64, 9), lf((1, 1))),
       cf(mono(12)))
series("series_lemmas.json", "l-16-0a", "LEMMA", "3",
       "(22k^3-48k^2-28k-3)", 0,
       S([C4K(1)], "1/16", False, pk(22, -48, -28, -3), lf((3, 1))),
       cf())
series("series_lemmas.json", "l-16-0b", "LEMMA", "3",
       "(22k^3+6k^2-10k-3)", 0,
       S([C4K(1)], "1/16", False, pk(22, 6, -10, -3), DEN_3K12),
       cf(),
       notes="the displayed limit equation for the (3k+1)(3k+2) family "
             "textually repeats the (3k+1) display; this entry is derived "
             "from the third finite telescoping identity's limit instead")
series("series_lemmas.json", "l-16-1p", "LEMMA", "3",
       "(22k^2-5k-4)", 0,
       S([C4K(1)], "1/16", False, pk(22, -5, -4), lf((3, 1))),
       cf(mono(1)))
series("series_lemmas.json", "l-16-half", "LEMMA", "3",
       "3k\\bi{4k}k(11(k-1)^2+8(k-1)+1)", 1,
       S([C4K(1)], "1/16", False, pmul(lf((3, 0)), pk(11, -14, 4)), DEN_ODD),
       cf(mono("1/2")))
series("series_lemmas.json", "l-16-tele0", "LEMMA", "3",
       "2k(11k^2-14k+4)+22k^2-18k+3", 0,
       S([C4K(1)], "1/16", False, pk(22, -6, -10, 3), DEN_ODD),
       cf())

# ============================================================ cited results

series("series_cited.json", "c-r4096", "CITED", "1",
       "(42k+5)\\f{\\bi{2k}k^3}{4096^k}", 0,
       S([C2K(3)], "1/4096", False, pk(42, 5)),
       cf(mono(16, PI(-1))))
series("series_cited.json", "c-gosper", "CITED", "1",
       "\\f{25k-3}{2^k\\bi{3k}k}", 0,
       S([C3K(-1)], "1/2", False, pk(25, -3)),
       cf(mono("1/2", PI())))
series("series_cited.json", "c-zeta5", "CITED", "1",
       "560k^4-640k^3+408k^2-136k+17", 1,
       S([C2K(-1), C3K(-1)], -1, False, pk(560, -640, 408, -136, 17),
         lf((2, -1, 4), (1, 0, 5))),
       cf(mono(180, ZE(5)), mono("-56/3", PI(2), ZE(3))))
series("series_cited.json", "c-harm4096", "CITED", "1",
       "H_{2k}^{(2)}-\\f{25}{92}H_k^{(2)}", 0,
       S([C2K(3)], "1/4096", False, pk(42, 5),
         harm=[(rk(pk(1)), H(2, 2, 0)), (rk(pk("-25/92")), H(2, 1, 0))],
         const=rk(pk(0))),
       cf(mono("2/69", PI())))
series("series_cited.json", "c-cz24", "CITED", "1",
       "(-1)^{k-1}(7k-2)", 1,
       S([C2K(-1), C3K(-1)], -1, True, pk(7, -2), lf((2, -1), (1, 0, 2))),
       cf(mono("1/12", PI(2))))
series("series_cited.json", "c-cz21", "CITED", "1",
       "(-1)^{k-1}(56k^2-32k+5)", 1,
       S([C2K(-1), C3K(-1)], -1, True, pk(56, -32, 5), lf((2, -1, 2), (1, 0, 3))),
       cf(mono(4, ZE(3))))
series("series_cited.json", "c-s24-pi4", "CITED", "1",
       "(-1)^{k-1}(28k^2-18k+3)", 1,
       S([C2K(-1), C3K(-1)], -1, True, pk(28, -18, 3), lf((2, -1, 3), (1, 0, 4))),
       cf(mono("1/45", PI(4))))
series("series_cited.json", "c-au-3k", "CITED", "1",
       "(35k^2-29k+6)3^k", 1,
       S([C4K(-1)], 3, False, pk(35, -29, 6), DEN_K31_32),
       cf(mono(1, SQ(3), PI())))
series("series_cited.json", "c-cz110", "CITED", "4",
       "88k^3+108k^2+36k+3 ... \\f8{\\pi}", 0,
       S([C3K(1), C4K(2)], "1/1024", False, pk(88, 108, 36, 3), DEN_3K12),
       cf(mono(8, PI(-1))))
series("series_cited.json", "c-cz106", "CITED", "4",
       "368k^3+400k^2+118k+9", 0,
       S([C3K(1), C4K(2)], "1/4096", False, pk(368, 400, 118, 9), DEN_3K12),
       cf(mono(16, PI(-1))))
series("series_cited.json", "c-cz97", "CITED", "4",
       "896k^3+992k^2+296k+21 ... \\f{32}{\\pi}", 0,
       S([C3K(1), C4K(2)], "-1/16384", False, pk(896, 992, 296, 21), DEN_3K12),
       cf(mono(32, PI(-1))))
series("series_cited.json", "c-cz51", "CITED", "4",
       "(74k^3-84k^2+29k-3)256^k ... 6\\pi^2", 1,
       S([C3K(-1), C4K(-2)], 256, False, pk(74, -84, 29, -3),
         lf((1, 0, 3), (3, -1), (3, -2))),
       cf(mono(6, PI(2))))
series("series_cited.json", "c-cz100", "CITED", "4",
       "k(112k^2-114k+25)", 1,
       S([C4K(1)], "-1/256", False, pk(112, -114, 25, 0), DEN_ODD),
       cf(mono("-1/12", SQ(2))))
series("series_cited.json", "c-ssm-14k3", "CITED", "4",
       "(14k-3)\\bi{4k}k ... \\f23\\sqrt2", 0,
       S([C4K(1)], "-1/256", False, pk(14, -3), DEN_ODD),
       cf(mono("2/3", SQ(2))))
series("series_cited.json", "c-ssm32", "CONJECTURE", "4",
       "(24k^2-4k-3)\\bi{4k}k ... \\f 56\\sqrt2", 0,
       S([C4K(1)], "1/128", False, pk(24, -4, -3), DEN_ODD),
       cf(mono("5/6", SQ(2))))
series("series_cited.json", "c-cz44", "CITED", "5",
       "344k^3-386k^2+115k-9 ... -8\\pi^2", 1,
       S([C3K(-1), C63(-1)], -256, False, pk(344, -386, 115, -9),
         lf((1, 0, 2), (2, -1), (4, -1), (4, -3))),
       cf(mono(-8, PI(2))))
series("series_cited.json", "c-cz-thm9", "CITED", "5",
       "(-16)^k(5k-1) ... -\\f{\\pi^2}2", 1,
       S([C2K(-1), C42(-1)], -16, False, pk(5, -1), lf((2, -1), (1, 0, 2))),
       cf(mono("-1/2", PI(2))))
series("series_cited.json", "c-cz118", "CITED", "5",
       "256^k(60k^2-26k+3) ... 56\\zeta(3)", 1,
       S([C2K(-2), C42(-2)], 256, False, pk(60, -26, 3), lf((2, -1), (1, 0, 4))),
       cf(mono(56, ZE(3))))
series("series_cited.json", "c-cz12", "CITED", "5",
       "364k^2-227k+36 ... 4\\zeta(3)", 1,
       S([C2K(-2), C3K(-2)], 1, False, pk(364, -227, 36), lf((2, -1), (1, 0, 4))),
       cf(mono(4, ZE(3))))
series("series_cited.json", "c-au-s23", "CITED", "5",
       "145k^2-104k+18 ... \\f{\\pi^2}3", 1,
       S([C2K(-1), C3K(-2)], 1, False, pk(145, -104, 18), lf((2, -1), (1, 0, 3))),
       cf(mono("1/3", PI(2))))

P145 = pk(145, -104, 18)
DEN_145 = lf((1, 0, 3), (2, -1))
series("series_cited.json", "c-au-18z3", "CITED", "5",
       "6P(k)(H_{3k-1}-H_{k-1})-232k+89", 1,
       S([C2K(-1), C3K(-2)], 1, False, den=DEN_145,
         harm=[(rk(pmul(6, P145)), H(1, 3, -1)),
               (rk(pmul(-6, P145)), H(1, 1, -1))],
         const=rk(pk(-232, 89))),
       cf(mono(18, ZE(3))))
series("series_cited.json", "c-au-z3", "CITED", "5",
       "P(k)(H_{2k-1}-H_{k-1})-\\frac{3(58k^2-40k+7)}{2(2k-1)}", 1,
       S([C2K(-1), C3K(-2)], 1, False, den=DEN_145,
         harm=[(rk(P145), H(1, 2, -1)), (rk(pmul(-1, P145)), H(1, 1, -1))],
         const=rk(pmul(-3, pk(58, -40, 7)), lf((4, -2)))),
       cf(mono(1, ZE(3))))
series("series_cited.json", "c-au-7pi4", "CITED", "5",
       "P(k)(H_{3k-1}^{(2)}-2H_{k-1}^{(2)})-\\frac{17k+32}{9k}", 1,
       S([C2K(-1), C3K(-2)], 1, False, den=DEN_145,
         harm=[(rk(P145), H(2, 3, -1)), (rk(pmul(-2, P145)), H(2, 1, -1))],
         const=rk(pk(-17, -32), lf((9, 0)))),
       cf(mono("7/180", PI(4))))
series("series_cited.json", "c-au-167", "CITED", "5",
       "297H_{3k-1}^{(2)}-192H_{2k-1}^{(2)}-978H_{k-1}^{(2)}", 1,
       S([C2K(-1), C3K(-2)], 1, False, den=DEN_145,
         harm=[(rk(pmul(297, P145)), H(2, 3, -1)),
               (rk(pmul(-192, P145)), H(2, 2, -1)),
               (rk(pmul(-978, P145)), H(2, 1, -1))],
         const=rk(pmul(27, pk(180, 12, -35)), lf((2, -1, 2)))),
       cf(mono("167/20", PI(4))))
series("series_cited.json", "c-guillera", "CITED", "5",
       "(21k^3-22k^2+8k-1)256^k ... \\frac{\\pi^4}{8}", 1,
       S([C2K(-7)], 256, False, pk(21, -22, 8, -1), lf((1, 0, 7))),
       cf(mono("1/8", PI(4))))

# ================================================ section 4 conjecture series

P2292 = pk(22, -92, 11)
series("series_s4.json", "j4-16-hk", "CONJECTURE", "4",
       "P(k)H_k-54k+108-\\frac{10}{3k}", 1,
       S([C4K(1)], "1/16", False,
         harm=[(rk(P2292), H(1, 1, 0))],
         const=rk(pk(-162, 324, -10), lf((3, 0)))),
       cf(mono("-20/3", LG(2))))
series("series_s4.json", "j4-16-h2k", "CONJECTURE", "4",
       "P(k)H_{2k}+287k-115-\\frac{25}{6k}", 1,
       S([C4K(1)], "1/16", False,
         harm=[(rk(P2292), H(1, 2, 0))],
         const=rk(pk(1722, -690, -25), lf((6, 0)))),
       cf(mono(214), mono("-40/3", LG(2))))
series("series_s4.json", "j4-16-h3k", "CONJECTURE", "4",
       "P(k)H_{3k}-296k+178-\\frac{25}{3k}", 1,
       S([C4K(1)], "1/16", False,
         harm=[(rk(P2292), H(1, 3, 0))],
         const=rk(pk(-888, 534, -25), lf((3, 0)))),
       cf(mono(-196), mono("-80/3", LG(2))))
series("series_s4.json", "j4-16-h4k", "CONJECTURE", "4",
       "P(k)H_{4k}-\\frac{449k-275}2-\\frac{85}{12k}", 1,
       S([C4K(1)], "1/16", False,
         harm=[(rk(P2292), H(1, 4, 0))],
         const=rk(pk(-2694, 1650, -85), lf((12, 0)))),
       cf(mono(-151), mono("-80/3", LG(2))))

P1181 = pk(11, 8, 1)
series("series_s4.json", "j4-1681-hk", "CONJECTURE", "4",
       "(11k^2+8k+1)H_k+6k+6+4/(3k)", 1,
       S([C4K(1)], "1/16", False, den=DEN_3K12,
         harm=[(rk(P1181), H(1, 1, 0))],
         const=rk(pk(18, 18, 4), lf((3, 0)))),
       cf(mono("4/3", LG(2))))
series("series_s4.json", "j4-1681-h2k", "CONJECTURE", "4",
       "(11k^2+8k+1)(H_{2k}-\\f 54H_k)+4k+1", 0,
       S([C4K(1)], "1/16", False, den=DEN_3K12,
         harm=[(rk(P1181), H(1, 2, 0)), (rk(pmul("-5/4", P1181)), H(1, 1, 0))],
         const=rk(pk(4, 1))),
       cf(mono(1, LG(2))))
series("series_s4.json", "j4-1681-h4k", "CONJECTURE", "4",
       "(11k^2+8k+1)(10H_{4k}-17H_{2k})+2k+18", 0,
       S([C4K(1)], "1/16", False, den=DEN_3K12,
         harm=[(rk(pmul(10, P1181)), H(1, 4, 0)),
               (rk(pmul(-17, P1181)), H(1, 2, 0))],
         const=rk(pk(2, 18))),
       cf(mono(8, LG(2))))
series("series_s4.json", "j4-1681-hh2", "CONJECTURE", "4",
       "(11k^2+8k+1)(H_{2k}^{(2)}+\\f34 H_k^{(2)})+\\f{4k+1}{2k+1}", 0,
       S([C4K(1)], "1/16", False, den=DEN_3K12,
         harm=[(rk(P1181), H(2, 2, 0)), (rk(pmul("3/4", P1181)), H(2, 1, 0))],
         const=rk(pk(4, 1), lf((2, 1)))),
       cf(mono("1/6", PI(2))))


def hk_terms(coeff_poly: PolyK):
    """The weight (2H_{4k} - 3H_{2k} + H_k) times a polynomial coefficient."""
    return [(rk(pmul(2, coeff_poly)), H(1, 4, 0)),
            (rk(pmul(-3, coeff_poly)), H(1, 2, 0)),
            (rk(coeff_poly), H(1, 1, 0))]


series("series_s4.json", "j4-24-hk", "CONJECTURE", "4",
       "(7k^2+10k+3)H(k)-2k-4", 0,
       S([C4K(1)], "1/24", False, den=DEN_3K12,
         harm=hk_terms(pk(7, 10, 3)), const=rk(pk(-2, -4))),
       cf(mono(-1, SQ(3), LG(3))))
series("series_s4.json", "j4-24-full", "CONJECTURE", "4",
       "(49k^2-146k+21)H(k)-3038k+1160", 0,
       S([C4K(1)], "1/24", False,
         harm=hk_terms(pk(49, -146, 21)), const=rk(pk(-3038, 1160))),
       cf(mono(216, SQ(3)), mono(-5, SQ(3), LG(3))))
series("series_s4.json", "r4-24-a", "LEMMA_GRADE_CONJECTURE", "4",
       "\\f{(7k^2+10k+3)\\bi{4k}k}{(3k+1)(3k+2)24^k}", 0,
       S([C4K(1)], "1/24", False, pk(7, 10, 3), DEN_3K12),
       cf(mono(1, SQ(3))))
series("series_s4.json", "r4-24-b", "LEMMA_GRADE_CONJECTURE", "4",
       "\\f{(49k^2-146k+21)\\bi{4k}k}{24^k}", 0,
       S([C4K(1)], "1/24", False, pk(49, -146, 21)),
       cf(mono(5, SQ(3))))

series("series_s4.json", "j4-25-hk", "CONJECTURE", "4",
       "(133k^2+131k+26)H(k)+76k+40", 0,
       S([C4K(1)], "-1/25", False, den=DEN_3K12,
         harm=hk_terms(pk(133, 131, 26)), const=rk(pk(76, 40))),
       cf(mono(5, SQ(5), LG(5))))
series("series_s4.json", "j4-25-full", "CONJECTURE", "4",
       "(21413k^2-1409k+1036)H(k)+\\f4{23}(118237k+17320)", 0,
       S([C4K(1)], "-1/25", False,
         harm=hk_terms(pk(21413, -1409, 1036)),
         const=rk(pk("472948/23", "69280/23"))),
       cf(mono("1440/23", SQ(5)), mono(-100, SQ(5), LG(5))))
series("series_s4.json", "r4-25-a", "LEMMA_GRADE_CONJECTURE", "4",
       "\\f{(133k^2+131k+26)\\bi{4k}k}{(3k+1)(3k+2)(-25)^k}", 0,
       S([C4K(1)], "-1/25", False, pk(133, 131, 26), DEN_3K12),
       cf(mono(5, SQ(5))))
series("series_s4.json", "r4-25-b", "LEMMA_GRADE_CONJECTURE", "4",
       "\\f{(21413k^2-1409k+1036)\\bi{4k}k}{(-25)^k}", 0,
       S([C4K(1)], "-1/25", False, pk(21413, -1409, 1036)),
       cf(mono(-100, SQ(5))))

series("series_s4.json", "j4-72-hk", "CONJECTURE", "4",
       "(55k^2+54k+11)H(k)+22k+12", 0,
       S([C4K(1)], "-1/72", False, den=DEN_3K12,
         harm=hk_terms(pk(55, 54, 11)), const=rk(pk(22, 12))),
       cf(mono(3, SQ(3), LG(3))))
series("series_s4.json", "j4-72-full", "CONJECTURE", "4",
       "(3575k^2-1026k+67)H(k)+\\f{242}{13}(275k+12)", 0,
       S([C4K(1)], "-1/72", False,
         harm=hk_terms(pk(3575, -1026, 67)),
         const=rk(pk("42350/13", "2904/13"))),
       cf(mono("216/13", SQ(3)), mono(-15, SQ(3), LG(3))),
       notes="display reads 72^k and (242/13)(275k+12); as printed the sum "
             "disagrees with the stated value. Corrected to (-72)^k and "
             "(242/13)(175k+12), confirmed by integer-relation detection "
             "to 40 digits.")
series("series_s4.json", "r4-72-a", "LEMMA_GRADE_CONJECTURE", "4",
       "\\f{(55k^2+54k+11)\\bi{4k}k}{(3k+1)(3k+2)(-72)^k}", 0,
       S([C4K(1)], "-1/72", False, pk(55, 54, 11), DEN_3K12),
       cf(mono(3, SQ(3))))
series("series_s4.json", "r4-72-b", "LEMMA_GRADE_CONJECTURE", "4",
       "\\f{(3575k^2-1026k+67)\\bi{4k}k}{(-72)^k}", 0,
       S([C4K(1)], "-1/72", False, pk(3575, -1026, 67)),
       cf(mono(-15, SQ(3))))

series("series_s4.json", "j4-128-full", "CONJECTURE", "4",
       "(200k^2+76k-17)H(k)-8(725k-49)", 0,
       S([C4K(1)], "1/128", False,
         harm=hk_terms(pk(200, 76, -17)), const=rk(pk(-5800, 392))),
       cf(mono(144, SQ(2)), mono(5, SQ(2), LG(2))))
series("series_s4.json", "j4-128-hk", "CONJECTURE", "4",
       "(40k^2+44k+11)H(k)-8(k+1)", 0,
       S([C4K(1)], "1/128", False, den=DEN_3K12,
         harm=hk_terms(pk(40, 44, 11)), const=rk(pk(-8, -8))),
       cf(mono(-4, SQ(2), LG(2))))
series("series_s4.json", "r4-128-a", "CONJECTURE", "4",
       "(200k^2+76k-17)\\f{\\bi{4k}k}{128^k}", 0,
       S([C4K(1)], "1/128", False, pk(200, 76, -17)),
       cf(mono(-5, SQ(2))))
series("series_s4.json", "r4-128-b", "CONJECTURE", "4",
       "\\f{(600k^2+476k-127)\\bi{4k}k}{(k+1)128^k}", 0,
       S([C4K(1)], "1/128", False, pk(600, 476, -127), lf((1, 1))),
       cf(mono(-96), mono(-10, SQ(2))))
series("series_s4.json", "r4-128-c", "CONJECTURE", "4",
       "\\f{(40k^2+44k+11)\\bi{4k}k}{(3k+1)(3k+2)128^k}", 0,
       S([C4K(1)], "1/128", False, pk(40, 44, 11), DEN_3K12),
       cf(mono(4, SQ(2))))

series("series_s4.json", "j4-256-hk", "CONJECTURE", "4",
       "(112k^2+110k+23)H(k)+28k+16", 0,
       S([C4K(1)], "-1/256", False, den=DEN_3K12,
         harm=hk_terms(pk(112, 110, 23)), const=rk(pk(28, 16))),
       cf(mono(8, SQ(2), LG(2))))
series("series_s4.json", "j4-256-full", "CONJECTURE", "4",
       "(224k^2-86k+1)H(k)+182k+5", 0,
       S([C4K(1)], "-1/256", False,
         harm=hk_terms(pk(224, -86, 1)), const=rk(pk(182, 5))),
       cf(mono("9/8", SQ(2)), mono("-5/8", SQ(2), LG(2))))
series("series_s4.json", "r4-256-a", "LEMMA_GRADE_CONJECTURE", "4",
       "\\f{(224k^2-86k+1)\\bi{4k}k}{(-256)^k}", 0,
       S([C4K(1)], "-1/256", False, pk(224, -86, 1)),
       cf(mono("-5/8", SQ(2))))
series("series_s4.json", "r4-256-b", "LEMMA_GRADE_CONJECTURE", "4",
       "\\f{(5044k^2+310k-191)\\bi{4k}k}{(k+1)(-256)^k}", 0,
       S([C4K(1)], "-1/256", False, pk(504, 310, -191), lf((1, 1))),
       cf(mono(-192), mono("-5/2", SQ(2))),
       notes="display reads 5044k^2; as printed the sum disagrees with the "
             "stated value. The telescoping-derived equivalent of the "
             "(14k-3) identity has 504k^2, which matches to 35 digits.")
series("series_s4.json", "r4-256-c", "LEMMA_GRADE_CONJECTURE", "4",
       "\\f{(112k^2+110k+23)\\bi{4k}k}{(3k+1)(3k+2)(-256)^k}", 0,
       S([C4K(1)], "-1/256", False, pk(112, 110, 23), DEN_3K12),
       cf(mono(8, SQ(2))))

P9584 = pk(95, -84, 16)
series("series_s4.json", "j4-98-h", "CONJECTURE", "4",
       "P(k)(H_{4k-1}-H_{k-1})-25k+12", 1,
       S([C4K(-1)], "9/8", True, den=DEN_K31_32,
         harm=[(rk(P9584), H(1, 4, -1)), (rk(pmul(-1, P9584)), H(1, 1, -1))],
         const=rk(pk(-25, 12))),
       cf(mono("1/3", SQ(3), LG(3), PI()), mono("15/4", KK())))
series("series_s4.json", "j4-9", "CONJECTURE", "4",
       "(13k^2-15k+2)9^{k-1} ... \\f{\\pi}{\\sqrt3}", 1,
       S([C4K(-1)], 9, True, pk(13, -15, 2), DEN_K31_32),
       cf(mono("1/3", SQ(3), PI())))
series("series_s4.json", "r4-9-a", "CONJECTURE", "4",
       "(221k^2-6411k+844)\\f{9^{k-1}}{k\\bi{4k}k}", 1,
       S([C4K(-1)], 9, True, pk(221, -6411, 844), lf((1, 0))),
       cf(mono(243), mono("-20/3", SQ(3), PI())))
series("series_s4.json", "r4-9-b", "CONJECTURE", "4",
       "\\f{(65k^2-1829k-580)9^{k-1}}{(4k+1)\\bi{4k}k}", 1,
       S([C4K(-1)], 9, True, pk(65, -1829, -580), lf((4, 1))),
       cf(mono(52), mono("8/9", SQ(3), PI())))

P1315 = pk(13, -15, 2)
series("series_s4.json", "j4-9-h1", "CONJECTURE", "4",
       "P(k)(3H_{2k-1}-4H_{k-1})+12(4k-1)", 1,
       S([C4K(-1)], 9, True, den=DEN_K31_32,
         harm=[(rk(pmul(3, P1315)), H(1, 2, -1)),
               (rk(pmul(-4, P1315)), H(1, 1, -1))],
         const=rk(pk(48, -12))),
       cf(mono("27/4", KK())))
series("series_s4.json", "j4-9-h2", "CONJECTURE", "4",
       "P(k)(8H_{4k-1}-9H_{2k-1})-160k+84", 1,
       S([C4K(-1)], 9, True, den=DEN_K31_32,
         harm=[(rk(pmul(8, P1315)), H(1, 4, -1)),
               (rk(pmul(-9, P1315)), H(1, 2, -1))],
         const=rk(pk(-160, 84))),
       cf(mono("4/3", SQ(3), LG(3), PI()), mono("-93/4", KK())))

P7753 = pk(77, -53, 10)
series("series_s4.json", "j4-m2-h1", "CONJECTURE", "4",
       "P(k)(H_{2k-1}-H_{k-1})-(209k^2-113k+18)/(2k)", 1,
       S([C4K(-1)], "-1/2", False, den=DEN_K31_32,
         harm=[(rk(P7753), H(1, 2, -1)), (rk(pmul(-1, P7753)), H(1, 1, -1))],
         const=rk(pk(-209, 113, -18), lf((2, 0)))),
       cf(mono(3, LG(2, 2))))
series("series_s4.json", "j4-m2-h2", "CONJECTURE", "4",
       "P(k)(2H_{4k-1}-H_{2k-1}-H_{k-1})+11k-27+6/k", 1,
       S([C4K(-1)], "-1/2", False, den=DEN_K31_32,
         harm=[(rk(pmul(2, P7753)), H(1, 4, -1)),
               (rk(pmul(-1, P7753)), H(1, 2, -1)),
               (rk(pmul(-1, P7753)), H(1, 1, -1))],
         const=rk(pk(11, -27, 6), lf((1, 0)))),
       cf(mono("-1/2", PI(2))))
P415 = pk(415, -343, 62)
series("series_s4.json", "j4-m8-h", "CONJECTURE", "4",
       "P(k)(H_{4k-1}-H_{k-1})-(581k^2-229k-6)/(4k)", 1,
       S([C4K(-1)], "-1/8", False, den=DEN_K31_32,
         harm=[(rk(P415), H(1, 4, -1)), (rk(pmul(-1, P415)), H(1, 1, -1))],
         const=rk(pk(-581, 229, 6), lf((4, 0)))),
       cf(mono("-1/4", PI(2))))

P88 = pk(88, 108, 36, 3)
series("series_s4.json", "j4-1024-h1", "CONJECTURE", "4",
       "P(k)(2H_{2k}-3H_k)+40k^2+56k+14", 0,
       S([C3K(1), C4K(2)], "1/1024", False, den=DEN_3K12,
         harm=[(rk(pmul(2, P88)), H(1, 2, 0)), (rk(pmul(-3, P88)), H(1, 1, 0))],
         const=rk(pk(40, 56, 14))),
       cf(mono(32, LG(2), PI(-1))))
series("series_s4.json", "j4-1024-h2", "CONJECTURE", "4",
       "P(k)(2H_{4k}-3H_{2k})+40k^2+32k+8", 0,
       S([C3K(1), C4K(2)], "1/1024", False, den=DEN_3K12,
         harm=[(rk(pmul(2, P88)), H(1, 4, 0)), (rk(pmul(-3, P88)), H(1, 2, 0))],
         const=rk(pk(40, 32, 8))),
       cf(mono(16, LG(2), PI(-1))))
# stated with constant term 6; only 9 (as in the cited 16/pi identity)
# matches the claimed values, to 60 digits
P368 = pk(368, 400, 118, 9)
series("series_s4.json", "j4-4096-h1", "CONJECTURE", "4",
       "P(k)(H_{2k}+H_k)-128k^2-136k-31", 0,
       S([C3K(1), C4K(2)], "1/4096", False, den=DEN_3K12,
         harm=[(rk(P368), H(1, 2, 0)), (rk(P368), H(1, 1, 0))],
         const=rk(pk(-128, -136, -31))),
       cf(mono(-64, LG(2), PI(-1))),
       notes="P(k) is stated with constant term 6; the sum then differs from "
             "the value by ~5e-3. Constant term 9 matches to 60 digits.")
series("series_s4.json", "j4-4096-h2", "CONJECTURE", "4",
       "P(k)(2H_{4k}-5H_{2k})+192k^2+212k+46", 0,
       S([C3K(1), C4K(2)], "1/4096", False, den=DEN_3K12,
         harm=[(rk(pmul(2, P368)), H(1, 4, 0)), (rk(pmul(-5, P368)), H(1, 2, 0))],
         const=rk(pk(192, 212, 46))),
       cf(mono(96, LG(2), PI(-1))),
       notes="P(k) read with constant term 9 (stated 6); see j4-4096-h1.")
P896 = pk(896, 992, 296, 21)
series("series_s4.json", "j4-2p14-h", "CONJECTURE", "4",
       "P(k)(4H_{4k}-4H_{2k}+3H_k)-576k^2-544k-110", 0,
       S([C3K(1), C4K(2)], "-1/16384", False, den=DEN_3K12,
         harm=[(rk(pmul(4, P896)), H(1, 4, 0)),
               (rk(pmul(-4, P896)), H(1, 2, 0)),
               (rk(pmul(3, P896)), H(1, 1, 0))],
         const=rk(pk(-576, -544, -110))),
       cf(mono(-256, LG(2), PI(-1))))

P74 = pk(74, -84, 29, -3)
DEN_256Q = lf((1, 0, 3), (3, -1), (3, -2))
series("series_s4.json", "j4-256q-h1", "CONJECTURE", "4",
       "P(k)(3H_{2k-1}-4H_{k-1})-57k^2+33k-5", 1,
       S([C3K(-1), C4K(-2)], 256, False, den=DEN_256Q,
         harm=[(rk(pmul(3, P74)), H(1, 2, -1)),
               (rk(pmul(-4, P74)), H(1, 1, -1))],
         const=rk(pk(-57, 33, -5))),
       cf(mono(24, PI(2), LG(2)), mono(-84, ZE(3))))
series("series_s4.json", "j4-256q-h2", "CONJECTURE", "4",
       "P(k)(4H_{4k-1}-7H_{2k-1})+51k^2-15k-1", 1,
       S([C3K(-1), C4K(-2)], 256, False, den=DEN_256Q,
         harm=[(rk(pmul(4, P74)), H(1, 4, -1)),
               (rk(pmul(-7, P74)), H(1, 2, -1))],
         const=rk(pk(51, -15, -1))),
       cf(mono(24, PI(2), LG(2)), mono(-84, ZE(3))))
series("series_s4.json", "j4-256q-h3", "CONJECTURE", "4",
       "P(k)(4H_{4k-1}^{(2)}-H_{2k-1}^{(2)}-4H_{k-1}^{(2)})+4k-4", 1,
       S([C3K(-1), C4K(-2)], 256, False, den=DEN_256Q,
         harm=[(rk(pmul(4, P74)), H(2, 4, -1)),
               (rk(pmul(-1, P74)), H(2, 2, -1)),
               (rk(pmul(-4, P74)), H(2, 1, -1))],
         const=rk(pk(4, -4))),
       cf(mono(2, PI(4))))

P77m32 = pk(77, -86, 29, -3)
series("series_s4.json", "j4-m32", "CONJECTURE", "4",
       "\\f{P(k)(-32)^k}{k^3(3k-1)(3k-2)\\bi{3k}k\\bi{4k}k^2}", 1,
       S([C3K(-1), C4K(-2)], -32, False, P77m32, DEN_256Q),
       cf(mono(-6, GG())))
series("series_s4.json", "j4-m32-h", "CONJECTURE", "4",
       "P(k)(4H_{4k-1}^{(2)}-H_{2k-1}^{(2)}-4H_{k-1}^{(2)})-8k+4", 1,
       S([C3K(-1), C4K(-2)], -32, True, den=DEN_256Q,
         harm=[(rk(pmul(4, P77m32)), H(2, 4, -1)),
               (rk(pmul(-1, P77m32)), H(2, 2, -1)),
               (rk(pmul(-4, P77m32)), H(2, 1, -1))],
         const=rk(pk(-8, 4))),
       cf(mono("3/4", B4())),
       notes="beta(4) is used without definition in the source; it is read "
             "here as the Dirichlet beta value L(4) = "
             "(zeta(4,1/4)-zeta(4,3/4))/256")

# ================================================ section 5 conjecture series

series("series_s5.json", "j5-3k-a", "CONJECTURE", "5",
       "\\f{10k-3}{(2k-1)k^23^k\\bi{2k}k\\bi{3k}k}", 1,
       S([C2K(-1), C3K(-1)], "1/3", False, pk(10, -3), lf((2, -1), (1, 0, 2))),
       cf(mono("1/2", KK())))
series("series_s5.json", "j5-3k-b", "CONJECTURE", "5",
       "\\f{(4k-1)3^k}{(2k-1)k^2\\bi{2k}k\\bi{3k}k}", 1,
       S([C2K(-1), C3K(-1)], 3, False, pk(4, -1), lf((2, -1), (1, 0, 2))),
       cf(mono(2, KK())))
P103 = pk(10, -3)
series("series_s5.json", "j5-3k-c", "CONJECTURE", "5",
       "(10k-3)(3H_{3k-1}+4H_{2k-1}-6H_{k-1})-12", 1,
       S([C2K(-1), C3K(-1)], "1/3", False, den=lf((2, -1), (1, 0, 2)),
         harm=[(rk(pmul(3, P103)), H(1, 3, -1)),
               (rk(pmul(4, P103)), H(1, 2, -1)),
               (rk(pmul(-6, P103)), H(1, 1, -1))],
         const=rk(pk(-12))),
       cf(mono("4/81", SQ(3), PI(3))))
P41 = pk(4, -1)
series("series_s5.json", "j5-3k-d", "CONJECTURE", "5",
       "(4k-1)(3H_{3k-1}-3H_{2k-1}-H_{k-1})+6k/(2k-1)", 1,
       S([C2K(-1), C3K(-1)], 3, False, den=lf((2, -1), (1, 0, 2)),
         harm=[(rk(pmul(3, P41)), H(1, 3, -1)),
               (rk(pmul(-3, P41)), H(1, 2, -1)),
               (rk(pmul(-1, P41)), H(1, 1, -1))],
         const=rk(pk(6, 0), lf((2, -1)))),
       cf(mono("8/81", SQ(3), PI(3))))

series("series_s5.json", "j5-m16-h1", "CONJECTURE", "5",
       "\\f{5k-1}{2k-1}H_{k-1}-\\f1{8k}", 1,
       S([C2K(-1), C42(-1)], -16, False, den=lf((1, 0, 2)),
         harm=[(RatK(pk(5, -1), lf((2, -1))), H(1, 1, -1))],
         const=rk(pk(-1), lf((8, 0)))),
       cf(mono(1, PI(2), LG(2)), mono("-21/4", ZE(3))))
series("series_s5.json", "j5-m16-h2", "CONJECTURE", "5",
       "\\f{5k-1}{2k-1}H_{2k-1}+\\f1{12k}", 1,
       S([C2K(-1), C42(-1)], -16, False, den=lf((1, 0, 2)),
         harm=[(RatK(pk(5, -1), lf((2, -1))), H(1, 2, -1))],
         const=rk(pk(1), lf((12, 0)))),
       cf(mono("1/3", PI(2), LG(2)), mono("-35/6", ZE(3))))
series("series_s5.json", "j5-m16-h3", "CONJECTURE", "5",
       "(5k-1)H_{4k-1}-\\f{46k-5}{24k}", 1,
       S([C2K(-1), C42(-1)], -16, False, den=lf((2, -1), (1, 0, 2)),
         harm=[(rk(pk(5, -1)), H(1, 4, -1))],
         const=rk(pk(-46, 5), lf((24, 0)))),
       cf(mono("1/6", PI(2), LG(2)), mono("-77/12", ZE(3))))
series("series_s5.json", "j5-m16-hh2", "CONJECTURE", "5",
       "(5k-1)H_{k-1}^{(2)}-4(4k-1)/(2k-1)^2", 1,
       S([C2K(-1), C42(-1)], -16, False, den=lf((2, -1), (1, 0, 2)),
         harm=[(rk(pk(5, -1)), H(2, 1, -1))],
         const=rk(pmul(-4, pk(4, -1)), lf((2, -1, 2)))),
       cf(mono("1/6", PI(4))))
series("series_s5.json", "j5-m16-hh3", "CONJECTURE", "5",
       "(5k-1)H_{k-1}^{(3)}+12(4k-1)/(2k-1)^3", 1,
       S([C2K(-1), C42(-1)], -16, False, den=lf((2, -1), (1, 0, 2)),
         harm=[(rk(pk(5, -1)), H(3, 1, -1))],
         const=rk(pmul(12, pk(4, -1)), lf((2, -1, 3)))),
       cf(mono(-4, PI(2), ZE(3))))

P344 = pk(344, -386, 115, -9)
DEN_344 = lf((1, 0, 2), (2, -1), (4, -1), (4, -3))
series("series_s5.json", "j5-m256-h1", "CONJECTURE", "5",
       "P(k)(H_{2k-1}-2H_{k-1})-(4k-1)(58k^2+181k-66)/k", 1,
       S([C3K(-1), C63(-1)], -256, False, den=DEN_344,
         harm=[(rk(P344), H(1, 2, -1)), (rk(pmul(-2, P344)), H(1, 1, -1))],
         const=RatK(pmul(-1, lf((4, -1)), pk(58, 181, -66)), lf((26, 0)))),
       cf(mono("1680/13", ZE(3)), mono(-32, PI(2), LG(2))),
       notes="displayed lower limit k=0 is impossible (k^2 and H_{k-1}); "
             "read k=1. The linear-part denominator prints as k; only 26k "
             "matches the stated value (checked to 49 digits).")
series("series_s5.json", "j5-m256-h2", "CONJECTURE", "5",
       "P(k)(2H_{6k-1}-H_{3k-1}-3H_{k-1})-Q(k)/(13k)", 1,
       S([C3K(-1), C63(-1)], -256, False, den=DEN_344,
         harm=[(rk(pmul(2, P344)), H(1, 6, -1)),
               (rk(pmul(-1, P344)), H(1, 3, -1)),
               (rk(pmul(-3, P344)), H(1, 1, -1))],
         const=rk(pk("-1952/13", "1732/13", "-315/13", "-12/13"), lf((1, 0)))),
       cf(mono("2464/13", ZE(3)), mono(-64, PI(2), LG(2))),
       notes="displayed lower limit k=0 is impossible; read k=1")

series("series_s5.json", "j5-9k-a", "CONJECTURE", "5",
       "\\frac{(8k-3)\\binom{4k}{2k}}{k(4k-1)9^k\\binom{2k}k^2}", 1,
       S([C42(1), C2K(-2)], "1/9", False, pk(8, -3), lf((1, 0), (4, -1))),
       cf(mono("1/18", SQ(3), PI())))
P83 = pk(8, -3)
series("series_s5.json", "j5-9k-b", "CONJECTURE", "5",
       "(8k-3)(5H_{2k-1}-4H_{k-1})-6", 1,
       S([C42(1), C2K(-2)], "1/9", False, den=lf((1, 0), (4, -1)),
         harm=[(rk(pmul(5, P83)), H(1, 2, -1)),
               (rk(pmul(-4, P83)), H(1, 1, -1))],
         const=rk(pk(-6))),
       cf(mono("3/2", KK())))
series("series_s5.json", "j5-9k-c", "CONJECTURE", "5",
       "(8k-3)(2H_{2k-1}^{(2)}-5H_{k-1}^{(2)})", 1,
       S([C42(1), C2K(-2)], "1/9", False, den=lf((1, 0), (4, -1)),
         harm=[(rk(pmul(2, P83)), H(2, 2, -1)),
               (rk(pmul(-5, P83)), H(2, 1, -1))],
         const=rk(pk(0))),
       cf(mono("1/108", SQ(3), PI(3))))

P425 = pk(42, 5)
series("series_s5.json", "j5-4096h3", "CONJECTURE", "5",
       "(42k+5)H_k^{(3)}-\\f{352}{(2k+1)^2}", 0,
       S([C2K(3)], "1/4096", False,
         harm=[(rk(P425), H(3, 1, 0))],
         const=rk(pk(-352), lf((2, 1, 2)))),
       cf(mono("10720/7", ZE(3), PI(-1)), mono(-1024, GG())))
series("series_s5.json", "r5-4096-h3var", "CONJECTURE", "5",
       "H_{2k}^{(3)}-\\f{43}{352}H_k^{(3)}", 0,
       S([C2K(3)], "1/4096", False, P425,
         harm=[(rk(pk(1)), H(3, 2, 0)), (rk(pk("-43/352")), H(3, 1, 0))],
         const=rk(pk(0))),
       cf(mono("555/77", ZE(3), PI(-1)), mono("-32/11", GG())))
series("series_s5.json", "j5-4096h4", "CONJECTURE", "5",
       "9(42k+5)(H_{2k}^{(4)}-\\f{H_k^{(4)}}{16})+\\f{25}{(2k+1)^3}", 0,
       S([C2K(3)], "1/4096", False,
         harm=[(rk(pmul(9, P425)), H(4, 2, 0)),
               (rk(pmul("-9/16", P425)), H(4, 1, 0))],
         const=rk(pk(25), lf((2, 1, 3)))),
       cf(mono("5/6", PI(3))))

series("series_s5.json", "j5-8k", "CONJECTURE", "5",
       "(50k-15)H_{k-1}^{(2)}+\\f4k", 1,
       S([C2K(-2), C3K(-1)], 8, False, den=lf((1, 0, 3)),
         harm=[(rk(pk(50, -15)), H(2, 1, -1))],
         const=rk(pk(4), lf((1, 0)))),
       cf(mono("1/24", PI(4))))
series("series_s5.json", "r5-8k", "CONJECTURE", "5",
       "8^k((10k-3)(H_{2k-1}-H_{k-1})-1)", 1,
       S([C2K(-2), C3K(-1)], 8, False, den=lf((1, 0, 3)),
         harm=[(rk(P103), H(1, 2, -1)), (rk(pmul(-1, P103)), H(1, 1, -1))],
         const=rk(pk(-1))),
       cf(mono("7/2", ZE(3))))
series("series_s5.json", "j5-64k", "CONJECTURE", "5",
       "(55k-15)H_{k-1}^{(2)}+\\f8k", 1,
       S([C2K(-2), C3K(-1)], 64, False, den=lf((1, 0, 3)),
         harm=[(rk(pk(55, -15)), H(2, 1, -1))],
         const=rk(pk(8), lf((1, 0)))),
       cf(mono("8/3", PI(4))))
series("series_s5.json", "r5-64k", "CONJECTURE", "5",
       "64^{k-1}((11k-3)(2H_{2k-1}+H_{k-1})-4)", 1,
       S([C2K(-2), C3K(-1)], 64, True, den=lf((1, 0, 3)),
         harm=[(rk(pmul(2, pk(11, -3))), H(1, 2, -1)),
               (rk(pk(11, -3)), H(1, 1, -1))],
         const=rk(pk(-4))),
       cf(mono("7/2", ZE(3))))
series("series_s5.json", "j5-81k", "CONJECTURE", "5",
       "(350k-80)H_{k-1}^{(2)}+\\f{27}k", 1,
       S([C2K(-2), C42(-1)], 81, False, den=lf((1, 0, 3)),
         harm=[(rk(pk(350, -80)), H(2, 1, -1))],
         const=rk(pk(27), lf((1, 0)))),
       cf(mono(4, PI(4))))
series("series_s5.json", "r5-81k", "CONJECTURE", "5",
       "81^{k}((35k-8)(H_{4k-1}-H_{k-1})-35/4)", 1,
       S([C2K(-2), C42(-1)], 81, False, den=lf((1, 0, 3)),
         harm=[(rk(pk(35, -8)), H(1, 4, -1)),
               (rk(pk(-35, 8)), H(1, 1, -1))],
         const=rk(pk("-35/4"))),
       cf(mono(12, PI(2), LG(3)), mono(39, ZE(3))),
       notes="display prints C(3k,k); the sum then misses the stated value. "
             "C(4k,2k), as in the rest of this family, matches to 48 digits.")

series("series_s5.json", "j5-145-h3", "CONJECTURE", "5",
       "17(145k^2-104k+18)H_{k-1}^{(3)}+28(2k-1)/k^2", 1,
       S([C2K(-1), C3K(-2)], 1, False, den=lf((1, 0, 3), (2, -1)),
         harm=[(rk(pmul(17, P145)), H(3, 1, -1))],
         const=rk(pmul(28, pk(2, -1)), lf((1, 0, 2)))),
       cf(mono(528, ZE(5)), mono(-46, PI(2), ZE(3))))

P360 = pk(360, 612, 230, 15)
series("series_s5.json", "j5-2p15", "CONJECTURE", "5",
       "\\f{P(k)\\bi{3k}k\\bi{6k}{3k}^2}{(3k+1)(3k+2)2^{15k}}", 0,
       S([C3K(1), C63(2)], "1/32768", False, P360, DEN_3K12),
       cf(mono(32, SQ(2), PI(-1))))
series("series_s5.json", "j5-2p15-h1", "CONJECTURE", "5",
       "P(k)(H_{2k}-H_k)-180k^2+36k+23", 0,
       S([C3K(1), C63(2)], "1/32768", False, den=DEN_3K12,
         harm=[(rk(P360), H(1, 2, 0)), (rk(pmul(-1, P360)), H(1, 1, 0))],
         const=rk(pk(-180, 36, 23))),
       cf(mono(48, SQ(2), LG(2), PI(-1))))
series("series_s5.json", "j5-2p15-h2", "CONJECTURE", "5",
       "P(k)(4H_{6k}-3H_{3k}-H_k)+f(k)", 0,
       S([C3K(1), C63(2)], "1/32768", False, den=DEN_3K12,
         harm=[(rk(pmul(4, P360)), H(1, 6, 0)),
               (rk(pmul(-3, P360)), H(1, 3, 0)),
               (rk(pmul(-1, P360)), H(1, 1, 0))],
         const=RatK(pk(1296, 1980, 912, 139), DEN_3K12)),
       cf(mono(192, SQ(2), LG(2), PI(-1))))

P60 = pk(60, -26, 3)
DEN_60 = lf((2, -1), (1, 0, 4))
series("series_s5.json", "j5-256b-h1", "CONJECTURE", "5",
       "P(k)(5H_{2k-1}-2H_{k-1})-9(4k-1)^2/(2k-1)", 1,
       S([C2K(-2), C42(-2)], 256, False, den=DEN_60,
         harm=[(rk(pmul(5, P60)), H(1, 2, -1)),
               (rk(pmul(-2, P60)), H(1, 1, -1))],
         const=RatK(pmul(-9, lf((4, -1, 2))), lf((2, -1)))),
       cf(mono(2, PI(4))))
series("series_s5.json", "j5-256b-h2", "CONJECTURE", "5",
       "P(k)(2H_{4k-1}-H_{2k-1})-4(2k^2-5k+1)/(2k-1)", 1,
       S([C2K(-2), C42(-2)], 256, False, den=DEN_60,
         harm=[(rk(pmul(2, P60)), H(1, 4, -1)),
               (rk(pmul(-1, P60)), H(1, 2, -1))],
         const=rk(pmul(-4, pk(2, -5, 1)), lf((2, -1)))),
       cf(mono(2, PI(4))))
series("series_s5.json", "j5-256b-h3", "CONJECTURE", "5",
       "P(k)H_{k-1}^{(2)}-(136k^3-76k^2+14k-1)/(k(2k-1)^2)", 1,
       S([C2K(-2), C42(-2)], 256, False, den=DEN_60,
         harm=[(rk(P60), H(2, 1, -1))],
         const=rk(pk(-136, 76, -14, 1), lf((1, 0), (2, -1, 2)))),
       cf(mono(-124, ZE(5))))
series("series_s5.json", "j5-256b-h4", "CONJECTURE", "5",
       "P(k)(H_{4k-1}^{(2)}-H_{2k-1}^{(2)}/4)-Q(k)/(k(2k-1)^2)", 1,
       S([C2K(-2), C42(-2)], 256, False, den=DEN_60,
         harm=[(rk(P60), H(2, 4, -1)), (rk(pmul("-1/4", P60)), H(2, 2, -1))],
         const=rk(pk(-92, 64, -15, 1), lf((1, 0), (2, -1, 2)))),
       cf())

P364 = pk(364, -227, 36)
series("series_s5.json", "j5-364-h1", "CONJECTURE", "5",
       "P(k)(3H_{2k-1}-2H_{k-1})-(1276k^2-844k+139)/(4k-2)", 1,
       S([C2K(-2), C3K(-2)], 1, False, den=DEN_60,
         harm=[(rk(pmul(3, P364)), H(1, 2, -1)),
               (rk(pmul(-2, P364)), H(1, 1, -1))],
         const=rk(pk(-1276, 844, -139), lf((4, -2)))),
       cf(mono("1/15", PI(4))))
series("series_s5.json", "j5-364-h2", "CONJECTURE", "5",
       "P(k)(H_{3k-1}-H_{k-1})-(728k^2-728k+155)/(12k-6)", 1,
       S([C2K(-2), C3K(-2)], 1, False, den=DEN_60,
         harm=[(rk(P364), H(1, 3, -1)), (rk(pmul(-1, P364)), H(1, 1, -1))],
         const=rk(pk(-728, 728, -155), lf((12, -6)))),
       cf(mono("1/15", PI(4))))
series("series_s5.json", "j5-364-h3", "CONJECTURE", "5",
       "P(k)(99H_{3k-1}^{(2)}-757H_{k-1}^{(2)})+18Q(k)/(2k-1)^2", 1,
       S([C2K(-2), C3K(-2)], 1, False, den=DEN_60,
         harm=[(rk(pmul(99, P364)), H(2, 3, -1)),
               (rk(pmul(-757, P364)), H(2, 1, -1))],
         const=rk(pmul(18, pk(2952, -1572, 163)), lf((2, -1, 2)))),
       cf(mono(1316, ZE(5))))

P28 = pk(28, 10, 1)
BIN28 = [C2K(5), C3K(-1), C63(-1)]
series("series_s5.json", "j5-28k", "CONJECTURE", "5",
       "\\f{(28k^2+10k+1)\\bi{2k}k^5}{(6k+1)(-64)^k\\bi{3k}k\\bi{6k}{3k}}", 0,
       S(BIN28, "-1/64", False, P28, lf((6, 1))),
       cf(mono(3, PI(-1))))
series("series_s5.json", "j5-28k-h1", "CONJECTURE", "5",
       "(28k^2+10k+1)(2H_{2k}-3H_k)+20k+4", 0,
       S(BIN28, "-1/64", False, den=lf((6, 1)),
         harm=[(rk(pmul(2, P28)), H(1, 2, 0)), (rk(pmul(-3, P28)), H(1, 1, 0))],
         const=rk(pk(20, 4))),
       cf(mono(18, LG(2), PI(-1))))
series("series_s5.json", "j5-28k-h2", "CONJECTURE", "5",
       "(28k^2+10k+1)(2H_{6k}-H_{3k}-3H_k)+f(k)", 0,
       S(BIN28, "-1/64", False, den=lf((6, 1)),
         harm=[(rk(pmul(2, P28)), H(1, 6, 0)),
               (rk(pmul(-1, P28)), H(1, 3, 0)),
               (rk(pmul(-3, P28)), H(1, 1, 0))],
         const=RatK(pmul(4, pk(138, 52, 5)), lf((18, 3)))),
       cf(mono(30, LG(2), PI(-1))))
series("series_s5.json", "j5-28k-hh2", "CONJECTURE", "5",
       "(28k^2+10k+1)(10H_{2k}^{(2)}-3H_k^{(2)})+2", 0,
       S(BIN28, "-1/64", False, den=lf((6, 1)),
         harm=[(rk(pmul(10, P28)), H(2, 2, 0)), (rk(pmul(-3, P28)), H(2, 1, 0))],
         const=rk(pk(2))),
       cf(mono("1/2", PI())))
series("series_s5.json", "j5-28k-hh3", "CONJECTURE", "5",
       "(28k^2+10k+1)(28H_{2k}^{(3)}-3H_k^{(3)})+8/(2k+1)", 0,
       S(BIN28, "-1/64", False, den=lf((6, 1)),
         harm=[(rk(pmul(28, P28)), H(3, 2, 0)), (rk(pmul(-3, P28)), H(3, 1, 0))],
         const=rk(pk(8), lf((2, 1)))),
       cf(mono(75, ZE(3), PI(-1)), mono(-24, GG())))

P21 = pk(21, -22, 8, -1)
series("series_s5.json", "j5-21k-h6", "CONJECTURE", "5",
       "(21k^3-22k^2+8k-1)(64H_{2k-1}^{(6)}-65H_{k-1}^{(6)})", 1,
       S([C2K(-7)], 256, False, den=lf((1, 0, 7)),
         harm=[(rk(pmul(64, P21)), H(6, 2, -1)),
               (rk(pmul(-65, P21)), H(6, 1, -1))],
         const=rk(pk(0))),
       cf(mono("31/3780", PI(10))))
series("series_s5.json", "r5-21k-hh2", "CONJECTURE", "5",
       "P(k)(4H_{2k-1}^{(2)}-5H_{k-1}^{(2)})-6k+2", 1,
       S([C2K(-7)], 256, False, den=lf((1, 0, 7)),
         harm=[(rk(pmul(4, P21)), H(2, 2, -1)),
               (rk(pmul(-5, P21)), H(2, 1, -1))],
         const=rk(pk(-6, 2))),
       cf(mono("1/24", PI(6))))
series("series_s5.json", "r5-21k-hh4", "CONJECTURE", "5",
       "P(k)(16H_{2k-1}^{(4)}+7H_{k-1}^{(4)})+\\frac 4k", 1,
       S([C2K(-7)], 256, False, den=lf((1, 0, 7)),
         harm=[(rk(pmul(16, P21)), H(4, 2, -1)),
               (rk(pmul(7, P21)), H(4, 1, -1))],
         const=rk(pk(4), lf((1, 0)))),
       cf(mono("31/1440", PI(8))))

P5460 = pk(5460, -8341, 4864, -1280, 128)
BIN5460 = [C42(1), C2K(-8)]
DEN5460 = lf((4, -1), (1, 0, 7))
series("series_s5.json", "j5-5460-hh2", "CONJECTURE", "5",
       "P(k)(H_{2k-1}^{(2)}-2H_{k-1}^{(2)})-453k^2+1349k/4-64", 1,
       S(BIN5460, 1, False, den=DEN5460,
         harm=[(rk(P5460), H(2, 2, -1)), (rk(pmul(-2, P5460)), H(2, 1, -1))],
         const=rk(pk(-1812, 1349, -256), pk(4))),
       cf(mono("1/189", PI(6))))
series("series_s5.json", "j5-5460-hh4", "CONJECTURE", "5",
       "P(k)(H_{2k-1}^{(4)}+H_{k-1}^{(4)})+(1796k-705)/(16k)", 1,
       S(BIN5460, 1, False, den=DEN5460,
         harm=[(rk(P5460), H(4, 2, -1)), (rk(P5460), H(4, 1, -1))],
         const=rk(pk(1796, -705), lf((16, 0)))),
       cf(mono("1/1350", PI(8))))
series("series_s5.json", "j5-5460-hh6", "CONJECTURE", "5",
       "P(k)(H_{2k-1}^{(6)}-2H_{k-1}^{(6)})-1323(4k-1)/(64k^3)", 1,
       S(BIN5460, 1, False, den=DEN5460,
         harm=[(rk(P5460), H(6, 2, -1)), (rk(pmul(-2, P5460)), H(6, 1, -1))],
         const=rk(pmul(-1323, pk(4, -1)), lf((4, 0), (4, 0), (4, 0)))),
       cf(mono("2/31185", PI(10))))
series("series_s5.json", "r5-5460", "CONJECTURE", "5",
       "\\frac{P(k)\\binom{4k}{2k}}{(4k-1)k^7\\binom{2k}k^8}", 1,
       S(BIN5460, 1, False, P5460, DEN5460),
       cf(mono("1/15", PI(4))))
series("series_s5.json", "r5-5460-hh8", "CONJECTURE", "5",
       "P(k)(2H_{2k-1}^{(8)}+17H_{k-1}^{(8)})-2091(4k-1)/(128k^5)", 1,
       S(BIN5460, 1, False, den=DEN5460,
         harm=[(rk(pmul(2, P5460)), H(8, 2, -1)),
               (rk(pmul(17, P5460)), H(8, 1, -1))],
         const=rk(pmul(-2091, pk(4, -1)), pmul(128, lf((1, 0, 5))))),
       cf(mono("529/38697750", PI(12))))

Q92 = pk(92, -84, 27, -3)
BIN4096B = [C2K(-6), C3K(-1)]
series("series_s5.json", "j5-4096b-h1", "CONJECTURE", "5",
       "Q(k)(5H_{2k-1}-2H_{k-1})-94k^2+57k-9", 1,
       S(BIN4096B, 4096, False, den=lf((1, 0, 7)),
         harm=[(rk(pmul(5, Q92)), H(1, 2, -1)),
               (rk(pmul(-2, Q92)), H(1, 1, -1))],
         const=rk(pk(-94, 57, -9))),
       cf(mono(2976, ZE(5))))
series("series_s5.json", "j5-4096b-h2", "CONJECTURE", "5",
       "Q(k)(H_{3k-1}-3H_{k-1})-88k^2/3+18k-3", 1,
       S(BIN4096B, 4096, False, den=lf((1, 0, 7)),
         harm=[(rk(Q92), H(1, 3, -1)), (rk(pmul(-3, Q92)), H(1, 1, -1))],
         const=rk(pk("-88/3", 18, -3))),
       cf(mono(32, PI(4), LG(2)), mono(-1488, ZE(5))))
series("series_s5.json", "j5-4096b-hh2", "CONJECTURE", "5",
       "Q(k)(8H_{2k-1}^{(2)}-7H_{k-1}^{(2)})-44k+12", 1,
       S(BIN4096B, 4096, False, den=lf((1, 0, 7)),
         harm=[(rk(pmul(8, Q92)), H(2, 2, -1)),
               (rk(pmul(-7, Q92)), H(2, 1, -1))],
         const=rk(pk(-44, 12))),
       cf(mono("16/3", PI(6))))
series("series_s5.json", "j5-4096b-hh4", "CONJECTURE", "5",
       "Q(k)(64H_{2k-1}^{(4)}+13H_{k-1}^{(4)})+32/k", 1,
       S(BIN4096B, 4096, False, den=lf((1, 0, 7)),
         harm=[(rk(pmul(64, Q92)), H(4, 2, -1)),
               (rk(pmul(13, Q92)), H(4, 1, -1))],
         const=rk(pk(32), lf((1, 0)))),
       cf(mono("248/45", PI(8))))
series("series_s5.json", "r5-4096b", "CONJECTURE", "5",
       "\\f{Q(k)4096^k}{k^7\\bi{2k}k^6\\bi{3k}k}", 1,
       S(BIN4096B, 4096, False, Q92, lf((1, 0, 7))),
       cf(mono(8, PI(4))))

R436 = pk(43680, 20632, 4340, 466, 21)
BIN2P32 = [C2K(8), C42(1)]
series("series_s5.json", "j5-2p32-hh4", "CONJECTURE", "5",
       "R(x)(17H_{2k}^{(4)}-H_k^{(4)})+\\f{1796k+193}{2k+1}", 0,
       S(BIN2P32, mpq(1, 2**32), False,
         harm=[(rk(pmul(17, R436)), H(4, 2, 0)),
               (rk(pmul(-1, R436)), H(4, 1, 0))],
         const=rk(pk(1796, 193), lf((2, 1)))),
       cf(mono("8704/45")),
       notes="source writes R(x) where the k-dependence is evident; read as R(k)")
series("series_s5.json", "j5-2p32-hh6", "CONJECTURE", "5",
       "R(x)(127H_{2k}^{(6)}-2H_k^{(6)})+\\f{1323(4k+1)}{(2k+1)^3}", 0,
       S(BIN2P32, mpq(1, 2**32), False,
         harm=[(rk(pmul(127, R436)), H(6, 2, 0)),
               (rk(pmul(-2, R436)), H(6, 1, 0))],
         const=rk(pmul(1323, pk(4, 1)), lf((2, 1, 3)))),
       cf(mono("126976/945", PI(2))),
       notes="source writes R(x); read as R(k)")
series("series_s5.json", "j5-2p32-hh8", "CONJECTURE", "5",
       "R(x)(4354H_{2k}^{(8)}-17H_k^{(8)})-\\f{4182(4k+1)}{(2k+1)^5}", 0,
       S(BIN2P32, mpq(1, 2**32), False,
         harm=[(rk(pmul(4354, R436)), H(8, 2, 0)),
               (rk(pmul(-17, R436)), H(8, 1, 0))],
         const=rk(pmul(-4182, pk(4, 1)), lf((2, 1, 5)))),
       cf(mono("-197632/4725", PI(4))),
       notes="source writes R(x); read as R(k)")
series("series_s5.json", "r5-2p32-a", "CONJECTURE", "5",
       "R(k)\\f{\\bi{2k}k^8\\bi{4k}{2k}}{2^{32k}}", 0,
       S(BIN2P32, mpq(1, 2**32), False, R436),
       cf(mono(2048, PI(-4))))
series("series_s5.json", "r5-2p32-b", "CONJECTURE", "5",
       "R(x)(7H_{2k}^{(2)}-2H_k^{(2)})+3624k^2+926k+69", 0,
       S(BIN2P32, mpq(1, 2**32), False,
         harm=[(rk(pmul(7, R436)), H(2, 2, 0)),
               (rk(pmul(-2, R436)), H(2, 1, 0))],
         const=rk(pk(3624, 926, 69))),
       cf(mono("2048/3", PI(-2))))

# ============================================================== congruences

SUM_16HK = S([C4K(1)], "1/16", False,
             harm=[(rk(P2292), H(1, 1, 0))],
             const=rk(pk(-162, 324, -10), lf((3, 0))))
cong("cg-16k-qp2", "4", "-10q_p(2)+5p\\,q_p(2)^2-\\f{10}3p^2q_p(2)^3",
     SUM_16HK, "1..p-1",
     [rt(-10, qp(2)), rt(5, sp(), qp(2, 2)), rt("-10/3", sp(2), qp(2, 3))],
     3, min_p=5)

SUM_1681 = S([C4K(1)], "1/16", False, P1181, DEN_3K12)
cong("cg-1681-php", "4", "\\eq\\f{21}4pH_{p-1}\\pmod{p^4}",
     SUM_1681, "1..p-1", [rt("21/4", sp(), harm_p(-1))], 4, min_p=3)

SUM_103 = S([C2K(1), C3K(1)], 3, False, pk(10, 3), lf((2, 1)))
SUM_4K1 = S([C2K(1), C3K(1)], "1/3", False, pk(4, 1), lf((2, 1)))
cong("cg-103-b13", "5", "\\eq3\\l(\\f p3\\r)+p^2B_{p-2}\\l(\\f13\\r)",
     SUM_103, "0..p-1", [rt(3, legp(3)), rt(1, sp(2), bernp(-2, "1/3"))],
     3, min_p=5)
cong("cg-4k1-b13", "5", "\\eq\\l(\\f p3\\r)+\\f49p^2B_{p-2}\\l(\\f13\\r)",
     SUM_4K1, "0..p-1", [rt(1, legp(3)), rt("4/9", sp(2), bernp(-2, "1/3"))],
     3, min_p=5)
cong("cg-103h-b13", "5", "(10k+3)(3H_{3k}+4H_{2k}-6H_k)+12",
     S([C2K(1), C3K(1)], 3, False, den=lf((2, 1)),
       harm=[(rk(pmul(3, pk(10, 3))), H(1, 3, 0)),
             (rk(pmul(4, pk(10, 3))), H(1, 2, 0)),
             (rk(pmul(-6, pk(10, 3))), H(1, 1, 0))],
       const=rk(pk(12))),
     "0..p-1", [rt(12, legp(3)), rt("17/2", sp(2), bernp(-2, "1/3"))],
     3, min_p=5, outer=[mpq(0), mpq(1)])
cong("cg-4k1h-b13", "5", "(4k+1)(3H_{3k}-3H_{2k}-H_k)-\\f{6k}{2k+1}",
     S([C2K(1), C3K(1)], "1/3", False, den=lf((2, 1)),
       harm=[(rk(pmul(3, pk(4, 1))), H(1, 3, 0)),
             (rk(pmul(-3, pk(4, 1))), H(1, 2, 0)),
             (rk(pmul(-1, pk(4, 1))), H(1, 1, 0))],
       const=rk(pk(-6, 0), lf((2, 1)))),
     "0..p-1", [rt("2/3", sp(), bernp(-2, "1/3"))], 2, min_p=5)

SUM_5K1_HK = S([C2K(1), C42(1)], "-1/16", False,
               harm=[(RatK(pk(5, 1), lf((2, 1))), H(1, 1, 0))],
               const=rk(pk(1), lf((8, 0))))
SUM_5K1_H2K = S([C2K(1), C42(1)], "-1/16", False,
                harm=[(RatK(pk(5, 1), lf((2, 1))), H(1, 2, 0))],
                const=rk(pk(-1), lf((12, 0))))
cong("cg-5k1-hk-lo", "5", "\\eq-\\f 32q_p(2)-\\f 54p\\,q_p(2)^2",
     SUM_5K1_HK, "1..(p-1)/2",
     [rt("-3/2", qp(2)), rt("-5/4", sp(), qp(2, 2))], 2, min_p=3)
cong("cg-5k1-hk-hi", "5", "\\eq2p\\,q_p(2)^2\\pmod{p^2}",
     SUM_5K1_HK, "(p-1)/2<k<p", [rt(2, sp(), qp(2, 2))], 2, min_p=3)
cong("cg-5k1-h2k-lo", "5", "\\eq-\\f p3q_p(2)^2\\pmod{p^2}",
     SUM_5K1_H2K, "1..(p-1)/2", [rt("-1/3", sp(), qp(2, 2))], 2, min_p=5)
cong("cg-5k1-h2k-hi", "5", "\\eq-q_p(2)+\\f56p\\,q_p(2)^2",
     SUM_5K1_H2K, "(p-1)/2<k<p",
     [rt(-1, qp(2)), rt("5/6", sp(), qp(2, 2))], 2, min_p=5)

cong("cg-5k1-hk2", "5", "(5k+1)H_k^{(2)}+\\f{4(4k+1)}{(2k+1)^2}",
     S([C2K(1), C42(1)], "-1/16", False, den=lf((2, 1)),
       harm=[(rk(pk(5, 1)), H(2, 1, 0))],
       const=rk(pmul(4, pk(4, 1)), lf((2, 1, 2)))),
     "0..(p-3)/2", [rt("-1/6", sp(), bern(-3))], 2, min_p=3)
cong("cg-5k1-hk3", "5", "(5k+1)H_k^{(3)}-\\f{12(4k+1)}{(2k+1)^3}",
     S([C2K(1), C42(1)], "-1/16", False, den=lf((2, 1)),
       harm=[(rk(pk(5, 1)), H(3, 1, 0))],
       const=rk(pmul(-12, pk(4, 1)), lf((2, 1, 3)))),
     "0..(p-3)/2", [rt(-6, bern(-3))], 1, min_p=3)

SUM_8K3 = S([C42(1), C2K(-2)], "1/9", False, pk(8, -3), lf((1, 0), (4, -1)))
cong("cg-8k3-b13", "5", "\\equiv-\\frac5{36}pB_{p-2}\\left(\\frac13\\right)",
     SUM_8K3, "1..(p-1)/2", [rt("-5/36", sp(), bernp(-2, "1/3"))], 2, min_p=5)
cong("cg-8k3h-b13", "5", "(8k-3)(5H_{2k-1}-4H_{k-1})-6 ... \\frac16B_{p-2}",
     S([C42(1), C2K(-2)], "1/9", False, den=lf((1, 0), (4, -1)),
       harm=[(rk(pmul(5, P83)), H(1, 2, -1)),
             (rk(pmul(-4, P83)), H(1, 1, -1))],
       const=rk(pk(-6))),
     "1..(p-1)/2", [rt("1/6", bernp(-2, "1/3"))], 1, min_p=5)

SUM_4096H3 = S([C2K(3)], "1/4096", False,
               harm=[(rk(P425), H(3, 1, 0))],
               const=rk(pk(-352), lf((2, 1, 2))))
cong("cg-4096h3", "5", "\\eq-32\\l(\\l(\\f{-1}p\\r)B_{p-3}+16E_{p-3}\\r)",
     SUM_4096H3, "0..(p-3)/2",
     [rt(-32, leg(-1), bern(-3)), rt(-512, eul(-3))], 1, min_p=5, exclude=(7,))
SUM_4096H4 = S([C2K(3)], "1/4096", False,
               harm=[(rk(pmul(9, P425)), H(4, 2, 0)),
                     (rk(pmul("-9/16", P425)), H(4, 1, 0))],
               const=rk(pk(25), lf((2, 1, 3))))
cong("cg-4096h4", "5", "\\eq -4\\l(\\f{-1}p\\r)B_{p-3}\\pmod p",
     SUM_4096H4, "0..(p-3)/2", [rt(-4, leg(-1), bern(-3))], 1,
     min_p=3, exclude=(5,))

cong("cg-8k-qp4", "5", "(50k+15)H_k^{(2)}-\\f{4}{k} ... \\pmod{p^4}",
     S([C2K(2), C3K(1)], "1/8", False, den=PolyK.one(),
       harm=[(rk(pk(50, 15)), H(2, 1, 0))],
       const=rk(pk(-4), lf((1, 0)))),
     "1..p-1",
     [rt(-12, qp(2)), rt(6, sp(), qp(2, 2)), rt(-4, sp(2), qp(2, 3)),
      rt(3, sp(3), qp(2, 4))], 4, min_p=3)
cong("cg-64k-qp4", "5", "(55k+15)H_k^{(2)}-\\f{8}{k} ... \\pmod{p^4}",
     S([C2K(2), C3K(1)], "1/64", False,
       harm=[(rk(pk(55, 15)), H(2, 1, 0))],
       const=rk(pk(-8), lf((1, 0)))),
     "1..p-1",
     [rt(-48, qp(2)), rt(24, sp(), qp(2, 2)), rt(-16, sp(2), qp(2, 3)),
      rt(12, sp(3), qp(2, 4))], 4, min_p=3)
cong("cg-81k-qp4", "5", "(350k+80)H_k^{(2)}-\\f{27}{k} ... \\pmod{p^4}",
     S([C2K(2), C42(1)], "1/81", False,
       harm=[(rk(pk(350, 80)), H(2, 1, 0))],
       const=rk(pk(-27), lf((1, 0)))),
     "1..p-1",
     [rt(-108, qp(3)), rt(54, sp(), qp(3, 2)), rt(-36, sp(2), qp(3, 3)),
      rt(27, sp(3), qp(3, 4))], 4, min_p=5)

SUM_360 = S([C3K(1), C63(2)], "1/32768", False, P360, DEN_3K12)
cong("cg-360-half", "5", "\\eq 12p\\l(\\f{-2}p\\r)-18p^2\\l(\\f 2p\\r)",
     SUM_360, "0..(p-1)/2",
     [rt(12, sp(), leg(-2)), rt(-18, sp(2), leg(2))], 3, min_p=3)
cong("cg-360-full", "5", "\\eq \\f{15}2p\\l(\\f{-2}p\\r)-\\f{225}{32}p^3E_{p-3}\\l(\\f14\\r)",
     SUM_360, "0..p-1",
     [rt("15/2", sp(), leg(-2)), rt("-225/32", sp(3), eulp(-3, "1/4"))],
     4, min_p=3)

SUM_28K = S(BIN28, "-1/64", False, P28, lf((6, 1)))
cong("cg-28k-half", "5", "\\eq\\l(\\f{-1}p\\r)\\l(p+\\f7{48}p^4B_{p-3}\\r)",
     SUM_28K, "0..(p-1)/2",
     [rt(1, leg(-1), sp()), rt("7/48", leg(-1), sp(4), bern(-3))], 5, min_p=5)
cong("cg-28k-full", "5", "\\eq p\\l(\\f{-1}p\\r)+\\f{p^3}5E_{p-3}\\pmod{p^4}",
     SUM_28K, "0..p-1",
     [rt(1, sp(), leg(-1)), rt("1/5", sp(3), eul(-3))], 4,
     min_p=5, exclude=(5,),
     notes="stated for odd p != 5, but p = 3 only reaches valuation 3; "
           "read as p > 5")
SUM_28K_HH2 = S(BIN28, "-1/64", False, den=lf((6, 1)),
                harm=[(rk(pmul(10, P28)), H(2, 2, 0)),
                      (rk(pmul(-3, P28)), H(2, 1, 0))],
                const=rk(pk(2)))
cong("cg-28kh2-half", "5", "\\eq\\l(\\f{-1}p\\r)\\l(2+\\f{35}{24}p^3B_{p-3}\\r)",
     SUM_28K_HH2, "0..(p-1)/2",
     [rt(2, leg(-1)), rt("35/24", leg(-1), sp(3), bern(-3))], 4,
     min_p=5, outer=[mpq(0), mpq(1)])
cong("cg-28kh2-full", "5", "\\eq2\\l(\\f{-1}p\\r)+2p^2E_{p-3}\\pmod{p^3}",
     SUM_28K_HH2, "0..p-1",
     [rt(2, leg(-1)), rt(2, sp(2), eul(-3))], 3, min_p=5,
     outer=[mpq(0), mpq(1)])

cong("cg-21k-bp5", "5", "(21k^3+22k^2+8k+1)(64H_{2k}^{(6)}-65H_k^{(6)})",
     S([C2K(7)], "1/256", False,
       harm=[(rk(pmul(64, pk(21, 22, 8, 1))), H(6, 2, 0)),
             (rk(pmul(-65, pk(21, 22, 8, 1))), H(6, 1, 0))],
       const=rk(pk(0))),
     "0..p-1", [rt("1488/5", sp(2), bern(-5))], 3, min_p=5)

# ======================================================== integrality claims


def integ(id, section, anchor, summand, claim_kind, main_lower, main_upper,
          divisor_form, divisor_exp=1, aux_upper=None, aux_factor=None,
          min_p=2, notes=""):
    INTEGRALITY.append(IntegralityClaim(
        id=id, section=section, source_anchor=anchor, summand=summand,
        claim_kind=claim_kind, main_lower=main_lower, main_upper=main_upper,
        divisor_form=divisor_form, divisor_exp=divisor_exp,
        aux_upper=aux_upper, aux_factor=aux_factor,
        prime=PrimeConstraint(min_p), notes=notes))


integ("ig-1681-pn3", "4", "\\f1{(pn)^3}\\sum_{k=n}^{pn-1} ... \\in\\Z_p",
      SUM_1681, "P_ADIC", "n", "pn-1", "pn_pow", 3, min_p=3)
integ("ig-103-pn2", "5", "\\f1{(pn)^2}\\(... -\\l(\\f p3\\r)\\sum ...\\)",
      SUM_103, "P_ADIC", "0", "pn-1", "pn_pow", 2,
      aux_upper="n-1", aux_factor="legendre_p3", min_p=2)
integ("ig-4k1-pn2", "5", "(4k+1)\\bi{2k}k\\bi{3k}k/((2k+1)3^k) ... \\in\\Z_p",
      SUM_4K1, "P_ADIC", "0", "pn-1", "pn_pow", 2,
      aux_upper="n-1", aux_factor="legendre_p3", min_p=5)
SUM_145 = S([C2K(1), C3K(2)], 1, False, pk(145, 104, 18), lf((2, 1)))
integ("ig-145-div", "5", "\\f1{6n(2n-1)\\bi{3n}n}\\sum_{k=0}^{n-1}(145k^2+104k+18)",
      SUM_145, "INTEGER", "0", "n-1", "6n(2n-1)C(3n,n)")
integ("ig-145-pn4", "5", "\\f1{(pn)^4}\\(\\sum_{k=0}^{pn-1} ... -p\\sum_{k=0}^{p-1} ...\\)",
      SUM_145, "P_ADIC", "0", "pn-1", "pn_pow", 4,
      aux_upper="n-1", aux_factor="p", min_p=2,
      notes="the subtracted sum prints with upper limit p-1, under which "
            "already n = 1 fails for every p; upper limit n-1 holds at all "
            "tested (p, n)")

# ============================================================== certificates

from binomseries.certificates import (CertComponent, Certificate,
                                      certificate_to_json, check_certificate)
from binomseries.symbolic import Poly, Quad, RatFunc


def pasc(*desc) -> Poly:
    return Poly(list(reversed([mpq(str(c)) for c in desc])))


def build_certificates() -> list[Certificate]:
    certs = []

    # --- beta-integral chain behind the (9/8)^{k-1} closed form
    base98 = pasc(9, -9, 0, 0, 8)          # 9x^4 - 9x^3 + 8
    inner = pasc(1, -1, 0, 0, 0)           # x^3 (x - 1)
    num98 = (inner * (inner.scale(156) - Poly([2705])) + Poly([1216])) \
        * pasc(3456, 0, 0, 0)              # 3456 x^3 (...)
    integrand98 = RatFunc(num98, base98.pow(3))
    F98 = __import__("binomseries.certificates", fromlist=["ElementaryExpr"]) \
        .ElementaryExpr(
            d=3,
            rational_parts=[
                RatFunc(pasc(432, -108, -81, -512).scale(56), base98.pow(2)),
                RatFunc(pasc(108, 351, 27, 4352), base98),
            ],
            logs=[(Quad.of(26, 3), base98)],
            arctans=[(Quad(mpq(0), mpq(90), 3),
                      RatFunc(Poly([Quad(mpq(0), mpq(-1), 3),
                                    Quad(mpq(0), mpq(1), 3)]), Poly([1])))])
    val98 = cf(mono(1944), mono("640/3", SQ(3), PI()))
    certs.append(Certificate(
        id="cert-98-chain",
        anchor="3456x^3(x^3(x-1)(156x^3(x-1)-2705)+1216)",
        d=3,
        components=[CertComponent("main", integrand98, mpq(64, 9), F98, val98)],
        moment_poly=pasc(12635, -5259, 832), moment_shift=1, moment_start=0,
        subst=(mpq(9, 8), 3, 3, mpq(1)),
        integrand_expected=integrand98,
        series_id="l-12635",
        total_value=val98))

    # --- arctan-crossing chain behind the 8^k/(4k+1) closed form
    base8 = pasc(8, -8, 0, 0, 1)           # 8x^4 - 8x^3 + 1
    f8 = pasc(792, -1584, 792, 0, 29, -29, 0, 0, -5).scale(8)
    integrand8 = RatFunc(f8, base8.pow(3))
    F8 = __import__("binomseries.certificates", fromlist=["ElementaryExpr"]) \
        .ElementaryExpr(
            d=1,
            rational_parts=[RatFunc(
                pasc(96, -192, 640, -680, 76, 6, 74, -5).scale(mpq(-1, 2)),
                base8.pow(2))],
            logs=[],
            arctans=[(Quad.of(mpq(-3, 2), 1),
                      RatFunc(pasc(2, -2, 0), pasc(2, 0, -1)))])
    val8 = cf(mono(-10), mono("-3/2", PI()))
    certs.append(Certificate(
        id="cert-8-arctan",
        anchor="f(x)=8(792x^8-1584x^7+792x^6+29x^4-29x^3-5)",
        d=1,
        components=[CertComponent("main", integrand8, mpq(1), F8, val8)],
        moment_poly=pasc(15, -124, -40), moment_shift=0, moment_start=0,
        moment_expected=RatFunc(pasc(99, -29, -40), Poly([1, -1]).pow(3)),
        subst=(mpq(8), 3, 0, mpq(1)),
        integrand_expected=integrand8,
        series_id="l-8-4k1",
        total_value=val8))

    # --- partial-fraction chain behind the (-8)^k/(4k+1) closed form
    cubic = pasc(1, 1, 2, 4)               # x^3 + x^2 + 2x + 4
    Qpoly = pasc(45, -178, -2713, 12108, 34656, 54960, -16506, -21172, -15312)
    numer16 = inner * inner.scale(5859) + inner.scale(99848) + Poly([21440])
    den16 = (inner - Poly([8])).pow(3)
    integrand_m8 = RatFunc(numer16.scale(-16), den16)
    xm2 = pasc(1, -2)
    pole_piece = (RatFunc(Poly([mpq(-11952, 5)]), xm2.pow(3))
                  + RatFunc(Poly([mpq(-6448, 5)]), xm2.pow(2))
                  + RatFunc(Poly([144]), xm2))
    elementary = __import__("binomseries.certificates",
                            fromlist=["ElementaryExpr"]).ElementaryExpr
    F_pole = elementary(
        d=1,
        rational_parts=[RatFunc(Poly([mpq(5976, 5)]), xm2.pow(2)),
                        RatFunc(Poly([mpq(6448, 5)]), xm2)],
        logs=[(Quad.of(144, 1), pasc(-1, 2))],
        arctans=[])
    val_pole = cf(mono("1258/5"), mono(-144, LG(2)))
    cubic_piece = RatFunc(Qpoly.scale(mpq(-16, 5)), cubic.pow(3))
    F_cubic = elementary(
        d=1,
        rational_parts=[RatFunc(
            pasc(298, 1663, -3190, -4451, -4878, -930).scale(mpq(-16, 5)),
            cubic.pow(2))],
        logs=[(Quad.of(-48, 1), cubic)],
        arctans=[])
    val_cubic = cf(mono("1942/5"), mono(-48, LG(2)))
    certs.append(Certificate(
        id="cert-m8-chain",
        anchor="\\f{747}{5(x-2)^3}+\\f{403}{5(x-2)^2}",
        d=1,
        components=[CertComponent("pole-part", pole_piece, mpq(1), F_pole, val_pole),
                    CertComponent("cubic-part", cubic_piece, mpq(1), F_cubic,
                                  val_cubic)],
        moment_poly=pasc(18675, 7627, 670), moment_shift=0, moment_start=0,
        moment_expected=RatFunc(pasc(11718, 24962, 670), Poly([1, -1]).pow(3)),
        subst=(mpq(-1, 8), 3, 0, mpq(1)),
        integrand_expected=integrand_m8,
        series_id="l-m8-4k1",
        total_value=cf(mono(640), mono(-192, LG(2)))))

    # --- the standalone logarithmic certificate for the cubic integral
    G = elementary(
        d=1,
        rational_parts=[RatFunc(pasc(298, 1663, -3190, -4451, -4878, -930),
                                cubic.pow(2))],
        logs=[(Quad.of(15, 1), cubic)],
        arctans=[])
    certs.append(Certificate(
        id="cert-int-g",
        anchor="15\\log2-\\f{971}8",
        d=1,
        components=[CertComponent(
            "main", RatFunc(Qpoly, cubic.pow(3)), mpq(1), G,
            cf(mono("-971/8"), mono(15, LG(2))))],
        integrand_expected=RatFunc(Qpoly, cubic.pow(3)),
        total_value=cf(mono("-971/8"), mono(15, LG(2)))))
    return certs


# ===================================================================== main


def self_check(fast: bool) -> None:
    from binomseries.evaluate import verify_identity
    from binomseries.congruences import (check_congruence,
                                         check_integer_divisibility,
                                         check_padic_integrality)
    from binomseries.exact import primes_in

    t0 = time.time()
    digits = 18
    for i, (_, entry) in enumerate(SERIES):
        rep = verify_identity(entry, digits)
        if not rep.passed:
            raise SystemExit(f"SELF-CHECK FAILED: series {entry.id}: "
                             f"agreed {rep.digits_agreed} ({rep.error})")
        if fast and i > 10:
            break
    print(f"  series checked ({time.time() - t0:.1f}s)")

    t0 = time.time()
    for claim in CONGRUENCES:
        primes = [p for p in primes_in(claim.prime.min_p, 60)
                  if claim.prime.admits(p)][:2]
        for p in primes:
            res = check_congruence(claim, p)
            if not res.passed:
                raise SystemExit(f"SELF-CHECK FAILED: {claim.id} at p={p}: "
                                 f"achieved {res.achieved} < {res.required}")
    print(f"  congruences checked ({time.time() - t0:.1f}s)")

    t0 = time.time()
    for claim in INTEGRALITY:
        if claim.claim_kind == "INTEGER":
            for n in (1, 2, 3, 5):
                res = check_integer_divisibility(claim, n)
                if not res.passed:
                    raise SystemExit(f"SELF-CHECK FAILED: {claim.id} n={n}")
        else:
            primes = [p for p in primes_in(claim.prime.min_p, 20)
                      if claim.prime.admits(p)][:2]
            for p in primes:
                for n in (1, 2):
                    res = check_padic_integrality(claim, p, n)
                    if not res.passed:
                        raise SystemExit(
                            f"SELF-CHECK FAILED: {claim.id} p={p} n={n}: "
                            f"valuation {res.achieved}")
    print(f"  integrality checked ({time.time() - t0:.1f}s)")


def check_certs(certs) -> None:
    t0 = time.time()
    for cert in certs:
        rep = check_certificate(cert)
        if not rep.passed:
            bad = [k for k, v in rep.stages.items() if not v]
            raise SystemExit(f"SELF-CHECK FAILED: {cert.id}: stages {bad}")
    print(f"  certificates checked ({time.time() - t0:.1f}s)")


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--fast", action="store_true",
                        help="skip most numeric self-checks")
    args = parser.parse_args()

    certs = build_certificates()

    files: dict[str, list] = {}
    manifest_entries = []
    for fname, entry in SERIES:
        files.setdefault(fname, []).append(entry.to_json())
        manifest_entries.append({"id": entry.id, "kind": "series",
                                 "status": entry.status,
                                 "section": entry.section,
                                 "anchor": entry.source_anchor,
                                 "file": fname})
    for claim in CONGRUENCES:
        files.setdefault("congruences.json", []).append(claim.to_json())
        manifest_entries.append({"id": claim.id, "kind": "congruence",
                                 "section": claim.section,
                                 "anchor": claim.source_anchor,
                                 "file": "congruences.json"})
    for claim in INTEGRALITY:
        files.setdefault("integrality.json", []).append(claim.to_json())
        manifest_entries.append({"id": claim.id, "kind": "integrality",
                                 "section": claim.section,
                                 "anchor": claim.source_anchor,
                                 "file": "integrality.json"})

    if not args.fast:
        print("running self-checks ...")
        self_check(False)
        check_certs(certs)

    OUT.mkdir(parents=True, exist_ok=True)
    for fname, docs in files.items():
        (OUT / fname).write_text(json.dumps(docs, indent=1) + "\n")
    (OUT / "certificates.json").write_text(
        json.dumps([certificate_to_json(c) for c in certs], indent=1) + "\n")
    manifest = {
        "version": 1,
        "files": sorted(files),
        "certificate_file": "certificates.json",
        "entries": manifest_entries,
    }
    (OUT / "manifest.json").write_text(json.dumps(manifest, indent=1) + "\n")

    by_status: dict[str, int] = {}
    for _, entry in SERIES:
        by_status[entry.status] = by_status.get(entry.status, 0) + 1
    print(f"wrote {len(manifest_entries)} claims + {len(certs)} certificates")
    print(f"  series: {len(SERIES)} {by_status}")
    print(f"  congruences: {len(CONGRUENCES)}, integrality: {len(INTEGRALITY)}")


if __name__ == "__main__":
    main()
