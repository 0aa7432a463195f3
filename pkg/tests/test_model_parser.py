"""Data model validation and the document parser."""

import json

import pytest
from gmpy2 import mpq

from binomseries.closedforms import ClosedForm, ConstFactor, ConstantMonomial
from binomseries.corpus import corpus_by_id
from binomseries.model import (BinomialFactor, HarmonicSpec, PolyK, RatK,
                               SeriesIdentity, SummandSpec, ValidationError,
                               resolve_range)
from binomseries.parser import ParseError, parse_document, serialize


def simple_entry(**overrides):
    fields = dict(
        id="test-entry", status="LEMMA", section="2", source_anchor="x",
        start_index=1,
        summand=SummandSpec(
            binomials=(BinomialFactor(4, 0, 1, 0, -1),),
            base=mpq(8),
            poly_num=PolyK.from_coeffs([mpq(1), mpq(-4), mpq(5)]),
            poly_den=PolyK([((mpq(0), mpq(1)), 1), ((mpq(-1), mpq(3)), 1),
                            ((mpq(-2), mpq(3)), 1)]),
        ),
        rhs=ClosedForm([ConstantMonomial(mpq(3, 2), (ConstFactor("PI", None, 1),))]),
        rate=mpq(27, 32),
    )
    fields.update(overrides)
    return SeriesIdentity(**fields)


def test_term_values():
    entry = corpus_by_id("t-8")
    # brute-force oracle: (5-4+1)*8 / (1*2*1*C(4,1))
    assert entry.term(1) == mpq((5 - 4 + 1) * 8, 1 * 2 * 1 * 4) == 2
    gosper = corpus_by_id("c-gosper")
    assert gosper.term(0) == -3
    with pytest.raises(ValueError):
        entry.term(0)


def test_rate_validation():
    with pytest.raises(ValidationError):
        simple_entry(rate=mpq(1, 2))  # disagrees with the computed limit
    with pytest.raises(ValidationError):
        simple_entry(summand=SummandSpec(base=mpq(2)), rate=mpq(2))


def test_denominator_root_rejected():
    # a crafted entry whose denominator vanishes at an admissible k
    with pytest.raises(ValidationError):
        SummandSpec(
            base=mpq(1, 2),
            poly_den=PolyK([((mpq(-1), mpq(1)), 1)]),  # k - 1
        ).validate(0)
    # (3k-1) has no integer roots: fine even from k = 0
    SummandSpec(base=mpq(1, 2),
                poly_den=PolyK([((mpq(-1), mpq(3)), 1)])).validate(0)


def test_binomial_factor_validation():
    with pytest.raises(ValidationError):
        # bottom exceeds top for all k: zero binomial in a denominator
        SummandSpec(binomials=(BinomialFactor(2, 0, 3, 0, -1),),
                    base=mpq(1, 2)).validate(1)
    with pytest.raises(ValidationError):
        BinomialFactor(4, 0, 1, 0, 0)


def test_harmonic_spec_validation():
    with pytest.raises(ValidationError):
        HarmonicSpec(0, 1, 0)
    with pytest.raises(ValidationError):
        SummandSpec(base=mpq(1, 2),
                    harmonic_terms=((RatK.one(), HarmonicSpec(1, 1, -2)),),
                    ).validate(1)


def test_parse_serialize_round_trip():
    entry = simple_entry()
    text = serialize(entry)
    again = parse_document(text)
    assert again.to_json() == entry.to_json()
    assert parse_document(serialize(again)).to_json() == entry.to_json()


def test_parse_errors_carry_position():
    with pytest.raises(ParseError) as err:
        parse_document("{ not json }")
    assert err.value.line == 1 and err.value.column is not None
    with pytest.raises(ParseError):
        parse_document(json.dumps({"kind": "mystery"}))
    with pytest.raises(ParseError):
        parse_document(json.dumps({"kind": "series", "id": "x"}))


def test_ratio_limit_paper_rates():
    assert corpus_by_id("t-8").rate == mpq(27, 32)
    assert corpus_by_id("t-98").rate == mpq(243, 2048)
    assert corpus_by_id("c-r4096").rate == mpq(1, 64)
    assert corpus_by_id("j4-m32").rate == mpq(-27, 512)
    assert corpus_by_id("j5-28k").rate == mpq(-1, 27)
    assert corpus_by_id("j5-2p15").rate == mpq(27, 32)
    assert corpus_by_id("j5-3k-a").rate == mpq(1, 81)
    assert corpus_by_id("j5-9k-a").rate == mpq(1, 9)


def test_range_semantics():
    assert list(resolve_range("1..(p-1)/2", 3)) == [1]
    assert list(resolve_range("(p-1)/2<k<p", 7)) == [4, 5, 6]
    assert list(resolve_range("0..(p-3)/2", 5)) == [0, 1]
    assert list(resolve_range("1..p-1", 5)) == [1, 2, 3, 4]
    with pytest.raises(ValidationError):
        resolve_range("2..p", 5)


def test_summand_eval_matches_hand_values():
    entry = corpus_by_id("t-16-odd")
    # k = 0: (3) * 1 / ((-1)(-1)(-3) * 1) = -1
    assert entry.term(0) == -1
    tele = corpus_by_id("l-16-tele0")
    assert tele.term(0) == -1
