"""Bundled corpus integrity."""

import json

import pytest
from gmpy2 import mpq

from binomseries.corpus import (CorpusIntegrityError, corpus_by_id, corpus_dir,
                                corpus_filter, corpus_load, corpus_manifest)
from binomseries.parser import parse_document, serialize


def test_manifest_count_matches():
    claims = corpus_load()
    manifest = corpus_manifest()
    assert len(claims) == len(manifest["entries"])
    assert {c.id for c in claims} == {e["id"] for e in manifest["entries"]}


def test_theorem_inventory():
    thms = corpus_filter(status="THEOREM")
    assert len(thms) == 9
    assert {t.id for t in thms} == {"t-98", "t-8", "t-m2", "t-m8", "t-m24",
                                    "t-m192", "t-16-k1", "t-16-3k12",
                                    "t-16-odd"}


def test_filters():
    cong = corpus_filter(kind="congruence")
    assert any(c.id == "cg-1681-php" for c in cong)
    assert len(corpus_filter(kind="series", id_glob="t-*")) == 9
    s4 = corpus_filter(section="4", kind="series")
    assert all(c.section == "4" for c in s4) and len(s4) > 30
    assert corpus_filter(status="nosuch") == []


def test_every_entry_evaluates_first_terms():
    for claim in corpus_filter(kind="series"):
        for k in range(claim.start_index, claim.start_index + 50):
            claim.term(k)  # must not raise


def test_serialization_round_trip_whole_corpus():
    for claim in corpus_load():
        assert parse_document(serialize(claim)).to_json() == claim.to_json()


def test_empirical_ratio_matches_limit():
    # hypergeometric part ratio within 1% of the limit at k = 2000
    for claim in corpus_filter(kind="series"):
        core = claim.summand.stripped()
        k = 2000
        ratio = core.core_ratio(k)
        limit = claim.rate
        assert abs(abs(ratio) - abs(limit)) <= abs(limit) / 100, claim.id


def test_corrupted_corpus_detected(tmp_path, monkeypatch):
    src = corpus_dir()
    for name in src.iterdir():
        (tmp_path / name.name).write_text(name.read_text())
    docs = json.loads((tmp_path / "series_theorems.json").read_text())
    docs[0]["rate"] = "1/2"  # disagrees with the summand
    (tmp_path / "series_theorems.json").write_text(json.dumps(docs))
    monkeypatch.setenv("BINOMSERIES_CORPUS", str(tmp_path))
    with pytest.raises(CorpusIntegrityError):
        corpus_load()


def test_anchor_and_status_in_manifest():
    manifest = corpus_manifest()
    by_id = {e["id"]: e for e in manifest["entries"]}
    t8 = corpus_by_id("t-8")
    assert by_id["t-8"]["anchor"] == t8.source_anchor
    assert by_id["t-8"]["status"] == "THEOREM"


def test_known_values_spotchecks():
    assert corpus_by_id("t-16-3k12").rhs.rational_part() == 1
    assert corpus_by_id("t-16-k1").rhs.rational_part() == 17
    assert corpus_by_id("t-16-odd").rhs.rational_part() == mpq(-1, 3)
    assert corpus_by_id("l-16-0a").rhs.is_zero()
    assert corpus_by_id("j5-256b-h4").rhs.is_zero()
