"""The bundled claim corpus: loading, integrity checking, and filtering.

Corpus files live in ``corpus_data/``: several JSON arrays of claim
objects plus ``manifest.json`` listing every entry id with its source
anchor, status, kind, and file.  ``BINOMSERIES_CORPUS`` overrides the
directory.
"""

from __future__ import annotations

import fnmatch
import json
import os
from functools import lru_cache
from pathlib import Path

from .parser import ParseError, parse_object

__all__ = ["corpus_dir", "corpus_load", "corpus_filter", "corpus_manifest",
           "corpus_by_id", "CorpusIntegrityError", "load_certificates"]

ENV_VAR = "BINOMSERIES_CORPUS"


class CorpusIntegrityError(Exception):
    """The bundled corpus is inconsistent with its manifest."""


def corpus_dir() -> Path:
    override = os.environ.get(ENV_VAR)
    if override:
        return Path(override)
    return Path(__file__).parent / "corpus_data"


@lru_cache(maxsize=4)
def _load_all(root: str):
    root_path = Path(root)
    manifest_path = root_path / "manifest.json"
    if not manifest_path.exists():
        raise CorpusIntegrityError(f"missing manifest {manifest_path}")
    manifest = json.loads(manifest_path.read_text())
    claims: dict[str, object] = {}
    for name in manifest["files"]:
        path = root_path / name
        try:
            docs = json.loads(path.read_text())
        except json.JSONDecodeError as exc:
            raise CorpusIntegrityError(f"{name}: {exc}") from exc
        for doc in docs:
            try:
                claim = parse_object(doc)
            except (ParseError, ValueError) as exc:
                raise CorpusIntegrityError(
                    f"{name}: entry {doc.get('id', '<no id>')!r}: {exc}") from exc
            if claim.id in claims:
                raise CorpusIntegrityError(f"duplicate claim id {claim.id!r}")
            claims[claim.id] = claim

    listed = {e["id"]: e for e in manifest["entries"]}
    if set(listed) != set(claims):
        missing = set(listed) - set(claims)
        extra = set(claims) - set(listed)
        raise CorpusIntegrityError(
            f"manifest mismatch: missing {sorted(missing)}, unlisted {sorted(extra)}")
    for cid, claim in claims.items():
        entry = listed[cid]
        if entry["kind"] != claim.kind:
            raise CorpusIntegrityError(f"{cid}: manifest kind disagrees")
        if entry["anchor"] != claim.source_anchor:
            raise CorpusIntegrityError(f"{cid}: manifest anchor disagrees")
        status = getattr(claim, "status", None)
        if entry.get("status") != status and status is not None:
            raise CorpusIntegrityError(f"{cid}: manifest status disagrees")
    return tuple(claims[e["id"]] for e in manifest["entries"]), manifest


def corpus_load() -> tuple:
    """All bundled claims, in manifest order, fully validated."""
    return _load_all(str(corpus_dir()))[0]


def corpus_manifest() -> dict:
    return _load_all(str(corpus_dir()))[1]


def corpus_by_id(claim_id: str):
    for claim in corpus_load():
        if claim.id == claim_id:
            return claim
    raise KeyError(f"no corpus entry with id {claim_id!r}")


def corpus_filter(status: str | None = None, section: str | None = None,
                  kind: str | None = None, id_glob: str | None = None) -> list:
    """Subset of the corpus; filters combine conjunctively."""
    out = []
    for claim in corpus_load():
        if kind is not None and claim.kind != kind:
            continue
        if status is not None:
            claim_status = getattr(claim, "status", None)
            if claim_status is None or claim_status.lower() != status.lower():
                continue
        if section is not None and claim.section != str(section):
            continue
        if id_glob is not None and not fnmatch.fnmatch(claim.id, id_glob):
            continue
        out.append(claim)
    return out


def load_certificates() -> list[dict]:
    """Raw certificate documents (a distinct corpus document kind)."""
    path = corpus_dir() / "certificates.json"
    return json.loads(path.read_text())
