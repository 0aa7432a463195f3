"""Parsing and serialization of corpus documents (JSON, one claim per object)."""

from __future__ import annotations

import json

from .model import (CongruenceClaim, IntegralityClaim, SeriesIdentity,
                    ValidationError)

__all__ = ["ParseError", "parse_document", "parse_object", "serialize"]

_KINDS = {
    "series": SeriesIdentity,
    "congruence": CongruenceClaim,
    "integrality": IntegralityClaim,
}


class ParseError(ValueError):
    """Syntax or schema error in a corpus document, with location when known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)


def parse_object(doc: dict):
    """Build a validated claim from an already-decoded JSON object."""
    kind = doc.get("kind")
    cls = _KINDS.get(kind)
    if cls is None:
        raise ParseError(f"unknown document kind {kind!r}")
    try:
        return cls.from_json(doc)
    except ValidationError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed {kind} document "
                         f"{doc.get('id', '<no id>')!r}: {exc}") from exc


def parse_document(text: str):
    """Parse one claim from JSON text; syntax errors carry line/column."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from exc
    if not isinstance(doc, dict):
        raise ParseError("top-level JSON value must be an object")
    return parse_object(doc)


def serialize(claim) -> str:
    """Canonical JSON serialization; parse(serialize(x)) == x."""
    return json.dumps(claim.to_json(), indent=1, sort_keys=False)
