"""Stable report serialization: versioned JSON and aligned plain text."""

from __future__ import annotations

import json

SCHEMA = "binomseries-report/1"


def report_json(command: str, config: dict, results: list, passed: bool) -> str:
    doc = {
        "schema": SCHEMA,
        "command": command,
        "config": config,
        "results": [r.to_json() for r in results],
        "summary": {
            "total": len(results),
            "failed": sum(1 for r in results if not _passed(r)),
            "pass": passed,
        },
    }
    return json.dumps(doc, indent=1)


def _passed(r) -> bool:
    return bool(getattr(r, "passed", getattr(r, "pass", False)))


_BADGES = {
    "THEOREM": "VERIFIED",
    "LEMMA": "VERIFIED",
    "CITED": "VERIFIED",
    "CONJECTURE": "EVIDENCE",
    "LEMMA_GRADE_CONJECTURE": "EVIDENCE",
}


def badge(status: str) -> str:
    """Report vocabulary keeping the theorem/conjecture split visible."""
    return _BADGES.get(status, "CHECKED")


def verification_text(results) -> str:
    lines = [f"{'id':28} {'badge':9} {'ok':4} {'digits':>6} {'terms':>7} "
             f"{'tail':9} {'seconds':>8}  value"]
    for r in results:
        tail = r.tail.mode if r.tail else "-"
        ok = "pass" if r.passed else "FAIL"
        lines.append(
            f"{r.id:28} {badge(r.status):9} {ok:4} {r.digits_agreed:>6} "
            f"{r.terms_used:>7} {tail:9} {r.seconds:>8.2f}  {r.value_str}"
            + (f"  [{r.error}]" if r.error else ""))
    return "\n".join(lines)


def congruence_text(results) -> str:
    lines = [f"{'id':22} {'p':>4} {'required':>9} {'achieved':>9} {'ok':4} "
             f"{'seconds':>8}"]
    for r in results:
        achieved = "inf" if r.achieved == float("inf") else str(int(r.achieved))
        ok = "pass" if r.passed else "FAIL"
        note = f"  (skipped: {r.skipped})" if getattr(r, "skipped", "") else ""
        lines.append(f"{r.claim_id:22} {r.p:>4} {r.required:>9} {achieved:>9} "
                     f"{ok:4} {r.seconds:>8.3f}{note}")
    return "\n".join(lines)


def integrality_text(results) -> str:
    lines = [f"{'id':16} {'p':>4} {'n':>4} {'valuation':>10} {'ok':4}"]
    for r in results:
        val = "-" if r.achieved is None else (
            "inf" if r.achieved == float("inf") else str(int(r.achieved)))
        lines.append(f"{r.claim_id:16} {str(r.p or '-'):>4} {r.n:>4} "
                     f"{val:>10} {'pass' if r.passed else 'FAIL':4}")
    return "\n".join(lines)


def generic_text(results) -> str:
    lines = []
    for r in results:
        doc = r.to_json()
        ok = "pass" if doc.get("pass") else "FAIL"
        rest = {k: v for k, v in doc.items() if k not in ("pass",)}
        lines.append(f"{ok}  {json.dumps(rest)}")
    return "\n".join(lines)
