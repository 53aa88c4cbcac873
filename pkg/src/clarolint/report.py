"""Diagnostic report serialization shared by the CLI and the HTTP service.

The JSON shape is a stable contract::

    {"version": str, "profile": str,
     "diagnostics": [{"rule_id", "category", "severity",
                      "span": {"start", "end"},
                      "source_span": {"start", "end"} | null,
                      "message", "suggestions": [...], "snippet"}]}

Key order is fixed; serialization is deterministic so repeated runs produce
byte-identical reports.
"""

from __future__ import annotations

import json
from typing import Optional

from . import __version__
from .diagnostics import Diagnostic
from .textmodel import Document


def diagnostic_dict(document: Document, diag: Diagnostic, file: Optional[str] = None) -> dict:
    source = document.source_span(diag.span)
    payload = {
        "rule_id": diag.rule_id,
        "category": diag.category.value,
        "severity": diag.severity.value,
        "span": {"start": diag.span.start, "end": diag.span.end},
        "source_span": (
            {"start": source[0], "end": source[1]} if source is not None else None
        ),
        "message": diag.message,
        "suggestions": list(diag.suggestions),
        "snippet": diag.snippet,
    }
    if file is not None:
        payload["file"] = file
    return payload


def report_dict(
    document: Document,
    diagnostics: list[Diagnostic],
    profile: str,
    file: Optional[str] = None,
) -> dict:
    return {
        "version": __version__,
        "profile": profile,
        "diagnostics": [diagnostic_dict(document, d, file) for d in diagnostics],
    }


def merged_report_dict(per_file: list[tuple[str, Document, list[Diagnostic]]], profile: str) -> dict:
    """Single report over several files; each diagnostic carries its file."""
    diagnostics = []
    for name, document, diags in per_file:
        diagnostics.extend(diagnostic_dict(document, d, name) for d in diags)
    return {
        "version": __version__,
        "profile": profile,
        "diagnostics": diagnostics,
    }


def to_json(payload: dict) -> str:
    return json.dumps(payload, ensure_ascii=False, indent=2) + "\n"


def human_lines(
    file: str, document: Document, diagnostics: list[Diagnostic]
) -> list[str]:
    """One line per diagnostic: <file>:<start>-<end> <rule_id> <message>."""
    return [
        f"{file}:{d.span.start}-{d.span.end} {d.rule_id} {d.message}"
        for d in diagnostics
    ]
