"""Discover and load corpora of original/simplified HTML document trios.

A corpus directory holds files named ``<doc_number>_<version>.html`` where
version is one of ``original``, ``artext`` or ``lengclaro`` (case-sensitive,
no leading zeros). Everything else with an ``.html`` extension is reported as
a naming violation; incomplete trios are reported per document number.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from .htmldoc import parse_html
from .textmodel import Document

VERSIONS = ("original", "artext", "lengclaro")

_NAME_RE = re.compile(r"^([1-9][0-9]*)_(original|artext|lengclaro)\.html$")


@dataclass(frozen=True)
class DatasetEntry:
    doc_number: int
    version: str
    path: Path


@dataclass(frozen=True)
class ScanReport:
    entries: tuple[DatasetEntry, ...]
    violations: tuple[tuple[Path, str], ...]
    # doc_number -> versions missing from its trio
    incomplete: dict[int, tuple[str, ...]]

    def trio_numbers(self) -> list[int]:
        return sorted({e.doc_number for e in self.entries})


def scan(directory: str | Path) -> ScanReport:
    """Inventory a corpus directory; order-independent and deterministic."""
    root = Path(directory)
    if not root.is_dir():
        raise IOError(f"not a readable directory: {root}")
    entries: list[DatasetEntry] = []
    violations: list[tuple[Path, str]] = []
    for path in sorted(root.iterdir()):
        if not path.is_file() or path.suffix.lower() != ".html":
            continue
        match = _NAME_RE.match(path.name)
        if not match:
            violations.append((
                path,
                "el nombre no sigue la convención <número>_<original|artext|lengclaro>.html",
            ))
            continue
        entries.append(DatasetEntry(int(match.group(1)), match.group(2), path))
    by_doc: dict[int, set[str]] = {}
    for entry in entries:
        by_doc.setdefault(entry.doc_number, set()).add(entry.version)
    incomplete = {
        number: tuple(v for v in VERSIONS if v not in versions)
        for number, versions in sorted(by_doc.items())
        if len(versions) < len(VERSIONS)
    }
    return ScanReport(
        entries=tuple(sorted(entries, key=lambda e: (e.doc_number, e.version))),
        violations=tuple(violations),
        incomplete=incomplete,
    )


def load_trio(
    entries: list[DatasetEntry],
) -> dict[str, Optional[Document]]:
    """Parse one document's versions; parse errors carry the file path."""
    if not entries:
        raise ValueError("no entries given")
    out: dict[str, Optional[Document]] = {v: None for v in VERSIONS}
    for entry in entries:
        try:
            out[entry.version] = parse_html(entry.path.read_bytes())
        except Exception as exc:
            raise type(exc)(f"{entry.path}: {exc}") from exc
    return out
