"""Per-document clarity indicators and version-trio comparison."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .diagnostics import Diagnostic
from .lexicons import LexiconSet
from .rules import RuleConfig, lint
from .textmodel import BlockKind, Document

VERSIONS = ("original", "artext", "lengclaro")


class MissingVersion(ValueError):
    """A trio comparison needs at least two document versions."""


@dataclass(frozen=True)
class DocMetrics:
    sentence_count: int
    mean_sentence_words: float  # over paragraph-block sentences only
    max_sentence_words: int
    paragraph_count: int
    mean_paragraph_words: float
    diagnostics_by_rule: dict[str, int]
    diagnostics_per_1000_words: float

    @property
    def total_diagnostics(self) -> int:
        return sum(self.diagnostics_by_rule.values())


def measure(
    document: Document,
    config: RuleConfig,
    lexicons: LexiconSet,
    diagnostics: list[Diagnostic] | None = None,
) -> DocMetrics:
    """Compute clarity indicators; pure function of its inputs.

    The sentence-length mean uses paragraph sentences only (headings and list
    items would deflate it); the diagnostic density divides by every word
    token in the document.
    """
    if diagnostics is None:
        diagnostics = lint(document, config, lexicons)
    sentences = [s for _, s in document.sentences()]
    paragraph_sentences = [
        s for b in document.blocks if b.kind is BlockKind.PARAGRAPH
        for s in b.sentences
    ]
    paragraphs = [b for b in document.blocks if b.kind is BlockKind.PARAGRAPH]
    total_words = document.word_token_count()
    by_rule = Counter(d.rule_id for d in diagnostics)
    return DocMetrics(
        sentence_count=len(sentences),
        mean_sentence_words=_mean([s.word_count for s in paragraph_sentences]),
        max_sentence_words=max((s.word_count for s in sentences), default=0),
        paragraph_count=len(paragraphs),
        mean_paragraph_words=_mean([b.word_count for b in paragraphs]),
        diagnostics_by_rule=dict(sorted(by_rule.items())),
        diagnostics_per_1000_words=(
            round(len(diagnostics) / total_words * 1000, 2) if total_words else 0.0
        ),
    )


def _mean(values: list[int]) -> float:
    return round(sum(values) / len(values), 2) if values else 0.0


@dataclass(frozen=True)
class TrioReport:
    doc_number: int
    metrics: dict[str, DocMetrics]  # per version present
    missing: tuple[str, ...]
    # per simplified version: rule id -> (original count - simplified count)
    deltas: dict[str, dict[str, int]] = field(default_factory=dict)


def compare(
    documents: dict[str, Document],
    config: RuleConfig,
    lexicons: LexiconSet,
    doc_number: int = 0,
) -> TrioReport:
    """Compare the versions of one document trio.

    Raises MissingVersion when fewer than two versions are present. Deltas
    are computed against the original for each simplified version on disk.
    """
    present = {v: d for v, d in documents.items() if d is not None}
    if len(present) < 2:
        missing = [v for v in VERSIONS if v not in present]
        raise MissingVersion(
            f"document {doc_number}: need at least 2 versions, "
            f"missing {', '.join(missing)}"
        )
    metrics = {v: measure(d, config, lexicons) for v, d in present.items()}
    deltas: dict[str, dict[str, int]] = {}
    original = metrics.get("original")
    if original is not None:
        for version, m in metrics.items():
            if version == "original":
                continue
            rule_ids = sorted(set(original.diagnostics_by_rule) | set(m.diagnostics_by_rule))
            deltas[version] = {
                rule_id: original.diagnostics_by_rule.get(rule_id, 0)
                - m.diagnostics_by_rule.get(rule_id, 0)
                for rule_id in rule_ids
            }
    return TrioReport(
        doc_number=doc_number,
        metrics=metrics,
        missing=tuple(v for v in VERSIONS if v not in present),
        deltas=deltas,
    )
