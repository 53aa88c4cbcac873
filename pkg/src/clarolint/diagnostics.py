"""Diagnostic records emitted by the rule engine."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .textmodel import Span


class Severity(str, Enum):
    WARN = "warn"
    INFO = "info"


class Category(str, Enum):
    DISCOURSE = "discourse"
    MORPHOSYNTACTIC = "morphosyntactic"
    LEXICAL = "lexical"
    ORTHOGRAPHY = "orthography"


_SNIPPET_MAX = 160


@dataclass(frozen=True)
class Diagnostic:
    """One rule finding, anchored to a span of the document text."""

    rule_id: str
    category: Category
    severity: Severity
    span: Span
    message: str
    suggestions: tuple[str, ...] = ()
    snippet: str = ""

    def sort_key(self) -> tuple:
        return (self.span.start, self.rule_id, self.span.end, self.message)


def snippet_of(text: str, span: Span) -> str:
    excerpt = text[span.start:span.end]
    if len(excerpt) > _SNIPPET_MAX:
        return excerpt[: _SNIPPET_MAX - 3] + "..."
    return excerpt
