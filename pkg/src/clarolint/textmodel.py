"""Structured text model: blocks, sentences and tokens with exact spans.

Every downstream diagnostic is anchored to a ``Span`` of character offsets
(Unicode scalar values, 0-based, end-exclusive) into ``Document.text``, so the
parsing layer is obsessive about offsets:

- token surfaces always equal the text slice at their span;
- sentence spans within a block are ordered and non-overlapping;
- block spans cover every non-whitespace character of the text exactly once.

Plain-text documents are parsed from a light line-oriented convention: blank
lines separate blocks, ``#``/``##``/... prefixes mark headings, and ``-``,
``*``, ``•``, ``1.``, ``1)`` or ``a)`` prefixes mark list items. HTML
extraction (see ``htmldoc``) renders the same markers into the extracted
text, which keeps plain-text re-parsing of an extracted document equivalent
to the original HTML parse.
"""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Optional


class MalformedEncoding(ValueError):
    """Raised when an input byte stream is not valid UTF-8."""


@dataclass(frozen=True)
class Span:
    """Half-open [start, end) character range into a document text."""

    start: int
    end: int

    def __post_init__(self) -> None:
        if not (0 <= self.start <= self.end):
            raise ValueError(f"invalid span ({self.start}, {self.end})")

    def slice(self, text: str) -> str:
        return text[self.start:self.end]

    def shift(self, delta: int) -> "Span":
        return Span(self.start + delta, self.end + delta)


class Shape(str, Enum):
    LOWERCASE = "lowercase"
    CAPITALIZED = "capitalized"
    ALL_CAPS = "all_caps"
    MIXED = "mixed"
    NON_ALPHA = "non_alpha"


@dataclass(frozen=True)
class Token:
    surface: str
    lower: str
    span: Span
    is_word: bool
    shape: Shape


@dataclass(frozen=True)
class Sentence:
    tokens: tuple[Token, ...]
    span: Span

    @property
    def word_tokens(self) -> tuple[Token, ...]:
        return tuple(t for t in self.tokens if t.is_word)

    @property
    def word_count(self) -> int:
        return sum(1 for t in self.tokens if t.is_word)


class BlockKind(str, Enum):
    PARAGRAPH = "paragraph"
    HEADING = "heading"
    LIST_ITEM = "list_item"
    LIST_INTRO = "list_intro"


@dataclass(frozen=True)
class Block:
    kind: BlockKind
    sentences: tuple[Sentence, ...]
    span: Span
    level: int = 0  # heading level 1-6, 0 otherwise
    html_attrs: dict[str, str] = field(default_factory=dict)

    @property
    def word_count(self) -> int:
        return sum(s.word_count for s in self.sentences)


@dataclass(frozen=True)
class SourceMap:
    """Byte offsets into the source stream backing each extracted char."""

    starts: tuple[int, ...]
    ends: tuple[int, ...]
    total_bytes: int

    def span(self, span: "Span") -> tuple[int, int]:
        if span.end <= span.start:
            at = self.starts[span.start] if span.start < len(self.starts) else self.total_bytes
            return at, at
        start = self.starts[span.start]
        end = self.ends[span.end - 1]
        return start, max(start, end)


@dataclass(frozen=True)
class Document:
    text: str
    blocks: tuple[Block, ...]
    source_format: str = "plain"  # "plain" | "html"
    source_map: Optional[SourceMap] = None

    def sentences(self) -> Iterable[tuple[Block, Sentence]]:
        for block in self.blocks:
            for sentence in block.sentences:
                yield block, sentence

    def word_token_count(self) -> int:
        return sum(b.word_count for b in self.blocks)

    def source_span(self, span: Span) -> Optional[tuple[int, int]]:
        if self.source_map is None:
            return None
        return self.source_map.span(span)


# ---------------------------------------------------------------------------
# Tokenization
# ---------------------------------------------------------------------------

# Letters/digits plus intra-word hyphen and apostrophes; underscore excluded.
_WORD_RE = re.compile(r"[^\W_]+(?:[-'’][^\W_]+)*")


def _shape_of(surface: str) -> Shape:
    letters = [c for c in surface if c.isalpha()]
    if not letters:
        return Shape.NON_ALPHA
    if all(c.isupper() for c in letters):
        return Shape.ALL_CAPS
    if all(c.islower() for c in letters):
        return Shape.LOWERCASE
    if surface[0].isupper() and all(c.islower() for c in letters[1:]):
        return Shape.CAPITALIZED
    return Shape.MIXED


def _make_token(surface: str, start: int, is_word: bool) -> Token:
    return Token(
        surface=surface,
        lower=surface.casefold(),
        span=Span(start, start + len(surface)),
        is_word=is_word,
        shape=_shape_of(surface) if is_word else Shape.NON_ALPHA,
    )


def tokenize(text: str, base: int = 0) -> tuple[Token, ...]:
    """Split a sentence into word and punctuation tokens with exact spans.

    Word tokens are maximal runs of letters/digits joined by intra-word
    hyphens or apostrophes; everything else that is not whitespace becomes a
    punctuation token, one per contiguous run.
    """
    tokens: list[Token] = []

    def emit_gap(gap: str, gap_start: int) -> None:
        for m in re.finditer(r"\S+", gap):
            tokens.append(_make_token(m.group(), base + gap_start + m.start(), False))

    pos = 0
    for m in _WORD_RE.finditer(text):
        if m.start() > pos:
            emit_gap(text[pos:m.start()], pos)
        word = m.group()
        is_word = any(c.isalnum() for c in word)
        tokens.append(_make_token(word, base + m.start(), is_word))
        pos = m.end()
    if pos < len(text):
        emit_gap(text[pos:], pos)
    return tuple(tokens)


# ---------------------------------------------------------------------------
# Sentence segmentation
# ---------------------------------------------------------------------------

_TERMINATORS = ".!?…"
_CLOSERS = ")]»”\"'"

# Seed of ordinal/abbreviation words whose trailing period never ends a
# sentence; extensible through the abbreviations lexicon table.
DEFAULT_ABBREVIATIONS = frozenset({
    "art", "arts", "núm", "núms", "pág", "págs", "sr", "sra", "sres",
    "sras", "dña", "dr", "dra", "aprox", "tel", "avda", "ej", "etc",
    "admón", "cap",
})


def _word_before(text: str, pos: int) -> str:
    """The letter/digit run immediately preceding ``pos``, lowercased."""
    start = pos
    while start > 0 and (text[start - 1].isalnum() or text[start - 1] in "'’"):
        start -= 1
    return text[start:pos].casefold()


def segment_sentences(
    text: str,
    abbreviations: frozenset[str] = DEFAULT_ABBREVIATIONS,
) -> list[Span]:
    """Sentence boundary spans (relative to ``text``) for one block.

    A sentence ends at ``.``, ``!``, ``?`` or ``…`` followed by whitespace
    (closing quotes/brackets may intervene), and always at the end of the
    block: a block boundary terminates a sentence even without punctuation,
    so headings never merge into the following paragraph. Periods after known
    abbreviations, after a single initial, or between digits do not split.
    """
    spans: list[Span] = []
    n = len(text)
    start = 0
    i = 0
    while i < n:
        ch = text[i]
        if ch not in _TERMINATORS:
            i += 1
            continue
        if ch == ".":
            before = _word_before(text, i)
            prev = text[i - 1] if i > 0 else ""
            nxt = text[i + 1] if i + 1 < n else ""
            if before in abbreviations or (len(before) == 1 and before.isalpha()):
                i += 1
                continue
            if prev.isdigit() and nxt.isdigit():
                i += 1
                continue
        end = i + 1
        while end < n and text[end] in _TERMINATORS + _CLOSERS:
            end += 1
        if end < n and not text[end].isspace():
            i = end
            continue
        spans.append(Span(start, end))
        start = end
        i = end
    tail = text[start:]
    if tail.strip():
        spans.append(Span(start, n))
    return [_trim(text, s) for s in spans if text[s.start:s.end].strip()]


def _trim(text: str, span: Span) -> Span:
    s, e = span.start, span.end
    while s < e and text[s].isspace():
        s += 1
    while e > s and text[e - 1].isspace():
        e -= 1
    return Span(s, e)


def build_sentences(
    doc_text: str,
    content_span: Span,
    abbreviations: frozenset[str] = DEFAULT_ABBREVIATIONS,
) -> tuple[Sentence, ...]:
    """Segment and tokenize the content slice, spans in document coordinates."""
    content = content_span.slice(doc_text)
    sentences = []
    for rel in segment_sentences(content, abbreviations):
        span = rel.shift(content_span.start)
        tokens = tokenize(span.slice(doc_text), base=span.start)
        sentences.append(Sentence(tokens=tokens, span=span))
    return tuple(sentences)


# ---------------------------------------------------------------------------
# Plain-text parsing
# ---------------------------------------------------------------------------

_LIST_MARKER_RE = re.compile(r"^([-*•]|\d{1,3}[.)]|[A-Za-zÁÉÍÓÚáéíóú]\))\s+")
_HEADING_MARKER_RE = re.compile(r"^(#{1,6})\s+")


def heading_marker(level: int) -> str:
    return "#" * level + " "


LIST_ITEM_MARKER = "- "


def _block_from_lines(
    kind: BlockKind,
    text: str,
    span: Span,
    content_start: int,
    level: int = 0,
    html_attrs: Optional[dict[str, str]] = None,
    abbreviations: frozenset[str] = DEFAULT_ABBREVIATIONS,
) -> Block:
    sentences = build_sentences(text, Span(content_start, span.end), abbreviations)
    return Block(
        kind=kind,
        sentences=sentences,
        span=span,
        level=level,
        html_attrs=html_attrs or {},
    )


def parse_plain(
    text: str,
    abbreviations: frozenset[str] = DEFAULT_ABBREVIATIONS,
) -> Document:
    """Parse plain text into a Document.

    Blocks split on blank lines; ``#`` prefixes mark headings and list-marker
    prefixes (``-``, ``*``, ``•``, ``1.``, ``a)``) mark one list item per
    line; any other run of non-empty lines is a paragraph. Markers are part
    of the block span but excluded from its sentences.
    """
    blocks: list[Block] = []
    para_start: Optional[int] = None
    para_end = 0

    def close_paragraph() -> None:
        nonlocal para_start
        if para_start is None:
            return
        span = _trim(text, Span(para_start, para_end))
        if span.start < span.end:
            blocks.append(_block_from_lines(
                BlockKind.PARAGRAPH, text, span, span.start,
                abbreviations=abbreviations,
            ))
        para_start = None

    offset = 0
    for line in text.splitlines(keepends=True):
        raw = line.rstrip("\n\r")
        stripped = raw.strip()
        line_start = offset + (len(raw) - len(raw.lstrip()))
        line_end = line_start + len(stripped)
        offset += len(line)
        if not stripped:
            close_paragraph()
            continue
        heading = _HEADING_MARKER_RE.match(stripped)
        marker = _LIST_MARKER_RE.match(stripped)
        if heading:
            close_paragraph()
            blocks.append(_block_from_lines(
                BlockKind.HEADING, text, Span(line_start, line_end),
                line_start + heading.end(), level=len(heading.group(1)),
                abbreviations=abbreviations,
            ))
        elif marker:
            close_paragraph()
            blocks.append(_block_from_lines(
                BlockKind.LIST_ITEM, text, Span(line_start, line_end),
                line_start + marker.end(), abbreviations=abbreviations,
            ))
        else:
            if para_start is None:
                para_start = line_start
            para_end = line_end
    close_paragraph()
    return Document(text=text, blocks=tuple(blocks), source_format="plain")


# ---------------------------------------------------------------------------
# Small shared helpers
# ---------------------------------------------------------------------------

_ACCENTED = "áéíóúÁÉÍÓÚ"


def strip_accents(text: str) -> str:
    """Remove combining accents (ñ/ü survive: only acute accents matter here)."""
    return "".join(
        "aeiouAEIOU"[_ACCENTED.index(c)] if c in _ACCENTED else c for c in text
    )


def has_accent(text: str) -> bool:
    return any(c in _ACCENTED for c in text)


def normalized(text: str) -> str:
    return unicodedata.normalize("NFC", text)
