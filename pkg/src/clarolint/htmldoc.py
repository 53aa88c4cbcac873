"""HTML ingestion: extract a Document from an HTML byte stream.

Built on the tolerant stdlib ``html.parser`` so malformed markup degrades
gracefully. ``p`` becomes a paragraph, ``h1``-``h6`` a heading, ``li`` a list
item; ``script``/``style`` content and boilerplate containers (``nav``,
``footer``, ``aside``) are dropped. ``acronym``/``abbr`` titles are recorded
on the enclosing block keyed by the element's text, so the acronym rules can
honour hover-text clarifications.

Headings and list items are rendered into the extracted text with the same
``#``/``- `` markers that ``parse_plain`` reads back, which makes a plain
re-parse of ``document.text`` structurally identical to the HTML parse. A
``source_map`` translates every extracted character to the byte offset of its
origin in the source stream, so diagnostics can be traced back to the raw
HTML.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from html.entities import name2codepoint
from html.parser import HTMLParser
from typing import Optional

from .textmodel import (
    DEFAULT_ABBREVIATIONS,
    Block,
    BlockKind,
    Document,
    MalformedEncoding,
    SourceMap,
    Span,
    _block_from_lines,
    heading_marker,
    LIST_ITEM_MARKER,
)

_BLOCK_TAGS = {"p", "li", "h1", "h2", "h3", "h4", "h5", "h6"}
_SKIP_TAGS = {"script", "style", "head", "nav", "footer", "aside"}
_TITLED_TAGS = {"acronym", "abbr"}


@dataclass
class _RawBlock:
    kind: BlockKind
    level: int = 0
    chars: list[str] = field(default_factory=list)
    # source char range (start, end) backing each extracted char
    offsets: list[tuple[int, int]] = field(default_factory=list)
    attrs: dict[str, str] = field(default_factory=dict)
    src_start: int = 0

    def append(self, piece: str, offset: int) -> None:
        for i, ch in enumerate(piece):
            self.chars.append(ch)
            self.offsets.append((offset + i, offset + i + 1))

    def append_decoded(self, ch: str, offset: int, width: int) -> None:
        self.chars.append(ch)
        self.offsets.append((offset, offset + width))

    def has_content(self) -> bool:
        return any(not c.isspace() for c in self.chars)


class _Extractor(HTMLParser):
    def __init__(self) -> None:
        super().__init__(convert_charrefs=False)
        self.line_starts: list[int] = [0]
        self.blocks: list[_RawBlock] = []
        self.current: Optional[_RawBlock] = None
        self.skip_depth = 0
        self.capture: Optional[tuple[str, int]] = None  # (title, chars index)

    # -- offset bookkeeping -------------------------------------------------

    def prime(self, source: str) -> None:
        pos = 0
        for line in source.splitlines(keepends=True):
            pos += len(line)
            self.line_starts.append(pos)

    def _abs(self) -> int:
        line, col = self.getpos()
        return self.line_starts[line - 1] + col

    # -- block lifecycle ----------------------------------------------------

    def _open(self, kind: BlockKind, level: int = 0) -> None:
        self._flush()
        self.current = _RawBlock(kind=kind, level=level, src_start=self._abs())

    def _ensure(self) -> _RawBlock:
        if self.current is None:
            self.current = _RawBlock(kind=BlockKind.PARAGRAPH, src_start=self._abs())
        return self.current

    def _flush(self) -> None:
        if self.current is not None and self.current.has_content():
            self.blocks.append(self.current)
        self.current = None
        self.capture = None

    # -- parser callbacks ---------------------------------------------------

    def handle_starttag(self, tag, attrs):
        if tag in _SKIP_TAGS:
            self.skip_depth += 1
            return
        if self.skip_depth:
            return
        if tag in _BLOCK_TAGS:
            if tag.startswith("h"):
                self._open(BlockKind.HEADING, level=int(tag[1]))
            elif tag == "li":
                self._open(BlockKind.LIST_ITEM)
            else:
                self._open(BlockKind.PARAGRAPH)
        elif tag in _TITLED_TAGS:
            title = next((v for k, v in attrs if k == "title" and v), None)
            if title is not None:
                block = self._ensure()
                self.capture = (title, len(block.chars))
        elif tag == "br":
            if self.current is not None:
                self.current.append_decoded(" ", self._abs(), 0)

    def handle_endtag(self, tag):
        if tag in _SKIP_TAGS:
            self.skip_depth = max(0, self.skip_depth - 1)
            return
        if self.skip_depth:
            return
        if tag in _BLOCK_TAGS or tag in ("body", "html"):
            self._flush()
        elif tag in _TITLED_TAGS and self.capture is not None and self.current is not None:
            title, start = self.capture
            surface = "".join(self.current.chars[start:]).strip()
            if surface:
                self.current.attrs[surface] = title
            self.capture = None

    def handle_data(self, data):
        if self.skip_depth or not data:
            return
        if self.current is None and not data.strip():
            return
        self._ensure().append(data, self._abs())

    def handle_entityref(self, name):
        if self.skip_depth:
            return
        codepoint = name2codepoint.get(name)
        ch = chr(codepoint) if codepoint else "?"
        self._ensure().append_decoded(ch, self._abs(), len(name) + 2)

    def handle_charref(self, name):
        if self.skip_depth:
            return
        try:
            codepoint = int(name[1:], 16) if name.startswith(("x", "X")) else int(name)
            ch = chr(codepoint)
        except (ValueError, OverflowError):
            ch = "?"
        self._ensure().append_decoded(ch, self._abs(), len(name) + 3)

    def close(self):
        super().close()
        self._flush()


def _normalize(block: _RawBlock) -> tuple[str, list[tuple[int, int]]]:
    """Collapse whitespace runs to single spaces and trim, keeping offsets."""
    chars: list[str] = []
    offsets: list[tuple[int, int]] = []
    in_space = True  # leading whitespace dropped
    for ch, off in zip(block.chars, block.offsets):
        if ch.isspace():
            if not in_space:
                chars.append(" ")
                offsets.append(off)
                in_space = True
        else:
            chars.append(ch)
            offsets.append(off)
            in_space = False
    while chars and chars[-1] == " ":
        chars.pop()
        offsets.pop()
    return "".join(chars), offsets


def parse_html(
    data: bytes | str,
    abbreviations: frozenset[str] = DEFAULT_ABBREVIATIONS,
) -> Document:
    """Parse an HTML byte stream (UTF-8) into a Document.

    Raises MalformedEncoding when the bytes do not decode.
    """
    if isinstance(data, bytes):
        try:
            source = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise MalformedEncoding(f"input is not valid UTF-8: {exc}") from exc
    else:
        source = data

    extractor = _Extractor()
    extractor.prime(source)
    extractor.feed(source)
    extractor.close()

    # Cumulative byte offset of each source character.
    byte_at: list[int] = [0]
    total = 0
    for ch in source:
        total += len(ch.encode("utf-8"))
        byte_at.append(total)

    text_chars: list[str] = []
    charmap: list[tuple[int, int]] = []  # source char range per extracted char
    blocks: list[Block] = []

    def push(piece: str, offset: int) -> None:
        for ch in piece:
            text_chars.append(ch)
            charmap.append((offset, offset))

    raw_blocks = [b for b in extractor.blocks if b.has_content()]
    for raw in raw_blocks:
        content, offsets = _normalize(raw)
        if blocks:
            push("\n\n", offsets[0][0])
        if raw.kind is BlockKind.HEADING:
            marker = heading_marker(raw.level)
        elif raw.kind is BlockKind.LIST_ITEM:
            marker = LIST_ITEM_MARKER
        else:
            marker = ""
        block_start = len(text_chars)
        push(marker, offsets[0][0])
        content_start = len(text_chars)
        text_chars.extend(content)
        charmap.extend(offsets)
        span = Span(block_start, len(text_chars))
        blocks.append((raw, span, content_start))  # finalized below

    text = "".join(text_chars)
    final_blocks = []
    for raw, span, content_start in blocks:
        final_blocks.append(_block_from_lines(
            raw.kind, text, span, content_start,
            level=raw.level, html_attrs=dict(raw.attrs),
            abbreviations=abbreviations,
        ))

    source_map = SourceMap(
        starts=tuple(byte_at[start] for start, _ in charmap),
        ends=tuple(byte_at[end] for _, end in charmap),
        total_bytes=byte_at[len(source)],
    )
    return Document(
        text=text,
        blocks=tuple(final_blocks),
        source_format="html",
        source_map=source_map,
    )
