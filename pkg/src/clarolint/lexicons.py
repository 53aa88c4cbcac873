"""Immutable word/phrase tables and the matcher the lexical rules share.

A ``LexiconSet`` is loaded once (embedded seeds merged with optional override
files) and then only read, so it is safe to share across threads. Matching is
leftmost-longest over word tokens, case-insensitive, word-boundary safe
("anversos" never matches the entry "anverso"), and systematic: every
occurrence in a sentence is reported. A match covered by one of the table's
context-exclusion phrases is suppressed ("hecho" stays quiet inside "pareja
de hecho").

Override file format (UTF-8, ``#`` comments)::

    [table_name]
    phrase<TAB>replacement
    bare phrase
    !context exclusion phrase

Sections name one of the tables in ``LexiconSet.TABLE_NAMES``; ``!`` lines
append context exclusions.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Optional, Sequence

from .seeds import SEED_TABLES
from .textmodel import Sentence, Span


class LexiconParseError(ValueError):
    """Malformed override file; message carries file and line number."""


class UnknownTable(KeyError):
    """A rule asked for a lexicon table that does not exist."""


_WORD_SPLIT_RE = re.compile(r"[^\W_]+(?:[-'’][^\W_]+)*")


def _phrase_words(phrase: str) -> tuple[str, ...]:
    """Tokenize a lexicon key the same way sentence text is tokenized."""
    return tuple(m.group().casefold() for m in _WORD_SPLIT_RE.finditer(phrase))


@dataclass(frozen=True)
class PhraseMatch:
    span: Span
    entry: str
    replacement: Optional[str]
    first_word: int  # index into the sentence's word-token list
    last_word: int


@dataclass(frozen=True)
class LexiconTable:
    name: str
    entries: dict[str, Optional[str]]
    exclusions: tuple[str, ...]
    # phrase-word tuples precomputed for matching
    entry_words: dict[tuple[str, ...], tuple[str, Optional[str]]]
    exclusion_words: tuple[tuple[str, ...], ...]
    max_len: int

    @staticmethod
    def build(
        name: str,
        entries: dict[str, Optional[str]],
        exclusions: Iterable[str] = (),
    ) -> "LexiconTable":
        entry_words = {}
        for phrase, repl in entries.items():
            words = _phrase_words(phrase)
            if words:
                entry_words[words] = (phrase, repl)
        exclusion_words = tuple(
            w for w in (_phrase_words(p) for p in exclusions) if w
        )
        lengths = [len(w) for w in entry_words] + [len(w) for w in exclusion_words]
        return LexiconTable(
            name=name,
            entries=dict(entries),
            exclusions=tuple(exclusions),
            entry_words=entry_words,
            exclusion_words=exclusion_words,
            max_len=max(lengths, default=0),
        )

    def merged(
        self,
        entries: dict[str, Optional[str]],
        exclusions: Iterable[str],
    ) -> "LexiconTable":
        combined = dict(self.entries)
        combined.update(entries)
        return LexiconTable.build(
            self.name, combined, tuple(self.exclusions) + tuple(exclusions)
        )

    def __contains__(self, word: str) -> bool:
        return (word.casefold(),) in self.entry_words

    def get(self, word: str) -> Optional[str]:
        found = self.entry_words.get((word.casefold(),))
        return found[1] if found else None

    def word_set(self) -> frozenset[str]:
        """Single-word entries, for set-style membership tables."""
        return frozenset(w[0] for w in self.entry_words if len(w) == 1)


@dataclass(frozen=True)
class LexiconSet:
    tables: dict[str, LexiconTable]

    TABLE_NAMES = tuple(SEED_TABLES)

    def table(self, name: str) -> LexiconTable:
        try:
            return self.tables[name]
        except KeyError:
            raise UnknownTable(name) from None

    @property
    def abbreviations(self) -> frozenset[str]:
        return self.table("abbreviations").word_set()


def _merge(
    base: dict[str, LexiconTable],
    name: str,
    entries: dict[str, Optional[str]],
    exclusions: Iterable[str],
) -> None:
    if name not in base:
        raise UnknownTable(name)
    base[name] = base[name].merged(entries, exclusions)


def _parse_override(path: Path) -> Iterable[tuple[str, dict, list]]:
    """Yield (table, entries, exclusions) per section of an override file."""
    section: Optional[str] = None
    entries: dict[str, Optional[str]] = {}
    exclusions: list[str] = []
    try:
        lines = path.read_text(encoding="utf-8").splitlines()
    except UnicodeDecodeError as exc:
        raise LexiconParseError(f"{path}: not valid UTF-8: {exc}") from exc
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("[") and line.endswith("]"):
            if section is not None:
                yield section, entries, exclusions
            section = line[1:-1].strip()
            if section not in SEED_TABLES:
                raise LexiconParseError(f"{path}:{lineno}: unknown table {section!r}")
            entries, exclusions = {}, []
            continue
        if section is None:
            raise LexiconParseError(
                f"{path}:{lineno}: entry before any [table] header"
            )
        if line.startswith("!"):
            phrase = line[1:].strip()
            if not phrase:
                raise LexiconParseError(f"{path}:{lineno}: empty exclusion")
            exclusions.append(phrase.casefold())
            continue
        parts = raw.split("\t")
        phrase = parts[0].strip().casefold()
        if not phrase:
            raise LexiconParseError(f"{path}:{lineno}: empty phrase")
        if len(parts) > 2:
            raise LexiconParseError(f"{path}:{lineno}: too many fields")
        replacement = parts[1].strip() if len(parts) == 2 and parts[1].strip() else None
        entries[phrase] = replacement
    if section is not None:
        yield section, entries, exclusions


def load(overrides: Sequence[str | Path] = ()) -> LexiconSet:
    """Build the lexicon set: embedded seeds, then override files in order."""
    tables = {
        name: LexiconTable.build(name, dict(seed["entries"]), seed["exclusions"])
        for name, seed in SEED_TABLES.items()
    }
    for item in overrides:
        path = Path(item)
        for name, entries, exclusions in _parse_override(path):
            _merge(tables, name, entries, exclusions)
    return LexiconSet(tables=tables)


# ---------------------------------------------------------------------------
# Matching
# ---------------------------------------------------------------------------


def _adjacency(sentence: Sentence) -> tuple[list, list[bool]]:
    """Word tokens plus, for each gap, whether no punctuation sits in it."""
    words = []
    adjacent: list[bool] = []
    pending_punct = False
    for token in sentence.tokens:
        if token.is_word:
            if words:
                adjacent.append(not pending_punct)
            words.append(token)
            pending_punct = False
        else:
            pending_punct = True
    return words, adjacent


def _runs_adjacent(adjacent: list[bool], i: int, k: int) -> bool:
    return all(adjacent[j] for j in range(i, i + k - 1))


def _scan(words, adjacent: list[bool], table: LexiconTable) -> list[PhraseMatch]:
    lowers = [t.lower for t in words]
    matches: list[PhraseMatch] = []
    i = 0
    n = len(lowers)
    while i < n:
        hit = None
        for k in range(min(table.max_len, n - i), 0, -1):
            candidate = tuple(lowers[i:i + k])
            found = table.entry_words.get(candidate)
            if found and _runs_adjacent(adjacent, i, k):
                hit = (k, found)
                break
        if hit:
            k, (phrase, repl) = hit
            span = Span(words[i].span.start, words[i + k - 1].span.end)
            matches.append(PhraseMatch(span, phrase, repl, i, i + k - 1))
            i += k
        else:
            i += 1
    return matches


def _exclusion_ranges(
    words, adjacent: list[bool], table: LexiconTable
) -> list[tuple[int, int]]:
    lowers = [t.lower for t in words]
    ranges = []
    for exc in table.exclusion_words:
        k = len(exc)
        for i in range(0, len(lowers) - k + 1):
            if tuple(lowers[i:i + k]) == exc and _runs_adjacent(adjacent, i, k):
                ranges.append((i, i + k - 1))
    return ranges


def match_phrases(sentence: Sentence, table: LexiconTable) -> list[PhraseMatch]:
    """Leftmost-longest, exclusion-aware matches of a table over a sentence.

    Multiword entries require consecutive word tokens (intervening
    punctuation breaks the phrase); every non-suppressed occurrence is
    returned.
    """
    words, adjacent = _adjacency(sentence)
    if not words or not table.entry_words:
        return []
    matches = _scan(words, adjacent, table)
    if not matches or not table.exclusion_words:
        return matches
    excluded = _exclusion_ranges(words, adjacent, table)
    return [
        m for m in matches
        if not any(lo <= m.first_word and m.last_word <= hi for lo, hi in excluded)
    ]
