"""Rule engine: run the configured catalog over a Document.

Rule ids and categories are a stable public contract: ``a1``-``a7`` discourse,
``b1``-``b9`` morphosyntax, ``c1``-``c10`` lexicon, ``f1``/``f2`` orthography.
Two built-in profiles select and parameterize them:

- ``artext``: the classic baseline — strict per-sentence length limit,
  paragraph-opening connectors, every participle/nominalization reported.
- ``lengclaro``: the revised set — average-based length control with a hard
  cap, expanded passive detection, participles restricted to absolute
  constructions, nominalizations restricted to de-complements, plus direct
  address, parenthetical, superfluous-word, foreign-word, capitals and
  numeral rules.

``lint`` is a pure function of (document, config, lexicons); output is sorted
by (span start, rule id) and identical across runs and thread counts.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field, replace
from functools import cached_property
from typing import Iterable, Optional, Sequence

from . import morphology as morph
from .diagnostics import Category, Diagnostic, Severity, snippet_of
from .lexicons import LexiconSet, LexiconTable, match_phrases
from .textmodel import Block, BlockKind, Document, Sentence, Shape, Span, Token

PROFILES = ("artext", "lengclaro")

ARTEXT_RULES = frozenset({
    "a1", "a2", "a3", "a4", "a5", "a6", "a7",
    "b1", "b2", "b3", "b4", "b5", "b6", "b7",
    "c1", "c2", "c3", "c4", "c5", "c6", "c7", "c8",
})

LENGCLARO_RULES = frozenset({
    "a1", "a2", "a4", "a5", "a7",
    "b1", "b2", "b3", "b4", "b5", "b6", "b7", "b8", "b9",
    "c1", "c2", "c3", "c4", "c5", "c7", "c8", "c9", "c10",
    "f1", "f2",
})

THRESHOLD_FIELDS = (
    "long_paragraph_words",
    "long_sentence_words",
    "avg_sentence_words_target",
    "hard_sentence_cap_words",
    "min_list_items",
    "parenthetical_min_words",
    "negation_min_count",
)


@dataclass(frozen=True)
class RuleConfig:
    """Profile, enabled rule set and thresholds for one lint run."""

    profile: str = "lengclaro"
    enabled: frozenset[str] = LENGCLARO_RULES
    long_paragraph_words: int = 135
    long_sentence_words: int = 25
    avg_sentence_words_target: int = 20
    hard_sentence_cap_words: int = 35
    min_list_items: int = 4
    parenthetical_min_words: int = 5
    negation_min_count: int = 2

    def __post_init__(self) -> None:
        if self.profile not in PROFILES:
            raise ValueError(f"unknown profile {self.profile!r}")
        for name in THRESHOLD_FIELDS:
            if getattr(self, name) < 1:
                raise ValueError(f"threshold {name} must be >= 1")
        if self.hard_sentence_cap_words <= self.avg_sentence_words_target:
            raise ValueError("hard sentence cap must exceed the average target")
        unknown = self.enabled - ALL_RULE_IDS
        if unknown:
            raise ValueError(f"unknown rule ids: {sorted(unknown)}")

    @classmethod
    def for_profile(
        cls,
        profile: str = "lengclaro",
        rules: Optional[Iterable[str]] = None,
        **thresholds: int,
    ) -> "RuleConfig":
        if profile not in PROFILES:
            raise ValueError(f"unknown profile {profile!r}")
        enabled = ARTEXT_RULES if profile == "artext" else LENGCLARO_RULES
        if rules is not None:
            requested = frozenset(rules)
            unknown = requested - ALL_RULE_IDS
            if unknown:
                raise ValueError(f"unknown rule ids: {sorted(unknown)}")
            enabled = requested
        bad = set(thresholds) - set(THRESHOLD_FIELDS)
        if bad:
            raise ValueError(f"unknown thresholds: {sorted(bad)}")
        return cls(profile=profile, enabled=frozenset(enabled), **thresholds)

    def without(self, rule_id: str) -> "RuleConfig":
        return replace(self, enabled=self.enabled - {rule_id})


@dataclass(frozen=True)
class RuleInfo:
    id: str
    category: Category
    description: str
    thresholds: tuple[str, ...] = ()

    @property
    def in_artext(self) -> bool:
        return self.id in ARTEXT_RULES

    @property
    def in_lengclaro(self) -> bool:
        return self.id in LENGCLARO_RULES


RULE_CATALOG: tuple[RuleInfo, ...] = (
    RuleInfo("a1", Category.DISCOURSE, "Párrafos de una sola oración"),
    RuleInfo("a2", Category.DISCOURSE, "Párrafos demasiado largos", ("long_paragraph_words",)),
    RuleInfo("a3", Category.DISCOURSE, "Párrafos sin conector inicial"),
    RuleInfo("a4", Category.DISCOURSE, "Oraciones demasiado largas",
             ("long_sentence_words", "hard_sentence_cap_words")),
    RuleInfo("a5", Category.DISCOURSE, "Longitud media de las oraciones",
             ("avg_sentence_words_target", "long_sentence_words")),
    RuleInfo("a6", Category.DISCOURSE, "Conectores repetidos"),
    RuleInfo("a7", Category.DISCOURSE, "Enumeraciones convertibles en lista", ("min_list_items",)),
    RuleInfo("b1", Category.MORPHOSYNTACTIC, "Construcciones en voz pasiva"),
    RuleInfo("b2", Category.MORPHOSYNTACTIC, "Gerundios"),
    RuleInfo("b3", Category.MORPHOSYNTACTIC, "Participios"),
    RuleInfo("b4", Category.MORPHOSYNTACTIC, "Futuro de subjuntivo (forma arcaica)"),
    RuleInfo("b5", Category.MORPHOSYNTACTIC, "Uso incoherente de la primera persona"),
    RuleInfo("b6", Category.MORPHOSYNTACTIC, "Nominalizaciones"),
    RuleInfo("b7", Category.MORPHOSYNTACTIC, "Acumulación de negaciones", ("negation_min_count",)),
    RuleInfo("b8", Category.MORPHOSYNTACTIC, "Mezcla de tú y usted"),
    RuleInfo("b9", Category.MORPHOSYNTACTIC, "Incisos entre paréntesis", ("parenthetical_min_words",)),
    RuleInfo("c1", Category.LEXICAL, "Indicadores de subjetividad"),
    RuleInfo("c2", Category.LEXICAL, "Siglas sin presentar"),
    RuleInfo("c3", Category.LEXICAL, "Uso no sistemático de siglas"),
    RuleInfo("c4", Category.LEXICAL, "Términos de registro elevado"),
    RuleInfo("c5", Category.LEXICAL, "Expresiones difíciles de comprender"),
    RuleInfo("c6", Category.LEXICAL, "Palabras imprecisas"),
    RuleInfo("c7", Category.LEXICAL, "Expresiones redundantes"),
    RuleInfo("c8", Category.LEXICAL, "Palabras largas con alternativa breve"),
    RuleInfo("c9", Category.LEXICAL, "Palabras superfluas"),
    RuleInfo("c10", Category.LEXICAL, "Extranjerismos"),
    RuleInfo("f1", Category.ORTHOGRAPHY, "Exceso de mayúsculas"),
    RuleInfo("f2", Category.ORTHOGRAPHY, "Cifras escritas con letras"),
)

ALL_RULE_IDS = frozenset(info.id for info in RULE_CATALOG)
_CATEGORY_BY_ID = {info.id: info.category for info in RULE_CATALOG}

# lexical substitution rules: rule id -> lexicon table
_LEXICAL_TABLES = {
    "c1": "subjectivity_indicators",
    "c4": "transparent_terms",
    "c5": "difficult_expressions",
    "c6": "inaccurate_words",
    "c7": "redundant_expressions",
    "c8": "long_words",
    "c9": "superfluous_phrases",
}

_LEXICAL_MESSAGES = {
    "c1": "«{entry}» puede indicar subjetividad; valore omitirlo",
    "c4": "«{entry}» pertenece a un registro elevado",
    "c5": "la expresión «{entry}» dificulta la comprensión",
    "c6": "«{entry}» es una palabra imprecisa",
    "c7": "«{entry}» es una expresión redundante",
    "c8": "«{entry}» tiene una alternativa más breve",
    "c9": "«{entry}» no aporta información; valore eliminarlo",
}

_A6_ALTERNATES = {
    "si": ("en caso de", "en el caso de que", "siempre que"),
}


# ---------------------------------------------------------------------------
# Engine
# ---------------------------------------------------------------------------


@dataclass
class _Run:
    document: Document
    config: RuleConfig
    lexicons: LexiconSet
    out: list[Diagnostic] = field(default_factory=list)

    @property
    def lengclaro(self) -> bool:
        return self.config.profile == "lengclaro"

    def enabled(self, rule_id: str) -> bool:
        return rule_id in self.config.enabled

    def emit(
        self,
        rule_id: str,
        span: Span,
        message: str,
        suggestions: Sequence[str] = (),
        severity: Severity = Severity.WARN,
    ) -> None:
        self.out.append(Diagnostic(
            rule_id=rule_id,
            category=_CATEGORY_BY_ID[rule_id],
            severity=severity,
            span=span,
            message=message,
            suggestions=tuple(suggestions),
            snippet=snippet_of(self.document.text, span),
        ))

    # precomputed exclusion views over the lexicon set
    @cached_property
    def false_participles(self) -> frozenset[str]:
        return self.lexicons.table("false_participles").word_set()

    @cached_property
    def archaic_exclusions(self) -> frozenset[str]:
        return self.lexicons.table("archaic_verb_exclusions").word_set()


def lint(document: Document, config: RuleConfig, lexicons: LexiconSet) -> list[Diagnostic]:
    """All enabled rule findings over the document, canonically ordered."""
    run = _Run(document, config, lexicons)
    if document.text.strip():
        _block_rules(run)
        _sentence_rules(run)
        _document_rules(run)
    return sorted(run.out, key=Diagnostic.sort_key)


def _block_rules(run: _Run) -> None:
    blocks = run.document.blocks
    paragraphs = sum(1 for b in blocks if b.kind is BlockKind.PARAGRAPH)
    for idx, block in enumerate(blocks):
        if run.enabled("a1") and block.kind is BlockKind.PARAGRAPH:
            rule_a1_sentence_paragraph(
                run, block,
                blocks[idx + 1] if idx + 1 < len(blocks) else None,
                paragraphs,
            )
        if run.enabled("a2") and block.kind is BlockKind.PARAGRAPH:
            rule_a2_long_paragraph(run, block)
        if run.enabled("f1"):
            rule_f1_capitals(run, block)
    if run.enabled("a3") or run.enabled("a6"):
        rule_a3_a6_connectors(run)


def _sentence_rules(run: _Run) -> None:
    for block, sentence in run.document.sentences():
        if run.enabled("a7") and block.kind is BlockKind.PARAGRAPH:
            rule_a7_suggest_list(run, sentence)
        if run.enabled("b1"):
            rule_b1_passive(run, sentence)
        if run.enabled("b2"):
            rule_b2_gerund(run, sentence)
        if run.enabled("b3"):
            rule_b3_participle(run, sentence)
        if run.enabled("b4"):
            rule_b4_archaic(run, sentence)
        if run.enabled("b6"):
            rule_b6_nominalization(run, sentence)
        if run.enabled("b7"):
            rule_b7_negations(run, sentence)
        if run.enabled("b9"):
            rule_b9_parenthetical(run, sentence)
        for rule_id, table_name in _LEXICAL_TABLES.items():
            if run.enabled(rule_id):
                rule_lexical_substitutions(run, sentence, rule_id, table_name)
        if run.enabled("c10"):
            rule_c10_foreign(run, sentence)
        if run.enabled("f2"):
            rule_f2_numerals(run, sentence)


def _document_rules(run: _Run) -> None:
    if run.enabled("a4") or run.enabled("a5"):
        rule_a4_a5_long_sentence(run)
    if run.enabled("b5") or run.enabled("b8"):
        rule_b5_b8_person_consistency(run)
    if run.enabled("c2") or run.enabled("c3"):
        rule_c2_c3_acronyms(run)


# ---------------------------------------------------------------------------
# a. Discourse rules
# ---------------------------------------------------------------------------


def rule_a1_sentence_paragraph(
    run: _Run, block: Block, next_block: Optional[Block], paragraph_count: int
) -> None:
    """Single-sentence paragraphs; list intros and non-paragraph blocks exempt.

    The relaxed profile treats a sentence as an acceptable paragraph for
    screen reading: it only points one out (info level) when the document has
    other paragraphs it could be merged with.
    """
    if len(block.sentences) != 1:
        return
    if run.lengclaro and paragraph_count < 2:
        return
    text = run.document.text
    intro_like = (
        text[block.span.start:block.span.end].rstrip().endswith(":")
        and next_block is not None
        and next_block.kind is BlockKind.LIST_ITEM
    )
    if intro_like:
        return
    severity = Severity.INFO if run.lengclaro else Severity.WARN
    run.emit(
        "a1", block.span,
        "párrafo de una sola oración; valore unirlo con ideas relacionadas",
        severity=severity,
    )


def rule_a2_long_paragraph(run: _Run, block: Block) -> None:
    threshold = run.config.long_paragraph_words
    count = block.word_count
    if count > threshold:
        run.emit(
            "a2", block.span,
            f"párrafo demasiado largo ({count} palabras; máximo {threshold})",
        )


def rule_a4_a5_long_sentence(run: _Run) -> None:
    """Per-sentence length cap (a4) plus the document average check (a5).

    The artext profile flags every sentence over the strict limit. The
    lengclaro profile flags only sentences over the hard cap and adds one
    document-level finding when the mean sentence length of paragraph
    sentences (headings and list items excluded) exceeds the target. The
    average mode exists to relax the strict limit, not to tighten it: when
    every sentence already respects the strict per-sentence limit, the
    average is left alone.
    """
    config = run.config
    cap = config.hard_sentence_cap_words if run.lengclaro else config.long_sentence_words
    if run.enabled("a4"):
        for _, sentence in run.document.sentences():
            count = sentence.word_count
            if count > cap:
                run.emit(
                    "a4", sentence.span,
                    f"oración demasiado larga ({count} palabras; máximo {cap})",
                )
    if run.enabled("a5") and run.lengclaro:
        counts = [
            s.word_count
            for b in run.document.blocks if b.kind is BlockKind.PARAGRAPH
            for s in b.sentences
        ]
        if counts:
            mean = sum(counts) / len(counts)
            target = config.avg_sentence_words_target
            over_strict = max(counts) > config.long_sentence_words
            if mean > target and over_strict:
                run.emit(
                    "a5", Span(0, len(run.document.text)),
                    f"la longitud media de las oraciones es {mean:.1f} palabras "
                    f"(objetivo: {target}); acorte las oraciones más largas",
                )


def rule_a3_a6_connectors(run: _Run) -> None:
    """Paragraph-opening connectors (a3) and repeated connectors (a6)."""
    connectors = run.lexicons.table("connectors")
    chain = 0
    for block in run.document.blocks:
        if block.kind is BlockKind.HEADING:
            chain = 0
            continue
        if block.kind is not BlockKind.PARAGRAPH:
            continue
        chain += 1
        words = [t for s in block.sentences for t in s.tokens if t.is_word]
        if not words:
            continue
        if run.enabled("a3") and chain >= 2 and not _opens_with_connector(words, connectors):
            run.emit(
                "a3", words[0].span,
                "el párrafo no comienza con un conector que lo enlace con el anterior",
                severity=Severity.INFO,
            )
        if run.enabled("a6"):
            _check_repeated_connectors(run, block, connectors)


def _opens_with_connector(words: Sequence[Token], connectors: LexiconTable) -> bool:
    lowers = tuple(t.lower for t in words[:4])
    return any(
        lowers[:len(phrase)] == phrase
        for phrase in connectors.entry_words
        if len(phrase) <= len(lowers)
    )


def _check_repeated_connectors(run: _Run, block: Block, connectors: LexiconTable) -> None:
    seen: dict[tuple[str, ...], list[Token]] = {}
    for sentence in block.sentences:
        for opener in _clause_openers(sentence):
            lowers = tuple(t.lower for t in opener)
            for phrase in connectors.entry_words:
                if lowers[:len(phrase)] == phrase:
                    seen.setdefault(phrase, []).append(opener[0])
                    break
    for phrase, tokens in seen.items():
        if len(tokens) < 2:
            continue
        name = " ".join(phrase)
        run.emit(
            "a6", tokens[1].span,
            f"el conector «{name}» abre varias cláusulas en el mismo párrafo",
            suggestions=_A6_ALTERNATES.get(name, ()),
            severity=Severity.INFO,
        )


def _clause_openers(sentence: Sentence) -> list[list[Token]]:
    """First word tokens of the sentence and of each comma/semicolon clause."""
    openers: list[list[Token]] = []
    expect = True
    tokens = list(sentence.tokens)
    for idx, token in enumerate(tokens):
        if token.is_word:
            if expect:
                words = [t for t in tokens[idx:] if t.is_word][:4]
                openers.append(words)
                expect = False
        elif any(c in ",;" for c in token.surface):
            expect = True
    return openers


def rule_a7_suggest_list(run: _Run, sentence: Sentence) -> None:
    """Long sentences carrying a comma/y/o series of list-like items."""
    config = run.config
    cap = config.hard_sentence_cap_words if run.lengclaro else config.long_sentence_words
    if sentence.word_count <= cap:
        return
    if _series_separators(run.document.text, sentence) >= config.min_list_items - 1:
        run.emit(
            "a7", sentence.span,
            "la enumeración sería más clara como lista: añada una frase "
            "introductoria y un elemento por línea, todos con la misma forma",
        )


def _series_separators(text: str, sentence: Sentence) -> int:
    """Commas and coordinating y/o/e/u at parenthesis depth zero."""
    depth = 0
    separators = 0
    depth_at: dict[int, int] = {}
    for offset in range(sentence.span.start, sentence.span.end):
        ch = text[offset]
        depth_at[offset] = depth
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth = max(0, depth - 1)
        elif ch == "," and depth == 0:
            separators += 1
    for token in sentence.tokens:
        if token.is_word and token.lower in ("y", "o", "e", "u"):
            if depth_at.get(token.span.start, 0) == 0:
                separators += 1
    return separators


# ---------------------------------------------------------------------------
# b. Morphosyntactic rules
# ---------------------------------------------------------------------------

_PASSIVE_NAMES = {
    morph.PassiveKind.PERIPHRASTIC: "pasiva perifrástica",
    morph.PassiveKind.PERIPHRASTIC_IN_PERIPHRASIS: "pasiva dentro de perífrasis verbal",
    morph.PassiveKind.REFLEXIVE_WITH_AGENT: "pasiva refleja con agente expreso",
}


def rule_b1_passive(run: _Run, sentence: Sentence) -> None:
    """Passive constructions; the expanded mode also reports periphrasis and
    reflexive-with-agent shapes."""
    expanded = run.lengclaro
    for match in morph.find_passives(sentence, run.false_participles):
        if match.kind is morph.PassiveKind.PERIPHRASTIC:
            pass
        elif expanded and match.kind in (
            morph.PassiveKind.PERIPHRASTIC_IN_PERIPHRASIS,
            morph.PassiveKind.REFLEXIVE_WITH_AGENT,
        ):
            pass
        else:
            continue
        run.emit(
            "b1", match.span,
            f"{_PASSIVE_NAMES[match.kind]}: prefiera la voz activa",
        )


def rule_b2_gerund(run: _Run, sentence: Sentence) -> None:
    """Gerunds; the lengclaro profile exempts periphrasis main verbs."""
    words = sentence.word_tokens
    for idx, token in enumerate(words):
        if not morph.is_gerund(token.lower):
            continue
        if run.lengclaro and idx > 0 and words[idx - 1].lower in morph.GERUND_AUXILIARIES:
            continue
        run.emit(
            "b2", token.span,
            f"gerundio «{token.surface}»: puede crear ambigüedad sobre quién realiza la acción",
        )


def rule_b3_participle(run: _Run, sentence: Sentence) -> None:
    """Participles: every one in artext mode, only sentence-initial absolute
    constructions (optionally after "Una vez") in lengclaro mode."""
    words = sentence.word_tokens
    if not words:
        return
    if not run.lengclaro:
        for token in words:
            if morph.is_participle(token.lower, run.false_participles):
                run.emit(
                    "b3", token.span,
                    f"participio «{token.surface}»: revise si deja claro quién realiza la acción",
                )
        return
    candidate: Optional[int] = None
    if morph.is_participle(words[0].lower, run.false_participles):
        candidate = 0
    elif (
        len(words) >= 3
        and words[0].lower == "una"
        and words[1].lower == "vez"
        and morph.is_participle(words[2].lower, run.false_participles)
    ):
        candidate = 2
    if candidate is None:
        return
    if _conjugated_or_adjectival(words, candidate, run.false_participles):
        return
    token = words[candidate]
    run.emit(
        "b3", token.span,
        f"construcción absoluta de participio «{token.surface}»: "
        "no se sabe quién realiza la acción; indique el agente",
    )


def _conjugated_or_adjectival(
    words: Sequence[Token], idx: int, false_participles: frozenset[str]
) -> bool:
    """Participle belongs to a conjugated verb or agrees with its noun."""
    for back in (1, 2):
        if idx - back >= 0 and words[idx - back].lower in morph.HABER_SER_ESTAR:
            return True
    prev = words[idx - 1].lower if idx > 0 else None
    if prev and prev != "vez":
        noun = morph.noun_agreement_guess(prev)
        part = morph.participle_agreement(words[idx].lower)
        if noun and part and noun == part:
            return True
    return False


def rule_b4_archaic(run: _Run, sentence: Sentence) -> None:
    for token in sentence.word_tokens:
        if morph.is_future_subjunctive(token.lower, run.archaic_exclusions):
            suggestion = morph.archaic_suggestion(token.lower)
            run.emit(
                "b4", token.span,
                f"«{token.surface}» es futuro de subjuntivo, una forma arcaica; "
                "use el imperfecto de subjuntivo",
                suggestions=(suggestion,) if suggestion else (),
            )


def rule_b5_b8_person_consistency(run: _Run) -> None:
    """Minority-marker findings when first persons (b5) or tú/usted (b8) mix."""
    markers: dict[morph.PersonMarker, list[morph.PersonMatch]] = {m: [] for m in morph.PersonMarker}
    for _, sentence in run.document.sentences():
        for match in morph.find_person_markers(sentence):
            markers[match.marker].append(match)

    if run.enabled("b5"):
        _flag_minority(
            run, "b5",
            markers[morph.PersonMarker.FIRST_PLURAL],
            markers[morph.PersonMarker.FIRST_SINGULAR_EXPLICIT],
            names=("primera persona del plural", "primera persona del singular"),
        )
    if run.enabled("b8"):
        _flag_minority(
            run, "b8",
            markers[morph.PersonMarker.TU_FORM],
            markers[morph.PersonMarker.USTED_FORM],
            names=("tú", "usted"),
        )


def _flag_minority(
    run: _Run,
    rule_id: str,
    first: list[morph.PersonMatch],
    second: list[morph.PersonMatch],
    names: tuple[str, str],
) -> None:
    """Both marker classes present: flag the minority (ties flag the second)."""
    if not first or not second:
        return
    if len(first) < len(second):
        minority, majority_name = first, names[1]
    else:
        minority, majority_name = second, names[0]
    for match in minority:
        run.emit(
            rule_id, match.span,
            f"«{match.surface}» rompe la coherencia: el resto del texto usa {majority_name}",
        )


def rule_b6_nominalization(run: _Run, sentence: Sentence) -> None:
    table = run.lexicons.table("nominalization_exclusions")
    excluded_words = table.word_set()
    excluded_phrases = tuple(table.exclusion_words)
    for match in morph.find_nominalizations(sentence, excluded_words, excluded_phrases):
        if run.lengclaro and not match.has_de_complement:
            continue
        run.emit(
            "b6", match.span,
            f"nominalización «{match.surface}»: valore usar el verbo correspondiente",
        )


def rule_b7_negations(run: _Run, sentence: Sentence) -> None:
    negations = run.lexicons.table("negation_markers").word_set()
    hits = [t for t in sentence.word_tokens if t.lower in negations]
    if len(hits) >= run.config.negation_min_count:
        run.emit(
            "b7", sentence.span,
            f"la oración acumula {len(hits)} negaciones; "
            "formúlela en positivo si es posible",
        )


def rule_b9_parenthetical(run: _Run, sentence: Sentence) -> None:
    """Parenthetical remarks of the configured size; acronym intros exempt."""
    text = run.document.text
    min_words = run.config.parenthetical_min_words
    for span, balanced in _paren_spans(text, sentence.span):
        inside = [t for t in sentence.tokens if t.is_word
                  and span.start < t.span.start and t.span.end <= span.end]
        if _is_acronym_intro(run, sentence, span, inside):
            continue
        if len(inside) < min_words:
            continue
        severity = Severity.WARN if balanced else Severity.INFO
        run.emit(
            "b9", span,
            "inciso entre paréntesis: desarrolle la idea en una oración aparte "
            "o llévela al final de la oración",
            severity=severity,
        )


def _paren_spans(text: str, within: Span) -> list[tuple[Span, bool]]:
    spans: list[tuple[Span, bool]] = []
    stack: list[int] = []
    for offset in range(within.start, within.end):
        ch = text[offset]
        if ch == "(":
            stack.append(offset)
        elif ch == ")" and stack:
            start = stack.pop()
            if not stack:  # only top-level parentheticals are reported
                spans.append((Span(start, offset + 1), True))
    while stack:
        start = stack.pop()
        if not stack:
            spans.append((Span(start, within.end), False))
    return spans


def _is_acronym_intro(
    run: _Run, sentence: Sentence, span: Span, inside: list[Token]
) -> bool:
    if len(inside) != 1 or not morph.is_acronym_shaped(inside[0].surface):
        return False
    preceding = [t for t in sentence.word_tokens if t.span.end <= span.start][-6:]
    for k in range(2, len(preceding) + 1):
        window = [t.surface for t in preceding[-k:]]
        if morph.initials_match(window, inside[0].surface):
            return True
    return False


# ---------------------------------------------------------------------------
# c. Lexical rules
# ---------------------------------------------------------------------------


def rule_lexical_substitutions(
    run: _Run, sentence: Sentence, rule_id: str, table_name: str
) -> None:
    table = run.lexicons.table(table_name)
    template = _LEXICAL_MESSAGES[rule_id]
    for match in match_phrases(sentence, table):
        run.emit(
            rule_id, match.span,
            template.format(entry=match.entry),
            suggestions=(match.replacement,) if match.replacement else (),
        )


@dataclass(frozen=True)
class _AcronymUse:
    surface: str
    span: Span
    position: int  # global word index
    clarified: bool


def rule_c2_c3_acronyms(run: _Run) -> None:
    """Acronym introduction (c2) and systematic-use (c3) checks.

    An acronym counts as introduced when the initials of the 2-6 word tokens
    before it spell it out, when a parenthesized expansion follows it, or
    when markup carries its meaning. After an introduction, later full-form
    occurrences are reported, as are introductions that arrive only after
    the acronym has already been used.
    """
    doc_words: list[Token] = []
    block_of: list[int] = []
    for b_idx, block in enumerate(run.document.blocks):
        for sentence in block.sentences:
            for token in sentence.tokens:
                if token.is_word:
                    doc_words.append(token)
                    block_of.append(b_idx)

    exclusions = run.lexicons.table("acronym_exclusions").word_set()
    uses: list[_AcronymUse] = []
    cursor = 0
    for block in run.document.blocks:
        for match in morph.find_acronyms(block, exclusions):
            uses.append(_AcronymUse(
                surface=match.surface,
                span=match.span,
                position=cursor + match.word_index,
                clarified=match.clarified_by_markup,
            ))
        cursor += block.word_count

    lowers = [t.lower for t in doc_words]
    intros: dict[str, dict] = {}
    first_use: dict[str, _AcronymUse] = {}
    for use in uses:
        first_use.setdefault(use.surface, use)
        intro = _expansion_at(run, doc_words, block_of, lowers, use)
        if intro and use.surface not in intros:
            intros[use.surface] = intro

    if run.enabled("c2"):
        substitutions = run.lexicons.table("acronym_substitutions")
        for surface, use in sorted(first_use.items()):
            intro = intros.get(surface)
            introduced_here = intro is not None and intro["at"] == use.position
            if introduced_here and intro["kind"] != "markup":
                continue
            if use.clarified:
                run.emit(
                    "c2", use.span,
                    f"la sigla «{surface}» solo se aclara al pasar el cursor; "
                    "algunos lectores pueden pasar por alto la explicación",
                    severity=Severity.INFO,
                )
                continue
            replacement = substitutions.get(surface)
            run.emit(
                "c2", use.span,
                f"la sigla «{surface}» aparece sin su forma completa; "
                "introdúzcala la primera vez que se use",
                suggestions=(replacement,) if replacement else (),
            )

    if run.enabled("c3"):
        for surface, intro in sorted(intros.items()):
            use = first_use[surface]
            if intro["at"] > use.position:
                run.emit(
                    "c3", intro["span"],
                    f"la sigla «{surface}» se usa antes de esta presentación; "
                    "presente la sigla en su primera aparición",
                )
            _flag_full_forms(run, doc_words, block_of, lowers, surface, intro)


def _expansion_at(
    run: _Run,
    doc_words: list[Token],
    block_of: list[int],
    lowers: list[str],
    use: _AcronymUse,
) -> Optional[dict]:
    pos = use.position
    # preceding window, same block (covers "Full Form (ACR)" too)
    for k in range(min(6, pos), 1, -1):
        window = doc_words[pos - k:pos]
        if block_of[pos - k] != block_of[pos]:
            continue
        surfaces = [t.surface for t in window]
        if morph.initials_match(surfaces, use.surface):
            return {
                "kind": "preceding", "at": pos,
                "full": tuple(lowers[pos - k:pos]),
                "window": (pos - k, pos - 1),
                "span": Span(window[0].span.start, use.span.end),
            }
    # parenthesized expansion after the acronym
    text = run.document.text
    for k in range(2, 7):
        if pos + k >= len(doc_words) or block_of[pos + k] != block_of[pos]:
            break
        between = text[use.span.end:doc_words[pos + 1].span.start]
        if "(" not in between:
            break
        window = doc_words[pos + 1:pos + 1 + k]
        after = text[window[-1].span.end:window[-1].span.end + 2]
        surfaces = [t.surface for t in window]
        if morph.initials_match(surfaces, use.surface) and ")" in after:
            return {
                "kind": "following", "at": pos,
                "full": tuple(lowers[pos + 1:pos + 1 + k]),
                "window": (pos + 1, pos + k),
                "span": Span(use.span.start, window[-1].span.end),
            }
    if use.clarified:
        title = run.document.blocks[block_of[pos]].html_attrs.get(use.surface, "")
        full = tuple(w.casefold() for w in re.findall(r"[^\W_]+", title))
        return {"kind": "markup", "at": pos, "full": full, "window": None, "span": use.span}
    return None


def _flag_full_forms(
    run: _Run,
    doc_words: list[Token],
    block_of: list[int],
    lowers: list[str],
    surface: str,
    intro: dict,
) -> None:
    full = intro["full"]
    k = len(full)
    if k < 2:
        return
    for start in range(0, len(lowers) - k + 1):
        if tuple(lowers[start:start + k]) != full:
            continue
        if block_of[start] != block_of[start + k - 1]:
            continue
        if intro["window"] and not (
            start + k - 1 < intro["window"][0] or start > intro["window"][1]
        ):
            continue
        if start < intro["at"]:
            continue
        run.emit(
            "c3",
            Span(doc_words[start].span.start, doc_words[start + k - 1].span.end),
            f"una vez presentada la sigla «{surface}», úsela en lugar de la forma completa",
            suggestions=(surface,),
        )


def rule_c10_foreign(run: _Run, sentence: Sentence) -> None:
    """Foreign (English) words; all-caps and isolated proper-noun-looking
    tokens are skipped, but runs of capitalized foreign words are reported."""
    table = run.lexicons.table("foreign_words")
    words = sentence.word_tokens
    foreign = [t.lower in table for t in words]
    for idx, token in enumerate(words):
        if not foreign[idx]:
            continue
        if token.shape is Shape.ALL_CAPS:
            continue
        if token.shape is Shape.CAPITALIZED and idx > 0:
            neighbors = (
                (idx > 0 and foreign[idx - 1] and words[idx - 1].shape is Shape.CAPITALIZED)
                or (idx + 1 < len(words) and foreign[idx + 1]
                    and words[idx + 1].shape is Shape.CAPITALIZED)
            )
            if not neighbors:
                continue
        replacement = table.get(token.lower)
        run.emit(
            "c10", token.span,
            f"extranjerismo «{token.surface}»: use un término en español o explíquelo",
            suggestions=(replacement,) if replacement else (),
        )


# ---------------------------------------------------------------------------
# f. Orthography rules
# ---------------------------------------------------------------------------


def rule_f1_capitals(run: _Run, block: Block) -> None:
    exclusions = run.lexicons.table("acronym_exclusions").word_set()
    if block.kind is BlockKind.HEADING:
        lettered = [
            t for s in block.sentences for t in s.tokens
            if t.is_word and any(c.isalpha() for c in t.surface)
        ]
        if lettered and all(t.shape is Shape.ALL_CAPS for t in lettered):
            run.emit(
                "f1", block.span,
                "título escrito por completo en mayúsculas; "
                "use mayúscula solo donde las normas la exigen",
            )
            return
    for sentence in block.sentences:
        for token in sentence.word_tokens:
            if token.shape is not Shape.ALL_CAPS or len(token.surface) < 4:
                continue
            if morph.is_acronym_shaped(token.surface) or token.lower in exclusions:
                continue
            run.emit(
                "f1", token.span,
                f"«{token.surface}» está todo en mayúsculas sin ser una sigla",
            )


def rule_f2_numerals(run: _Run, sentence: Sentence) -> None:
    """Spelled-out cardinals (11-9999) and digit strings over six digits."""
    table = run.lexicons.table("number_words")
    for match in match_phrases(sentence, table):
        value = int(match.replacement or 0)
        if 11 <= value <= 9999:
            run.emit(
                "f2", match.span,
                f"escriba la cifra con números: «{match.entry}» → {value}",
                suggestions=(str(value),),
            )
    for token in sentence.word_tokens:
        if not token.surface.isdigit() or len(token.surface) <= 6:
            continue
        value = int(token.surface)
        if value % 1_000_000 == 0:
            amount = value // 1_000_000
            suggestion = f"{amount} {'millón' if amount == 1 else 'millones'}"
        elif value % 1_000 == 0:
            suggestion = f"{value // 1_000} mil"
        else:
            suggestion = None
        run.emit(
            "f2", token.span,
            f"la cifra {token.surface} es difícil de leer; "
            "indique el número seguido de «mil» o «millones»",
            suggestions=(suggestion,) if suggestion else (),
        )
