"""Suffix- and lexicon-based Spanish morphology used by the rules.

Everything here is a stateless predicate over immutable tokens: verb-form
classification (gerund, participle, future subjunctive), passive-construction
search, nominalization and acronym detection, and person markers. There is no
statistical tagging; detectors rely on suffixes, small closed form tables and
exclusion lists, which keeps behaviour auditable and configurable.

Exclusion lists always win over suffix evidence: a surface listed as a false
participle (or archaic-verb lookalike, etc.) is never reported, whatever its
ending.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

from .textmodel import Block, Sentence, Shape, Span, Token, strip_accents, has_accent


class VerbForm(str, Enum):
    GERUND = "gerund"
    PARTICIPLE = "participle"
    FUTURE_SUBJUNCTIVE = "future_subjunctive"
    FINITE_1P_PLURAL = "finite_1p_plural"
    FINITE_EXPLICIT_1P_SINGULAR = "finite_explicit_1p_singular"
    INFINITIVE = "infinitive"
    OTHER = "other"


@dataclass(frozen=True)
class Agreement:
    gender: str  # "masc" | "fem"
    number: str  # "sing" | "plur"


@dataclass(frozen=True)
class VerbFormTag:
    kind: VerbForm
    agreement: Optional[Agreement] = None


# --- closed form tables ----------------------------------------------------

# longest first so "adjuntarlos" strips "los", not "os"
ENCLITICS = tuple(sorted(
    ("selo", "sela", "selos", "selas", "se", "me", "te", "le", "les",
     "nos", "os", "lo", "la", "los", "las"),
    key=len, reverse=True,
))

PARTICIPLE_SUFFIXES = ("ado", "ada", "ados", "adas", "ido", "ida", "idos", "idas")

IRREGULAR_PARTICIPLES = {
    "hecho", "hecha", "hechos", "hechas",
    "dicho", "dicha", "dichos", "dichas",
    "escrito", "escrita", "escritos", "escritas",
    "puesto", "puesta", "puestos", "puestas",
    "visto", "vista", "vistos", "vistas",
    "abierto", "abierta", "abiertos", "abiertas",
    "cubierto", "cubierta", "cubiertos", "cubiertas",
    "vuelto", "vuelta", "vueltos", "vueltas",
    "resuelto", "resuelta", "resueltos", "resueltas",
    "roto", "rota", "rotos", "rotas",
    "impreso", "impresa", "impresos", "impresas",
    "inscrito", "inscrita", "inscritos", "inscritas",
}

FUTURE_SUBJUNCTIVE_SUFFIXES = (
    "áremos", "iéremos", "areis", "iereis",
    "ares", "ieres", "aren", "ieren", "are", "iere",
)

IRREGULAR_FUTURE_SUBJUNCTIVE = {
    "fuere": "fuese", "fueres": "fueses", "fueren": "fuesen",
    "trajere": "trajese", "trajeren": "trajesen",
    "dijere": "dijese", "dijeren": "dijesen",
}

# suffix -> imperfect-subjunctive replacement used for suggestions
_ARCHAIC_TRANSFORMS = (
    ("áremos", "ásemos"), ("iéremos", "iésemos"),
    ("areis", "aseis"), ("iereis", "ieseis"),
    ("ares", "ases"), ("ieres", "ieses"),
    ("aren", "asen"), ("ieren", "iesen"),
    ("are", "ase"), ("iere", "iese"),
)

SER_FINITE = frozenset({
    "es", "son", "era", "eran", "fue", "fueron", "será", "serán",
    "sería", "serían", "sea", "sean", "fuera", "fueran", "fuese", "fuesen",
    "soy", "eres", "somos", "seré", "seremos",
})

HABER_FORMS = frozenset({
    "ha", "han", "he", "hemos", "había", "habían", "habrá", "habrán",
    "habría", "habrían", "haya", "hayan", "hubiera", "hubieran",
    "hubiese", "hubiesen", "hubo", "hubieron",
})

# finite auxiliaries that open a verbal periphrasis over "ser" + participle
MODAL_FINITE = frozenset({
    "debe", "deben", "deberá", "deberán", "debería", "deberían",
    "deba", "deban", "puede", "pueden", "podrá", "podrán", "podría",
    "podrían", "pueda", "puedan", "suele", "suelen", "va", "van",
    "iba", "iban", "irá", "irán", "tiene", "tienen", "tendrá", "tendrán",
}) | HABER_FORMS

# auxiliaries whose following gerund is the main verb of a periphrasis
GERUND_AUXILIARIES = frozenset({
    "está", "están", "estaba", "estaban", "estará", "estarán", "esté",
    "estén", "estoy", "estamos", "sigue", "siguen", "seguía", "seguían",
    "seguirá", "seguirán", "siga", "sigan", "sigo", "seguimos",
    "continúa", "continúan", "continuaba", "continuaban", "continuará",
    "continuarán", "continúe", "continúen",
    "va", "van", "iba", "iban", "irá", "irán", "vaya", "vayan",
    "lleva", "llevan", "llevaba", "llevaban", "llevará", "llevarán",
    "lleve", "lleven",
})

HABER_SER_ESTAR = HABER_FORMS | SER_FINITE | frozenset({
    "ser", "sido", "está", "están", "estaba", "estaban", "estará",
    "estarán", "esté", "estén", "estar", "estado",
})

_FINITE_TAILS = ("rá", "rán", "ía", "ían", "aba", "aban", "ó", "a", "e", "an", "en")

_NOMINALIZATION_SUFFIXES = ("ción", "ciones", "sión", "siones")

_ACRONYM_RE = re.compile(r"^[A-ZÁÉÍÓÚÜÑ][A-ZÁÉÍÓÚÜÑ0-9]{1,5}$")

# words skipped when matching acronym initials against a full form
INITIALS_SKIP = frozenset({"de", "del", "la", "los", "las", "y", "e", "para"})

# explicit second-person-singular verb forms (suffix families are too noisy)
TU_VERB_FORMS = frozenset({
    "puedes", "debes", "tienes", "haces", "quieres", "sabes", "necesitas",
    "accedes", "introduces", "envías", "recibes", "obtienes", "consigues",
    "eres", "estás", "rellenas", "firmas", "presentas", "solicitas",
    "descargas", "pulsas", "marcas", "llamas", "escribes", "lees",
})

_TU_SUFFIX_EXCLUSIONS = frozenset({
    "además", "quizás", "jamás", "atrás", "detrás", "demás", "compás",
})

_FIRST_PLURAL_EXCLUSIONS = frozenset({"ramos", "tramos", "gramos"})


# ---------------------------------------------------------------------------
# Verb forms
# ---------------------------------------------------------------------------


def strip_enclitics(lower: str) -> str:
    """Peel pronoun enclitics off a non-finite form ("hallándose" -> "hallándo")."""
    word = lower
    for _ in range(2):
        for clitic in ENCLITICS:
            if word.endswith(clitic) and len(word) - len(clitic) >= 4:
                word = word[: -len(clitic)]
                break
        else:
            break
    return word


# -ando/-endo words that are not gerunds
GERUND_EXCLUSIONS = frozenset({
    "cuando", "cuándo", "bando", "mando", "comando", "blando", "nefando",
    "contrabando", "reverendo", "estupendo", "tremendo", "horrendo",
})


def is_gerund(lower: str) -> bool:
    if lower in GERUND_EXCLUSIONS:
        return False
    stem = strip_accents(strip_enclitics(lower))
    if stem in GERUND_EXCLUSIONS:
        return False
    return len(stem) > 5 and stem.endswith(("ando", "iendo", "yendo"))


def is_infinitive(lower: str) -> bool:
    stem = strip_accents(strip_enclitics(lower))
    return len(stem) > 3 and stem.endswith(("ar", "er", "ir"))


def participle_agreement(lower: str) -> Optional[Agreement]:
    if lower.endswith(("ado", "ido")) or lower in IRREGULAR_PARTICIPLES and lower.endswith("o"):
        return Agreement("masc", "sing")
    if lower.endswith(("ados", "idos")):
        return Agreement("masc", "plur")
    if lower.endswith(("ada", "ida")):
        return Agreement("fem", "sing")
    if lower.endswith(("adas", "idas")):
        return Agreement("fem", "plur")
    if lower in IRREGULAR_PARTICIPLES:
        gender = "fem" if lower.rstrip("s").endswith("a") else "masc"
        number = "plur" if lower.endswith("s") else "sing"
        return Agreement(gender, number)
    return None


def is_participle(lower: str, false_participles: frozenset[str] = frozenset()) -> bool:
    if lower in false_participles:
        return False
    return lower.endswith(PARTICIPLE_SUFFIXES) or lower in IRREGULAR_PARTICIPLES


def noun_agreement_guess(lower: str) -> Optional[Agreement]:
    """Rough gender/number guess for a noun, from its ending."""
    if lower.endswith(("ciones", "siones", "dades", "tudes")):
        return Agreement("fem", "plur")
    if lower.endswith(("ción", "sión", "dad", "tud")):
        return Agreement("fem", "sing")
    if lower.endswith("os"):
        return Agreement("masc", "plur")
    if lower.endswith("as"):
        return Agreement("fem", "plur")
    if lower.endswith("o"):
        return Agreement("masc", "sing")
    if lower.endswith("a"):
        return Agreement("fem", "sing")
    return None


def is_future_subjunctive(
    lower: str, exclusions: frozenset[str] = frozenset()
) -> bool:
    if lower in exclusions:
        return False
    if lower in IRREGULAR_FUTURE_SUBJUNCTIVE:
        return True
    for suffix in FUTURE_SUBJUNCTIVE_SUFFIXES:
        if lower.endswith(suffix) and len(lower) - len(suffix) >= 3:
            return True
    return False


def archaic_suggestion(lower: str) -> Optional[str]:
    """Imperfect-subjunctive rewrite for a future-subjunctive form."""
    if lower in IRREGULAR_FUTURE_SUBJUNCTIVE:
        return IRREGULAR_FUTURE_SUBJUNCTIVE[lower]
    for suffix, replacement in _ARCHAIC_TRANSFORMS:
        if lower.endswith(suffix):
            return lower[: -len(suffix)] + replacement
    return None


def is_first_plural_verb(lower: str) -> bool:
    if lower in _FIRST_PLURAL_EXCLUSIONS:
        return False
    if lower.endswith(("amos", "emos")):
        return len(lower) >= 5
    if lower.endswith("imos"):
        # bars esdrújula nouns: mínimos, máximos, últimos...
        return len(lower) >= 5 and not has_accent(lower)
    return False


def is_tu_verb(lower: str) -> bool:
    if lower in TU_VERB_FORMS:
        return True
    if lower in _TU_SUFFIX_EXCLUSIONS:
        return False
    if lower.endswith("ás") and len(lower) >= 5:
        return True
    return lower.endswith("zcas") and len(lower) >= 6


def tag_verb_form(
    token: Token,
    archaic_exclusions: frozenset[str] = frozenset(),
    false_participles: frozenset[str] = frozenset(),
) -> VerbFormTag:
    """Classify one word token; exclusion lists win over suffix evidence."""
    lower = token.lower
    if is_future_subjunctive(lower, archaic_exclusions):
        return VerbFormTag(VerbForm.FUTURE_SUBJUNCTIVE)
    if is_gerund(lower):
        return VerbFormTag(VerbForm.GERUND)
    if is_participle(lower, false_participles):
        return VerbFormTag(VerbForm.PARTICIPLE, participle_agreement(lower))
    if is_infinitive(lower):
        return VerbFormTag(VerbForm.INFINITIVE)
    if is_first_plural_verb(lower):
        return VerbFormTag(VerbForm.FINITE_1P_PLURAL)
    return VerbFormTag(VerbForm.OTHER)


# ---------------------------------------------------------------------------
# Passive constructions
# ---------------------------------------------------------------------------


class PassiveKind(str, Enum):
    PERIPHRASTIC = "periphrastic"
    PERIPHRASTIC_IN_PERIPHRASIS = "periphrastic_in_periphrasis"
    REFLEXIVE = "reflexive"
    REFLEXIVE_WITH_AGENT = "reflexive_with_agent"


@dataclass(frozen=True)
class PassiveMatch:
    kind: PassiveKind
    span: Span
    agent_span: Optional[Span] = None
    first_word: int = 0
    last_word: int = 0
    agent_marker: Optional[int] = None


AGENT_MARKERS = ("por", "de")
AGENT_WINDOW = 8  # max word tokens between the finite verb and por/de
_AGENT_PHRASE_MAX = 5
_AGENT_STOPS = frozenset({
    "que", "cuando", "donde", "y", "o", "e", "u", "si", "para",
    "con", "sin", "en", "a", "de", "del", "por",
})
# dative/accusative clitics that may sit between "se" and the verb
_SE_CLITICS = frozenset({"le", "les", "lo", "la", "los", "las", "me", "te", "nos", "os"})


def _looks_finite(lower: str) -> bool:
    return len(lower) >= 2 and lower.endswith(_FINITE_TAILS)


def _positions_within(words: Sequence[Token], start: int, target: str, reach: int = 2):
    return [
        k for k in range(start + 1, min(start + 1 + reach, len(words)))
        if words[k].lower == target
    ]


def _participles_within(
    words: Sequence[Token], start: int, false_participles: frozenset[str], reach: int = 2
):
    return [
        k for k in range(start + 1, min(start + 1 + reach, len(words)))
        if is_participle(words[k].lower, false_participles)
    ]


def find_passives(
    sentence: Sentence,
    false_participles: frozenset[str] = frozenset(),
) -> list[PassiveMatch]:
    """Non-overlapping passive constructions, leftmost-longest.

    Four shapes: "ser" finite + participle (also "haber + sido + participle")
    -> periphrastic; finite auxiliary + "ser" + participle -> periphrastic
    inside a periphrasis; "se" + finite verb -> reflexive, upgraded to
    reflexive-with-agent when por/de opens an agent phrase within the window.
    """
    words = sentence.word_tokens
    matches: list[PassiveMatch] = []
    i = 0
    while i < len(words):
        match = _match_at(words, i, false_participles)
        if match:
            matches.append(match)
            i = match.last_word + 1
        else:
            i += 1
    return matches


def _match_at(
    words: Sequence[Token], i: int, false_participles: frozenset[str]
) -> Optional[PassiveMatch]:
    """Longest passive construction starting at word i, or None.

    All pattern shapes are tried and the farthest-reaching one wins
    (leftmost-longest); on equal length the earlier pattern takes priority.
    """
    lower = words[i].lower

    def span_of(last: int) -> Span:
        return Span(words[i].span.start, words[last].span.end)

    candidates: list[tuple[int, int, PassiveMatch]] = []  # (-end, priority, match)

    if lower in HABER_FORMS:
        for sido in _positions_within(words, i, "sido"):
            for part in _participles_within(words, sido, false_participles):
                candidates.append((-part, 0, PassiveMatch(
                    PassiveKind.PERIPHRASTIC, span_of(part),
                    first_word=i, last_word=part,
                )))
    if lower in MODAL_FINITE:
        for ser in _positions_within(words, i, "ser"):
            for part in _participles_within(words, ser, false_participles):
                candidates.append((-part, 1, PassiveMatch(
                    PassiveKind.PERIPHRASTIC_IN_PERIPHRASIS, span_of(part),
                    first_word=i, last_word=part,
                )))
    if lower in SER_FINITE:
        for part in _participles_within(words, i, false_participles):
            candidates.append((-part, 2, PassiveMatch(
                PassiveKind.PERIPHRASTIC, span_of(part),
                first_word=i, last_word=part,
            )))
    if lower == "se" and i + 1 < len(words):
        verb = i + 1
        if words[verb].lower in _SE_CLITICS and verb + 1 < len(words):
            verb += 1
        if _looks_finite(words[verb].lower) and words[verb].lower not in _SE_CLITICS:
            marker = None
            for k in range(verb + 1, min(verb + 1 + AGENT_WINDOW, len(words))):
                if words[k].lower in AGENT_MARKERS:
                    marker = k
                    break
            if marker is None:
                candidates.append((-verb, 3, PassiveMatch(
                    PassiveKind.REFLEXIVE, span_of(verb),
                    first_word=i, last_word=verb,
                )))
            else:
                end = marker
                for k in range(marker + 1, min(marker + 1 + _AGENT_PHRASE_MAX, len(words))):
                    if words[k].lower in _AGENT_STOPS:
                        break
                    end = k
                candidates.append((-end, 3, PassiveMatch(
                    PassiveKind.REFLEXIVE_WITH_AGENT, span_of(end),
                    agent_span=Span(words[marker].span.start, words[end].span.end),
                    first_word=i, last_word=end, agent_marker=marker,
                )))
    if not candidates:
        return None
    return min(candidates, key=lambda c: (c[0], c[1]))[2]


# ---------------------------------------------------------------------------
# Nominalizations
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class NominalizationMatch:
    span: Span
    surface: str
    has_de_complement: bool


def find_nominalizations(
    sentence: Sentence,
    excluded_words: frozenset[str] = frozenset(),
    excluded_phrases: Sequence[tuple[str, ...]] = (),
) -> list[NominalizationMatch]:
    """Lowercase -ción/-sión nouns; de-complement flagged from the next word."""
    words = sentence.word_tokens
    lowers = [t.lower for t in words]
    out: list[NominalizationMatch] = []
    for idx, token in enumerate(words):
        if token.shape is not Shape.LOWERCASE:
            continue
        if not token.lower.endswith(_NOMINALIZATION_SUFFIXES):
            continue
        if token.lower in excluded_words:
            continue
        if _inside_phrase(lowers, idx, excluded_phrases):
            continue
        has_de = idx + 1 < len(words) and lowers[idx + 1] in ("de", "del")
        out.append(NominalizationMatch(token.span, token.surface, has_de))
    return out


def _inside_phrase(
    lowers: list[str], idx: int, phrases: Sequence[tuple[str, ...]]
) -> bool:
    for phrase in phrases:
        k = len(phrase)
        lo = max(0, idx - k + 1)
        for start in range(lo, min(idx + 1, len(lowers) - k + 1)):
            if tuple(lowers[start:start + k]) == phrase:
                return True
    return False


# ---------------------------------------------------------------------------
# Acronyms
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AcronymMatch:
    span: Span
    surface: str
    clarified_by_markup: bool
    word_index: int  # index within the block's word tokens


def is_acronym_shaped(surface: str) -> bool:
    return bool(_ACRONYM_RE.match(surface))


def find_acronyms(
    block: Block, exclusions: frozenset[str] = frozenset()
) -> list[AcronymMatch]:
    """All-caps tokens of 2-6 chars (digits allowed after the first)."""
    out: list[AcronymMatch] = []
    index = 0
    for sentence in block.sentences:
        for token in sentence.tokens:
            if not token.is_word:
                continue
            if (
                is_acronym_shaped(token.surface)
                and token.lower not in exclusions
            ):
                out.append(AcronymMatch(
                    span=token.span,
                    surface=token.surface,
                    clarified_by_markup=token.surface in block.html_attrs,
                    word_index=index,
                ))
            index += 1
    return out


def initials_match(full_form: Sequence[str], acronym: str) -> bool:
    """True when initials of the content words spell the acronym."""
    initials = "".join(
        w[0] for w in (w.casefold() for w in full_form if w) if w not in INITIALS_SKIP
    )
    return bool(initials) and initials == acronym.casefold()


# ---------------------------------------------------------------------------
# Person markers
# ---------------------------------------------------------------------------


class PersonMarker(str, Enum):
    FIRST_PLURAL = "first_plural"
    FIRST_SINGULAR_EXPLICIT = "first_singular_explicit"
    TU_FORM = "tu_form"
    USTED_FORM = "usted_form"


@dataclass(frozen=True)
class PersonMatch:
    span: Span
    marker: PersonMarker
    surface: str


_TU_PRONOUNS = frozenset({"tú", "te", "ti", "contigo"})
_TU_POSSESSIVES = frozenset({"tu", "tus"})


def find_person_markers(sentence: Sentence) -> list[PersonMatch]:
    """Person/address markers: explicit pronouns plus unambiguous suffixes.

    First-person singular is only reported for an explicit "yo": bare
    first-conjugation forms are systematically ambiguous with the third
    person in Spanish.
    """
    words = sentence.word_tokens
    out: list[PersonMatch] = []
    for idx, token in enumerate(words):
        lower = token.lower
        if lower == "yo":
            out.append(PersonMatch(token.span, PersonMarker.FIRST_SINGULAR_EXPLICIT, token.surface))
        elif lower in ("nosotros", "nosotras"):
            out.append(PersonMatch(token.span, PersonMarker.FIRST_PLURAL, token.surface))
        elif is_first_plural_verb(lower):
            out.append(PersonMatch(token.span, PersonMarker.FIRST_PLURAL, token.surface))
        elif lower in _TU_PRONOUNS:
            out.append(PersonMatch(token.span, PersonMarker.TU_FORM, token.surface))
        elif lower in _TU_POSSESSIVES and idx + 1 < len(words):
            out.append(PersonMatch(token.span, PersonMarker.TU_FORM, token.surface))
        elif is_tu_verb(lower):
            out.append(PersonMatch(token.span, PersonMarker.TU_FORM, token.surface))
        elif lower in ("usted", "ustedes"):
            out.append(PersonMatch(token.span, PersonMarker.USTED_FORM, token.surface))
    return out
