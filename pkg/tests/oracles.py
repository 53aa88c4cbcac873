"""Independent reference implementations used to freeze expected test values.

These deliberately avoid importing the package under test. Word counts are
computed by whitespace splitting (the engine tokenizes with a regex over
character classes); passive matches are found by exhaustive window
enumeration (the engine scans incrementally).
"""

from __future__ import annotations


def word_count(text: str) -> int:
    """Whitespace-chunk count, keeping only chunks with a letter or digit."""
    return sum(1 for chunk in text.split() if any(c.isalnum() for c in chunk))


def sentence_word_counts(text: str, separators: str = ".!?…") -> list[int]:
    """Split on terminal punctuation followed by space/end, count each part.

    Good enough for the fixture prose, which contains no abbreviations or
    decimal numbers; not a general-purpose segmenter.
    """
    parts: list[str] = []
    buf: list[str] = []
    for i, ch in enumerate(text):
        buf.append(ch)
        if ch in separators and (i + 1 == len(text) or text[i + 1].isspace()):
            parts.append("".join(buf))
            buf = []
    if "".join(buf).strip():
        parts.append("".join(buf))
    return [word_count(p) for p in parts if word_count(p) > 0]


# --- exhaustive passive-construction oracle -------------------------------

SER_FINITE = {
    "es", "son", "era", "eran", "fue", "fueron", "será", "serán",
    "sería", "serían", "sea", "sean", "fuera", "fueran", "fuese", "fuesen",
}
HABER = {
    "ha", "han", "he", "hemos", "había", "habían", "habrá", "habrán",
    "habría", "habrían", "haya", "hayan", "hubiera", "hubieran",
    "hubiese", "hubiesen", "hubo", "hubieron",
}
MODAL = {
    "debe", "deben", "deberá", "deberán", "debería", "deberían",
    "deba", "deban", "puede", "pueden", "podrá", "podrán", "podría",
    "podrían", "pueda", "puedan", "suele", "suelen", "va", "van",
    "iba", "iban", "irá", "irán", "tiene", "tienen", "tendrá", "tendrán",
} | HABER
PARTICIPLE_SUFFIXES = ("ado", "ada", "ados", "adas", "ido", "ida", "idos", "idas")
IRREGULAR_PARTICIPLES = {
    "hecho", "hecha", "hechos", "hechas", "dicho", "dicha", "dichos",
    "dichas", "escrito", "escrita", "escritos", "escritas", "puesto",
    "puesta", "puestos", "puestas", "visto", "vista", "vistos", "vistas",
    "abierto", "abierta", "abiertos", "abiertas", "inscrito", "inscrita",
    "inscritos", "inscritas",
}
FALSE_PARTICIPLES = {"requisito", "lado", "grado"}
FINITE_TAILS = ("rá", "rán", "ía", "ían", "aba", "aban", "ó", "a", "e", "an", "en")
SE_CLITICS = {"le", "les", "lo", "la", "los", "las", "me", "te", "nos", "os"}


def _is_participle(word: str) -> bool:
    if word in FALSE_PARTICIPLES:
        return False
    return word.endswith(PARTICIPLE_SUFFIXES) or word in IRREGULAR_PARTICIPLES


def _looks_finite(word: str) -> bool:
    return len(word) >= 2 and word.endswith(FINITE_TAILS)


AGENT_STOPS = {
    "que", "cuando", "donde", "y", "o", "e", "u", "si", "para",
    "con", "sin", "en", "a", "de", "del", "por",
}


def _agent_end(words: list[str], marker: int, max_len: int = 5) -> int:
    """Last word index of the agent phrase opened by the por/de marker."""
    end = marker
    for k in range(marker + 1, min(marker + 1 + max_len, len(words))):
        if words[k] in AGENT_STOPS:
            break
        end = k
    return end


def _classify_window(words: list[str], i: int, j: int, agent_limit: int = 8):
    """Classify words[i:j+1] as a passive construction, or return None."""
    w = words
    if w[i] in HABER:
        for k in range(i + 1, min(i + 3, j + 1)):
            if w[k] == "sido":
                for m in range(k + 1, min(k + 3, j + 1)):
                    if m == j and _is_participle(w[m]):
                        return "periphrastic"
    if w[i] in MODAL:
        for k in range(i + 1, min(i + 3, j + 1)):
            if w[k] == "ser":
                for m in range(k + 1, min(k + 3, j + 1)):
                    if m == j and _is_participle(w[m]):
                        return "periphrastic_in_periphrasis"
    if w[i] in SER_FINITE:
        for k in range(i + 1, min(i + 3, j + 1)):
            if k == j and _is_participle(w[k]):
                return "periphrastic"
    if w[i] == "se" and i + 1 <= j:
        verb = i + 1
        if w[verb] in SE_CLITICS and verb + 1 <= j:
            verb += 1
        if w[verb] in SE_CLITICS or not _looks_finite(w[verb]):
            return None
        if j == verb:
            return "reflexive"
        if j > verb and w[j] in ("por", "de") and j - verb <= agent_limit:
            return "reflexive_with_agent"
    return None


def enumerate_passives(words: list[str]) -> list[tuple[str, int, int, int | None]]:
    """All-window enumeration, then greedy leftmost-longest selection.

    Returns (kind, first_word, last_word, agent_marker_or_None) tuples; for
    agent matches last_word extends over the agent phrase.
    """
    candidates = []
    for i in range(len(words)):
        for j in range(i, len(words)):
            kind = _classify_window(words, i, j)
            if kind:
                candidates.append((kind, i, j))
    chosen: list[tuple[str, int, int, int | None]] = []
    taken_until = -1
    for i in range(len(words)):
        at_i = [c for c in candidates if c[1] == i and i > taken_until]
        if not at_i:
            continue
        agented = [c for c in at_i if c[0] == "reflexive_with_agent"]
        if agented:
            # the refinement wins over the plain reflexive reading, and the
            # nearest por/de is taken as the agent marker
            kind, start, end = min(agented, key=lambda c: c[2])
        else:
            kind, start, end = max(at_i, key=lambda c: c[2])
        marker = None
        if kind == "reflexive_with_agent":
            marker = end
            end = _agent_end(words, marker)
        chosen.append((kind, start, end, marker))
        taken_until = end
    return chosen
