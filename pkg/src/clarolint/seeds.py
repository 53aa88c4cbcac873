"""Embedded seed tables for the lexicon-driven rules.

The seeds stay deliberately small: substitution and exclusion entries are
limited to forms that are documented behaviour of the rules (plus their
direct gender/number inflections), and every table can be extended through
override files (see ``lexicons.load``). Entries are stored casefolded;
multiword keys use single spaces and are tokenized like ordinary text.

Layout per table: ``entries`` maps phrase -> replacement (``None`` when the
rule only asks for removal or review), ``exclusions`` lists longer phrases
whose occurrences suppress any entry match inside them.
"""

from __future__ import annotations

# c4 — higher-register terms with a plain synonym. "anverso y reverso" is
# listed before the single word so leftmost-longest matching prefers the
# whole expression.
TRANSPARENT_TERMS = {
    "entries": {
        "efectuar": "realizar",
        "anverso y reverso": "ambas caras",
        "anverso": "cara",
        "débito": "deuda",
    },
    "exclusions": ("tarjeta de débito",),
}

# c5 — fixed formulae that hinder clarity.
DIFFICULT_EXPRESSIONS = {
    "entries": {
        "de acuerdo con": "según",
        "a efectos de": "para",
    },
    "exclusions": (),
}

# c6 — vague words; "hecho" is legitimate inside "pareja de hecho".
INACCURATE_WORDS = {
    "entries": {
        "hecho": None,
        "hacer": None,
    },
    "exclusions": ("pareja de hecho",),
}

# c7 — shipped empty: populated through override files.
REDUNDANT_EXPRESSIONS = {
    "entries": {},
    "exclusions": (),
}

# c8 — long words with a shorter everyday synonym.
LONG_WORDS = {
    "entries": {
        "gratuita": "gratis",
        "gratuito": "gratis",
        "gratuitas": "gratis",
        "gratuitos": "gratis",
    },
    "exclusions": (),
}

# c9 — noise words: empty formulae, superfluous pronouns, support-verb
# constructions whose noun already names the action.
SUPERFLUOUS_PHRASES = {
    "entries": {
        "en su caso": None,
        "de las mismas": None,
        "podrá hacerse": None,
    },
    "exclusions": (),
}

# c1 — units that signal opinion rather than fact.
SUBJECTIVITY_INDICATORS = {
    "entries": {
        "sencillo": None,
        "sencilla": None,
        "sencillos": None,
        "sencillas": None,
    },
    "exclusions": (),
}

# c10 — generic English lexicon. Loanwords the Spanish academy admits
# (software, hardware, web, internet, wifi, app) are deliberately absent.
FOREIGN_WORDS = {
    "entries": {
        "click": "clic",
        "link": "enlace",
        "email": "correo electrónico",
        "e-mail": "correo electrónico",
        "mail": "correo",
        "online": "en línea",
        "offline": "sin conexión",
        "password": "contraseña",
        "login": "acceso",
        "browser": "navegador",
        "website": "sitio web",
        "feedback": "comentarios",
        "short": None,
        "message": None,
        "service": None,
        "portable": None,
        "document": None,
        "format": None,
        "update": None,
        "upload": None,
        "download": None,
    },
    "exclusions": (),
}

# b6 — nominalizations that are fixed administrative concepts. The phrase
# exclusion keeps "autorización" quiet only inside "autorización de
# residencia".
NOMINALIZATION_EXCLUSIONS = {
    "entries": {
        "prestación": None,
        "prestaciones": None,
    },
    "exclusions": ("autorización de residencia",),
}

# b3 — words that merely resemble participles.
FALSE_PARTICIPLES = {
    "entries": {
        "requisito": None,
        "lado": None,
        "grado": None,
    },
    "exclusions": (),
}

# c2 — capitalized tokens that are not proper acronyms (product names,
# shortenings).
ACRONYM_EXCLUSIONS = {
    "entries": {
        "vivess": None,
        "app": None,
    },
    "exclusions": (),
}

# c2 — plain-Spanish alternatives offered when an unexplained acronym's full
# form would not help the reader either.
ACRONYM_SUBSTITUTIONS = {
    "entries": {
        "sms": "mensaje de texto",
        "pdf": "formato estándar de los documentos digitales",
    },
    "exclusions": (),
}

# f2 — spelled-out cardinals worth writing as digits (values > 10).
NUMBER_WORDS = {
    "entries": {
        "once": "11", "doce": "12", "trece": "13", "catorce": "14",
        "quince": "15", "dieciséis": "16", "diecisiete": "17",
        "dieciocho": "18", "diecinueve": "19", "veinte": "20",
        "veintiuno": "21", "veintidós": "22", "veintitrés": "23",
        "veinticuatro": "24", "veinticinco": "25", "veintiséis": "26",
        "veintisiete": "27", "veintiocho": "28", "veintinueve": "29",
        "treinta": "30", "cuarenta": "40", "cincuenta": "50",
        "sesenta": "60", "setenta": "70", "ochenta": "80", "noventa": "90",
        "cien": "100", "ciento": "100", "doscientos": "200",
        "doscientas": "200", "trescientos": "300", "trescientas": "300",
        "cuatrocientos": "400", "cuatrocientas": "400",
        "quinientos": "500", "quinientas": "500", "seiscientos": "600",
        "seiscientas": "600", "setecientos": "700", "setecientas": "700",
        "ochocientos": "800", "ochocientas": "800", "novecientos": "900",
        "novecientas": "900", "mil": "1000",
    },
    "exclusions": (),
}

# a3/a6 — discourse connectors accepted at paragraph/clause openings.
CONNECTORS = {
    "entries": {
        "además": None, "asimismo": None, "igualmente": None,
        "también": None, "por tanto": None, "por lo tanto": None,
        "por consiguiente": None, "en consecuencia": None,
        "sin embargo": None, "no obstante": None, "en cambio": None,
        "por otra parte": None, "por otro lado": None,
        "en primer lugar": None, "en segundo lugar": None,
        "en tercer lugar": None, "por último": None, "finalmente": None,
        "de este modo": None, "de esta manera": None,
        "en definitiva": None, "es decir": None, "esto es": None,
        "por ejemplo": None, "si": None,
    },
    "exclusions": (),
}

# b7 — negation markers counted per sentence.
NEGATION_MARKERS = {
    "entries": {
        "no": None, "ni": None, "nunca": None, "jamás": None,
        "tampoco": None, "sin": None,
    },
    "exclusions": (),
}

# Sentence segmentation: ordinal-period words (stored without the dot).
ABBREVIATIONS = {
    "entries": {
        "art": None, "arts": None, "núm": None, "núms": None,
        "pág": None, "págs": None, "sr": None, "sra": None,
        "sres": None, "sras": None, "dña": None, "dr": None,
        "dra": None, "aprox": None, "tel": None, "avda": None,
        "ej": None, "etc": None, "admón": None, "cap": None,
    },
    "exclusions": (),
}

# b4 — surfaces that end in a future-subjunctive suffix without being one:
# diphthongized presents (requiere...), -ares noun plurals, subjunctives of
# -arar verbs, and English loans.
ARCHAIC_VERB_EXCLUSIONS = {
    "entries": {
        "requiere": None, "adquiere": None, "prefiere": None,
        "refiere": None, "sugiere": None, "difiere": None,
        "infiere": None, "confiere": None, "interfiere": None,
        "transfiere": None, "quiere": None,
        "lugares": None, "hogares": None, "pilares": None,
        "militares": None, "ejemplares": None, "familiares": None,
        "auxiliares": None, "titulares": None, "escolares": None,
        "dólares": None, "similares": None, "particulares": None,
        "pares": None, "bares": None, "estándares": None, "azares": None,
        "declare": None, "declaren": None, "declares": None,
        "prepare": None, "preparen": None, "prepares": None,
        "compare": None, "comparen": None, "compares": None,
        "separe": None, "separen": None, "separes": None,
        "repare": None, "reparen": None, "repares": None,
        "aclare": None, "aclaren": None, "aclares": None,
        "dispare": None, "disparen": None, "dispares": None,
        "ampare": None, "amparen": None, "ampares": None,
        "software": None, "hardware": None,
    },
    "exclusions": (),
}

SEED_TABLES = {
    "transparent_terms": TRANSPARENT_TERMS,
    "difficult_expressions": DIFFICULT_EXPRESSIONS,
    "inaccurate_words": INACCURATE_WORDS,
    "redundant_expressions": REDUNDANT_EXPRESSIONS,
    "long_words": LONG_WORDS,
    "superfluous_phrases": SUPERFLUOUS_PHRASES,
    "subjectivity_indicators": SUBJECTIVITY_INDICATORS,
    "foreign_words": FOREIGN_WORDS,
    "nominalization_exclusions": NOMINALIZATION_EXCLUSIONS,
    "false_participles": FALSE_PARTICIPLES,
    "acronym_exclusions": ACRONYM_EXCLUSIONS,
    "acronym_substitutions": ACRONYM_SUBSTITUTIONS,
    "number_words": NUMBER_WORDS,
    "connectors": CONNECTORS,
    "negation_markers": NEGATION_MARKERS,
    "abbreviations": ABBREVIATIONS,
    "archaic_verb_exclusions": ARCHAIC_VERB_EXCLUSIONS,
}
