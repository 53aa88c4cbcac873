"""clarolint: plain-language linter for Spanish legal-administrative text.

Parse plain text or HTML into a structured document, run one of the two rule
profiles over it, and get span-anchored diagnostics:

    import clarolint

    doc = clarolint.parse_plain("La solicitud deberá ser presentada hoy.")
    config = clarolint.RuleConfig.for_profile("lengclaro")
    for diag in clarolint.lint(doc, config, clarolint.load_lexicons()):
        print(diag.rule_id, diag.message)
"""

__version__ = "0.1.0"

from .diagnostics import Category, Diagnostic, Severity  # noqa: E402
from .htmldoc import parse_html  # noqa: E402
from .lexicons import LexiconParseError, LexiconSet, UnknownTable, load as load_lexicons  # noqa: E402
from .metrics import DocMetrics, MissingVersion, TrioReport, compare, measure  # noqa: E402
from .rules import (  # noqa: E402
    ARTEXT_RULES,
    LENGCLARO_RULES,
    PROFILES,
    RULE_CATALOG,
    THRESHOLD_FIELDS,
    RuleConfig,
    lint,
)
from .textmodel import (  # noqa: E402
    Block,
    BlockKind,
    Document,
    MalformedEncoding,
    Sentence,
    Span,
    Token,
    parse_plain,
    segment_sentences,
    tokenize,
)
from .dataset import DatasetEntry, ScanReport, load_trio, scan  # noqa: E402

__all__ = [
    "__version__",
    "ARTEXT_RULES", "LENGCLARO_RULES", "PROFILES", "RULE_CATALOG",
    "THRESHOLD_FIELDS",
    "Block", "BlockKind", "Category", "DatasetEntry", "Diagnostic",
    "DocMetrics", "Document", "LexiconParseError", "LexiconSet",
    "MalformedEncoding", "MissingVersion", "RuleConfig", "ScanReport",
    "Sentence", "Severity", "Span", "Token", "TrioReport", "UnknownTable",
    "compare", "lint", "load_lexicons", "load_trio", "measure",
    "parse_html", "parse_plain", "scan", "segment_sentences", "tokenize",
]
