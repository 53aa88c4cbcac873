"""Command-line interface: lint files, compare corpora, serve the API.

Exit codes follow linter conventions: 0 when clean (or info-level findings
only), 1 when any warn-severity diagnostic was emitted, 2 on usage or input
errors.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Optional

from . import __version__
from .dataset import load_trio, scan
from .diagnostics import Severity
from .htmldoc import parse_html
from .lexicons import LexiconParseError, load as load_lexicons
from .metrics import MissingVersion, compare
from .report import human_lines, merged_report_dict, to_json
from .rules import PROFILES, RuleConfig, THRESHOLD_FIELDS, lint
from .textmodel import Document, MalformedEncoding, parse_plain


class CliError(Exception):
    """Fatal usage/input problem; message goes to stderr, exit code 2."""


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="clarolint",
        description="Linter de lenguaje claro para textos administrativos en español",
    )
    parser.add_argument("--version", action="version", version=f"clarolint {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_lint = sub.add_parser("lint", help="analizar archivos y emitir diagnósticos")
    p_lint.add_argument("paths", nargs="+", metavar="FILE")
    p_lint.add_argument("--profile", default="lengclaro", metavar="NAME")
    p_lint.add_argument("--format", choices=("human", "json"), default="human")
    p_lint.add_argument("--html", action="store_true",
                        help="forzar análisis HTML (por defecto se infiere de la extensión)")
    p_lint.add_argument("--rules", metavar="IDS",
                        help="lista de reglas separadas por comas; solo esas se ejecutan")
    p_lint.add_argument("--lexicon", action="append", default=[], metavar="FILE",
                        help="archivo de léxico adicional (repetible)")
    p_lint.add_argument("--threshold", action="append", default=[], metavar="NAME=N",
                        help="umbral con nombre, p. ej. long_sentence_words=30 (repetible)")
    p_lint.add_argument("--workers", type=int, default=1, metavar="N",
                        help="archivos analizados en paralelo")
    p_lint.set_defaults(func=cmd_lint)

    p_corpus = sub.add_parser("corpus", help="comparar tríos de un directorio de corpus")
    p_corpus.add_argument("directory", metavar="DIR")
    p_corpus.add_argument("--profile", default="lengclaro", metavar="NAME")
    p_corpus.add_argument("--format", choices=("human", "json"), default="human")
    p_corpus.set_defaults(func=cmd_corpus)

    p_serve = sub.add_parser("serve", help="exponer el linter por HTTP")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8623)
    p_serve.add_argument("--origin", default="*",
                         help="origen permitido para CORS")
    p_serve.add_argument("--max-bytes", type=int, default=1 << 20,
                         help="tamaño máximo de petición")
    p_serve.set_defaults(func=cmd_serve)
    return parser


def _build_config(profile: str, rules: Optional[str], thresholds: list[str]) -> RuleConfig:
    if profile not in PROFILES:
        raise CliError(f"perfil desconocido: {profile!r} (use artext o lengclaro)")
    overrides: dict[str, int] = {}
    for item in thresholds:
        name, _, value = item.partition("=")
        if name not in THRESHOLD_FIELDS:
            raise CliError(f"umbral desconocido: {name!r}")
        try:
            overrides[name] = int(value)
        except ValueError:
            raise CliError(f"valor de umbral no numérico: {item!r}") from None
    rule_ids = None
    if rules is not None:
        rule_ids = [r.strip() for r in rules.split(",") if r.strip()]
    try:
        return RuleConfig.for_profile(profile, rules=rule_ids, **overrides)
    except ValueError as exc:
        raise CliError(str(exc)) from None


def _parse_file(path: Path, force_html: bool) -> Document:
    try:
        data = path.read_bytes()
    except OSError as exc:
        raise CliError(f"no se puede leer {path}: {exc}") from None
    if force_html or path.suffix.lower() in (".html", ".htm"):
        return parse_html(data)
    try:
        return parse_plain(data.decode("utf-8"))
    except UnicodeDecodeError as exc:
        raise MalformedEncoding(f"{path}: {exc}") from None


def cmd_lint(args: argparse.Namespace) -> int:
    config = _build_config(args.profile, args.rules, args.threshold)
    try:
        lexicons = load_lexicons(args.lexicon)
    except (LexiconParseError, OSError) as exc:
        raise CliError(str(exc)) from None

    paths = [Path(p) for p in args.paths]

    def run_one(path: Path) -> tuple[str, Document, list]:
        document = _parse_file(path, args.html)
        return str(path), document, lint(document, config, lexicons)

    try:
        if args.workers > 1:
            with ThreadPoolExecutor(max_workers=args.workers) as pool:
                results = list(pool.map(run_one, paths))
        else:
            results = [run_one(p) for p in paths]
    except MalformedEncoding as exc:
        raise CliError(str(exc)) from None

    if args.format == "json":
        sys.stdout.write(to_json(merged_report_dict(results, args.profile)))
    else:
        for name, document, diags in results:
            for line in human_lines(name, document, diags):
                print(line)
    has_warn = any(
        d.severity is Severity.WARN for _, _, diags in results for d in diags
    )
    return 1 if has_warn else 0


def cmd_corpus(args: argparse.Namespace) -> int:
    config = _build_config(args.profile, None, [])
    lexicons = load_lexicons()
    try:
        report = scan(args.directory)
    except IOError as exc:
        raise CliError(str(exc)) from None

    rows = []
    skipped: list[tuple[int, str]] = []
    for number in report.trio_numbers():
        entries = [e for e in report.entries if e.doc_number == number]
        if len(entries) < 2:
            skipped.append((number, "se necesitan al menos 2 versiones"))
            continue
        try:
            documents = load_trio(entries)
            rows.append(compare(documents, config, lexicons, doc_number=number))
        except MissingVersion as exc:
            skipped.append((number, str(exc)))
        except (MalformedEncoding, OSError) as exc:
            raise CliError(str(exc)) from None

    if args.format == "json":
        payload = {
            "version": __version__,
            "profile": args.profile,
            "trios": [
                {
                    "doc_number": row.doc_number,
                    "missing": list(row.missing),
                    "metrics": {
                        version: {
                            "sentence_count": m.sentence_count,
                            "mean_sentence_words": m.mean_sentence_words,
                            "max_sentence_words": m.max_sentence_words,
                            "paragraph_count": m.paragraph_count,
                            "mean_paragraph_words": m.mean_paragraph_words,
                            "diagnostics_by_rule": m.diagnostics_by_rule,
                            "diagnostics_per_1000_words": m.diagnostics_per_1000_words,
                        }
                        for version, m in sorted(row.metrics.items())
                    },
                    "deltas": row.deltas,
                }
                for row in rows
            ],
            "skipped": [{"doc_number": n, "reason": r} for n, r in skipped],
            "violations": [
                {"path": str(path), "reason": reason}
                for path, reason in report.violations
            ],
            "incomplete": {
                str(n): list(missing) for n, missing in report.incomplete.items()
            },
        }
        sys.stdout.write(to_json(payload))
    else:
        for row in rows:
            for version, m in sorted(row.metrics.items()):
                print(
                    f"doc {row.doc_number} {version}: "
                    f"{m.total_diagnostics} avisos, "
                    f"{m.mean_sentence_words} palabras/oración, "
                    f"{m.diagnostics_per_1000_words} avisos/1000 palabras"
                )
            for version, deltas in sorted(row.deltas.items()):
                moved = {k: v for k, v in deltas.items() if v}
                print(f"doc {row.doc_number} original→{version}: "
                      + (", ".join(f"{k} {v:+d}" for k, v in sorted(moved.items())) or "sin cambios"))
            if row.missing:
                print(f"doc {row.doc_number}: faltan versiones: {', '.join(row.missing)}")
        for number, reason in skipped:
            print(f"doc {number}: omitido ({reason})")
        for number, missing in report.incomplete.items():
            print(f"trío incompleto {number}: faltan {', '.join(missing)}")
        for path, reason in report.violations:
            print(f"infracción de nomenclatura: {path} ({reason})")
    return 1 if report.violations else 0


def cmd_serve(args: argparse.Namespace) -> int:
    from .service import make_server  # deferred: keeps CLI import light

    server = make_server(
        host=args.host,
        port=args.port,
        origin=args.origin,
        max_bytes=args.max_bytes,
    )
    host, port = server.server_address[:2]
    print(f"clarolint service listening on http://{host}:{port}", flush=True)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
    return 0


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"clarolint: error: {exc}", file=sys.stderr)
        return 2
    except MalformedEncoding as exc:
        print(f"clarolint: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
