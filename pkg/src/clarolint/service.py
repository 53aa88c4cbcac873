"""Minimal HTTP API over the linter, for the editor front end.

Two endpoints:

- ``POST /lint`` takes ``{"text": ... | "html": ..., "profile": ...,
  "overrides": {threshold: value}, "rules": [ids]}`` (exactly one of
  text/html) and answers with the same JSON diagnostics object the CLI
  prints.
- ``GET /rules`` answers with the rule catalog and profile defaults.

The service is stateless: responses are a pure function of the request body
and the configuration loaded at startup, so identical requests produce
byte-identical bodies. Requests are handled concurrently over a thread pool;
all shared state (lexicons, limits) is immutable.
"""

from __future__ import annotations

import json
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from typing import Optional

from . import __version__
from .htmldoc import parse_html
from .lexicons import LexiconSet, load as load_lexicons
from .report import report_dict
from .rules import (
    ARTEXT_RULES,
    LENGCLARO_RULES,
    PROFILES,
    RULE_CATALOG,
    RuleConfig,
    THRESHOLD_FIELDS,
    lint,
)
from .textmodel import MalformedEncoding, parse_plain

DEFAULT_MAX_BYTES = 1 << 20  # requests above this limit answer 413


class BadRequest(ValueError):
    pass


def rules_payload() -> dict:
    defaults = RuleConfig()
    return {
        "version": __version__,
        "profiles": {
            "artext": sorted(ARTEXT_RULES),
            "lengclaro": sorted(LENGCLARO_RULES),
        },
        "thresholds": {name: getattr(defaults, name) for name in THRESHOLD_FIELDS},
        "rules": [
            {
                "id": info.id,
                "category": info.category.value,
                "description": info.description,
                "thresholds": list(info.thresholds),
                "default_enabled": {
                    "artext": info.in_artext,
                    "lengclaro": info.in_lengclaro,
                },
            }
            for info in RULE_CATALOG
        ],
    }


def lint_payload(body: dict, lexicons: LexiconSet) -> dict:
    if not isinstance(body, dict):
        raise BadRequest("el cuerpo debe ser un objeto JSON")
    text = body.get("text")
    html = body.get("html")
    if (text is None) == (html is None):
        raise BadRequest("indique exactamente uno de los campos text o html")
    if text is not None and not isinstance(text, str):
        raise BadRequest("text debe ser una cadena")
    if html is not None and not isinstance(html, str):
        raise BadRequest("html debe ser una cadena")

    profile = body.get("profile", "lengclaro")
    if profile not in PROFILES:
        raise BadRequest(f"perfil desconocido: {profile!r}")

    overrides = body.get("overrides") or {}
    if not isinstance(overrides, dict):
        raise BadRequest("overrides debe ser un objeto")
    for name, value in overrides.items():
        if name not in THRESHOLD_FIELDS:
            raise BadRequest(f"umbral desconocido: {name!r}")
        if not isinstance(value, int):
            raise BadRequest(f"el umbral {name} debe ser un entero")

    rules = body.get("rules")
    if rules is not None and (
        not isinstance(rules, list) or not all(isinstance(r, str) for r in rules)
    ):
        raise BadRequest("rules debe ser una lista de identificadores")

    try:
        config = RuleConfig.for_profile(profile, rules=rules, **overrides)
    except ValueError as exc:
        raise BadRequest(str(exc)) from None

    try:
        document = parse_html(html) if html is not None else parse_plain(text)
    except MalformedEncoding as exc:
        raise BadRequest(str(exc)) from None
    return report_dict(document, lint(document, config, lexicons), profile)


class _Handler(BaseHTTPRequestHandler):
    protocol_version = "HTTP/1.1"
    server_version = f"clarolint/{__version__}"

    # populated by make_server on the server object
    @property
    def _lexicons(self) -> LexiconSet:
        return self.server.lexicons  # type: ignore[attr-defined]

    def _respond(self, status: int, payload: dict) -> None:
        body = json.dumps(payload, ensure_ascii=False).encode("utf-8")
        self.send_response(status)
        self._cors()
        self.send_header("Content-Type", "application/json; charset=utf-8")
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)

    def _cors(self) -> None:
        self.send_header("Access-Control-Allow-Origin",
                         self.server.origin)  # type: ignore[attr-defined]

    def do_OPTIONS(self) -> None:  # noqa: N802 (stdlib naming)
        self.send_response(204)
        self._cors()
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.send_header("Content-Length", "0")
        self.end_headers()

    def do_GET(self) -> None:  # noqa: N802
        if self.path.rstrip("/") == "/rules":
            self._respond(200, rules_payload())
        else:
            self._respond(404, {"error": "ruta desconocida"})

    def do_POST(self) -> None:  # noqa: N802
        if self.path.rstrip("/") != "/lint":
            self._respond(404, {"error": "ruta desconocida"})
            return
        length = int(self.headers.get("Content-Length") or 0)
        max_bytes = self.server.max_bytes  # type: ignore[attr-defined]
        if length > max_bytes:
            self._drain(length)
            self.close_connection = True
            self._respond(413, {"error": f"petición demasiado grande (máximo {max_bytes} bytes)"})
            return
        raw = self.rfile.read(length)
        try:
            body = json.loads(raw.decode("utf-8"))
        except (UnicodeDecodeError, json.JSONDecodeError):
            self._respond(400, {"error": "cuerpo JSON no válido"})
            return
        try:
            self._respond(200, lint_payload(body, self._lexicons))
        except BadRequest as exc:
            self._respond(400, {"error": str(exc)})

    def _drain(self, length: int, cap: int = 8 << 20) -> None:
        """Discard an oversized body so the client can read the 413 cleanly."""
        remaining = min(length, cap)
        while remaining > 0:
            chunk = self.rfile.read(min(remaining, 64 * 1024))
            if not chunk:
                break
            remaining -= len(chunk)

    def log_message(self, format: str, *args) -> None:  # silence request log
        pass


def make_server(
    host: str = "127.0.0.1",
    port: int = 8623,
    lexicons: Optional[LexiconSet] = None,
    origin: str = "*",
    max_bytes: int = DEFAULT_MAX_BYTES,
) -> ThreadingHTTPServer:
    """Build the HTTP server; configuration is frozen onto the instance."""
    server = ThreadingHTTPServer((host, port), _Handler)
    server.lexicons = lexicons if lexicons is not None else load_lexicons()  # type: ignore[attr-defined]
    server.origin = origin  # type: ignore[attr-defined]
    server.max_bytes = max_bytes  # type: ignore[attr-defined]
    return server
