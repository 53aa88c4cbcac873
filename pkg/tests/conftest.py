"""Shared fixtures: lexicons, configs and the on-disk HTML fixture corpus."""

from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

import pair_texts as pt  # noqa: E402
from clarolint import RuleConfig, load_lexicons  # noqa: E402


@pytest.fixture(scope="session")
def lexicons():
    return load_lexicons()


@pytest.fixture(scope="session")
def artext():
    return RuleConfig.for_profile("artext")


@pytest.fixture(scope="session")
def lengclaro():
    return RuleConfig.for_profile("lengclaro")


def blocks_to_html(text: str) -> str:
    """Render the plain-text block convention into simple HTML."""
    out: list[str] = []
    items: list[str] = []

    def flush_items() -> None:
        if items:
            out.append("<ul>" + "".join(f"<li>{i}</li>" for i in items) + "</ul>")
            items.clear()

    for chunk in text.split("\n\n"):
        for line in chunk.splitlines():
            line = line.strip()
            if not line:
                continue
            if line.startswith("- "):
                items.append(line[2:])
                continue
            flush_items()
            if line.startswith("#"):
                level = len(line) - len(line.lstrip("#"))
                out.append(f"<h{level}>{line[level:].strip()}</h{level}>")
            else:
                out.append(f"<p>{line}</p>")
    flush_items()
    return "<html><body>" + "".join(out) + "</body></html>"


DOC1_ORIGINAL = "\n\n".join([
    "## Ingreso Mínimo Vital",
    pt.A2_BEFORE,
    pt.B1_PROOF_OF_LIFE,
    pt.B4_BEFORE,
])
DOC1_ARTEXT = "\n\n".join([
    "## Ingreso Mínimo Vital",
    pt.A2_AFTER,
    pt.B3_BEFORE,
    pt.B4_AFTER,
])
DOC1_LENGCLARO = "\n\n".join([
    "## Ingreso Mínimo Vital",
    pt.A2_AFTER,
    pt.B3_AFTER,
    pt.B4_AFTER,
])
DOC2_ORIGINAL = "\n\n".join([pt.C9_BEFORE, pt.B9_BEFORE, pt.LIST_INTRO_BLOCK])
DOC2_ARTEXT = "\n\n".join([pt.C9_BEFORE, pt.B9_BEFORE])
DOC2_LENGCLARO = "\n\n".join([pt.C9_AFTER, pt.B9_AFTER])
DOC3_ORIGINAL = pt.B2_BEFORE
DOC3_ARTEXT = pt.B2_AFTER

NIF_HTML = (
    "<html><body><p>Debe indicar su "
    '<acronym lang="es" title="Número de Identificación Fiscal">NIF</acronym>'
    " en el formulario.</p></body></html>"
)


@pytest.fixture(scope="session")
def corpus_dir(tmp_path_factory) -> Path:
    """Corpus directory with two full trios, one incomplete trio and two
    naming violations."""
    root = tmp_path_factory.mktemp("corpus")
    files = {
        "1_original.html": blocks_to_html(DOC1_ORIGINAL),
        "1_artext.html": blocks_to_html(DOC1_ARTEXT),
        "1_lengclaro.html": blocks_to_html(DOC1_LENGCLARO),
        "2_original.html": blocks_to_html(DOC2_ORIGINAL),
        "2_artext.html": blocks_to_html(DOC2_ARTEXT),
        "2_lengclaro.html": blocks_to_html(DOC2_LENGCLARO),
        "3_original.html": blocks_to_html(DOC3_ORIGINAL),
        "3_artext.html": blocks_to_html(DOC3_ARTEXT),
        "4_Original.html": blocks_to_html("Texto con nombre inválido."),
        "notas.html": blocks_to_html("Archivo ajeno a la convención."),
        "leeme.txt": "no es html",
    }
    for name, content in files.items():
        (root / name).write_text(content, encoding="utf-8")
    return root


@pytest.fixture(scope="session")
def html_fixtures(corpus_dir) -> list[Path]:
    """Every HTML fixture the equivalence suite runs over."""
    extra_dir = corpus_dir.parent / "extra_html"
    extra_dir.mkdir(exist_ok=True)
    nif = extra_dir / "nif.html"
    nif.write_text(NIF_HTML, encoding="utf-8")
    return sorted(corpus_dir.glob("*.html")) + [nif]
