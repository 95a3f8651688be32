"""Reading diagram files: rectangular layouts or bare combinatorial diagrams."""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path

from .diagram import CombinatorialDiagram, diagram_from_json
from .errors import ParseError
from .layout import RectLayout, layout_from_json

CORPUS = ("d1_w", "d1_wprime", "d2_w", "d3_w", "s3_trivial")


def parse_source(text: str, name: str = "") -> RectLayout | CombinatorialDiagram:
    """A document with ``rect`` is a layout; one with ``alpha_orders`` is combinatorial."""
    try:
        doc = json.loads(text, parse_float=str)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from exc
    if isinstance(doc, dict) and "rect" in doc:
        return layout_from_json(doc, name)
    if isinstance(doc, dict) and "alpha_orders" in doc:
        return diagram_from_json(doc)
    raise ParseError("expected a layout (with 'rect') or a combinatorial diagram (with 'alpha_orders')")


def read_source(path: str | Path) -> RectLayout | CombinatorialDiagram:
    p = Path(path)
    raw = p.read_bytes()
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise ParseError(f"{p}: not UTF-8") from exc
    return parse_source(text, p.stem)


def corpus_text(name: str) -> str:
    if not name.endswith(".hgr"):
        name += ".hgr"
    return resources.files("heegaard_theta").joinpath("data", name).read_text(encoding="utf-8")


def corpus_path(name: str) -> Path:
    if not name.endswith(".hgr"):
        name += ".hgr"
    return Path(str(resources.files("heegaard_theta").joinpath("data", name)))


def load_corpus(name: str) -> RectLayout:
    return parse_source(corpus_text(name), name.removesuffix(".hgr"))
