"""Command-line front end: ``heegaard-theta {validate,compute,matchings,render,explain} FILE``."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .diagram import (
    BasepointChoice,
    CombinatorialDiagram,
    check_matching,
    default_basepoints,
    enumerate_matchings,
    j_matrix,
    validate_diagram,
)
from .errors import (
    CapExceeded,
    CrossingNotOnCurve,
    HeegaardError,
    InvalidLayout,
    InvalidMatching,
    LayoutError,
    MatchingMismatch,
    NotQSphere,
    ParseError,
)
from .invariants import EllPairing, lk_parallel, theta
from .layout import RectLayout, derive_combinatorics, validate_layout
from .linalg import parse_rational
from .render import SvgOptions, render_svg
from .report import explain_lines, format_table, report_json
from .source import read_source

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_NOT_QSPHERE = 2
EXIT_PARSE = 3
EXIT_MATCHING = 4
EXIT_CAP = 5
EXIT_IO = 6

COMMANDS = ("validate", "compute", "matchings", "render", "explain")


@dataclass
class CliConfig:
    command: str
    path: Path
    matching: tuple[str, ...] | None = None
    basepoints: dict[tuple[str, int], str] = field(default_factory=dict)
    lam: Fraction | None = None
    fmt: str = "table"
    cap: int | None = None
    output: Path | None = None
    decimal: bool = False
    svg: SvgOptions = field(default_factory=SvgOptions)


class _Failure(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _parse_curve(name: str) -> tuple[str, int]:
    raw = name.strip().lower().replace("_", "")
    for prefix, family in (("alpha", "alpha"), ("beta", "beta"), ("a", "alpha"), ("b", "beta")):
        if raw.startswith(prefix) and raw[len(prefix):].isdigit():
            return family, int(raw[len(prefix):])
    raise ValueError(f"unknown curve name {name!r} (use alpha_1, beta_2, a1, ...)")


def parse_basepoints(text: str) -> dict[tuple[str, int], str]:
    out = {}
    for item in filter(None, (s.strip() for s in text.split(","))):
        if "=" not in item:
            raise ValueError(f"basepoint {item!r} is not of the form curve=crossing")
        curve, cid = item.split("=", 1)
        out[_parse_curve(curve)] = cid.strip()
    return out


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="heegaard-theta",
                                description="Exact Theta-invariant calculator for rectangular Heegaard diagrams.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("path", type=Path, help="a .hgr layout or a combinatorial diagram (JSON)")
    p.add_argument("--matching", help="comma separated crossing ids, one per alpha curve")
    p.add_argument("--basepoints", help="overrides such as alpha_1=c,beta_2=e")
    p.add_argument("--lambda", dest="lam", help="Casson-Walker invariant p/q; adds p1 = 4 Theta - 24 lambda")
    p.add_argument("--format", dest="fmt", choices=("table", "json"), default="table")
    p.add_argument("--cap", type=int, default=None, help="refuse to list more than N matchings")
    p.add_argument("--output", type=Path, help="write to PATH instead of stdout")
    p.add_argument("--decimal", action="store_true", help="add rounded decimal values (display only)")
    p.add_argument("--no-labels", action="store_true", help="SVG without text labels")
    p.add_argument("--no-arrows", action="store_true", help="SVG without orientation arrows")
    p.add_argument("--scale", type=int, default=200, help="SVG pixels per unit")
    return p


def config_from_args(argv: list[str] | None = None) -> CliConfig:
    a = build_parser().parse_args(argv)
    try:
        cfg = CliConfig(
            command=a.command,
            path=a.path,
            matching=tuple(s.strip() for s in a.matching.split(",") if s.strip()) if a.matching else None,
            basepoints=parse_basepoints(a.basepoints) if a.basepoints else {},
            lam=parse_rational(a.lam) if a.lam is not None else None,
            fmt=a.fmt,
            cap=a.cap,
            output=a.output,
            decimal=a.decimal,
            svg=SvgOptions(scale=a.scale, labels=not a.no_labels, arrows=not a.no_arrows),
        )
    except (ValueError, ParseError) as exc:
        raise _Failure(EXIT_PARSE, f"bad option: {exc}") from exc
    return cfg


# ---------------------------------------------------------------------------


def _load(cfg: CliConfig):
    try:
        return read_source(cfg.path)
    except OSError as exc:
        raise _Failure(EXIT_IO, f"cannot read {cfg.path}: {exc.strerror or exc}") from exc


def _combinatorics(src) -> tuple[CombinatorialDiagram, RectLayout | None]:
    if isinstance(src, RectLayout):
        report = validate_layout(src)
        if not report.ok:
            raise InvalidLayout(report)
        return derive_combinatorics(src, check=False), src
    report = validate_diagram(src)
    if not report.ok:
        raise InvalidLayout(report)
    return src, None


def _matching(cfg: CliConfig, d: CombinatorialDiagram):
    ids = cfg.matching if cfg.matching is not None else d.matching
    if ids is None:
        raise MatchingMismatch("no matching given and none recorded in the file")
    return check_matching(d, ids)


def _basepoints(cfg: CliConfig, d: CombinatorialDiagram, m) -> BasepointChoice:
    bp = default_basepoints(d, m)
    if not cfg.basepoints:
        return bp
    alpha, beta = list(bp.alpha), list(bp.beta)
    for (family, idx), cid in cfg.basepoints.items():
        target = alpha if family == "alpha" else beta
        if not 1 <= idx <= d.genus:
            raise CrossingNotOnCurve(f"no curve {family}_{idx}")
        target[idx - 1] = cid
    return BasepointChoice(tuple(alpha), tuple(beta))


def _emit(cfg: CliConfig, text: str) -> None:
    if cfg.output is None:
        sys.stdout.write(text)
        return
    try:
        cfg.output.write_text(text, encoding="utf-8")
    except OSError as exc:
        raise _Failure(EXIT_IO, f"cannot write {cfg.output}: {exc.strerror or exc}") from exc


def _dumps(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def cmd_validate(cfg: CliConfig) -> int:
    src = _load(cfg)
    report = validate_layout(src) if isinstance(src, RectLayout) else validate_diagram(src)
    if cfg.fmt == "json":
        _emit(cfg, _dumps(report.to_json()))
    else:
        _emit(cfg, report.format() + "\n")
    return EXIT_OK if report.ok else EXIT_INVALID


def cmd_compute(cfg: CliConfig) -> int:
    src = _load(cfg)
    d, _ = _combinatorics(src)
    m = _matching(cfg, d)
    bp = _basepoints(cfg, d, m)
    r = theta(src, bp=bp, matching=m, lam=cfg.lam)
    if cfg.fmt == "json":
        _emit(cfg, _dumps(report_json(r, cfg.decimal)))
    else:
        _emit(cfg, format_table(r, cfg.decimal))
    return EXIT_OK if r.theta is not None else EXIT_MATCHING


def cmd_matchings(cfg: CliConfig) -> int:
    src = _load(cfg)
    d, layout = _combinatorics(src)
    found = enumerate_matchings(d, cfg.cap)
    J = j_matrix(d)
    drawn = frozenset(d.matching or ())
    thetable = layout is not None or d.arc_half_turns is not None
    rows = []
    for m in found:
        bp = default_basepoints(d, m)
        lk = lk_parallel(d, bp, m, EllPairing(d, bp, J))
        capable = thetable and m.as_set() == drawn
        rows.append({"matching": sorted(m.crossings), "lk": str(lk), "theta_capable": capable})
    if cfg.fmt == "json":
        _emit(cfg, _dumps({"count": len(rows), "matchings": rows}))
    else:
        lines = [f"{len(rows)} matching(s)"]
        for row in rows:
            tag = "Theta-capable" if row["theta_capable"] else "lk only"
            lines.append(f"{{{','.join(row['matching'])}}}  lk = {row['lk']}  ({tag})")
        _emit(cfg, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_render(cfg: CliConfig) -> int:
    src = _load(cfg)
    if not isinstance(src, RectLayout):
        raise _Failure(EXIT_PARSE, "render needs a rectangular layout, not a combinatorial diagram")
    _emit(cfg, render_svg(src, cfg.svg))
    return EXIT_OK


def cmd_explain(cfg: CliConfig) -> int:
    src = _load(cfg)
    d, layout = _combinatorics(src)
    m = _matching(cfg, d)
    bp = _basepoints(cfg, d, m)
    lines, complete = explain_lines(d, layout, m, bp)
    _emit(cfg, "\n".join(lines) + "\n")
    return EXIT_OK if complete else EXIT_MATCHING


_HANDLERS = {
    "validate": cmd_validate,
    "compute": cmd_compute,
    "matchings": cmd_matchings,
    "render": cmd_render,
    "explain": cmd_explain,
}


def exit_code_for(exc: BaseException) -> int:
    if isinstance(exc, _Failure):
        return exc.code
    if isinstance(exc, ParseError):
        return EXIT_PARSE
    if isinstance(exc, NotQSphere):
        return EXIT_NOT_QSPHERE
    if isinstance(exc, (MatchingMismatch, InvalidMatching)):
        return EXIT_MATCHING
    if isinstance(exc, CapExceeded):
        return EXIT_CAP
    if isinstance(exc, CrossingNotOnCurve):
        return EXIT_PARSE
    if isinstance(exc, LayoutError):
        return EXIT_INVALID
    if isinstance(exc, OSError):
        return EXIT_IO
    return EXIT_INVALID


def run(cfg: CliConfig) -> int:
    try:
        return _HANDLERS[cfg.command](cfg)
    except (HeegaardError, _Failure, OSError) as exc:
        stage = getattr(exc, "stage", "cli")
        print(f"error [{stage}]: {exc}", file=sys.stderr)
        return exit_code_for(exc)


def main(argv: list[str] | None = None) -> int:
    try:
        cfg = config_from_args(argv)
    except _Failure as exc:
        print(f"error [cli]: {exc}", file=sys.stderr)
        return exc.code
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
