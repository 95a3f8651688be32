"""Human-readable renderings of Theta reports and term-by-term breakdowns."""

from __future__ import annotations

from fractions import Fraction

from .diagram import (
    BasepointChoice,
    CombinatorialDiagram,
    Matching,
    beta_partner,
    intersection_matrix,
    j_matrix,
    l_cycle_coefficients,
)
from .invariants import (
    EllPairing,
    ThetaReport,
    _Degrees,
    de_crossing,
    ell_two_coefficients,
    lk_coefficients,
)
from .layout import RectLayout, de_arc


def approx(q: Fraction | None) -> str:
    return "-" if q is None else f"{float(q):.6f}"


def _q(q: Fraction | None) -> str:
    return "unavailable" if q is None else str(q)


def basepoint_text(bp: BasepointChoice) -> str:
    parts = [f"alpha_{i}={c}" for i, c in enumerate(bp.alpha, 1)]
    parts += [f"beta_{j}={c}" for j, c in enumerate(bp.beta, 1)]
    return " ".join(parts)


def format_table(r: ThetaReport, decimal: bool = False) -> str:
    rows = [("ell2", r.ell2), ("lk", r.lk), ("e", r.euler), ("Theta", r.theta)]
    if r.lam is not None:
        rows += [("lambda", r.lam), ("p1", r.p1)]
    lines = [
        f"{'source':<11}{r.source}",
        f"{'matching':<11}{r.matching}",
        f"{'basepoints':<11}{basepoint_text(r.basepoints)}",
        f"{'hash':<11}{r.diagram_hash}",
    ]
    if decimal:
        lines.append(f"{'':<11}{'exact':<14}approx (rounded, not exact)")
    for name, value in rows:
        line = f"{name:<11}{_q(value)}"
        if decimal:
            line = f"{name:<11}{_q(value):<14}{approx(value)}"
        lines.append(line)
    lines += [f"note: {n}" for n in r.notes]
    return "\n".join(lines) + "\n"


def report_json(r: ThetaReport, decimal: bool = False) -> dict:
    doc = r.to_json()
    if decimal:
        doc["approx"] = {k: float(Fraction(v)) for k, v in doc.items()
                         if k in ("ell2", "lk", "euler", "theta", "lambda", "p1") and v is not None}
    return doc


def _arc_degrees(d: CombinatorialDiagram, l: RectLayout | None) -> list[tuple[int, str, str, Fraction]]:
    out = []
    if l is not None:
        for curve in l.beta:
            for arc in curve.arcs:
                out.append((curve.index, arc.start.crossing, arc.end.crossing, de_arc(l, arc).value))
    elif d.arc_half_turns is not None:
        for j, order in enumerate(d.beta_orders, 1):
            for k, cid in enumerate(order):
                nxt = order[(k + 1) % len(order)]
                out.append((j, cid, nxt, Fraction(d.arc_half_turns[j - 1][k], 2)))
    return out


def explain_lines(d: CombinatorialDiagram, l: RectLayout | None, m: Matching,
                  bp: BasepointChoice) -> tuple[list[str], bool]:
    """Every intermediate quantity, in a fixed order.

    Returns the lines and whether the Euler term could be evaluated.
    """
    g = d.genus
    ids = d.crossing_ids()
    A = intersection_matrix(d)
    J = j_matrix(d)
    out = [f"genus = {g}", f"matching = {m}", f"basepoints = {basepoint_text(bp)}", ""]
    for i in range(1, g + 1):
        for j in range(1, g + 1):
            out.append(f"A[{i}][{j}] = {A.at(i, j)}")
    for j in range(1, g + 1):
        for i in range(1, g + 1):
            out.append(f"J[{j}][{i}] = {J.at(j, i)}")
    for cid in ids:
        c = d.crossings[cid]
        out.append(f"sigma({cid}) = {c.sign:+d}  on alpha_{c.alpha}, beta_{c.beta}")
    out.append("")

    pairing = EllPairing(d, bp, J)
    for c in ids:
        for e in ids:
            out.append(f"ell({c},{e}) = {pairing(c, e)}")
    out.append("")

    l2 = Fraction(0)
    for (c, e), v in sorted(ell_two_coefficients(d, J).items()):
        term = v * pairing(c, e)
        l2 += term
        out.append(f"ell2 term ({c},{e}): {v} * {pairing(c, e)} = {term}")
    out.append(f"ell2 = {l2}")
    out.append("")

    t = l_cycle_coefficients(d, m, J)
    for cid in ids:
        out.append(f"t({cid}) = {t[cid]}")
    lk = Fraction(0)
    for (c, e), v in sorted(lk_coefficients(d, m, J).items()):
        term = v * pairing(c, e)
        lk += term
        out.append(f"lk term ({c},{e}): {v} * {pairing(c, e)} = {term}")
    out.append(f"lk = {lk}")
    out.append("")

    drawn = d.matching is not None and set(d.matching) == m.as_set()
    arcs = _arc_degrees(d, l)
    if not drawn or (g and not arcs):
        out.append(f"e unavailable: matching {m} is not the drawn one or no tangent degrees are known")
        return out, False
    for j, a, b, v in arcs:
        out.append(f"d_e(|{a},{b}|_beta_{j}) = {v}")
    degrees = _Degrees(d, l)
    for j in range(1, g + 1):
        out.append(f"d_e(beta_{j}) = {degrees.beta(j)}")
    for j in range(1, g + 1):
        out.append(f"favourite on beta_{j} = {beta_partner(d, m, j)}")
    euler = Fraction(0)
    de = {}
    for cid in ids:
        de[cid] = de_crossing(l, d, J, m, cid, degrees)
        out.append(f"d_e({cid}) = {de[cid]}")
    for cid in ids:
        c = d.crossings[cid]
        w = J.at(c.beta, c.alpha) * c.sign
        term = w * de[cid]
        euler += term
        out.append(f"e term {cid}: {w} * {de[cid]} = {term}")
    out.append(f"e = {euler}")
    out.append("")
    out.append(f"Theta = {l2} + {lk} - {euler} = {l2 + lk - euler}")
    return out, True

