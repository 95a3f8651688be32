"""Rectangular diagrams: the planar picture of a Heegaard diagram cut open.

The surface is cut along every alpha curve and a disk around the exterior
point is removed.  What is left is drawn as a rectangle containing two
circles per alpha curve (the copies ``prime`` and ``second``) and the beta
curves become polyline arcs running between attachment points on those
circles.  The rectangle boundary *is* the removed disk, so a layout fixes the
exterior point.

Conventions (checked by :func:`validate_layout`):

* plane orientation is the surface orientation; the prime copy of an alpha
  curve runs counterclockwise, the second copy clockwise;
* arcs leave and reach the circles horizontally, and a beta curve keeps its
  horizontal direction when it passes through a handle;
* matching crossings sit where the alpha tangent points up (right half of the
  prime circle, left half of the second one), all others where it points down.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Iterable, Sequence

from .diagram import CombinatorialDiagram, Crossing, make_diagram
from .errors import (
    DegenerateTangent,
    DuplicateId,
    InvalidLayout,
    OddBetaDegree,
    ParseError,
    SignMismatch,
    UnknownReference,
)
from .geometry import (
    HalfInt,
    Point,
    angle_key,
    cross,
    dot,
    norm2,
    polyline_directions,
    segment_dist2,
    segments_intersect,
    sign,
    sub,
    turning_half_turns,
)
from .linalg import parse_rational
from .validation import ValidationReport

PRIME = "prime"
SECOND = "second"
COPIES = (PRIME, SECOND)


def other_copy(copy: str) -> str:
    return SECOND if copy == PRIME else PRIME


@dataclass(frozen=True)
class Rect:
    xmin: Fraction
    ymin: Fraction
    xmax: Fraction
    ymax: Fraction

    def strictly_contains(self, p: Point) -> bool:
        return self.xmin < p[0] < self.xmax and self.ymin < p[1] < self.ymax


@dataclass(frozen=True)
class Circle:
    center: Point
    radius: Fraction


@dataclass(frozen=True)
class AlphaPair:
    index: int
    prime: Circle
    second: Circle

    def circle(self, copy: str) -> Circle:
        return self.prime if copy == PRIME else self.second


@dataclass(frozen=True)
class CrossingPlacement:
    id: str
    alpha: int
    prime_point: Point
    second_point: Point

    def point(self, copy: str) -> Point:
        return self.prime_point if copy == PRIME else self.second_point


@dataclass(frozen=True)
class ArcEnd:
    crossing: str
    copy: str


@dataclass(frozen=True)
class BetaArc:
    start: ArcEnd
    end: ArcEnd
    via: tuple[Point, ...] = ()


@dataclass(frozen=True)
class BetaCurve:
    index: int
    arcs: tuple[BetaArc, ...]


@dataclass(frozen=True)
class RectLayout:
    genus: int
    rect: Rect
    alpha: tuple[AlphaPair, ...]
    crossings: dict[str, CrossingPlacement]
    beta: tuple[BetaCurve, ...]
    matching: tuple[str, ...] = ()
    name: str = field(default="", compare=False)

    def alpha_pair(self, i: int) -> AlphaPair:
        return self.alpha[i - 1]

    def beta_curve(self, j: int) -> BetaCurve:
        return self.beta[j - 1]

    def end_point(self, end: ArcEnd) -> Point:
        return self.crossings[end.crossing].point(end.copy)

    def arc_points(self, arc: BetaArc) -> list[Point]:
        return [self.end_point(arc.start), *arc.via, self.end_point(arc.end)]

    def all_arcs(self) -> Iterable[tuple[int, int, BetaArc]]:
        for curve in self.beta:
            for k, arc in enumerate(curve.arcs):
                yield curve.index, k, arc

    def beta_index_of(self) -> dict[str, int]:
        out = {}
        for curve in self.beta:
            for arc in curve.arcs:
                out.setdefault(arc.start.crossing, curve.index)
        return out


# ---------------------------------------------------------------------------
# parsing


def _point(raw, where: str) -> Point:
    if not isinstance(raw, (list, tuple)) or len(raw) != 2:
        raise ParseError(f"{where}: a point is a pair [x, y]")
    try:
        return (parse_rational(raw[0]), parse_rational(raw[1]))
    except ParseError as exc:
        raise ParseError(f"{where}: {exc}") from exc


def _number(raw, where: str) -> Fraction:
    try:
        return parse_rational(raw)
    except ParseError as exc:
        raise ParseError(f"{where}: {exc}") from exc


def _circle(raw, where: str) -> Circle:
    if not isinstance(raw, dict):
        raise ParseError(f"{where}: circle must be an object")
    try:
        return Circle(_point(raw["center"], where + ".center"), _number(raw["radius"], where + ".radius"))
    except KeyError as exc:
        raise ParseError(f"{where}: missing field {exc.args[0]!r}") from exc


def _end(raw, where: str) -> ArcEnd:
    if not isinstance(raw, dict) or "crossing" not in raw or "copy" not in raw:
        raise ParseError(f"{where}: arc end needs 'crossing' and 'copy'")
    copy = raw["copy"]
    if copy not in COPIES:
        raise ParseError(f"{where}: copy must be 'prime' or 'second', got {copy!r}")
    return ArcEnd(str(raw["crossing"]), copy)


def layout_from_json(doc, name: str = "") -> RectLayout:
    if not isinstance(doc, dict):
        raise ParseError("top level must be a JSON object")
    try:
        genus = int(doc["genus"])
        r = doc["rect"]
        if isinstance(r, dict):
            rect = Rect(*(_number(r[k], "rect." + k) for k in ("xmin", "ymin", "xmax", "ymax")))
        else:
            rect = Rect(*(_number(x, "rect") for x in r))

        alpha = []
        seen_alpha = set()
        for n, raw in enumerate(doc.get("alpha", [])):
            idx = int(raw["index"])
            if idx in seen_alpha:
                raise DuplicateId(f"alpha[{n}]: duplicate alpha index {idx}")
            seen_alpha.add(idx)
            alpha.append(AlphaPair(idx, _circle(raw["prime"], f"alpha[{n}].prime"),
                                   _circle(raw["second"], f"alpha[{n}].second")))
        alpha.sort(key=lambda a: a.index)

        crossings: dict[str, CrossingPlacement] = {}
        for n, raw in enumerate(doc.get("crossings", [])):
            cid = str(raw["id"])
            if cid in crossings:
                raise DuplicateId(f"crossings[{n}]: duplicate crossing id {cid!r}")
            ai = int(raw["alpha"])
            if ai not in seen_alpha:
                raise UnknownReference(f"crossings[{n}]: unknown alpha index {ai}")
            crossings[cid] = CrossingPlacement(
                cid, ai, _point(raw["prime_point"], f"crossings[{n}].prime_point"),
                _point(raw["second_point"], f"crossings[{n}].second_point"))

        beta = []
        seen_beta = set()
        for n, raw in enumerate(doc.get("beta", [])):
            idx = int(raw["index"])
            if idx in seen_beta:
                raise DuplicateId(f"beta[{n}]: duplicate beta index {idx}")
            seen_beta.add(idx)
            arcs = []
            for k, a in enumerate(raw["arcs"]):
                where = f"beta[{n}].arcs[{k}]"
                start, end = _end(a["from"], where + ".from"), _end(a["to"], where + ".to")
                for e in (start, end):
                    if e.crossing not in crossings:
                        raise UnknownReference(f"{where}: unknown crossing {e.crossing!r}")
                via = tuple(_point(p, f"{where}.via[{m}]") for m, p in enumerate(a.get("via", [])))
                arcs.append(BetaArc(start, end, via))
            beta.append(BetaCurve(idx, tuple(arcs)))
        beta.sort(key=lambda b: b.index)

        matching = tuple(str(x) for x in doc.get("matching", []))
        for cid in matching:
            if cid not in crossings:
                raise UnknownReference(f"matching: unknown crossing {cid!r}")
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, KeyError):
            raise ParseError(f"missing field {exc.args[0]!r}") from exc
        raise ParseError(f"malformed layout: {exc}") from exc
    return RectLayout(genus, rect, tuple(alpha), crossings, tuple(beta), matching, name)


def parse_layout(text: str, name: str = "") -> RectLayout:
    """Parse the JSON ``.hgr`` format; decimals become exact rationals."""
    try:
        doc = json.loads(text, parse_float=str, parse_int=int)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from exc
    return layout_from_json(doc, name)


def _num_out(q: Fraction):
    q = Fraction(q)
    return q.numerator if q.denominator == 1 else str(q)


def _pt_out(p: Point):
    return [_num_out(p[0]), _num_out(p[1])]


def layout_to_json(l: RectLayout) -> dict:
    return {
        "genus": l.genus,
        "rect": {k: _num_out(getattr(l.rect, k)) for k in ("xmin", "ymin", "xmax", "ymax")},
        "alpha": [
            {"index": a.index,
             **{copy: {"center": _pt_out(a.circle(copy).center), "radius": _num_out(a.circle(copy).radius)}
                for copy in COPIES}}
            for a in l.alpha
        ],
        "crossings": [
            {"id": c.id, "alpha": c.alpha, "prime_point": _pt_out(c.prime_point),
             "second_point": _pt_out(c.second_point)}
            for c in l.crossings.values()
        ],
        "beta": [
            {"index": b.index, "arcs": [
                {"from": {"crossing": a.start.crossing, "copy": a.start.copy},
                 "to": {"crossing": a.end.crossing, "copy": a.end.copy},
                 "via": [_pt_out(p) for p in a.via]}
                for a in b.arcs]}
            for b in l.beta
        ],
        "matching": list(l.matching),
    }


def dump_layout(l: RectLayout) -> str:
    return json.dumps(layout_to_json(l), indent=1)


# ---------------------------------------------------------------------------
# tangent and sign conventions


def alpha_tangent(circle: Circle, p: Point, copy: str) -> Point:
    """Oriented tangent of the alpha copy at (the ray through) ``p``."""
    rx, ry = sub(p, circle.center)
    ccw = (-ry, rx)
    return ccw if copy == PRIME else (-ccw[0], -ccw[1])


def beta_direction_at(l: RectLayout, cid: str, copy: str) -> Point | None:
    """Horizontal direction of the beta strand at one copy of a crossing."""
    for _, _, arc in l.all_arcs():
        pts = l.arc_points(arc)
        if arc.start == ArcEnd(cid, copy):
            return sub(pts[1], pts[0])
        if arc.end == ArcEnd(cid, copy):
            return sub(pts[-1], pts[-2])
    return None


def crossing_sign(l: RectLayout, cid: str, copy: str) -> int:
    c = l.crossings[cid]
    circle = l.alpha_pair(c.alpha).circle(copy)
    t_alpha = alpha_tangent(circle, c.point(copy), copy)
    t_beta = beta_direction_at(l, cid, copy)
    s = sign(cross(t_alpha, t_beta))
    if s == 0:
        raise DegenerateTangent(f"crossing {cid!r} ({copy}): alpha tangent is parallel to beta")
    return s


def _ccw_order(l: RectLayout, i: int, copy: str) -> list[str]:
    center = l.alpha_pair(i).circle(copy).center
    ids = [cid for cid, c in l.crossings.items() if c.alpha == i]
    return sorted(ids, key=lambda cid: angle_key(sub(l.crossings[cid].point(copy), center)))


def _same_cyclic_word(a: Sequence, b: Sequence) -> bool:
    if len(a) != len(b):
        return False
    if not a:
        return True
    doubled = list(b) + list(b)
    n = len(a)
    return any(doubled[k:k + n] == list(a) for k in range(n))


# ---------------------------------------------------------------------------
# validation


def validate_layout(l: RectLayout) -> ValidationReport:
    report = ValidationReport()
    _check_structure(l, report)
    if not report.ok:
        return report
    _check_circles(l, report)
    _check_arc_shapes(l, report)
    if not report.ok:
        return report
    _check_embedding(l, report)
    _check_crossings(l, report)
    return report


def _check_structure(l: RectLayout, report: ValidationReport) -> None:
    g = l.genus
    if [a.index for a in l.alpha] != list(range(1, g + 1)):
        report.add("alpha count", "layout", f"expected alpha pairs 1..{g}")
    if [b.index for b in l.beta] != list(range(1, g + 1)):
        report.add("beta count", "layout", f"expected beta curves 1..{g}")
    if g and len(set(l.matching)) != g:
        report.add("matching", "layout", f"matching must list {g} distinct crossings")

    ends: dict[str, list[str]] = {}
    starts: dict[str, list[str]] = {}
    owner: dict[str, set[int]] = {}
    for curve in l.beta:
        arcs = curve.arcs
        if not arcs:
            report.add("empty curve", f"beta_{curve.index}", "beta curve has no arcs")
            continue
        for k, arc in enumerate(arcs):
            nxt = arcs[(k + 1) % len(arcs)]
            if arc.end.crossing != nxt.start.crossing or arc.end.copy == nxt.start.copy:
                report.add("arc chain", f"beta_{curve.index}",
                           f"arc {k} ends at {arc.end.crossing}/{arc.end.copy} but the next arc starts at "
                           f"{nxt.start.crossing}/{nxt.start.copy}")
            starts.setdefault(arc.start.crossing, []).append(arc.start.copy)
            ends.setdefault(arc.end.crossing, []).append(arc.end.copy)
            owner.setdefault(arc.start.crossing, set()).add(curve.index)
            owner.setdefault(arc.end.crossing, set()).add(curve.index)
    for cid in sorted(l.crossings):
        copies = sorted(starts.get(cid, []) + ends.get(cid, []))
        if copies != [PRIME, SECOND]:
            report.add("arc ends", cid, f"crossing must be reached once at each copy, got {copies}")
        if len(owner.get(cid, ())) > 1:
            report.add("crossing in multiple beta curves", cid, f"on beta curves {sorted(owner[cid])}")
    for cid in l.matching:
        if cid not in l.crossings:
            report.add("matching", cid, "unknown crossing")
    if report.ok and g:
        beta_of = l.beta_index_of()
        alphas = sorted(l.crossings[c].alpha for c in l.matching)
        betas = sorted(beta_of[c] for c in l.matching)
        if alphas != list(range(1, g + 1)) or betas != list(range(1, g + 1)):
            report.add("matching", "layout", "matching must meet every alpha and every beta curve once")


def _check_circles(l: RectLayout, report: ValidationReport) -> None:
    circles = [(f"alpha_{a.index}/{copy}", a.circle(copy)) for a in l.alpha for copy in COPIES]
    for name, c in circles:
        if c.radius <= 0:
            report.add("circle radius", name, "radius must be positive")
            continue
        (x, y), r = c.center, c.radius
        if not (l.rect.xmin < x - r and x + r < l.rect.xmax and l.rect.ymin < y - r and y + r < l.rect.ymax):
            report.add("circle containment", name, "circle must lie strictly inside the rectangle")
    for n, (name1, c1) in enumerate(circles):
        for name2, c2 in circles[n + 1:]:
            if norm2(sub(c1.center, c2.center)) <= (c1.radius + c2.radius) ** 2:
                report.add("circle overlap", f"{name1},{name2}", "circles must be disjoint")


def _check_arc_shapes(l: RectLayout, report: ValidationReport) -> None:
    for j, k, arc in l.all_arcs():
        name = f"beta_{j}/arc{k}"
        pts = l.arc_points(arc)
        dirs = polyline_directions(pts)
        if any(d == (0, 0) for d in dirs):
            report.add("degenerate segment", name, "repeated consecutive point")
            continue
        if dirs[0][1] != 0 or dirs[-1][1] != 0:
            report.add("non-horizontal arc end", name, "first and last segments must be horizontal")
        for n, (u, v) in enumerate(zip(dirs, dirs[1:]), 1):
            if cross(u, v) == 0 and dot(u, v) < 0:
                report.add("antiparallel vertex", name, f"polyline reverses at vertex {n}")
    # direction continuity through each handle
    if report.ok:
        for cid in sorted(l.crossings):
            d1 = beta_direction_at(l, cid, PRIME)
            d2 = beta_direction_at(l, cid, SECOND)
            if sign(d1[0]) != sign(d2[0]):
                report.add("direction continuity", cid,
                           "beta must keep its horizontal direction through the handle")


def _check_embedding(l: RectLayout, report: ValidationReport) -> None:
    arcs = [(f"beta_{j}/arc{k}", l.arc_points(arc), arc) for j, k, arc in l.all_arcs()]
    for name, pts, arc in arcs:
        if not all(l.rect.strictly_contains(p) for p in pts):
            report.add("arc outside rectangle", name, "arc must stay strictly inside the rectangle")
        segs = list(zip(pts, pts[1:]))
        hit = False
        for a in range(len(segs)):
            for b in range(a + 1, len(segs)):
                if b == a + 1:
                    # adjacent segments share exactly their common vertex unless
                    # they fold back, which the antiparallel rule reports
                    continue
                if segments_intersect(*segs[a], *segs[b]):
                    hit = True
        if hit:
            report.add("arc self-intersection", name, "polyline crosses itself")
    for n, (name1, pts1, _) in enumerate(arcs):
        for name2, pts2, _ in arcs[n + 1:]:
            if any(segments_intersect(p, q, r, s)
                   for p, q in zip(pts1, pts1[1:]) for r, s in zip(pts2, pts2[1:])):
                report.add("arc intersection", f"{name1},{name2}", "beta arcs must be disjoint")

    # arcs against the alpha disks
    for name, pts, arc in arcs:
        segs = list(zip(pts, pts[1:]))
        for a in l.alpha:
            for copy in COPIES:
                circle = a.circle(copy)
                r2 = circle.radius ** 2
                for n, (p, q) in enumerate(segs):
                    own = []
                    if n == 0 and arc.start.copy == copy and l.crossings[arc.start.crossing].alpha == a.index:
                        own.append((p, q))
                    if n == len(segs) - 1 and arc.end.copy == copy and l.crossings[arc.end.crossing].alpha == a.index:
                        own.append((q, p))
                    if own:
                        ok = all(_touches_only_at_end(circle, att, other) for att, other in own)
                        if len(own) == 2:
                            ok = ok and segment_dist2(circle.center, p, q) >= r2
                    else:
                        ok = segment_dist2(circle.center, p, q) > r2
                    if not ok:
                        report.add("arc meets circle", f"{name}",
                                   f"segment {n} enters the disk of alpha_{a.index}/{copy}")


def _touches_only_at_end(circle: Circle, att: Point, other: Point) -> bool:
    c, r2 = circle.center, circle.radius ** 2
    ac = sub(att, c)
    d2 = norm2(ac)
    if d2 < r2:
        return False
    if d2 > r2:
        return segment_dist2(c, att, other) > r2
    return dot(ac, sub(other, att)) > 0


def _check_crossings(l: RectLayout, report: ValidationReport) -> None:
    fav = set(l.matching)
    for cid in sorted(l.crossings):
        c = l.crossings[cid]
        pair = l.alpha_pair(c.alpha)
        for copy in COPIES:
            circle = pair.circle(copy)
            p = c.point(copy)
            if norm2(sub(p, circle.center)) < circle.radius ** 2:
                report.add("attachment inside circle", f"{cid}/{copy}", "attachment lies inside its circle")
            t = alpha_tangent(circle, p, copy)
            if t[1] == 0:
                report.add("degenerate tangent", f"{cid}/{copy}",
                           "alpha tangent is horizontal, parallel to beta")
                continue
            if cid in fav and t[1] < 0:
                report.add("favourite placement", f"{cid}/{copy}",
                           "matching crossing must sit where the alpha tangent points up")
            if cid not in fav and t[1] > 0:
                report.add("favourite placement", f"{cid}/{copy}",
                           "non-matching crossing must sit where the alpha tangent points down")
            # the strand must actually cross the circle at this point
            d = beta_direction_at(l, cid, copy)
            outward = sign(p[0] - circle.center[0])
            arriving = any(arc.end == ArcEnd(cid, copy) for _, _, arc in l.all_arcs())
            facing = -outward if arriving else outward
            if sign(d[0]) != facing:
                report.add("attachment facing", f"{cid}/{copy}",
                           "beta must run into the circle at an arc end and out of it at an arc start")
        if not report.ok:
            continue
        try:
            if crossing_sign(l, cid, PRIME) != crossing_sign(l, cid, SECOND):
                report.add("sign mismatch", cid, "sign differs between the two copies")
        except DegenerateTangent as exc:
            report.add("degenerate tangent", cid, str(exc))
    for a in l.alpha:
        prime = _ccw_order(l, a.index, PRIME)
        second = list(reversed(_ccw_order(l, a.index, SECOND)))
        if not _same_cyclic_word(prime, second):
            report.add("cyclic order mismatch", f"alpha_{a.index}",
                       f"prime counterclockwise order {prime} differs from second clockwise order {second}")


def require_valid(l: RectLayout) -> None:
    report = validate_layout(l)
    if not report.ok:
        raise InvalidLayout(report)


# ---------------------------------------------------------------------------
# tangent degrees


def de_arc(l: RectLayout, arc: BetaArc) -> HalfInt:
    return turning_half_turns(polyline_directions(l.arc_points(arc)))


def de_beta(l: RectLayout, j: int) -> HalfInt:
    total = HalfInt(0)
    for arc in l.beta_curve(j).arcs:
        total = total + de_arc(l, arc)
    if total.half_turns % 2:
        raise OddBetaDegree(f"beta_{j} has half-integer total degree {total}")
    return total


def de_chain(l: RectLayout, j: int, start: str, stop: str) -> HalfInt:
    """Degree along beta_j from crossing ``start`` to crossing ``stop``."""
    arcs = l.beta_curve(j).arcs
    if start == stop:
        return HalfInt(0)
    k0 = next((k for k, a in enumerate(arcs) if a.start.crossing == start), None)
    if k0 is None or all(a.start.crossing != stop for a in arcs):
        raise UnknownReference(f"crossings {start!r}, {stop!r} are not both on beta_{j}")
    total = HalfInt(0)
    k = k0
    while True:
        arc = arcs[k]
        total = total + de_arc(l, arc)
        if arc.end.crossing == stop:
            return total
        k = (k + 1) % len(arcs)


# ---------------------------------------------------------------------------
# derivation


def derive_combinatorics(l: RectLayout, check: bool = True) -> CombinatorialDiagram:
    if check:
        require_valid(l)
    beta_of = l.beta_index_of()
    crossings = []
    for cid in sorted(l.crossings):
        s1 = crossing_sign(l, cid, PRIME)
        s2 = crossing_sign(l, cid, SECOND)
        if s1 != s2:
            raise SignMismatch(f"crossing {cid!r}: sign {s1} at prime copy, {s2} at second copy")
        crossings.append(Crossing(cid, l.crossings[cid].alpha, beta_of[cid], s1))
    alpha_orders = [_ccw_order(l, a.index, PRIME) for a in l.alpha]
    beta_orders = [[arc.start.crossing for arc in b.arcs] for b in l.beta]
    half_turns = [[de_arc(l, arc).half_turns for arc in b.arcs] for b in l.beta]
    return make_diagram(l.genus, crossings, alpha_orders, beta_orders, half_turns,
                        l.matching if l.genus else ())


def layout_hash(l: RectLayout) -> str:
    blob = json.dumps(layout_to_json(l), sort_keys=True).encode()
    return hashlib.sha256(blob).hexdigest()[:16]


# ---------------------------------------------------------------------------
# transformations used by tests and by the connected-sum construction


def map_points(l: RectLayout, f) -> RectLayout:
    """Apply an orientation-preserving similarity ``f`` to every coordinate."""
    lo, hi = f((l.rect.xmin, l.rect.ymin)), f((l.rect.xmax, l.rect.ymax))
    scale = (hi[0] - lo[0]) / (l.rect.xmax - l.rect.xmin)

    def circ(c: Circle) -> Circle:
        return Circle(f(c.center), c.radius * scale)

    return RectLayout(
        l.genus,
        Rect(lo[0], lo[1], hi[0], hi[1]),
        tuple(AlphaPair(a.index, circ(a.prime), circ(a.second)) for a in l.alpha),
        {cid: replace(c, prime_point=f(c.prime_point), second_point=f(c.second_point))
         for cid, c in l.crossings.items()},
        tuple(BetaCurve(b.index, tuple(replace(a, via=tuple(f(p) for p in a.via)) for a in b.arcs))
              for b in l.beta),
        l.matching,
        l.name,
    )


def translate(l: RectLayout, dx, dy) -> RectLayout:
    dx, dy = Fraction(dx), Fraction(dy)
    return map_points(l, lambda p: (p[0] + dx, p[1] + dy))


def scale(l: RectLayout, k) -> RectLayout:
    k = Fraction(k)
    if k <= 0:
        raise ValueError("scale factor must be positive")
    return map_points(l, lambda p: (p[0] * k, p[1] * k))


def reverse_beta(l: RectLayout, j: int) -> RectLayout:
    """Reverse the orientation of beta_j (arc order, ends and via points)."""
    curves = []
    for b in l.beta:
        if b.index == j:
            arcs = tuple(BetaArc(a.end, a.start, tuple(reversed(a.via))) for a in reversed(b.arcs))
            b = BetaCurve(b.index, arcs)
        curves.append(b)
    return replace(l, beta=tuple(curves))


def connected_sum(first: RectLayout, second: RectLayout, suffix: str = "'") -> RectLayout:
    """Place ``second`` to the right of ``first`` inside one rectangle.

    Crossing ids of ``second`` that clash with ids of ``first`` get ``suffix``
    appended; its alpha and beta curves are renumbered after those of ``first``.
    """
    dx = first.rect.xmax - second.rect.xmin
    moved = translate(second, dx, 0)
    g1 = first.genus
    rename = {cid: (cid + suffix if cid in first.crossings else cid) for cid in moved.crossings}

    def end(e: ArcEnd) -> ArcEnd:
        return ArcEnd(rename[e.crossing], e.copy)

    crossings = dict(first.crossings)
    for cid, c in moved.crossings.items():
        crossings[rename[cid]] = replace(c, id=rename[cid], alpha=c.alpha + g1)
    rect = Rect(first.rect.xmin, min(first.rect.ymin, moved.rect.ymin),
                moved.rect.xmax, max(first.rect.ymax, moved.rect.ymax))
    return RectLayout(
        g1 + second.genus,
        rect,
        first.alpha + tuple(replace(a, index=a.index + g1) for a in moved.alpha),
        crossings,
        first.beta + tuple(
            BetaCurve(b.index + g1, tuple(BetaArc(end(a.start), end(a.end), a.via) for a in b.arcs))
            for b in moved.beta),
        first.matching + tuple(rename[c] for c in moved.matching),
        f"{first.name}#{second.name}",
    )
