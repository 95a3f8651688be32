"""The Theta invariant of a combed rational homology sphere from a Heegaard diagram.

    Theta = l2(D) + lk(L(m), L(m)_par) - e(D, w, m)

``l2`` and ``lk`` are evaluations of 2-cycles built from flow lines; both are
computed through the basepoint-dependent pairing ``ell(c, d)``.  The Euler
term ``e`` needs the tangent degrees of the beta arcs in a rectangular layout
(or the ``arc_half_turns`` of a combinatorial diagram carrying them).
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .diagram import (
    ALPHA,
    BETA,
    BasepointChoice,
    CombinatorialDiagram,
    Matching,
    arc_closed_half,
    arc_half_half,
    beta_partner,
    check_basepoints,
    check_matching,
    cycle_check,
    default_basepoints,
    diagram_to_json,
    j_matrix,
    l_cycle_coefficients,
    pair,
    validate_diagram,
)
from .errors import HeegaardError, InvalidLayout, MatchingMismatch, NotACycle
from .layout import RectLayout, de_beta, de_chain, derive_combinatorics, validate_layout
from .linalg import RatMatrix

Coefficients = Mapping[tuple[str, str], Fraction]


class EllPairing:
    """All values ell(c, d) for one diagram and one basepoint choice, memoized."""

    def __init__(self, d: CombinatorialDiagram, bp: BasepointChoice, J: RatMatrix | None = None):
        check_basepoints(d, bp)
        self.d = d
        self.bp = bp
        self.J = j_matrix(d) if J is None else J
        self._cache: dict[tuple[str, str], Fraction] = {}
        g = d.genus
        self._alpha_arc = {}
        self._beta_arc = {}
        # u[c][j] = <[p(alpha(c)), c|, beta_j>,  v[e][i] = <alpha_i, [p(beta(e)), e|>
        self._u = {}
        self._v = {}
        for cid, c in d.crossings.items():
            a = arc_closed_half(d, (ALPHA, c.alpha), bp.of((ALPHA, c.alpha)), cid)
            b = arc_closed_half(d, (BETA, c.beta), bp.of((BETA, c.beta)), cid)
            self._alpha_arc[cid] = a
            self._beta_arc[cid] = b
            self._u[cid] = [pair(d, a, (BETA, j)) for j in range(1, g + 1)]
            self._v[cid] = [pair(d, (ALPHA, i), b) for i in range(1, g + 1)]

    def __call__(self, c: str, e: str) -> Fraction:
        key = (c, e)
        if key not in self._cache:
            g = self.d.genus
            u, v = self._u[c], self._v[e]
            correction = sum(
                (self.J.at(j, i) * u[j - 1] * v[i - 1]
                 for i in range(1, g + 1) for j in range(1, g + 1)),
                Fraction(0),
            )
            self._cache[key] = pair(self.d, self._alpha_arc[c], self._beta_arc[e]) - correction
        return self._cache[key]

    def table(self) -> dict[tuple[str, str], Fraction]:
        ids = self.d.crossing_ids()
        return {(c, e): self(c, e) for c in ids for e in ids}


def ell(d: CombinatorialDiagram, J: RatMatrix | None, bp: BasepointChoice, c: str, e: str) -> Fraction:
    return EllPairing(d, bp, J)(c, e)


def evaluate_cycle(d: CombinatorialDiagram, bp: BasepointChoice, coeffs: Coefficients,
                   pairing: EllPairing | None = None) -> Fraction:
    """Homology class, as a multiple of the generator, of sum g_cd gamma(c) x gamma(d)_par."""
    if not cycle_check(d, coeffs):
        raise NotACycle("coefficients do not define a 2-cycle")
    if pairing is None:
        pairing = EllPairing(d, bp)
    forward = sum((v * pairing(c, e) for (c, e), v in coeffs.items() if v), Fraction(0))
    backward = sum((v * pairing(e, c) for (c, e), v in coeffs.items() if v), Fraction(0))
    if forward != backward:
        raise HeegaardError(f"cycle evaluation is asymmetric: {forward} != {backward}")
    return forward


def ell_two_coefficients(d: CombinatorialDiagram, J: RatMatrix | None = None) -> dict[tuple[str, str], Fraction]:
    J = j_matrix(d) if J is None else J
    out = {}
    for cid, c in d.crossings.items():
        for eid, e in d.crossings.items():
            v = J.at(c.beta, e.alpha) * J.at(e.beta, c.alpha) * c.sign * e.sign
            if cid == eid:
                v -= J.at(c.beta, c.alpha) * c.sign
            if v:
                out[(cid, eid)] = v
    return out


def lk_coefficients(d: CombinatorialDiagram, m: Matching, J: RatMatrix | None = None) -> dict[tuple[str, str], Fraction]:
    t = l_cycle_coefficients(d, m, J)
    return {(c, e): t[c] * t[e] for c in t for e in t if t[c] and t[e]}


def ell_two(d: CombinatorialDiagram, bp: BasepointChoice, pairing: EllPairing | None = None) -> Fraction:
    pairing = pairing or EllPairing(d, bp)
    return evaluate_cycle(d, bp, ell_two_coefficients(d, pairing.J), pairing)


def lk_parallel(d: CombinatorialDiagram, bp: BasepointChoice, m: Matching,
                pairing: EllPairing | None = None) -> Fraction:
    m = check_matching(d, m.crossings)
    pairing = pairing or EllPairing(d, bp)
    return evaluate_cycle(d, bp, lk_coefficients(d, m, pairing.J), pairing)


def lk_parallel_expanded(d: CombinatorialDiagram, bp: BasepointChoice, m: Matching) -> Fraction:
    """The three-sum expansion of lk; kept as an algebraic cross-check."""
    p = EllPairing(d, bp)
    J = p.J
    ids = d.crossing_ids()
    w = {cid: J.at(d.crossings[cid].beta, d.crossings[cid].alpha) * d.crossings[cid].sign for cid in ids}
    first = sum((p(a, b) for a in m.crossings for b in m.crossings), Fraction(0))
    second = sum((w[c] * w[e] * p(c, e) for c in ids for e in ids), Fraction(0))
    third = sum((w[c] * (p(a, c) + p(c, a)) for a in m.crossings for c in ids), Fraction(0))
    return first + second - third


# ---------------------------------------------------------------------------
# Euler term


class _Degrees:
    """Tangent degrees of beta arcs, read from a layout or from arc_half_turns."""

    def __init__(self, d: CombinatorialDiagram, layout: RectLayout | None):
        self.d = d
        self.layout = layout
        if layout is None and d.arc_half_turns is None:
            raise MatchingMismatch("no tangent degrees available: need a layout or arc_half_turns")

    def beta(self, j: int) -> Fraction:
        if self.layout is not None:
            return de_beta(self.layout, j).value
        return Fraction(sum(self.d.arc_half_turns[j - 1]), 2)

    def chain(self, j: int, start: str, stop: str) -> Fraction:
        if self.layout is not None:
            return de_chain(self.layout, j, start, stop).value
        if start == stop:
            return Fraction(0)
        order = self.d.beta_orders[j - 1]
        turns = self.d.arc_half_turns[j - 1]
        k = order.index(start)
        total = 0
        while True:
            total += turns[k]
            k = (k + 1) % len(order)
            if order[k] == stop:
                return Fraction(total, 2)


def _layout_matching(d: CombinatorialDiagram, m: Matching) -> None:
    if d.matching is None or set(d.matching) != m.as_set():
        raise MatchingMismatch(
            f"the Euler term needs the matching drawn in the layout ({_fmt_set(d.matching)}), got {m}")


def _fmt_set(ids) -> str:
    return "{" + ",".join(sorted(ids or ())) + "}"


def de_crossing(l: RectLayout | None, d: CombinatorialDiagram, J: RatMatrix | None, m: Matching, c: str,
                degrees: _Degrees | None = None) -> Fraction:
    _layout_matching(d, m)
    J = j_matrix(d) if J is None else J
    degrees = degrees or _Degrees(d, l)
    j = d.crossings[c].beta
    fav = beta_partner(d, m, j)
    arc = arc_half_half(d, (BETA, j), fav, c)
    g = d.genus
    value = degrees.chain(j, fav, c)
    for r in range(1, g + 1):
        meet = pair(d, (ALPHA, r), arc)
        if meet:
            for s in range(1, g + 1):
                value -= J.at(s, r) * meet * degrees.beta(s)
    return value


def euler_term(l: RectLayout | None, d: CombinatorialDiagram, J: RatMatrix | None, m: Matching) -> Fraction:
    _layout_matching(d, m)
    J = j_matrix(d) if J is None else J
    degrees = _Degrees(d, l)
    total = Fraction(0)
    for cid, c in sorted(d.crossings.items()):
        w = J.at(c.beta, c.alpha) * c.sign
        if w:
            total += w * de_crossing(l, d, J, m, cid, degrees)
    return total


# ---------------------------------------------------------------------------
# report


@dataclass
class ThetaReport:
    ell2: Fraction
    lk: Fraction
    euler: Fraction | None
    theta: Fraction | None
    matching: Matching
    basepoints: BasepointChoice
    diagram_hash: str
    lam: Fraction | None = None
    p1: Fraction | None = None
    source: str = ""
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        def q(x):
            return None if x is None else str(x)

        doc = {
            "ell2": q(self.ell2),
            "lk": q(self.lk),
            "euler": q(self.euler),
            "theta": q(self.theta),
            "matching": sorted(self.matching.crossings),
            "basepoints": {
                **{f"alpha_{i}": c for i, c in enumerate(self.basepoints.alpha, 1)},
                **{f"beta_{j}": c for j, c in enumerate(self.basepoints.beta, 1)},
            },
            "diagram_hash": self.diagram_hash,
        }
        if self.lam is not None:
            doc["lambda"] = q(self.lam)
            doc["p1"] = q(self.p1)
        if self.notes:
            doc["notes"] = list(self.notes)
        return doc


def diagram_hash(d: CombinatorialDiagram) -> str:
    blob = json.dumps(diagram_to_json(d), sort_keys=True).encode()
    return hashlib.sha256(blob).hexdigest()[:16]


def theta(source: RectLayout | CombinatorialDiagram, bp: BasepointChoice | None = None,
          matching: Matching | None = None, lam: Fraction | None = None) -> ThetaReport:
    """Compute l2, lk, e and Theta.

    ``source`` is a rectangular layout, or a combinatorial diagram that carries
    ``arc_half_turns`` and a matching.  A ``matching`` different from the drawn
    one still yields l2 and lk, but e and Theta are left unset.
    """
    if isinstance(source, RectLayout):
        report = validate_layout(source)
        if not report.ok:
            raise InvalidLayout(report)
        d = derive_combinatorics(source, check=False)
        layout = source
    else:
        d = source
        report = validate_diagram(d)
        if not report.ok:
            raise InvalidLayout(report)
        layout = None
    J = j_matrix(d)
    drawn = check_matching(d, d.matching) if d.matching is not None and len(d.matching) == d.genus else None
    m = check_matching(d, matching.crossings) if matching is not None else drawn
    if m is None:
        raise MatchingMismatch("no matching given and none recorded in the diagram")
    bp = bp or default_basepoints(d, m)
    pairing = EllPairing(d, bp, J)
    l2 = ell_two(d, bp, pairing)
    lk = lk_parallel(d, bp, m, pairing)
    notes = []
    euler = value = None
    capable = drawn is not None and drawn.as_set() == m.as_set() and (layout is not None or d.arc_half_turns is not None)
    if capable:
        euler = euler_term(layout, d, J, m)
        value = l2 + lk - euler
    else:
        notes.append(f"matching {m} is not the one drawn in the layout; e and Theta unavailable")
    p1 = None
    if lam is not None and value is not None:
        p1 = 4 * value - 24 * lam
    return ThetaReport(l2, lk, euler, value, m, bp, diagram_hash(d), lam, p1,
                       "layout" if layout is not None else "combinatorial", notes)
