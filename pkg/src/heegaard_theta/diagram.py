"""Combinatorial Heegaard diagrams.

A diagram is recorded by its crossings (with the alpha and beta curve each one
lies on and its sign) together with the cyclic order in which every curve
meets its crossings.  Nothing here knows about the plane; geometric input is
turned into a :class:`CombinatorialDiagram` by :mod:`heegaard_theta.layout`.

Curves are named by pairs ``("alpha", i)`` / ``("beta", j)`` with 1-based
indices.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import (
    CapExceeded,
    CrossingNotOnCurve,
    InvalidMatching,
    NotQSphere,
    ParseError,
    SingularMatrix,
)
from .linalg import RatMatrix, mat_inverse
from .validation import ValidationReport

ALPHA = "alpha"
BETA = "beta"

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class Crossing:
    id: str
    alpha: int
    beta: int
    sign: int


@dataclass(frozen=True)
class CombinatorialDiagram:
    genus: int
    crossings: Mapping[str, Crossing]
    alpha_orders: tuple[tuple[str, ...], ...]
    beta_orders: tuple[tuple[str, ...], ...]
    # arc_half_turns[j-1][k]: twice the tangent degree of the beta_j arc that
    # runs from beta_orders[j-1][k] to the next crossing.
    arc_half_turns: tuple[tuple[int, ...], ...] | None = None
    matching: tuple[str, ...] | None = None

    def crossing_ids(self) -> list[str]:
        return sorted(self.crossings)

    def order(self, curve: tuple[str, int]) -> tuple[str, ...]:
        family, index = curve
        orders = self.alpha_orders if family == ALPHA else self.beta_orders
        if not 1 <= index <= len(orders):
            raise CrossingNotOnCurve(f"no curve {family}_{index}")
        return orders[index - 1]

    def sign(self, cid: str) -> int:
        return self.crossings[cid].sign


@dataclass(frozen=True)
class ArcWeighting:
    """Crossing weights in {0, 1/2, 1} describing a (half-)arc on one curve."""

    curve: tuple[str, int]
    weights: Mapping[str, Fraction] = field(default_factory=dict)

    def __getitem__(self, cid: str) -> Fraction:
        return self.weights.get(cid, Fraction(0))


@dataclass(frozen=True)
class Matching:
    """One crossing per alpha curve, listed in alpha order (``crossings[i-1]`` is c_i)."""

    crossings: tuple[str, ...]

    def on_alpha(self, i: int) -> str:
        return self.crossings[i - 1]

    def as_set(self) -> frozenset[str]:
        return frozenset(self.crossings)

    def __str__(self) -> str:
        return "{" + ",".join(sorted(self.crossings)) + "}"


@dataclass(frozen=True)
class BasepointChoice:
    alpha: tuple[str, ...]
    beta: tuple[str, ...]

    def of(self, curve: tuple[str, int]) -> str:
        family, index = curve
        return (self.alpha if family == ALPHA else self.beta)[index - 1]


# ---------------------------------------------------------------------------
# construction and (de)serialization


def make_diagram(genus, crossings: Iterable, alpha_orders, beta_orders,
                 arc_half_turns=None, matching=None) -> CombinatorialDiagram:
    table = {}
    for c in crossings:
        if not isinstance(c, Crossing):
            c = Crossing(str(c[0]), int(c[1]), int(c[2]), int(c[3]))
        table[c.id] = c
    return CombinatorialDiagram(
        genus=genus,
        crossings=table,
        alpha_orders=tuple(tuple(o) for o in alpha_orders),
        beta_orders=tuple(tuple(o) for o in beta_orders),
        arc_half_turns=None if arc_half_turns is None else tuple(tuple(int(x) for x in o) for o in arc_half_turns),
        matching=None if matching is None else tuple(matching),
    )


def diagram_from_json(doc: dict) -> CombinatorialDiagram:
    try:
        genus = int(doc["genus"])
        crossings = []
        seen = set()
        for c in doc["crossings"]:
            cid = str(c["id"])
            if cid in seen:
                raise ParseError(f"duplicate crossing id {cid!r}")
            seen.add(cid)
            crossings.append(Crossing(cid, int(c["alpha"]), int(c["beta"]), int(c["sign"])))
        d = make_diagram(
            genus,
            crossings,
            doc["alpha_orders"],
            doc["beta_orders"],
            doc.get("arc_half_turns"),
            doc.get("matching"),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed combinatorial diagram: {exc!r}") from exc
    return d


def diagram_to_json(d: CombinatorialDiagram) -> dict:
    doc = {
        "genus": d.genus,
        "crossings": [
            {"id": c.id, "alpha": c.alpha, "beta": c.beta, "sign": c.sign}
            for c in (d.crossings[k] for k in d.crossing_ids())
        ],
        "alpha_orders": [list(o) for o in d.alpha_orders],
        "beta_orders": [list(o) for o in d.beta_orders],
    }
    if d.arc_half_turns is not None:
        doc["arc_half_turns"] = [list(o) for o in d.arc_half_turns]
    if d.matching is not None:
        doc["matching"] = list(d.matching)
    return doc


def load_diagram(text: str) -> CombinatorialDiagram:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from exc
    return diagram_from_json(doc)


# ---------------------------------------------------------------------------
# validation


def validate_diagram(d: CombinatorialDiagram) -> ValidationReport:
    report = ValidationReport()
    g = d.genus
    if g < 0:
        report.add("genus", "diagram", "genus must be non-negative")
        return report
    for family, orders in ((ALPHA, d.alpha_orders), (BETA, d.beta_orders)):
        if len(orders) != g:
            report.add("curve count", family, f"expected {g} {family} curves, got {len(orders)}")
    for c in d.crossings.values():
        if c.sign not in (1, -1):
            report.add("sign", c.id, f"sign must be +1 or -1, got {c.sign}")
        if not (1 <= c.alpha <= g and 1 <= c.beta <= g):
            report.add("curve index", c.id, "alpha/beta index out of range")

    for family, orders, attr in ((ALPHA, d.alpha_orders, "alpha"), (BETA, d.beta_orders, "beta")):
        where: dict[str, list[int]] = {}
        for idx, order in enumerate(orders, 1):
            if not order:
                report.add("empty curve", f"{family}_{idx}", "curve meets no crossing")
            for cid in order:
                where.setdefault(cid, []).append(idx)
        for cid, places in sorted(where.items()):
            if cid not in d.crossings:
                report.add("unknown crossing", f"{family}_{places[0]}", f"unknown crossing {cid!r}")
                continue
            if len(set(places)) > 1:
                report.add(f"crossing in multiple {family} curves", cid,
                           f"listed on {family} curves {sorted(set(places))}")
            elif len(places) > 1:
                report.add("repeated crossing", cid, f"listed twice on {family}_{places[0]}")
            elif places[0] != getattr(d.crossings[cid], attr):
                report.add(f"{family} index mismatch", cid,
                           f"listed on {family}_{places[0]} but declared on {family}_{getattr(d.crossings[cid], attr)}")
        for cid in sorted(set(d.crossings) - set(where)):
            report.add(f"missing from {family} orders", cid, f"crossing not listed on any {family} curve")

    if d.arc_half_turns is not None:
        if len(d.arc_half_turns) != len(d.beta_orders):
            report.add("arc_half_turns", "diagram", "one list per beta curve expected")
        else:
            for j, (turns, order) in enumerate(zip(d.arc_half_turns, d.beta_orders), 1):
                if len(turns) != len(order):
                    report.add("arc_half_turns", f"beta_{j}", "one entry per arc expected")
                elif sum(turns) % 2:
                    report.add("odd beta degree", f"beta_{j}",
                               f"half-turns sum to {sum(turns)}, degree is not an integer")
    if d.matching is not None:
        try:
            check_matching(d, d.matching)
        except InvalidMatching as exc:
            report.add("matching", "diagram", str(exc))
    return report


# ---------------------------------------------------------------------------
# intersection matrix and J


def intersection_matrix(d: CombinatorialDiagram) -> RatMatrix:
    """Entry ``[i-1][j-1]`` is the algebraic intersection of alpha_i and beta_j."""
    g = d.genus
    rows = [[0] * g for _ in range(g)]
    for c in d.crossings.values():
        rows[c.alpha - 1][c.beta - 1] += c.sign
    return RatMatrix.from_rows(rows)


def j_matrix(d: CombinatorialDiagram) -> RatMatrix:
    """Inverse of the intersection matrix; entry ``[j-1][i-1]`` is J_{ji}."""
    try:
        return mat_inverse(intersection_matrix(d))
    except SingularMatrix as exc:
        raise NotQSphere("not a rational homology sphere: intersection matrix is singular") from exc


# ---------------------------------------------------------------------------
# arcs and the half-weighted pairing


def _walk(d: CombinatorialDiagram, curve, a: str, b: str) -> list[str]:
    order = d.order(curve)
    for x in (a, b):
        if x not in order:
            raise CrossingNotOnCurve(f"crossing {x!r} is not on {curve[0]}_{curve[1]}")
    n = len(order)
    start = order.index(a)
    path = [a]
    k = start
    while order[k] != b:
        k = (k + 1) % n
        path.append(order[k])
    return path


def arc_closed_half(d: CombinatorialDiagram, curve, a: str, b: str) -> ArcWeighting:
    """The arc [a,b| : a counted fully, b with weight 1/2."""
    path = _walk(d, curve, a, b)
    if a == b:
        return ArcWeighting(curve, {a: HALF})
    weights = {x: Fraction(1) for x in path[:-1]}
    weights[b] = HALF
    return ArcWeighting(curve, weights)


def arc_half_half(d: CombinatorialDiagram, curve, a: str, b: str) -> ArcWeighting:
    """The arc |a,b| : both ends with weight 1/2; |a,a| is empty."""
    path = _walk(d, curve, a, b)
    if a == b:
        return ArcWeighting(curve, {})
    weights = {x: Fraction(1) for x in path[1:-1]}
    weights[a] = HALF
    weights[b] = HALF
    return ArcWeighting(curve, weights)


def full_curve(d: CombinatorialDiagram, curve) -> ArcWeighting:
    return ArcWeighting(curve, {x: Fraction(1) for x in d.order(curve)})


def pair(d: CombinatorialDiagram, first, second) -> Fraction:
    """Half-weighted algebraic intersection of an alpha-side and a beta-side arc.

    Either argument may be an :class:`ArcWeighting` or a bare curve (taken
    whole).  The two must lie on curves of different families.
    """
    if not isinstance(first, ArcWeighting):
        first = full_curve(d, first)
    if not isinstance(second, ArcWeighting):
        second = full_curve(d, second)
    if first.curve[0] == second.curve[0]:
        raise ValueError("pairing needs one alpha and one beta arc")
    total = Fraction(0)
    for cid, w in first.weights.items():
        if w:
            v = second[cid]
            if v:
                total += w * v * d.crossings[cid].sign
    return total


# ---------------------------------------------------------------------------
# matchings


def check_matching(d: CombinatorialDiagram, ids: Iterable[str]) -> Matching:
    ids = list(ids)
    if len(ids) != d.genus:
        raise InvalidMatching(f"a matching needs {d.genus} crossings, got {len(ids)}")
    by_alpha: dict[int, str] = {}
    betas = set()
    for cid in ids:
        if cid not in d.crossings:
            raise InvalidMatching(f"unknown crossing {cid!r}")
        c = d.crossings[cid]
        if c.alpha in by_alpha:
            raise InvalidMatching(f"two crossings on alpha_{c.alpha}")
        if c.beta in betas:
            raise InvalidMatching(f"two crossings on beta_{c.beta}")
        by_alpha[c.alpha] = cid
        betas.add(c.beta)
    return Matching(tuple(by_alpha[i] for i in range(1, d.genus + 1)))


def beta_partner(d: CombinatorialDiagram, m: Matching, j: int) -> str:
    """The matching crossing lying on beta_j."""
    for cid in m.crossings:
        if d.crossings[cid].beta == j:
            return cid
    raise InvalidMatching(f"matching misses beta_{j}")


def enumerate_matchings(d: CombinatorialDiagram, cap: int | None = None) -> list[Matching]:
    """All matchings, sorted by their sorted crossing ids."""
    g = d.genus
    per_alpha = [sorted(d.alpha_orders[i]) for i in range(g)]
    found: list[Matching] = []
    chosen: list[str] = []
    used: set[int] = set()

    def extend(i: int) -> None:
        if i == g:
            if cap is not None and len(found) >= cap:
                raise CapExceeded(cap, len(found))
            found.append(Matching(tuple(chosen)))
            return
        for cid in per_alpha[i]:
            b = d.crossings[cid].beta
            if b not in used:
                used.add(b)
                chosen.append(cid)
                extend(i + 1)
                chosen.pop()
                used.discard(b)

    extend(0)
    return sorted(found, key=lambda m: sorted(m.crossings))


def default_basepoints(d: CombinatorialDiagram, m: Matching) -> BasepointChoice:
    return BasepointChoice(
        alpha=tuple(m.crossings),
        beta=tuple(beta_partner(d, m, j) for j in range(1, d.genus + 1)),
    )


def all_basepoints(d: CombinatorialDiagram) -> Iterable[BasepointChoice]:
    for alphas in itertools.product(*d.alpha_orders):
        for betas in itertools.product(*d.beta_orders):
            yield BasepointChoice(tuple(alphas), tuple(betas))


def check_basepoints(d: CombinatorialDiagram, bp: BasepointChoice) -> None:
    for family, chosen in ((ALPHA, bp.alpha), (BETA, bp.beta)):
        if len(chosen) != d.genus:
            raise CrossingNotOnCurve(f"need one {family} basepoint per curve")
        for idx, cid in enumerate(chosen, 1):
            if cid not in d.order((family, idx)):
                raise CrossingNotOnCurve(f"basepoint {cid!r} is not on {family}_{idx}")


# ---------------------------------------------------------------------------
# the 1-cycle L(m) and the boundary test for 2-chains


def l_cycle_coefficients(d: CombinatorialDiagram, m: Matching, J: RatMatrix | None = None) -> dict[str, Fraction]:
    """Coefficient of each flow line in L(m): [c in m] - J_{j(c)i(c)} sigma(c)."""
    if J is None:
        J = j_matrix(d)
    fav = m.as_set()
    return {
        cid: Fraction(int(cid in fav)) - J.at(c.beta, c.alpha) * c.sign
        for cid, c in sorted(d.crossings.items())
    }


def cycle_check(d: CombinatorialDiagram, coeffs: Mapping[tuple[str, str], Fraction]) -> bool:
    """True iff sum g_cd gamma(c) x gamma(d)_par has zero formal boundary.

    For each fixed crossing in one slot, the coefficients summed over the
    crossings of any alpha curve (and of any beta curve) in the other slot
    must vanish.
    """
    sums: dict[tuple, Fraction] = {}
    for (c, e), v in coeffs.items():
        if not v:
            continue
        cc, ce = d.crossings[c], d.crossings[e]
        for key in (
            ("first", e, ALPHA, cc.alpha),
            ("first", e, BETA, cc.beta),
            ("second", c, ALPHA, ce.alpha),
            ("second", c, BETA, ce.beta),
        ):
            sums[key] = sums.get(key, Fraction(0)) + v
    return all(v == 0 for v in sums.values())
