"""Random layout variants that keep every drawing convention intact.

Three moves are used:

* bump: replace a piece P..Q of a segment by P, A, B, C, Q where A and C lie
  on the segment and B is pushed slightly off it (turns +t, -2t', +t'' adding
  to zero);
* attachment: slide one attachment point, dragging the neighbouring via
  point vertically so the terminal segment stays horizontal;
* nudge: move one interior via point a little.

A move is kept only if the resulting layout still validates.
"""

from __future__ import annotations

import random
from dataclasses import replace
from fractions import Fraction

from heegaard_theta.layout import BetaArc, BetaCurve, RectLayout, validate_layout


def _set_arc(l: RectLayout, j: int, k: int, arc: BetaArc) -> RectLayout:
    curves = []
    for b in l.beta:
        if b.index == j:
            arcs = list(b.arcs)
            arcs[k] = arc
            b = BetaCurve(b.index, tuple(arcs))
        curves.append(b)
    return replace(l, beta=tuple(curves))


def bump(l: RectLayout, rng: random.Random) -> RectLayout:
    arcs = list(l.all_arcs())
    j, k, arc = rng.choice(arcs)
    pts = l.arc_points(arc)
    n = rng.randrange(len(pts) - 1)
    p, q = pts[n], pts[n + 1]
    t1, t2, t3 = sorted(rng.sample(range(1, 16), 3))
    t1, t2, t3 = Fraction(t1, 16), Fraction(t2, 16), Fraction(t3, 16)
    dx, dy = q[0] - p[0], q[1] - p[1]
    h = Fraction(rng.choice([-1, 1]) * rng.randint(1, 6), 64)

    def along(t):
        return (p[0] + t * dx, p[1] + t * dy)

    b = along(t2)
    b = (b[0] - h * dy, b[1] + h * dx)
    via = list(arc.via)
    via[n:n] = [along(t1), b, along(t3)]
    return _set_arc(l, j, k, replace(arc, via=tuple(via)))


def move_attachment(l: RectLayout, rng: random.Random) -> RectLayout:
    cid = rng.choice(sorted(l.crossings))
    copy = rng.choice(["prime", "second"])
    c = l.crossings[cid]
    p = c.point(copy)
    step = (Fraction(rng.randint(-3, 3), 100), Fraction(rng.randint(-4, 4), 100))
    new = (p[0] + step[0], p[1] + step[1])
    placed = replace(c, **{f"{copy}_point": new})
    out = replace(l, crossings={**l.crossings, cid: placed})
    for j, k, arc in l.all_arcs():
        via = list(arc.via)
        if not via:
            continue
        if arc.start.crossing == cid and arc.start.copy == copy:
            via[0] = (via[0][0], new[1])
        if arc.end.crossing == cid and arc.end.copy == copy:
            via[-1] = (via[-1][0], new[1])
        if via != list(arc.via):
            out = _set_arc(out, j, k, replace(arc, via=tuple(via)))
    return out


def nudge(l: RectLayout, rng: random.Random) -> RectLayout:
    candidates = [(j, k, arc) for j, k, arc in l.all_arcs() if len(arc.via) > 2]
    if not candidates:
        return l
    j, k, arc = rng.choice(candidates)
    n = rng.randrange(1, len(arc.via) - 1)
    x, y = arc.via[n]
    via = list(arc.via)
    via[n] = (x + Fraction(rng.randint(-5, 5), 100), y + Fraction(rng.randint(-5, 5), 100))
    return _set_arc(l, j, k, replace(arc, via=tuple(via)))


MOVES = (bump, move_attachment, nudge)


def random_variant(l: RectLayout, rng: random.Random, moves: int = 4, attempts: int = 60) -> RectLayout:
    """Apply up to ``moves`` successful random moves; at least one must succeed."""
    current = l
    done = 0
    for _ in range(attempts):
        if done == moves:
            break
        candidate = rng.choice(MOVES)(current, rng)
        if candidate is current or candidate == current:
            continue
        if validate_layout(candidate).ok:
            current = candidate
            done += 1
    if done == 0:
        raise RuntimeError("no move preserved validity")
    return current


def variants(l: RectLayout, count: int = 20, seed: int = 0) -> list[RectLayout]:
    rng = random.Random(seed)
    return [random_variant(l, rng) for _ in range(count)]
