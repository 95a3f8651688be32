"""Exact planar predicates on rational points and the turning count of polylines.

Everything is computed with :class:`fractions.Fraction`; no tolerance is used.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import AntiparallelStep, NonHorizontalEnds

Point = tuple[Fraction, Fraction]


def sub(p: Point, q: Point) -> Point:
    return (p[0] - q[0], p[1] - q[1])


def cross(u: Point, v: Point) -> Fraction:
    return u[0] * v[1] - u[1] * v[0]


def dot(u: Point, v: Point) -> Fraction:
    return u[0] * v[0] + u[1] * v[1]


def norm2(u: Point) -> Fraction:
    return dot(u, u)


def sign(x) -> int:
    return (x > 0) - (x < 0)


def orient(a: Point, b: Point, c: Point) -> int:
    """+1 if a, b, c turn counterclockwise, -1 clockwise, 0 if collinear."""
    return sign(cross(sub(b, a), sub(c, a)))


def on_segment(p: Point, a: Point, b: Point) -> bool:
    """p collinear with a-b is assumed; test whether it lies in the closed box."""
    return (min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))


def segments_intersect(a: Point, b: Point, c: Point, d: Point) -> bool:
    """Closed segments [a,b] and [c,d] share at least one point."""
    if (max(a[0], b[0]) < min(c[0], d[0]) or max(c[0], d[0]) < min(a[0], b[0])
            or max(a[1], b[1]) < min(c[1], d[1]) or max(c[1], d[1]) < min(a[1], b[1])):
        return False
    o1, o2 = orient(a, b, c), orient(a, b, d)
    o3, o4 = orient(c, d, a), orient(c, d, b)
    if o1 * o2 < 0 and o3 * o4 < 0:
        return True
    if o1 == 0 and on_segment(c, a, b):
        return True
    if o2 == 0 and on_segment(d, a, b):
        return True
    if o3 == 0 and on_segment(a, c, d):
        return True
    return o4 == 0 and on_segment(b, c, d)


def segment_dist2(p: Point, a: Point, b: Point) -> Fraction:
    """Squared distance from p to the closed segment [a,b]."""
    ab = sub(b, a)
    ap = sub(p, a)
    denom = norm2(ab)
    if denom == 0:
        return norm2(ap)
    t = dot(ap, ab) / denom
    if t <= 0:
        return norm2(ap)
    if t >= 1:
        return norm2(sub(p, b))
    proj = (a[0] + t * ab[0], a[1] + t * ab[1])
    return norm2(sub(p, proj))


def angle_key(v: Point):
    """Sort key giving counterclockwise order of directions starting at +x."""
    half = 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1
    return half, _SlopeKey(v)


@dataclass(frozen=True)
class _SlopeKey:
    v: Point

    def __lt__(self, other: "_SlopeKey") -> bool:
        return cross(self.v, other.v) > 0

    def __eq__(self, other) -> bool:
        return isinstance(other, _SlopeKey) and cross(self.v, other.v) == 0


# ---------------------------------------------------------------------------
# turning


@dataclass(frozen=True, order=True)
class HalfInt:
    """An exact element of (1/2)Z stored as a count of half-turns."""

    half_turns: int = 0

    @property
    def value(self) -> Fraction:
        return Fraction(self.half_turns, 2)

    def __add__(self, other: "HalfInt") -> "HalfInt":
        return HalfInt(self.half_turns + other.half_turns)

    def __neg__(self) -> "HalfInt":
        return HalfInt(-self.half_turns)

    def __str__(self) -> str:
        return str(self.value)


_UP = (Fraction(0), Fraction(1))
_DOWN = (Fraction(0), Fraction(-1))


def _same_dir(u: Point, v: Point) -> bool:
    return cross(u, v) == 0 and dot(u, v) > 0


def _strictly_between(u: Point, v: Point, w: Point, turn: int) -> bool:
    # w strictly inside the rotation from u to v of sense ``turn`` (< pi).
    return sign(cross(u, w)) == turn and sign(cross(w, v)) == turn


def turning_half_turns(directions: Sequence[Point]) -> HalfInt:
    """Total rotation of a sequence of segment directions, in half-turns.

    The count is the signed number of times the rotating direction passes
    straight up or straight down.  A direction that is exactly vertical is
    treated as rotated infinitesimally counterclockwise, so a counterclockwise
    step counts a vertical it ends on and a clockwise step counts one it
    starts from.
    """
    if not directions:
        raise NonHorizontalEnds("empty direction list")
    dirs = [(Fraction(x), Fraction(y)) for x, y in directions]
    if any(d == (0, 0) for d in dirs):
        raise AntiparallelStep("zero-length segment")
    if dirs[0][1] != 0 or dirs[-1][1] != 0:
        raise NonHorizontalEnds("first and last directions must be horizontal")
    total = 0
    for u, v in zip(dirs, dirs[1:]):
        c = cross(u, v)
        if c == 0:
            if dot(u, v) < 0:
                raise AntiparallelStep(f"direction reverses from {u} to {v}")
            continue
        turn = sign(c)
        for w in (_UP, _DOWN):
            if _strictly_between(u, v, w, turn):
                total += turn
            elif turn > 0 and _same_dir(v, w):
                total += 1
            elif turn < 0 and _same_dir(u, w):
                total -= 1
    return HalfInt(total)


def turning_float(directions: Sequence[Point]) -> float:
    """Floating-point rotation / pi; used only as an independent check."""
    total = 0.0
    for (ux, uy), (vx, vy) in zip(directions, directions[1:]):
        ux, uy, vx, vy = float(ux), float(uy), float(vx), float(vy)
        total += math.atan2(ux * vy - uy * vx, ux * vx + uy * vy)
    return total / math.pi


def polyline_directions(points: Sequence[Point]) -> list[Point]:
    return [sub(b, a) for a, b in zip(points, points[1:])]
