"""Building cyclic polygons from angles, side lengths, vertices or a seed."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Callable, Sequence

import numpy as np

from .errors import (ConvergenceError, InfeasibleSidesError, InvalidInputError,
                     InvalidSpecError)
from .geometry import (ORIGIN, TWO_PI, CyclicPolygon, Point2, chord_length,
                       side_lengths)

GAP_SUM_TOL = 1e-9
BOUNDARY_TOL = 1e-12
BISECT_REL_WIDTH = 1e-14
NEWTON_STEPS = 5
MAX_ITER = 200
VERTEX_REL_TOL = 1e-9


def from_central_angles(radius: float, gaps: Sequence[float],
                        center: Point2 = ORIGIN) -> CyclicPolygon:
    gaps = [float(g) for g in gaps]
    if len(gaps) < 3:
        raise InvalidSpecError(f"need at least 3 gaps, got {len(gaps)}")
    if any(not math.isfinite(g) or g <= 0 for g in gaps):
        raise InvalidSpecError("central angles must be positive and finite")
    if abs(math.fsum(gaps) - TWO_PI) > GAP_SUM_TOL:
        raise InvalidSpecError(f"central angles sum to {math.fsum(gaps)!r}, expected 2pi")
    if not (math.isfinite(radius) and radius > 0):
        raise InvalidSpecError(f"radius must be positive, got {radius}")
    return CyclicPolygon.from_gaps(gaps, radius, center)


# -- circumradius from side lengths -------------------------------------------

def _check_sides(sides: Sequence[float]) -> list[float]:
    sides = [float(s) for s in sides]
    if len(sides) < 3:
        raise InvalidInputError(f"need at least 3 sides, got {len(sides)}")
    if any(not math.isfinite(s) or s <= 0 for s in sides):
        raise InfeasibleSidesError("side lengths must be positive and finite")
    s_max = max(sides)
    rest = math.fsum(sides) - s_max
    if not s_max < rest:
        raise InfeasibleSidesError(
            f"longest side {s_max!r} is not shorter than the sum of the others {rest!r}")
    return sides


def _half_angles(sides, R):
    return [math.asin(min(1.0, s / (2.0 * R))) for s in sides]


def _closure_inside(sides, R):
    """Sum of central angles minus 2pi; strictly decreasing in R."""
    return 2.0 * math.fsum(_half_angles(sides, R)) - TWO_PI


def _closure_inside_deriv(sides, R):
    total = 0.0
    for s in sides:
        u = s / (2.0 * R)
        if u >= 1.0:
            return -math.inf
        total += -2.0 * u / (R * math.sqrt(1.0 - u * u))
    return total


def _closure_outside(sides, imax, R):
    """Central angle of the longest side against the rest, center beyond it."""
    h = _half_angles(sides, R)
    return math.fsum(h[:imax] + h[imax + 1:]) - h[imax]


def _closure_outside_deriv(sides, imax, R):
    total = 0.0
    for i, s in enumerate(sides):
        u = s / (2.0 * R)
        if u >= 1.0:
            return math.inf
        d = -u / (R * math.sqrt(1.0 - u * u))
        total += -d if i == imax else d
    return total


def _solve_bracketed(f: Callable[[float], float], df: Callable[[float], float],
                     lo: float, hi: float, scale: float, decreasing: bool) -> float:
    """Bisection on a sign-change bracket, then safeguarded Newton polishing."""
    def positive_side(x):
        v = f(x)
        return (v > 0) == decreasing

    iters = 0
    # expand the upper end until the sign flips
    while positive_side(hi):
        lo, hi = hi, 2.0 * hi
        iters += 1
        if iters >= MAX_ITER or not math.isfinite(hi):
            raise ConvergenceError("could not bracket the circumradius")
    while hi - lo > BISECT_REL_WIDTH * scale:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if positive_side(mid):
            lo = mid
        else:
            hi = mid
        iters += 1
        if iters >= MAX_ITER:
            raise ConvergenceError(f"bisection did not converge in {MAX_ITER} iterations")
    x = 0.5 * (lo + hi)
    for _ in range(NEWTON_STEPS):
        v = f(x)
        if v == 0.0:
            break
        d = df(x)
        if not math.isfinite(d) or d == 0.0:
            break
        nxt = x - v / d
        if not lo <= nxt <= hi or nxt == x:
            break
        x = nxt
    return x


def circumradius_from_sides(sides: Sequence[float]) -> tuple[float, bool]:
    """Circumradius of the convex cyclic polygon with these sides, in order.

    Returns ``(radius, center_inside)``. ``center_inside`` is False when the
    circumcenter lies beyond the longest side, which then subtends the
    complement of the other central angles.
    """
    sides = _check_sides(sides)
    s_max = max(sides)
    imax = sides.index(s_max)
    lo = 0.5 * s_max
    f_lo = _closure_inside(sides, lo)
    if abs(f_lo) <= BOUNDARY_TOL:
        return lo, True
    if f_lo > 0:
        R = _solve_bracketed(lambda R: _closure_inside(sides, R),
                             lambda R: _closure_inside_deriv(sides, R),
                             lo, s_max, s_max, decreasing=True)
        return R, True
    R = _solve_bracketed(lambda R: _closure_outside(sides, imax, R),
                         lambda R: _closure_outside_deriv(sides, imax, R),
                         lo, s_max, s_max, decreasing=False)
    return R, False


def polygon_from_sides(sides: Sequence[float], center: Point2 = ORIGIN) -> CyclicPolygon:
    sides = _check_sides(sides)
    R, inside = circumradius_from_sides(sides)
    gaps = [2.0 * h for h in _half_angles(sides, R)]
    if not inside:
        imax = sides.index(max(sides))
        gaps[imax] = TWO_PI - math.fsum(gaps[:imax] + gaps[imax + 1:])
    return CyclicPolygon.from_gaps(gaps, R, center)


# -- raw vertices ---------------------------------------------------------------

def _circumcircle(a, b, c):
    ax, ay = a
    bx, by = b[0] - ax, b[1] - ay
    cx, cy = c[0] - ax, c[1] - ay
    d = 2.0 * (bx * cy - by * cx)
    if d == 0.0:
        raise InvalidSpecError("first three vertices are collinear")
    b2 = bx * bx + by * by
    c2 = cx * cx + cy * cy
    ux = (cy * b2 - by * c2) / d
    uy = (bx * c2 - cx * b2) / d
    return Point2(ax + ux, ay + uy), math.hypot(ux, uy)


def from_vertices(points: Sequence[Sequence[float]]) -> CyclicPolygon:
    """Recover the circle and angles of concyclic points given counterclockwise."""
    pts = [(float(p[0]), float(p[1])) for p in points]
    if len(pts) < 3:
        raise InvalidSpecError(f"need at least 3 vertices, got {len(pts)}")
    if not all(math.isfinite(v) for p in pts for v in p):
        raise InvalidSpecError("non-finite vertex coordinate")
    n = len(pts)
    # circle through three well-spread vertices
    center, R = _circumcircle(pts[0], pts[n // 3], pts[(2 * n) // 3])
    for x, y in pts:
        if abs(math.hypot(x - center.x, y - center.y) - R) > VERTEX_REL_TOL * R:
            raise InvalidSpecError("vertices are not concyclic")
    angles = [math.atan2(y - center.y, x - center.x) for x, y in pts]
    gaps = []
    for i in range(n):
        g = angles[(i + 1) % n] - angles[i]
        if g <= 0:
            g += TWO_PI
        gaps.append(g)
    if abs(math.fsum(gaps) - TWO_PI) > GAP_SUM_TOL:
        raise InvalidSpecError("vertices are not in counterclockwise convex order")
    return CyclicPolygon.from_gaps(gaps, R, center, start=angles[0])


# -- random polygons -------------------------------------------------------------

def random_gaps(rng: np.random.Generator, vertex_count: int) -> list[float]:
    floor = 1e-4 * TWO_PI / vertex_count
    w = rng.random(vertex_count)
    w = w / w.sum()
    return [floor + (TWO_PI - vertex_count * floor) * float(x) for x in w]


def random_cyclic_polygon(seed: int, vertex_count: int, radius: float = 1.0) -> CyclicPolygon:
    """Seeded polygon whose gaps are normalized uniform weights above a small floor."""
    if vertex_count < 3:
        raise InvalidInputError(f"vertex_count must be >= 3, got {vertex_count}")
    if not (math.isfinite(radius) and radius > 0):
        raise InvalidInputError(f"radius must be positive, got {radius}")
    rng = np.random.default_rng(seed)
    start = float(rng.uniform(0.0, TWO_PI))
    return CyclicPolygon.from_gaps(random_gaps(rng, vertex_count), radius, start=start)


# -- serialized descriptions -------------------------------------------------------

_KIND_FIELDS = {
    "central_angles": {"radius", "gaps"},
    "side_lengths": {"sides"},
    "vertices": {"points"},
    "random": {"seed", "vertex_count", "radius"},
}
_OPTIONAL = {"random": {"radius"}}


@dataclass(frozen=True)
class PolygonSpec:
    """Serializable description of a polygon; ``build()`` realizes it."""

    kind: str
    radius: float | None = None
    gaps: tuple[float, ...] | None = None
    sides: tuple[float, ...] | None = None
    points: tuple[tuple[float, float], ...] | None = None
    seed: int | None = None
    vertex_count: int | None = None

    def __post_init__(self):
        if self.kind not in _KIND_FIELDS:
            raise InvalidSpecError(f"unknown kind {self.kind!r}")
        present = {k for k in ("radius", "gaps", "sides", "points", "seed", "vertex_count")
                   if getattr(self, k) is not None}
        need = _KIND_FIELDS[self.kind] - _OPTIONAL.get(self.kind, set())
        missing = need - present
        extra = present - _KIND_FIELDS[self.kind]
        if missing:
            raise InvalidSpecError(f"kind {self.kind!r} missing fields: {sorted(missing)}")
        if extra:
            raise InvalidSpecError(f"kind {self.kind!r} does not accept fields: {sorted(extra)}")

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "PolygonSpec":
        if not isinstance(d, dict):
            raise InvalidSpecError("polygon spec must be a JSON object")
        if "kind" not in d:
            raise InvalidSpecError("polygon spec needs a 'kind'")
        unknown = set(d) - {"kind", "radius", "gaps", "sides", "points", "seed", "vertex_count"}
        if unknown:
            raise InvalidSpecError(f"unknown fields: {sorted(unknown)}")
        try:
            kw = {"kind": d["kind"]}
            if "radius" in d:
                kw["radius"] = _number(d["radius"], "radius")
            if "gaps" in d:
                kw["gaps"] = tuple(_number(v, "gaps") for v in _list(d["gaps"], "gaps"))
            if "sides" in d:
                kw["sides"] = tuple(_number(v, "sides") for v in _list(d["sides"], "sides"))
            if "points" in d:
                pts = []
                for p in _list(d["points"], "points"):
                    p = _list(p, "points")
                    if len(p) != 2:
                        raise InvalidSpecError("each point must be [x, y]")
                    pts.append((_number(p[0], "points"), _number(p[1], "points")))
                kw["points"] = tuple(pts)
            if "seed" in d:
                kw["seed"] = _integer(d["seed"], "seed")
            if "vertex_count" in d:
                kw["vertex_count"] = _integer(d["vertex_count"], "vertex_count")
        except (TypeError, KeyError) as exc:
            raise InvalidSpecError(str(exc)) from exc
        return cls(**kw)

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"kind": self.kind}
        for k in ("radius", "gaps", "sides", "points", "seed", "vertex_count"):
            v = getattr(self, k)
            if v is None:
                continue
            if k == "points":
                v = [list(p) for p in v]
            elif isinstance(v, tuple):
                v = list(v)
            out[k] = v
        return out

    def build(self) -> CyclicPolygon:
        if self.kind == "central_angles":
            return from_central_angles(self.radius, self.gaps)
        if self.kind == "side_lengths":
            return polygon_from_sides(self.sides)
        if self.kind == "vertices":
            return from_vertices(self.points)
        radius = 1.0 if self.radius is None else self.radius
        return random_cyclic_polygon(self.seed, self.vertex_count, radius)


def _number(v, name):
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise InvalidSpecError(f"field {name!r} expects numbers, got {v!r}")
    v = float(v)
    if not math.isfinite(v):
        raise InvalidSpecError(f"field {name!r} must be finite")
    return v


def _integer(v, name):
    if isinstance(v, bool) or not isinstance(v, int):
        raise InvalidSpecError(f"field {name!r} expects an integer, got {v!r}")
    return v


def _list(v, name):
    if not isinstance(v, list):
        raise InvalidSpecError(f"field {name!r} expects a list")
    return v


def chords_match(poly: CyclicPolygon, sides: Sequence[float]) -> float:
    """Largest relative mismatch between the polygon's chords and ``sides``."""
    got = side_lengths(poly)
    return max(abs(a - b) / max(abs(a), abs(b)) for a, b in zip(got, sides))
