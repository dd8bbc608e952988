"""Points, circles, cyclic polygons and the shoelace oracle."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import DegeneracyError, InvalidInputError

TWO_PI = 2.0 * math.pi
MIN_GAP = 1e-9
# absolute slack for rounding of angles near 2pi when a gap sits at the floor
GAP_SLACK = 1e-14


@dataclass(frozen=True)
class Point2:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise InvalidInputError(f"non-finite point ({self.x}, {self.y})")

    def __iter__(self):
        yield self.x
        yield self.y


@dataclass(frozen=True)
class Circle:
    center: Point2
    radius: float

    def __post_init__(self):
        if not (math.isfinite(self.radius) and self.radius > 0):
            raise InvalidInputError(f"circle radius must be positive and finite, got {self.radius}")


ORIGIN = Point2(0.0, 0.0)


@dataclass(frozen=True)
class CyclicPolygon:
    """Convex polygon given by vertex angles on a circle, counterclockwise.

    ``thetas`` is strictly increasing with ``thetas[0]`` in ``[0, 2pi)`` and a
    total span below ``2pi``. Every wrapping gap must be at least ``MIN_GAP``.
    """

    circle: Circle
    thetas: tuple[float, ...]

    def __post_init__(self):
        thetas = tuple(float(t) for t in self.thetas)
        object.__setattr__(self, "thetas", thetas)
        if len(thetas) < 3:
            raise InvalidInputError(f"need at least 3 vertices, got {len(thetas)}")
        if not all(math.isfinite(t) for t in thetas):
            raise InvalidInputError("non-finite vertex angle")
        if not 0.0 <= thetas[0] < TWO_PI:
            raise InvalidInputError(f"thetas[0] must lie in [0, 2pi), got {thetas[0]}")
        if thetas[-1] - thetas[0] >= TWO_PI:
            raise InvalidInputError("vertex angles span a full turn or more")
        for g in self.gaps:
            if g < MIN_GAP - GAP_SLACK:
                raise DegeneracyError(f"angular gap {g:.3e} below floor {MIN_GAP:.0e}")

    @classmethod
    def from_gaps(cls, gaps: Sequence[float], radius: float = 1.0,
                  center: Point2 = ORIGIN, start: float = 0.0) -> "CyclicPolygon":
        """Place vertices by cumulative gaps; the last gap is implied by closure."""
        gaps = [float(g) for g in gaps]
        if len(gaps) < 3:
            raise InvalidInputError(f"need at least 3 gaps, got {len(gaps)}")
        if any(not math.isfinite(g) or g <= 0 for g in gaps):
            raise InvalidInputError("gaps must be positive and finite")
        total = math.fsum(gaps)
        scale = TWO_PI / total
        start = math.fmod(start, TWO_PI)
        if start < 0:
            start += TWO_PI
        thetas = [start]
        acc = [start]
        for g in gaps[:-1]:
            acc.append(g * scale)
            thetas.append(math.fsum(acc))
        return cls(Circle(center, float(radius)), tuple(thetas))

    def __len__(self):
        return len(self.thetas)

    @property
    def radius(self) -> float:
        return self.circle.radius

    @property
    def gaps(self) -> list[float]:
        """Wrapping central angles; ``gaps[i]`` spans vertex i to vertex i+1."""
        th = self.thetas
        out = [th[i + 1] - th[i] for i in range(len(th) - 1)]
        out.append(TWO_PI - (th[-1] - th[0]))
        return out

    def arc(self, i: int, j: int) -> float:
        """Counterclockwise central angle from vertex i to vertex j (i, j taken mod n)."""
        n = len(self.thetas)
        i %= n
        j %= n
        d = self.thetas[j] - self.thetas[i]
        if d < 0:
            d += TWO_PI
        return d

    def chord(self, i: int, j: int) -> float:
        return chord_length(self.radius, self.arc(i, j))


def chord_length(radius: float, central_angle: float) -> float:
    return 2.0 * radius * math.sin(0.5 * central_angle)


def vertices(poly: CyclicPolygon) -> list[Point2]:
    cx, cy = poly.circle.center
    r = poly.radius
    return [Point2(cx + r * math.cos(t), cy + r * math.sin(t)) for t in poly.thetas]


def side_lengths(poly: CyclicPolygon) -> list[float]:
    return [chord_length(poly.radius, g) for g in poly.gaps]


def shoelace_area(points: Sequence[Point2 | Sequence[float]]) -> float:
    """Absolute area of a simple polygon from its vertex coordinates.

    Coordinates are shifted to the first vertex before the cross products
    and the sum is taken with ``math.fsum``.
    """
    pts = [tuple(p) for p in points]
    if len(pts) < 3:
        raise InvalidInputError(f"shoelace needs at least 3 points, got {len(pts)}")
    x0, y0 = pts[0]
    rel = [(x - x0, y - y0) for x, y in pts]
    terms = []
    for (xa, ya), (xb, yb) in zip(rel, rel[1:] + rel[:1]):
        terms.append(xa * yb)
        terms.append(-xb * ya)
    return 0.5 * abs(math.fsum(terms))


def gaps_from_sides(sides: Sequence[float], radius: float) -> list[float]:
    """Invert chords to central angles; valid only when every gap is below pi."""
    return [2.0 * math.asin(min(1.0, s / (2.0 * radius))) for s in sides]
