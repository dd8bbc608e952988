"""Fan triangulation and incircle tangent-length splits.

Triangle ``T_j`` of a fan has the apex ``V_0`` and base vertices ``V_j``,
``V_{j+1}``. Its tangent lengths are labeled ``s`` at the apex, ``r`` at
``V_j`` and ``t`` at ``V_{j+1}``, so the diagonal shared by ``T_i`` and
``T_{i+1}`` splits as ``s_i + t_i`` on one side and ``s_{i+1} + r_{i+1}``
on the other.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import DegeneracyError, InvalidInputError
from .geometry import CyclicPolygon


@dataclass(frozen=True)
class TriangleSplit:
    r: float
    s: float
    t: float
    p: float = field(init=False)

    def __post_init__(self):
        if not (self.r > 0 and self.s > 0 and self.t > 0):
            raise DegeneracyError(f"non-positive tangent length in {(self.r, self.s, self.t)}")
        object.__setattr__(self, "p", self.r + self.s + self.t)

    @property
    def rho(self) -> float:
        """Inradius, sqrt(rst/p)."""
        return math.sqrt(self.r * self.s * self.t / self.p)

    @property
    def area(self) -> float:
        return math.sqrt(self.p * self.r * self.s * self.t)

    @property
    def sides(self) -> tuple[float, float, float]:
        """(apex to near vertex, base edge, apex to far vertex)."""
        return self.s + self.r, self.r + self.t, self.s + self.t


def tangent_split(side_a: float, side_b: float, side_c: float) -> tuple[float, float, float]:
    """Tangent length at the vertex opposite each given side.

    Tangent points split every side so that the two pieces meeting at a
    vertex are equal; each such piece is the semiperimeter minus the
    opposite side.
    """
    a, b, c = float(side_a), float(side_b), float(side_c)
    if not (a > 0 and b > 0 and c > 0):
        raise DegeneracyError(f"sides must be positive, got {(a, b, c)}")
    ta = 0.5 * (b + c - a)
    tb = 0.5 * (a + c - b)
    tc = 0.5 * (a + b - c)
    if not (ta > 0 and tb > 0 and tc > 0):
        raise DegeneracyError(f"sides {(a, b, c)} violate the strict triangle inequality")
    return ta, tb, tc


@dataclass(frozen=True)
class FanDecomposition:
    apex_index: int
    splits: tuple[TriangleSplit, ...]

    @property
    def n(self) -> int:
        return len(self.splits)

    @property
    def areas(self) -> list[float]:
        return [T.area for T in self.splits]

    @property
    def diagonals(self) -> list[float]:
        """Interior diagonals L_{i,i+1} measured from the T_i side (s_i + t_i)."""
        return [T.s + T.t for T in self.splits[:-1]]


def fan_decompose(poly: CyclicPolygon, apex_index: int = 0) -> FanDecomposition:
    n_vert = len(poly)
    if isinstance(apex_index, bool) or not isinstance(apex_index, int):
        raise InvalidInputError(f"apex_index must be an integer, got {apex_index!r}")
    if not 0 <= apex_index < n_vert:
        raise InvalidInputError(f"apex_index {apex_index} out of range for {n_vert} vertices")
    a = apex_index
    # diag[j] = |V_0 V_j| for j = 1..n_vert-1, with V_k = vertex (apex + k)
    diag = [0.0] + [poly.chord(a, a + j) for j in range(1, n_vert)]
    splits = []
    for j in range(1, n_vert - 1):
        base = poly.chord(a + j, a + j + 1)
        s, r, t = tangent_split(base, diag[j + 1], diag[j])
        splits.append(TriangleSplit(r=r, s=s, t=t))
    return FanDecomposition(a, tuple(splits))


@dataclass(frozen=True)
class EdgePartition:
    """Tangent segments lying on the polygon's own edges.

    ``r[j] + t[j]`` is the outer edge of ``T_j``; ``s_first + r[0]`` and
    ``s_last + t[-1]`` are the two edges at the apex.
    """

    s_first: float
    r: tuple[float, ...]
    t: tuple[float, ...]
    s_last: float


def edge_partition(fan: FanDecomposition) -> EdgePartition:
    if fan.n == 0:
        raise InvalidInputError("empty fan has no edge partition")
    return EdgePartition(
        s_first=fan.splits[0].s,
        r=tuple(T.r for T in fan.splits),
        t=tuple(T.t for T in fan.splits),
        s_last=fan.splits[-1].s,
    )
