"""Area formulas in tangent-length variables.

Covers Heron and Brahmagupta, the right-triangle product, the pairwise
area and inradius products along a fan, and the general two-factor area
formula for convex cyclic polygons.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import DomainError, InconsistentBoundaryError, InvalidInputError, NumericError
from .fan import EdgePartition, FanDecomposition


def heron_area(r: float, s: float, t: float) -> float:
    """Triangle area from its three tangent lengths: sqrt((r+s+t) r s t)."""
    if not (r > 0 and s > 0 and t > 0):
        raise DomainError(f"tangent lengths must be positive, got {(r, s, t)}")
    return math.sqrt((r + s + t) * r * s * t)


def heron_area_sides(a: float, b: float, c: float) -> float:
    p = 0.5 * (a + b + c)
    # p - a written without subtracting p keeps one rounding
    x, y, z = 0.5 * (b + c - a), 0.5 * (a + c - b), 0.5 * (a + b - c)
    if not (a > 0 and b > 0 and c > 0 and x > 0 and y > 0 and z > 0):
        raise DomainError(f"sides {(a, b, c)} violate the strict triangle inequality")
    return math.sqrt(p * x * y * z)


def right_triangle_area_product(s: float, t: float) -> float:
    """Area of a right triangle from the two hypotenuse tangent segments."""
    if not (s > 0 and t > 0):
        raise DomainError(f"hypotenuse segments must be positive, got {(s, t)}")
    return s * t


def brahmagupta_area(a: float, b: float, c: float, d: float) -> float:
    sides = (a, b, c, d)
    if any(not x > 0 for x in sides):
        raise DomainError(f"sides must be positive, got {sides}")
    p = 0.5 * math.fsum(sides)
    prod = 1.0
    for x in sides:
        rest = p - x
        if not rest > 0:
            raise DomainError(f"side {x!r} is not shorter than the sum of the others")
        prod *= rest
    return math.sqrt(prod)


# -- chain identities along a fan ------------------------------------------------

def _check_pair(fan: FanDecomposition, h: int, k: int):
    if not (1 <= h < k <= fan.n):
        raise InvalidInputError(f"need 1 <= h < k <= {fan.n}, got h={h}, k={k}")


def pair_area_product(fan: FanDecomposition, h: int, k: int) -> tuple[float, float]:
    """Both closed forms of A_h * A_k (1-based triangle indices).

    form1 = s_h t_h s_k r_k * prod(s_i / p_i), form2 = p_h r_h p_k t_k * prod(p_i / s_i),
    products over the triangles strictly between h and k.
    """
    _check_pair(fan, h, k)
    T = fan.splits
    Th, Tk = T[h - 1], T[k - 1]
    form1 = Th.s * Th.t * Tk.s * Tk.r
    form2 = Th.p * Th.r * Tk.p * Tk.t
    for Ti in T[h:k - 1]:
        form1 *= Ti.s / Ti.p
        form2 *= Ti.p / Ti.s
    return form1, form2


def inradius_chain_product(fan: FanDecomposition, h: int, k: int) -> float:
    """rho_h * rho_k as r_h t_k times prod(p_i / s_i) over the triangles between."""
    _check_pair(fan, h, k)
    T = fan.splits
    out = T[h - 1].r * T[k - 1].t
    for Ti in T[h:k - 1]:
        out *= Ti.p / Ti.s
    return out


# -- general cyclic polygon area ----------------------------------------------------

@dataclass(frozen=True)
class FactorPair:
    f1: float
    f2: float

    @property
    def area_squared(self) -> float:
        return self.f1 * self.f2


def _bracket(lead_a: Sequence[float], lead_b: Sequence[float],
             ratio_num: Sequence[float], ratio_den: Sequence[float]) -> float:
    """Evaluate lead_a[0]*lead_b[0] + sum_q lead_a[q]*lead_b[q]*prod_{m=1}^{q-1} num[m]/den[m].

    Indices are 0-based here (q = 1..n-1); the running product is updated
    after each term, so term q sees ratios 1..q-1 and the empty product is 1.
    """
    total = lead_a[0] * lead_b[0]
    run = 1.0
    for q in range(1, len(lead_a)):
        total += lead_a[q] * lead_b[q] * run
        run *= ratio_num[q] / ratio_den[q]
    return total


def first_factor(r, s, t, p) -> float:
    """p_1 r_1 + sum_{q>=2} r_q s_q prod_{m=2}^{q-1} s_m/p_m, from raw per-triangle lists."""
    return _bracket([p[0]] + list(r[1:]), [r[0]] + list(s[1:]), s, p)


def second_factor(r, s, t, p) -> float:
    """s_1 t_1 + sum_{q>=2} p_q t_q prod_{m=2}^{q-1} p_m/s_m, from raw per-triangle lists."""
    return _bracket([s[0]] + list(t[1:]), [t[0]] + list(p[1:]), p, s)


def _columns(fan: FanDecomposition):
    T = fan.splits
    return ([x.r for x in T], [x.s for x in T], [x.t for x in T], [x.p for x in T])


def cyclic_area(fan: FanDecomposition) -> tuple[float, FactorPair]:
    """Area of the convex cyclic polygon as sqrt(f1 * f2) over its fan splits.

    An empty fan (polygon collapsed to a segment) has area 0.
    """
    if fan.n == 0:
        return 0.0, FactorPair(0.0, 0.0)
    r, s, t, p = _columns(fan)
    pair = FactorPair(first_factor(r, s, t, p), second_factor(r, s, t, p))
    sq = pair.area_squared
    if not sq >= 0.0 or not math.isfinite(sq):
        raise NumericError(f"area squared is {sq!r}; input too close to degenerate")
    return math.sqrt(sq), pair


def factor_exchange(fan: FanDecomposition) -> FactorPair:
    """Each bracket evaluated with r<->t and s<->p swapped in every triangle.

    The swapped tuples are formal and need not describe real triangles. The
    returned ``f1`` is the exchanged first bracket (should equal the true f2)
    and ``f2`` the exchanged second bracket (should equal the true f1).
    """
    if fan.n == 0:
        return FactorPair(0.0, 0.0)
    r, s, t, p = _columns(fan)
    return FactorPair(first_factor(t, p, r, s), second_factor(t, p, r, s))


# -- boundary reconstruction ---------------------------------------------------------

def reconstruct_internal(boundary: EdgePartition) -> tuple[list[float], list[float]]:
    """Apex tangents s_q and semiperimeters p_q for q = 2..n from edge data.

    Uses s_q = s_{q-1} + t_{q-1} - r_q, seeded with s_1. The trailing
    ``s_last`` of the boundary is not consumed; it is a consistency value.
    """
    r, t = boundary.r, boundary.t
    if len(r) != len(t):
        raise InconsistentBoundaryError("r and t lists differ in length")
    s_prev = boundary.s_first
    s_out, p_out = [], []
    for q in range(1, len(r)):
        s_q = s_prev + t[q - 1] - r[q]
        if not s_q > 0:
            raise InconsistentBoundaryError(f"reconstructed s_{q + 1} = {s_q!r} is not positive")
        s_out.append(s_q)
        p_out.append(r[q] + s_q + t[q])
        s_prev = s_q
    return s_out, p_out
