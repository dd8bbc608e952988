"""Identity suite and seeded fuzz harness.

Every identity is checked as a relative error against a tolerance. Per
identity records merge by max-reduction, so reports built from disjoint
trial sets combine the same way in any order.
"""
from __future__ import annotations

import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from functools import reduce
from typing import Any, Iterable

import numpy as np

from .area import (brahmagupta_area, cyclic_area, factor_exchange, heron_area,
                   heron_area_sides, inradius_chain_product, pair_area_product,
                   reconstruct_internal, right_triangle_area_product)
from .construction import PolygonSpec, random_gaps
from .errors import CyclicAreaError, InvalidInputError
from .fan import edge_partition, fan_decompose
from .geometry import MIN_GAP, TWO_PI, CyclicPolygon, shoelace_area, vertices

DEFAULT_TOLERANCES: dict[str, float] = {
    "oracle_equivalence": 1e-8,
    "apex_independence": 1e-8,
    "additivity": 1e-9,
    "chain_constraint": 1e-10,
    "pair_product_form1": 1e-9,
    "pair_product_form2": 1e-9,
    "inradius_chain": 1e-9,
    "inradius_perimeter": 1e-11,
    "inradius_symmetric": 1e-10,
    "heron_tangent_vs_sides": 1e-10,
    "right_triangle_product": 1e-10,
    "pythagoras": 1e-10,
    "reconstruction": 1e-10,
    "factor_symmetry": 0.0,
    "brahmagupta": 1e-9,
}
IDENTITIES = tuple(DEFAULT_TOLERANCES)
DIAMETER_TOL = 1e-9


def rel_err(x: float, y: float) -> float:
    d = abs(x - y)
    if d == 0.0:
        return 0.0
    return d / max(abs(x), abs(y), 1e-300)


@dataclass(frozen=True)
class IdentityRecord:
    name: str
    tolerance: float
    trials: int = 0
    max_rel_err: float = 0.0
    worst: dict | None = None

    @property
    def passed(self) -> bool:
        # NaN compares false, so it fails
        return self.max_rel_err <= self.tolerance

    def _key(self):
        err = math.inf if math.isnan(self.max_rel_err) else self.max_rel_err
        tag = "" if self.worst is None else json.dumps(self.worst, sort_keys=True)
        return err, tag

    def merge(self, other: "IdentityRecord") -> "IdentityRecord":
        if other.name != self.name:
            raise InvalidInputError(f"cannot merge {self.name} with {other.name}")
        (ea, ta), (eb, tb) = self._key(), other._key()
        # larger error wins; equal errors break ties on the smaller descriptor
        best = self if (ea > eb or (ea == eb and ta <= tb)) else other
        return IdentityRecord(self.name, min(self.tolerance, other.tolerance),
                              self.trials + other.trials, best.max_rel_err, best.worst)

    def to_dict(self) -> dict[str, Any]:
        seed = None if self.worst is None else self.worst.get("seed")
        return {
            "trials": self.trials,
            "max_rel_err": self.max_rel_err,
            "tolerance": self.tolerance,
            "worst_seed": seed,
            "worst_case": self.worst,
            "pass": self.passed,
        }


@dataclass(frozen=True)
class VerificationReport:
    records: dict[str, IdentityRecord]
    config: dict[str, Any] = field(default_factory=dict)
    errors: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.errors and all(r.passed for r in self.records.values())

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        recs = {k: self.records[k].merge(other.records[k]) for k in self.records}
        errs = tuple(sorted(set(self.errors) | set(other.errors)))
        return VerificationReport(recs, self.config, errs)

    def to_dict(self) -> dict[str, Any]:
        return {
            "pass": self.passed,
            "config": self.config,
            "identities": {k: self.records[k].to_dict() for k in IDENTITIES},
            "errors": list(self.errors),
        }


class _Collector:
    def __init__(self, tolerances, descriptor):
        self.desc = descriptor
        self.recs = {k: IdentityRecord(k, tolerances[k]) for k in IDENTITIES}

    def add(self, name: str, x: float, y: float):
        self.add_err(name, rel_err(x, y))

    def add_err(self, name: str, err: float):
        r = self.recs[name]
        if r.worst is None or (not math.isnan(r.max_rel_err) and not err <= r.max_rel_err):
            r = replace(r, max_rel_err=err, worst=self.desc)
        self.recs[name] = replace(r, trials=r.trials + 1)


def resolve_tolerances(overrides: dict[str, float] | None = None) -> dict[str, float]:
    tol = dict(DEFAULT_TOLERANCES)
    for k, v in (overrides or {}).items():
        if k not in tol:
            raise InvalidInputError(f"unknown identity {k!r}")
        if not (v > 0 and math.isfinite(v)):
            raise InvalidInputError(f"tolerance for {k!r} must be positive, got {v!r}")
        tol[k] = float(v)
    return tol


def describe(poly: CyclicPolygon) -> dict[str, Any]:
    return PolygonSpec("central_angles", radius=poly.radius, gaps=tuple(poly.gaps)).to_dict()


def _right_triangle_checks(c: _Collector, poly: CyclicPolygon, apex: int, j: int, T):
    """Product and Pythagoras checks when a fan triangle has a diameter side."""
    alpha = poly.arc(apex, apex + j)
    beta = poly.arc(apex + j, apex + j + 1)
    gamma = TWO_PI - alpha - beta
    # (arc of side, its two tangent segments, tangent at the opposite vertex)
    for arc, a, b, leg in ((alpha, T.s, T.r, T.t), (beta, T.r, T.t, T.s), (gamma, T.s, T.t, T.r)):
        if abs(arc - math.pi) <= DIAMETER_TOL:
            c.add("right_triangle_product", right_triangle_area_product(a, b), T.area)
            c.add("pythagoras", (a + leg) ** 2 + (b + leg) ** 2, (a + b) ** 2)


def verify_polygon(poly: CyclicPolygon, tolerances: dict[str, float] | None = None,
                   descriptor: dict[str, Any] | None = None) -> VerificationReport:
    """Run the full identity suite on one polygon. Failures are recorded, not raised."""
    tol = resolve_tolerances(tolerances)
    desc = describe(poly) if descriptor is None else descriptor
    c = _Collector(tol, desc)
    try:
        _run_suite(c, poly)
    except CyclicAreaError as exc:
        return VerificationReport(c.recs, {"tolerances": tol},
                                  (f"{type(exc).__name__}: {exc} @ {json.dumps(desc, sort_keys=True)}",))
    return VerificationReport(c.recs, {"tolerances": tol})


def _run_suite(c: _Collector, poly: CyclicPolygon):
    oracle = shoelace_area(vertices(poly))
    fan = fan_decompose(poly, 0)
    area, pair = cyclic_area(fan)
    T = fan.splits
    n = fan.n

    c.add("oracle_equivalence", area, oracle)
    c.add("additivity", area, math.fsum(heron_area(x.r, x.s, x.t) for x in T))

    apex_areas = [area] + [cyclic_area(fan_decompose(poly, a))[0] for a in range(1, len(poly))]
    spread = max(apex_areas) - min(apex_areas)
    c.add_err("apex_independence", spread / max(apex_areas))

    for i in range(n - 1):
        c.add("chain_constraint", T[i].s + T[i].t, T[i + 1].s + T[i + 1].r)

    for h in range(1, n + 1):
        for k in range(h + 1, n + 1):
            truth = T[h - 1].area * T[k - 1].area
            f1, f2 = pair_area_product(fan, h, k)
            c.add("pair_product_form1", f1, truth)
            c.add("pair_product_form2", f2, truth)
            c.add("inradius_chain", inradius_chain_product(fan, h, k), T[h - 1].rho * T[k - 1].rho)

    for j, x in enumerate(T, start=1):
        c.add("inradius_perimeter", x.rho * x.p, x.area)
        a, b, cc = x.sides
        c.add("inradius_symmetric", x.rho, heron_area_sides(a, b, cc) / (0.5 * (a + b + cc)))
        c.add("heron_tangent_vs_sides", heron_area(x.r, x.s, x.t), heron_area_sides(a, b, cc))
        _right_triangle_checks(c, poly, 0, j, x)

    s_rec, p_rec = reconstruct_internal(edge_partition(fan))
    for q in range(1, n):
        c.add("reconstruction", s_rec[q - 1], T[q].s)
        c.add("reconstruction", p_rec[q - 1], T[q].p)

    ex = factor_exchange(fan)
    c.add("factor_symmetry", ex.f1, pair.f2)
    c.add("factor_symmetry", ex.f2, pair.f1)

    if n == 2:
        sides = [poly.chord(i, i + 1) for i in range(4)]
        c.add("brahmagupta", area, brahmagupta_area(*sides))


# -- fuzzing -------------------------------------------------------------------------

@dataclass(frozen=True)
class FuzzConfig:
    seed_start: int = 0
    seed_count: int = 100
    vertex_counts: tuple[int, ...] = (3, 4, 5, 6, 7, 8, 9, 10)
    radius: float = 1.0
    tolerances: dict[str, float] = field(default_factory=dict)
    near_degenerate: bool = False
    pinch: float = MIN_GAP
    workers: int = 1

    def __post_init__(self):
        object.__setattr__(self, "vertex_counts", tuple(int(v) for v in self.vertex_counts))
        if self.seed_count < 1:
            raise InvalidInputError("seed_count must be >= 1")
        if not self.vertex_counts or min(self.vertex_counts) < 3:
            raise InvalidInputError("vertex_counts must be non-empty and >= 3")
        if not (self.radius > 0 and math.isfinite(self.radius)):
            raise InvalidInputError("radius must be positive")
        if not self.pinch >= MIN_GAP:
            raise InvalidInputError(f"pinch must be >= {MIN_GAP}")
        if self.workers < 1:
            raise InvalidInputError("workers must be >= 1")
        resolve_tolerances(self.tolerances)

    def echo(self) -> dict[str, Any]:
        out = {
            "seed_start": self.seed_start,
            "seed_count": self.seed_count,
            "vertex_counts": list(self.vertex_counts),
            "radius": self.radius,
            "near_degenerate": self.near_degenerate,
            "tolerances": resolve_tolerances(self.tolerances),
        }
        if self.near_degenerate:
            out["pinch"] = self.pinch
        return out


def trial_spec(config: FuzzConfig, seed: int, vertex_count: int) -> PolygonSpec:
    """Reproducible description of one fuzz trial."""
    if not config.near_degenerate:
        return PolygonSpec("random", seed=seed, vertex_count=vertex_count, radius=config.radius)
    rng = np.random.default_rng(seed)
    gaps = random_gaps(rng, vertex_count)
    rest = math.fsum(gaps[1:])
    gaps = [config.pinch] + [g * (TWO_PI - config.pinch) / rest for g in gaps[1:]]
    return PolygonSpec("central_angles", radius=config.radius, gaps=tuple(gaps))


def _run_chunk(args) -> VerificationReport:
    config, cells = args
    tol = config.tolerances
    reports = []
    for seed, m in cells:
        spec = trial_spec(config, seed, m)
        desc = spec.to_dict()
        desc["seed"] = seed
        desc["vertex_count"] = m
        try:
            poly = spec.build()
        except CyclicAreaError as exc:
            empty = {k: IdentityRecord(k, t) for k, t in resolve_tolerances(tol).items()}
            reports.append(VerificationReport(empty, errors=(f"{type(exc).__name__}: {exc}",)))
            continue
        reports.append(verify_polygon(poly, tol, desc))
    return reduce(VerificationReport.merge, reports)


def fuzz(config: FuzzConfig) -> VerificationReport:
    """Verify every (seed, vertex count) cell of the grid and merge the reports."""
    cells = [(seed, m) for m in config.vertex_counts
             for seed in range(config.seed_start, config.seed_start + config.seed_count)]
    if config.workers == 1:
        merged = _run_chunk((config, cells))
    else:
        chunks = [cells[i::config.workers] for i in range(config.workers)]
        chunks = [ch for ch in chunks if ch]
        with ProcessPoolExecutor(max_workers=len(chunks)) as pool:
            merged = reduce(VerificationReport.merge, pool.map(_run_chunk, [(config, ch) for ch in chunks]))
    return VerificationReport(merged.records, config.echo(), merged.errors)


def replay(worst_case: dict[str, Any], tolerances: dict[str, float] | None = None) -> VerificationReport:
    """Re-run the suite on a recorded worst case."""
    desc = dict(worst_case)
    spec_fields = {k: v for k, v in desc.items() if k in PolygonSpec.__dataclass_fields__}
    if spec_fields.get("kind") != "random":
        spec_fields.pop("seed", None)
        spec_fields.pop("vertex_count", None)
    poly = PolygonSpec.from_dict(spec_fields).build()
    return verify_polygon(poly, tolerances, desc)
