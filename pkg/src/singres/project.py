"""Projection pipeline for spatial complete-intersection curves.

Two finite supports in Z^3 define a pair of trivariate polynomials; the
closure of the projection of their common zero curve to the first coordinate
plane is the preimage of the resultant of the two univariate polynomials in
the third variable.  The support-pair verdict on the last-coordinate
projections therefore controls which singularities the plane curve can have:
a positive verdict means only transversal double points away from the
exceptional set; a negative verdict means other types are not excluded (the
criterion is one-directional).
"""

from __future__ import annotations

import cmath
import random
from dataclasses import dataclass, field

import numpy as np

from .supports import SupportPair, SupportSet, check_conditions, classify

__all__ = ["Support3D", "GridConfig", "CurveScan", "ProjectionOutcome", "project_supports", "grid_scan", "random_coefficients"]


@dataclass(frozen=True)
class Support3D:
    """Finite set of distinct integer triples."""

    points: tuple

    def __post_init__(self):
        pts = tuple(tuple(int(x) for x in p) for p in self.points)
        if not pts:
            raise ValueError("3d support must be nonempty")
        if any(len(p) != 3 for p in pts):
            raise ValueError("points must be integer triples")
        if len(set(pts)) != len(pts):
            raise ValueError("points must be distinct")
        object.__setattr__(self, "points", pts)

    def last_coordinates(self):
        return sorted({p[2] for p in self.points})

    def to_json(self):
        return [list(p) for p in self.points]

    @classmethod
    def from_json(cls, data):
        return cls(tuple(tuple(p) for p in data))


@dataclass(frozen=True)
class GridConfig:
    """Log-polar grid over a compact torus patch, applied to both x1 and x2."""

    rho_min: float = -0.5
    rho_max: float = 0.5
    rho_steps: int = 5
    theta_steps: int = 8

    def axis_points(self):
        rhos = np.linspace(self.rho_min, self.rho_max, self.rho_steps)
        thetas = np.linspace(0.0, 2 * np.pi, self.theta_steps, endpoint=False)
        return rhos, thetas

    def to_json(self):
        return {
            "rho_min": self.rho_min,
            "rho_max": self.rho_max,
            "rho_steps": self.rho_steps,
            "theta_steps": self.theta_steps,
        }


@dataclass
class CurveScan:
    """|R(x1, x2)| over the grid with threshold-filtered near-zero cells."""

    grid: GridConfig
    threshold: float
    rows: list = field(default_factory=list)  # (rho1, theta1, rho2, theta2, absR)
    near_zero_cells: list = field(default_factory=list)
    max_abs: float = 0.0
    coverage_note: str = "compact torus patch only; roots escaping to the boundary are not seen"

    def to_csv_lines(self):
        yield "rho1,theta1,rho2,theta2,absR"
        for r1, t1, r2, t2, a in self.rows:
            yield f"{r1:.10g},{t1:.10g},{r2:.10g},{t2:.10g},{a:.12g}"

    def to_json(self):
        return {
            "grid": self.grid.to_json(),
            "threshold": self.threshold,
            "max_abs": self.max_abs,
            "cells": len(self.rows),
            "near_zero_cells": self.near_zero_cells,
            "coverage": self.coverage_note,
        }


@dataclass
class ProjectionOutcome:
    b1: SupportSet
    b2: SupportSet
    conditions: object
    verdict: object
    positive: bool
    interpretation: str
    scan: CurveScan | None = None

    def to_json(self):
        out = {
            "projection_b1": self.b1.to_json(),
            "projection_b2": self.b2.to_json(),
            "conditions": self.conditions.to_json(),
            "verdict": self.verdict.to_json(),
            "projection_verdict": "positive" if self.positive else "negative",
            "interpretation": self.interpretation,
        }
        if self.scan is not None:
            out["curve_scan"] = self.scan.to_json()
        return out


class DegenerateProjectionError(ValueError):
    pass


def project_supports(a1: Support3D, a2: Support3D) -> ProjectionOutcome:
    """Project both supports to the last coordinate and classify the pair."""
    c1, c2 = a1.last_coordinates(), a2.last_coordinates()
    if len(c1) < 2 or len(c2) < 2:
        raise DegenerateProjectionError(
            "projections to the last coordinate need at least two exponents"
        )
    pair = SupportPair(SupportSet(tuple(c1)), SupportSet(tuple(c2)))
    report = check_conditions(pair)
    verdict = classify(pair)
    positive = verdict.part_i_generic_a1
    if positive:
        interpretation = (
            "generic projections have only transversal double points away "
            "from an exceptional set"
        )
    else:
        interpretation = (
            "other singularity types are not excluded (the criterion is "
            "one-directional; a negative verdict asserts nothing further)"
        )
    return ProjectionOutcome(pair.b1, pair.b2, report, verdict, positive, interpretation)


def random_coefficients(a: Support3D, rng: random.Random):
    """Seeded 'generic' coefficients: uniform on the annulus 0.5 <= |c| <= 2."""
    out = {}
    for p in a.points:
        radius = 0.5 + 1.5 * rng.random()
        angle = 2 * np.pi * rng.random()
        out[p] = complex(radius * np.cos(angle), radius * np.sin(angle))
    return out


def _specialized_coeffs(a: Support3D, coeffs, support, x1, x2):
    """Coefficient vector of f(x1, x2, t) over the projected t-support."""
    vec = {b: 0j for b in support}
    for (u, v, w), c in coeffs.items():
        vec[w] += complex(c) * x1**u * x2**v
    return [vec[b] for b in support]


def _sylvester_det(coeffs1, coeffs2):
    """Numeric Sylvester determinant of two coefficient vectors (ascending
    exponent along the convex hull of the projected support)."""
    d1, d2 = len(coeffs1) - 1, len(coeffs2) - 1
    n = d1 + d2
    m = np.zeros((n, n), dtype=complex)
    r1 = list(reversed(coeffs1))
    r2 = list(reversed(coeffs2))
    for i in range(d2):
        m[i, i : i + d1 + 1] = r1
    for i in range(d1):
        m[d2 + i, i : i + d2 + 1] = r2
    return np.linalg.det(m)


def _dense_support(values):
    lo, hi = min(values), max(values)
    return list(range(lo, hi + 1))


def grid_scan(
    a1: Support3D,
    a2: Support3D,
    coeffs1=None,
    coeffs2=None,
    grid: GridConfig | None = None,
    threshold: float = 1e-8,
    seed: int = 0,
    max_retries: int = 5,
) -> CurveScan:
    """Evaluate |det Sylvester| of the specialized third-variable polynomials
    over the log-polar grid.

    Coefficients default to seeded random generic draws; degenerate draws
    (a specialized polynomial collapsing numerically) trigger a reseeded
    retry, at most max_retries times.  Explicit coefficient maps are never
    retried.
    """
    grid = grid or GridConfig()
    explicit = coeffs1 is not None and coeffs2 is not None
    rng = random.Random(seed)
    sup1 = _dense_support(Support3D(a1.points).last_coordinates())
    sup2 = _dense_support(Support3D(a2.points).last_coordinates())
    attempt = 0
    while True:
        c1 = coeffs1 if explicit else random_coefficients(a1, rng)
        c2 = coeffs2 if explicit else random_coefficients(a2, rng)
        scan = CurveScan(grid=grid, threshold=threshold)
        rhos, thetas = grid.axis_points()
        degenerate = False
        for r1 in rhos:
            for t1 in thetas:
                x1 = cmath.exp(complex(r1, t1))
                for r2 in rhos:
                    for t2 in thetas:
                        x2 = cmath.exp(complex(r2, t2))
                        v1 = _specialized_coeffs(a1, c1, sup1, x1, x2)
                        v2 = _specialized_coeffs(a2, c2, sup2, x1, x2)
                        if max(abs(z) for z in v1) < 1e-12 or max(abs(z) for z in v2) < 1e-12:
                            degenerate = True
                        val = abs(_sylvester_det(v1, v2))
                        scan.rows.append((float(r1), float(t1), float(r2), float(t2), float(val)))
        if degenerate and not explicit and attempt < max_retries:
            attempt += 1
            continue
        break
    scan.max_abs = max((r[4] for r in scan.rows), default=0.0)
    cut = threshold * max(scan.max_abs, 1e-300)
    for i, row in enumerate(scan.rows):
        if row[4] <= cut:
            scan.near_zero_cells.append(
                {"index": i, "rho1": row[0], "theta1": row[1], "rho2": row[2], "theta2": row[3], "absR": row[4]}
            )
    return scan
