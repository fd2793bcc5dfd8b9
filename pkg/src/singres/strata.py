"""Filtration-subset labels, multiplicity Vandermonde matrices, kernel
samplers, and Monte-Carlo codimension estimation.

A label (j0, jinf, multiset of per-root order pairs) indexes the subset of
coefficient pairs whose common roots have at least the prescribed orders.
The codimension estimator parameterizes each probed locus component by
(solution tuple, kernel coordinates) and reports the rank of the
parameterization's differential: the dimension found certifies an upper
bound on the codimension, while the claimed lower bound stays heuristic.
"""

from __future__ import annotations

import random
import re
import time
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

import numpy as np

from .exact import CycloElement, exact_rank, kernel_basis, solve_exact
from .laurent import LaurentPoly, ProjPoint, common_roots, ord_at
from .minors import RootOfUnity
from .supports import SupportPair, SupportSet, gap_gcd

__all__ = [
    "StratumLabel",
    "SolutionTuple",
    "CodimEstimate",
    "GenericPoints",
    "RootsOfUnity",
    "MinorCurve",
    "expected_codim",
    "label_dominates",
    "actual_label",
    "in_filtration_subset",
    "multiplicity_vandermonde",
    "corank_kernel",
    "sample_filtration_subset",
    "estimate_codim",
    "scan_corank_strata",
    "parse_label",
    "ScanSReport",
]

SVD_RTOL = 1e-7
VOTE_SAMPLES = 5


@dataclass(frozen=True)
class StratumLabel:
    """(j0, jinf, multiset of per-root order pairs), canonically sorted."""

    j0: int = 0
    jinf: int = 0
    roots: tuple = ()

    def __post_init__(self):
        if self.j0 < 0 or self.jinf < 0:
            raise ValueError("boundary orders must be non-negative")
        roots = tuple(sorted((tuple(r) for r in self.roots), reverse=True))
        for j1, j2 in roots:
            if j1 < 1 or j2 < 1:
                raise ValueError("root orders must be >= 1")
        object.__setattr__(self, "roots", roots)

    @property
    def k(self):
        return len(self.roots)

    @property
    def is_symmetric(self):
        return all(j1 == j2 for j1, j2 in self.roots)

    def symmetrized(self):
        return StratumLabel(self.j0, self.jinf, tuple((min(r), min(r)) for r in self.roots))

    def side_orders(self, side):
        return tuple(r[side - 1] for r in self.roots)

    def to_json(self):
        return {"j0": self.j0, "jinf": self.jinf, "roots": [list(r) for r in self.roots]}

    @classmethod
    def from_json(cls, data):
        return cls(data["j0"], data["jinf"], tuple(tuple(r) for r in data["roots"]))

    @classmethod
    def symmetric(cls, j0, jinf, orders):
        return cls(j0, jinf, tuple((j, j) for j in orders))

    def notation(self):
        sub = f"_{self.j0}" if self.j0 else ""
        sup = f"^{self.jinf}" if self.jinf else ""
        if not self.roots:
            return f"N{sub}{sup}"
        if self.is_symmetric:
            body = ",".join(str(r[0]) for r in self.roots)
        else:
            body = ",".join(str(r[0]) for r in self.roots) + ";" + ",".join(
                str(r[1]) for r in self.roots
            )
        return f"N{sub}{sup}({body})"


_LABEL_RE = re.compile(r"^N(?:_(\d+))?(?:\^(\d+))?(?:\(([^)]*)\))?$")


def parse_label(text: str) -> StratumLabel:
    """Parse 'N(1,1,1)', 'N_1^0(1)', 'N(2,1;1,1)' style notation."""
    m = _LABEL_RE.match(text.strip().replace(" ", ""))
    if not m:
        raise ValueError(f"cannot parse label {text!r}")
    j0 = int(m.group(1) or 0)
    jinf = int(m.group(2) or 0)
    body = m.group(3)
    if not body:
        return StratumLabel(j0, jinf, ())
    if ";" in body:
        top, bottom = body.split(";")
        j1s = [int(x) for x in top.split(",")]
        j2s = [int(x) for x in bottom.split(",")]
        if len(j1s) != len(j2s):
            raise ValueError("mismatched row lengths in general label")
        return StratumLabel(j0, jinf, tuple(zip(j1s, j2s)))
    js = [int(x) for x in body.split(",")]
    return StratumLabel.symmetric(j0, jinf, js)


def expected_codim(label: StratumLabel) -> int:
    """2*j0 + 2*jinf + sum over roots of (j1 + j2 - 1)."""
    return 2 * label.j0 + 2 * label.jinf + sum(j1 + j2 - 1 for j1, j2 in label.roots)


def label_dominates(q: StratumLabel, p: StratumLabel) -> bool:
    """Degeneration partial order on symmetric labels.

    q >= p iff p's root system maps into q's (0 -> 0, inf -> inf, finite
    roots anywhere, possibly merging) with capacity g_s at each target s.
    The map need not be surjective: q may carry extra roots.
    """
    if not (q.is_symmetric and p.is_symmetric):
        raise ValueError("order is defined on symmetric labels")
    if p.j0 > q.j0 or p.jinf > q.jinf:
        return False
    targets = [q.j0 - p.j0, q.jinf - p.jinf] + [j for j, _ in q.roots]
    weights = [j for j, _ in p.roots]

    def assign(i, caps):
        if i == len(weights):
            return True
        w = weights[i]
        seen = set()
        for s, cap in enumerate(caps):
            if cap >= w and (s, cap) not in seen:
                seen.add((s, cap))
                caps[s] -= w
                if assign(i + 1, caps):
                    caps[s] += w
                    return True
                caps[s] += w
        return False

    return assign(0, targets)


def actual_label(f: LaurentPoly, g: LaurentPoly, tol=1e-8) -> StratumLabel:
    """General label of (f, g): boundary pair orders plus per-root order pairs."""
    if f.is_zero or g.is_zero:
        raise ValueError("label of a zero polynomial is undefined")
    records = common_roots(f, g, tol)
    j0 = jinf = 0
    roots = []
    for r in records:
        if r.point.kind == "zero":
            j0 = r.pair_ord
        elif r.point.kind == "infinity":
            jinf = r.pair_ord
        else:
            roots.append((r.ord1, r.ord2))
    return StratumLabel(j0, jinf, tuple(roots))


def _match_size(left_adj, n_right):
    match_r = [-1] * n_right

    def augment(u, seen):
        for v in left_adj[u]:
            if not seen[v]:
                seen[v] = True
                if match_r[v] == -1 or augment(match_r[v], seen):
                    match_r[v] = u
                    return True
        return False

    count = 0
    for u in range(len(left_adj)):
        if augment(u, [False] * n_right):
            count += 1
    return count


def in_filtration_subset(f: LaurentPoly, g: LaurentPoly, label: StratumLabel, tol=1e-8) -> bool:
    """Membership test: boundary orders and an injective assignment of the
    label's root pairs to distinct finite common roots (bipartite matching)."""
    if f.is_zero or g.is_zero:
        raise ValueError("zero polynomial")
    if min(ord_at(f, ProjPoint.zero(), tol), ord_at(g, ProjPoint.zero(), tol)) < label.j0:
        return False
    if min(ord_at(f, ProjPoint.infinity(), tol), ord_at(g, ProjPoint.infinity(), tol)) < label.jinf:
        return False
    finite = [r for r in common_roots(f, g, tol) if r.point.kind == "finite"]
    adj = [
        [ri for ri, rec in enumerate(finite) if rec.ord1 >= j1 and rec.ord2 >= j2]
        for j1, j2 in label.roots
    ]
    return _match_size(adj, len(finite)) == label.k


@dataclass(frozen=True)
class SolutionTuple:
    """Tuple of pairwise distinct nonzero points of the solution space."""

    points: tuple

    def __post_init__(self):
        pts = tuple(self.points)
        keys = []
        for x in pts:
            if isinstance(x, RootOfUnity):
                g = gcd(x.k, x.n) if x.k else x.n
                keys.append(("unity", x.k // g, x.n // g))
            else:
                if not x:
                    raise ValueError("solution points must be nonzero")
                keys.append(("scalar", complex(x)))
        if len(set(keys)) != len(keys):
            raise ValueError("solution points must be pairwise distinct")
        object.__setattr__(self, "points", pts)

    def __iter__(self):
        return iter(self.points)

    def __len__(self):
        return len(self.points)


def _falling(b, d):
    out = 1
    for t in range(d):
        out *= b - t
    return out


def _point_power(x, e):
    if isinstance(x, RootOfUnity):
        return x.power(e)
    if isinstance(x, (int, Fraction)):
        return Fraction(x) ** e
    return complex(x) ** e


def multiplicity_vandermonde(b: SupportSet, xs, js):
    """Rows f^(d)(x_m) for d < j_m, columns indexed by the support.

    Entry for exponent col b and derivative d is b(b-1)...(b-d+1) * x^(b-d)
    (falling-factorial convention, valid for negative Laurent exponents).
    """
    pts = list(xs.points if isinstance(xs, SolutionTuple) else xs)
    if len(pts) != len(js):
        raise ValueError("one multiplicity per point required")
    SolutionTuple(tuple(pts))  # validates distinctness / nonzero
    rows = []
    for x, j in zip(pts, js):
        for d in range(j):
            rows.append([_falling(e, d) * _point_power(x, e - d) for e in b.elements])
    return rows


def _is_float_matrix(rows):
    return any(isinstance(v, (complex, float, np.complexfloating)) for r in rows for v in r)


def corank_kernel(rows, rtol=SVD_RTOL):
    """(corank, kernel basis) of the linear map f -> M f.

    corank = rows - rank; exact elimination for rational / cyclotomic
    entries, thresholded SVD for floats.
    """
    if not rows or not rows[0]:
        raise ValueError("matrix must be nonempty")
    if _is_float_matrix(rows):
        m = np.array([[complex(v) for v in r] for r in rows])
        u, s, vh = np.linalg.svd(m)
        cut = rtol * (s[0] if len(s) else 0.0)
        rank = int(np.sum(s > cut))
        kernel = [vh[i].conj() for i in range(rank, vh.shape[0])]
        return len(rows) - rank, kernel
    rank = None
    if any(isinstance(v, CycloElement) for r in rows for v in r):
        from .exact import exact_rref

        rank, _, _ = exact_rref(rows)
        kernel = kernel_basis(rows)
    else:
        rank = exact_rank(rows)
        kernel = kernel_basis(rows)
    return len(rows) - rank, kernel


# --- locus descriptions ----------------------------------------------------


@dataclass(frozen=True)
class GenericPoints:
    pass


@dataclass(frozen=True)
class RootsOfUnity:
    n: int


@dataclass(frozen=True)
class MinorCurve:
    side: int = 1
    triple: tuple | None = None


def _effective_elements(b: SupportSet, j0, jinf):
    lo, hi = b.min + j0, b.max - jinf
    return tuple(e for e in b.elements if lo <= e <= hi)


def _embed(vec, eff, b: SupportSet):
    pos = {e: i for i, e in enumerate(eff)}
    return [vec[pos[e]] if e in pos else 0 for e in b.elements]


def _random_fraction(rng, lo=-9, hi=9):
    while True:
        num = rng.randint(lo, hi)
        if num:
            return Fraction(num, rng.randint(1, 6))


def _random_unit_annulus(rng):
    rho = rng.uniform(-0.6, 0.6)
    theta = rng.uniform(0, 2 * np.pi)
    return complex(np.exp(rho) * np.cos(theta), np.exp(rho) * np.sin(theta))


def _draw_tuple(pair, label, locus, rng):
    """Sample a solution tuple from the requested locus.

    Returns (points, tangent_directions) where each direction is a length-k
    vector spanning the locus's tangent at the sample.
    """
    k = label.k
    if isinstance(locus, GenericPoints):
        pts = []
        while len(pts) < k:
            x = _random_fraction(rng)
            if x and x not in pts:
                pts.append(x)
        dirs = [[1 if i == m else 0 for i in range(k)] for m in range(k)]
        return pts, dirs
    if isinstance(locus, RootsOfUnity):
        n = locus.n
        if k < 2 or n < 2 or n < k:
            return None
        exps = [0] + rng.sample(range(1, n), k - 1)
        c = _random_unit_annulus(rng)
        omega = [np.exp(2j * np.pi * e / n) for e in exps]
        pts = [c * w for w in omega]
        return pts, [list(omega)]
    if isinstance(locus, MinorCurve):
        if k != 3:
            return None
        b = (pair.b1 if locus.side == 1 else pair.b2).elements
        if len(b) < 3:
            return None
        triple = locus.triple or tuple(sorted(rng.sample(b, 3)))
        a_, b_, c_ = triple
        for _ in range(12):
            t = _random_unit_annulus(rng)
            coeffs = _minor_poly_in_u(a_, b_, c_, t)
            if coeffs is None:
                continue
            roots = np.roots(coeffs)
            good = [
                u
                for u in roots
                if abs(u) > 1e-9 and abs(u - 1) > 1e-9 and abs(u - t) > 1e-9
            ]
            if not good:
                continue
            u = complex(good[0])
            c = _random_unit_annulus(rng)
            pts = [c, c * t, c * u]
            dpdt = _minor_du_dt(a_, b_, c_, t, u)
            if dpdt is None:
                dirs = [[1, t, u]]
            else:
                dirs = [[1, t, u], [0, c, c * dpdt]]
            return pts, dirs
        return None
    raise ValueError(f"unknown locus {locus!r}")


def _minor_poly_in_u(a, b, c, t):
    """Coefficients (descending) of det[[1,1,1],[t^a,t^b,t^c],[u^a,u^b,u^c]]
    as a polynomial in u, exponents shifted to be non-negative."""
    lo = min(a, b, c)
    a, b, c = a - lo, b - lo, c - lo
    deg = max(a, b, c)
    coeffs = [0j] * (deg + 1)
    # det = (t^b - t^c) u^a + (t^c - t^a) u^b + (t^a - t^b) u^c
    coeffs[deg - a] += t**b - t**c
    coeffs[deg - b] += t**c - t**a
    coeffs[deg - c] += t**a - t**b
    if all(abs(x) < 1e-14 for x in coeffs):
        return None
    return coeffs


def _minor_du_dt(a, b, c, t, u):
    """Implicit derivative du/dt on the minor curve, None at critical points."""
    dd_dt = (
        (b * t ** (b - 1) - c * t ** (c - 1)) * u**a
        + (c * t ** (c - 1) - a * t ** (a - 1)) * u**b
        + (a * t ** (a - 1) - b * t ** (b - 1)) * u**c
    )
    dd_du = (
        (t**b - t**c) * a * u ** (a - 1)
        + (t**c - t**a) * b * u ** (b - 1)
        + (t**a - t**b) * c * u ** (c - 1)
    )
    if abs(dd_du) < 1e-12:
        return None
    return -dd_dt / dd_du


def _side_matrices(pair, label, pts):
    eff1 = _effective_elements(pair.b1, label.j0, label.jinf)
    eff2 = _effective_elements(pair.b2, label.j0, label.jinf)
    if not eff1 or not eff2:
        return None
    m1 = (
        multiplicity_vandermonde(SupportSet(eff1), pts, label.side_orders(1))
        if label.k
        else []
    )
    m2 = (
        multiplicity_vandermonde(SupportSet(eff2), pts, label.side_orders(2))
        if label.k
        else []
    )
    return eff1, eff2, m1, m2


def _kernel_of(mat, ncols, rtol=SVD_RTOL):
    if not mat:
        return [[1 if i == j else 0 for i in range(ncols)] for j in range(ncols)]
    _, kern = corank_kernel(mat, rtol)
    return kern


def sample_filtration_subset(pair: SupportPair, label: StratumLabel, locus, seed=0):
    """Draw (f, g, xs) from the kernel construction over the locus, or None.

    The pair is built from random kernel combinations over the effective
    supports (boundary orders are imposed by zeroing convex-hull coefficients)
    and verified to lie in the filtration subset.
    """
    rng = random.Random(seed)
    if label.k == 0:
        drawn = ([], [])
    else:
        drawn = _draw_tuple(pair, label, locus, rng)
        if drawn is None:
            return None
    pts, _dirs = drawn
    sides = _side_matrices(pair, label, pts)
    if sides is None:
        return None
    eff1, eff2, m1, m2 = sides
    k1 = _kernel_of(m1, len(eff1))
    k2 = _kernel_of(m2, len(eff2))
    if not k1 or not k2:
        return None
    exact = isinstance(locus, GenericPoints)

    def combo(kern, rng):
        if exact:
            w = [_random_fraction(rng) for _ in kern]
            return [sum(wi * v[i] for wi, v in zip(w, kern)) for i in range(len(kern[0]))]
        w = [complex(rng.gauss(0, 1), rng.gauss(0, 1)) for _ in kern]
        return [sum(wi * complex(v[i]) for wi, v in zip(w, kern)) for i in range(len(kern[0]))]

    for _ in range(8):
        f = LaurentPoly(pair.b1, dict(zip(pair.b1.elements, _embed(combo(k1, rng), eff1, pair.b1))))
        g = LaurentPoly(pair.b2, dict(zip(pair.b2.elements, _embed(combo(k2, rng), eff2, pair.b2))))
        if f.is_zero or g.is_zero:
            continue
        if in_filtration_subset(f, g, label):
            return f, g, pts
    return None


@dataclass
class CodimEstimate:
    """Sampling-based codimension report for one filtration subset.

    best_dim_found is the certified side (a dimension actually realized);
    codim_lower_bound_claimed = ambient - best_dim_found is heuristic.
    """

    ambient_dim: int
    best_dim_found: int | None
    components_probed: list = field(default_factory=list)
    sample_count: int = 0
    seed: int = 0
    label: str = ""
    pair: dict | None = None

    @property
    def estimate(self):
        if self.best_dim_found is None:
            return None
        return self.ambient_dim - self.best_dim_found

    @property
    def codim_lower_bound_claimed(self):
        return self.estimate

    def to_json(self):
        return {
            "ambient_dim": self.ambient_dim,
            "best_dim_found": self.best_dim_found,
            "codim_estimate": self.estimate,
            "codim_lower_bound_claimed": self.estimate,
            "heuristic_lower_bound": True,
            "components_probed": [
                {"component": desc, "dim_found": dim} for desc, dim in self.components_probed
            ],
            "sample_count": self.sample_count,
            "seed": self.seed,
            "label": self.label,
            "pair": self.pair,
        }


def _derivative_rhs(poly_coeffs, eff, js, point_index, x_values, scalar_pow):
    """-(dM/dx_m) f for the tangent solve: rows of point m step one
    derivative order up, other rows vanish."""
    rhs = []
    for m, j in enumerate(js):
        for d in range(j):
            if m != point_index:
                rhs.append(0)
            else:
                val = 0
                for e, cf in zip(eff, poly_coeffs):
                    val += cf * _falling(e, d + 1) * scalar_pow(x_values[m], e - d - 1)
                rhs.append(-val)
    return rhs


def _span_dimension_exact(pair, label, pts, dirs):
    sides = _side_matrices(pair, label, pts)
    if sides is None:
        return None
    eff1, eff2, m1, m2 = sides
    k1 = _kernel_of(m1, len(eff1))
    k2 = _kernel_of(m2, len(eff2))
    if not k1 or not k2:
        return None
    rng = random.Random(1234577)
    f1 = [sum(_random_fraction(rng) * v[i] for v in k1) for i in range(len(eff1))]
    f2 = [sum(_random_fraction(rng) * v[i] for v in k2) for i in range(len(eff2))]
    n1, n2 = len(pair.b1.elements), len(pair.b2.elements)
    rows = []
    for v in k1:
        rows.append(_embed(v, eff1, pair.b1) + [0] * n2)
    for w in k2:
        rows.append([0] * n1 + _embed(w, eff2, pair.b2))
    js1, js2 = label.side_orders(1), label.side_orders(2)
    pow_ = lambda x, e: Fraction(x) ** e
    for direction in dirs:
        # direction is a coordinate tangent e_m for the generic locus
        m = next(i for i, d in enumerate(direction) if d)
        rhs1 = _derivative_rhs(f1, eff1, js1, m, pts, pow_)
        rhs2 = _derivative_rhs(f2, eff2, js2, m, pts, pow_)
        df = solve_exact(m1, rhs1) if m1 else [0] * len(eff1)
        dg = solve_exact(m2, rhs2) if m2 else [0] * len(eff2)
        if df is None or dg is None:
            return None
        rows.append(_embed(df, eff1, pair.b1) + _embed(dg, eff2, pair.b2))
    return exact_rank(rows) if rows else 0


def _span_dimension_float(pair, label, pts, dirs, rtol=SVD_RTOL):
    sides = _side_matrices(pair, label, pts)
    if sides is None:
        return None
    eff1, eff2, m1, m2 = sides
    a1 = np.array([[complex(v) for v in r] for r in m1]) if m1 else np.zeros((0, len(eff1)))
    a2 = np.array([[complex(v) for v in r] for r in m2]) if m2 else np.zeros((0, len(eff2)))

    def kern(a, ncols):
        if a.shape[0] == 0:
            return np.eye(ncols, dtype=complex)
        u, s, vh = np.linalg.svd(a)
        cut = rtol * (s[0] if len(s) else 0)
        rank = int(np.sum(s > cut))
        return vh[rank:].conj()

    k1 = kern(a1, len(eff1))
    k2 = kern(a2, len(eff2))
    if k1.shape[0] == 0 or k2.shape[0] == 0:
        return None
    rng = np.random.default_rng(abs(hash(tuple(map(complex, pts)))) % (2**32))
    f1 = (rng.normal(size=k1.shape[0]) + 1j * rng.normal(size=k1.shape[0])) @ k1
    f2 = (rng.normal(size=k2.shape[0]) + 1j * rng.normal(size=k2.shape[0])) @ k2
    n1, n2 = len(pair.b1.elements), len(pair.b2.elements)
    rows = []
    for v in k1:
        rows.append(_embed(list(v), eff1, pair.b1) + [0] * n2)
    for w in k2:
        rows.append([0] * n1 + _embed(list(w), eff2, pair.b2))
    js1, js2 = label.side_orders(1), label.side_orders(2)
    pow_ = lambda x, e: complex(x) ** e
    xs = [complex(x) for x in pts]
    for direction in dirs:
        rhs1 = np.zeros(a1.shape[0], dtype=complex)
        rhs2 = np.zeros(a2.shape[0], dtype=complex)
        for m, d in enumerate(direction):
            if not d:
                continue
            rhs1 += np.array(
                _derivative_rhs(f1, eff1, js1, m, xs, pow_), dtype=complex
            ) * complex(d)
            rhs2 += np.array(
                _derivative_rhs(f2, eff2, js2, m, xs, pow_), dtype=complex
            ) * complex(d)
        df = np.linalg.lstsq(a1, rhs1, rcond=None)[0] if a1.shape[0] else np.zeros(len(eff1))
        dg = np.linalg.lstsq(a2, rhs2, rcond=None)[0] if a2.shape[0] else np.zeros(len(eff2))
        if a1.shape[0] and np.linalg.norm(a1 @ df - rhs1) > 1e-6 * max(1, np.linalg.norm(rhs1)):
            return None
        if a2.shape[0] and np.linalg.norm(a2 @ dg - rhs2) > 1e-6 * max(1, np.linalg.norm(rhs2)):
            return None
        rows.append(_embed(list(df), eff1, pair.b1) + _embed(list(dg), eff2, pair.b2))
    mat = np.array([[complex(v) for v in r] for r in rows])
    norms = np.linalg.norm(mat, axis=1)
    norms[norms == 0] = 1.0
    mat = mat / norms[:, None]
    s = np.linalg.svd(mat, compute_uv=False)
    cut = rtol * (s[0] if len(s) else 0)
    return int(np.sum(s > cut))


def _unity_configs(k, n_max):
    """Distinct projectivized root-of-unity tuples (exponents with x1 = 1)."""
    seen = set()
    out = []
    for n in range(2, n_max + 1):
        if k == 2:
            combos = [(p,) for p in range(1, n)]
        elif k == 3:
            combos = [(p, q) for p in range(1, n) for q in range(p + 1, n)]
        else:
            combos = []
        for exps in combos:
            key = tuple(sorted((e // gcd(e, n), n // gcd(e, n)) for e in exps))
            if key in seen:
                continue
            seen.add(key)
            out.append((n, (0,) + exps))
    return out


def estimate_codim(
    pair: SupportPair,
    label: StratumLabel,
    trials: int = 3,
    seed: int = 0,
    n_max: int = 12,
    max_minor_curves: int = 48,
) -> CodimEstimate:
    """Estimate the codimension of the filtration subset by probing locus
    components: generic tuples (exact rank at rational points), every
    root-of-unity configuration with n <= n_max, and single-minor curves
    (thresholded SVD with a majority vote over VOTE_SAMPLES draws)."""
    rng = random.Random(seed)
    ambient = len(pair.b1.elements) + len(pair.b2.elements)
    est = CodimEstimate(
        ambient_dim=ambient,
        best_dim_found=None,
        seed=seed,
        label=label.notation(),
        pair=pair.to_json(),
    )

    def record(desc, dim):
        est.components_probed.append((desc, dim))
        if dim is not None and (est.best_dim_found is None or dim > est.best_dim_found):
            est.best_dim_found = dim

    k = label.k
    if k == 0:
        eff1 = _effective_elements(pair.b1, label.j0, label.jinf)
        eff2 = _effective_elements(pair.b2, label.j0, label.jinf)
        dim = len(eff1) + len(eff2) if eff1 and eff2 else None
        record("coordinate-subspace", dim)
        est.sample_count = 1
        return est

    # generic component, exact at rational tuples
    best = None
    for _ in range(max(1, trials)):
        pts, dirs = _draw_tuple(pair, label, GenericPoints(), rng)
        dim = _span_dimension_exact(pair, label, pts, dirs)
        est.sample_count += 1
        if dim is not None and (best is None or dim > best):
            best = dim
    record("generic", best)

    # root-of-unity components
    for n, exps in _unity_configs(k, n_max):
        if n < k:  # need k distinct n-th roots
            continue
        if len(set(e % n for e in exps)) < len(exps):
            continue
        dims = []
        for _ in range(VOTE_SAMPLES):
            c = _random_unit_annulus(rng)
            omega = [np.exp(2j * np.pi * e / n) for e in exps]
            pts = [c * w for w in omega]
            dim = _span_dimension_float(pair, label, pts, [list(omega)])
            est.sample_count += 1
            if dim is not None:
                dims.append(dim)
        if dims:
            vote = Counter(dims).most_common()
            top = min(d for d, cnt in vote if cnt == vote[0][1])
            record(f"unity(n={n}, exps={list(exps)})", top)

    # single-minor curves (three-point labels only)
    if k == 3:
        curves = []
        for side, b in ((1, pair.b1), (2, pair.b2)):
            elems = b.elements
            for i in range(len(elems) - 2):
                for j in range(i + 1, len(elems) - 1):
                    for l in range(j + 1, len(elems)):
                        curves.append(MinorCurve(side, (elems[i], elems[j], elems[l])))
        rng.shuffle(curves)
        for curve in curves[:max_minor_curves]:
            dims = []
            for _ in range(VOTE_SAMPLES):
                drawn = _draw_tuple(pair, label, curve, rng)
                if drawn is None:
                    continue
                pts, dirs = drawn
                dim = _span_dimension_float(pair, label, pts, dirs)
                est.sample_count += 1
                if dim is not None:
                    dims.append(dim)
            if dims:
                vote = Counter(dims).most_common()
                top = min(d for d, cnt in vote if cnt == vote[0][1])
                record(f"minor-curve(side={curve.side}, triple={curve.triple})", top)
    return est


# --- corank stratum scan ----------------------------------------------------


@dataclass
class ScanSReport:
    pair: dict
    label: str
    n_max: int
    found: dict = field(default_factory=dict)
    predictions: dict = field(default_factory=dict)
    mismatches: list = field(default_factory=list)
    generic_corank: tuple | None = None
    wall_time: float = 0.0

    def found_coranks(self):
        return set(self.found.keys())

    def side_observed(self, side: int, corank: int) -> bool:
        """Did any probed tuple realize the given corank on the given side?"""
        keys = set(self.found)
        if self.generic_corank is not None:
            keys.add(self.generic_corank)
        return any(key[side - 1] == corank for key in keys)

    def joint_observed(self, c1: int, c2: int) -> bool:
        if self.generic_corank == (c1, c2):
            return True
        return (c1, c2) in self.found

    def to_json(self):
        return {
            "pair": self.pair,
            "label": self.label,
            "n_max": self.n_max,
            "found": {f"{k[0]},{k[1]}": v for k, v in self.found.items()},
            "predictions": {key: val for key, val in self.predictions.items()},
            "mismatches": self.mismatches,
            "generic_corank": self.generic_corank,
            "wall_time_s": self.wall_time,
        }


def _unity_corank_monomial(b_elems, exps, n):
    """Exact corank of the k x |B| matrix with rows zeta^(p*e) over e in B
    (multiplicity-free case), via congruences and minor tests."""
    k = len(exps)
    # rank 1 iff every row is constant (the first row, exps[0]=0, is ones)
    if all((p * (e - b_elems[0])) % n == 0 for p in exps for e in b_elems):
        return k - 1
    if k == 2:
        return 0
    # k == 3: rank <= 2 iff all 3x3 minors vanish
    if len(b_elems) < 3:
        return 1
    from . import kernels

    table = kernels.reduction_table_array(n)
    p, q = exps[1], exps[2]
    if kernels.all_minors_vanish_kernel(table, b_elems, p, q):
        return 1
    return 0


def _unity_corank_general(b: SupportSet, exps, n, js):
    pts = [RootOfUnity(n, p) for p in exps]
    rows = multiplicity_vandermonde(b, pts, js)
    cyc_rows = [
        [v if isinstance(v, CycloElement) else CycloElement.from_int(n, v) for v in r]
        for r in rows
    ]
    cork, _ = corank_kernel(cyc_rows)
    return cork


def scan_corank_strata(pair: SupportPair, label: StratumLabel, n_max: int = 12, seed: int = 0):
    """Enumerate projectivized root-of-unity tuples (x1 = 1, others n-th
    roots, n <= n_max) plus random generic tuples, compute both coranks
    exactly, and compare the nonempty corank strata against the predicted
    ones (gap-gcd and split criteria)."""
    if label.k < 1 or label.k > 3:
        raise ValueError("scan supports labels with 1..3 roots")
    start = time.perf_counter()
    report = ScanSReport(pair.to_json(), label.notation(), n_max)
    k = label.k
    js1, js2 = label.side_orders(1), label.side_orders(2)
    multiplicity_free = all(j == 1 for j in js1 + js2)

    def coranks_at(n, exps):
        if multiplicity_free:
            c1 = _unity_corank_monomial(pair.b1.elements, exps, n)
            c2 = _unity_corank_monomial(pair.b2.elements, exps, n)
            return c1, c2
        return (
            _unity_corank_general(pair.b1, exps, n, js1),
            _unity_corank_general(pair.b2, exps, n, js2),
        )

    def note(key, payload):
        rec = report.found.setdefault(key, {"count": 0, "witness": payload})
        rec["count"] += 1

    if k == 1:
        configs = [(1, (0,))]
    else:
        configs = _unity_configs(k, n_max)
    for n, exps in configs:
        c1, c2 = coranks_at(max(n, 1), exps)
        if (c1, c2) != (0, 0):
            note((c1, c2), {"kind": "unity", "n": n, "exponents": list(exps)})
        if multiplicity_free and k == 3 and c1 == 2:
            g = gap_gcd(pair.b1)
            if not all((p * g) % n == 0 for p in exps):
                report.mismatches.append(
                    {"reason": "corank-2 witness not of root-of-unity gap form", "n": n}
                )

    # generic random rational tuples
    rng = random.Random(seed)
    gen_cork = None
    for _ in range(4):
        pts = []
        while len(pts) < k:
            x = _random_fraction(rng)
            if x not in pts:
                pts.append(x)
        rows1 = multiplicity_vandermonde(pair.b1, pts, js1)
        rows2 = multiplicity_vandermonde(pair.b2, pts, js2)
        c1, _ = corank_kernel(rows1)
        c2, _ = corank_kernel(rows2)
        gen_cork = (c1, c2) if gen_cork is None else (min(gen_cork[0], c1), min(gen_cork[1], c2))
        if (c1, c2) != (0, 0):
            note((c1, c2), {"kind": "generic", "points": [str(x) for x in pts]})
    report.generic_corank = gen_cork

    report.predictions = _stratum_predictions(pair, label)
    for key, predicted in report.predictions.items():
        kind, spec = key.split(":")
        if kind == "side1":
            observed = report.side_observed(1, int(spec))
        elif kind == "side2":
            observed = report.side_observed(2, int(spec))
        else:
            c1, c2 = (int(t) for t in spec.split(","))
            observed = report.joint_observed(c1, c2)
        if bool(predicted) != observed:
            report.mismatches.append(
                {"stratum": key, "predicted_nonempty": predicted, "observed": observed}
            )
    report.wall_time = time.perf_counter() - start
    return report


def _split_with_modulus(target: SupportSet, g_other: int):
    """Is there k >= 3 dividing g_other with target in exactly two residue
    classes mod k?  (The exactly-two case excludes a full common sublattice.)"""
    for k in range(3, g_other + 1):
        if g_other % k:
            continue
        residues = {e % k for e in target.elements}
        if len(residues) == 2:
            return k
    return None


def _stratum_predictions(pair, label):
    """Nonemptiness predictions for the characterized corank strata.

    Side predictions cover the one-polynomial strata (corank c on side i for
    some tuple); joint predictions cover the two-polynomial intersections.
    Strata without a sharp criterion are omitted.
    """
    js1, js2 = label.side_orders(1), label.side_orders(2)
    if any(j != 1 for j in js1 + js2):
        return {}
    g1, g2 = gap_gcd(pair.b1), gap_gcd(pair.b2)
    k = label.k
    out = {}
    if k == 2:
        out["side1:1"] = g1 >= 2
        out["side2:1"] = g2 >= 2
        out["joint:1,1"] = gcd(g1, g2) >= 2
    if k == 3:
        out["side1:2"] = g1 >= 3
        out["side2:2"] = g2 >= 3
        out["joint:2,2"] = gcd(g1, g2) >= 3
        # the split criterion characterizes the mixed strata only when the
        # supports share no sublattice; order-2 row degeneracies defeat it
        # otherwise, so those pairs are left uncharacterized
        if gcd(g1, g2) == 1:
            out["joint:1,2"] = _split_with_modulus(pair.b1, g2) is not None
            out["joint:2,1"] = _split_with_modulus(pair.b2, g1) is not None
    return out
