"""Plane-curve germ classification for transversal singularity types.

A germ is a bivariate polynomial in local coordinates (s, t) around the
origin.  Classification looks at the lowest homogeneous form: squarefree
forms give nodes / ordinary multiple points, a single repeated tangent leads
to a Newton-polygon slope signature (2/3 for the cusp), anything else is the
safe fallback Other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import UniPoly, poly_gcd
from .mpoly import MPoly

__all__ = ["PlaneGerm", "GermClass", "slice_germ", "classify_germ"]


class PlaneGerm:
    """Bivariate polynomial germ: exponent pairs (deg_s, deg_t) -> Fraction."""

    __slots__ = ("terms",)

    def __init__(self, terms):
        self.terms = {tuple(e): Fraction(c) for e, c in dict(terms).items() if c}

    @property
    def is_zero(self):
        return not self.terms

    def multiplicity(self):
        """Lowest total degree of a term (the germ's multiplicity)."""
        if self.is_zero:
            raise ValueError("zero germ")
        return min(i + j for i, j in self.terms)

    def lowest_form(self):
        m = self.multiplicity()
        return {e: c for e, c in self.terms.items() if sum(e) == m}

    def substitute_t_shift(self, r):
        """Germ of p(s, t + r*s); linear change keeping s."""
        out = {}
        for (i, j), c in self.terms.items():
            # (t + r s)^j expanded binomially
            binom = 1
            for k in range(j + 1):
                out_key = (i + (j - k), k)
                out[out_key] = out.get(out_key, Fraction(0)) + c * binom * (Fraction(r) ** (j - k))
                binom = binom * (j - k) // (k + 1)
        return PlaneGerm(out)

    def swap_axes(self):
        return PlaneGerm({(j, i): c for (i, j), c in self.terms.items()})

    def linear_change(self, a, b, c, d):
        """Germ of p(a*s + b*t, c*s + d*t)."""
        acc = {}
        s_new = {(1, 0): Fraction(a), (0, 1): Fraction(b)}
        t_new = {(1, 0): Fraction(c), (0, 1): Fraction(d)}

        def mul(p, q):
            res = {}
            for e1, c1 in p.items():
                for e2, c2 in q.items():
                    key = (e1[0] + e2[0], e1[1] + e2[1])
                    res[key] = res.get(key, Fraction(0)) + c1 * c2
            return res

        for (i, j), coef in self.terms.items():
            term = {(0, 0): Fraction(coef)}
            for _ in range(i):
                term = mul(term, s_new)
            for _ in range(j):
                term = mul(term, t_new)
            for e, c in term.items():
                acc[e] = acc.get(e, Fraction(0)) + c
        return PlaneGerm(acc)

    def to_json(self):
        return {"terms": [{"exp": list(e), "coef": str(c)} for e, c in sorted(self.terms.items())]}

    @classmethod
    def from_json(cls, data):
        return cls({tuple(t["exp"]): Fraction(t["coef"]) for t in data["terms"]})

    def __repr__(self):
        bits = " + ".join(f"{c}*s^{i}*t^{j}" for (i, j), c in sorted(self.terms.items()))
        return f"PlaneGerm({bits or '0'})"


@dataclass(frozen=True)
class GermClass:
    tag: str  # NotOnCurve | Smooth | NodeA1 | OrdinaryMultiple | UniTangent | Other
    m: int | None = None
    slope: Fraction | None = None

    def to_json(self):
        return {
            "tag": self.tag,
            "m": self.m,
            "slope": None if self.slope is None else str(self.slope),
        }


def slice_germ(poly: MPoly, point: dict, dir1: dict, dir2: dict) -> PlaneGerm:
    """Restrict a polynomial to the plane point + s*dir1 + t*dir2, exactly.

    Directions must be linearly independent as coefficient vectors.
    """
    vecs = [[Fraction(dir1.get(v, 0)), Fraction(dir2.get(v, 0))] for v in poly.vars]
    rank2 = any(
        u[0] * w[1] - u[1] * w[0] != 0 for i, u in enumerate(vecs) for w in vecs[i + 1 :]
    )
    if not rank2:
        raise ValueError("slice directions are linearly dependent")

    def var_germ(v):
        return PlaneGerm(
            {
                (0, 0): Fraction(point.get(v, 0)),
                (1, 0): Fraction(dir1.get(v, 0)),
                (0, 1): Fraction(dir2.get(v, 0)),
            }
        )

    acc = {}
    for exp, coef in poly.terms.items():
        term = {(0, 0): Fraction(coef)}
        for v, e in zip(poly.vars, exp):
            if not e:
                continue
            base = var_germ(v)
            power = base
            for _ in range(e - 1):
                power = _germ_mul(power, base)
            term = _germ_mul(term, power.terms)
        for e, c in term.items():
            acc[e] = acc.get(e, Fraction(0)) + c
    return PlaneGerm(acc)


def _germ_mul(a, b):
    a_terms = a.terms if isinstance(a, PlaneGerm) else a
    b_terms = b.terms if isinstance(b, PlaneGerm) else b
    out = {}
    for e1, c1 in a_terms.items():
        for e2, c2 in b_terms.items():
            key = (e1[0] + e2[0], e1[1] + e2[1])
            out[key] = out.get(key, Fraction(0)) + c1 * c2
    return PlaneGerm(out) if isinstance(a, PlaneGerm) else out


def _form_profile(lowest, m):
    """(t_mult, s_mult, reduced univariate q~) of the degree-m binary form.

    Writing L = sum c_i s^i t^(m-i), q(z) = sum c_i z^i factors as
    z^s_mult * q~(z) with q~(0) != 0, and t divides L exactly m - deg(q)
    times.
    """
    coeffs = [Fraction(0)] * (m + 1)
    for (i, j), c in lowest.items():
        coeffs[i] = c
    q = UniPoly(coeffs)
    t_mult = m - q.degree
    s_mult = 0
    qs = list(q.coeffs)
    while qs and qs[0] == 0:
        qs.pop(0)
        s_mult += 1
    return t_mult, s_mult, UniPoly(qs)


def classify_germ(germ: PlaneGerm) -> GermClass:
    """Classify by the lowest homogeneous form; exact, no root finding.

    Squarefreeness of the form and the distinct-tangent count come from
    gcds with derivatives.  Single repeated tangents are rotated onto the
    t = 0 form and read off the Newton polygon's steepest edge from (0, m).
    """
    if germ.is_zero:
        raise ValueError("cannot classify the zero germ")
    m = germ.multiplicity()
    if m == 0:
        return GermClass("NotOnCurve")
    if m == 1:
        return GermClass("Smooth", 1)
    lowest = germ.lowest_form()
    t_mult, s_mult, q = _form_profile(lowest, m)
    if q.degree > 0:
        qsq = poly_gcd(q, q.derivative())
        q_distinct = q.degree - qsq.degree
        q_squarefree = qsq.degree == 0
    else:
        q_distinct = 0
        q_squarefree = True
    tangents = (1 if t_mult else 0) + (1 if s_mult else 0) + q_distinct
    squarefree = t_mult <= 1 and s_mult <= 1 and q_squarefree
    if squarefree:
        return GermClass("NodeA1", 2) if m == 2 else GermClass("OrdinaryMultiple", m)
    if tangents != 1:
        return GermClass("Other", m)
    # single repeated tangent: normalize it to the pure t^m form
    if t_mult == m:
        normalized = germ
    elif s_mult == m:
        normalized = germ.swap_axes()
    else:
        # q~ = unit * (z - r)^m, z = s/t, so the tangent factor is (s - r*t);
        # swapping axes turns it into (t - r*s), then shift t -> t + r*s
        deg = q.degree
        r = -Fraction(q.coeffs[deg - 1], deg * q.coeffs[deg])
        normalized = germ.swap_axes().substitute_t_shift(r)
    slope = None
    for (i, j), _ in normalized.terms.items():
        if j < m and i > 0:
            cand = Fraction(m - j, i)
            if slope is None or cand > slope:
                slope = cand
    if slope is None:
        return GermClass("Other", m)
    return GermClass("UniTangent", m, slope)
