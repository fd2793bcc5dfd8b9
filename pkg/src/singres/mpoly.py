"""Sparse multivariate polynomials over exact scalars and the Sylvester
resultant of a support pair with symbolic coefficients.

Coefficient variables are named f<b> / g<b> after the exponents of the two
supports.  The resultant is the determinant of the classical Sylvester
matrix of the two homogenized forms; for small sizes it is expanded with a
memoized minor recursion, above that by fraction-free elimination with exact
polynomial division.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .supports import SupportPair

__all__ = [
    "MPoly",
    "SylvesterMatrix",
    "sylvester_matrix",
    "resultant_poly",
    "specialize",
    "jacobian_vanishes",
    "determinant",
]

MINOR_EXPANSION_MAX = 10
DEFAULT_DET_BOUND = 16


class MPoly:
    """Sparse multivariate polynomial: exponent tuples -> nonzero coefficients."""

    __slots__ = ("vars", "terms")

    def __init__(self, vars, terms=None):
        self.vars = tuple(vars)
        clean = {}
        for exp, c in (terms or {}).items():
            if c:
                clean[tuple(exp)] = c
        self.terms = clean

    @classmethod
    def zero(cls, vars):
        return cls(vars, {})

    @classmethod
    def const(cls, vars, c):
        return cls(vars, {(0,) * len(vars): c})

    @classmethod
    def var(cls, vars, name):
        vars = tuple(vars)
        i = vars.index(name)
        exp = [0] * len(vars)
        exp[i] = 1
        return cls(vars, {tuple(exp): 1})

    @property
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MPoly.const(self.vars, other)
        return isinstance(other, MPoly) and self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def _coerce(self, other):
        if isinstance(other, (int, Fraction)):
            return MPoly.const(self.vars, other)
        if isinstance(other, MPoly):
            if other.vars != self.vars:
                raise ValueError("mixed variable sets")
            return other
        return NotImplemented

    def __neg__(self):
        return MPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MPoly(self.vars, out)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return MPoly(self.vars, {e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MPoly(self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = MPoly.const(self.vars, 1)
        for _ in range(k):
            out = out * self
        return out

    def derivative(self, name):
        i = self.vars.index(name)
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = list(e)
                ne[i] -= 1
                out[tuple(ne)] = out.get(tuple(ne), 0) + c * e[i]
        return MPoly(self.vars, out)

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def substitute(self, assignment):
        """Substitute scalars for a subset of the variables.

        Returns an MPoly over the same variable tuple (substituted variables
        get exponent 0); use `specialize` for the scalar-producing wrapper.
        """
        idx = {self.vars.index(name): value for name, value in assignment.items()}
        out = {}
        for e, c in self.terms.items():
            val = c
            ne = list(e)
            for i, v in idx.items():
                if e[i]:
                    val = val * v ** e[i]
                    ne[i] = 0
            key = tuple(ne)
            out[key] = out.get(key, 0) + val
        return MPoly(self.vars, out)

    def leading_term(self):
        """(exponent, coefficient) maximal in (total degree, exponent) order."""
        e = max(self.terms, key=lambda t: (sum(t), t))
        return e, self.terms[e]

    def divexact(self, other):
        """Exact division; raises if the division leaves a remainder."""
        if other.is_zero:
            raise ZeroDivisionError("division by zero polynomial")
        rem = MPoly(self.vars, dict(self.terms))
        quo = {}
        de, dc = other.leading_term()
        while rem.terms:
            re, rc = rem.leading_term()
            qe = tuple(a - b for a, b in zip(re, de))
            if any(x < 0 for x in qe):
                raise ArithmeticError("inexact polynomial division")
            if isinstance(rc, int) and isinstance(dc, int):
                q, r = divmod(rc, dc)
                qc = q if r == 0 else Fraction(rc, dc)
            else:
                qc = rc / dc
            quo[qe] = quo.get(qe, 0) + qc
            piece = MPoly(self.vars, {qe: qc}) * other
            rem = rem - piece
        return MPoly(self.vars, quo)

    def to_json(self):
        return {
            "vars": list(self.vars),
            "terms": [
                {"exp": list(e), "coef": str(c)}
                for e, c in sorted(self.terms.items())
            ],
        }

    @classmethod
    def from_json(cls, data):
        terms = {}
        for t in data["terms"]:
            c = t["coef"]
            coef = Fraction(c) if "/" in c else int(c)
            terms[tuple(t["exp"])] = coef
        return cls(tuple(data["vars"]), terms)

    def pretty(self):
        if not self.terms:
            return "0"
        bits = []
        for e, c in sorted(self.terms.items(), key=lambda t: (-sum(t[0]), t[0])):
            mono = "*".join(
                f"{v}^{k}" if k > 1 else v for v, k in zip(self.vars, e) if k
            )
            sign = "+" if c > 0 else "-"
            mag = abs(c)
            if not mono:
                bits.append(f"{sign} {mag}")
            elif mag == 1:
                bits.append(f"{sign} {mono}")
            else:
                bits.append(f"{sign} {mag}*{mono}")
        s = " ".join(bits)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    def __repr__(self):
        return f"MPoly({self.pretty()})"


def determinant(entries, bound=DEFAULT_DET_BOUND):
    """Determinant of a square MPoly matrix.

    Memoized minor expansion up to MINOR_EXPANSION_MAX (symbolic Sylvester
    entries repeat minors heavily), fraction-free elimination above.
    """
    n = len(entries)
    if n > bound:
        raise ValueError("determinant too large")
    if n == 0:
        raise ValueError("empty matrix")
    vars = entries[0][0].vars
    if n <= MINOR_EXPANSION_MAX:
        memo = {}

        def minor(rows, col):
            # det of the submatrix with these rows and columns col..n-1
            if not rows:
                return MPoly.const(vars, 1)
            key = rows
            got = memo.get(key)
            if got is not None:
                return got
            acc = MPoly.zero(vars)
            sign = 1
            for t, r in enumerate(rows):
                cell = entries[r][col]
                if cell:
                    sub = minor(rows[:t] + rows[t + 1 :], col + 1)
                    acc = acc + sign * cell * sub
                sign = -sign
            memo[key] = acc
            return acc

        return minor(tuple(range(n)), 0)
    return _det_bareiss(entries, vars)


def _det_bareiss(entries, vars):
    a = [[entries[i][j] for j in range(len(entries))] for i in range(len(entries))]
    n = len(a)
    sign = 1
    prev = MPoly.const(vars, 1)
    for k in range(n - 1):
        if a[k][k].is_zero:
            piv = next((i for i in range(k + 1, n) if not a[i][k].is_zero), None)
            if piv is None:
                return MPoly.zero(vars)
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[k][k] * a[i][j] - a[i][k] * a[k][j]
                a[i][j] = num.divexact(prev)
            a[i][k] = MPoly.zero(vars)
        prev = a[k][k]
    return a[n - 1][n - 1] if sign == 1 else -a[n - 1][n - 1]


@dataclass(frozen=True)
class SylvesterMatrix:
    size: int
    entries: tuple  # tuple of tuples of MPoly
    vars: tuple

    def row(self, i):
        return self.entries[i]


def _coefficient_vars(pair: SupportPair):
    return tuple(f"f{b}" for b in pair.b1) + tuple(f"g{b}" for b in pair.b2)


def sylvester_matrix(pair: SupportPair) -> SylvesterMatrix:
    """Sylvester matrix of the two homogenized forms with symbolic entries.

    Homogenization maps exponent b to x-degree b - min B, so the form of side
    i has degree d_i = spread(B_i); row blocks are d_2 shifted copies of the
    f coefficients (descending x-degree) over d_1 copies of the g rows.
    Exponents absent from the support contribute zero entries.
    """
    vars = _coefficient_vars(pair)
    d1, d2 = pair.b1.spread, pair.b2.spread
    size = d1 + d2

    def coeff_row(support, prefix, degree):
        # descending x-degree: position t holds the coefficient of x^(degree-t)
        row = []
        for t in range(degree + 1):
            b = support.min + degree - t
            if b in support:
                row.append(MPoly.var(vars, f"{prefix}{b}"))
            else:
                row.append(MPoly.zero(vars))
        return row

    frow = coeff_row(pair.b1, "f", d1)
    grow = coeff_row(pair.b2, "g", d2)
    zero = MPoly.zero(vars)
    entries = []
    for i in range(d2):
        entries.append(tuple([zero] * i + frow + [zero] * (size - d1 - 1 - i)))
    for i in range(d1):
        entries.append(tuple([zero] * i + grow + [zero] * (size - d2 - 1 - i)))
    return SylvesterMatrix(size, tuple(entries), vars)


def resultant_poly(pair: SupportPair, bound=DEFAULT_DET_BOUND) -> MPoly:
    """Defining polynomial of the sparse resultant: det of the Sylvester
    matrix of the homogenized forms.

    Normalization is this determinant's sign; when both supports shift into a
    common sublattice the determinant may be a proper power of the
    irreducible equation, so comparisons are up to sign and integer power.
    """
    syl = sylvester_matrix(pair)
    if syl.size > bound:
        raise ValueError("determinant too large")
    return determinant([list(r) for r in syl.entries], bound=bound)


def specialize(poly: MPoly, assignment):
    """Substitute scalars; a full assignment yields a scalar."""
    res = poly.substitute(assignment)
    if len(assignment) == len(poly.vars):
        return res.terms.get((0,) * len(poly.vars), 0)
    return res


def jacobian_vanishes(poly: MPoly, point) -> bool:
    """Do the polynomial and all first partials vanish at the point? Exact."""
    if len(point) != len(poly.vars):
        raise ValueError("full assignment required")
    if specialize(poly, point) != 0:
        return False
    return all(specialize(poly.derivative(v), point) == 0 for v in poly.vars)
