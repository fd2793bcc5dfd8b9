import random
from fractions import Fraction

import pytest

from singres.exact import UniPoly, exact_rank
from singres.laurent import (
    LaurentPoly,
    ProjPoint,
    branch_covector,
    classify_point,
    common_roots,
    homogenize,
    ord_at,
)
from singres.supports import SupportSet


def S(*xs):
    return SupportSet.of(*xs)


def lp(support, coeffs):
    return LaurentPoly(S(*support), coeffs)


def from_roots_on(support, roots, rng=None):
    """Exact polynomial with full dense support equal to prod (x - r)."""
    p = UniPoly.from_roots([Fraction(r) for r in roots])
    sup = S(*range(len(roots) + 1))
    return LaurentPoly(sup, {i: c for i, c in enumerate(p.coeffs)})


class TestHomogenize:
    def test_examples(self):
        assert homogenize(lp((0, 1, 2), {1: 1, 2: 1})) == [0, 1, 1]
        assert homogenize(lp((2, 3), {2: -1, 3: 1})) == [-1, 1]
        assert homogenize(lp((0, 3), {0: 5, 3: 7})) == [5, 0, 0, 7]

    def test_identity_on_random(self):
        rng = random.Random(5)
        for _ in range(100):
            lo = rng.randint(-3, 2)
            elems = sorted({lo, lo + rng.randint(1, 3), lo + rng.randint(4, 6)})
            f = LaurentPoly(
                S(*elems), {b: Fraction(rng.randint(-9, 9)) for b in elems}
            )
            if f.is_zero:
                continue
            x = Fraction(rng.randint(1, 9), rng.randint(1, 5))
            form = homogenize(f)
            value = sum(c * x**j for j, c in enumerate(form))
            assert value == f.evaluate(x) * x ** (-f.support.min)

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            homogenize(lp((0, 1), {}))


class TestOrd:
    def test_boundary(self):
        f = lp((0, 1, 2), {1: 1, 2: 1})
        assert ord_at(f, ProjPoint.zero()) == 1
        g = lp((0, 1, 2), {0: 1, 1: 1})
        assert ord_at(g, ProjPoint.infinity()) == 1

    def test_finite_double(self):
        f = lp((0, 1, 2), {0: 1, 1: -2, 2: 1})  # (x-1)^2
        assert ord_at(f, ProjPoint.finite(Fraction(1))) == 2

    def test_gap_counts(self):
        f = lp((0, 3), {3: 2})  # support {0,3}, zero constant coefficient
        assert ord_at(f, ProjPoint.zero()) == 3
        assert ord_at(f, ProjPoint.infinity()) == 0

    def test_orders_sum_to_spread(self):
        rng = random.Random(7)
        for _ in range(60):
            roots = [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(rng.randint(1, 4))]
            f = from_roots_on(None, roots)
            total = ord_at(f, ProjPoint.zero()) + ord_at(f, ProjPoint.infinity())
            seen = set()
            for r in roots:
                if r in seen:
                    continue
                seen.add(r)
                if r != 0:
                    total += ord_at(f, ProjPoint.finite(r))
            assert total == f.support.spread

    def test_orders_sum_numeric(self):
        rng = random.Random(8)
        for _ in range(20):
            sup = (0, 1, 2, 3)
            f = LaurentPoly(
                S(*sup),
                {b: complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) for b in sup},
            )
            import numpy as np

            roots = np.roots(list(reversed(homogenize(f))))
            total = ord_at(f, ProjPoint.zero()) + ord_at(f, ProjPoint.infinity())
            total += len(roots)
            assert total == f.support.spread


class TestCommonRoots:
    def test_single_simple(self):
        f = lp((0, 1, 2), {0: 2, 1: -3, 2: 1})  # (x-1)(x-2)
        g = lp((0, 1, 2), {0: 3, 1: -4, 2: 1})  # (x-1)(x-3)
        recs = common_roots(f, g)
        assert len(recs) == 1
        assert recs[0].point.value == 1 and (recs[0].ord1, recs[0].ord2) == (1, 1)

    def test_boundary_orders(self):
        f = lp((0, 1, 2), {1: 1, 2: 1})
        g = lp((0, 1, 2), {2: 1})
        recs = common_roots(f, g)
        assert len(recs) == 1
        assert recs[0].point.kind == "zero" and (recs[0].ord1, recs[0].ord2) == (1, 2)

    def test_mixed_orders(self):
        f = lp((0, 1, 2), {0: 1, 1: -2, 2: 1})  # (x-1)^2
        g = lp((0, 1, 2), {0: -1, 2: 1})  # (x-1)(x+1)
        recs = common_roots(f, g)
        assert len(recs) == 1
        assert (recs[0].ord1, recs[0].ord2) == (2, 1)

    def test_symmetry(self):
        rng = random.Random(9)
        for _ in range(40):
            f = from_roots_on(None, [rng.randint(-3, 3) or 1 for _ in range(3)])
            g = from_roots_on(None, [rng.randint(-3, 3) or 1 for _ in range(3)])
            a = {(r.point.kind, str(r.point.value), r.ord1, r.ord2) for r in common_roots(f, g)}
            b = {(r.point.kind, str(r.point.value), r.ord2, r.ord1) for r in common_roots(g, f)}
            assert a == b

    def test_common_factor_multiplicities(self):
        rng = random.Random(10)
        for _ in range(30):
            h_roots = [Fraction(rng.randint(1, 3)) for _ in range(rng.randint(1, 2))]
            u_root = Fraction(rng.randint(4, 6))
            v_root = Fraction(rng.randint(7, 9))
            f = from_roots_on(None, h_roots + [u_root])
            g = from_roots_on(None, h_roots + [v_root])
            recs = {r.point.value: r for r in common_roots(f, g) if r.point.kind == "finite"}
            from collections import Counter

            mults = Counter(h_roots)
            assert set(recs) == set(mults)
            for root, m in mults.items():
                assert recs[root].pair_ord == m

    def test_irrational_roots_tracked_exactly(self):
        # f = g share the factor x^2 - 2
        f = lp((0, 1, 2, 3), {0: -2, 1: -2, 2: 1, 3: 1})  # (x^2-2)(x+1)
        g = lp((0, 1, 2), {0: -2, 2: 1})  # x^2 - 2
        recs = [r for r in common_roots(f, g) if r.point.kind == "finite"]
        assert len(recs) == 2
        for r in recs:
            assert r.min_poly is not None
            assert (r.ord1, r.ord2) == (1, 1)
            assert abs(abs(complex(r.point.value)) - 2**0.5) < 1e-9

    def test_numeric_path(self):
        f = lp((0, 1, 2), {0: complex(2), 1: complex(-3), 2: complex(1)})
        g = lp((0, 1, 2), {0: complex(3), 1: complex(-4), 2: complex(1)})
        recs = common_roots(f, g)
        assert len(recs) == 1
        assert abs(recs[0].point.value - 1) < 1e-6


class TestCovector:
    def test_example(self):
        f = lp((0, 1), {0: -1, 1: 1})
        g = lp((0, 1, 2), {0: -1, 2: 1})
        cov = branch_covector(f, g, Fraction(1))
        assert cov == [2, 2, -1, -1, -1]

    def test_requires_simple_root(self):
        f = lp((0, 1, 2), {0: 1, 1: -2, 2: 1})
        g = lp((0, 1, 2), {0: 1, 1: -2, 2: 1})
        with pytest.raises(ValueError, match="covector undefined"):
            branch_covector(f, g, Fraction(1))


class TestClassifyPoint:
    def test_not_on_resultant(self):
        f = lp((0, 1), {0: 1, 1: 1})
        g = lp((0, 1), {0: 1, 1: 2})
        assert classify_point(f, g).tag == "NotOnResultant"

    def test_smooth(self):
        f = lp((0, 1, 2), {0: 2, 1: -3, 2: 1})
        g = lp((0, 1, 2), {0: 3, 1: -4, 2: 1})
        assert classify_point(f, g).tag == "SmoothPoint"

    def test_node_with_rank2_covectors(self):
        # common simple roots at 1 and 2 on generic supports
        f = lp((0, 1, 2), {0: 2, 1: -3, 2: 1})
        g = lp((0, 1, 2, 3), {0: -2, 1: 5, 2: -4, 3: 1})  # (x-1)(x-2)(x+... ) check
        # g = (x-1)(x-2)(x+1) = x^3 - 2x^2 - x + 2
        g = lp((0, 1, 2, 3), {0: 2, 1: -1, 2: -2, 3: 1})
        out = classify_point(f, g)
        assert out.tag == "NodeA1"
        c1 = branch_covector(f, g, Fraction(1))
        c2 = branch_covector(f, g, Fraction(2))
        assert exact_rank([c1, c2]) == 2

    def test_multiple_root(self):
        f = lp((0, 1, 2), {0: 1, 1: -2, 2: 1})  # (x-1)^2
        g = lp((0, 1, 2, 3), {0: -1, 1: 1, 2: -1, 3: 1})  # (x-1)(x^2+1)
        # pair multiplicity at 1 is min(2, 1) = 1: simple; make g double too
        out = classify_point(f, g)
        assert out.tag != "Degenerate" or out.reason != "MultipleRoot"
        g2 = lp((0, 1, 2), {0: 1, 1: -2, 2: 1})
        out2 = classify_point(f, g2)
        assert (out2.tag, out2.reason) == ("Degenerate", "MultipleRoot")

    def test_three_roots(self):
        # three simple common roots: each has pair multiplicity 1
        f = from_roots_on(None, [1, 2, 3])
        g = from_roots_on(None, [1, 2, 3])
        out = classify_point(f, g)
        assert (out.tag, out.reason) == ("Degenerate", "ThreeRoots")
        g2 = from_roots_on(None, [1, 2, 4])
        f2 = from_roots_on(None, [1, 2, 3])
        out2 = classify_point(f2, g2)
        assert out2.tag == "NodeA1"

    def test_multiple_beats_three(self):
        # a double pair-root among three common roots reports MultipleRoot
        f_poly = UniPoly.from_roots([1, 1, 2, 3])
        g_poly = UniPoly.from_roots([1, 1, 2, 3])
        f = LaurentPoly(S(*range(5)), {i: c for i, c in enumerate(f_poly.coeffs)})
        g = LaurentPoly(S(*range(5)), {i: c for i, c in enumerate(g_poly.coeffs)})
        out = classify_point(f, g)
        assert (out.tag, out.reason) == ("Degenerate", "MultipleRoot")

    def test_two_double_same_factor(self):
        # f has double roots at 1 and 2; g simple at both
        f_poly = UniPoly.from_roots([1, 1, 2, 2])
        f = LaurentPoly(S(*range(5)), {i: c for i, c in enumerate(f_poly.coeffs)})
        g_poly = UniPoly.from_roots([1, 2, 5])
        g = LaurentPoly(S(*range(4)), {i: c for i, c in enumerate(g_poly.coeffs)})
        out = classify_point(f, g)
        assert (out.tag, out.reason) == ("Degenerate", "TwoDoubleForSameFactor")

    def test_boundary_node(self):
        # simple common roots at 0 and at x = 1: a node with one boundary branch
        f = lp((0, 1, 2), {1: -1, 2: 1})  # x(x-1)
        g = lp((0, 1, 2), {1: -1, 2: 1})
        out = classify_point(f, g)
        assert out.tag == "NodeA1"

    def test_infinity_boundary_orders(self):
        f = lp((0, 1, 2), {0: 1, 1: -1})  # 1 - x: ord at infinity 1
        assert ord_at(f, ProjPoint.infinity()) == 1
        g = lp((0, 1, 2), {0: 1})
        assert ord_at(g, ProjPoint.infinity()) == 2

    def test_sublattice_violation_raises(self):
        # condition-(1) supports: proportional covectors must raise, not mislabel
        f = lp((0, 2), {0: -1, 2: 1})
        g = lp((0, 2), {0: -2, 2: 2})
        with pytest.raises(ValueError, match="sublattice"):
            classify_point(f, g)

    def test_float_path_node(self):
        f = lp((0, 1, 2), {0: complex(2), 1: complex(-3), 2: complex(1)})
        g = lp((0, 1, 2, 3), {0: complex(2), 1: complex(-1), 2: complex(-2), 3: complex(1)})
        assert classify_point(f, g).tag == "NodeA1"


class TestLaurentSupports:
    def test_negative_exponents(self):
        # x^-2 (x-1)(x-2) and x^-1 (x-1)(x-3): common simple root at 1
        f = lp((-2, -1, 0), {-2: 2, -1: -3, 0: 1})
        g = lp((-1, 0, 1), {-1: 3, 0: -4, 1: 1})
        recs = common_roots(f, g)
        assert len(recs) == 1 and recs[0].point.value == 1
        assert classify_point(f, g).tag == "SmoothPoint"
        cov = branch_covector(f, g, Fraction(1))
        assert all(isinstance(c, (int, Fraction)) for c in cov)

    def test_negative_support_orders(self):
        f = lp((-3, 0), {0: 4})  # leftmost hull coefficient vanishes
        assert ord_at(f, ProjPoint.zero()) == 3
        assert homogenize(f) == [0, 0, 0, 4]


class TestSerialization:
    def test_exact_roundtrip(self):
        f = lp((-1, 0, 2), {-1: Fraction(3, 7), 0: -2, 2: 1})
        back = LaurentPoly.from_json(f.to_json())
        assert back.support == f.support
        assert all(back.coeff(b) == f.coeff(b) for b in f.support)

    def test_complex_roundtrip(self):
        f = lp((0, 1), {0: 1.5 - 2j, 1: 0.25j})
        back = LaurentPoly.from_json(f.to_json())
        assert all(abs(back.coeff(b) - f.coeff(b)) < 1e-15 for b in f.support)
