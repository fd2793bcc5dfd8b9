"""Support-set combinatorics for pairs of sparse univariate polynomials.

A support set is a finite strictly increasing tuple of integer exponents.
This module decides the six degeneracy conditions on a support pair, builds
the per-filtration-subset guarantee table, and reduces a pair by its common
arithmetic-progression scale.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

__all__ = [
    "SupportSet",
    "SupportPair",
    "SplitWitness",
    "ConditionReport",
    "SubsetGuarantee",
    "Verdict",
    "gap_gcd",
    "split_witness",
    "check_conditions",
    "classify",
    "reduce_common_scale",
    "GUARANTEE_TABLE",
]


@dataclass(frozen=True)
class SupportSet:
    """Strictly increasing finite set of integer exponents."""

    elements: tuple

    def __post_init__(self):
        elems = tuple(int(e) for e in self.elements)
        if not elems:
            raise ValueError("support set must be nonempty")
        if any(b <= a for a, b in zip(elems, elems[1:])):
            raise ValueError("support set must be strictly increasing")
        object.__setattr__(self, "elements", elems)

    @classmethod
    def of(cls, *elems):
        return cls(tuple(sorted(set(elems))))

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x):
        return x in self.elements

    @property
    def size(self):
        return len(self.elements)

    @property
    def min(self):
        return self.elements[0]

    @property
    def max(self):
        return self.elements[-1]

    @property
    def spread(self):
        return self.elements[-1] - self.elements[0]

    def shifted(self, m):
        return SupportSet(tuple(e + m for e in self.elements))

    def to_json(self):
        return list(self.elements)

    @classmethod
    def from_json(cls, data):
        return cls(tuple(data))


@dataclass(frozen=True)
class SupportPair:
    b1: SupportSet
    b2: SupportSet

    def __post_init__(self):
        if self.b1.size < 2 or self.b2.size < 2:
            raise ValueError("each support set needs at least two elements")

    def to_json(self):
        return {"b1": self.b1.to_json(), "b2": self.b2.to_json()}

    @classmethod
    def from_json(cls, data):
        return cls(SupportSet.from_json(data["b1"]), SupportSet.from_json(data["b2"]))


def gap_gcd(b: SupportSet) -> int:
    """gcd of consecutive differences; 0 for singletons.

    The 0 convention makes singletons (and the empty part of a split)
    divisible by every modulus, matching how empty split parts behave.
    """
    g = 0
    for a, c in zip(b.elements, b.elements[1:]):
        g = math.gcd(g, c - a)
    return g


@dataclass(frozen=True)
class SplitWitness:
    """Certificate that `target` occupies at most two residue classes mod k."""

    k: int
    part_main: tuple
    part_rest: tuple

    def verify(self, target: SupportSet) -> bool:
        if self.k < 3:
            return False
        merged = tuple(sorted(self.part_main + self.part_rest))
        if merged != target.elements:
            return False
        mains = {e % self.k for e in self.part_main}
        rests = {e % self.k for e in self.part_rest}
        return len(mains) <= 1 and len(rests) <= 1

    def to_json(self):
        return {"k": self.k, "part_main": list(self.part_main), "part_rest": list(self.part_rest)}


def _residue_split(target: SupportSet, k: int):
    """Partition of target by residue mod k if it fits in <= 2 classes."""
    classes = {}
    for e in target.elements:
        classes.setdefault(e % k, []).append(e)
    if len(classes) > 2:
        return None
    main_res = target.min % k
    main = tuple(classes.pop(main_res))
    rest = tuple(next(iter(classes.values()))) if classes else ()
    return SplitWitness(k, main, rest)


def split_witness(target: SupportSet, other: SupportSet):
    """Smallest k >= 3 dividing gap_gcd(other) whose residues split target
    into at most two classes, with the residue-class partition; None if none.

    A set shifts into kZ iff it lies in a single residue class mod k iff k
    divides its gap gcd, so searching divisors of gap_gcd(other) is complete.
    """
    g = gap_gcd(other)
    for k in range(3, g + 1):
        if g % k:
            continue
        w = _residue_split(target, k)
        if w is not None:
            return w
    return None


@dataclass(frozen=True)
class ConditionReport:
    """Flags for the six degeneracy conditions, each with its witness.

    cond1: both gap gcds share a divisor k >= 2.
    cond2: one side splits into two residue classes mod some k >= 3 dividing
           the other side's gap gcd.
    cond3/cond4: on both sides the two leftmost / rightmost exponents differ
           by more than 1.
    cond5: one side has exactly two exponents while the other side's spread
           exceeds 2.
    cond6: both sides are two-element sets with the same gap.
    """

    cond1: bool
    cond2: bool
    cond3: bool
    cond4: bool
    cond5: bool
    cond6: bool
    witnesses: dict = field(default_factory=dict)

    def flag(self, i: int) -> bool:
        return getattr(self, f"cond{i}")

    @property
    def true_conditions(self):
        return tuple(i for i in range(1, 7) if self.flag(i))

    def to_json(self):
        out = {f"cond{i}": self.flag(i) for i in range(1, 7)}
        out["witnesses"] = {
            key: (w.to_json() if isinstance(w, SplitWitness) else w)
            for key, w in self.witnesses.items()
        }
        return out


def check_conditions(pair: SupportPair) -> ConditionReport:
    b1, b2 = pair.b1, pair.b2
    g1, g2 = gap_gcd(b1), gap_gcd(b2)
    witnesses = {}

    common = math.gcd(g1, g2)
    cond1 = common >= 2
    if cond1:
        witnesses["cond1"] = {"k": common}

    w12 = split_witness(b1, b2)
    w21 = split_witness(b2, b1)
    cond2 = w12 is not None or w21 is not None
    if w12 is not None:
        witnesses["cond2"] = {"side_split": 1, **w12.to_json()}
    elif w21 is not None:
        witnesses["cond2"] = {"side_split": 2, **w21.to_json()}

    cond3 = all(b.elements[1] - b.elements[0] > 1 for b in (b1, b2))
    if cond3:
        witnesses["cond3"] = {
            "leftmost_gaps": [b1.elements[1] - b1.elements[0], b2.elements[1] - b2.elements[0]]
        }
    cond4 = all(b.elements[-1] - b.elements[-2] > 1 for b in (b1, b2))
    if cond4:
        witnesses["cond4"] = {
            "rightmost_gaps": [b1.elements[-1] - b1.elements[-2], b2.elements[-1] - b2.elements[-2]]
        }
    cond5 = (b1.size == 2 and b2.spread > 2) or (b2.size == 2 and b1.spread > 2)
    if cond5:
        witnesses["cond5"] = {"two_element_side": 1 if b1.size == 2 and b2.spread > 2 else 2}
    cond6 = b1.size == 2 and b2.size == 2 and b1.spread == b2.spread
    if cond6:
        witnesses["cond6"] = {"k": b1.spread}

    return ConditionReport(cond1, cond2, cond3, cond4, cond5, cond6, witnesses)


# (subset name, expected codimension, conditions that break the guarantee)
GUARANTEE_TABLE = (
    ("N(1)", 1, ()),
    ("N(1,1)", 2, (1,)),
    ("N_1^0", 2, ()),
    ("N_0^1", 2, ()),
    ("N(2)", 3, ()),
    ("N(1,1,1)", 3, (1, 2, 3, 4, 5)),
    ("N_0^1(1)", 3, ()),
    ("N_1^0(1)", 3, ()),
    ("N(2,1;1,1)", 3, (1,)),
    ("N(1,1;2,1)", 3, (1,)),
)


@dataclass(frozen=True)
class SubsetGuarantee:
    subset: str
    expected_codim: int
    guaranteed: bool
    blocking_conditions: tuple

    def to_json(self):
        return {
            "subset": self.subset,
            "expected_codim": self.expected_codim,
            "guaranteed": self.guaranteed,
            "blocking_conditions": list(self.blocking_conditions),
        }


@dataclass(frozen=True)
class Verdict:
    """Generic-A1 / codimension-2 verdict with the per-subset guarantee table.

    part_i_generic_a1: no degeneracy condition (1)-(5) holds, so away from a
    codimension-3 exceptional set the resultant's transversal singularity
    type at singular points is A1.
    part_ii_codim2: condition (6) does not hold, so the singular locus has
    components of codimension 2.
    """

    part_i_generic_a1: bool
    part_ii_codim2: bool
    per_subset: tuple

    def to_json(self):
        return {
            "part_i_generic_A1": self.part_i_generic_a1,
            "part_ii_codim2": self.part_ii_codim2,
            "per_subset_guarantees": [g.to_json() for g in self.per_subset],
        }


def classify(pair: SupportPair) -> Verdict:
    report = check_conditions(pair)
    rows = []
    for name, codim, breaking in GUARANTEE_TABLE:
        blocking = tuple(i for i in breaking if report.flag(i))
        rows.append(SubsetGuarantee(name, codim, not blocking, blocking))
    part_i = not any(report.flag(i) for i in range(1, 6))
    part_ii = not report.cond6
    return Verdict(part_i, part_ii, tuple(rows))


def reduce_common_scale(pair: SupportPair):
    """Largest k with B_i = k*B'_i + m_i; returns ((B'_1, B'_2), k, (m1, m2)).

    The reduced pair is normalized to min 0 and has coprime gap gcds, so
    reducing again is the identity.
    """
    k = math.gcd(gap_gcd(pair.b1), gap_gcd(pair.b2))
    k = max(k, 1)
    m1, m2 = pair.b1.min, pair.b2.min
    r1 = SupportSet(tuple((e - m1) // k for e in pair.b1.elements))
    r2 = SupportSet(tuple((e - m2) // k for e in pair.b2.elements))
    return SupportPair(r1, r2), k, (m1, m2)
