"""Triangle congruence criteria over measured element sets.

Criteria are decision procedures on ``TriangleElements`` (squared sides plus
angle cosines) under an explicit vertex correspondence:

* criterion_a: two sides and the included angle,
* criterion_b: two angles and one side,
* criterion_c: all three sides,
* criterion_d: two sides and the angle opposite the strictly greater one.

criterion_d is three-valued: when the designated angle sits opposite the
smaller (or an equal) matched side its premise fails, which is reported as
NOT_APPLICABLE rather than False; that regime is exactly where two distinct
triangles can share the designated elements.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import permutations
from typing import Dict, Optional, Tuple

from .kernel import LABELS, Triangle, angle_cos, squared_distance
from .scalars import Scalar


@dataclass(frozen=True)
class TriangleElements:
    """Squared side lengths and angle cosines, both keyed by vertex label.

    ``side_sq[X]`` is the squared side opposite vertex X; ``cos_at[X]`` the
    cosine of the interior angle at X.  Treat instances as immutable.
    """

    side_sq: Dict[str, Scalar]
    cos_at: Dict[str, Scalar]

    def check_consistent(self) -> None:
        """Validate positivity, the triangle inequality and the law of cosines."""
        a, b, c = (self.side_sq[l] for l in LABELS)
        for s in (a, b, c):
            if s.sign() <= 0:
                raise ValueError("squared sides must be positive")
        # sqrt(x) + sqrt(y) > sqrt(z) rewritten radical-free
        for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
            strict = z.le(x + y) or (x * y * 4).gt((z - x - y) * (z - x - y))
            if not strict:
                raise ValueError("triangle inequality violated")
        for label in LABELS:
            y, z = (l for l in LABELS if l != label)
            num = self.side_sq[y] + self.side_sq[z] - self.side_sq[label]
            den4 = self.side_sq[y] * self.side_sq[z] * 4
            want = (num * num / den4).sqrt() * num.sign()
            if not self.cos_at[label].eq(want):
                raise ValueError(f"cosine at {label} breaks the law of cosines")


def measure(t: Triangle) -> TriangleElements:
    """Extract the element set of a triangle once; criteria then reuse it."""
    side_sq = {}
    cos_at = {}
    for label in LABELS:
        p, q = t.others(label)
        side_sq[label] = squared_distance(t.vertex(p), t.vertex(q))
        cos_at[label] = angle_cos(t.vertex(label), t.vertex(p), t.vertex(q))
    return TriangleElements(side_sq, cos_at)


@dataclass(frozen=True)
class Correspondence:
    """Vertex bijection from a first triangle onto a second one.

    ``mapping`` lists the images of (A, B, C) in order.
    """

    mapping: Tuple[str, str, str]

    def __post_init__(self):
        if sorted(self.mapping) != sorted(LABELS):
            raise ValueError("mapping must be a permutation of A, B, C")

    @classmethod
    def identity(cls) -> "Correspondence":
        return cls(LABELS)

    def image(self, label: str) -> str:
        return self.mapping[LABELS.index(label)]

    def inverse(self) -> "Correspondence":
        inv = [None, None, None]
        for src, dst in zip(LABELS, self.mapping):
            inv[LABELS.index(dst)] = src
        return Correspondence(tuple(inv))


ALL_CORRESPONDENCES = tuple(Correspondence(p) for p in permutations(LABELS))


class Applicability(enum.Enum):
    HOLDS = "holds"
    FAILS = "fails"
    NOT_APPLICABLE = "not-applicable"


@dataclass(frozen=True)
class ElementTriple:
    """Designation of two given sides and one given angle, by labels of the
    first triangle.  Sides are named by their opposite vertices; the angle by
    the vertex it sits at.  Included means the angle is between the sides."""

    side_labels: Tuple[str, str]
    angle_label: str

    def __post_init__(self):
        y, z = self.side_labels
        if y == z or y not in LABELS or z not in LABELS or self.angle_label not in LABELS:
            raise ValueError("element designation needs two distinct side labels")

    @property
    def included(self) -> bool:
        return self.angle_label not in self.side_labels


def _sides_match(e1, e2, corr, labels) -> bool:
    return all(e1.side_sq[l].eq(e2.side_sq[corr.image(l)]) for l in labels)


def _angle_matches(e1, e2, corr, label) -> bool:
    return e1.cos_at[label].eq(e2.cos_at[corr.image(label)])


def criterion_a(e1: TriangleElements, e2: TriangleElements,
                corr: Correspondence,
                triple: Optional[ElementTriple] = None) -> bool:
    """Two sides and the included angle agree under corr."""
    if triple is not None:
        if not triple.included:
            raise ValueError("criterion_a needs an included angle designation")
        triples = (triple,)
    else:
        triples = tuple(ElementTriple(tuple(l for l in LABELS if l != x), x)
                        for x in LABELS)
    return any(_sides_match(e1, e2, corr, t.side_labels)
               and _angle_matches(e1, e2, corr, t.angle_label)
               for t in triples)


def criterion_b(e1: TriangleElements, e2: TriangleElements,
                corr: Correspondence) -> bool:
    """Two angles and one side agree under corr."""
    angles = sum(_angle_matches(e1, e2, corr, x) for x in LABELS)
    side = any(_sides_match(e1, e2, corr, (x,)) for x in LABELS)
    return angles >= 2 and side


def criterion_c(e1: TriangleElements, e2: TriangleElements,
                corr: Correspondence) -> bool:
    """All three sides agree under corr."""
    return _sides_match(e1, e2, corr, LABELS)


def criterion_d(e1: TriangleElements, e2: TriangleElements,
                corr: Correspondence,
                triple: Optional[ElementTriple] = None) -> Applicability:
    """Two sides and the angle opposite the strictly greater one.

    With an explicit non-included designation: HOLDS/FAILS when the designated
    angle is opposite the strictly greater matched side, NOT_APPLICABLE when it
    is opposite the smaller or an equal side (no strict greater exists).
    Without one, searches all designations; HOLDS wins over NOT_APPLICABLE.
    """
    if triple is not None:
        if triple.included:
            raise ValueError("criterion_d needs the angle opposite a given side")
        triples = (triple,)
    else:
        triples = tuple(ElementTriple((y, z), x)
                        for y, z in permutations(LABELS, 2)
                        for x in (y,))
    best = Applicability.FAILS
    for t in triples:
        if not (_sides_match(e1, e2, corr, t.side_labels)
                and _angle_matches(e1, e2, corr, t.angle_label)):
            continue
        x = t.angle_label
        w = next(l for l in t.side_labels if l != x)
        if e1.side_sq[x].gt(e1.side_sq[w]):
            return Applicability.HOLDS
        best = Applicability.NOT_APPLICABLE
    return best


def _canonical_key(corr: Correspondence):
    # inversion-symmetric key so congruent_any(t1, t2) and congruent_any(t2, t1)
    # pick mutually inverse correspondences even for symmetric triangles
    return (min(corr.mapping, corr.inverse().mapping), corr.mapping)


def congruent_any(t1: Triangle, t2: Triangle) -> Optional[Correspondence]:
    """Search all six correspondences for a full side match (criterion_c)."""
    e1, e2 = measure(t1), measure(t2)
    found = [c for c in ALL_CORRESPONDENCES if criterion_c(e1, e2, c)]
    if not found:
        return None
    return min(found, key=_canonical_key)
