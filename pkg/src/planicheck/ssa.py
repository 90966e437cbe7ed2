"""The ambiguous SSA configuration and its congruence dichotomy.

Given two sides and an angle opposite one of them, zero, one or two triangles
exist.  When two exist they are never congruent, and the two angles opposite
the greater given side are supplementary; ``classify_pair`` decides, for any
pair of triangles agreeing on such an element triple, between congruence and
that supplementary outcome.  No third outcome exists.

Canonical solution pose: the given adjacent side lies on the x axis from
A = (0, 0) to C = (side_b, 0); the apex B sits in the open upper half plane
on the ray from A at the given angle.  Solutions are ordered by ascending
third side |AB|.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional, Tuple, Union

from .congruence import (
    Correspondence,
    ElementTriple,
    TriangleElements,
    congruent_any,
    measure,
)
from .kernel import (
    Isometry,
    Point,
    Triangle,
    angle_cos,
    concyclic,
    concyclicity_determinant,
    isometry_taking_segment_to_segment,
    line_through,
    squared_distance,
    supplementary,
)
from .scalars import (
    EXACT,
    Backend,
    DegenerateInputError,
    ExactValueError,
    FloatBackend,
    LengthMismatchError,
    Scalar,
)


class DichotomyViolationError(RuntimeError):
    """A matched non-congruent pair failed the supplementary test.

    Unreachable if the dichotomy theorem holds; raising keeps the check honest.
    """


class LemmaPreconditionError(ValueError):
    """A common-side lemma precondition failed; ``reason`` says which."""

    def __init__(self, reason: str, message: str):
        super().__init__(message)
        self.reason = reason


@dataclass(frozen=True)
class SsaSpec:
    """Two sides and the angle opposite the first of them.

    ``side_a`` is opposite the given angle, ``side_b`` adjacent to it, and
    ``cos_angle`` the cosine of the angle (strictly between -1 and 1).
    """

    side_a: Scalar
    side_b: Scalar
    cos_angle: Scalar

    def __post_init__(self):
        if self.side_a.sign() <= 0 or self.side_b.sign() <= 0:
            raise DegenerateInputError("sides must be positive")
        if not (self.cos_angle.lt(1) and self.cos_angle.gt(-1)):
            raise DegenerateInputError("angle must be strictly inside (0, pi)")

    @property
    def backend(self) -> Backend:
        return self.side_a.backend

    @classmethod
    def from_values(cls, backend: Backend, side_a, side_b, cos_angle) -> "SsaSpec":
        return cls(backend.scalar(side_a), backend.scalar(side_b),
                   backend.scalar(cos_angle))


class CriterionCase(enum.Enum):
    """The four-way case split for two given sides and one given angle."""

    INCLUDED_ANGLE = "included-angle"
    ISOSCELES_EQUAL_SIDES = "isosceles-equal-sides"
    ANGLE_OPPOSITE_GREATER = "angle-opposite-greater"
    ANGLE_OPPOSITE_SMALLER = "angle-opposite-smaller"


def predict_case(opposite_side: Scalar, adjacent_side: Scalar,
                 included: bool = False) -> CriterionCase:
    """Which uniqueness regime a designation of given elements falls in.

    Only ANGLE_OPPOSITE_SMALLER admits two solutions; the others force at most
    one triangle (each is settled by one of the congruence criteria).
    """
    if included:
        return CriterionCase.INCLUDED_ANGLE
    if opposite_side.eq(adjacent_side):
        return CriterionCase.ISOSCELES_EQUAL_SIDES
    if opposite_side.gt(adjacent_side):
        return CriterionCase.ANGLE_OPPOSITE_GREATER
    return CriterionCase.ANGLE_OPPOSITE_SMALLER


@dataclass(frozen=True)
class SsaSolutions:
    """Solutions of an SSA spec in canonical pose, ascending by third side.

    ``apex_cosines`` are the angles at B (opposite the given adjacent side);
    for two solutions these are the supplementary pair.  ``base_cosines`` are
    the angles at C, opposite the unknown third side.
    """

    spec: SsaSpec
    triangles: Tuple[Triangle, ...]
    third_sides: Tuple[Scalar, ...]
    apex_cosines: Tuple[Scalar, ...]
    base_cosines: Tuple[Scalar, ...]

    @property
    def count(self) -> int:
        return len(self.triangles)


def _solve_float(spec: SsaSpec) -> SsaSolutions:
    be = spec.backend
    eps = be.eps
    a = spec.side_a.as_float()
    b = spec.side_b.as_float()
    c0 = spec.cos_angle.as_float()
    sin2 = 1.0 - c0 * c0
    sin_t = math.sqrt(sin2)
    s = max(1.0, a, b)
    disc = a * a - b * b * sin2
    if abs(disc) <= eps * s * s:
        roots = [b * c0]  # right-angle boundary: one triangle, not two coincident
    elif disc < 0.0:
        roots = []
    else:
        r = math.sqrt(disc)
        roots = [b * c0 - r, b * c0 + r]

    def keeps_triangle(t):
        # positive third side whose triangle clears the collinearity band
        scale = max(s, t)
        return t > eps * scale and t * sin_t * b > eps * scale * scale

    roots = [t for t in roots if keeps_triangle(t)]
    tris, thirds, apex, base = [], [], [], []
    for t in roots:
        apex_cos = (t - b * c0) / a
        if abs(disc) <= eps * s * s:
            apex_cos = 0.0
        tris.append(Triangle(
            Point(be.scalar(0.0), be.scalar(0.0)),
            Point(be.scalar(t * c0), be.scalar(t * sin_t)),
            Point(be.scalar(b), be.scalar(0.0)),
        ))
        thirds.append(be.scalar(t))
        apex.append(be.scalar(apex_cos))
        base.append(be.scalar((b - t * c0) / a))
    return SsaSolutions(spec, tuple(tris), tuple(thirds), tuple(apex), tuple(base))


def _solve_exact(spec: SsaSpec) -> SsaSolutions:
    a2 = spec.side_a * spec.side_a
    b = spec.side_b
    c0 = spec.cos_angle
    try:
        c0.exact_value()
        sin_t = (EXACT.scalar(1) - c0 * c0).sqrt()
        sin_t.exact_value()
        disc = a2 - b * b * (EXACT.scalar(1) - c0 * c0)
        root = disc.sqrt() if disc.sign() >= 0 else None
        if root is not None:
            root.exact_value()
    except ExactValueError:
        raise ExactValueError(
            "exact SSA solving needs rational cosine, sine and discriminant root"
        ) from None
    if disc.sign() < 0:
        roots = []
    elif disc.sign() == 0:
        roots = [b * c0]
    else:
        roots = [b * c0 - root, b * c0 + root]
    roots = [t for t in roots if t.sign() > 0]
    zero = EXACT.scalar(0)
    tris, thirds, apex, base = [], [], [], []
    for t in roots:
        tris.append(Triangle(Point(zero, zero),
                             Point(t * c0, t * sin_t),
                             Point(b, zero)))
        thirds.append(t)
        apex.append((t - b * c0) / spec.side_a)
        base.append((b - t * c0) / spec.side_a)
    return SsaSolutions(spec, tuple(tris), tuple(thirds), tuple(apex), tuple(base))


def solve_ssa(spec: SsaSpec) -> SsaSolutions:
    """All triangles realizing the given side-side-angle data, in
    canonical pose.

    The apex distance t along the given ray satisfies
    t^2 - 2 b cos(theta) t + (b^2 - a^2) = 0; solutions are its positive
    roots.  The count is 0 when b sin(theta) > a, 1 on the right-angle
    boundary b sin(theta) = a (one triangle, not two coincident ones) and
    when a >= b, and 2 when b sin(theta) < a < b with an acute given angle.
    An obtuse given angle opposite a not-greater side yields no triangle.
    """
    if isinstance(spec.backend, FloatBackend):
        return _solve_float(spec)
    return _solve_exact(spec)


@dataclass(frozen=True)
class Congruent:
    correspondence: Correspondence


@dataclass(frozen=True)
class Supplementary:
    cos1: Scalar
    cos2: Scalar


@dataclass(frozen=True)
class NotSsaMatched:
    pass


DichotomyVerdict = Union[Congruent, Supplementary, NotSsaMatched]


def classify_pair(t1: Triangle, t2: Triangle, corr: Correspondence,
                  matched: ElementTriple) -> DichotomyVerdict:
    """Decide the dichotomy for two triangles sharing a designated element triple.

    Returns NotSsaMatched unless the designated sides and angle agree under
    ``corr``; then either Congruent (with a witnessing correspondence found by
    a fresh full-side search, not taken on trust from the caller) or
    Supplementary with the two remaining angles, which must sum to a straight
    angle.  The theorem guarantees no third outcome; a violation raises.
    """
    e1, e2 = measure(t1), measure(t2)
    if not (all(e1.side_sq[l].eq(e2.side_sq[corr.image(l)])
                for l in matched.side_labels)
            and e1.cos_at[matched.angle_label].eq(
                e2.cos_at[corr.image(matched.angle_label)])):
        return NotSsaMatched()
    witness = congruent_any(t1, t2)
    if witness is not None:
        return Congruent(witness)
    if matched.included:
        raise DichotomyViolationError(
            "matched included angle with equal sides admits no second triangle")
    remaining = next(l for l in matched.side_labels if l != matched.angle_label)
    cos1 = e1.cos_at[remaining]
    cos2 = e2.cos_at[corr.image(remaining)]
    if not supplementary(cos1, cos2):
        raise DichotomyViolationError(
            "non-congruent matched pair with non-supplementary remaining angles")
    return Supplementary(cos1, cos2)


@dataclass(frozen=True)
class LemmaReport:
    """Outcome of the common-side configuration check."""

    supplementary_angles: bool
    cos_acb: Scalar
    cos_adb: Scalar
    opposite_sides: bool
    is_concyclic: Optional[bool]
    concyclicity_det: Optional[Scalar]
    ac_less_than_ab: bool


def lemma_common_side_check(t_abc: Triangle, t_abd: Triangle) -> LemmaReport:
    """Check the common-side configuration: triangles ABC and ABD on a shared
    segment AB with AC = AD, equal angles at B, and not congruent.

    Asserts that the angles at C and D are supplementary, that A, C, B, D are
    concyclic when C and D lie strictly on opposite sides of AB, and that
    AC < AB.  Precondition failures raise with an individual reason.
    """
    a1, b1, c = t_abc.A, t_abc.B, t_abc.C
    a2, b2, d = t_abd.A, t_abd.B, t_abd.C
    if not (a1.eq(a2) and b1.eq(b2)):
        raise LemmaPreconditionError("shared-side", "triangles do not share side AB")
    if not squared_distance(a1, c).eq(squared_distance(a2, d)):
        raise LemmaPreconditionError("unequal-ac-ad", "AC and AD differ")
    if not angle_cos(b1, a1, c).eq(angle_cos(b2, a2, d)):
        raise LemmaPreconditionError("unequal-angles", "angles at B differ")
    if congruent_any(t_abc, t_abd) is not None:
        raise LemmaPreconditionError("congruent", "the triangles are congruent")

    cos_acb = angle_cos(c, a1, b1)
    cos_adb = angle_cos(d, a2, b2)
    supp = supplementary(cos_acb, cos_adb)

    ab = line_through(a1, b1)
    s1, s2 = ab.eval(c).sign(), ab.eval(d).sign()
    opposite = s1 * s2 < 0
    is_cyc = det = None
    if opposite:
        is_cyc = concyclic(a1, c, b1, d)
        det = concyclicity_determinant(a1, c, b1, d)

    ac_lt_ab = squared_distance(a1, c).lt(squared_distance(a1, b1))
    return LemmaReport(supp, cos_acb, cos_adb, opposite, is_cyc, det, ac_lt_ab)


def to_common_side(t1: Triangle, t2: Triangle, corr: Correspondence,
                   common_label: str = "C",
                   placement: str = "same") -> Tuple[Triangle, Triangle, Isometry]:
    """Rigidly move t2 so its side corresponding to t1's side opposite
    ``common_label`` coincides with that side pointwise.

    ``placement`` puts t2's remaining vertex on the same side of the common
    line as t1's ("same") or on the other one ("opposite").  Returns t1
    unchanged, the moved copy of t2 (labels preserved), and the isometry used;
    its mirror flag tells whether a reflection was needed.
    """
    if placement not in ("same", "opposite"):
        raise ValueError("placement must be 'same' or 'opposite'")
    p_lab, q_lab = t1.others(common_label)
    dst1, dst2 = t1.vertex(p_lab), t1.vertex(q_lab)
    src1, src2 = t2.vertex(corr.image(p_lab)), t2.vertex(corr.image(q_lab))
    if not squared_distance(src1, src2).eq(squared_distance(dst1, dst2)):
        raise LengthMismatchError("matched sides differ in length")
    common = line_through(dst1, dst2)
    want = common.eval(t1.vertex(common_label)).sign()
    if placement == "opposite":
        want = -want
    third = t2.vertex(corr.image(common_label))
    for mirror in (False, True):
        g = isometry_taking_segment_to_segment(src1, src2, dst1, dst2, mirror)
        if common.eval(g.apply(third)).sign() == want:
            return t1, g.apply(t2), g
    raise DegenerateInputError("third vertex lies on the common line")
