"""SSA solver, case predictor, pair classifier, and the common-side lemma."""

import math
import random
from fractions import Fraction

import pytest

from planicheck.congruence import Correspondence, ElementTriple
from planicheck.kernel import (
    Isometry,
    collinear,
    dot,
    point,
    squared_distance,
    triangle,
)
from planicheck.scalars import EXACT, DegenerateInputError, FloatBackend
from planicheck.ssa import (
    Congruent,
    CriterionCase,
    LemmaPreconditionError,
    NotSsaMatched,
    SsaSpec,
    Supplementary,
    classify_pair,
    lemma_common_side_check,
    predict_case,
    solve_ssa,
    to_common_side,
)

FB = FloatBackend()
IDENT = Correspondence.identity()
SSA = ElementTriple(("A", "B"), "A")


def float_spec(a, b, theta_deg):
    return SsaSpec.from_values(FB, a, b, math.cos(math.radians(theta_deg)))


def deg(cos_scalar):
    return math.degrees(math.acos(max(-1.0, min(1.0, cos_scalar.as_float()))))


def test_two_solution_case():
    sols = solve_ssa(float_spec(1.0, math.sqrt(3), 30.0))
    assert sols.count == 2
    assert [t.as_float() for t in sols.third_sides] == pytest.approx([1.0, 2.0])
    angle_pairs = [(deg(a), deg(b))
                   for a, b in zip(sols.apex_cosines, sols.base_cosines)]
    assert angle_pairs[0] == pytest.approx((120.0, 30.0))
    assert angle_pairs[1] == pytest.approx((60.0, 90.0))


def test_equal_sides_give_one_triangle():
    sols = solve_ssa(float_spec(1.0, 1.0, 60.0))
    assert sols.count == 1
    assert sols.third_sides[0].as_float() == pytest.approx(1.0)
    assert deg(sols.apex_cosines[0]) == pytest.approx(60.0)


def test_no_solution_when_sine_exceeds_one():
    assert solve_ssa(float_spec(1.0, 3.0, 30.0)).count == 0


def test_greater_side_forces_unique_solution():
    sols = solve_ssa(float_spec(2.0, 1.0, 40.0))
    assert sols.count == 1


def test_right_angle_boundary_returns_one_right_triangle():
    sols = solve_ssa(float_spec(1.0, 2.0, 30.0))   # b sin(theta) == a exactly
    assert sols.count == 1
    assert sols.apex_cosines[0].as_float() == 0.0
    assert sols.third_sides[0].as_float() == pytest.approx(math.sqrt(3))


def test_obtuse_angle_opposite_not_greater_side_has_no_solution():
    assert solve_ssa(float_spec(1.0, 1.2, 120.0)).count == 0
    assert solve_ssa(float_spec(1.0, 1.0, 120.0)).count == 0
    # opposite the greater side the obtuse case is fine
    assert solve_ssa(float_spec(2.0, 1.0, 120.0)).count == 1


def test_solutions_reproduce_the_given_elements():
    rng = random.Random(99)
    for _ in range(200):
        spec = float_spec(rng.uniform(0.1, 10.0), rng.uniform(0.1, 10.0),
                          rng.uniform(5.0, 175.0))
        for t in solve_ssa(spec).triangles:
            assert math.isclose(squared_distance(t.C, t.B).as_float(),
                                spec.side_a.as_float() ** 2, rel_tol=1e-9)
            assert math.isclose(squared_distance(t.A, t.C).as_float(),
                                spec.side_b.as_float() ** 2, rel_tol=1e-9)
            assert math.isclose(t.cos_at("A").as_float(),
                                spec.cos_angle.as_float(), abs_tol=1e-9)


def test_ssa_spec_validation():
    with pytest.raises(DegenerateInputError):
        SsaSpec.from_values(FB, -1.0, 2.0, 0.5)
    with pytest.raises(DegenerateInputError):
        SsaSpec.from_values(FB, 1.0, 2.0, 1.0)


def test_predict_case():
    a, b = FB.scalar(1.0), FB.scalar(2.0)
    assert predict_case(a, b, included=True) is CriterionCase.INCLUDED_ANGLE
    assert predict_case(a, a) is CriterionCase.ISOSCELES_EQUAL_SIDES
    assert predict_case(b, a) is CriterionCase.ANGLE_OPPOSITE_GREATER
    assert predict_case(a, b) is CriterionCase.ANGLE_OPPOSITE_SMALLER


def test_exact_rational_two_solution_spec():
    # t^2 - 6t + 8 = 0: third sides 2 and 4 for b=5, cos=3/5, a=sqrt(17)
    spec = SsaSpec(EXACT.scalar(17).sqrt(), EXACT.scalar(5),
                   EXACT.scalar(Fraction(3, 5)))
    sols = solve_ssa(spec)
    assert sols.count == 2
    assert sols.third_sides[0].eq(2)
    assert sols.third_sides[1].eq(4)
    verdict = classify_pair(sols.triangles[0], sols.triangles[1], IDENT, SSA)
    assert isinstance(verdict, Supplementary)
    assert (verdict.cos1 + verdict.cos2).sign() == 0


def test_classify_pair_congruent_under_isometry():
    t1 = triangle(EXACT, (0, 0), (5, 0), (Fraction(16, 5), Fraction(12, 5)))
    g = Isometry(EXACT.scalar(Fraction(3, 5)), EXACT.scalar(Fraction(4, 5)),
                 EXACT.scalar(2), EXACT.scalar(-7), mirror=True)
    verdict = classify_pair(t1, g.apply(t1), IDENT, SSA)
    assert isinstance(verdict, Congruent)


def test_classify_pair_not_matched():
    t1 = triangle(FB, (0.0, 0.0), (5.0, 0.0), (3.2, 2.4))
    x = 43.0 / 12.0
    t2 = triangle(FB, (0.0, 0.0), (6.0, 0.0), (x, math.sqrt(16.0 - x * x)))
    # designation: sides a=3, b=4, angle opposite a; the angle differs
    assert isinstance(classify_pair(t1, t2, IDENT, SSA), NotSsaMatched)


def test_classify_pair_is_symmetric():
    sols = solve_ssa(float_spec(1.3, 2.0, 35.0))
    v12 = classify_pair(sols.triangles[0], sols.triangles[1], IDENT, SSA)
    v21 = classify_pair(sols.triangles[1], sols.triangles[0], IDENT, SSA)
    assert isinstance(v12, Supplementary) and isinstance(v21, Supplementary)
    assert v12.cos1.eq(v21.cos2) and v12.cos2.eq(v21.cos1)


def test_unambiguous_cases_never_classify_supplementary():
    rng = random.Random(5)
    for _ in range(100):
        b = rng.uniform(0.5, 5.0)
        theta = rng.uniform(10.0, 80.0)
        a = b * rng.uniform(1.01, 2.0)     # angle opposite the greater side
        sols = solve_ssa(float_spec(a, b, theta))
        assert sols.count <= 1


def lemma_pair(a, b, theta_deg):
    """Build the two-triangle common-side configuration from an SSA spec."""
    sols = solve_ssa(float_spec(a, b, theta_deg))
    assert sols.count == 2
    shared_a, shared_b = sols.triangles[0].C, sols.triangles[0].A
    apex1 = sols.triangles[0].B
    apex2 = sols.triangles[1].B
    below = point(FB, apex2.x.as_float(), -apex2.y.as_float())
    t_abc = triangle(FB, (shared_a.x.as_float(), 0.0), (0.0, 0.0),
                     (apex1.x.as_float(), apex1.y.as_float()))
    t_abd = triangle(FB, (shared_a.x.as_float(), 0.0), (0.0, 0.0),
                     (below.x.as_float(), below.y.as_float()))
    return t_abc, t_abd


def test_lemma_example_configuration():
    # A=(2,0) shared with B=(0,0); both apex segments from A have length 1.2
    t_abc, t_abd = lemma_pair(1.2, 2.0, 30.0)
    report = lemma_common_side_check(t_abc, t_abd)
    assert report.supplementary_angles
    assert report.opposite_sides
    assert report.is_concyclic
    assert report.ac_less_than_ab


def test_lemma_rejects_mirror_copy():
    sols = solve_ssa(float_spec(1.2, 2.0, 30.0))
    apex1 = sols.triangles[0].B
    ax = sols.triangles[0].C.x.as_float()
    t_abc = triangle(FB, (ax, 0.0), (0.0, 0.0),
                     (apex1.x.as_float(), apex1.y.as_float()))
    t_abd = triangle(FB, (ax, 0.0), (0.0, 0.0),
                     (apex1.x.as_float(), -apex1.y.as_float()))
    with pytest.raises(LemmaPreconditionError) as err:
        lemma_common_side_check(t_abc, t_abd)
    assert err.value.reason == "congruent"


def test_lemma_same_side_pair_reports_no_concyclicity():
    sols = solve_ssa(float_spec(1.2, 2.0, 30.0))
    ax = sols.triangles[0].C.x.as_float()
    tris = [triangle(FB, (ax, 0.0), (0.0, 0.0),
                     (t.B.x.as_float(), t.B.y.as_float()))
            for t in sols.triangles]
    report = lemma_common_side_check(tris[0], tris[1])
    assert report.supplementary_angles
    assert not report.opposite_sides
    assert report.is_concyclic is None


def test_lemma_precondition_reasons():
    t_abc, t_abd = lemma_pair(1.2, 2.0, 30.0)
    shifted = triangle(FB, (t_abd.A.x.as_float(), 0.0), (0.1, 0.0),
                       (t_abd.C.x.as_float(), t_abd.C.y.as_float()))
    with pytest.raises(LemmaPreconditionError) as err:
        lemma_common_side_check(t_abc, shifted)
    assert err.value.reason == "shared-side"

    other_len, _ = lemma_pair(1.3, 2.0, 30.0)
    with pytest.raises(LemmaPreconditionError) as err:
        lemma_common_side_check(t_abc, other_len)
    assert err.value.reason == "unequal-ac-ad"

    other_angle, _ = lemma_pair(1.2, 2.0, 25.0)
    with pytest.raises(LemmaPreconditionError) as err:
        lemma_common_side_check(t_abc, other_angle)
    assert err.value.reason == "unequal-angles"


def test_lemma_longer_equal_sides_leave_no_pair():
    # AC = AD = 2.5 > AB = 2: the solver is unique, so no second triangle
    assert solve_ssa(float_spec(2.5, 2.0, 30.0)).count == 1


def test_to_common_side_identity_overlay():
    t1 = triangle(EXACT, (0, 0), (5, 0), (Fraction(16, 5), Fraction(12, 5)))
    shift = Isometry(EXACT.scalar(1), EXACT.scalar(0),
                     EXACT.scalar(11), EXACT.scalar(-4))
    kept, moved, g = to_common_side(t1, shift.apply(t1), IDENT, "C", "same")
    assert kept is t1
    assert not g.mirror
    for lab in "ABC":
        assert moved.vertex(lab).eq(t1.vertex(lab))


def test_to_common_side_mirror_flag():
    t1 = triangle(EXACT, (0, 0), (5, 0), (Fraction(16, 5), Fraction(12, 5)))
    far_axis = triangle(EXACT, (20, 3), (25, 3),
                        (20 + Fraction(16, 5), 3 - Fraction(12, 5)))
    kept, moved, g = to_common_side(t1, far_axis, IDENT, "C", "same")
    assert g.mirror
    for lab in "ABC":
        assert moved.vertex(lab).eq(t1.vertex(lab))


def test_to_common_side_opposite_placement():
    t1 = triangle(EXACT, (0, 0), (5, 0), (Fraction(16, 5), Fraction(12, 5)))
    _, moved, _ = to_common_side(t1, t1, IDENT, "C", "opposite")
    assert moved.C.eq(point(EXACT, Fraction(16, 5), Fraction(-12, 5)))


def test_to_common_side_validation():
    t1 = triangle(EXACT, (0, 0), (5, 0), (Fraction(16, 5), Fraction(12, 5)))
    bigger = triangle(EXACT, (0, 0), (7, 0), (3, 3))
    with pytest.raises(Exception):
        to_common_side(t1, bigger, IDENT, "C", "same")
    with pytest.raises(ValueError):
        to_common_side(t1, t1, IDENT, "C", "sideways")


def test_to_common_side_two_ssa_solutions_give_figure_one():
    # the classic pair: overlaying the smaller solution below the shared side
    # and reflecting it back lands its apex G between B and C
    sols = solve_ssa(float_spec(1.0, math.sqrt(3), 30.0))
    t_big, t_small = sols.triangles[1], sols.triangles[0]
    _, moved, g = to_common_side(t_big, t_small, IDENT, "B", "opposite")
    assert g.mirror
    assert moved.B.y.as_float() == pytest.approx(-0.5)
    mirror_back = point(FB, moved.B.x.as_float(), -moved.B.y.as_float())
    assert mirror_back.x.as_float() == pytest.approx(math.sqrt(3) / 2)
    assert mirror_back.y.as_float() == pytest.approx(0.5)
    # G sits strictly between B and C of the bigger triangle
    b_pt, c_pt = t_big.A, t_big.B
    assert collinear(b_pt, mirror_back, c_pt)
    along = dot(mirror_back - b_pt, c_pt - b_pt).as_float()
    total = dot(c_pt - b_pt, c_pt - b_pt).as_float()
    assert 0.0 < along < total
