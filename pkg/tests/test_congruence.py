"""Congruence criteria A-D and the exhaustive correspondence search."""

import math
import random
from fractions import Fraction

import pytest

from planicheck.congruence import (
    ALL_CORRESPONDENCES,
    Applicability,
    Correspondence,
    ElementTriple,
    congruent_any,
    criterion_a,
    criterion_b,
    criterion_c,
    criterion_d,
    measure,
)
from planicheck.kernel import Isometry, reflect, line_through, point, triangle
from planicheck.scalars import EXACT, FloatBackend

FB = FloatBackend()

# 3-4-5 with rational coordinates: sides a=3 (opposite A), b=4, c=5
T345 = triangle(EXACT, (0, 0), (5, 0), (Fraction(16, 5), Fraction(12, 5)))
IDENT = Correspondence.identity()


def float_345():
    return triangle(FB, (0.0, 0.0), (5.0, 0.0), (3.2, 2.4))


def float_346():
    # sides a=3, b=4, c=6; apex solved from the two distance equations
    x = 43.0 / 12.0
    y = math.sqrt(16.0 - x * x)
    return triangle(FB, (0.0, 0.0), (6.0, 0.0), (x, y))


def test_measure_elements_of_3_4_5():
    e = measure(T345)
    assert e.side_sq["A"].exact_value() == 9
    assert e.side_sq["B"].exact_value() == 16
    assert e.side_sq["C"].exact_value() == 25
    # law of cosines: cos A = (16 + 25 - 9) / (2 * 4 * 5)
    assert e.cos_at["A"].exact_value() == Fraction(4, 5)
    assert e.cos_at["C"].exact_value() == 0
    e.check_consistent()


def test_criterion_a_on_identical_elements():
    e = measure(T345)
    assert criterion_a(e, e, IDENT)
    triple = ElementTriple(("A", "B"), "C")
    assert criterion_a(e, e, IDENT, triple)


def test_criterion_a_rejects_non_included_designation():
    e = measure(T345)
    with pytest.raises(ValueError):
        criterion_a(e, e, IDENT, ElementTriple(("A", "B"), "A"))


def test_criterion_a_shared_sides_different_included_angle():
    e1, e2 = measure(float_345()), measure(float_346())
    for corr in ALL_CORRESPONDENCES:
        assert not criterion_a(e1, e2, corr)


def test_criterion_b_two_angles_and_side():
    e = measure(T345)
    assert criterion_b(e, e, IDENT)
    e2 = measure(float_346())
    assert not criterion_b(measure(float_345()), e2, IDENT)


def test_criterion_c_under_rotating_correspondence():
    # same triangle relabeled A->B->C->A
    t2 = type(T345)(T345.B, T345.C, T345.A)
    corr = Correspondence(("C", "A", "B"))
    assert criterion_c(measure(T345), measure(t2), corr)
    assert not criterion_c(measure(T345), measure(t2), IDENT)


def test_criterion_d_angle_opposite_greater_side():
    e = measure(T345)
    # angle at C is opposite c=5, the greater of (5, 4)
    triple = ElementTriple(("C", "B"), "C")
    assert criterion_d(e, e, IDENT, triple) is Applicability.HOLDS


def test_criterion_d_angle_opposite_smaller_side_not_applicable():
    e = measure(T345)
    # angle at A is opposite a=3, smaller than b=4: the ambiguous regime
    triple = ElementTriple(("A", "B"), "A")
    assert criterion_d(e, e, IDENT, triple) is Applicability.NOT_APPLICABLE


def test_criterion_d_fails_when_elements_differ():
    e1, e2 = measure(float_345()), measure(float_346())
    triple = ElementTriple(("C", "B"), "C")
    assert criterion_d(e1, e2, IDENT, triple) is Applicability.FAILS


def test_criterion_d_search_prefers_holds():
    e = measure(T345)
    assert criterion_d(e, e, IDENT) is Applicability.HOLDS


def test_criterion_d_rejects_included_designation():
    e = measure(T345)
    with pytest.raises(ValueError):
        criterion_d(e, e, IDENT, ElementTriple(("A", "B"), "C"))


def test_congruent_any_mirror_image():
    axis = line_through(point(EXACT, 0, 0), point(EXACT, 1, 3))
    assert congruent_any(T345, reflect(T345, axis)) is not None


def test_congruent_any_similar_but_scaled_is_none():
    t2 = triangle(EXACT, (0, 0), (10, 0), (Fraction(32, 5), Fraction(24, 5)))
    assert congruent_any(T345, t2) is None


def test_congruent_any_finds_the_relabeling():
    t2 = type(T345)(T345.B, T345.C, T345.A)
    corr = congruent_any(T345, t2)
    assert corr.mapping == ("C", "A", "B")


def test_congruent_any_is_inverse_symmetric():
    cases = [
        (T345, type(T345)(T345.C, T345.A, T345.B)),
        # equilateral: six matches, the canonical pick must stay consistent
        (triangle(FB, (0.0, 0.0), (1.0, 0.0), (0.5, math.sqrt(3) / 2)),
         triangle(FB, (2.0, 0.0), (3.0, 0.0), (2.5, math.sqrt(3) / 2))),
    ]
    for t1, t2 in cases:
        c12 = congruent_any(t1, t2)
        c21 = congruent_any(t2, t1)
        assert c21.mapping == c12.inverse().mapping


def test_sss_implies_sas_and_aas():
    rng = random.Random(7)
    rotations = ((Fraction(3, 5), Fraction(4, 5)),
                 (Fraction(5, 13), Fraction(12, 13)),
                 (Fraction(8, 17), Fraction(15, 17)))
    bases = (T345,
             triangle(EXACT, (0, 0), (7, 1), (2, 6)),
             triangle(EXACT, (-1, -1), (3, 0), (Fraction(1, 2), 5)))
    for _ in range(25):
        t1 = bases[rng.randrange(len(bases))]
        c, s = rotations[rng.randrange(3)]
        g = Isometry(EXACT.scalar(c), EXACT.scalar(s),
                     EXACT.scalar(rng.randint(-3, 3)),
                     EXACT.scalar(rng.randint(-3, 3)),
                     mirror=rng.random() < 0.5)
        t2 = g.apply(t1)
        corr = congruent_any(t1, t2)
        e1, e2 = measure(t1), measure(t2)
        assert criterion_c(e1, e2, corr)
        assert criterion_a(e1, e2, corr)
        assert criterion_b(e1, e2, corr)


def test_correspondence_validation_and_inverse():
    with pytest.raises(ValueError):
        Correspondence(("A", "A", "B"))
    corr = Correspondence(("B", "C", "A"))
    assert corr.inverse().mapping == ("C", "A", "B")
    assert corr.image("A") == "B"


def test_element_triple_validation():
    with pytest.raises(ValueError):
        ElementTriple(("A", "A"), "B")
    assert ElementTriple(("A", "B"), "C").included
    assert not ElementTriple(("A", "B"), "A").included
