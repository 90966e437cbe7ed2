"""Planar geometry kernel: points, lines, circles, isometries, triangles.

All values are immutable and tied to one scalar backend.  Angles are handled
through their cosines, which are injective on (0, pi); degrees never appear
below the CLI.  Degenerate inputs raise, they are not silently patched.

Float predicates use relative tolerances scaled by the configuration size
``coord_scale`` (max of 1 and the coordinate magnitudes).  Documented scale
powers: collinearity/orientation eps*scale^2, point-on-line eps*scale,
concyclicity eps*scale^4.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional, Union

from .scalars import (
    EXACT,
    Backend,
    BackendMismatchError,
    DegenerateInputError,
    ExactValueError,
    FloatBackend,
    LengthMismatchError,
    Scalar,
)

LABELS = ("A", "B", "C")


@dataclass(frozen=True)
class Point:
    x: Scalar
    y: Scalar

    def __post_init__(self):
        if self.x.backend != self.y.backend:
            raise BackendMismatchError("point coordinates from different backends")

    @property
    def backend(self) -> Backend:
        return self.x.backend

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)

    def times(self, k) -> "Point":
        return Point(self.x * k, self.y * k)

    def eq(self, other: "Point") -> bool:
        return self.x.eq(other.x) and self.y.eq(other.y)


def point(backend: Backend, x, y) -> Point:
    return Point(backend.scalar(x), backend.scalar(y))


def dot(u: Point, v: Point) -> Scalar:
    return u.x * v.x + u.y * v.y


def cross(u: Point, v: Point) -> Scalar:
    return u.x * v.y - u.y * v.x


def midpoint(p: Point, q: Point) -> Point:
    return Point((p.x + q.x) / 2, (p.y + q.y) / 2)


def squared_distance(p: Point, q: Point) -> Scalar:
    d = q - p
    return dot(d, d)


def coord_scale(*points: Point) -> float:
    """Configuration size used to scale float tolerances; floored at 1."""
    s = 1.0
    for p in points:
        s = max(s, abs(p.x.as_float()), abs(p.y.as_float()))
    return s


def orient(p: Point, q: Point, r: Point) -> Scalar:
    """Twice the signed area of pqr."""
    return cross(q - p, r - p)


def collinear(p: Point, q: Point, r: Point) -> bool:
    d = orient(p, q, r)
    if d.is_zero() and not d.is_exact:
        return True
    if d.is_exact:
        return d.sign() == 0
    return abs(d.as_float()) <= d.backend.eps * coord_scale(p, q, r) ** 2


@dataclass(frozen=True)
class Line:
    """Locus u*x + v*y + w = 0, canonicalized at construction.

    Exact lines divide through by the first nonzero of (u, v); float lines
    carry a unit normal, so evaluating a point gives its signed distance.
    """

    u: Scalar
    v: Scalar
    w: Scalar

    def __post_init__(self):
        n2 = self.u * self.u + self.v * self.v
        if n2.sign() == 0:
            raise DegenerateInputError("line normal must be nonzero")
        if self.u.is_exact:
            lead = self.u if self.u.sign() != 0 else self.v
            object.__setattr__(self, "u", self.u / lead)
            object.__setattr__(self, "v", self.v / lead)
            object.__setattr__(self, "w", self.w / lead)
        else:
            n = n2.sqrt()
            u, v, w = self.u / n, self.v / n, self.w / n
            if u.as_float() < 0 or (u.as_float() == 0.0 and v.as_float() < 0):
                u, v, w = -u, -v, -w
            object.__setattr__(self, "u", u)
            object.__setattr__(self, "v", v)
            object.__setattr__(self, "w", w)

    @property
    def backend(self) -> Backend:
        return self.u.backend

    def eval(self, p: Point) -> Scalar:
        return self.u * p.x + self.v * p.y + self.w

    def eq(self, other: "Line") -> bool:
        """Equality as point sets (coefficients proportional)."""
        c1 = self.u * other.v - other.u * self.v
        c2 = self.u * other.w - other.u * self.w
        c3 = self.v * other.w - other.v * self.w
        if self.u.is_exact:
            return c1.sign() == 0 and c2.sign() == 0 and c3.sign() == 0
        eps = self.backend.eps
        s = max(1.0, abs(self.w.as_float()), abs(other.w.as_float()))
        return all(abs(c.as_float()) <= eps * s for c in (c1, c2, c3))


def line_through(p: Point, q: Point) -> Line:
    if squared_distance(p, q).sign() == 0:
        raise DegenerateInputError("line through two coincident points")
    u = p.y - q.y
    v = q.x - p.x
    w = p.x * q.y - q.x * p.y
    return Line(u, v, w)


def line_intersection(l1: Line, l2: Line) -> Optional[Point]:
    """Intersection point, or None for parallel (including equal) lines."""
    det = l1.u * l2.v - l2.u * l1.v
    if det.is_zero():
        return None
    x = (l1.v * l2.w - l2.v * l1.w) / det
    y = (l2.u * l1.w - l1.u * l2.w) / det
    return Point(x, y)


def point_on_line(l: Line, p: Point) -> bool:
    val = l.eval(p)
    if val.is_exact:
        return val.sign() == 0
    # unit normal, so eval is a distance; scale power 1
    return abs(val.as_float()) <= l.backend.eps * coord_scale(p)


def signed_distance(l: Line, p: Point) -> Scalar:
    """Signed distance from p to l (sign follows the stored normal)."""
    val = l.eval(p)
    if not val.is_exact:
        return val
    n2 = l.u * l.u + l.v * l.v
    return (val * val / n2).sqrt() * val.sign()


def foot_of_perpendicular(p: Point, l: Line) -> Point:
    n2 = l.u * l.u + l.v * l.v
    k = l.eval(p) / n2
    return Point(p.x - k * l.u, p.y - k * l.v)


def reflect_point(p: Point, l: Line) -> Point:
    n2 = l.u * l.u + l.v * l.v
    k = (l.eval(p) / n2) * 2
    return Point(p.x - k * l.u, p.y - k * l.v)


def reflect(obj, l: Line):
    """Mirror a Point or Triangle across a line."""
    if isinstance(obj, Point):
        return reflect_point(obj, l)
    if isinstance(obj, Triangle):
        return Triangle(reflect_point(obj.A, l), reflect_point(obj.B, l),
                        reflect_point(obj.C, l))
    raise TypeError(f"cannot reflect {type(obj).__name__}")


@dataclass(frozen=True)
class Circle:
    center: Point
    radius_sq: Scalar

    def __post_init__(self):
        if self.radius_sq.sign() <= 0:
            raise DegenerateInputError("circle needs positive squared radius")

    def contains(self, p: Point) -> bool:
        return squared_distance(self.center, p).eq(self.radius_sq)


def angle_cos(vertex: Point, end1: Point, end2: Point) -> Scalar:
    """Cosine of the angle at ``vertex`` subtended by the two ends.

    Exact backend: the value is sign(dot) * sqrt(dot^2 / (|u|^2 |v|^2)), an
    exactly comparable radical; it collapses to a rational when possible.
    """
    if vertex.eq(end1) or vertex.eq(end2):
        raise DegenerateInputError("angle at coincident points")
    u = end1 - vertex
    v = end2 - vertex
    uu = dot(u, u)
    vv = dot(v, v)
    d = dot(u, v)
    if not d.is_exact:
        return d / (uu * vv).sqrt()
    return (d * d / (uu * vv)).sqrt() * d.sign()


def supplementary(cos1: Scalar, cos2: Scalar) -> bool:
    """True iff the two angles sum to a straight angle (cos1 == -cos2)."""
    return cos1.eq(-cos2)


@dataclass(frozen=True)
class Isometry:
    """Rigid motion p -> R * M * p + t with R a rotation and M an optional
    mirror across the x axis (applied first when ``mirror`` is set)."""

    cos_t: Scalar
    sin_t: Scalar
    tx: Scalar
    ty: Scalar
    mirror: bool = False

    def __post_init__(self):
        n = self.cos_t * self.cos_t + self.sin_t * self.sin_t
        if not n.eq(1):
            raise ValueError("rotation part must satisfy cos^2 + sin^2 = 1")

    @classmethod
    def identity(cls, backend: Backend) -> "Isometry":
        one, zero = backend.scalar(1), backend.scalar(0)
        return cls(one, zero, zero, zero, False)

    def _linear(self, p: Point) -> Point:
        x, y = (p.x, -p.y) if self.mirror else (p.x, p.y)
        return Point(self.cos_t * x - self.sin_t * y,
                     self.sin_t * x + self.cos_t * y)

    def apply(self, obj):
        if isinstance(obj, Point):
            q = self._linear(obj)
            return Point(q.x + self.tx, q.y + self.ty)
        if isinstance(obj, Triangle):
            return Triangle(self.apply(obj.A), self.apply(obj.B), self.apply(obj.C))
        raise TypeError(f"cannot apply isometry to {type(obj).__name__}")

    def compose(self, other: "Isometry") -> "Isometry":
        """self after other: (self.compose(other)).apply(p) == self.apply(other.apply(p))."""
        c1, s1 = other.cos_t, other.sin_t
        c2, s2 = self.cos_t, self.sin_t
        if self.mirror:
            c, s = c2 * c1 + s2 * s1, s2 * c1 - c2 * s1
        else:
            c, s = c2 * c1 - s2 * s1, s2 * c1 + c2 * s1
        t = self.apply(Point(other.tx, other.ty))
        return Isometry(c, s, t.x, t.y, self.mirror != other.mirror)


def isometry_taking_segment_to_segment(src1: Point, src2: Point,
                                       dst1: Point, dst2: Point,
                                       mirror: bool = False) -> Isometry:
    """The isometry sending src1 -> dst1 and src2 -> dst2.

    Requires equal segment lengths; with equal lengths the rotation part is
    rational for rational inputs, so the exact backend stays exact.
    """
    su = src2 - src1
    dv = dst2 - dst1
    n2 = dot(su, su)
    if n2.sign() == 0 or not n2.eq(dot(dv, dv)):
        raise LengthMismatchError("segments must be nonzero and of equal length")
    if mirror:
        su = Point(su.x, -su.y)
    c = dot(su, dv) / n2
    s = cross(su, dv) / n2
    if not c.is_exact:
        # renormalize against rounding drift
        n = (c * c + s * s).sqrt()
        c, s = c / n, s / n
    g0 = Isometry(c, s, c - c, c - c, mirror)  # zero translation, same backend
    a = g0.apply(src1)
    return Isometry(c, s, dst1.x - a.x, dst1.y - a.y, mirror)


@dataclass(frozen=True)
class Triangle:
    """Labeled, strictly non-collinear triangle."""

    A: Point
    B: Point
    C: Point

    def __post_init__(self):
        if not (self.A.backend == self.B.backend == self.C.backend):
            raise BackendMismatchError("triangle vertices from different backends")
        d = orient(self.A, self.B, self.C)
        if d.is_exact:
            if d.sign() == 0:
                raise DegenerateInputError("collinear triangle")
        else:
            s = coord_scale(self.A, self.B, self.C)
            if abs(d.as_float()) <= d.backend.eps * s * s:
                raise DegenerateInputError("triangle is collinear within tolerance")

    @property
    def backend(self) -> Backend:
        return self.A.backend

    @property
    def labels(self):
        return LABELS

    def vertex(self, label: str) -> Point:
        return getattr(self, label)

    def others(self, label: str):
        return tuple(l for l in LABELS if l != label)

    def side_sq(self, label: str) -> Scalar:
        """Squared length of the side opposite ``label``."""
        p, q = self.others(label)
        return squared_distance(self.vertex(p), self.vertex(q))

    def cos_at(self, label: str) -> Scalar:
        p, q = self.others(label)
        return angle_cos(self.vertex(label), self.vertex(p), self.vertex(q))

    def orientation(self) -> Scalar:
        return orient(self.A, self.B, self.C)


def triangle(backend: Backend, a, b, c) -> Triangle:
    return Triangle(point(backend, *a), point(backend, *b), point(backend, *c))


def circumcircle(t: Triangle) -> Circle:
    """Circle through the three vertices (perpendicular-bisector intersection)."""
    a, b, c = t.A, t.B, t.C
    d = orient(a, b, c) * 2
    aa, bb, cc = dot(a, a), dot(b, b), dot(c, c)
    ux = (aa * (b.y - c.y) + bb * (c.y - a.y) + cc * (a.y - b.y)) / d
    uy = (aa * (c.x - b.x) + bb * (a.x - c.x) + cc * (b.x - a.x)) / d
    center = Point(ux, uy)
    return Circle(center, squared_distance(center, a))


class IncenterResult(NamedTuple):
    incenter: Point
    foot_a: Point  # internal bisector from A meets BC
    foot_b: Point  # from B, on CA
    foot_c: Point  # from C, on AB


def _side_lengths(t: Triangle):
    try:
        a = t.side_sq("A").sqrt()
        b = t.side_sq("B").sqrt()
        c = t.side_sq("C").sqrt()
    except ExactValueError:
        raise ExactValueError(
            "construction needs rational side lengths on the exact backend") from None
    return a, b, c


def incenter_and_bisector_feet(t: Triangle) -> IncenterResult:
    """Incenter (aA + bB + cC)/(a+b+c) and the three bisector feet.

    Each foot divides its side in the ratio of the adjacent sides, e.g. the
    foot from A splits BC with BA1 : A1C = c : b.
    """
    a, b, c = _side_lengths(t)
    p = a + b + c
    j = Point((t.A.x * a + t.B.x * b + t.C.x * c) / p,
              (t.A.y * a + t.B.y * b + t.C.y * c) / p)
    foot_a = t.B + (t.C - t.B).times(c / (b + c))
    foot_b = t.A + (t.C - t.A).times(c / (a + c))
    foot_c = t.A + (t.B - t.A).times(b / (a + b))
    return IncenterResult(j, foot_a, foot_b, foot_c)


def internal_bisector_line(t: Triangle, label: str) -> Line:
    """Internal angle bisector at the given vertex, as a full line."""
    v = t.vertex(label)
    p, q = (t.vertex(l) for l in t.others(label))
    try:
        lp = squared_distance(v, p).sqrt()
        lq = squared_distance(v, q).sqrt()
    except ExactValueError:
        raise ExactValueError(
            "bisector needs rational arm lengths on the exact backend") from None
    d = Point((p.x - v.x) / lp + (q.x - v.x) / lq,
              (p.y - v.y) / lp + (q.y - v.y) / lq)
    return line_through(v, Point(v.x + d.x, v.y + d.y))


def concyclicity_determinant(p1: Point, p2: Point, p3: Point, p4: Point) -> Scalar:
    """Determinant of rows [x, y, x^2 + y^2, 1]; zero iff concyclic (given the
    no-three-collinear precondition).  Homogeneous of degree 4 in coordinates."""
    pts = (p1, p2, p3, p4)
    rows = []
    for p in pts[:3]:
        d = p - p4
        rows.append((d.x, d.y, dot(p, p) - dot(p4, p4)))
    (a1, b1, c1), (a2, b2, c2), (a3, b3, c3) = rows
    return (a1 * (b2 * c3 - b3 * c2)
            - b1 * (a2 * c3 - a3 * c2)
            + c1 * (a2 * b3 - a3 * b2))


def concyclic(p1: Point, p2: Point, p3: Point, p4: Point) -> bool:
    """Exact zero test of the determinant, or |det| <= eps * scale^4 on floats.

    Preconditions: four distinct points, no three collinear.
    """
    pts = (p1, p2, p3, p4)
    for i in range(4):
        for j in range(i + 1, 4):
            if squared_distance(pts[i], pts[j]).is_zero():
                raise DegenerateInputError("concyclicity needs 4 distinct points")
    for i in range(4):
        trio = [p for k, p in enumerate(pts) if k != i]
        if collinear(*trio):
            raise DegenerateInputError("three of the points are collinear")
    det = concyclicity_determinant(*pts)
    if det.is_exact:
        return det.sign() == 0
    return abs(det.as_float()) <= det.backend.eps * coord_scale(*pts) ** 4
