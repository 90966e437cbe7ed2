"""Shape-space scenarios and level-set scanning.

A triangle shape is the pair of base angles (alpha at A, beta at B) with the
base AB frozen to length 1, which quotients out similarity.  Each scenario
defines a signed hypothesis residual over shape space whose zero set is the
hypothesis locus of one classical statement, plus a full trace with labeled
intermediate points for audits.

``level_set_scan`` samples the residual on a grid, refines every sign change
by bisection, and checks that each refined root lies within a containment
tolerance of the scenario's conclusion set (a union of named branches such as
alpha = beta or gamma = 60 degrees).  Scenario numerics run on raw binary64;
the geometry kernel is the reference the test suite audits them against.

Registered scenarios:

* ``medial-circumcenter``: the circumcenter of the medial triangle lies on
  the internal bisector of angle C.
* ``incenter-segments``: the incenter is equidistant from the feet of the
  bisectors from A and B.
* ``square-center``: the center of the inscribed square on side AB is seen
  from C under equal angles to A and B.
* ``rectangle-center``: same for an inscribed rectangle of height fraction t
  (exploratory: only the isosceles branch is an established conclusion).
* ``bisector-30``: the angle between the bisector foot chain B1, A1 and B
  equals 30 degrees.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

from .scalars import DegenerateInputError

_GAMMA_FLOOR = 1e-3  # scan guard: skip the numerically wild sliver gamma < ~0.06 deg


class UnknownScenarioError(ValueError):
    def __init__(self, name: str, available):
        super().__init__(f"unknown scenario {name!r}; available: {', '.join(available)}")
        self.available = tuple(available)


class FeetOffSegmentError(DegenerateInputError):
    """Inscribed square/rectangle feet would leave segment AB."""


@dataclass(frozen=True)
class ShapeParams:
    """Base angles at A and B in radians; AB = 1."""

    alpha: float
    beta: float

    def __post_init__(self):
        if not (self.alpha > 0 and self.beta > 0
                and self.alpha + self.beta < math.pi):
            raise DegenerateInputError("need alpha, beta > 0 and alpha + beta < pi")

    @property
    def gamma(self) -> float:
        return math.pi - self.alpha - self.beta

    @classmethod
    def from_degrees(cls, alpha_deg: float, beta_deg: float) -> "ShapeParams":
        return cls(math.radians(alpha_deg), math.radians(beta_deg))


@dataclass
class ScenarioTrace:
    """Labeled intermediates of one scenario instance.

    ``points`` maps labels to (x, y); ``angles`` holds measured (and, where
    noted, hypothesis-predicted) values in radians; ``audits`` holds named
    construction-incidence residuals that should all be ~0; ``flags`` are the
    conclusion-branch indicators at this shape.
    """

    params: ShapeParams
    residual: float
    points: Dict[str, Tuple[float, float]] = field(default_factory=dict)
    angles: Dict[str, float] = field(default_factory=dict)
    audits: Dict[str, float] = field(default_factory=dict)
    flags: Dict[str, bool] = field(default_factory=dict)


# -- raw-float helpers ------------------------------------------------------

def _apex(alpha: float, beta: float) -> Tuple[float, float]:
    # C for A=(0,0), B=(1,0); robust across right angles via the sine form
    g = math.pi - alpha - beta
    sg = math.sin(g)
    return (math.sin(beta) * math.cos(alpha) / sg,
            math.sin(beta) * math.sin(alpha) / sg)


def _d2(p, q):
    return (p[0] - q[0]) ** 2 + (p[1] - q[1]) ** 2


def _cos_at(v, p, q):
    ux, uy = p[0] - v[0], p[1] - v[1]
    wx, wy = q[0] - v[0], q[1] - v[1]
    return (ux * wx + uy * wy) / math.sqrt((ux * ux + uy * uy) * (wx * wx + wy * wy))


def _angle_at(v, p, q):
    c = _cos_at(v, p, q)
    return math.acos(max(-1.0, min(1.0, c)))


def _lerp(p, q, s):
    return (p[0] + (q[0] - p[0]) * s, p[1] + (q[1] - p[1]) * s)


def _incenter_parts(alpha, beta):
    a_pt, b_pt = (0.0, 0.0), (1.0, 0.0)
    c_pt = _apex(alpha, beta)
    a = math.sqrt(_d2(b_pt, c_pt))
    b = math.sqrt(_d2(a_pt, c_pt))
    c = 1.0
    p = a + b + c
    j = ((a * a_pt[0] + b * b_pt[0] + c * c_pt[0]) / p,
         (a * a_pt[1] + b * b_pt[1] + c * c_pt[1]) / p)
    foot_a = _lerp(b_pt, c_pt, c / (b + c))   # on BC, from A
    foot_b = _lerp(a_pt, c_pt, c / (a + c))   # on CA, from B
    return a_pt, b_pt, c_pt, a, b, j, foot_a, foot_b


# -- residuals (single source; traces call these) ----------------------------

def medial_residual(alpha: float, beta: float) -> float:
    """Signed distance from the medial-triangle circumcenter to the internal
    bisector at C; positive on the side containing A."""
    a_pt, b_pt = (0.0, 0.0), (1.0, 0.0)
    c_pt = _apex(alpha, beta)
    f = ((b_pt[0] + c_pt[0]) / 2, (b_pt[1] + c_pt[1]) / 2)
    d = ((c_pt[0] + a_pt[0]) / 2, (c_pt[1] + a_pt[1]) / 2)
    e = ((a_pt[0] + b_pt[0]) / 2, (a_pt[1] + b_pt[1]) / 2)
    g = _circumcenter(f, d, e)
    return _bisector_signed_distance(c_pt, a_pt, b_pt, g)


def _circumcenter(p, q, r):
    d = 2.0 * ((q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0]))
    pp = p[0] * p[0] + p[1] * p[1]
    qq = q[0] * q[0] + q[1] * q[1]
    rr = r[0] * r[0] + r[1] * r[1]
    ux = (pp * (q[1] - r[1]) + qq * (r[1] - p[1]) + rr * (p[1] - q[1])) / d
    uy = (pp * (r[0] - q[0]) + qq * (p[0] - r[0]) + rr * (q[0] - p[0])) / d
    return (ux, uy)


def _bisector_signed_distance(v, p, q, x):
    """Distance from x to the internal bisector at v of angle pvq, signed
    positive toward p's side."""
    lp = math.sqrt(_d2(v, p))
    lq = math.sqrt(_d2(v, q))
    dx = (p[0] - v[0]) / lp + (q[0] - v[0]) / lq
    dy = (p[1] - v[1]) / lp + (q[1] - v[1]) / lq
    n = math.hypot(dx, dy)
    nx, ny = -dy / n, dx / n
    if nx * (p[0] - v[0]) + ny * (p[1] - v[1]) < 0:
        nx, ny = -nx, -ny
    return nx * (x[0] - v[0]) + ny * (x[1] - v[1])


def incenter_residual(alpha: float, beta: float) -> float:
    """JA1^2 - JB1^2 for the incenter J and the bisector feet from A and B."""
    *_, j, foot_a, foot_b = _incenter_parts(alpha, beta)
    return _d2(j, foot_a) - _d2(j, foot_b)


def _square_feet(alpha, beta, t):
    # rectangle of height fraction t over the altitude from C; t = h/(1+h)
    # with h the altitude gives the inscribed square
    c_pt = _apex(alpha, beta)
    h = c_pt[1]
    y0 = t * h
    xq = t * c_pt[0]
    xp = 1.0 - t * (1.0 - c_pt[0])
    return c_pt, (xq, 0.0), (xp, 0.0), (xp, y0), (xq, y0)


def square_residual(alpha: float, beta: float) -> float:
    """cos(angle ACO) - cos(angle BCO) for the inscribed-square center O."""
    c_pt = _apex(alpha, beta)
    h = c_pt[1]
    # square side s = h/(1+h) for base 1, so the height fraction is s/h
    return rectangle_residual(alpha, beta, 1.0 / (1.0 + h))


def rectangle_residual(alpha: float, beta: float, t: float = 0.5) -> float:
    """Same residual for the inscribed rectangle of height fraction t."""
    if not 0.0 < t < 1.0:
        raise DegenerateInputError("height fraction t must lie in (0, 1)")
    if alpha > math.pi / 2 or beta > math.pi / 2:
        raise FeetOffSegmentError(
            "inscribed square/rectangle needs alpha, beta <= 90 deg "
            "(feet would leave segment AB)")
    c_pt, m, n, p, q = _square_feet(alpha, beta, t)
    o = ((m[0] + p[0]) / 2, p[1] / 2)
    return _cos_at(c_pt, (0.0, 0.0), o) - _cos_at(c_pt, (1.0, 0.0), o)


def bisector30_residual(alpha: float, beta: float) -> float:
    """cos(angle B B1 A1) - cos(30 deg) for the bisector feet A1, B1."""
    _, b_pt, _, _, _, _, foot_a, foot_b = _incenter_parts(alpha, beta)
    return _cos_at(foot_b, b_pt, foot_a) - math.cos(math.pi / 6)


# -- trace builders -----------------------------------------------------------

_FLAG_TOL = 1e-9


def _base_flags(params: ShapeParams) -> Dict[str, bool]:
    return {"isosceles": abs(params.alpha - params.beta) <= _FLAG_TOL}


def medial_circumcenter(params: ShapeParams) -> ScenarioTrace:
    """Medial-triangle circumcenter against the bisector at C.

    The point G is cross-checkable as the nine-point center, the midpoint of
    circumcenter and orthocenter of ABC.
    """
    a_pt, b_pt = (0.0, 0.0), (1.0, 0.0)
    c_pt = _apex(params.alpha, params.beta)
    f = ((b_pt[0] + c_pt[0]) / 2, (b_pt[1] + c_pt[1]) / 2)
    d = ((c_pt[0] + a_pt[0]) / 2, (c_pt[1] + a_pt[1]) / 2)
    e = (0.5, 0.0)
    g = _circumcenter(f, d, e)
    o = _circumcenter(a_pt, b_pt, c_pt)
    # nine-point center: midpoint of O and the orthocenter H = A+B+C-2O
    hx = a_pt[0] + b_pt[0] + c_pt[0] - 2 * o[0]
    hy = a_pt[1] + b_pt[1] + c_pt[1] - 2 * o[1]
    nine = ((o[0] + hx) / 2, (o[1] + hy) / 2)
    tr = ScenarioTrace(params, medial_residual(params.alpha, params.beta))
    tr.points.update(A=a_pt, B=b_pt, C=c_pt, F=f, D=d, E=e, G=g, N=nine)
    tr.audits["G equals nine-point center"] = math.sqrt(_d2(g, nine))
    tr.audits["G equidistant from midpoints"] = abs(_d2(g, f) - _d2(g, d))
    tr.flags = _base_flags(params)
    tr.flags["gamma-60"] = abs(params.gamma - math.pi / 3) <= _FLAG_TOL
    return tr


def incenter_equal_segments(params: ShapeParams) -> ScenarioTrace:
    """Incenter distances to the two bisector feet, with the exterior angles
    at the feet recorded; those satisfy angle(C B1 J) = alpha + beta/2 and
    angle(C A1 J) = beta + alpha/2 identically."""
    a_pt, b_pt, c_pt, a, b, j, foot_a, foot_b = _incenter_parts(
        params.alpha, params.beta)
    tr = ScenarioTrace(params, incenter_residual(params.alpha, params.beta))
    tr.points.update(A=a_pt, B=b_pt, C=c_pt, J=j, A1=foot_a, B1=foot_b)
    tr.angles["CB1J"] = _angle_at(foot_b, c_pt, j)
    tr.angles["CA1J"] = _angle_at(foot_a, c_pt, j)
    tr.angles["CB1J predicted"] = params.alpha + params.beta / 2
    tr.angles["CA1J predicted"] = params.beta + params.alpha / 2
    # feet sit on their sides
    tr.audits["A1 on BC"] = abs(_cross(b_pt, c_pt, foot_a))
    tr.audits["B1 on CA"] = abs(_cross(a_pt, c_pt, foot_b))
    tr.audits["J on AA1"] = abs(_cross(a_pt, foot_a, j))
    tr.audits["J on BB1"] = abs(_cross(b_pt, foot_b, j))
    tr.flags = _base_flags(params)
    tr.flags["gamma-60"] = abs(params.gamma - math.pi / 3) <= _FLAG_TOL
    return tr


def _cross(p, q, x):
    return (q[0] - p[0]) * (x[1] - p[1]) - (q[1] - p[1]) * (x[0] - p[0])


def _require_square_domain(params: ShapeParams):
    if params.alpha > math.pi / 2 or params.beta > math.pi / 2:
        raise FeetOffSegmentError(
            "inscribed square/rectangle needs alpha, beta <= 90 deg "
            "(feet would leave segment AB)")


def inscribed_square(params: ShapeParams) -> ScenarioTrace:
    """Inscribed square MNPQ on AB with side c*h/(c+h); O is its center.

    Valid for alpha, beta <= 90 deg; at equality a square vertex coincides
    with A or B, which is allowed.
    """
    _require_square_domain(params)
    c_pt = _apex(params.alpha, params.beta)
    h = c_pt[1]
    t = 1.0 / (1.0 + h)
    c_pt, m, n, p, q = _square_feet(params.alpha, params.beta, t)
    o = ((m[0] + p[0]) / 2, p[1] / 2)
    tr = ScenarioTrace(params, square_residual(params.alpha, params.beta))
    tr.points.update(A=(0.0, 0.0), B=(1.0, 0.0), C=c_pt, M=m, N=n, P=p, Q=q, O=o)
    side = t * h
    tr.audits["square sides equal"] = abs((n[0] - m[0]) - side)
    tr.audits["M on AB"] = abs(m[1])
    tr.audits["N on AB"] = abs(n[1])
    tr.audits["Q on CA"] = abs(_cross((0.0, 0.0), c_pt, q))
    tr.audits["P on CB"] = abs(_cross((1.0, 0.0), c_pt, p))
    tr.audits["diagonals share midpoint"] = math.sqrt(
        _d2(o, ((n[0] + q[0]) / 2, (n[1] + q[1]) / 2)))
    tr.angles["ACO"] = _angle_at(c_pt, (0.0, 0.0), o)
    tr.angles["BCO"] = _angle_at(c_pt, (1.0, 0.0), o)
    tr.flags = _base_flags(params)
    tr.flags["gamma-90"] = abs(params.gamma - math.pi / 2) <= _FLAG_TOL
    return tr


def inscribed_rectangle(params: ShapeParams, t: float = 0.5) -> ScenarioTrace:
    """Inscribed rectangle of height fraction t over the altitude from C."""
    _require_square_domain(params)
    c_pt, m, n, p, q = _square_feet(params.alpha, params.beta, t)
    o = ((m[0] + p[0]) / 2, p[1] / 2)
    tr = ScenarioTrace(params, rectangle_residual(params.alpha, params.beta, t))
    tr.points.update(A=(0.0, 0.0), B=(1.0, 0.0), C=c_pt, M=m, N=n, P=p, Q=q, O=o)
    tr.audits["width matches 1 - t"] = abs((n[0] - m[0]) - (1.0 - t))
    tr.audits["M on AB"] = abs(m[1])
    tr.audits["N on AB"] = abs(n[1])
    tr.audits["Q on CA"] = abs(_cross((0.0, 0.0), c_pt, q))
    tr.audits["P on CB"] = abs(_cross((1.0, 0.0), c_pt, p))
    tr.audits["diagonals share midpoint"] = math.sqrt(
        _d2(o, ((n[0] + q[0]) / 2, (n[1] + q[1]) / 2)))
    tr.flags = _base_flags(params)
    return tr


def bisector_30(params: ShapeParams) -> ScenarioTrace:
    """Angle at B1 between B and A1 against 30 degrees.

    Records A' (the mirror of A1 across line BB1) plus the angles the
    supplementary-or-congruent argument runs through.  The predicted values
    for AB1A1 and AA'A1 hold on the hypothesis locus (residual = 0).
    """
    a_pt, b_pt, c_pt, a, b, j, foot_a, foot_b = _incenter_parts(
        params.alpha, params.beta)
    tr = ScenarioTrace(params, bisector30_residual(params.alpha, params.beta))
    # reflect A1 over line B B1
    dx, dy = foot_b[0] - b_pt[0], foot_b[1] - b_pt[1]
    n2 = dx * dx + dy * dy
    vx, vy = foot_a[0] - b_pt[0], foot_a[1] - b_pt[1]
    k = 2.0 * (vx * dx + vy * dy) / n2
    a_mirror = (b_pt[0] + k * dx - vx, b_pt[1] + k * dy - vy)
    tr.points.update(A=a_pt, B=b_pt, C=c_pt, J=j, A1=foot_a, B1=foot_b,
                     A_prime=a_mirror)
    e = _line_meet(foot_a, foot_b, c_pt, j)
    if e is not None:
        tr.points["E"] = e
    c1 = _line_meet(c_pt, j, a_pt, b_pt)
    if c1 is not None:
        tr.points["C1"] = c1
    half_a, half_b, half_g = params.alpha / 2, params.beta / 2, params.gamma / 2
    tr.angles["BB1A1"] = _angle_at(foot_b, b_pt, foot_a)
    tr.angles["AB1A1"] = _angle_at(foot_b, a_pt, foot_a)
    tr.angles["AA'A1"] = _angle_at(a_mirror, a_pt, foot_a)
    tr.angles["AJB"] = _angle_at(j, a_pt, b_pt)
    tr.angles["AB1A1 predicted"] = 2 * math.pi / 3 + half_g - half_a
    tr.angles["AA'A1 predicted"] = math.pi / 2 + half_b
    tr.audits["A' mirrors A1"] = abs(_d2(foot_b, a_mirror) - _d2(foot_b, foot_a))
    tr.audits["A1 on BC"] = abs(_cross(b_pt, c_pt, foot_a))
    tr.audits["B1 on CA"] = abs(_cross(a_pt, c_pt, foot_b))
    gamma_60 = abs(params.gamma - math.pi / 3) <= _FLAG_TOL
    alpha_120 = abs(params.alpha - 2 * math.pi / 3) <= _FLAG_TOL
    if gamma_60:
        # angle AJB = 90 + gamma/2 = 120 deg here, and C, A1, J, B1 lie on
        # one circle
        tr.audits["CA1JB1 concyclic"] = abs(
            _concyclic_det(c_pt, foot_a, j, foot_b))
    if alpha_120:
        d_ba = _line_distance(b_pt, a_pt, foot_b)
        d_bc = _line_distance(b_pt, c_pt, foot_b)
        d_aa1 = _line_distance(a_pt, foot_a, foot_b)
        tr.audits["B1 equidistant from BA, BC"] = abs(d_ba - d_bc)
        tr.audits["B1 equidistant from BA, AA1"] = abs(d_ba - d_aa1)
    tr.flags = {"gamma-60": gamma_60, "alpha-120": alpha_120}
    return tr


def _line_distance(p, q, x):
    return abs(_cross(p, q, x)) / math.sqrt(_d2(p, q))


def _concyclic_det(p1, p2, p3, p4):
    rows = []
    for p in (p1, p2, p3):
        dx, dy = p[0] - p4[0], p[1] - p4[1]
        rows.append((dx, dy, dx * dx + dy * dy))
    (a1, b1, c1), (a2, b2, c2), (a3, b3, c3) = rows
    return (a1 * (b2 * c3 - b3 * c2) - b1 * (a2 * c3 - a3 * c2)
            + c1 * (a2 * b3 - a3 * b2))


def _line_meet(p1, p2, q1, q2):
    d1 = (p2[0] - p1[0], p2[1] - p1[1])
    d2 = (q2[0] - q1[0], q2[1] - q1[1])
    den = d1[0] * d2[1] - d1[1] * d2[0]
    if abs(den) < 1e-14:
        return None
    s = ((q1[0] - p1[0]) * d2[1] - (q1[1] - p1[1]) * d2[0]) / den
    return (p1[0] + s * d1[0], p1[1] + s * d1[1])


# -- registry and scanning ----------------------------------------------------

def _dist_isosceles(a, b, g):
    return abs(a - b)


def _dist_gamma(target):
    return lambda a, b, g: abs(g - target)


def _dist_alpha(target):
    return lambda a, b, g: abs(a - target)


@dataclass(frozen=True)
class Scenario:
    name: str
    residual: Callable[..., float]
    trace: Callable[..., ScenarioTrace]
    branches: Tuple[Tuple[str, Callable[[float, float, float], float]], ...]
    asserted: bool = True          # containment is an established conclusion
    domain: Optional[Callable[[float, float], bool]] = None


def _square_domain(alpha, beta):
    return alpha <= math.pi / 2 and beta <= math.pi / 2


SCENARIOS: Dict[str, Scenario] = {
    s.name: s for s in (
        Scenario("medial-circumcenter", medial_residual, medial_circumcenter,
                 (("isosceles", _dist_isosceles), ("gamma-60", _dist_gamma(math.pi / 3)))),
        Scenario("incenter-segments", incenter_residual, incenter_equal_segments,
                 (("isosceles", _dist_isosceles), ("gamma-60", _dist_gamma(math.pi / 3)))),
        Scenario("square-center", square_residual, inscribed_square,
                 (("isosceles", _dist_isosceles), ("gamma-90", _dist_gamma(math.pi / 2))),
                 domain=_square_domain),
        Scenario("rectangle-center", rectangle_residual, inscribed_rectangle,
                 (("isosceles", _dist_isosceles),),
                 asserted=False, domain=_square_domain),
        Scenario("bisector-30", bisector30_residual, bisector_30,
                 (("gamma-60", _dist_gamma(math.pi / 3)),
                  ("alpha-120", _dist_alpha(2 * math.pi / 3)))),
    )
}


def get_scenario(name: str) -> Scenario:
    try:
        return SCENARIOS[name]
    except KeyError:
        raise UnknownScenarioError(name, sorted(SCENARIOS)) from None


@dataclass(frozen=True)
class ScanRoot:
    alpha: float
    beta: float
    gamma: float
    residual: float
    branch: Optional[str]
    distance: float


@dataclass
class ScanReport:
    scenario: str
    grid_step: float
    refine_tol: float
    delta: float
    evaluations: int
    roots: List[ScanRoot]
    contained: bool
    violations: List[ScanRoot]
    asserted: bool


def level_set_scan(name: str, grid_step: float, refine_tol: float = 1e-12,
                   delta: float = 1e-6,
                   region: Optional[Callable[[float, float], bool]] = None,
                   **scenario_kwargs) -> ScanReport:
    """Grid-scan a scenario residual and bisect every sign change to a root.

    Every refined root is attributed to the nearest conclusion branch within
    ``delta`` (ties go to the isosceles branch first); roots matching no
    branch are reported as violations of containment.
    """
    sc = get_scenario(name)
    h = grid_step
    if h <= 0:
        raise ValueError("grid step must be positive")

    def f(a, b):
        return sc.residual(a, b, **scenario_kwargs)

    def valid(a, b):
        if not (a > 0 and b > 0 and math.pi - a - b >= _GAMMA_FLOOR):
            return False
        if sc.domain is not None and not sc.domain(a, b):
            return False
        return region is None or region(a, b)

    vals = {}
    evaluations = 0
    imax = int(math.pi / h) + 1
    for i in range(1, imax + 1):
        a = i * h
        for j in range(1, imax + 1):
            b = j * h
            if not valid(a, b):
                continue
            vals[(i, j)] = f(a, b)
            evaluations += 1
    if not vals:
        raise DegenerateInputError("scan region contains no valid grid nodes")

    raw_roots: List[Tuple[float, float, float]] = []
    seen = set()

    def note(a, b, r):
        key = (round(a, 12), round(b, 12))
        if key not in seen:
            seen.add(key)
            raw_roots.append((a, b, r))

    def bisect(p1, p2, f1, f2):
        # run past |f| <= tol until the bracket is tight, else a root at a
        # tangency/branch crossing is localized no better than sqrt(tol)
        nonlocal evaluations
        (ax, ay), (bx, by) = p1, p2
        span = math.hypot(bx - ax, by - ay)
        lo, hi, flo = 0.0, 1.0, f1
        best = None
        for _ in range(90):
            mid = (lo + hi) / 2
            m = (ax + (bx - ax) * mid, ay + (by - ay) * mid)
            fm = f(*m)
            evaluations += 1
            if best is None or abs(fm) < abs(best[2]):
                best = (m[0], m[1], fm)
            if (abs(fm) <= refine_tol and (hi - lo) * span <= 1e-10) \
                    or hi - lo < 1e-16:
                break
            if (flo < 0) == (fm < 0):
                lo, flo = mid, fm
            else:
                hi = mid
        return best

    for (i, j), f1 in sorted(vals.items()):
        if f1 == 0.0:
            note(i * h, j * h, 0.0)
            continue
        for nb in ((i + 1, j), (i, j + 1)):
            f2 = vals.get(nb)
            if f2 is None or f2 == 0.0:
                continue
            if (f1 < 0) != (f2 < 0):
                note(*bisect((i * h, j * h), (nb[0] * h, nb[1] * h), f1, f2))

    roots: List[ScanRoot] = []
    violations: List[ScanRoot] = []
    for a, b, r in sorted(raw_roots):
        g = math.pi - a - b
        branch, dist = None, math.inf
        for bname, bdist in sc.branches:
            d = bdist(a, b, g)
            if d <= delta:
                branch, dist = bname, d
                break
            if d < dist:
                dist = d
        root = ScanRoot(a, b, g, r, branch, dist)
        roots.append(root)
        if branch is None:
            violations.append(root)

    return ScanReport(name, h, refine_tol, delta, evaluations, roots,
                      not violations, violations, sc.asserted)
