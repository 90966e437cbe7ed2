"""Command-line harness.

Four subcommands: ``ssa`` solves one two-sides-one-angle query and classifies
the solution pair, ``verify`` runs the seeded property suites, ``scenario``
scans one registered scenario and its forward-implication samples, ``logic``
checks the composition-calculus equivalences or a user-supplied pair.

Angles are degrees at this boundary and radians/cosines internally.  Reports
are deterministic for a fixed config (wall time aside); the PRNG is the
Mersenne Twister from the standard library, recorded in the config echo as
``mt19937``.

Exit codes: 0 all checks pass, 1 check failure, 2 usage or config error.
"""

from __future__ import annotations

import argparse
import math
import sys
import time
from fractions import Fraction
from typing import Dict, List, Optional

from .scalars import (DegenerateInputError, ExactValueError, EXACT,
                      FloatBackend)
from .kernel import Point
from .ssa import (SsaSpec, Supplementary, classify_pair, predict_case,
                  solve_ssa)
from .scenarios import UnknownScenarioError, get_scenario, level_set_scan
from .logic import (FormulaSyntaxError, equivalent, format_formula,
                    parse_formula, verify_scheme_equivalences)
from .suites import (IDENTITY, SSA_TRIPLE, CheckResult, run_scenario_suites,
                     run_verify_suites)
from . import report as rpt

RNG_ALGORITHM = "mt19937"


def _add_report_flags(parser: argparse.ArgumentParser):
    parser.add_argument("--report", metavar="PATH",
                        help="write the full report to this file")
    parser.add_argument("--format", choices=("json", "markdown"),
                        default="json", help="report format (default json)")


def _positive_float(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"{text!r} must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="planicheck",
        description="verification toolkit for the two-sides-one-angle "
                    "congruence dichotomy and its scenario family")
    sub = parser.add_subparsers(dest="command", required=True)

    p_ssa = sub.add_parser("ssa", help="solve one SSA query")
    p_ssa.add_argument("--a", type=_positive_float, required=True,
                       help="first side length")
    p_ssa.add_argument("--b", type=_positive_float, required=True,
                       help="second side length")
    angle_group = p_ssa.add_mutually_exclusive_group(required=True)
    angle_group.add_argument("--angle-deg", type=float,
                             help="given angle in degrees")
    angle_group.add_argument("--cos", metavar="VALUE",
                             help="cosine of the given angle, as a decimal or "
                                  "a fraction like 3/5 (how the exact backend "
                                  "takes rational angles)")
    group = p_ssa.add_mutually_exclusive_group()
    group.add_argument("--opposite", choices=("a", "b"), default="a",
                       help="side the angle is opposite to (default a)")
    group.add_argument("--included", action="store_true",
                       help="the angle is included between the two sides")
    p_ssa.add_argument("--backend", choices=("float", "exact"),
                       default="float")
    p_ssa.add_argument("--eps", type=_positive_float, default=1e-9)
    _add_report_flags(p_ssa)

    p_verify = sub.add_parser("verify", help="run the seeded property suites")
    p_verify.add_argument("--samples", type=int, default=100000)
    p_verify.add_argument("--seed", type=int, default=42)
    p_verify.add_argument("--backend", choices=("float", "exact"),
                          default="float")
    p_verify.add_argument("--eps", type=_positive_float, default=1e-9)
    _add_report_flags(p_verify)

    p_scen = sub.add_parser("scenario", help="scan one registered scenario")
    p_scen.add_argument("name", help="scenario name")
    p_scen.add_argument("--grid-step-deg", type=_positive_float, default=0.25)
    p_scen.add_argument("--refine-tol", type=_positive_float, default=1e-12)
    p_scen.add_argument("--delta", type=_positive_float, default=1e-6)
    p_scen.add_argument("--samples", type=int, default=1000,
                        help="forward-implication samples")
    p_scen.add_argument("--seed", type=int, default=42)
    p_scen.add_argument("--rect-t", type=float, default=None,
                        help="rectangle height fraction (rectangle-center only)")
    _add_report_flags(p_scen)

    p_logic = sub.add_parser("logic", help="check propositional equivalences")
    p_logic.add_argument("--formula", help="left formula text")
    p_logic.add_argument("--equiv", help="right formula text")
    p_logic.add_argument("--constraint",
                         help="restrict assignments to those satisfying this")
    _add_report_flags(p_logic)

    return parser


def _emit(args, body: Dict, wall_time_s: float):
    if args.report:
        renderer = (rpt.render_json if args.format == "json"
                    else rpt.render_markdown)
        with open(args.report, "w") as handle:
            handle.write(renderer(body, wall_time_s))


def _clamped_acos_deg(c: float) -> float:
    return math.degrees(math.acos(max(-1.0, min(1.0, c))))


def cmd_ssa(args) -> int:
    if args.cos is not None:
        try:
            cos_fraction = Fraction(args.cos)
        except (ValueError, ZeroDivisionError):
            print(f"error: --cos {args.cos!r} is not a number", file=sys.stderr)
            return 2
    else:
        cos_fraction = None
    if args.backend == "exact":
        # decimal side inputs become exact rationals; a degree angle turns
        # into the exact dyadic value of its computed double cosine, so the
        # query is deterministic either way
        backend = EXACT
        spec_sides = [backend.scalar(Fraction(str(args.a))),
                      backend.scalar(Fraction(str(args.b)))]
        if cos_fraction is None:
            cos_fraction = Fraction(math.cos(math.radians(args.angle_deg)))
        cos_scalar = backend.scalar(cos_fraction)
    else:
        backend = FloatBackend(args.eps)
        spec_sides = [backend.scalar(args.a), backend.scalar(args.b)]
        cos_value = (float(cos_fraction) if cos_fraction is not None
                     else math.cos(math.radians(args.angle_deg)))
        cos_scalar = backend.scalar(cos_value)

    opposite, adjacent = spec_sides
    if args.opposite == "b" and not args.included:
        opposite, adjacent = adjacent, opposite

    case = predict_case(opposite, adjacent, included=args.included)
    print(f"predicted case: {case.value}")

    solutions: List[Dict] = []
    verdict_info: Optional[Dict] = None
    started = time.perf_counter()
    if args.included:
        # unique triangle by the included-angle criterion; place the first
        # side along the x axis
        a_val, b_val = spec_sides
        apex = Point(a_val * cos_scalar,
                     a_val * (backend.scalar(1) - cos_scalar * cos_scalar).sqrt())
        third_sq = (a_val * a_val + b_val * b_val
                    - backend.scalar(2) * a_val * b_val * cos_scalar)
        print("1 solution (included angle):")
        third = third_sq.sqrt().as_float()
        print(f"  solution 1: third side {rpt.round12(third)}, "
              f"apex at ({rpt.round12(apex.x.as_float())}, "
              f"{rpt.round12(apex.y.as_float())})")
        solutions.append({"third_side": third})
    else:
        try:
            spec = SsaSpec(opposite, adjacent, cos_scalar)
            sols = solve_ssa(spec)
        except (DegenerateInputError, ExactValueError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        print(f"{sols.count} solution{'s' if sols.count != 1 else ''}")
        for i in range(sols.count):
            third = sols.third_sides[i].as_float()
            apex_deg = _clamped_acos_deg(sols.apex_cosines[i].as_float())
            base_deg = _clamped_acos_deg(sols.base_cosines[i].as_float())
            bx = sols.triangles[i].B.x.as_float()
            by = sols.triangles[i].B.y.as_float()
            print(f"  solution {i + 1}: third side {rpt.round12(third)}, "
                  f"apex angle {rpt.round12(apex_deg)} deg, "
                  f"base angle {rpt.round12(base_deg)} deg, "
                  f"apex ({rpt.round12(bx)}, {rpt.round12(by)})")
            solutions.append({"third_side": third, "apex_angle_deg": apex_deg,
                              "base_angle_deg": base_deg})
        if sols.count == 2:
            verdict = classify_pair(sols.triangles[0], sols.triangles[1],
                                    IDENTITY, SSA_TRIPLE)
            if isinstance(verdict, Supplementary):
                d1 = _clamped_acos_deg(verdict.cos1.as_float())
                d2 = _clamped_acos_deg(verdict.cos2.as_float())
                print(f"verdict: Supplementary({rpt.round12(d1)} deg, "
                      f"{rpt.round12(d2)} deg)")
                verdict_info = {"kind": "Supplementary",
                                "angles_deg": [d1, d2]}
            else:
                print(f"verdict: {type(verdict).__name__}")
                verdict_info = {"kind": type(verdict).__name__}

    config = {"command": "ssa", "a": args.a, "b": args.b,
              **({"cos": str(cos_fraction)} if args.cos is not None
                 else {"angle_deg": args.angle_deg}),
              "designation": "included" if args.included else
              f"opposite-{args.opposite}",
              "backend": args.backend, "eps": args.eps,
              "rng_algorithm": RNG_ALGORITHM}
    body = rpt.build_report(config, [], extra={
        "predicted_case": case.value, "solutions": solutions,
        **({"verdict": verdict_info} if verdict_info else {})})
    _emit(args, body, time.perf_counter() - started)
    return 0


def cmd_verify(args) -> int:
    if args.samples < 1:
        print("error: --samples must be at least 1", file=sys.stderr)
        return 2
    if args.backend == "exact" and args.eps != 1e-9:
        print("warning: exact backend ignores --eps", file=sys.stderr)
    started = time.perf_counter()
    checks = run_verify_suites(args.samples, args.seed,
                               backend=args.backend, eps=args.eps)
    wall = time.perf_counter() - started
    for c in checks:
        status = "pass" if c.passed else "FAIL"
        print(f"{status}  {c.name}  samples={c.samples}  "
              f"worst_residual={rpt.round12(c.worst_residual)}")
        for w in c.witnesses:
            print(f"      witness: {w}")
    config = {"command": "verify", "samples": args.samples,
              "seed": args.seed, "backend": args.backend, "eps": args.eps,
              "rng_algorithm": RNG_ALGORITHM}
    _emit(args, rpt.build_report(config, checks), wall)
    return 0 if all(c.passed for c in checks) else 1


def cmd_scenario(args) -> int:
    try:
        scenario = get_scenario(args.name)
    except UnknownScenarioError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.samples < 1:
        print("error: --samples must be at least 1", file=sys.stderr)
        return 2
    kwargs = {}
    rect_t = None
    if args.name == "rectangle-center":
        rect_t = 0.5 if args.rect_t is None else args.rect_t
        if not 0.0 < rect_t < 1.0:
            print("error: --rect-t must lie strictly between 0 and 1",
                  file=sys.stderr)
            return 2
        kwargs["t"] = rect_t
    elif args.rect_t is not None:
        print("error: --rect-t only applies to rectangle-center",
              file=sys.stderr)
        return 2
    started = time.perf_counter()
    scan = level_set_scan(args.name, math.radians(args.grid_step_deg),
                          refine_tol=args.refine_tol, delta=args.delta,
                          **kwargs)
    checks = run_scenario_suites(args.name, args.samples, args.seed)
    wall = time.perf_counter() - started
    print(f"scenario {args.name}: {len(scan.roots)} roots, "
          f"containment={'true' if scan.contained else 'false'}"
          f"{'' if scan.asserted else ' (exploratory, not asserted)'}")
    for v in scan.violations[:5]:
        print(f"  off-branch root: alpha={rpt.round12(math.degrees(v.alpha))} "
              f"beta={rpt.round12(math.degrees(v.beta))} deg")
    for c in checks:
        status = "pass" if c.passed else "FAIL"
        print(f"{status}  {c.name}  samples={c.samples}  "
              f"worst_residual={rpt.round12(c.worst_residual)}")
    config = {"command": "scenario", "scenario": args.name,
              "grid_step_deg": args.grid_step_deg,
              "refine_tol": args.refine_tol, "delta": args.delta,
              "samples": args.samples, "seed": args.seed,
              "rng_algorithm": RNG_ALGORITHM,
              **({"rect_t": rect_t} if rect_t is not None else {})}
    _emit(args, rpt.build_report(config, checks, scan=scan), wall)
    ok = all(c.passed for c in checks) and (scan.contained or not scan.asserted)
    return 0 if ok else 1


def cmd_logic(args) -> int:
    started = time.perf_counter()
    if (args.formula is None) != (args.equiv is None):
        print("error: --formula and --equiv must be given together",
              file=sys.stderr)
        return 2
    if args.formula is not None:
        try:
            f1 = parse_formula(args.formula)
            f2 = parse_formula(args.equiv)
            constraint = (parse_formula(args.constraint)
                          if args.constraint else None)
        except FormulaSyntaxError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        result = equivalent(f1, f2, constraint)
        if result.equivalent:
            print(f"equivalent: {format_formula(f1)}  <=>  "
                  f"{format_formula(f2)}"
                  + (f"  under {format_formula(constraint)}"
                     if constraint else ""))
        else:
            print(f"not equivalent; witness: {result.witness}")
        check = CheckResult("formula-equivalence", result.equivalent, 1,
                            0.0, [] if result.equivalent
                            else [dict(result.witness)])
        checks = [check]
        extra = {"rows": result.rows,
                 "constrained_rows": result.constrained_rows}
    else:
        logic_checks = verify_scheme_equivalences()
        checks = []
        extra = {}
        for lc in logic_checks:
            status = "pass" if lc.passed else "FAIL"
            scope = (f"{lc.result.constrained_rows}/{lc.result.rows} rows"
                     if lc.constrained else f"{lc.result.rows} rows")
            print(f"{status}  {lc.name}  ({scope})")
            checks.append(CheckResult(
                lc.name, lc.passed, lc.result.rows, 0.0,
                [] if lc.passed else [dict(lc.result.witness)]))
        print(f"{sum(c.passed for c in checks)}/{len(checks)} checks pass")
    config = {"command": "logic",
              **({"formula": args.formula, "equiv": args.equiv,
                  "constraint": args.constraint}
                 if args.formula is not None else {}),
              "rng_algorithm": RNG_ALGORITHM}
    _emit(args, rpt.build_report(config, checks, extra=extra),
          time.perf_counter() - started)
    return 0 if all(c.passed for c in checks) else 1


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {"ssa": cmd_ssa, "verify": cmd_verify,
                "scenario": cmd_scenario, "logic": cmd_logic}
    try:
        return handlers[args.command](args)
    except (DegenerateInputError, ExactValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
