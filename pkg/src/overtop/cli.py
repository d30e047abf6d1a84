import argparse
import json
import logging
import sys
from fractions import Fraction
from typing import List, Optional

import mpmath
import tqdm

from .config.default import get_config
from .core import numeric
from .core.logging import logger
from .core.numeric import (format_bigreal, format_rational, parse_bigreal, parse_rational,
                           working_precision)
from .core.poly import Polynomial, parse_poly_file
from .errors import ComputationError, DomainError, ParseError
from .quintic.lab import (bring_jerrard_from_triangle, c12_demo, solvability_search,
                          solvable_quintic_roots)
from .sangaku.asymmetric import make_triangle, solve_asymmetric
from .sangaku.oracle import cross_check
from .sangaku.symmetric import solve_symmetric
from .solvers.closed_form import FERRARI, FORMULA_A, max_residual, solve_polynomial, sort_roots
from .top.engine import OverlapSpec, reduce_chain, shared_root
from .utils.visualization import render_figure

MIN_DIGITS = 12
BOTH = "both"


def _common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config-path", "-c", default=None, help="Path to config file")
    parser.add_argument("--json", action="store_true", help="Emit a single JSON object")
    parser.add_argument("extra_cfg", nargs=argparse.REMAINDER,
                        help="Extra config options as 'KEY value' pairs")


def _triangle_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--a", default=None, help="Hypotenuse length")
    parser.add_argument("--b", default=None, help="Leg AC")
    parser.add_argument("--c", default=None, help="Leg AB")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="overtop",
                                     description="Overlapped-polynomial reduction and the "
                                                 "ellipse-in-right-triangle tangency problem")
    parser.add_argument("--verbose", "-v", action="store_true", help="Debug logging")
    parser.add_argument("--quiet", "-q", action="store_true", help="Errors only")
    groups = parser.add_subparsers(dest="group", required=True)

    top = groups.add_parser("top", help="Degree reduction of polynomials sharing a root")
    top_cmds = top.add_subparsers(dest="command", required=True)
    reduce_p = top_cmds.add_parser("reduce", help="Print the reduction trace")
    reduce_p.add_argument("--in", dest="infile", required=True, help="Polynomial file")
    reduce_p.add_argument("--digits", type=int, default=None)
    _common(reduce_p)
    reduce_p.set_defaults(func=cmd_top_reduce)
    shared_p = top_cmds.add_parser("shared-root", help="Find the shared root")
    shared_p.add_argument("--in", dest="infile", required=True, help="Polynomial file")
    shared_p.add_argument("--lo", default=None, help="Lower end of the root filter")
    shared_p.add_argument("--hi", default=None, help="Upper end of the root filter")
    shared_p.add_argument("--digits", type=int, default=None)
    _common(shared_p)
    shared_p.set_defaults(func=cmd_top_shared_root)

    solve_p = groups.add_parser("solve", help="Closed-form roots of a polynomial of degree <= 4")
    solve_p.add_argument("--poly", required=True, help="Coefficients c0 c1 ... constant first")
    solve_p.add_argument("--digits", type=int, default=None)
    solve_p.add_argument("--method", choices=(FERRARI, FORMULA_A, BOTH), default=FERRARI)
    _common(solve_p)
    solve_p.set_defaults(func=cmd_solve)

    sym = groups.add_parser("sym", help="Right isosceles case")
    sym_cmds = sym.add_subparsers(dest="command", required=True)
    sym_solve = sym_cmds.add_parser("solve", help="Eccentricity and b/r in closed form")
    sym_solve.add_argument("--digits", type=int, default=None)
    _common(sym_solve)
    sym_solve.set_defaults(func=cmd_sym_solve)

    asym = groups.add_parser("asym", help="Scalene right triangle")
    asym_cmds = asym.add_subparsers(dest="command", required=True)
    asym_solve = asym_cmds.add_parser("solve", help="Fixed-point solve of the configuration")
    _triangle_args(asym_solve)
    asym_solve.add_argument("--tol", default=None)
    asym_solve.add_argument("--max-iter", type=int, default=None)
    asym_solve.add_argument("--digits", type=int, default=None)
    _common(asym_solve)
    asym_solve.set_defaults(func=cmd_asym_solve)

    oracle = groups.add_parser("oracle", help="Independent cross-check")
    oracle_cmds = oracle.add_subparsers(dest="command", required=True)
    check_p = oracle_cmds.add_parser("check", help="Solve, then cross-check the solution")
    _triangle_args(check_p)
    check_p.add_argument("--digits", type=int, default=None)
    _common(check_p)
    check_p.set_defaults(func=cmd_oracle_check)

    quintic = groups.add_parser("quintic", help="Solvability of the quintic factor")
    quintic_cmds = quintic.add_subparsers(dest="command", required=True)
    analyze_p = quintic_cmds.add_parser("analyze", help="Search a solvability witness")
    analyze_p.add_argument("--b", required=True)
    analyze_p.add_argument("--c", required=True)
    analyze_p.add_argument("--r", required=True)
    analyze_p.add_argument("--height", type=int, default=None)
    analyze_p.add_argument("--digits", type=int, default=None)
    _common(analyze_p)
    analyze_p.set_defaults(func=cmd_quintic_analyze)
    c12_p = quintic_cmds.add_parser("c12", help="Sextic with a rational resolvent root")
    c12_p.add_argument("--a2", default="1/2")
    _common(c12_p)
    c12_p.set_defaults(func=cmd_quintic_c12)

    render = groups.add_parser("render", help="SVG figure")
    render_cmds = render.add_subparsers(dest="command", required=True)
    figure_p = render_cmds.add_parser("figure", help="Draw a solved configuration")
    _triangle_args(figure_p)
    figure_p.add_argument("--out", required=True, help="Output SVG path")
    figure_p.add_argument("--size", type=int, default=None)
    figure_p.add_argument("--digits", type=int, default=None)
    _common(figure_p)
    figure_p.set_defaults(func=cmd_render_figure)
    return parser


def _digits(args, default: int) -> int:
    digits = args.digits if getattr(args, "digits", None) is not None else default
    if digits < MIN_DIGITS:
        raise DomainError("--digits must be at least {}".format(MIN_DIGITS))
    return digits


def _emit(args, payload: dict, lines: List[str]) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=False))
    else:
        print("\n".join(lines))


def _text(x, digits: int) -> str:
    if isinstance(x, Fraction):
        return format_rational(x)
    return format_bigreal(x, digits)


def _read_polys(path: str):
    with open(path) as f:
        return parse_poly_file(f.read())


def _scalar_arg(text: str):
    try:
        return parse_rational(text)
    except ParseError:
        return parse_bigreal(text)


def cmd_top_reduce(args, cfg) -> int:
    digits = _digits(args, cfg.NUMERIC.DIGITS)
    entries = _read_polys(args.infile)
    trace = reduce_chain([OverlapSpec(p, 1, name) for name, p in entries],
                         max_width=cfg.TOP.MAX_WIDTH, digits=digits,
                         residual_slack=cfg.TOP.RESIDUAL_SLACK)
    lines = ["{} {} -> degree {}: {}".format(s.op, s.name, s.result_degree, s.result)
             for s in trace.steps]
    lines.append("terminal {} (degree {}): {}".format(trace.terminal_name, trace.terminal.degree,
                                                      trace.terminal))
    if trace.null_detected:
        lines.append("null polynomial reached")
    _emit(args, trace.to_dict(), lines)
    return 0


def cmd_top_shared_root(args, cfg) -> int:
    digits = _digits(args, cfg.NUMERIC.DIGITS)
    entries = _read_polys(args.infile)
    select = None
    if args.lo is not None or args.hi is not None:
        with working_precision(digits):
            lo = _scalar_arg(args.lo) if args.lo is not None else -mpmath.inf
            hi = _scalar_arg(args.hi) if args.hi is not None else mpmath.inf
        select = (lo, hi)
    found = shared_root([OverlapSpec(p, 1, name) for name, p in entries], select=select,
                        digits=digits, residual_slack=cfg.TOP.RESIDUAL_SLACK,
                        max_width=cfg.TOP.MAX_WIDTH)
    cert = [{"candidate": _text(c.candidate, digits), "exact": c.exact,
             "max_residual": _text(c.max_residual, 5)} for c in found.certificate]
    payload = {"root": _text(found.root, digits), "exact": found.exact,
               "certificate": cert, "trace": found.trace.to_dict()}
    lines = [found.describe(digits)]
    lines += ["  candidate {} (max residual {})".format(c["candidate"], c["max_residual"])
              for c in cert]
    _emit(args, payload, lines)
    return 0


def cmd_solve(args, cfg) -> int:
    digits = _digits(args, cfg.NUMERIC.DIGITS)
    tokens = args.poly.replace(",", " ").split()
    if not tokens:
        raise ParseError("no coefficients given")
    f = Polynomial(parse_rational(t, 1, 1) for t in tokens)
    methods = (FERRARI, FORMULA_A) if args.method == BOTH else (args.method,)
    payload = {"degree": f.degree, "digits": digits, "methods": {}}
    lines = []
    for method in methods:
        roots = sort_roots(solve_polynomial(f, digits, method))
        res = max_residual(f, roots, digits)
        payload["methods"][method] = {"roots": [_text(z, digits) for z in roots],
                                      "max_residual": _text(res, 5)}
        lines.append("{}:".format(method))
        lines += ["  {}".format(_text(z, digits)) for z in roots]
        lines.append("  max residual {}".format(_text(res, 5)))
    _emit(args, payload, lines)
    return 0


def cmd_sym_solve(args, cfg) -> int:
    digits = _digits(args, cfg.SYMMETRIC.DIGITS)
    sol = solve_symmetric(digits)
    payload = sol.to_dict()
    lines = ["epsilon = {}".format(mpmath.nstr(sol.epsilon, digits)),
             "b/r = {}".format(mpmath.nstr(sol.b_over_r, digits))]
    for key, value in sol.radical_constants.items():
        lines.append("{} = {}".format(key, _text(value, digits)))
    _emit(args, payload, lines)
    return 0


def _solve_triangle(args, cfg, digits: int):
    tol = args.tol if getattr(args, "tol", None) is not None else cfg.ASYMMETRIC.TOL
    max_iter = args.max_iter if getattr(args, "max_iter", None) is not None \
        else cfg.ASYMMETRIC.MAX_ITER
    if max_iter < 1:
        raise DomainError("--max-iter must be at least 1")
    with working_precision(digits):
        sides = []
        for flag, key in ((args.a, "A"), (args.b, "B"), (args.c, "C")):
            value = flag if flag is not None else cfg.TRIANGLE[key]
            if not value:
                raise DomainError("side {} not given (flag or TRIANGLE.{})".format(key.lower(), key))
            sides.append(parse_bigreal(str(value)))
        t = make_triangle(*sides)
        tol = parse_bigreal(str(tol))
    if not tol > 0:
        raise DomainError("--tol must be positive")
    return solve_asymmetric(t, tol=tol, max_iter=max_iter, digits=digits,
                            acceleration=cfg.ASYMMETRIC.ACCELERATION,
                            damping=cfg.ASYMMETRIC.DAMPING,
                            samples=cfg.ASYMMETRIC.FOOT_SAMPLES)


def cmd_asym_solve(args, cfg) -> int:
    digits = _digits(args, cfg.ASYMMETRIC.DIGITS)
    report = _solve_triangle(args, cfg, digits)
    payload = report.to_dict()
    lines = ["{} = {}".format(k, v) for k, v in payload.items() if k != "residuals"]
    lines += ["residual {} = {}".format(k, v) for k, v in payload["residuals"].items()]
    _emit(args, payload, lines)
    return 0


def cmd_oracle_check(args, cfg) -> int:
    digits = _digits(args, cfg.ASYMMETRIC.DIGITS)
    report = _solve_triangle(args, cfg, digits)
    check = cross_check(report, digits=digits)
    payload = check.to_dict()
    lines = ["{} = {}".format(k, v) for k, v in payload["residuals"].items()]
    lines.append("passed" if check.passed else "FAILED")
    _emit(args, payload, lines)
    return 0 if check.passed else 1


def cmd_quintic_analyze(args, cfg) -> int:
    digits = _digits(args, cfg.NUMERIC.DIGITS)
    height = args.height if args.height is not None else cfg.QUINTIC.HEIGHT
    with working_precision(digits):
        bj = bring_jerrard_from_triangle(parse_bigreal(args.b), parse_bigreal(args.c),
                                         parse_bigreal(args.r))
        target = numeric.closest_rational(-bj.b_const, Fraction(str(cfg.QUINTIC.RATIONALIZE_TOL)))
    progress = None if args.quiet or args.json else \
        (lambda it: tqdm.tqdm(it, desc="solvability search", file=sys.stderr))
    witness = solvability_search(target, height, 1, progress)
    payload = {"constant": _text(-bj.b_const, digits), "target": format_rational(target),
               "height": height, "satisfied": witness.satisfied, "tried": witness.tried}
    lines = ["quintic z^5 + z - {}".format(_text(-bj.b_const, digits)),
             "rational target {}".format(format_rational(target))]
    if witness.satisfied:
        roots = solvable_quintic_roots(witness, digits)
        payload.update(epsilon=witness.epsilon_sign, p=format_rational(witness.p),
                       q=format_rational(witness.q), roots=[_text(z, digits) for z in roots])
        lines.append("solvable: eps = {} p = {} q = {}".format(
            witness.epsilon_sign, witness.p, witness.q))
        lines += ["  {}".format(_text(z, digits)) for z in roots]
    else:
        lines.append("no witness up to height {} ({} candidates)".format(height, witness.tried))
    _emit(args, payload, lines)
    return 0


def cmd_quintic_c12(args, cfg) -> int:
    rep = c12_demo(parse_rational(args.a2))
    payload = {"a2": format_rational(rep.a2), "a1": format_rational(rep.a1),
               "cleared": [int(c) for c in rep.cleared.coeffs],
               "resolvent_constant": format_rational(rep.resolvent_constant),
               "annihilating_a1": format_rational(rep.annihilating_a1),
               "real_roots": rep.real_roots,
               "rational_roots": [format_rational(x) for x in rep.rational_roots],
               "applicable_to_sextic": rep.applicable_to_sextic}
    lines = ["a1 = {}".format(format_rational(rep.a1)),
             "cleared: {}".format(rep.cleared),
             "resolvent constant term = {}".format(format_rational(rep.resolvent_constant)),
             "real roots: {}".format(rep.real_roots),
             "criterion applies to the tangency sextic: {}".format(rep.applicable_to_sextic)]
    _emit(args, payload, lines)
    return 0


def cmd_render_figure(args, cfg) -> int:
    digits = _digits(args, cfg.ASYMMETRIC.DIGITS)
    size = args.size if args.size is not None else cfg.RENDER.SIZE
    if size < 16:
        raise DomainError("--size too small")
    report = _solve_triangle(args, cfg, digits)
    render_figure(report, args.out, size=size, dpi=cfg.RENDER.DPI, salt=cfg.RENDER.HASH_SALT)
    _emit(args, {"out": args.out, "size": size}, ["wrote {}".format(args.out)])
    return 0


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logger.setLevel(logging.DEBUG if args.verbose else logging.ERROR if args.quiet
                    else logging.WARNING)
    guard = numeric.GUARD_DIGITS
    try:
        try:
            cfg = get_config(args.config_path, args.extra_cfg)
        except (KeyError, ValueError, AssertionError) as e:
            raise DomainError("bad configuration: {}".format(e))
        numeric.set_guard_digits(cfg.NUMERIC.GUARD_DIGITS)
        return args.func(args, cfg)
    except (DomainError, OSError) as e:
        print("error: {}".format(e), file=sys.stderr)
        return 2
    except ComputationError as e:
        print("error: {}".format(e), file=sys.stderr)
        return 1
    finally:
        numeric.set_guard_digits(guard)


if __name__ == "__main__":
    sys.exit(main())
