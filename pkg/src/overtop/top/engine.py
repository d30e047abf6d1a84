"""Degree reduction of polynomials that share a root.

Two polynomials S, T of degrees n >= m that vanish at r with multiplicity at
least mu give, with delta = n - m,

    monic(S^(mu-1)) - monic((x^delta T)^(mu-1))

which still vanishes at r and has degree at most n - mu. ``^(k)`` denotes the
k-th derivative. Iterating this over a family collapses it to a polynomial of
solvable degree; proportional polynomials collapse to the zero polynomial.
"""
from fractions import Fraction
from itertools import combinations
from typing import Callable, List, NamedTuple, Optional, Sequence, Tuple, Union

import mpmath

from ..core.logging import logger
from ..core.numeric import (format_rational, is_exact, to_bigreal, working_precision,
                            format_bigreal, rationalize)
from ..core.poly import Polynomial, gcd
from ..errors import (AmbiguousRootError, DegreeMismatchError, DomainError, NoCommonRootError,
                      SelectionError)


LOP1 = "LOP1"
LOP2 = "LOP2"
TOP = "TOP"
DERIVATIVE = "derivative"

MAX_WIDTH = 6
RESIDUAL_SLACK = 6
BULLET = "•"


class OverlapSpec(NamedTuple):
    poly: Polynomial
    claimed_multiplicity: int = 1
    name: str = ""


class ReductionStep(NamedTuple):
    operands: Tuple[str, ...]
    op: str
    result: Polynomial
    result_degree: int
    name: str


def _coeff_text(c) -> str:
    if isinstance(c, Fraction):
        return format_rational(c)
    return format_bigreal(c, 30) if not is_exact(c) else str(c)


class ReductionTrace(NamedTuple):
    steps: List[ReductionStep]
    terminal: Polynomial
    terminal_name: str
    null_detected: bool
    levels: List[List[str]]

    def to_dict(self) -> dict:
        return {
            "steps": [{"operands": list(s.operands), "op": s.op, "name": s.name,
                       "degree": s.result_degree,
                       "coeffs": [_coeff_text(c) for c in s.result.coeffs]}
                      for s in self.steps],
            "terminal": {"name": self.terminal_name, "degree": self.terminal.degree,
                         "coeffs": [_coeff_text(c) for c in self.terminal.coeffs]},
            "null_detected": self.null_detected,
        }


def _as_spec(p: Union[OverlapSpec, Polynomial]) -> OverlapSpec:
    if isinstance(p, OverlapSpec):
        spec = p
    else:
        spec = OverlapSpec(p)
    if spec.poly.is_zero:
        raise DomainError("the zero polynomial carries no overlap information")
    if not 1 <= spec.claimed_multiplicity <= max(spec.poly.degree, 1):
        raise DomainError("claimed multiplicity {} exceeds degree {}".format(
            spec.claimed_multiplicity, spec.poly.degree))
    return spec


def monic_transform(f: Polynomial) -> Polynomial:
    return f.monic()


def lop1_delta(S: Polynomial, T: Polynomial) -> Polynomial:
    if S.is_zero or T.is_zero:
        raise DomainError("lop1_delta needs nonzero polynomials")
    if S.degree != T.degree or S.degree < 1:
        raise DegreeMismatchError("lop1_delta needs equal degrees >= 1, got {} and {}".format(
            S.degree, T.degree))
    return S.monic() - T.monic()


def top_operation(S: OverlapSpec, T: OverlapSpec) -> str:
    delta = S.poly.degree - T.poly.degree
    mu = min(S.claimed_multiplicity, T.claimed_multiplicity)
    if delta > 0:
        return TOP
    return LOP1 if mu == 1 else LOP2


def top_delta(S: Union[OverlapSpec, Polynomial], T: Union[OverlapSpec, Polynomial]) -> Polynomial:
    S, T = _as_spec(S), _as_spec(T)
    if S.poly.degree < T.poly.degree or T.poly.degree < 1:
        raise DegreeMismatchError("top_delta needs deg S >= deg T >= 1, got {} and {}".format(
            S.poly.degree, T.poly.degree))
    delta = S.poly.degree - T.poly.degree
    mu = min(S.claimed_multiplicity, T.claimed_multiplicity)
    left = S.poly.derivative(mu - 1)
    right = T.poly.mul_x(delta).derivative(mu - 1)
    return left.monic() - right.monic()


def _bullet_name(a: str, b: str) -> str:
    wrap = lambda s: "({})".format(s) if BULLET in s else s
    return wrap(a) + BULLET + wrap(b)


def _is_null(p: Polynomial, ref_scale, digits: int, slack: int) -> bool:
    if p.is_zero:
        return True
    if p.is_exact:
        return False
    with working_precision(digits):
        return p.scale() <= mpmath.mpf(10) ** (slack - digits) * max(ref_scale, 1)


def _check_common_root(level: Sequence[OverlapSpec]) -> None:
    polys = [s.poly for s in level]
    if not all(p.is_exact for p in polys):
        return
    g = polys[0]
    for p in polys[1:]:
        g = gcd(g, p)
        if g.degree == 0:
            break
    if g.degree < 1:
        raise NoCommonRootError("polynomials {} share no root (constant gcd)".format(
            ", ".join(s.name for s in level)))


def reduce_chain(polys: Sequence[Union[OverlapSpec, Polynomial]], max_width: int = MAX_WIDTH,
                 digits: int = 40, residual_slack: int = RESIDUAL_SLACK) -> ReductionTrace:
    if len(polys) < 2:
        raise DomainError("reduce_chain needs at least two polynomials")
    if max_width < 1:
        raise DomainError("max_width must be at least 1, got {}".format(max_width))
    level = []
    for i, p in enumerate(polys):
        spec = _as_spec(p)
        level.append(spec._replace(name=spec.name or "p{}".format(i + 1)))
    steps: List[ReductionStep] = []
    levels: List[List[str]] = []
    null_detected = False

    def apply(S: OverlapSpec, T: OverlapSpec) -> Optional[OverlapSpec]:
        nonlocal null_detected
        mu = min(S.claimed_multiplicity, T.claimed_multiplicity)
        if mu > 1:
            for spec in (S, T):
                d = spec.poly.derivative(mu - 1)
                steps.append(ReductionStep((spec.name,), DERIVATIVE, d, d.degree,
                                           "{}^({})".format(spec.name, mu - 1)))
        name = _bullet_name(S.name, T.name)
        result = top_delta(S, T)
        ref = max(S.poly.scale(), T.poly.scale()) if not result.is_exact else 1
        if _is_null(result, ref, digits, residual_slack):
            result = Polynomial()
        op = top_operation(S, T)
        steps.append(ReductionStep((S.name, T.name), op, result, result.degree, name))
        logger.debug("{} {} -> degree {}".format(op, name, result.degree))
        if result.is_zero:
            null_detected = True
            return None
        if result.degree == 0:
            raise NoCommonRootError("{} reduced to a nonzero constant".format(name))
        return OverlapSpec(result, 1, name)

    while True:
        level.sort(key=lambda s: (s.poly.degree, s.name))
        levels.append([s.name for s in level])
        _check_common_root(level)
        if len(level) == 1:
            break
        low = level[0].poly.degree
        if level[-1].poly.degree > low:
            keep = [s for s in level if s.poly.degree == low]
            reduced = []
            for prev, cur in zip(level, level[1:]):
                if cur.poly.degree > low:
                    out = apply(cur, prev)
                    if out is not None:
                        reduced.append(out)
            nxt = sorted(keep + reduced, key=lambda s: (s.poly.degree, s.name))[:max_width]
        else:
            results = [r for r in (apply(a, b) for a, b in combinations(level, 2)) if r is not None]
            if not results:
                logger.info("equivalence plateau at degree {} ({} polynomials)".format(
                    low, len(level)))
                break
            results.sort(key=lambda s: (s.poly.degree, s.name))
            lowest = results[0].poly.degree
            nxt = [r for r in results if r.poly.degree == lowest][:max_width]
        logger.info("chain level: degree {} -> {}".format(
            low, min(s.poly.degree for s in nxt)))
        level = nxt

    terminal = level[0]
    return ReductionTrace(steps, terminal.poly, terminal.name, null_detected, levels)


class CandidateResidual(NamedTuple):
    candidate: object
    exact: bool
    residuals: List[object]
    max_residual: object


class SharedRoot(NamedTuple):
    root: object
    exact: bool
    certificate: List[CandidateResidual]
    trace: ReductionTrace

    def describe(self, digits: int = 30) -> str:
        text = format_rational(self.root) if isinstance(self.root, Fraction) \
            else format_bigreal(self.root, digits)
        return "x = {}{}".format(text, " (exact)" if self.exact else "")


RootFilter = Union[Callable[[object], bool], Tuple[object, object], None]


def _accepts(select: RootFilter, x) -> bool:
    if select is None:
        return True
    if callable(select):
        return bool(select(x))
    if isinstance(x, mpmath.mpc):
        return False
    lo, hi = select
    return to_bigreal(lo) < to_bigreal(x) < to_bigreal(hi)


def _reconstruct(terminal: Polynomial, x, digits: int):
    """Exact rational root close to ``x`` if the terminal vanishes there exactly."""
    if isinstance(x, mpmath.mpc) or not terminal.is_exact:
        return None
    value = rationalize(x)
    for den in (10 ** 3, 10 ** 6, 10 ** (digits // 2)):
        q = value.limit_denominator(den)
        if terminal(q) == 0:
            return q
    return None


def shared_root(polys: Sequence[Union[OverlapSpec, Polynomial]], select: RootFilter = None,
                digits: int = 40, residual_slack: int = RESIDUAL_SLACK,
                max_width: int = MAX_WIDTH) -> SharedRoot:
    from ..solvers.closed_form import solve_polynomial

    specs = [_as_spec(p) for p in polys]
    if len(specs) == 1:
        only = specs[0]._replace(name=specs[0].name or "p1")
        trace = ReductionTrace([], only.poly, only.name, False, [[only.name]])
    else:
        trace = reduce_chain(specs, max_width=max_width, digits=digits,
                             residual_slack=residual_slack)
    terminal = trace.terminal
    if terminal.degree > 4:
        raise DomainError("terminal polynomial has degree {} > 4".format(terminal.degree))

    with working_precision(digits):
        tol = mpmath.mpf(10) ** (residual_slack - digits)
        candidates = []
        for x in solve_polynomial(terminal, digits):
            q = _reconstruct(terminal, x, digits)
            candidates.append(q if q is not None else x)

        certificate = []
        for x in candidates:
            exact = isinstance(x, Fraction)
            if exact and all(s.poly.is_exact for s in specs):
                residuals = [s.poly(x) for s in specs]
                worst = max(abs(r) for r in residuals)
            else:
                xb = to_bigreal(x)
                residuals = [abs(s.poly(xb)) / max(s.poly.scale(), 1) for s in specs]
                worst = max(residuals)
            certificate.append(CandidateResidual(x, exact, residuals, worst))

        admissible = [c for c in certificate if _accepts(select, c.candidate)]
        zero = [c for c in admissible if c.exact and c.max_residual == 0]
        if zero:
            hits = zero
        else:
            hits = [c for c in admissible if to_bigreal(c.max_residual) <= tol]
        unique = []
        for c in hits:
            if not any(abs(to_bigreal(c.candidate) - to_bigreal(u.candidate)) <= tol for u in unique):
                unique.append(c)
        if not unique:
            raise SelectionError("no candidate root annihilates every input polynomial")
        if len(unique) > 1:
            raise AmbiguousRootError("{} candidates annihilate every input; supply a filter".format(
                len(unique)), [c.candidate for c in unique])
        best = unique[0]
    logger.info("shared root {}".format(best.candidate))
    return SharedRoot(best.candidate, best.exact, certificate, trace)
