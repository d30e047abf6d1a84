"""Scalene right triangle ABC (right angle at A, hypotenuse a).

Frame: A at the origin, the legs on y = m x and y = -x / m with m = b / c, and
BC on the line y = h. The ellipse touches all three sides, the circle C1 of
radius r sits on the bisector of A touching both legs, and C1 touches the
ellipse from below. For a given r the eccentricity eps is a root of a sextic;
the true r is the fixed point of rho(r), the distance from C1 to the point T
whose abscissa the tangency quartics u, v, w share.
"""
from typing import Dict, List, NamedTuple, Optional, Tuple

import mpmath
import numpy as np

from ..core.logging import logger
from ..core.numeric import to_bigreal, closest_rational, working_precision
from ..core.poly import Polynomial, isolate_roots, refine_root, sturm_count, root_bound
from ..errors import (ComputationError, ConvergenceError, DomainError, InfeasibleError,
                      NoSignChangeError, SelectionError, SingularParametrizationError)
from ..solvers.closed_form import quartic_closed_form_A, solve_polynomial, sort_roots

RIGHT_ANGLE_TOL = 1e-6
FOOT_SAMPLES = 256
WEGSTEIN = "wegstein"
DAMPED = "damped"
MAX_BACKTRACK = 30
WEGSTEIN_CLAMP = (-5, 0.95)
SYMMETRIC_B_OVER_R = "6.398850490831396410649515728727887767447220406156540335459277124069"


class TriangleConfig(NamedTuple):
    a: mpmath.mpf
    b: mpmath.mpf
    c: mpmath.mpf

    @classmethod
    def from_legs(cls, b, c) -> "TriangleConfig":
        b, c = to_bigreal(b), to_bigreal(c)
        return make_triangle(mpmath.sqrt(b ** 2 + c ** 2), b, c)


def make_triangle(a, b, c, rel_tol: float = RIGHT_ANGLE_TOL) -> TriangleConfig:
    a, b, c = to_bigreal(a), to_bigreal(b), to_bigreal(c)
    if not (a > 0 and b > 0 and c > 0):
        raise DomainError("side lengths must be positive")
    if abs(a ** 2 - b ** 2 - c ** 2) > rel_tol * a ** 2:
        raise DomainError("a^2 = b^2 + c^2 fails: not a right angle at A")
    exact = mpmath.sqrt(b ** 2 + c ** 2)
    if a != exact:
        logger.info("hypotenuse {} adjusted to sqrt(b^2 + c^2) = {}".format(
            mpmath.nstr(a, 12), mpmath.nstr(exact, 12)))
    return TriangleConfig(exact, b, c)


class DerivedConstants(NamedTuple):
    h: mpmath.mpf
    k: mpmath.mpf
    m: mpmath.mpf
    x1: mpmath.mpf
    y1: mpmath.mpf
    r: mpmath.mpf


class EllipseState(NamedTuple):
    alpha: mpmath.mpf
    beta: mpmath.mpf
    eps: mpmath.mpf
    x0: mpmath.mpf
    y0: mpmath.mpf


class SolveReport(NamedTuple):
    triangle: TriangleConfig
    eps: mpmath.mpf
    r: mpmath.mpf
    ellipse: EllipseState
    x1: mpmath.mpf
    y1: mpmath.mpf
    xT: mpmath.mpf
    yT: mpmath.mpf
    iterations: int
    residuals: Dict[str, mpmath.mpf]
    trace: List[mpmath.mpf]

    @property
    def b_over_r(self):
        return self.triangle.b / self.r

    def to_dict(self, digits: int = 15) -> dict:
        s = lambda x: mpmath.nstr(x, digits)
        keys = ("sextic", "ellipse", "circle", "distance", "slope")
        return {
            "a": s(self.triangle.a), "b": s(self.triangle.b), "c": s(self.triangle.c),
            "epsilon": s(self.eps), "r": s(self.r),
            "alpha": s(self.ellipse.alpha), "beta": s(self.ellipse.beta),
            "x0": s(self.ellipse.x0), "y0": s(self.ellipse.y0),
            "x1": s(self.x1), "y1": s(self.y1), "xT": s(self.xT), "yT": s(self.yT),
            "iterations": self.iterations,
            "residuals": {key: mpmath.nstr(self.residuals[key], 5) for key in keys},
        }


def derived_constants(t: TriangleConfig, r) -> DerivedConstants:
    r = to_bigreal(r)
    if r <= 0:
        raise DomainError("radius must be positive")
    a, b, c = t
    h = b * c / a
    k = (c ** 2 - b ** 2) / (2 * a)
    if not h > 0 or abs(h ** 2 + k ** 2 - a ** 2 / 4) > 10 * RIGHT_ANGLE_TOL * a ** 2:
        raise DomainError("degenerate triangle")
    return DerivedConstants(h, k, b / c, (c - b) * r / a, (c + b) * r / a, r)


def ellipse_center(consts: DerivedConstants, eps, r) -> EllipseState:
    eps, r = to_bigreal(eps), to_bigreal(r)
    if not 1 / mpmath.sqrt(2) < eps < 1:
        raise DomainError("eccentricity {} outside (1/sqrt2, 1)".format(mpmath.nstr(eps, 10)))
    if consts.h * eps <= r:
        raise SingularParametrizationError("h*eps <= r: centre parametrization is singular")
    x0 = consts.k * (1 - r / (consts.h * eps - r))
    y0 = consts.h - r / eps
    return EllipseState(r / (eps * mpmath.sqrt(1 - eps ** 2)), r / eps, eps, x0, y0)


def hyperbola_residual(consts: DerivedConstants, ellipse: EllipseState):
    """y0 (1 - x0 / k) - beta; the centre lies on this hyperbola whenever k != 0."""
    if consts.k == 0:
        return ellipse.x0
    return ellipse.y0 * (1 - ellipse.x0 / consts.k) - ellipse.beta


def sextic_compact(t: TriangleConfig, r) -> Polynomial:
    r = to_bigreal(r)
    a, b, c = t
    bc = b * c
    return Polynomial([(2 * r ** 2 / bc) ** 2, 0, -(2 * a * r / bc) ** 2,
                       4 * r * (a ** 2 - 2 * r ** 2) / (a * bc),
                       4 * r ** 2 * ((a / bc) ** 2 + 1 / a ** 2) - 1,
                       -4 * a * r / bc, 1])


def sextic_coeffs(t: TriangleConfig, r) -> Polynomial:
    """Sextic in eps whose admissible root is the eccentricity for radius r."""
    r = to_bigreal(r)
    Q = r / t.a
    R = r * t.a / (t.b * t.c)
    sextic = Polynomial([4 * Q ** 2 * R ** 2, 0, -4 * R ** 2, 4 * R * (1 - 2 * Q ** 2),
                         4 * (Q ** 2 + R ** 2) - 1, -4 * R, 1])
    compact = sextic_compact(t, r)
    tol = mpmath.mpf(10) ** (10 - mpmath.mp.dps)
    if any(abs(to_bigreal(p) - to_bigreal(q)) > tol for p, q in zip(sextic.coeffs, compact.coeffs)):
        raise ComputationError("sextic forms disagree")
    return sextic


def elimination_sides(t: TriangleConfig, r, eps) -> Tuple[mpmath.mpf, mpmath.mpf]:
    """Both sides of alpha^2 + beta^2 = x0^2 + y0^2 before clearing denominators."""
    consts = derived_constants(t, r)
    r, eps = consts.r, to_bigreal(eps)
    h, k = consts.h, consts.k
    lhs = r ** 2 / (eps ** 2 * (1 - eps ** 2)) + (r / eps) ** 2
    rhs = k ** 2 * (1 - r / (h * eps - r)) ** 2 + (h - r / eps) ** 2
    return lhs, rhs


class QuarticInR(NamedTuple):
    poly: Polynomial
    roots: List
    admissible: mpmath.mpf
    constants: Dict[str, object]


def quartic_in_r_poly(t: TriangleConfig, eps) -> Polynomial:
    eps = to_bigreal(eps)
    a, b, c = t
    h = b * c / a
    return Polynomial([-(b * c / 2) ** 2 * eps ** 4 * (1 - eps ** 2),
                       a * b * c * eps ** 3 * (1 - eps ** 2),
                       ((a ** 2 + h ** 2) * eps ** 2 - a ** 2) * eps ** 2,
                       -2 * h * eps ** 3, 1])


def quartic_in_r_constants(t: TriangleConfig, eps) -> Dict[str, mpmath.mpf]:
    """Radical-free formula constants A, B, E - D and the numerator of F for the quartic in r."""
    eps = to_bigreal(eps)
    a, b, c = t
    h = b * c / a
    g = (a ** 2 + h ** 2) * eps ** 2 - a ** 2
    bc2 = (b * c) ** 2
    e2 = eps ** 2
    A = (2 * g ** 3 + 9 * bc2 * (1 - e2) * (3 * (a ** 2 - a ** 2 * e2 - h ** 2 * e2 ** 2)
                                           + 2 * (1 + e2) * g)) * eps ** 6
    B = (g ** 2 - 3 * bc2 * (1 - e2) * (1 - 2 * e2)) * eps ** 4
    E_minus_D = h ** 2 * eps ** 6 - 2 * g * e2 / 3
    F_num = 2 * (h ** 3 * eps ** 6 - h * g * e2 - a * b * c * (1 - e2)) * eps ** 3
    return {"A": A, "B": B, "E_minus_D": E_minus_D, "F_num": F_num}


def quartic_in_r(t: TriangleConfig, eps, digits: int = 40) -> QuarticInR:
    with working_precision(digits):
        eps = to_bigreal(eps)
        if not 1 / mpmath.sqrt(2) < eps < 1:
            raise DomainError("eccentricity {} outside (1/sqrt2, 1)".format(mpmath.nstr(eps, 10)))
        poly = quartic_in_r_poly(t, eps)
        cs = poly.coeffs
        sol = quartic_closed_form_A(cs[3], cs[2], cs[1], cs[0], digits)
        roots = sort_roots(sol.roots)
        h = t.b * t.c / t.a
        band = [z for z in roots if not isinstance(z, mpmath.mpc) and 0 < z < h * eps / 2]
        if not band:
            raise InfeasibleError("no admissible radius for eccentricity {}".format(
                mpmath.nstr(eps, 10)))

        def sextic_residual(r):
            s = sextic_coeffs(t, r)
            return abs(s(eps)) / s.scale()

        best = min(band, key=sextic_residual)
        return QuarticInR(poly, roots, best, sol.constants)


def _lin(c0, c1) -> Polynomial:
    return Polynomial([c0, c1])


def build_quartic_u(consts: DerivedConstants, ellipse: EllipseState, r) -> Polynomial:
    """Lower semi-ellipse meets upper semicircle, both radicals squared away."""
    r = to_bigreal(r)
    dx0 = _lin(-ellipse.x0, 1)
    dx1 = _lin(-consts.x1, 1)
    P = ellipse.y0 - consts.y1
    G = Polynomial([ellipse.beta ** 2]) - dx0 ** 2 * (ellipse.beta ** 2 / ellipse.alpha ** 2)
    H = Polynomial([r ** 2]) - dx1 ** 2
    S = G - H + P ** 2
    return S * S - G * (4 * P ** 2)


def build_quartic_v(consts: DerivedConstants, ellipse: EllipseState, r) -> Polynomial:
    """Equal slopes of ellipse and circle with alpha eliminated through eps."""
    r = to_bigreal(r)
    e2 = ellipse.eps ** 2
    dx0 = _lin(ellipse.x0, -1)
    dx1 = _lin(-consts.x1, 1)
    inner = dx1 ** 2 * e2 + Polynomial([r ** 2 * (1 - e2)])
    return dx0 ** 2 * inner * (e2 * (1 - e2)) - dx1 ** 2 * r ** 2


def build_quartic_w(consts: DerivedConstants, ellipse: EllipseState, r) -> Polynomial:
    """Implicit slope identity on the upper circle branch, squared once."""
    r = to_bigreal(r)
    dx0 = _lin(-ellipse.x0, 1)
    dx1 = _lin(-consts.x1, 1)
    P = ellipse.y0 - consts.y1
    H = Polynomial([r ** 2]) - dx1 ** 2
    L = dx0 * (1 - ellipse.eps ** 2) - dx1
    return H * L * L - dx1 ** 2 * P ** 2


def _normalized(f: Polynomial, x):
    return abs(f(x)) / f.scale()


def tangent_abscissa_via_top(u: Polynomial, v: Polynomial, w: Polynomial,
                             band: Optional[Tuple] = None, digits: int = 40,
                             residual_slack: int = 6):
    """Abscissa shared by u (twice), v and w, from the quadratic left after two reductions."""
    with working_precision(digits):
        du = u.derivative()
        dvw = v.monic() - w.monic()
        if dvw.is_zero or dvw.degree < 1 or du.degree < 1:
            raise SelectionError("v and w reduce to nothing")
        q = du.monic() - dvw.monic()
        ref = max(du.monic().scale(), dvw.monic().scale())
        if q.is_zero or q.scale() <= mpmath.mpf(10) ** (residual_slack - digits) * ref:
            raise SelectionError("reduction reached the zero polynomial")
        if q.degree < 1:
            raise SelectionError("reduction reached a nonzero constant")
        roots = [z for z in solve_polynomial(q, digits) if not isinstance(z, mpmath.mpc)]
        if band is not None:
            lo, hi = to_bigreal(band[0]), to_bigreal(band[1])
            roots = [z for z in roots if lo <= z <= hi]
        if not roots:
            raise SelectionError("both roots of the reduced quadratic are inadmissible")
        return min(roots, key=lambda z: max(_normalized(f, z) for f in (u, v, w)))


def tangent_abscissa(consts: DerivedConstants, ellipse: EllipseState, r, digits: int = 40):
    r = to_bigreal(r)
    u = build_quartic_u(consts, ellipse, r)
    v = build_quartic_v(consts, ellipse, r)
    w = build_quartic_w(consts, ellipse, r)
    band = (consts.x1 - r, consts.x1 + r)
    try:
        return tangent_abscissa_via_top(u, v, w, band, digits)
    except SelectionError as e:
        logger.warning("{}; refining v directly".format(e))
    with working_precision(digits):
        candidates = []
        for lo, hi in isolate_roots(v, band[0], band[1]).intervals:
            try:
                candidates.append(refine_root(v, (lo, hi), digits))
            except NoSignChangeError:
                continue
        if not candidates:
            raise SelectionError("no tangency abscissa in [x1 - r, x1 + r]")
        return min(candidates, key=lambda z: max(_normalized(f, z) for f in (u, v, w)))


def ordinate_from_circle(x_T, consts: DerivedConstants, r):
    x_T, r = to_bigreal(x_T), to_bigreal(r)
    d2 = r ** 2 - (x_T - consts.x1) ** 2
    if d2 < 0:
        if -d2 > mpmath.mpf(10) ** (8 - mpmath.mp.dps) * r ** 2:
            raise DomainError("abscissa {} outside the circle".format(mpmath.nstr(x_T, 10)))
        d2 = mpmath.mpf(0)
    return consts.y1 + mpmath.sqrt(d2)


def ordinate_from_ellipse(x_T, ellipse: EllipseState):
    x_T = to_bigreal(x_T)
    d = 1 - (x_T - ellipse.x0) ** 2 / ellipse.alpha ** 2
    return ellipse.y0 - ellipse.beta * mpmath.sqrt(max(d, 0))


def nearest_point_on_ellipse(ellipse: EllipseState, point, samples: int = FOOT_SAMPLES):
    """Foot of the normal from ``point`` to the ellipse; returns (theta, x, y)."""
    px, py = to_bigreal(point[0]), to_bigreal(point[1])
    x0, y0, al, be = ellipse.x0, ellipse.y0, ellipse.alpha, ellipse.beta
    grid = np.linspace(0, 2 * np.pi, samples, endpoint=False)
    d2 = (float(x0) + float(al) * np.cos(grid) - float(px)) ** 2 \
        + (float(y0) + float(be) * np.sin(grid) - float(py)) ** 2
    j = int(np.argmin(d2))
    step = 2 * mpmath.pi / samples

    def f(th):
        s, c = mpmath.sin(th), mpmath.cos(th)
        return (be ** 2 - al ** 2) * s * c - al * (x0 - px) * s + be * (y0 - py) * c

    center = mpmath.mpf(float(grid[j]))
    lo, hi = center - step, center + step
    if mpmath.sign(f(lo)) != mpmath.sign(f(hi)):
        theta = mpmath.findroot(f, (lo, hi), solver="anderson")
    else:
        theta = mpmath.findroot(f, center, solver="secant")
    return theta, x0 + al * mpmath.cos(theta), y0 + be * mpmath.sin(theta)


def admissible_eps(t: TriangleConfig, r, digits: int = 40) -> List[mpmath.mpf]:
    """Roots of the sextic in (max(1/sqrt2, 2r/h), 1)."""
    consts = derived_constants(t, r)
    sextic = sextic_coeffs(t, consts.r)
    lo = max(1 / mpmath.sqrt(2), 2 * consts.r / consts.h)
    if lo >= 1:
        raise InfeasibleError("radius {} leaves no eccentricity band".format(
            mpmath.nstr(consts.r, 10)))
    tol = mpmath.mpf(10) ** (-(digits + 10))
    exact = Polynomial(closest_rational(c, tol) for c in sextic.coeffs)
    lo_q = closest_rational(lo, tol)
    found = []
    for a, b in isolate_roots(exact, lo_q, 1).intervals:
        try:
            found.append(refine_root(sextic, (a, b), digits))
        except NoSignChangeError:
            continue
    return [z for z in found if lo < z < 1]


class RhoEvaluation(NamedTuple):
    rho: mpmath.mpf
    consts: DerivedConstants
    ellipse: EllipseState
    point: Tuple[mpmath.mpf, mpmath.mpf]


def _rho_at(consts: DerivedConstants, eps, digits: int) -> RhoEvaluation:
    ellipse = ellipse_center(consts, eps, consts.r)
    xT = tangent_abscissa(consts, ellipse, consts.r, digits)
    yT = ordinate_from_ellipse(xT, ellipse)
    dist = mpmath.sqrt((xT - consts.x1) ** 2 + (yT - consts.y1) ** 2)
    return RhoEvaluation(dist, consts, ellipse, (xT, yT))


def rho_evaluation(t: TriangleConfig, r, digits: int = 40) -> RhoEvaluation:
    """rho(r) = |C1 T| with x_T from the reduced tangency quartics and y_T on the ellipse."""
    with working_precision(digits):
        consts = derived_constants(t, r)
        eps_list = admissible_eps(t, consts.r, digits)
        if not eps_list:
            raise InfeasibleError("no admissible eccentricity for r = {}".format(
                mpmath.nstr(consts.r, 10)))
        if len(eps_list) > 1:
            logger.warning("{} admissible eccentricities at r = {}".format(
                len(eps_list), mpmath.nstr(consts.r, 10)))
        evals = []
        for e in eps_list:
            try:
                evals.append(_rho_at(consts, e, digits))
            except SelectionError as err:
                logger.debug("eps = {} rejected: {}".format(mpmath.nstr(e, 12), err))
        if not evals:
            raise SelectionError("no tangency abscissa for any admissible eccentricity "
                                 "at r = {}".format(mpmath.nstr(consts.r, 10)))
        return min(evals, key=lambda ev: abs(ev.rho - consts.r))


def rho(t: TriangleConfig, r, digits: int = 40):
    return rho_evaluation(t, r, digits).rho


def initial_radius(t: TriangleConfig):
    h = t.b * t.c / t.a
    return h * mpmath.sqrt(2) / mpmath.mpf(SYMMETRIC_B_OVER_R)


def fallback_radius(t: TriangleConfig):
    return initial_radius(t) / 2


def solution_residuals(t: TriangleConfig, ev: RhoEvaluation, xT, yT,
                       foot_x) -> Dict[str, mpmath.mpf]:
    consts, el = ev.consts, ev.ellipse
    r = consts.r
    sextic = sextic_coeffs(t, r)
    return {
        "sextic": abs(sextic(el.eps)) / sextic.scale(),
        "ellipse": abs((xT - el.x0) ** 2 / el.alpha ** 2 + (yT - el.y0) ** 2 / el.beta ** 2 - 1),
        "circle": abs((xT - consts.x1) ** 2 + (yT - consts.y1) ** 2 - r ** 2) / r ** 2,
        "distance": abs(ev.rho - r) / r,
        "slope": abs((el.beta ** 2 / el.alpha ** 2) * (xT - el.x0) * (yT - consts.y1)
                     - (xT - consts.x1) * (yT - el.y0)),
        "tangency": abs(xT - foot_x),
    }


def solve_asymmetric(t: TriangleConfig, tol=1e-10, max_iter: int = 200, digits: int = 40,
                     acceleration: str = WEGSTEIN, damping=0.5,
                     samples: int = FOOT_SAMPLES) -> SolveReport:
    if acceleration not in (WEGSTEIN, DAMPED):
        raise DomainError("unknown acceleration {!r}".format(acceleration))
    with working_precision(digits):
        tol = to_bigreal(tol)
        if not tol > 0:
            raise DomainError("tolerance must be positive")
        lam = to_bigreal(damping)

        def evaluate(r):
            return rho_evaluation(t, r, digits)

        r = initial_radius(t)
        try:
            ev = evaluate(r)
        except (ComputationError, DomainError) as e:
            logger.warning("initial radius infeasible ({}); using fallback".format(e))
            r = fallback_radius(t)
            ev = evaluate(r)

        trace = [r]
        prev = None
        last_step = None
        growth = 0
        for it in range(1, max_iter + 1):
            g = ev.rho
            logger.debug("iteration {}: r = {} rho = {}".format(it, mpmath.nstr(r, 15),
                                                                mpmath.nstr(g, 15)))
            if abs(g - r) < tol * r:
                break
            if acceleration == WEGSTEIN and prev is not None and prev[0] != r:
                s = (g - prev[1]) / (r - prev[0])
                q = s / (s - 1) if s != 1 else mpmath.mpf(WEGSTEIN_CLAMP[1])
                q = min(max(q, mpmath.mpf(WEGSTEIN_CLAMP[0])), mpmath.mpf(WEGSTEIN_CLAMP[1]))
                step = (1 - q) * (g - r)
            else:
                step = lam * (g - r)
                if acceleration == DAMPED and last_step is not None and abs(step) > abs(last_step):
                    growth += 1
                    if growth >= 2:
                        lam /= 2
                        growth = 0
                        logger.warning("step growing; damping reduced to {}".format(
                            mpmath.nstr(lam, 6)))
                        step = lam * (g - r)
                else:
                    growth = 0
            for _ in range(MAX_BACKTRACK):
                try:
                    nxt = evaluate(r + step)
                    break
                except (ComputationError, DomainError) as e:
                    logger.warning("rho infeasible at r = {} ({}); halving step".format(
                        mpmath.nstr(r + step, 12), e))
                    step /= 2
            else:
                raise ConvergenceError("backtracking exhausted", trace)
            prev = (r, g)
            last_step = step
            r = r + step
            ev = nxt
            trace.append(r)
        else:
            raise ConvergenceError("no convergence after {} iterations".format(max_iter), trace)

        consts, ellipse = ev.consts, ev.ellipse
        xT = ev.point[0]
        yT = ordinate_from_circle(xT, consts, r)
        _, fx, _ = nearest_point_on_ellipse(ellipse, (consts.x1, consts.y1), samples)
        residuals = solution_residuals(t, ev, xT, yT, fx)
        bad = {k: v for k, v in residuals.items() if v > 10 * tol}
        if bad:
            logger.warning("residuals above 10*tol: {}".format(
                ", ".join("{}={}".format(k, mpmath.nstr(v, 3)) for k, v in bad.items())))
        logger.info("converged after {} iterations: eps = {} r = {}".format(
            len(trace), mpmath.nstr(ellipse.eps, 12), mpmath.nstr(r, 12)))
        return SolveReport(t, ellipse.eps, r, ellipse, consts.x1, consts.y1, xT, yT,
                           len(trace), residuals, trace)


class DerivativeDemo(NamedTuple):
    derivative_quartic: Polynomial
    value_at_eps: mpmath.mpf
    sextic_slope_at_eps: mpmath.mpf
    real_root_count: int
    simple_root: bool


def derivative_quartic_demo(t: TriangleConfig, r, eps, digits: int = 40) -> DerivativeDemo:
    """Shows that eps is a simple root of the sextic, so its derivative cannot replace it."""
    with working_precision(digits):
        sextic = sextic_compact(t, r)
        eps = to_bigreal(eps)
        cs = sextic.coeffs
        quartic = Polynomial((p + 2) * cs[p + 2] for p in range(5))
        slope = sextic.derivative()(eps)
        exact = Polynomial(closest_rational(c, mpmath.mpf(10) ** (-(digits + 10))) for c in cs)
        bound = root_bound(exact)
        count = sturm_count(exact, -bound, bound)
        tol = mpmath.mpf(10) ** (6 - digits) * sextic.scale()
        return DerivativeDemo(quartic, quartic(eps), slope, count, abs(slope) > tol)


def leg_tangency_points(consts: DerivedConstants, ellipse: EllipseState):
    """Double roots of the line-ellipse intersection on y = m x and y = -x / m."""
    al2, be2 = ellipse.alpha ** 2, ellipse.beta ** 2
    points = []
    for m in (consts.m, -1 / consts.m):
        x = (be2 * ellipse.x0 + m * al2 * ellipse.y0) / (m ** 2 * al2 + be2)
        points.append((x, m * x))
    return points


def leg_tangency_residuals(consts: DerivedConstants, ellipse: EllipseState):
    """Discriminants of the two line-ellipse quadratics; zero when the legs are tangent."""
    al2, be2 = ellipse.alpha ** 2, ellipse.beta ** 2
    x0, y0 = ellipse.x0, ellipse.y0
    return [m ** 2 * (x0 ** 2 - al2) - 2 * m * x0 * y0 + y0 ** 2 - be2
            for m in (consts.m, -1 / consts.m)]


def bisector_circle_radius(t: TriangleConfig, ellipse: EllipseState, samples: int = FOOT_SAMPLES):
    """Radius s of the circle on the bisector of A, touching both legs, that touches the ellipse."""
    a, b, c = t
    ux, uy = (c - b) / a, (c + b) / a

    def gap(s):
        _, x, y = nearest_point_on_ellipse(ellipse, (s * ux, s * uy), samples)
        return mpmath.sqrt((x - s * ux) ** 2 + (y - s * uy) ** 2) - s

    top = ellipse.y0 - ellipse.beta
    grid = [top * k / 16 for k in range(1, 17)]
    prev = mpmath.mpf(0)
    for s in grid:
        if gap(s) < 0:
            return mpmath.findroot(gap, (prev, s), solver="anderson")
        prev = s
    raise InfeasibleError("no bisector circle touches the ellipse")


class SweepResult(NamedTuple):
    eps: List[mpmath.mpf]
    r_inscribed: List[Optional[mpmath.mpf]]
    r_bisector: List[Optional[mpmath.mpf]]
    sign_changes: int
    crossing: Optional[mpmath.mpf]


def uniqueness_sweep(t: TriangleConfig, samples: int = 60, digits: int = 20,
                     foot_samples: int = FOOT_SAMPLES, progress=None) -> SweepResult:
    with working_precision(digits):
        lo = 1 / mpmath.sqrt(2)
        grid = [lo + (1 - lo) * (i + 1) / (samples + 1) for i in range(samples)]
        r_ins, r_bis = [], []
        for eps in (progress(grid) if progress else grid):
            try:
                r = quartic_in_r(t, eps, digits).admissible
                ellipse = ellipse_center(derived_constants(t, r), eps, r)
                s = bisector_circle_radius(t, ellipse, foot_samples)
            except (ComputationError, DomainError) as e:
                logger.debug("sweep skips eps = {}: {}".format(mpmath.nstr(eps, 8), e))
                r, s = None, None
            r_ins.append(r)
            r_bis.append(s)
        diffs = [(e, ri - rb) for e, ri, rb in zip(grid, r_ins, r_bis)
                 if ri is not None and rb is not None]
        changes = 0
        crossing = None
        for (e0, d0), (e1, d1) in zip(diffs, diffs[1:]):
            if mpmath.sign(d0) != mpmath.sign(d1):
                changes += 1
                crossing = e0 - d0 * (e1 - e0) / (d1 - d0)
        return SweepResult(grid, r_ins, r_bis, changes, crossing)
