"""Cross-check of asymmetric solutions in the canonical ellipse frame.

Here the ellipse is x^2/alpha^2 + y^2/beta^2 = 1 and the legs are the two
perpendicular tangents of slopes m and -1/m to its upper half, meeting at the
apex A. Everything below uses only alpha, beta, m, r and eps. A point
(X, Y) of this frame corresponds to (X_A - X, Y_A - Y) in the solver frame.
"""
from typing import Dict, NamedTuple, Tuple

import mpmath

from ..core.logging import logger
from ..core.numeric import to_bigreal, working_precision
from ..errors import DomainError

ORACLE_TOL = 1e-8


class TangentLine(NamedTuple):
    m: mpmath.mpf
    n: mpmath.mpf

    def __call__(self, x):
        return self.m * x + self.n


def _positive(alpha, beta):
    alpha, beta = to_bigreal(alpha), to_bigreal(beta)
    if not (alpha > 0 and beta > 0):
        raise DomainError("semi-axes must be positive")
    return alpha, beta


def tangent_intercept(alpha, beta, m):
    alpha, beta = _positive(alpha, beta)
    m = to_bigreal(m)
    return mpmath.sqrt(alpha ** 2 * m ** 2 + beta ** 2)


def tangent_line(alpha, beta, m) -> TangentLine:
    return TangentLine(to_bigreal(m), tangent_intercept(alpha, beta, m))


def tangency_discriminant(alpha, beta, m, n):
    """Discriminant of the line-ellipse quadratic; zero for a tangent."""
    alpha, beta, m, n = (to_bigreal(v) for v in (alpha, beta, m, n))
    return (2 * m * n * alpha ** 2) ** 2 \
        - 4 * (alpha ** 2 * m ** 2 + beta ** 2) * alpha ** 2 * (n ** 2 - beta ** 2)


def apex(alpha, beta, m) -> Tuple[mpmath.mpf, mpmath.mpf]:
    """Meeting point of the tangents of slopes m and -1/m."""
    alpha, beta = _positive(alpha, beta)
    m = to_bigreal(m)
    if m == 0:
        raise DomainError("slope 0 has no perpendicular tangent of finite slope")
    u = mpmath.sqrt(alpha ** 2 + beta ** 2 * m ** 2)
    v = mpmath.sqrt(alpha ** 2 * m ** 2 + beta ** 2)
    return (u - m * v) / (1 + m ** 2), (m * u + v) / (1 + m ** 2)


def director_circle_check(alpha, beta, xA, yA):
    alpha, beta, xA, yA = (to_bigreal(v) for v in (alpha, beta, xA, yA))
    return abs(xA ** 2 + yA ** 2 - alpha ** 2 - beta ** 2)


def tangent_point_B(alpha, beta, m) -> Tuple[mpmath.mpf, mpmath.mpf]:
    n = tangent_intercept(alpha, beta, m)
    alpha, beta, m = to_bigreal(alpha), to_bigreal(beta), to_bigreal(m)
    return -alpha ** 2 * m / n, beta ** 2 / n


def tangent_point_eps(eps, m, r) -> Tuple[mpmath.mpf, mpmath.mpf]:
    """Same point with alpha = r / (eps sqrt(1 - eps^2)) and beta = r / eps."""
    eps, m, r = to_bigreal(eps), to_bigreal(m), to_bigreal(r)
    e2 = 1 - eps ** 2
    y = r / (eps * mpmath.sqrt(1 + m ** 2 / e2))
    return -m / e2 * y, y


class BisectorC1(NamedTuple):
    slope: mpmath.mpf
    intercept: mpmath.mpf
    x1: mpmath.mpf
    y1: mpmath.mpf
    xA: mpmath.mpf
    yA: mpmath.mpf


def bisector_and_c1(alpha, beta, m, r) -> BisectorC1:
    m, r = to_bigreal(m), to_bigreal(r)
    if not m > 0:
        raise DomainError("bisector needs a positive leg slope")
    if m == 1:
        raise DomainError("m = 1 makes the bisector vertical")
    xA, yA = apex(alpha, beta, m)
    slope = (1 + m) / (1 - m)
    intercept = (tangent_intercept(alpha, beta, m)
                 - mpmath.sqrt(to_bigreal(alpha) ** 2 + to_bigreal(beta) ** 2 * m ** 2)) / (1 - m)
    root = mpmath.sqrt(1 + m ** 2)
    return BisectorC1(slope, intercept, xA - (1 - m) / root * r, yA - (1 + m) / root * r, xA, yA)


def bisector_intercept_eps(eps, m, r):
    eps, m, r = to_bigreal(eps), to_bigreal(m), to_bigreal(r)
    num = mpmath.sqrt(1 + m ** 2 - eps ** 2) - mpmath.sqrt(1 + m ** 2 - m ** 2 * eps ** 2)
    return r / (1 - m) * num / (eps * mpmath.sqrt(1 - eps ** 2))


def c1_from_eps(eps, m, r) -> Tuple[mpmath.mpf, mpmath.mpf]:
    eps, m, r = to_bigreal(eps), to_bigreal(m), to_bigreal(r)
    e2 = 1 - eps ** 2
    p = mpmath.sqrt(1 / e2 + m ** 2)
    q = mpmath.sqrt(m ** 2 / e2 + 1)
    root = mpmath.sqrt(1 + m ** 2)
    x1 = (r / eps * (p - m * q) - r * (1 - m) * root) / (1 + m ** 2)
    y1 = (r / eps * (m * p + q) - r * (1 + m) * root) / (1 + m ** 2)
    return x1, y1


def frame_map(point, apex_point) -> Tuple[mpmath.mpf, mpmath.mpf]:
    """Point reflection through the apex; maps either frame onto the other."""
    return (to_bigreal(apex_point[0]) - to_bigreal(point[0]),
            to_bigreal(apex_point[1]) - to_bigreal(point[1]))


def inversion_residual(alpha, beta, x, y):
    alpha, beta = _positive(alpha, beta)
    x, y = to_bigreal(x), to_bigreal(y)
    d = x ** 2 + y ** 2
    if d == 0:
        raise DomainError("the origin has no image under inversion")
    X, Y = x / d, -y / d
    return abs(X ** 2 / alpha ** 2 + Y ** 2 / beta ** 2 - (X ** 2 + Y ** 2) ** 2)


class OracleReport(NamedTuple):
    residuals: Dict[str, mpmath.mpf]
    tol: float

    @property
    def passed(self) -> bool:
        return all(v <= self.tol for v in self.residuals.values())

    def to_dict(self) -> dict:
        return {"passed": self.passed, "tol": self.tol,
                "residuals": {k: mpmath.nstr(v, 5) for k, v in self.residuals.items()}}


def cross_check(report, tol: float = ORACLE_TOL, digits: int = 40) -> OracleReport:
    """Compares a solved configuration against the canonical-frame formulas."""
    from .asymmetric import derived_constants, leg_tangency_points

    with working_precision(digits):
        t, el, r = report.triangle, report.ellipse, report.r
        m = t.b / t.c
        out = {}
        A = apex(el.alpha, el.beta, m)
        out["apex"] = max(abs(A[0] - el.x0), abs(A[1] - el.y0))
        out["director"] = director_circle_check(el.alpha, el.beta, el.x0, el.y0)

        legs = leg_tangency_points(derived_constants(t, r), el)
        for name, slope, leg in (("leg_c", m, legs[0]), ("leg_b", -1 / m, legs[1])):
            T = frame_map(tangent_point_B(el.alpha, el.beta, slope), A)
            out[name] = max(abs(T[0] - leg[0]), abs(T[1] - leg[1]))
        Te = tangent_point_eps(el.eps, m, r)
        Tb = tangent_point_B(el.alpha, el.beta, m)
        out["tangent_eps"] = max(abs(Te[0] - Tb[0]), abs(Te[1] - Tb[1]))

        if m != 1:
            bis = bisector_and_c1(el.alpha, el.beta, m, r)
            C1 = frame_map((bis.x1, bis.y1), A)
            out["c1"] = max(abs(C1[0] - report.x1), abs(C1[1] - report.y1))
            Ce = c1_from_eps(el.eps, m, r)
            out["c1_eps"] = max(abs(Ce[0] - bis.x1), abs(Ce[1] - bis.y1))
            out["bisector_eps"] = abs(bisector_intercept_eps(el.eps, m, r) - bis.intercept)
        else:
            logger.info("right isosceles triangle: bisector checks skipped")

        T = frame_map((report.xT, report.yT), A)
        out["inversion"] = inversion_residual(el.alpha, el.beta, T[0], T[1])
        result = OracleReport(out, tol)
        if not result.passed:
            logger.warning("oracle residuals above {}: {}".format(tol, ", ".join(
                k for k, v in out.items() if v > tol)))
        return result
