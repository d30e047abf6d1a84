"""Right isosceles triangle: an ellipse of semi-axes alpha > beta inscribed in the
right angle, two equal circles of radius r inside it touching each other, and
the circle on the axis outside it.

Tangency of the inner circles forces r = beta * eps, and eliminating r from the
vertex height leaves a quartic in the eccentricity eps with p = sqrt2 - 1.
"""
from typing import Dict, List, NamedTuple

import mpmath

from ..core.logging import logger
from ..core.numeric import Surd2, to_bigreal, working_precision
from ..core.poly import Polynomial
from ..errors import ComputationError, DomainError, ResolventError, SelectionError
from ..solvers.closed_form import (depress_quartic, resolvent_cubic, depress_cubic,
                                   solve_depressed_cubic, solve_quartic_ferrari,
                                   quartic_closed_form_A)

P = Surd2(-1, 1)
MIN_DIGITS = 12


class SymmetricSolution(NamedTuple):
    p: Surd2
    epsilon: mpmath.mpf
    beta_over_alpha: mpmath.mpf
    b_over_r: mpmath.mpf
    digits: int
    radical_constants: Dict[str, object]
    b_over_r_direct: mpmath.mpf
    b_over_r_formula_a: mpmath.mpf
    zeta: mpmath.mpf
    zeta_alt: mpmath.mpf
    inadmissible_root: mpmath.mpf
    roots: List
    y_a_residual: mpmath.mpf

    def to_dict(self) -> dict:
        c = self.radical_constants
        s = lambda x: mpmath.nstr(to_bigreal(x), self.digits) if not isinstance(x, str) else x
        return {
            "epsilon": s(self.epsilon),
            "b_over_r": s(self.b_over_r),
            "digits": self.digits,
            "constants": {"C": str(c["C"]), "Delta": str(c["Delta"]), "zeta": s(self.zeta),
                          "B": str(c["B"]), "F": s(c["F"])},
        }


def symmetric_quartic() -> Polynomial:
    return Polynomial([P ** 2, -2 * P, -1, 2 * P, 1])


def _check_eps(eps):
    if not 0 < eps < 1:
        raise DomainError("eccentricity must lie in (0, 1), got {}".format(eps))


def r_of_eps(alpha, eps):
    alpha, eps = to_bigreal(alpha), to_bigreal(eps)
    _check_eps(eps)
    if alpha <= 0:
        raise DomainError("semi-major axis must be positive")
    return alpha * eps * mpmath.sqrt(1 - eps ** 2)


def r_piecewise(alpha, eps):
    alpha, eps = to_bigreal(alpha), to_bigreal(eps)
    if not 0 <= eps < 1:
        raise DomainError("eccentricity must lie in [0, 1), got {}".format(eps))
    if eps <= 1 / mpmath.sqrt(2):
        return alpha / 2
    return r_of_eps(alpha, eps)


def r1_of_alpha(alpha):
    """Radius of the outer axis circle when beta = 1."""
    alpha = to_bigreal(alpha)
    if alpha < 0:
        raise DomainError("semi-major axis must be nonnegative")
    r1 = (mpmath.sqrt(2) - 1) * (mpmath.sqrt(alpha ** 2 + 1) - 1)
    if alpha > 0 and not r1 < alpha / 2:
        raise ComputationError("outer radius {} not below alpha/2".format(r1))
    return r1


def graphic_r_check(alpha, beta, digits: int = 40):
    """Similar-triangle construction of r from the focal distance gamma."""
    with working_precision(digits):
        alpha, beta = to_bigreal(alpha), to_bigreal(beta)
        if not 0 < beta <= alpha:
            raise DomainError("need 0 < beta <= alpha")
        gamma = mpmath.sqrt(alpha ** 2 - beta ** 2)
        rr = beta * gamma / alpha
        eps = gamma / alpha
        if abs(rr - beta * eps) > mpmath.mpf(10) ** (-digits) * max(1, alpha):
            raise ComputationError("construction disagrees with beta*eps")
        return rr


def b_over_r_from_eps(eps):
    return 2 + (1 + 2 / eps) * mpmath.sqrt(2)


def y_a_residual(eps):
    """sqrt(alpha^2 + beta^2) - beta - (1 + sqrt2) r with alpha = 1 and r = beta*eps."""
    beta = mpmath.sqrt(1 - eps ** 2)
    return mpmath.sqrt(1 + beta ** 2) - beta - (1 + mpmath.sqrt(2)) * beta * eps


def zeta_signed_sum(C, gamma, delta, disc):
    """Resolvent root as -c/3 minus the sum of the two real cube roots of delta/2 -+ sqrt(disc)."""
    sq = mpmath.sqrt(to_bigreal(disc))
    dl = to_bigreal(delta) / 2
    acc = -5 * to_bigreal(C) / 6
    for k in (1, 2):
        w = dl + (-1) ** k * sq
        acc -= mpmath.sign(w) * mpmath.cbrt(abs(w))
    return acc


def solve_symmetric(digits: int = 40) -> SymmetricSolution:
    if digits < MIN_DIGITS:
        raise DomainError("solve_symmetric needs at least {} digits".format(MIN_DIGITS))
    a3, a2, a1, a0 = 2 * P, Surd2(-1), -2 * P, P ** 2
    dq = depress_quartic(a3, a2, a1, a0)
    c, d, e = resolvent_cubic(dq.C, dq.D, dq.E)
    gamma, delta = depress_cubic(c, d, e)
    disc = (delta / 2) ** 2 + (gamma / 3) ** 3
    if disc.sign() <= 0:
        raise ResolventError("resolvent discriminant {} is not positive".format(disc))
    constants = {"C": dq.C, "D": dq.D, "E": dq.E, "c": c, "d": d, "e": e,
                 "gamma": gamma, "delta": delta, "Delta": disc}

    with working_precision(digits):
        tol = mpmath.mpf(10) ** (4 - digits)
        cubic = solve_depressed_cubic(gamma, delta, digits)
        zeta = cubic.real_root - to_bigreal(c) / 3
        zeta_alt = zeta_signed_sum(dq.C, gamma, delta, disc)
        if abs(zeta - zeta_alt) > tol:
            raise ResolventError("resolvent root forms disagree: {} vs {}".format(zeta, zeta_alt))
        quartic = solve_quartic_ferrari(dq.C, dq.D, dq.E, dq.shift, digits)

        lo, hi = 1 / mpmath.sqrt(2), mpmath.mpf(1)
        real = [z for z in quartic.roots if not isinstance(z, mpmath.mpc)]
        admissible = [z for z in real if lo < z < hi]
        if len(admissible) != 1:
            raise SelectionError("{} roots of the eccentricity quartic in (1/sqrt2, 1)".format(
                len(admissible)))
        eps = admissible[0]
        others = [z for z in real if z is not eps]
        second = others[0] if others else None
        if second is not None:
            logger.info("eccentricity root {} rejected: outside (1/sqrt2, 1)".format(
                mpmath.nstr(second, 12)))

        Cb, Db = to_bigreal(dq.C), to_bigreal(dq.D)
        s = Cb + 2 * zeta
        rs = mpmath.sqrt(s)
        root2 = mpmath.sqrt(2)
        b_over_r = 2 + root2 + 4 * root2 / (
            1 - root2 + rs + mpmath.sqrt(-2 * Db / rs - 3 * Cb - 2 * zeta))
        direct = b_over_r_from_eps(eps)
        if abs(b_over_r - direct) > tol:
            raise ComputationError("b/r forms disagree: {} vs {}".format(b_over_r, direct))

        form_a = quartic_closed_form_A(a3, a2, a1, a0, digits)
        consts_a = form_a.constants
        if consts_a["B"] != Surd2(73, -48):
            raise ComputationError("formula constant B = {} (expected 73 - 48*sqrt2)".format(
                consts_a["B"]))
        cbrt2 = mpmath.cbrt(2)
        ccal = consts_a["C"]
        S = mpmath.sqrt(ccal / (3 * cbrt2) + consts_a["E"])
        inner = mpmath.mpf(22) / 3 - 4 * root2 - ccal / (3 * cbrt2) - consts_a["D"] + consts_a["F"]
        b_over_r_a = 2 + root2 + 4 * root2 / (1 - root2 + S + mpmath.sqrt(inner))
        b_over_r_a = mpmath.re(b_over_r_a)
        if abs(b_over_r_a - b_over_r) > tol:
            raise ComputationError("formula-A b/r disagrees: {}".format(b_over_r_a))

        constants.update(A=consts_a["A"], B=consts_a["B"], Ccal=ccal, D_A=consts_a["D"],
                         E_A=consts_a["E"], F=consts_a["F"], zeta=zeta)
        logger.info("symmetric eccentricity {} b/r {}".format(mpmath.nstr(eps, 15),
                                                             mpmath.nstr(b_over_r, 15)))
        return SymmetricSolution(P, eps, mpmath.sqrt(1 - eps ** 2), b_over_r, digits, constants,
                                 direct, b_over_r_a, zeta, zeta_alt, second, quartic.roots,
                                 y_a_residual(eps))


def ccal_radicand_check() -> bool:
    """A^2 - 4B^3 of the symmetric quartic equals 1728 (2639 - 1866 sqrt2) exactly."""
    A = 108 * P ** 4 + 144 * P ** 2 - 2
    B = 24 * P ** 2 + 1
    return A == 22 * Surd2(103, -72) and A ** 2 - 4 * B ** 3 == 1728 * Surd2(2639, -1866)


def ccal_closed_form(digits: int = 40):
    """Cube root of 2 [11 (103 - 72 sqrt2) + 12 sqrt(3 (2639 - 1866 sqrt2))]."""
    with working_precision(digits):
        inner = to_bigreal(Surd2(2639, -1866))
        return mpmath.cbrt(2 * (11 * to_bigreal(Surd2(103, -72)) + 12 * mpmath.sqrt(3 * inner)))
