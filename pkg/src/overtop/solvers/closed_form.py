"""Closed-form cubic and quartic solvers.

Coefficients may be exact (``Fraction``/:class:`Surd2`) or ``mpf``; exact inputs
keep every discriminant sign exact and only the radicals are evaluated in
mpmath. Roots come back as ``mpf`` or, when non-real, ``mpc``.
"""
from fractions import Fraction
from typing import Dict, List, NamedTuple, Optional

import mpmath

from ..core.logging import logger
from ..core.numeric import to_bigreal, sign, real_cbrt, clean_complex, working_precision
from ..core.poly import Polynomial
from ..errors import DomainError, ResolventError

PLUS_BRANCH = "+sqrt(s)"
MINUS_BRANCH = "-sqrt(s)"
BIQUADRATIC = "biquadratic"

FERRARI = "ferrari"
FORMULA_A = "formulaA"


class Depressed(NamedTuple):
    C: object
    D: object
    E: object
    shift: object


class CubicSolution(NamedTuple):
    roots: List
    real_root: object
    discriminant: object


class QuarticSolution(NamedTuple):
    roots: List
    resolvent_zeta: Optional[object]
    branch_log: List[str]


class FormulaASolution(NamedTuple):
    roots: List
    constants: Dict[str, object]


def _tol(digits: int):
    return mpmath.mpf(10) ** (-digits)


def _exact(*values):
    return tuple(Fraction(v) if isinstance(v, int) else v for v in values)


def depress_quartic(a3, a2, a1, a0) -> Depressed:
    """x = xi + shift turns x^4 + a3 x^3 + a2 x^2 + a1 x + a0 into xi^4 + C xi^2 + D xi + E."""
    a3, a2, a1, a0 = _exact(a3, a2, a1, a0)
    C = a2 - 3 * a3 ** 2 / 8
    D = a1 - a2 * a3 / 2 + a3 ** 3 / 8
    E = a0 - a1 * a3 / 4 + a2 * a3 ** 2 / 16 - 3 * a3 ** 4 / 256
    return Depressed(C, D, E, -a3 / 4)


def resolvent_cubic(C, D, E):
    C, D, E = _exact(C, D, E)
    c = 5 * C / 2
    d = 2 * C ** 2 - E
    e = C * (C ** 2 - E) / 2 - D ** 2 / 8
    return c, d, e


def depress_cubic(c, d, e):
    """(gamma, delta) of z^3 + gamma z + delta with zeta = z - c/3."""
    c, d, e = _exact(c, d, e)
    gamma = d - c ** 2 / 3
    delta = 2 * c ** 3 / 27 - c * d / 3 + e
    return gamma, delta


def resolvent_residual(C, D, E, zeta):
    """Discriminant of the quadratic in xi that must be a perfect square; zero at a valid zeta."""
    if isinstance(zeta, (mpmath.mpf, mpmath.mpc, float)):
        C, D, E, zeta = (to_bigreal(v) for v in (C, D, E, zeta))
    s = C + 2 * zeta
    return D ** 2 - 4 * s * ((C + zeta) ** 2 - E)


def solve_depressed_cubic(gamma, delta, digits: int) -> CubicSolution:
    gamma, delta = _exact(gamma, delta)
    with working_precision(digits):
        disc = (delta / 2) ** 2 + (gamma / 3) ** 3
        disc_sign = sign(disc)
        g, dl = to_bigreal(gamma), to_bigreal(delta)
        tol = _tol(digits)
        if disc_sign >= 0:
            sq = mpmath.sqrt(to_bigreal(disc))
            u = real_cbrt(-dl / 2 + sq)
            v = real_cbrt(-dl / 2 - sq)
            real = u + v
            re_part = -(u + v) / 2
            im_part = mpmath.sqrt(3) / 2 * (u - v)
            others = [clean_complex(mpmath.mpc(re_part, im_part), tol),
                      clean_complex(mpmath.mpc(re_part, -im_part), tol)]
            roots = [real] + others
        else:
            # three distinct real roots, so gamma < 0
            m = 2 * mpmath.sqrt(-g / 3)
            arg = (3 * dl / (2 * g)) * mpmath.sqrt(-3 / g)
            arg = max(min(arg, mpmath.mpf(1)), mpmath.mpf(-1))
            theta = mpmath.acos(arg) / 3
            roots = [m * mpmath.cos(theta - 2 * mpmath.pi * k / 3) for k in range(3)]
            real = roots[0]
    return CubicSolution(roots, real, disc)


def _real_resolvent_roots(cubic: CubicSolution, c) -> List:
    shift = to_bigreal(c) / 3
    zetas = [cubic.real_root - shift]
    rest = [z for z in cubic.roots[1:] if not isinstance(z, mpmath.mpc)]
    zetas += sorted((z - shift for z in rest), reverse=True)
    return zetas


def solve_quartic_ferrari(C, D, E, shift, digits: int) -> QuarticSolution:
    if sign(D) == 0:
        with working_precision(digits):
            Cb, Eb, sh = to_bigreal(C), to_bigreal(E), to_bigreal(shift)
            sq = mpmath.sqrt(Cb ** 2 - 4 * Eb)
            roots = []
            for y in ((-Cb + sq) / 2, (-Cb - sq) / 2):
                t = mpmath.sqrt(y)
                roots += [t + sh, -t + sh]
            tol = _tol(digits)
            roots = [clean_complex(z, tol) for z in roots]
        return QuarticSolution(roots, None, [BIQUADRATIC] * 4)

    with working_precision(digits):
        c, d, e = resolvent_cubic(C, D, E)
        gamma, delta = depress_cubic(c, d, e)
        cubic = solve_depressed_cubic(gamma, delta, digits)
        Cb, Db, sh = to_bigreal(C), to_bigreal(D), to_bigreal(shift)
        tol = _tol(digits)
        for zeta in _real_resolvent_roots(cubic, c):
            s = Cb + 2 * zeta
            if s > tol * max(1, abs(Cb)):
                break
            logger.warning("resolvent root {} gives C + 2*zeta <= 0, trying another".format(
                mpmath.nstr(zeta, 15)))
        else:
            raise ResolventError("no real resolvent root gives C + 2*zeta > 0")
        rs = mpmath.sqrt(s)
        base = -3 * Cb - 2 * zeta
        p = mpmath.sqrt(base - 2 * Db / rs)
        m = mpmath.sqrt(base + 2 * Db / rs)
        roots = [(rs + p) / 2, (rs - p) / 2, (-rs + m) / 2, (-rs - m) / 2]
        roots = [clean_complex(z + sh, tol) for z in roots]
    return QuarticSolution(roots, zeta, [PLUS_BRANCH, PLUS_BRANCH, MINUS_BRANCH, MINUS_BRANCH])


def _ferrari_monic(a3, a2, a1, a0, digits: int) -> List:
    with working_precision(digits):
        dq = depress_quartic(a3, a2, a1, a0)
    return solve_quartic_ferrari(dq.C, dq.D, dq.E, dq.shift, digits).roots


def quartic_closed_form_A(a3, a2, a1, a0, digits: int) -> FormulaASolution:
    a3, a2, a1, a0 = _exact(a3, a2, a1, a0)
    with working_precision(digits):
        A = 2 * a2 ** 3 + 9 * (3 * (a1 ** 2 + a0 * a3 ** 2) - (8 * a0 + a1 * a3) * a2)
        B = a2 ** 2 + 3 * (4 * a0 - a1 * a3)
        disc = A ** 2 - 4 * B ** 3
        disc_sign = sign(disc)
        tol = _tol(digits)
        a3b, a2b, a1b = to_bigreal(a3), to_bigreal(a2), to_bigreal(a1)
        Ab, Bb = to_bigreal(A), to_bigreal(B)
        cbrt2 = mpmath.cbrt(2)
        if disc_sign >= 0:
            Cc = real_cbrt(Ab + mpmath.sqrt(to_bigreal(disc)))
        else:
            Cc = mpmath.cbrt(mpmath.mpc(Ab, mpmath.sqrt(-to_bigreal(disc))))
        constants = {"A": A, "B": B, "C": Cc}
        if Cc == 0:
            logger.warning("formula A degenerates (C = 0), falling back to Ferrari")
            return FormulaASolution(_ferrari_monic(a3, a2, a1, a0, digits), constants)
        Dd = cbrt2 / 3 * Bb / Cc
        Ee = Dd + a3b ** 2 / 4 - 2 * a2b / 3
        # a2*a3 - 2*a1 - a3^3/4 is -2 times the depressed linear coefficient
        numerator = a2 * a3 - 2 * a1 - a3 ** 3 / 4
        radicand = Cc / (3 * cbrt2) + Ee
        scale = max(1, abs(Cc), abs(Ee), abs(a3b) ** 2, abs(a2b))
        if sign(numerator) == 0 or abs(radicand) <= tol * scale:
            logger.warning("formula A degenerates (zero square root), falling back to Ferrari")
            constants.update(D=Dd, E=Ee)
            return FormulaASolution(_ferrari_monic(a3, a2, a1, a0, digits), constants)
        S = mpmath.sqrt(clean_complex(radicand, tol))
        Ff = to_bigreal(numerator) / S
        base = a3b ** 2 / 2 - 4 * a2b / 3 - Cc / (3 * cbrt2) - Dd
        p = mpmath.sqrt(base + Ff)
        m = mpmath.sqrt(base - Ff)
        roots = [(-a3b / 2 + S + p) / 2, (-a3b / 2 + S - p) / 2,
                 (-a3b / 2 - S + m) / 2, (-a3b / 2 - S - m) / 2]
        roots = [clean_complex(z, _tol(digits - 6)) for z in roots]
        constants.update(D=clean_complex(Dd, tol), E=clean_complex(Ee, tol),
                         F=clean_complex(Ff, tol))
    return FormulaASolution(roots, constants)


def solve_cubic_monic(a2, a1, a0, digits: int) -> List:
    a2, a1, a0 = _exact(a2, a1, a0)
    with working_precision(digits):
        gamma = a1 - a2 ** 2 / 3
        delta = 2 * a2 ** 3 / 27 - a2 * a1 / 3 + a0
        cubic = solve_depressed_cubic(gamma, delta, digits)
        shift = to_bigreal(a2) / 3
        return [z - shift for z in cubic.roots]


def solve_polynomial(f: Polynomial, digits: int, method: str = FERRARI) -> List:
    """All complex roots of a polynomial of degree 1 to 4, with multiplicity."""
    if f.is_zero or f.degree < 1:
        raise DomainError("nothing to solve for a constant polynomial")
    if f.degree > 4:
        raise DomainError("closed forms stop at degree 4, got {}".format(f.degree))
    m = f.monic()
    cs = m.coeffs
    with working_precision(digits):
        if f.degree == 1:
            return [-to_bigreal(cs[0])]
        if f.degree == 2:
            b, c = to_bigreal(cs[1]), to_bigreal(cs[0])
            sq = mpmath.sqrt(b ** 2 - 4 * c)
            return [clean_complex((-b + sq) / 2, _tol(digits)),
                    clean_complex((-b - sq) / 2, _tol(digits))]
    if f.degree == 3:
        return solve_cubic_monic(cs[2], cs[1], cs[0], digits)
    if method == FORMULA_A:
        return quartic_closed_form_A(cs[3], cs[2], cs[1], cs[0], digits).roots
    if method != FERRARI:
        raise DomainError("unknown quartic method {!r}".format(method))
    return _ferrari_monic(cs[3], cs[2], cs[1], cs[0], digits)


def max_residual(f: Polynomial, roots, digits: int):
    with working_precision(digits):
        g = f.to_bigreal()
        return max(abs(g(to_bigreal(z))) for z in roots)


def sort_roots(roots) -> List:
    """Real roots first in descending order, then complex ones by real part and sign of the imaginary part."""
    real = sorted((z for z in roots if not isinstance(z, mpmath.mpc)), reverse=True)
    cplx = sorted((z for z in roots if isinstance(z, mpmath.mpc)),
                  key=lambda z: (z.real, -z.imag))
    return real + cplx
