"""Solvability of the Bring-Jerrard quintic z^5 + a z + b.

With rational a, b the quintic is solvable by radicals iff there are rationals
eps = +-1, p > 0 and q != 0 with

    a = 5 q^4 (3 - 4 eps p) / (p^2 + 1)
    b = -4 q^5 (11 eps + 2 p) / (p^2 + 1)

and then its roots have an explicit expression in fifth roots.
"""
from fractions import Fraction
from itertools import product
from math import gcd
from typing import Callable, Iterable, List, NamedTuple, Optional

import mpmath

from ..core.logging import logger
from ..core.numeric import closest_rational, to_bigreal, working_precision
from ..core.poly import Polynomial, root_bound, sturm_count
from ..errors import BranchError, DomainError

RATIONALIZE_TOL = Fraction(1, 10 ** 6)


class BringJerrard(NamedTuple):
    a_lin: object
    b_const: object

    def poly(self) -> Polynomial:
        return Polynomial([self.b_const, self.a_lin, 0, 0, 0, 1])


class SolvabilityWitness(NamedTuple):
    epsilon_sign: int
    p: Optional[Fraction]
    q: Optional[Fraction]
    satisfied: bool
    tried: int = 0

    def quintic(self) -> BringJerrard:
        if not self.satisfied:
            raise DomainError("an exhausted search carries no quintic")
        return BringJerrard(*witness_coefficients(self.epsilon_sign, self.p, self.q))


def witness_coefficients(eps: int, p: Fraction, q: Fraction):
    d = p * p + 1
    return 5 * q ** 4 * (3 - 4 * eps * p) / d, -4 * q ** 5 * (11 * eps + 2 * p) / d


def bring_jerrard_from_triangle(b, c, r) -> BringJerrard:
    b, c, r = to_bigreal(b), to_bigreal(c), to_bigreal(r)
    if not (0 < 2 * r < b <= c):
        raise DomainError("need 0 < 2r < b <= c")
    legs = (2 * r / b) ** 2 + (2 * r / c) ** 2
    a = mpmath.sqrt(b ** 2 + c ** 2)
    hyp = (2 * r * a / (b * c)) ** 2
    height = (2 * r / (b * c / a)) ** 2
    tol = mpmath.mpf(10) ** (4 - mpmath.mp.dps) * legs
    if abs(legs - hyp) > tol or abs(legs - height) > tol:
        raise DomainError("constant forms disagree")
    return BringJerrard(mpmath.mpf(1), -legs)


def _ratios(height: int) -> List[Fraction]:
    return sorted({Fraction(i, j) for i in range(1, height + 1) for j in range(1, height + 1)})


def solvability_search(target, height: int, a_lin=1,
                       progress: Optional[Callable[[Iterable], Iterable]] = None) -> SolvabilityWitness:
    """First (eps, p, q) making z^5 + a_lin z - target solvable.

    Enumeration order is eps = +1 then -1, p by increasing i/j, then q by
    increasing |k/l| with the positive value first. ``tried`` counts the
    candidates enumerated up to the witness, or all of them when exhausted.
    """
    if height < 1:
        raise DomainError("height must be positive")
    target = target if isinstance(target, Fraction) else closest_rational(target, RATIONALIZE_TOL)
    a_lin = Fraction(a_lin)
    ps = _ratios(height)
    qs = [s * v for v in ps for s in (1, -1)]
    index = {}
    for i, q in enumerate(qs):
        index.setdefault(q ** 4, []).append(i)

    tried = 0
    outer = [(eps, p) for eps in (1, -1) for p in ps]
    for eps, p in (progress(outer) if progress else outer):
        d = p * p + 1
        lin = 3 - 4 * eps * p
        hits = []
        if lin != 0:
            for i in index.get(a_lin * d / (5 * lin), ()):
                if 4 * qs[i] ** 5 * (11 * eps + 2 * p) / d == target:
                    hits.append(i)
        if hits:
            i = min(hits)
            tried += i + 1
            logger.info("solvable: eps = {} p = {} q = {}".format(eps, p, qs[i]))
            return SolvabilityWitness(eps, p, qs[i], True, tried)
        tried += len(qs)
    logger.info("no witness up to height {} ({} candidates)".format(height, tried))
    return SolvabilityWitness(0, None, None, False, tried)


def _fifth_roots(x) -> List:
    """The five fifth roots of ``x``, the real one first when ``x`` is real."""
    base = mpmath.root(abs(x), 5) * (-1 if x < 0 else 1) if not isinstance(x, mpmath.mpc) \
        else mpmath.root(x, 5)
    w = mpmath.exp(2j * mpmath.pi / 5)
    return [base * w ** k for k in range(5)]


def solvable_quintic_roots(witness: SolvabilityWitness, digits: int = 40) -> List:
    if not witness.satisfied:
        raise DomainError("witness does not satisfy the solvability conditions")
    eps, p, q = witness.epsilon_sign, witness.p, witness.q
    a, b = witness_coefficients(eps, p, q)
    f = Polynomial([b, a, 0, 0, 0, 1])
    with working_precision(digits):
        d = to_bigreal(p) ** 2 + 1
        sd = mpmath.sqrt(d)
        lo, hi = mpmath.sqrt(d - eps * sd), mpmath.sqrt(d + eps * sd)
        v1, v2, v3, v4 = sd + lo, -sd - hi, -sd + hi, sd - lo
        radicands = [v1 ** 2 * v3, v3 ** 2 * v4, v2 ** 2 * v1, v4 ** 2 * v2]
        choices = [_fifth_roots(x / d ** 2) for x in radicands]
        w = mpmath.exp(2j * mpmath.pi / 5)
        tol = mpmath.mpf(10) ** (6 - digits) * max(abs(to_bigreal(a)), abs(to_bigreal(b)), 1)
        qb = to_bigreal(q)
        for branch in product(range(5), repeat=4):
            u = [choices[k][branch[k]] for k in range(4)]
            roots = [qb * sum(w ** (j * (k + 1)) * u[k] for k in range(4)) for j in range(5)]
            if all(abs(f(z)) <= tol for z in roots):
                if branch != (0, 0, 0, 0):
                    logger.debug("fifth-root branch {}".format(branch))
                return [z.real if abs(z.imag) <= tol else z for z in roots]
    raise BranchError("no fifth-root branch reproduces the quintic")


class C12Report(NamedTuple):
    a2: Fraction
    a1: Fraction
    monic: Polynomial
    cleared: Polynomial
    resolvent_constant: Fraction
    annihilating_a1: Fraction
    real_roots: int
    rational_roots: List[Fraction]
    applicable_to_sextic: bool


def _divisors(n: int) -> List[int]:
    n = abs(n)
    return [k for k in range(1, n + 1) if n % k == 0]


def rational_roots(f: Polynomial) -> List[Fraction]:
    """Rational roots of an integer polynomial with nonzero constant term."""
    cs = [int(c) for c in f.coeffs]
    found = set()
    for num in _divisors(cs[0]):
        for den in _divisors(cs[-1]):
            for x in (Fraction(num, den), -Fraction(num, den)):
                if f(x) == 0:
                    found.add(x)
    return sorted(found)


def c12_demo(a2=Fraction(1, 2), sextic_a1=Fraction(0)) -> C12Report:
    """The degree-6 form z^6 + z^2 + a2 z + a1 with a1 tied to a2 by the rational-root criterion."""
    a2 = Fraction(a2)
    if a2 == 0:
        raise DomainError("a2 must be nonzero")
    a1 = (32 * a2 ** 4 + 3) / (144 * a2 ** 2)
    monic = Polynomial([a1, a2, 1, 0, 0, 0, 1])
    lcm = 1
    for c in monic.coeffs:
        lcm = lcm * c.denominator // gcd(lcm, c.denominator)
    cleared = Polynomial(int(c * lcm) for c in monic.coeffs)
    constant = (144 * a1 * a2 ** 4 - 32 * a2 ** 4 - 3) * a1 ** 15 * a2 ** 2
    bound = root_bound(cleared)
    count = sturm_count(cleared, -bound, bound)
    return C12Report(a2, a1, monic, cleared, constant, (32 * a2 ** 4 + 3) / (144 * a2 ** 4),
                     count, rational_roots(cleared), Fraction(sextic_a1) != 0)