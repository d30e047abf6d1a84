from fractions import Fraction

import mpmath
import pytest
import sympy

from overtop.core.numeric import working_precision
from overtop.core.poly import Polynomial
from overtop.errors import DomainError
from overtop.quintic.lab import (BringJerrard, SolvabilityWitness, _ratios, bring_jerrard_from_triangle,
                                 c12_demo, rational_roots, solvability_search,
                                 solvable_quintic_roots, witness_coefficients)


EPSILON = 1e-25
DIGITS = 40

X = sympy.Symbol("x")


def test_self_test_quintic_witness():
    assert witness_coefficients(-1, Fraction(4, 3), Fraction(1)) == (15, 12)
    witness = solvability_search(Fraction(-12), height=6, a_lin=15)
    assert witness.satisfied
    assert witness.tried >= 1
    assert witness_coefficients(witness.epsilon_sign, witness.p, witness.q) == (15, 12)
    assert witness.quintic() == BringJerrard(15, 12)


def test_self_test_quintic_roots():
    witness = SolvabilityWitness(-1, Fraction(4, 3), Fraction(1), True)
    roots = solvable_quintic_roots(witness, DIGITS)
    assert len(roots) == 5
    f = witness.quintic().poly()
    with working_precision(DIGITS):
        assert max(abs(f(z)) for z in roots) < EPSILON
        real = [z for z in roots if not isinstance(z, mpmath.mpc)]
        assert len(real) == 1
        expected = sympy.Poly(X ** 5 + 15 * X + 12, X).nroots(n=30)
        real_expected = [z for z in expected if z.is_real]
        assert abs(real[0] - mpmath.mpf(str(real_expected[0]))) < 1e-25


def test_unsatisfied_witness_has_no_roots():
    empty = SolvabilityWitness(0, None, None, False, 10)
    with pytest.raises(DomainError):
        solvable_quintic_roots(empty)
    with pytest.raises(DomainError):
        empty.quintic()


def test_worked_triangle_search_exhausts():
    with working_precision(30):
        bj = bring_jerrard_from_triangle(mpmath.mpf("1.0591663"), mpmath.mpf("2.6931530"),
                                         mpmath.mpf("0.2358"))
        assert bj.a_lin == 1
        assert bj.b_const < 0
    witness = solvability_search(-bj.b_const, height=30)
    assert not witness.satisfied
    assert witness.tried > 0
    with pytest.raises(DomainError):
        solvability_search(Fraction(1), height=0)


def test_triangle_domain():
    with pytest.raises(DomainError):
        bring_jerrard_from_triangle(1, 2, 0.6)
    with pytest.raises(DomainError):
        bring_jerrard_from_triangle(3, 2, 0.1)


def test_c12_demo():
    rep = c12_demo()
    assert rep.a1 == Fraction(5, 36)
    assert rep.cleared.coeffs == (5, 18, 36, 0, 0, 0, 36)
    bracket = 144 * rep.a1 * Fraction(1, 16) - 2 - 3
    assert bracket == Fraction(-15, 4)
    assert rep.resolvent_constant == bracket * rep.a1 ** 15 * Fraction(1, 4)
    assert rep.resolvent_constant != 0
    assert rep.annihilating_a1 == Fraction(5, 9)
    assert not rep.applicable_to_sextic
    poly = sympy.Poly(36 * X ** 6 + 36 * X ** 2 + 18 * X + 5, X)
    assert rep.real_roots == len(set(sympy.real_roots(poly)))
    assert rep.rational_roots == sorted(Fraction(int(z.p), int(z.q))
                                        for z in set(sympy.roots(poly, filter="Q")))
    with pytest.raises(DomainError):
        c12_demo(0)


def test_rational_roots():
    f = Polynomial.from_roots([Fraction(1, 2), -3]) * 2
    assert rational_roots(f) == [-3, Fraction(1, 2)]


@pytest.mark.parametrize("digits", [30, 60])
def test_witness_roots_hold_at_each_precision(digits):
    witness = solvability_search(Fraction(-12), height=6, a_lin=15)
    roots = solvable_quintic_roots(witness, digits)
    f = witness.quintic().poly()
    with working_precision(digits):
        scale = max(abs(z) for z in roots) ** 5 + 15 * max(abs(z) for z in roots) + 12
        assert max(abs(f(z)) for z in roots) < mpmath.mpf(10) ** (6 - digits) * scale


def test_zero_target_has_no_witness():
    witness = solvability_search(Fraction(0), height=12)
    assert not witness.satisfied
    assert witness.tried == 2 * 2 * len(_ratios(12)) ** 2
