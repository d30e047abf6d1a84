from fractions import Fraction

import mpmath
import numpy as np
import pytest
import sympy
from hypothesis import assume, given, settings, strategies as st

from overtop.core.numeric import working_precision
from overtop.core.poly import Polynomial
from overtop.errors import DomainError
from overtop.solvers.closed_form import (FERRARI, FORMULA_A, depress_quartic, max_residual,
                                         quartic_closed_form_A, resolvent_cubic,
                                         resolvent_residual, solve_polynomial, sort_roots)


EPSILON = 1e-25
DIGITS = 40

X = sympy.Symbol("x")
coeff = st.integers(min_value=-20, max_value=20)


def _oracle(cs):
    expr = sum(sympy.Integer(c) * X ** i for i, c in enumerate(cs))
    return [mpmath.mpc(str(sympy.re(z)), str(sympy.im(z)))
            for z in sympy.Poly(expr, X).nroots(n=DIGITS + 10, maxsteps=200)]


def _matches(roots, expected, tol):
    left = list(expected)
    for z in roots:
        j = min(range(len(left)), key=lambda k: abs(left[k] - z))
        if abs(left[j] - z) > tol * max(1, abs(z)):
            return False
        left.pop(j)
    return not left


def _squarefree(cs):
    f = sympy.Poly(sum(sympy.Integer(c) * X ** i for i, c in enumerate(cs)), X)
    return sympy.discriminant(f) != 0


@settings(max_examples=1000, deadline=None)
@given(st.lists(coeff, min_size=4, max_size=4))
def test_ferrari_matches_numeric_oracle(low):
    cs = low + [1]
    assume(_squarefree(cs))
    with working_precision(DIGITS):
        roots = solve_polynomial(Polynomial(cs), DIGITS, FERRARI)
        assert _matches(roots, _oracle(cs), EPSILON)


@settings(max_examples=200, deadline=None)
@given(st.lists(coeff, min_size=4, max_size=4), st.integers(min_value=1, max_value=5))
def test_formula_a_matches_numeric_oracle(low, lead):
    cs = low + [lead]
    assume(_squarefree(cs))
    with working_precision(DIGITS):
        roots = solve_polynomial(Polynomial(cs), DIGITS, FORMULA_A)
        assert _matches(roots, _oracle(cs), EPSILON)


def test_numpy_agrees_at_double_precision():
    cs = [24, -50, 35, -10, 1]
    roots = sort_roots(solve_polynomial(Polynomial(cs), 20))
    assert np.allclose([float(z) for z in roots], sorted(np.roots(cs[::-1]).real, reverse=True))


def test_biquadratic_and_low_degree():
    roots = solve_polynomial(Polynomial([4, 0, -5, 0, 1]), 30)
    with working_precision(30):
        assert sorted(float(z) for z in roots) == pytest.approx([-2, -1, 1, 2])
    assert float(solve_polynomial(Polynomial([-3, 2]), 20)[0]) == pytest.approx(1.5)
    cube = solve_polynomial(Polynomial([-6, 11, -6, 1]), 30)
    assert sorted(float(z) for z in cube) == pytest.approx([1, 2, 3])
    with pytest.raises(DomainError):
        solve_polynomial(Polynomial([1]), 20)
    with pytest.raises(DomainError):
        solve_polynomial(Polynomial([1, 0, 0, 0, 0, 1]), 20)
    with pytest.raises(DomainError):
        solve_polynomial(Polynomial([1, 0, 0, 0, 1]), 20, method="laguerre")


def test_resolvent_root_squares_the_quadratic():
    dq = depress_quartic(Fraction(-10), Fraction(35), Fraction(-50), Fraction(24))
    assert dq.shift == Fraction(5, 2)
    c, d, e = resolvent_cubic(dq.C, dq.D, dq.E)
    with working_precision(DIGITS):
        f = Polynomial([e, d, c, 1])
        zetas = [z for z in solve_polynomial(f, DIGITS) if not isinstance(z, mpmath.mpc)]
        assert any(abs(resolvent_residual(dq.C, dq.D, dq.E, z)) < EPSILON for z in zetas)


def test_formula_a_constants_are_exact():
    sol = quartic_closed_form_A(Fraction(-10), Fraction(35), Fraction(-50), Fraction(24), DIGITS)
    assert isinstance(sol.constants["A"], Fraction)
    assert isinstance(sol.constants["B"], Fraction)
    assert max_residual(Polynomial([24, -50, 35, -10, 1]), sol.roots, DIGITS) < EPSILON


def test_sort_roots_order():
    with working_precision(20):
        roots = [mpmath.mpf(1), mpmath.mpc(-1, -2), mpmath.mpf(3), mpmath.mpc(-1, 2)]
        ordered = sort_roots(roots)
    assert ordered[:2] == [3, 1]
    assert ordered[2].imag > 0


@pytest.mark.parametrize("digits", [20, 40, 60])
@pytest.mark.parametrize("c0, root", [(-1, 1), (-16, 2)])
def test_formula_a_on_biquadratics(digits, c0, root):
    f = Polynomial([c0, 0, 0, 0, 1])
    roots = solve_polynomial(f, digits, FORMULA_A)
    with working_precision(digits):
        assert max_residual(f, roots, digits) < mpmath.mpf(10) ** (4 - digits) * root ** 4
        for expected in (root, -root, mpmath.mpc(0, root), mpmath.mpc(0, -root)):
            assert min(abs(z - expected) for z in roots) < mpmath.mpf(10) ** (2 - digits) * root


def test_formula_a_on_shifted_biquadratic():
    # (x - 1)^4 - 1 has a zero linear coefficient once depressed
    f = Polynomial([0, -4, 6, -4, 1])
    roots = solve_polynomial(f, 50, FORMULA_A)
    with working_precision(50):
        assert max_residual(f, roots, 50) < mpmath.mpf(10) ** -45
        assert sorted(float(z) for z in roots if not isinstance(z, mpmath.mpc)) == \
            pytest.approx([0, 2])
