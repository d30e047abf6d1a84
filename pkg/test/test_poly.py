from fractions import Fraction

import mpmath
import pytest
import sympy
from hypothesis import given, settings, strategies as st

from overtop.core.numeric import Surd2, working_precision
from overtop.core.poly import (Polynomial, format_poly_file, gcd, isolate_roots, parse_poly,
                               parse_poly_file, refine_root, root_bound, square_free_part,
                               sturm_count)
from overtop.errors import (DomainError, EndpointRootError, NoSignChangeError, ParseError,
                            ZeroDenominatorError)


EPSILON = 1e-30

X = sympy.Symbol("x")
small_ints = st.integers(min_value=-9, max_value=9)


def _sympy(f: Polynomial):
    return sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(f.coeffs)], X)


def test_arithmetic_and_normalization():
    f = Polynomial([1, 2, 0, 0])
    assert f.degree == 1
    assert Polynomial([0, 0]).is_zero
    g = Polynomial([-1, 1])
    assert f * g == Polynomial([-1, -1, 2])
    assert (f * g) // g == f
    assert (f * g) % g == Polynomial()
    assert g ** 3 == Polynomial([-1, 3, -3, 1])
    assert Polynomial([2, 4]).monic() == Polynomial([Fraction(1, 2), 1])
    assert Polynomial([1, 1]).mul_x(2) == Polynomial([0, 0, 1, 1])
    assert Polynomial([5, 3, 1]).derivative(2) == Polynomial([2])
    assert Polynomial([1, 0, 1])(Fraction(1, 2)) == Fraction(5, 4)
    with pytest.raises(DomainError):
        Polynomial().monic()


def test_surd_coefficients():
    p = Surd2(-1, 1)
    f = Polynomial([p ** 2, -2 * p, -1, 2 * p, 1])
    assert f.domain == "Surd2"
    assert f.is_exact
    assert f.derivative()[0] == -2 * p
    with working_precision(20):
        assert abs(f(mpmath.mpf("0.9476620415"))) < 1e-8


def test_str_form():
    assert str(Polynomial([-1, 0, 3])) == "3*x^2 - 1"
    assert str(Polynomial([0, -1])) == "-x"


def test_gcd_and_square_free():
    f = Polynomial.from_roots([1, 1, 2])
    g = Polynomial.from_roots([1, 3])
    assert gcd(f, g) == Polynomial([-1, 1])
    assert square_free_part(f).degree == 2
    with working_precision(20):
        with pytest.raises(DomainError):
            gcd(f.to_bigreal(), g)


@settings(max_examples=200)
@given(st.lists(small_ints, min_size=2, max_size=7))
def test_sturm_count_matches_sympy(coeffs):
    f = Polynomial(coeffs)
    if f.degree < 1:
        return
    bound = root_bound(f)
    expected = len(set(sympy.real_roots(_sympy(f))))
    assert sturm_count(f, -bound, bound) == expected


def test_sturm_count_endpoint_root():
    f = Polynomial.from_roots([0, 1])
    with pytest.raises(EndpointRootError) as info:
        sturm_count(f, 0, 2)
    assert info.value.point == 0
    with pytest.raises(DomainError):
        sturm_count(f, 2, 1)


def test_isolate_and_refine():
    f = Polynomial([-2, 0, 1]) * Polynomial([-3, 0, 1])
    iso = isolate_roots(f)
    assert len(iso.intervals) == 4
    assert not iso.multiplicity_note
    with working_precision(40):
        roots = [refine_root(f, b, 40) for b in iso.intervals]
        expected = sorted([-mpmath.sqrt(3), -mpmath.sqrt(2), mpmath.sqrt(2), mpmath.sqrt(3)])
        for x, y in zip(roots, expected):
            assert abs(x - y) < mpmath.mpf(10) ** -38
    assert isolate_roots(Polynomial.from_roots([1, 1])).multiplicity_note


def test_refine_without_sign_change():
    with pytest.raises(NoSignChangeError):
        refine_root(Polynomial([1, 0, 1]), (Fraction(-1), Fraction(1)), 20)


def test_parse_poly_file():
    text = "# family\nu: 2 -14 33 -38 40 -24 9\n\nw: 1 -4 0 14 -17 6  # trailing comment\n"
    entries = parse_poly_file(text)
    assert [name for name, _ in entries] == ["u", "w"]
    assert entries[0][1](Fraction(1, 3)) == 0
    assert format_poly_file(entries).splitlines()[0] == "u: 2 -14 33 -38 40 -24 9"
    assert parse_poly("q: 1/6 19/9")[1] == Polynomial([Fraction(1, 6), Fraction(19, 9)])


def test_parse_poly_errors():
    with pytest.raises(ZeroDenominatorError):
        parse_poly_file("u: 1 2/0")
    with pytest.raises(ParseError) as info:
        parse_poly_file("u: 1 2\nu: 3 4")
    assert info.value.line == 2
    with pytest.raises(ParseError):
        parse_poly("1 2 3")
    with pytest.raises(ParseError):
        parse_poly("u:")
