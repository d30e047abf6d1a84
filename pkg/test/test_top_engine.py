from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from overtop.core.numeric import working_precision
from overtop.core.poly import Polynomial, parse_poly_file
from overtop.errors import (AmbiguousRootError, DegreeMismatchError, DomainError,
                            NoCommonRootError, SelectionError)
from overtop.top.engine import (LOP1, TOP, OverlapSpec, lop1_delta, monic_transform,
                                reduce_chain, shared_root, top_delta)


EPSILON = 1e-12

WORKED = """
u: 2 -14 33 -38 40 -24 9
v: -21 67 10 -70 11 3
w: 1 -4 0 14 -17 6
"""


def _worked():
    return [OverlapSpec(p, 1, name) for name, p in parse_poly_file(WORKED)]


def test_monic_transform():
    assert monic_transform(Polynomial([3, 6])) == Polynomial([Fraction(1, 2), 1])
    with pytest.raises(DomainError):
        monic_transform(Polynomial())


def test_lop1_needs_equal_degrees():
    with pytest.raises(DegreeMismatchError):
        lop1_delta(Polynomial([1, 1]), Polynomial([1, 0, 1]))
    S = Polynomial.from_roots([2, 5])
    T = Polynomial.from_roots([2, 7], lead=3)
    d = lop1_delta(S, T)
    assert d.degree == 1
    assert d(2) == 0


def test_top_delta_multiplicity():
    # both vanish twice at 1, so one derivative keeps the root
    S = OverlapSpec(Polynomial.from_roots([1, 1, 4, -2]), 2, "S")
    T = OverlapSpec(Polynomial.from_roots([1, 1, 3]), 2, "T")
    d = top_delta(S, T)
    assert d.degree <= 2
    assert d(1) == 0
    with pytest.raises(DomainError):
        top_delta(OverlapSpec(Polynomial([1, 1]), 3), T)


def test_worked_example_quintic():
    u, v, w = (s.poly for s in _worked())
    trace = reduce_chain(_worked())
    first = trace.steps[0]
    assert first.op == TOP
    assert first.name == "u•w"
    expected = Polynomial([Fraction(2, 9), Fraction(-31, 18), Fraction(13, 3), Fraction(-38, 9),
                           Fraction(19, 9), Fraction(1, 6)])
    assert first.result == expected
    assert first.result == u.monic() - w.mul_x().monic()


def test_worked_example_levels():
    trace = reduce_chain(_worked())
    third = Fraction(1, 3)
    degrees = [s.result_degree for s in trace.steps]
    assert degrees[:4] == [5, 4, 4, 4]
    assert [s.op for s in trace.steps[1:4]] == [LOP1] * 3
    for step in trace.steps:
        assert step.result.is_zero or step.result(third) == 0
    assert trace.terminal.degree == 3
    assert trace.null_detected
    assert trace.to_dict()["terminal"]["degree"] == 3


def test_worked_example_shared_root():
    found = shared_root(_worked())
    assert found.root == Fraction(1, 3)
    assert found.exact
    assert found.describe() == "x = 1/3 (exact)"
    with working_precision(30):
        others = sorted(mpmath.mpf(c.candidate) for c in found.certificate
                        if c.candidate != Fraction(1, 3))
        s = mpmath.sqrt(86633)
        assert abs(others[0] - (-s - 95) / 218) < EPSILON
        assert abs(others[1] - (s - 95) / 218) < EPSILON


def test_shared_root_filter_and_ambiguity():
    f = Polynomial.from_roots([1, 2, 5])
    g = Polynomial.from_roots([1, 2, -3], lead=2)
    with pytest.raises(AmbiguousRootError) as info:
        shared_root([f, g])
    assert sorted(info.value.candidates) == [1, 2]
    assert shared_root([f, g], select=(Fraction(3, 2), 3)).root == 2
    assert shared_root([f, g], select=lambda x: x < Fraction(3, 2)).root == 1
    with pytest.raises(SelectionError):
        shared_root([f, g], select=(10, 11))


def test_no_common_root():
    with pytest.raises(NoCommonRootError):
        reduce_chain([Polynomial.from_roots([1, 2]), Polynomial.from_roots([3, 4])])


def test_bigreal_family_reaches_plateau():
    with working_precision(40):
        r = mpmath.sqrt(2)
        f = Polynomial([-r, 1]) * Polynomial([1, 0, 1])
        g = Polynomial([-r, 1]) * Polynomial([5, 1])
        found = shared_root([f, g], digits=40)
        assert abs(found.root - r) < mpmath.mpf(10) ** -30
        assert not found.exact


@settings(max_examples=1000, deadline=None)
@given(st.fractions(min_value=-5, max_value=5, max_denominator=7),
       st.lists(st.lists(st.integers(-6, 6), min_size=2, max_size=4), min_size=2, max_size=3))
def test_reduction_preserves_root(root, cofactors):
    lin = Polynomial([-root, 1])
    family = []
    for i, cs in enumerate(cofactors):
        q = Polynomial(cs + [i + 1])
        family.append(OverlapSpec(lin * q, 1, "p{}".format(i)))
    try:
        trace = reduce_chain(family)
    except NoCommonRootError:
        pytest.fail("constructed family lost its shared root")
    for step in trace.steps:
        assert step.result.is_zero or step.result(root) == 0


@settings(max_examples=500, deadline=None)
@given(st.fractions(min_value=-4, max_value=4, max_denominator=5),
       st.integers(min_value=1, max_value=3),
       st.lists(st.integers(-5, 5), min_size=1, max_size=3),
       st.lists(st.integers(-5, 5), min_size=1, max_size=3))
def test_top_delta_keeps_root_and_bounds_degree(root, mu, low_s, low_t):
    base = Polynomial([-root, 1]) ** mu
    S = base * Polynomial(low_s + [2])
    T = base * Polynomial(low_t + [3])
    if S.degree < T.degree:
        S, T = T, S
    d = top_delta(OverlapSpec(S, mu, "S"), OverlapSpec(T, mu, "T"))
    assert d.is_zero or d(root) == 0
    assert d.is_zero or d.degree <= S.degree - mu


def test_chain_levels_respect_width():
    third = Fraction(1, 3)
    family = [OverlapSpec(Polynomial.from_roots([third] + list(range(3 * i + 2, 3 * i + 2 + d))),
                          1, "p{}".format(i))
              for i, d in enumerate([3, 3, 3, 3, 2, 4, 4, 3])]
    trace = reduce_chain(family, max_width=2)
    assert all(len(level) <= 2 for level in trace.levels[1:])
    for step in trace.steps:
        assert step.result.is_zero or step.result(third) == 0
    again = reduce_chain(list(reversed(family)), max_width=2)
    assert again.levels[1:] == trace.levels[1:]
    with pytest.raises(DomainError):
        reduce_chain(family, max_width=0)


def test_equal_root_sums_drop_an_extra_degree():
    # cofactor roots 2+7 and 4+5 share a sum, so the x^2 terms cancel as well
    S = Polynomial.from_roots([1, 2, 7])
    T = Polynomial.from_roots([1, 4, 5], lead=4)
    d = lop1_delta(S, T)
    assert d.degree < S.degree - 1
    assert d(1) == 0
    U = Polynomial.from_roots([1, 3, 7])
    assert lop1_delta(S, U).degree == S.degree - 1
