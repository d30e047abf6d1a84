import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from overtop.core.numeric import working_precision
from overtop.errors import DomainError
from overtop.sangaku.asymmetric import TriangleConfig, solve_asymmetric
from overtop.sangaku.oracle import (ORACLE_TOL, apex, bisector_and_c1, bisector_intercept_eps,
                                    c1_from_eps, cross_check, director_circle_check, frame_map,
                                    inversion_residual, tangency_discriminant, tangent_line,
                                    tangent_point_B, tangent_point_eps)


EPSILON = 1e-12

positive = st.floats(min_value=0.1, max_value=10)


@settings(max_examples=1000)
@given(positive, positive, st.floats(min_value=0.05, max_value=20))
def test_director_circle_identity(alpha, beta, m):
    with working_precision(20):
        xA, yA = apex(alpha, beta, m)
        assert director_circle_check(alpha, beta, xA, yA) < EPSILON * (alpha ** 2 + beta ** 2)
        for slope in (m, -1 / mpmath.mpf(m)):
            line = tangent_line(alpha, beta, slope)
            assert abs(line(xA) - yA) < EPSILON * max(1, abs(yA), abs(line.n))
            scale = (alpha * beta) ** 2 * (1 + line.m ** 2 + line.n ** 2)
            assert abs(tangency_discriminant(alpha, beta, line.m, line.n)) < EPSILON * scale


def test_eccentricity_forms_agree():
    with working_precision(30):
        eps, m, r = mpmath.mpf("0.97"), mpmath.mpf("0.4"), mpmath.mpf("0.23")
        beta = r / eps
        alpha = r / (eps * mpmath.sqrt(1 - eps ** 2))
        pb = tangent_point_B(alpha, beta, m)
        pe = tangent_point_eps(eps, m, r)
        assert max(abs(pb[0] - pe[0]), abs(pb[1] - pe[1])) < EPSILON
        bis = bisector_and_c1(alpha, beta, m, r)
        assert abs(bisector_intercept_eps(eps, m, r) - bis.intercept) < EPSILON
        c1 = c1_from_eps(eps, m, r)
        assert max(abs(c1[0] - bis.x1), abs(c1[1] - bis.y1)) < EPSILON
        # C1 lies on the bisector through the apex
        assert abs(bis.slope * bis.x1 + bis.intercept - bis.y1) < EPSILON
        assert abs(bis.slope * bis.xA + bis.intercept - bis.yA) < EPSILON


def test_frame_map_is_an_involution():
    with working_precision(20):
        A = (mpmath.mpf("0.3"), mpmath.mpf("1.7"))
        p = (mpmath.mpf("-2.5"), mpmath.mpf("4"))
        q = frame_map(frame_map(p, A), A)
        assert max(abs(q[0] - p[0]), abs(q[1] - p[1])) < EPSILON
        assert frame_map(A, A) == (0, 0)


def test_inversion_of_ellipse_points():
    with working_precision(20):
        alpha, beta = mpmath.mpf(2), mpmath.mpf(1)
        for t in (0.3, 1.1, 2.9):
            x, y = alpha * mpmath.cos(t), beta * mpmath.sin(t)
            assert inversion_residual(alpha, beta, x, y) < EPSILON
        assert inversion_residual(alpha, beta, 3, 3) > 1e-3
    with pytest.raises(DomainError):
        inversion_residual(alpha, beta, 0, 0)


def test_domain_errors():
    with pytest.raises(DomainError):
        apex(1, 0.5, 0)
    with pytest.raises(DomainError):
        bisector_and_c1(1, 0.5, 1, 0.1)
    with pytest.raises(DomainError):
        bisector_and_c1(1, 0.5, -2, 0.1)
    with pytest.raises(DomainError):
        tangent_line(-1, 0.5, 2)


def test_cross_check_worked_example(worked_report):
    check = cross_check(worked_report, digits=30)
    assert check.passed, check.to_dict()
    assert set(check.residuals) == {"apex", "director", "leg_c", "leg_b", "tangent_eps", "c1",
                                    "c1_eps", "bisector_eps", "inversion"}
    assert check.to_dict()["passed"]


def test_cross_check_right_isosceles():
    with working_precision(25):
        t = TriangleConfig.from_legs(2, 2)
    check = cross_check(solve_asymmetric(t, digits=25), digits=25)
    assert check.passed
    assert "c1" not in check.residuals


@settings(max_examples=100, deadline=None)
@given(st.floats(min_value=0.4, max_value=0.95))
def test_cross_check_random_triangles(ratio):
    with working_precision(25):
        t = TriangleConfig.from_legs(mpmath.mpf(ratio), 1)
    report = solve_asymmetric(t, tol=1e-12, digits=25)
    check = cross_check(report, ORACLE_TOL, digits=25)
    assert check.passed, check.to_dict()
