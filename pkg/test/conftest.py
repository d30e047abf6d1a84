import mpmath
import pytest

from overtop.sangaku.asymmetric import make_triangle, solve_asymmetric


WORKED_SIDES = ("2.8939431", "1.0591663", "2.6931530")
SOLVE_DIGITS = 30


@pytest.fixture(scope="session")
def worked_triangle():
    with mpmath.workdps(SOLVE_DIGITS):
        return make_triangle(*(mpmath.mpf(s) for s in WORKED_SIDES))


@pytest.fixture(scope="session")
def worked_report(worked_triangle):
    return solve_asymmetric(worked_triangle, tol=1e-10, digits=SOLVE_DIGITS)
