import mpmath
import pytest
from mpmath import mpf, workprec

from cotsums.hp import to_number

TOL_DEFAULT = mpf(2) ** -128
TOL_100 = mpf(2) ** -100


def residual(a, b, bits: int = 256) -> mpf:
    with workprec(bits + 16):
        return abs(to_number(a) - to_number(b))


def assert_close(a, b, tol=TOL_DEFAULT, bits: int = 256):
    r = residual(a, b, bits)
    assert r < tol, f"residual {mpmath.nstr(r, 8)} >= {mpmath.nstr(mpf(tol), 8)}"


@pytest.fixture(scope="session")
def hp_pi():
    with workprec(300):
        return +mpmath.pi
