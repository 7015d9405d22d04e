import pytest

from zetaline.primes import build_mangoldt
from zetaline.quadrature import QuadratureSpec
from zetaline.zeros import scan_zeros
from zetaline.zeta import build_line_cache


@pytest.fixture(scope="session")
def zeros210():
    return scan_zeros(210.0)


@pytest.fixture(scope="session")
def cache210(zeros210):
    # sparse export grid; quadrature evaluates points directly anyway
    return build_line_cache(zeros210, spacing=0.5)


@pytest.fixture(scope="session")
def mangoldt1e5():
    return build_mangoldt(10**5)


@pytest.fixture(scope="session")
def spec200():
    return QuadratureSpec(truncation_T=200.0)
