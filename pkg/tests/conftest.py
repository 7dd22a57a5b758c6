import sys
from fractions import Fraction

import mpmath as mp
import pytest

from qplanewave.context import QContext

Q = Fraction(1, 2)
ALPHA = Fraction(3, 10)
BETA = Fraction(7, 10)


@pytest.fixture(scope="session")
def ctx():
    return QContext(Q)


def close(a, b, tol=mp.mpf(10) ** -30, scale=None):
    """|a - b| <= tol * max(|b|, scale or 0), or <= tol when both are tiny."""
    a, b = mp.mpmathify(a), mp.mpmathify(b)
    ref = max(abs(b), abs(mp.mpmathify(scale)) if scale is not None else 0)
    return abs(a - b) <= tol * (ref if ref != 0 else 1)


@pytest.fixture(autouse=True)
def test_digits():
    """Reference values built inside tests use 50 digits."""
    with mp.workdps(50):
        yield


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not getattr(mod, "RESULTS", None):
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
