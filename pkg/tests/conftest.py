from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from stablegenus.knot_algebra import catalog, torus

settings.register_profile(
    "default", deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

TORUS_PAIRS = [(2, 3), (2, 5), (2, 7), (2, 11), (3, 5), (3, 7)]


def rationals(max_num: int = 12, max_den: int = 6):
    return st.builds(
        Fraction,
        st.integers(-max_num, max_num),
        st.integers(1, max_den),
    )


def unit_interval_rationals(max_den: int = 400):
    """Rationals strictly inside (0, 1)."""
    return st.integers(2, max_den).flatmap(
        lambda d: st.integers(1, d - 1).map(lambda n: Fraction(n, d))
    )


@pytest.fixture(scope="session")
def basis_t27_t211():
    return [torus(2, 7), torus(2, 11)]


@pytest.fixture(scope="session")
def basis_4d():
    return [catalog(n) for n in ("3_1", "5_1", "5_2", "6_2")]


@pytest.fixture(scope="session")
def basis_t37_t25():
    return [torus(3, 7), torus(2, 5)]
