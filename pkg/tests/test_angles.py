from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from aerolam.angles import (
    angle,
    conjugate,
    double,
    format_angle,
    has_exact_period,
    orbit_type,
    parse_angle,
)


def test_double_examples():
    assert double(angle(3, 7)) == F(6, 7)
    assert double(angle(0)) == 0
    assert double(angle(5, 16)) == F(5, 8)


def test_conjugate_examples():
    assert conjugate(angle(2, 7)) == F(5, 7)
    assert conjugate(angle(0)) == 0
    assert conjugate(angle(19, 28)) == F(9, 28)


def test_orbit_type_examples():
    assert orbit_type(angle(3, 7)) == (0, 3)
    assert orbit_type(angle(1, 2)) == (1, 1)
    assert orbit_type(angle(5, 16)) == (4, 1)


def test_parse_and_format():
    assert parse_angle("3/7") == F(3, 7)
    assert format_angle(F(3, 7)) == "3/7"
    assert parse_angle("-1/7") == F(6, 7)  # normalized mod 1
    with pytest.raises(ValueError):
        parse_angle("0.25")


angles = st.fractions(min_value=0, max_value=1, max_denominator=10_000).map(
    lambda f: f % 1
)


@given(angles)
def test_double_commutes_with_conjugate(theta):
    assert double(conjugate(theta)) == conjugate(double(theta))


@given(st.integers(1, 12), st.integers(1, 10_000))
def test_mersenne_angles_are_periodic(n, j):
    theta = angle(j, (1 << n) - 1)
    pre, period = orbit_type(theta)
    assert pre == 0
    assert n % period == 0


@given(angles)
def test_eventual_periodicity(theta):
    pre, period = orbit_type(theta)
    t = theta
    for _ in range(pre):
        t = double(t)
    u = t
    for _ in range(period):
        u = double(u)
    assert u == t
    # minimality of the preperiod
    if pre > 0:
        t2 = theta
        for _ in range(pre - 1):
            t2 = double(t2)
        u2 = t2
        for _ in range(period):
            u2 = double(u2)
        assert u2 != t2


def test_exact_period_check():
    assert has_exact_period(angle(3, 7), 3)
    assert not has_exact_period(angle(3, 7), 6)
    assert not has_exact_period(angle(1, 2), 1)
