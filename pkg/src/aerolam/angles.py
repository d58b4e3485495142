"""Exact arithmetic on the circle R/Z for the angle-doubling map.

Angles are plain ``fractions.Fraction`` values normalized into [0, 1).
Every rational angle is eventually periodic under doubling; the preperiod
is the 2-adic valuation of the denominator and the period is the
multiplicative order of 2 modulo the odd part.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

Angle = Fraction

HALF = Fraction(1, 2)


def angle(num, den=None) -> Angle:
    """Build an angle, reduced and normalized mod 1."""
    f = Fraction(num) if den is None else Fraction(num, den)
    return f % 1


def parse_angle(text: str) -> Angle:
    """Parse the ``num/den`` text form. Decimals are rejected."""
    text = text.strip()
    if "." in text:
        raise ValueError(f"decimal angle not accepted: {text!r}")
    if "/" in text:
        num, den = text.split("/", 1)
        return angle(int(num), int(den))
    return angle(int(text))


def format_angle(theta: Angle) -> str:
    return f"{theta.numerator}/{theta.denominator}"


def double(theta: Angle) -> Angle:
    """One step of the doubling map, 2*theta mod 1."""
    return (2 * theta) % 1


def conjugate(theta: Angle) -> Angle:
    """Reflect in the real axis: 1 - theta mod 1."""
    return (-theta) % 1


class OrbitType(NamedTuple):
    preperiod: int
    period: int


def orbit_type(theta: Angle, max_period: int = 1 << 20) -> OrbitType:
    """Minimal (preperiod, period) of ``theta`` under doubling.

    The denominator factors as 2^a * m with m odd; the preperiod is a and
    the period is the order of 2 mod m.
    """
    theta = theta % 1
    den = theta.denominator
    preperiod = 0
    while den % 2 == 0:
        den //= 2
        preperiod += 1
    m = den
    if m == 1:
        return OrbitType(preperiod, 1)
    period = 1
    x = 2 % m
    while x != 1:
        x = (2 * x) % m
        period += 1
        if period > max_period:
            raise ValueError(f"period of {theta} exceeds cap {max_period}")
    return OrbitType(preperiod, period)


def has_exact_period(theta: Angle, n: int) -> bool:
    """True iff theta is periodic with minimal period exactly n.

    Cheaper than ``orbit_type`` for large n: checks 2^n = 1 and
    2^(n/p) != 1 mod the odd denominator, for each prime p | n.
    """
    theta = theta % 1
    m = theta.denominator
    if m % 2 == 0 or pow(2, n, m) != 1:
        return False
    for p in _prime_factors(n):
        if pow(2, n // p, m) == 1:
            return False
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out
