"""Shared helpers for the test suite."""

from __future__ import annotations

import math
from fractions import Fraction

import pytest

from zlocus.seqcore import ArithmeticMode, ZPolynomial


def fm_poly(m: int) -> ZPolynomial:
    """(z-1)^m + z^m + (z+1)^m with exact integer coefficients."""
    c = [0] * (m + 1)
    for k in range(m + 1):
        b = math.comb(m, k)
        c[k] += b * ((-1) ** (m - k)) + b
    c[m] += 1
    return ZPolynomial(
        coeffs=tuple(Fraction(v) for v in c), m=m, mode=ArithmeticMode.EXACT
    )


def greedy_match_errors(got, want) -> list[float]:
    """Distance of each wanted root to its nearest unclaimed computed root."""
    avail = list(got)
    errs = []
    for wz in want:
        j = min(range(len(avail)), key=lambda i: abs(avail[i] - wz))
        errs.append(abs(avail.pop(j) - wz))
    return errs


@pytest.fixture(scope="session")
def inside_family():
    from zlocus.seqcore import QuadraticGF

    return QuadraticGF.from_coeffs(1, 1, -2)


@pytest.fixture(scope="session")
def outside_family():
    from zlocus.seqcore import QuadraticGF

    return QuadraticGF.from_coeffs(1, 5, 6)


@pytest.fixture(scope="session")
def conjecture_family():
    from zlocus.seqcore import QuadraticGF

    return QuadraticGF.from_coeffs(1, 1, 2)
