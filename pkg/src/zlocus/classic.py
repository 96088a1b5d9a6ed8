"""Classical generated sequences used as independent oracles and figures.

Each sequence is built two ways: by its defining recurrence and by a
Newton-style power-series inversion of the generating denominator, carried
out over exact rationals.  Any disagreement between the two constructions is
a build-breaking bug, so the builders raise instead of returning.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import InsufficientCoefficients, OracleMismatch
from .rootfind import Annulus, RootSet, SolverConfig, find_roots, kakeya_annulus
from .seqcore import ArithmeticMode, ZPolynomial
from .series import tseries_inverse, zp_add, zp_neg, zp_shift, zp_trim

REAL_ROOT_IMAG_TOL = 1e-8
CUBE_TERM_ZERO_BOUND = -4.0 / 27.0


class SequenceKind(Enum):
    CHEBYSHEV_U = "chebyshev_u"
    FIBONACCI = "fibonacci"
    EXP_TAYLOR = "exp_taylor"
    SQUARE_TERM = "square_term"
    CUBE_TERM = "cube_term"


@dataclass(frozen=True)
class NamedSequence:
    kind: SequenceKind
    M: int
    polys: tuple[ZPolynomial, ...]


def _wrap(kind: SequenceKind, polys: list[tuple]) -> NamedSequence:
    members = tuple(
        ZPolynomial(coeffs=p if p else (Fraction(0),), m=m, mode=ArithmeticMode.EXACT)
        for m, p in enumerate(polys)
    )
    return NamedSequence(kind=kind, M=len(polys) - 1, polys=members)


def _check_against_inverse(kind: SequenceKind, denom: list[tuple], polys: list[tuple]) -> None:
    """Compare a recurrence-built sequence with series inversion of its denominator."""
    extracted = tseries_inverse(denom, len(polys))
    for m, (got, want) in enumerate(zip(polys, extracted)):
        if zp_trim(got) != zp_trim(want):
            raise OracleMismatch(f"{kind.value}: constructions disagree at index {m}")


def chebyshev_u(M: int) -> NamedSequence:
    """Second-kind Chebyshev polynomials, recurrence vs extraction."""
    if M < 0:
        raise ValueError("M must be nonnegative")
    one = Fraction(1)
    polys: list[tuple] = [(one,)]
    if M >= 1:
        polys.append((Fraction(0), 2 * one))
    for _ in range(2, M + 1):
        nxt = zp_add(zp_shift(tuple(2 * v for v in polys[-1])), zp_neg(polys[-2]))
        polys.append(nxt)
    _check_against_inverse(
        SequenceKind.CHEBYSHEV_U,
        [(one,), (Fraction(0), Fraction(-2)), (one,)],
        polys,
    )
    return _wrap(SequenceKind.CHEBYSHEV_U, polys)


def fibonacci(M: int) -> list[int]:
    """Coefficients of t/(1 - t - t^2) through t^M, by series division."""
    if M < 0:
        raise ValueError("M must be nonnegative")
    num = [0, 1]
    den = [1, -1, -1]
    out: list[int] = []
    for m in range(M + 1):
        v = num[m] if m < len(num) else 0
        for j in range(1, min(m, len(den) - 1) + 1):
            v -= den[j] * out[m - j]
        out.append(v)  # den[0] == 1
    return out


def reciprocal_taylor_seq(f_coeffs, M: int) -> list[ZPolynomial]:
    """Coefficient-reversed truncations of a Taylor series.

    The m-th member is a_0 z^m + a_1 z^(m-1) + ... + a_m.  Each reversal is
    verified against a direct Cauchy-product extraction of f(t)/(1 - t z).
    """
    if M < 0:
        raise ValueError("M must be nonnegative")
    coeffs = list(f_coeffs)
    if len(coeffs) < M + 1:
        raise InsufficientCoefficients(
            f"need {M + 1} Taylor coefficients, got {len(coeffs)}"
        )
    exact = all(isinstance(v, (int, Fraction)) for v in coeffs)
    mode = ArithmeticMode.EXACT if exact else ArithmeticMode.FLOATING
    probes = (Fraction(2), Fraction(-3, 2)) if exact else (2.0 + 0j, -1.5 + 0.5j)
    out = []
    for m in range(M + 1):
        reversed_coeffs = tuple(coeffs[m - k] for k in range(m + 1))
        if not exact:
            reversed_coeffs = tuple(complex(v) for v in reversed_coeffs)
        member = ZPolynomial(coeffs=reversed_coeffs, m=m, mode=mode)
        # reciprocal property: member(z) == z^m * section(1/z) at z != 0
        for z in probes:
            section = sum(coeffs[k] * z ** (m - k) for k in range(m + 1))
            got = member(z)
            if exact:
                bad = got != section
            else:
                bad = abs(got - section) > 1e-9 * max(1.0, abs(section))
            if bad:
                raise OracleMismatch(f"reciprocal reversal disagrees at m={m}")
        out.append(member)
    return out


def square_term_sequence(M: int) -> NamedSequence:
    """Sequence generated by 1/(1 + t + z t^2); degree grows like m/2."""
    if M < 0:
        raise ValueError("M must be nonnegative")
    one = Fraction(1)
    polys: list[tuple] = [(one,)]
    if M >= 1:
        polys.append((-one,))
    for _ in range(2, M + 1):
        nxt = zp_add(zp_neg(polys[-1]), zp_neg(zp_shift(polys[-2])))
        polys.append(nxt)
    _check_against_inverse(
        SequenceKind.SQUARE_TERM, [(one,), (one,), (Fraction(0), one)], polys
    )
    return _wrap(SequenceKind.SQUARE_TERM, polys)


def square_term_zeros(m: int) -> list[float]:
    """All zeros of the m-th member, in closed trigonometric form.

    The admissible angles are k*pi/(m+1) inside (pi/2, pi); each maps to
    the real zero 1/(4 cos^2 theta) > 1/4, and there are exactly floor(m/2)
    of them, which by the degree bound is all of the zeros.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    zeros = []
    for k in range((m + 1) // 2 + 1, m + 1):
        theta = k * math.pi / (m + 1)
        c = math.cos(theta)
        zeros.append(1.0 / (4.0 * c * c))
    return sorted(zeros)


def cube_term_sequence(M: int) -> NamedSequence:
    """Sequence generated by 1/(1 + t + z t^3); degree grows like m/3."""
    if M < 0:
        raise ValueError("M must be nonnegative")
    one = Fraction(1)
    polys: list[tuple] = [(one,)]
    if M >= 1:
        polys.append((-one,))
    if M >= 2:
        polys.append((one,))
    for _ in range(3, M + 1):
        nxt = zp_add(zp_neg(polys[-1]), zp_neg(zp_shift(polys[-3])))
        polys.append(nxt)
    _check_against_inverse(
        SequenceKind.CUBE_TERM, [(one,), (one,), (), (Fraction(0), one)], polys
    )
    return _wrap(SequenceKind.CUBE_TERM, polys)


def cube_term_zero_check(M: int, cfg: SolverConfig = SolverConfig()) -> list[bool]:
    """Per-member check that every zero is real and below -4/27.

    Members of degree zero have no zeros and pass vacuously.
    """
    seq = cube_term_sequence(M)
    results = []
    for poly in seq.polys:
        if poly.degree < 1:
            results.append(True)
            continue
        rs = find_roots(poly.to_floating(), cfg)
        ok = rs.converged
        for z in rs.roots:
            if abs(z.imag) > REAL_ROOT_IMAG_TOL * (1.0 + abs(z)):
                ok = False
            if not z.real < CUBE_TERM_ZERO_BOUND + 1e-9:
                ok = False
        results.append(ok)
    return results


def exp_taylor_section(n: int) -> ZPolynomial:
    """Degree-n Taylor section of e^z with exact 1/k! coefficients."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    coeffs = []
    fact = 1
    for k in range(n + 1):
        if k > 1:
            fact *= k
        coeffs.append(Fraction(1, fact))
    return ZPolynomial(coeffs=tuple(coeffs), m=n, mode=ArithmeticMode.EXACT)


@dataclass(frozen=True)
class SzegoFigure:
    """Roots of one exponential Taylor section plus its annulus bound."""

    n: int
    roots: RootSet
    annulus: Annulus


def szego_demo(n: int, cfg: SolverConfig = SolverConfig()) -> SzegoFigure:
    """Solve the degree-n section of e^z; the annulus bound is [1, n]."""
    if n < 1:
        raise ValueError("n must be at least 1")
    section = exp_taylor_section(n)
    annulus = kakeya_annulus(section)
    rs = find_roots(section.to_floating(), cfg)
    return SzegoFigure(n=n, roots=rs, annulus=annulus)
