"""Expansion of 1/((a t^2 + b t + c)(1 - t z)) into a polynomial sequence.

Two independent routes produce the m-th polynomial of the sequence: a
three-term recurrence carried out in exact rational arithmetic, and a closed
form built from the roots of the quadratic denominator.  Keeping both routes
exact where possible is the whole point -- the algebraic identities underlying
the closed form hold exactly, and floating point alone cannot tell an identity
failure from round-off.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Union

from .errors import (
    DegenerateQuadratic,
    RepeatedRoot,
    ZeroConstantTerm,
    ZeroProduct,
    ZeroRoot,
    ZeroScale,
)
from .series import as_fraction, zp_add, zp_scale, zp_shift

Coeff = Union[Fraction, complex]


class ArithmeticMode(Enum):
    EXACT = "exact"
    FLOATING = "floating"


def _rational_sqrt(x: Fraction) -> Fraction | None:
    """Exact square root of a nonnegative rational, or None if irrational."""
    if x < 0:
        return None
    n, d = x.numerator, x.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def _arg_tau(z: complex) -> float:
    """Argument normalized to [0, 2*pi) for modulus tie-breaking."""
    a = cmath.phase(z)
    return a if a >= 0.0 else a + 2.0 * math.pi


def _ordered_roots(a: Fraction, b: Fraction, c: Fraction, disc: Fraction):
    """Both roots of a t^2 + b t + c, smaller modulus first.

    Rational roots stay exact Fractions.  Equal moduli are ordered by
    argument in [0, 2*pi), which puts a positive real root before its
    negative twin and the positive-imaginary member of a conjugate pair
    first.
    """
    s = _rational_sqrt(disc) if disc >= 0 else None
    if s is not None:
        r1 = (-b + s) / (2 * a)
        r2 = (-b - s) / (2 * a)
        key = lambda r: (abs(r), 0.0 if r > 0 else math.pi)
        lo, hi = sorted((r1, r2), key=key)
        return lo, hi
    af, bf, cf = float(a), float(b), float(c)
    if disc > 0:
        sd = math.sqrt(float(disc))
        # stable form: avoid cancellation in -b + sqrt(disc)
        qq = -(bf + math.copysign(sd, bf)) / 2.0
        r1, r2 = complex(qq / af), complex(cf / qq)
    else:
        sq = cmath.sqrt(complex(float(disc)))
        r1 = (-bf + sq) / (2.0 * af)
        r2 = (-bf - sq) / (2.0 * af)
    lo, hi = sorted((r1, r2), key=lambda r: (abs(r), _arg_tau(r)))
    return lo, hi


@dataclass(frozen=True)
class QuadraticGF:
    """Denominator data a t^2 + b t + c with derived roots.

    Coefficients are stored as exact rationals.  t1 and t2 are the roots
    ordered by modulus (|t1| <= |t2|); they are Fractions when the
    discriminant is a rational square and complex floats otherwise.  When
    a == 0 there are no quadratic roots and t1/t2 are None; only the
    recurrence expansion accepts such denominators.
    """

    a: Fraction
    b: Fraction
    c: Fraction
    t1: Coeff | None
    t2: Coeff | None
    discriminant: Fraction

    @classmethod
    def from_coeffs(cls, a, b, c) -> "QuadraticGF":
        a, b, c = as_fraction(a), as_fraction(b), as_fraction(c)
        if c == 0:
            raise ZeroConstantTerm("constant term c must be nonzero")
        disc = b * b - 4 * a * c
        t1 = t2 = None
        if a != 0:
            t1, t2 = _ordered_roots(a, b, c, disc)
        return cls(a=a, b=b, c=c, t1=t1, t2=t2, discriminant=disc)

    @property
    def has_rational_roots(self) -> bool:
        return isinstance(self.t1, Fraction)

    @property
    def t1_complex(self) -> complex:
        if self.t1 is None:
            raise DegenerateQuadratic("a = 0: no quadratic roots")
        return complex(self.t1)

    @property
    def t2_complex(self) -> complex:
        if self.t2 is None:
            raise DegenerateQuadratic("a = 0: no quadratic roots")
        return complex(self.t2)


def quad_roots(q: QuadraticGF) -> tuple[Coeff, Coeff]:
    """Both denominator roots ordered by modulus."""
    if q.a == 0:
        raise DegenerateQuadratic("a = 0 has no pair of quadratic roots")
    return q.t1, q.t2


@dataclass(frozen=True)
class ZPolynomial:
    """One member of an expanded sequence, as coefficients of z^k.

    For the quadratic family the length is always m+1 and the top
    coefficient equals 1/c; other generated families (built in the classic
    module) carry their natural, shorter length.
    """

    coeffs: tuple[Coeff, ...]
    m: int
    mode: ArithmeticMode

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a ZPolynomial needs at least one coefficient")

    @property
    def degree(self) -> int:
        """Effective degree: index of the last nonzero coefficient (-1 if all zero)."""
        for k in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[k] != 0:
                return k
        return -1

    def __call__(self, z):
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * z + c
        return acc

    def to_floating(self) -> "ZPolynomial":
        if self.mode is ArithmeticMode.FLOATING:
            return self
        return ZPolynomial(
            coeffs=tuple(complex(c) for c in self.coeffs),
            m=self.m,
            mode=ArithmeticMode.FLOATING,
        )

    def real_coefficients(self) -> list[float]:
        """Coefficients as floats; raises if any has an imaginary part."""
        out = []
        for c in self.coeffs:
            if isinstance(c, complex):
                if c.imag != 0.0:
                    raise ValueError("polynomial has non-real coefficients")
                out.append(c.real)
            else:
                out.append(float(c))
        return out


def expand_recurrence(q: QuadraticGF, M: int) -> list[ZPolynomial]:
    """Expand the generating function by its three-term recurrence.

    Produces the sequence members for m = 0..M in exact rational
    arithmetic.  Degenerate denominators (a = 0, or a = b = 0) are fine
    here: the recurrence collapses to the corresponding shorter one, and
    for a = b = 0 the result is the geometric-series expansion z^m / c.
    """
    if q.c == 0:
        raise ZeroConstantTerm("constant term c must be nonzero")
    if M < 0:
        raise ValueError("M must be nonnegative")
    a, b, c = q.a, q.b, q.c
    inv_c = 1 / c
    seq: list[tuple[Fraction, ...]] = [(inv_c,)]
    if M >= 1:
        seq.append((-b / c**2, inv_c))
    for m in range(2, M + 1):
        # P_m = (a z P_{m-3} - (a - b z) P_{m-2} - (b - c z) P_{m-1}) / c,
        # the m = 2 case riding on 'P_{-1} = 0'
        pm1, pm2 = seq[m - 1], seq[m - 2]
        acc = zp_add(zp_scale(pm2, -a), zp_shift(zp_scale(pm2, b)))
        acc = zp_add(acc, zp_add(zp_scale(pm1, -b), zp_shift(zp_scale(pm1, c))))
        if m >= 3 and a != 0:
            acc = zp_add(acc, zp_shift(zp_scale(seq[m - 3], a)))
        p = zp_scale(acc, inv_c)
        if len(p) < m + 1:
            p = p + (Fraction(0),) * (m + 1 - len(p))
        seq.append(p)
    return [ZPolynomial(coeffs=p, m=m, mode=ArithmeticMode.EXACT) for m, p in enumerate(seq)]


def expand_closed_form(q: QuadraticGF, M: int) -> list[ZPolynomial]:
    """Expand via the explicit root-power formula.

    Exact when both roots are rational, complex floating otherwise.  The
    formula needs two distinct nonzero roots, so degenerate and
    repeated-root denominators are rejected.
    """
    if q.a == 0:
        raise DegenerateQuadratic("closed form needs a nonzero leading coefficient")
    if q.discriminant == 0:
        raise RepeatedRoot("closed form needs distinct roots")
    if M < 0:
        raise ValueError("M must be nonnegative")
    exact = q.has_rational_roots
    if exact:
        t1, t2, a = q.t1, q.t2, q.a
        mode = ArithmeticMode.EXACT
    else:
        t1, t2, a = q.t1_complex, q.t2_complex, complex(q.a)
        mode = ArithmeticMode.FLOATING
    if t1 == 0 or t2 == 0:
        raise ZeroRoot("closed form needs nonzero roots")

    one = t1 / t1
    pw1, pw2 = [one], [one]
    for _ in range(M + 2):
        pw1.append(pw1[-1] * t1)
        pw2.append(pw2[-1] * t2)

    out = []
    for m in range(M + 1):
        denom = a * (t2 - t1) * pw1[m + 1] * pw2[m + 1]
        coeffs = tuple(
            (pw2[m + 1 - k] - pw1[m + 1 - k]) * pw1[k] * pw2[k] / denom
            for k in range(m + 1)
        )
        if not exact and any(
            not (math.isfinite(v.real) and math.isfinite(v.imag)) for v in coeffs
        ):
            raise OverflowError(f"closed-form coefficients overflow at m={m}")
        out.append(ZPolynomial(coeffs=coeffs, m=m, mode=mode))
    return out


def factorization_identity_residual(t1, t2, m: int, z) -> Coeff:
    """LHS minus RHS of the numerator factorization identity.

    The four-term numerator t2^(m+1) - t1^(m+1) + (t1^(m+2) - t2^(m+2)) z
    + (t2-t1) (t1 t2)^(m+1) z^(m+2) factors as the closed-form coefficient
    sum times (t1 z - 1)(t2 z - 1).  With Fraction inputs the return value
    is exactly zero; with floats it measures accumulated round-off.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    exact = all(isinstance(v, (int, Fraction)) for v in (t1, t2, z))
    if not exact:
        t1, t2, z = complex(t1), complex(t2), complex(z)
    one = Fraction(1) if exact else (1 + 0j)
    pw1, pw2, pwz = [one], [one], [one]
    for _ in range(m + 2):
        pw1.append(pw1[-1] * t1)
        pw2.append(pw2[-1] * t2)
        pwz.append(pwz[-1] * z)
    lhs = (
        pw2[m + 1]
        - pw1[m + 1]
        + (pw1[m + 2] - pw2[m + 2]) * z
        + (t2 - t1) * pw1[m + 1] * pw2[m + 1] * pwz[m + 2]
    )
    s = sum(
        (pw2[m + 1 - k] - pw1[m + 1 - k]) * pw1[k] * pw2[k] * pwz[k]
        for k in range(m + 1)
    )
    rhs = s * (t1 * z - 1) * (t2 * z - 1)
    return lhs - rhs


def verify_scaling(q: QuadraticGF, r, M: int) -> list[float]:
    """Deviation profile of the variable-rescaling law.

    Expands both the original denominator and its r-rescaled version
    independently and returns, for each m, the largest normalized
    coefficient deviation between r^m * H_m(z) and P_m(r z).  Exact zero
    when both expansions run over rationals.
    """
    r = as_fraction(r)
    if r == 0:
        raise ZeroScale("scale factor r must be nonzero")
    scaled = QuadraticGF.from_coeffs(q.a / r**2, q.b / r, q.c)
    base = expand_closed_form(q, M)
    resc = expand_closed_form(scaled, M)
    devs = []
    rf = complex(r)
    for m in range(M + 1):
        rm = rf**m
        lhs = [rm * complex(v) for v in resc[m].coeffs]
        rhs = []
        rk = 1.0 + 0j
        for v in base[m].coeffs:
            rhs.append(complex(v) * rk)
            rk *= rf
        scale = max(1.0, max(abs(v) for v in lhs + rhs))
        devs.append(max(abs(x - y) for x, y in zip(lhs, rhs)) / scale)
    return devs


def normalize(q: QuadraticGF) -> tuple[QuadraticGF, float]:
    """Reduce to the unit-constant-term denominator of the rescaling law.

    Returns the normalized quadratic (ac/|ac|, b/sqrt|ac|, 1) together with
    the positive factor sqrt|ac| / |c| that carries zeros of the normalized
    sequence to zeros of the original one (up to the reflection z -> -z
    when c < 0; moduli are unaffected either way).
    """
    if q.a == 0:
        raise ZeroProduct("normalization needs a*c != 0")
    ac = q.a * q.c
    sign = Fraction(1) if ac > 0 else Fraction(-1)
    s = _rational_sqrt(abs(ac))
    if s is not None:
        nq = QuadraticGF.from_coeffs(sign, q.b / s, 1)
        factor = float(s / abs(q.c))
    else:
        sf = math.sqrt(abs(float(ac)))
        nq = QuadraticGF.from_coeffs(sign, float(q.b) / sf, 1)
        factor = sf / abs(float(q.c))
    return nq, factor
