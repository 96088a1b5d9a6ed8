"""Coefficient-list polynomial arithmetic and truncated power-series tools.

Polynomials in z are plain tuples, lowest index first.  Entries may be
Fractions (exact mode) or complex numbers; the routines only assume ring
arithmetic.  A "t-series" is a list indexed by the power of t whose entries
are such z-polynomial tuples; it is the working representation for
generating-function coefficient extraction.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def zp_trim(p: Sequence) -> tuple:
    """Drop zero entries at the high end."""
    n = len(p)
    while n > 0 and p[n - 1] == 0:
        n -= 1
    return tuple(p[:n])


def zp_add(p: Sequence, q: Sequence) -> tuple:
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, v in enumerate(q):
        out[i] = out[i] + v
    return tuple(out)


def zp_neg(p: Sequence) -> tuple:
    return tuple(-v for v in p)


def zp_scale(p: Sequence, s) -> tuple:
    return tuple(s * v for v in p)


def zp_shift(p: Sequence, k: int = 1) -> tuple:
    """Multiply by z**k."""
    if not p:
        return ()
    zero = p[0] - p[0]
    return (zero,) * k + tuple(p)


def zp_mul(p: Sequence, q: Sequence) -> tuple:
    if not p or not q:
        return ()
    zero = p[0] - p[0]
    out = [zero] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] = out[i + j] + a * b
    return tuple(out)


def zp_eval(p: Sequence, z):
    """Horner evaluation; returns 0 for the empty polynomial."""
    if not p:
        return 0
    acc = p[-1]
    for c in reversed(p[:-1]):
        acc = acc * z + c
    return acc


def tseries_mul(A: Sequence[Sequence], B: Sequence[Sequence], n: int) -> list:
    """Product of two t-series truncated to t^0 .. t^(n-1)."""
    out = [() for _ in range(n)]
    for i, a in enumerate(A):
        if i >= n:
            break
        if not a:
            continue
        for j, b in enumerate(B):
            if i + j >= n:
                break
            if not b:
                continue
            out[i + j] = zp_add(out[i + j], zp_mul(a, b))
    return out


def tseries_inverse(D: Sequence[Sequence], n: int) -> list:
    """First n coefficients of 1/D(t) by Newton doubling.

    D[0] must be a nonzero constant z-polynomial.  Working over exact
    rationals this is an independent route to the same coefficients a
    defining recurrence produces, which is what makes it usable as an
    oracle.
    """
    if not D or not D[0] or len(zp_trim(D[0])) != 1:
        raise ValueError("series inversion needs an invertible constant term")
    d0 = D[0][0]
    one = d0 / d0
    X = [(one / d0,)]
    prec = 1
    while prec < n:
        prec = min(2 * prec, n)
        E = tseries_mul(D[:prec], X, prec)
        # T = 2 - D*X, then X <- X*T
        T = [zp_neg(e) for e in E]
        T[0] = zp_add(T[0], (one + one,))
        X = tseries_mul(X, T, prec)
    return [zp_trim(x) for x in X[:n]]


def as_fraction(x) -> Fraction:
    """Coerce ints, floats, strings and Fractions to an exact rational."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as a rational number")
