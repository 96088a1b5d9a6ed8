"""All complex zeros of a coefficient polynomial, plus classical annulus bounds.

The solver is a simultaneous Ehrlich/Aberth iteration: every root estimate
takes a Newton step corrected by the repulsion of the other estimates.  The
variable is rescaled so the root moduli cluster near 1 before iterating,
which keeps polynomials whose coefficients span many orders of magnitude
well conditioned.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import (
    AllZeroPolynomial,
    ConstantPolynomial,
    MixedSignPattern,
    NonPositiveCoefficients,
)
from .seqcore import ArithmeticMode, ZPolynomial

# converged root sets must pass this normalized-residual cap
RESIDUAL_CAP = 1e-8

_GOLDEN = 0.6180339887498949


@dataclass(frozen=True)
class SolverConfig:
    """Stopping threshold, iteration budget and seed for initial placement."""

    tol: float = 1e-12
    max_iter: int = 200
    seed: int = 0

    def __post_init__(self):
        if not self.tol > 0:
            raise ValueError("tol must be positive")
        if self.max_iter < 1:
            raise ValueError("max_iter must be at least 1")


@dataclass(frozen=True)
class RootSet:
    """Solved zeros sorted by (real, imaginary), with solve diagnostics.

    Residuals are backward-error normalized: |p(root)| divided by the
    evaluation scale sum_k |a_k| |root|^k, so a residual near machine
    epsilon means the root is exact for a negligibly perturbed polynomial.
    """

    roots: tuple[complex, ...]
    residuals: tuple[float, ...]
    iterations: int
    converged: bool
    effective_degree: int
    stripped_high_zeros: int

    @property
    def moduli(self) -> tuple[float, ...]:
        return tuple(abs(z) for z in self.roots)


@dataclass(frozen=True)
class Annulus:
    r_min: float
    r_max: float

    def __post_init__(self):
        if not (0 < self.r_min <= self.r_max):
            raise ValueError("annulus needs 0 < r_min <= r_max")

    def contains(self, modulus: float, slack: float = 0.0) -> bool:
        return self.r_min - slack <= modulus <= self.r_max + slack


def _horner(coeffs: np.ndarray, w: np.ndarray) -> np.ndarray:
    acc = np.full_like(w, coeffs[-1])
    for c in coeffs[-2::-1]:
        acc = acc * w + c
    return acc


def _newton_polygon_radii(coeffs: np.ndarray) -> np.ndarray:
    """Per-root modulus estimates from the upper convex hull of (k, log|a_k|).

    Each hull segment from k1 to k2 contributes k2-k1 estimates at radius
    (|a_k1|/|a_k2|)^(1/(k2-k1)).  For a single log-linear coefficient decay
    this is one circle at the geometric mean of the root moduli; for
    strongly concave profiles (factorial decay, say) it spreads estimates
    over the whole modulus range, which is what keeps the simultaneous
    iteration from dropping duplicate estimates on one zero.
    """
    mags = np.abs(coeffs)
    ks = [k for k in range(coeffs.size) if mags[k] > 0]
    logm = {k: math.log(mags[k]) for k in ks}
    hull = [ks[0]]
    for k in ks[1:]:
        while len(hull) >= 2:
            k1, k2 = hull[-2], hull[-1]
            if (logm[k2] - logm[k1]) * (k - k2) <= (logm[k] - logm[k2]) * (k2 - k1):
                hull.pop()
            else:
                break
        hull.append(k)
    radii = np.empty(coeffs.size - 1)
    pos = 0
    for k1, k2 in zip(hull, hull[1:]):
        radii[pos : pos + (k2 - k1)] = math.exp((logm[k1] - logm[k2]) / (k2 - k1))
        pos += k2 - k1
    return radii


def _initial_points(coeffs: np.ndarray, seed: int, restart: bool) -> np.ndarray:
    d = coeffs.size - 1
    radii = _newton_polygon_radii(coeffs)
    phase = 3.0 / (2.0 * d) + 2.0 * math.pi * ((seed * _GOLDEN) % 1.0)
    if restart:
        radii = radii * 1.3
        phase += 0.9182736455463728
    # equal spacing within each radius group plus a golden-ratio spiral so
    # distinct groups never line up on a common ray
    angles = np.empty(d)
    start = 0
    while start < d:
        stop = start
        while stop < d and radii[stop] == radii[start]:
            stop += 1
        n_g = stop - start
        angles[start:stop] = (
            2.0 * math.pi * np.arange(n_g) / n_g
            + phase
            + 2.0 * math.pi * _GOLDEN * np.arange(start, stop)
        )
        start = stop
    return radii * np.exp(1j * angles)


def _aberth(coeffs: np.ndarray, cfg: SolverConfig, restart: bool) -> tuple[np.ndarray, int, bool]:
    """Simultaneous iteration on a polynomial with nonzero constant term."""
    d = coeffs.size - 1
    if d == 1:
        return np.array([-coeffs[0] / coeffs[1]]), 1, True

    # rescale so the geometric mean of the root moduli is 1
    r0 = (abs(coeffs[0]) / abs(coeffs[d])) ** (1.0 / d)
    r0 = min(max(r0, 1e-120), 1e120)
    scaled = coeffs * r0 ** np.arange(d + 1)
    scaled = scaled / np.abs(scaled).max()

    deriv = scaled[1:] * np.arange(1, d + 1)
    mags = np.abs(scaled)
    w = _initial_points(scaled, cfg.seed, restart)
    noise = 4.0 * np.finfo(float).eps
    for it in range(1, cfg.max_iter + 1):
        pv = _horner(scaled, w)
        dv = _horner(deriv, w)
        dv = np.where(dv == 0, 1e-300, dv)
        newton = np.where(pv == 0, 0.0, pv / dv)
        diff = w[:, None] - w[None, :]
        np.fill_diagonal(diff, np.inf)
        diff[diff == 0] = 1e-12  # collision guard; off-diagonal only
        repulsion = (1.0 / diff).sum(axis=1)
        denom = 1.0 - newton * repulsion
        step = np.where(np.abs(denom) > 1e-30, newton / denom, newton)
        w = w - step
        # a point is settled once its step is negligible or its value sits
        # at the evaluation noise floor (the only stop reachable for root
        # clusters, whose estimates jitter at the cluster radius forever)
        small_step = np.abs(step) <= cfg.tol * (1.0 + np.abs(w))
        if small_step.all():
            return w * r0, it, True
        at_floor = np.abs(_horner(scaled, w)) <= noise * _horner(mags, np.abs(w)).real
        if (small_step | at_floor).all():
            return w * r0, it, True
    return w * r0, cfg.max_iter, False


def _residuals(coeffs: np.ndarray, roots: list[complex]) -> tuple[float, ...]:
    out = []
    mags = np.abs(coeffs)
    for z in roots:
        val = abs(complex(_horner(coeffs, np.array([z]))[0]))
        scale = float(mags @ (abs(z) ** np.arange(coeffs.size)))
        out.append(val / scale if scale > 0 else 0.0)
    return tuple(out)


def _exact_newton_polish(exact_coeffs, roots: list[complex], passes: int = 2) -> list[complex]:
    """Newton-correct roots using exact rational polynomial evaluation.

    Floating Horner loses the large ill-conditioned roots of polynomials
    with alternating integer coefficients to catastrophic cancellation;
    evaluating p and p' over exact rationals at the (exactly represented)
    float point removes that error source entirely.  Corrections larger
    than 1e-3 relative are skipped: there the estimate sits in a root
    cluster where a plain Newton step is not trustworthy.
    """
    cs = [Fraction(c) if not isinstance(c, Fraction) else c for c in exact_coeffs]
    dcs = [k * c for k, c in enumerate(cs)][1:]

    def horner_exact(poly, re, im):
        ar, ai = poly[-1], Fraction(0)
        for c in reversed(poly[:-1]):
            ar, ai = ar * re - ai * im + c, ar * im + ai * re
        return ar, ai

    polished = []
    for z in roots:
        x = z
        for _ in range(passes):
            re, im = Fraction(x.real), Fraction(x.imag)
            pr, pi = horner_exact(cs, re, im)
            dr, di = horner_exact(dcs, re, im)
            dd = dr * dr + di * di
            if dd == 0:
                break
            cr = (pr * dr + pi * di) / dd
            ci = (pi * dr - pr * di) / dd
            corr = complex(float(cr), float(ci))
            if abs(corr) > 1e-3 * (1.0 + abs(x)):
                break
            x = complex(x.real - corr.real, x.imag - corr.imag)
        polished.append(x)
    return polished


def find_roots(p: ZPolynomial, cfg: SolverConfig = SolverConfig()) -> RootSet:
    """Solve for all zeros of p.

    High-order zero coefficients are stripped first (their count is
    recorded); zero coefficients at the constant end contribute exact roots
    at the origin.  On non-convergence one restart with perturbed initial
    placement is attempted before reporting converged=False.  Exact-mode
    input additionally gets an exact-arithmetic Newton polish, which rescues
    roots that floating evaluation alone cannot resolve.
    """
    coeffs = np.asarray([complex(c) for c in p.coeffs], dtype=complex)
    if coeffs.size == 0 or not coeffs.any():
        raise AllZeroPolynomial("cannot solve the zero polynomial")
    top = coeffs.size - 1
    while top > 0 and coeffs[top] == 0:
        top -= 1
    stripped = coeffs.size - 1 - top
    coeffs = coeffs[: top + 1]
    degree = top
    if degree == 0:
        raise ConstantPolynomial("degree-zero polynomial has no roots")

    nzero = 0
    while coeffs[nzero] == 0:
        nzero += 1
    roots: list[complex] = [0j] * nzero
    iterations = 0
    ok = True
    work = coeffs[nzero:]
    if work.size >= 2:
        w, iterations, ok = _aberth(work, cfg, restart=False)
        if not ok:
            w2, extra, ok = _aberth(work, cfg, restart=True)
            iterations += extra
            if ok:
                w = w2
        solved = [complex(v) for v in w]
        exact = list(p.coeffs[nzero : top + 1])
        if p.mode is ArithmeticMode.EXACT and all(
            isinstance(c, (int, Fraction)) for c in exact
        ):
            solved = _exact_newton_polish(exact, solved)
        roots.extend(solved)
    roots.sort(key=lambda z: (z.real, z.imag))
    residuals = _residuals(coeffs, roots)
    converged = ok and max(residuals, default=0.0) <= RESIDUAL_CAP
    return RootSet(
        roots=tuple(roots),
        residuals=residuals,
        iterations=iterations,
        converged=converged,
        effective_degree=degree,
        stripped_high_zeros=stripped,
    )


def _positive_coefficients(p: ZPolynomial) -> list[float]:
    vals = p.real_coefficients()
    if any(v <= 0 for v in vals):
        raise NonPositiveCoefficients("all coefficients must be strictly positive")
    return vals


def kakeya_annulus(p: ZPolynomial) -> Annulus:
    """Consecutive-ratio annulus containing all zeros of a positive-coefficient polynomial."""
    try:
        vals = _positive_coefficients(p)
    except ValueError as exc:
        raise NonPositiveCoefficients(str(exc)) from exc
    if len(vals) < 2:
        raise ConstantPolynomial("annulus bound needs degree at least 1")
    ratios = [vals[k] / vals[k + 1] for k in range(len(vals) - 1)]
    return Annulus(r_min=min(ratios), r_max=max(ratios))


def kakeya_signed(p: ZPolynomial) -> Annulus:
    """Annulus bound after sign normalization.

    Global negation and the substitution z -> -z preserve root moduli; if
    either (or both) turns the coefficients strictly positive, the plain
    annulus bound applies.
    """
    try:
        vals = p.real_coefficients()
    except ValueError as exc:
        raise NonPositiveCoefficients(str(exc)) from exc
    flipped = [v if k % 2 == 0 else -v for k, v in enumerate(vals)]
    for cand in (vals, [-v for v in vals], flipped, [-v for v in flipped]):
        if all(v > 0 for v in cand):
            if len(cand) < 2:
                raise ConstantPolynomial("annulus bound needs degree at least 1")
            ratios = [cand[k] / cand[k + 1] for k in range(len(cand) - 1)]
            return Annulus(r_min=min(ratios), r_max=max(ratios))
    raise MixedSignPattern("coefficients are neither positive nor alternating")
