"""Limit sets of zero sequences via exponential-sum dominance.

A sequence f_m(z) = sum_k alpha_k(z) * beta_k(z)^m has a well-defined limit
zero set characterized pointwise: z belongs to it iff either two beta's of
maximal modulus tie with nonvanishing alphas, or a unique dominant beta has
a vanishing alpha.  For the quadratic family that limit set is the circle
whose radius is the reciprocal modulus of the smaller denominator root, and
convergence toward it is measured here with a Hausdorff distance.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import (
    DegenerateQuadratic,
    EmptyRootSet,
    EqualModulusRoots,
    OracleMismatch,
    RepeatedRoot,
    SolverNonConvergence,
    WrongCase,
)
from .rootfind import RootSet, SolverConfig, find_roots
from .seqcore import QuadraticGF, expand_closed_form
from .series import zp_eval
from .theorems import predicted_radius
from .util import batch_map

DEFAULT_TIE_TOL = 1e-6
DEFAULT_CIRCLE_SAMPLES = 4096


@dataclass(frozen=True)
class ExpSumTerm:
    """One (alpha, beta) pair, each a low-degree coefficient tuple in z."""

    alpha: tuple[complex, ...]
    beta: tuple[complex, ...]


@dataclass(frozen=True)
class ExpSumForm:
    terms: tuple[ExpSumTerm, ...]

    def alpha(self, k: int, z: complex) -> complex:
        return complex(zp_eval(self.terms[k].alpha, z))

    def beta(self, k: int, z: complex) -> complex:
        return complex(zp_eval(self.terms[k].beta, z))

    def value(self, m: int, z: complex) -> complex:
        return sum(self.alpha(k, z) * self.beta(k, z) ** m for k in range(len(self.terms)))


class ClassificationReason(Enum):
    DOMINANT_TIE = "dominant_tie"
    DOMINANT_VANISHING_ALPHA = "dominant_vanishing_alpha"
    NOT_IN_SET = "not_in_set"


@dataclass(frozen=True)
class LimitClassification:
    in_limit: bool
    reason: ClassificationReason
    witness_indices: tuple[int, ...]


@dataclass(frozen=True)
class LimitReport:
    """Distances of zero sets to the predicted circle across an index ladder."""

    radius: float
    ms: tuple[int, ...]
    hausdorff: tuple[float, ...]
    radial_spread: tuple[float, ...]


def _numerator_value(t1: complex, t2: complex, m: int, z: complex) -> complex:
    return (
        t2 ** (m + 1)
        - t1 ** (m + 1)
        + (t1 ** (m + 2) - t2 ** (m + 2)) * z
        + (t2 - t1) * t1 ** (m + 1) * t2 ** (m + 1) * z ** (m + 2)
    )


def build_expsum(q: QuadraticGF) -> ExpSumForm:
    """Three-term exponential-sum form of the family's shared numerator.

    Requires two distinct nonzero real roots of different moduli; the
    equal-modulus (complex or b = 0) situation is exactly where the
    dominance classification breaks down, so it is rejected rather than
    silently misclassified.  The form is self-checked against the direct
    numerator before being returned.
    """
    if q.a == 0:
        raise DegenerateQuadratic("the exponential-sum form needs both roots")
    if q.discriminant == 0:
        raise RepeatedRoot("the exponential-sum form needs distinct roots")
    if q.discriminant < 0 or q.b == 0:
        raise EqualModulusRoots("equal-modulus roots break the dominance split")
    t1, t2 = q.t1_complex, q.t2_complex
    form = ExpSumForm(
        terms=(
            ExpSumTerm(alpha=(t2, -t2 * t2), beta=(t2,)),
            ExpSumTerm(alpha=(-t1, t1 * t1), beta=(t1,)),
            ExpSumTerm(alpha=(0j, 0j, t1 * t2 * t2 - t1 * t1 * t2), beta=(0j, t1 * t2)),
        )
    )
    rng = random.Random(987654321)
    for m in range(11):
        for _ in range(16):
            z = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
            want = _numerator_value(t1, t2, m, z)
            got = form.value(m, z)
            scale = max(1.0, abs(want))
            if abs(got - want) > 1e-9 * scale:
                raise OracleMismatch(
                    f"exponential-sum self-check failed at m={m}, z={z}"
                )
    return form


def sokal_classify(form: ExpSumForm, z: complex, tie_tol: float = DEFAULT_TIE_TOL) -> LimitClassification:
    """Pointwise membership test for the limit zero set.

    The exact conditions are equalities; tie_tol turns them into a relative
    tolerance on the beta moduli and an absolute one on the alpha moduli.
    """
    if not tie_tol > 0:
        raise ValueError("tie_tol must be positive")
    n = len(form.terms)
    betas = [abs(form.beta(k, z)) for k in range(n)]
    alphas = [abs(form.alpha(k, z)) for k in range(n)]
    order = sorted(range(n), key=lambda k: -betas[k])
    top = betas[order[0]]
    tied = [k for k in order if top - betas[k] <= tie_tol * top]
    live = [k for k in tied if alphas[k] > tie_tol]
    if len(live) >= 2:
        return LimitClassification(True, ClassificationReason.DOMINANT_TIE, tuple(live[:2]))
    if len(tied) == 1 and alphas[tied[0]] <= tie_tol:
        return LimitClassification(
            True, ClassificationReason.DOMINANT_VANISHING_ALPHA, (tied[0],)
        )
    return LimitClassification(False, ClassificationReason.NOT_IN_SET, ())


def limit_circle(q: QuadraticGF) -> float:
    """Radius of the predicted limit circle."""
    if q.a == 0 or q.b == 0 or q.c == 0 or q.discriminant <= 0:
        raise WrongCase("the limit circle needs a,b,c != 0 and two distinct real roots")
    return predicted_radius(q)


def hausdorff_to_circle(rs: RootSet, radius: float, circle_samples: int = DEFAULT_CIRCLE_SAMPLES) -> float:
    """Symmetric Hausdorff distance between a finite root set and a circle.

    Point-to-circle distances are analytic (||z| - radius|); the reverse
    direction samples the circle uniformly, so the result carries a
    sampling error of at most ~pi*radius/circle_samples.
    """
    if not rs.roots:
        raise EmptyRootSet("no roots to measure")
    if not radius > 0:
        raise ValueError("radius must be positive")
    if circle_samples < 64:
        raise ValueError("need at least 64 circle samples")
    pts = np.asarray(rs.roots, dtype=complex)
    to_circle = float(np.abs(np.abs(pts) - radius).max())
    ang = 2.0 * np.pi * np.arange(circle_samples) / circle_samples
    circ = radius * np.exp(1j * ang)
    to_roots = float(np.abs(circ[:, None] - pts[None, :]).min(axis=1).max())
    return max(to_circle, to_roots)


def radial_spread(rs: RootSet, radius: float) -> float:
    """Largest deviation of a root modulus from the target radius."""
    if not rs.roots:
        raise EmptyRootSet("no roots to measure")
    return max(abs(abs(z) - radius) for z in rs.roots)


def convergence_report(
    q: QuadraticGF,
    ms,
    cfg: SolverConfig = SolverConfig(),
    circle_samples: int = DEFAULT_CIRCLE_SAMPLES,
) -> LimitReport:
    """Hausdorff and radial-spread ladder toward the limit circle.

    Each computed root is cross-checked against the pointwise classifier:
    it must either classify into the limit set or sit within twice the
    Hausdorff distance of the circle.
    """
    ms = tuple(int(m) for m in ms)
    radius = limit_circle(q)
    form = build_expsum(q)
    if not ms:
        return LimitReport(radius=radius, ms=(), hausdorff=(), radial_spread=())
    polys = expand_closed_form(q, max(ms))

    def one(m: int) -> tuple[float, float]:
        rs = find_roots(polys[m].to_floating(), cfg)
        if not rs.converged:
            raise SolverNonConvergence(f"root solve did not converge at m={m}")
        h = hausdorff_to_circle(rs, radius, circle_samples)
        for z in rs.roots:
            cls = sokal_classify(form, z)
            if not cls.in_limit and abs(abs(z) - radius) > 2.0 * h:
                raise OracleMismatch(
                    f"root {z} at m={m} is neither classified in the limit set "
                    "nor near the circle"
                )
        return h, radial_spread(rs, radius)

    results = batch_map(one, list(ms))
    return LimitReport(
        radius=radius,
        ms=ms,
        hausdorff=tuple(r[0] for r in results),
        radial_spread=tuple(r[1] for r in results),
    )
