"""Case classification and disk-containment verdicts for the quadratic family.

The parameter space of (a, b, c) splits into four regimes.  When a*c < 0
(and b != 0) every zero of every sequence member lies in the closed disk of
radius 1/|t1|; when a*c > 0 with positive discriminant no zero enters that
disk.  Complex denominator roots fall under an unproven conjecture and are
only explorable, never asserted.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import (
    DegenerateQuadratic,
    ExclusionThresholdNotFound,
    SolverNonConvergence,
    WrongCase,
    ZeroRoot,
)
from .rootfind import RootSet, SolverConfig, find_roots
from .seqcore import QuadraticGF, expand_closed_form
from .util import batch_map

# root-solver noise near the boundary scales with the radius
BOUNDARY_RTOL = 1e-7


class TheoremCase(Enum):
    INSIDE_CLOSED_DISK = "inside_closed_disk"
    OUTSIDE_CLOSED_DISK = "outside_closed_disk"
    CONJECTURE_COMPLEX_ROOTS = "conjecture_complex_roots"
    DEGENERATE = "degenerate"


def classify_case(q: QuadraticGF) -> TheoremCase:
    """Deterministic tag; the four tags partition parameter space."""
    ac = q.a * q.c
    if ac == 0:
        return TheoremCase.DEGENERATE
    if ac < 0:
        if q.b != 0:
            return TheoremCase.INSIDE_CLOSED_DISK
        return TheoremCase.DEGENERATE
    if q.discriminant > 0:
        return TheoremCase.OUTSIDE_CLOSED_DISK
    return TheoremCase.CONJECTURE_COMPLEX_ROOTS


def predicted_radius(q: QuadraticGF) -> float:
    """Reciprocal modulus of the smaller denominator root."""
    if q.a == 0:
        raise DegenerateQuadratic("radius needs both quadratic roots")
    if q.t1 == 0 or q.t2 == 0:
        raise ZeroRoot("radius needs nonzero roots")
    if isinstance(q.t1, Fraction):
        return float(1 / abs(q.t1))
    return 1.0 / abs(q.t1)


@dataclass(frozen=True)
class DiskVerdict:
    """Containment result for one sequence member.

    margin is the signed distance of the extremal root modulus from the
    boundary: positive means the claim holds with room to spare.
    """

    m: int
    predicted_radius: float
    min_modulus: float
    max_modulus: float
    satisfied: bool
    margin: float

    # the exclusion statement has a weak and a strict reading; report both
    # instead of picking one (strictness resolved at 1e-9 relative)
    @property
    def outside_open_ball(self) -> bool:
        return self.min_modulus >= self.predicted_radius * (1.0 - BOUNDARY_RTOL)

    @property
    def outside_closed_disk(self) -> bool:
        return self.min_modulus > self.predicted_radius * (1.0 + 1e-9)


def _solve_member(poly, cfg: SolverConfig) -> RootSet:
    rs = find_roots(poly.to_floating(), cfg)
    if not rs.converged:
        raise SolverNonConvergence(f"root solve did not converge at m={poly.m}")
    return rs


def _verdict(m: int, rs: RootSet, radius: float, inside: bool) -> DiskVerdict:
    moduli = rs.moduli
    lo, hi = min(moduli), max(moduli)
    tol = BOUNDARY_RTOL * radius
    if inside:
        satisfied = hi <= radius + tol
        margin = radius - hi
    else:
        satisfied = lo > radius - tol
        margin = lo - radius
    return DiskVerdict(
        m=m,
        predicted_radius=radius,
        min_modulus=lo,
        max_modulus=hi,
        satisfied=satisfied,
        margin=margin,
    )


def verify_disk(q: QuadraticGF, M: int, cfg: SolverConfig = SolverConfig()) -> list[DiskVerdict]:
    """Containment verdicts for m = 1..M.

    Only valid in the two proven regimes; a failed verdict there is a
    build-breaking finding, so callers should treat any satisfied=False
    entry as an error, not a warning.
    """
    case = classify_case(q)
    if case not in (TheoremCase.INSIDE_CLOSED_DISK, TheoremCase.OUTSIDE_CLOSED_DISK):
        raise WrongCase(f"disk verdicts do not apply to {case.value}")
    if M < 1:
        return []
    radius = predicted_radius(q)
    inside = case is TheoremCase.INSIDE_CLOSED_DISK
    polys = expand_closed_form(q, M)

    def one(m: int) -> DiskVerdict:
        return _verdict(m, _solve_member(polys[m], cfg), radius, inside)

    return batch_map(one, list(range(1, M + 1)))


def midpoint_exclusion(
    q: QuadraticGF, M: int, cfg: SolverConfig = SolverConfig()
) -> tuple[int, list[DiskVerdict]]:
    """Eventual exclusion ball of radius (1/|t1| + 1/|t2|)/2.

    For distinct real nonzero roots, no sequence member beyond some finite
    index has a zero inside that ball.  Returns the smallest threshold that
    holds empirically on the ladder (the largest failing m, or 0) together
    with the verdicts for every m above it.
    """
    if q.a == 0 or q.b == 0 or q.c == 0 or q.discriminant <= 0:
        raise WrongCase("midpoint exclusion needs a,b,c != 0 and two distinct real roots")
    radius = (1.0 / abs(q.t1_complex) + 1.0 / abs(q.t2_complex)) / 2.0
    polys = expand_closed_form(q, M)

    def one(m: int) -> DiskVerdict:
        return _verdict(m, _solve_member(polys[m], cfg), radius, inside=False)

    verdicts = batch_map(one, list(range(1, M + 1)))
    failing = [v.m for v in verdicts if not v.satisfied]
    n_observed = max(failing, default=0)
    if n_observed >= M:
        raise ExclusionThresholdNotFound(
            f"exclusion still violated at the ladder top m={M}"
        )
    return n_observed, [v for v in verdicts if v.m > n_observed]
