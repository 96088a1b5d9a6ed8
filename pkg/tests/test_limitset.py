"""Exponential-sum classifier, limit circle, Hausdorff convergence."""

import cmath
import math
import random

import pytest

from conftest import fm_poly
from zlocus import errors
from zlocus.limitset import (
    ClassificationReason,
    ExpSumForm,
    ExpSumTerm,
    build_expsum,
    convergence_report,
    hausdorff_to_circle,
    limit_circle,
    radial_spread,
    sokal_classify,
)
from zlocus.rootfind import RootSet, find_roots
from zlocus.seqcore import QuadraticGF, expand_closed_form


def make_rootset(points) -> RootSet:
    pts = tuple(sorted((complex(z) for z in points), key=lambda z: (z.real, z.imag)))
    return RootSet(
        roots=pts,
        residuals=(0.0,) * len(pts),
        iterations=0,
        converged=True,
        effective_degree=len(pts),
        stripped_high_zeros=0,
    )


def fm_form() -> ExpSumForm:
    one = 1 + 0j
    return ExpSumForm(
        terms=(
            ExpSumTerm(alpha=(one,), beta=(-1 + 0j, one)),
            ExpSumTerm(alpha=(one,), beta=(0j, one)),
            ExpSumTerm(alpha=(one,), beta=(one, one)),
        )
    )


class TestBuildExpsum:
    def test_inside_family_terms(self, inside_family):
        form = build_expsum(inside_family)
        assert [t.beta for t in form.terms] == [
            ((-2 + 0j),),
            ((1 + 0j),),
            (0j, (-2 + 0j)),
        ]

    def test_constant_term_identity(self, inside_family):
        form = build_expsum(inside_family)
        t1, t2 = inside_family.t1_complex, inside_family.t2_complex
        assert form.value(0, 0j) == pytest.approx(t2 - t1)

    def test_repeated_root_rejected(self):
        with pytest.raises(errors.RepeatedRoot):
            build_expsum(QuadraticGF.from_coeffs(1, 2, 1))

    def test_equal_modulus_rejected(self, conjecture_family):
        with pytest.raises(errors.EqualModulusRoots):
            build_expsum(conjecture_family)
        with pytest.raises(errors.EqualModulusRoots):
            build_expsum(QuadraticGF.from_coeffs(1, 0, -4))

    def test_reconstructs_numerator(self, outside_family):
        form = build_expsum(outside_family)
        t1, t2 = outside_family.t1_complex, outside_family.t2_complex
        rng = random.Random(99)
        for m in range(21):
            for _ in range(32):
                z = complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
                want = (
                    t2 ** (m + 1)
                    - t1 ** (m + 1)
                    + (t1 ** (m + 2) - t2 ** (m + 2)) * z
                    + (t2 - t1) * (t1 * t2) ** (m + 1) * z ** (m + 2)
                )
                assert abs(form.value(m, z) - want) <= 1e-9 * max(1.0, abs(want))


class TestSokalClassify:
    def test_tie_on_imaginary_axis(self):
        cls = sokal_classify(fm_form(), 2j)
        assert cls.in_limit
        assert cls.reason is ClassificationReason.DOMINANT_TIE
        assert set(cls.witness_indices) == {0, 2}

    def test_dominant_right_half_plane(self):
        cls = sokal_classify(fm_form(), 2.0 + 0j)
        assert not cls.in_limit
        assert cls.reason is ClassificationReason.NOT_IN_SET

    def test_vanishing_alpha_point(self, inside_family):
        # at z = 1/t2 the dominant term's alpha vanishes
        form = build_expsum(inside_family)
        cls = sokal_classify(form, -0.5 + 0j)
        assert cls.in_limit
        assert cls.reason is ClassificationReason.DOMINANT_VANISHING_ALPHA

    def test_tie_tol_must_be_positive(self):
        with pytest.raises(ValueError):
            sokal_classify(fm_form(), 1j, tie_tol=0.0)

    def test_circle_points_in_limit(self, inside_family):
        form = build_expsum(inside_family)
        radius = limit_circle(inside_family)
        for k in range(24):
            ang = 2 * math.pi * (k + 0.3) / 24
            z = radius * cmath.exp(1j * ang)
            if abs(z - 1.0) <= 1e-3:  # stay away from 1/t1
                continue
            assert sokal_classify(form, z).in_limit

    def test_off_circle_points_not_in_limit(self, inside_family):
        form = build_expsum(inside_family)
        radius = limit_circle(inside_family)
        rng = random.Random(311)
        for _ in range(40):
            r = radius * rng.choice([rng.uniform(0.2, 0.94), rng.uniform(1.06, 2.0)])
            z = r * cmath.exp(1j * rng.uniform(0, 2 * math.pi))
            if abs(z - (-0.5)) < 1e-2:  # the isolated vanishing-alpha point
                continue
            assert not sokal_classify(form, z).in_limit

    def test_classification_stable_under_small_perturbation(self, inside_family):
        form = build_expsum(inside_family)
        radius = limit_circle(inside_family)
        tie_tol = 1e-6
        probes = [radius * cmath.exp(1j * 0.7), 0.4 + 0.1j, 1.8 - 0.6j]
        for z in probes:
            base = sokal_classify(form, z, tie_tol).in_limit
            for k in range(8):
                dz = 0.1 * tie_tol * radius * cmath.exp(1j * (k + 0.5))
                assert sokal_classify(form, z + dz, tie_tol).in_limit == base


class TestLimitCircle:
    def test_examples(self, inside_family, outside_family):
        assert limit_circle(inside_family) == 1.0
        assert limit_circle(outside_family) == 0.5

    def test_small_modulus_root_selected(self):
        q = QuadraticGF.from_coeffs(6, 5, 1)
        assert limit_circle(q) == pytest.approx(3.0)

    def test_conjecture_rejected(self, conjecture_family):
        with pytest.raises(errors.WrongCase):
            limit_circle(conjecture_family)


class TestHausdorff:
    def test_points_on_circle(self):
        n = 256
        pts = [cmath.exp(2j * math.pi * k / n) for k in range(n)]
        h = hausdorff_to_circle(make_rootset(pts), 1.0, circle_samples=4096)
        assert h <= math.pi / n + 1e-12

    def test_single_origin_point(self):
        assert hausdorff_to_circle(make_rootset([0j]), 1.0) == pytest.approx(1.0)

    def test_empty_rejected(self):
        rs = RootSet((), (), 0, True, 0, 0)
        with pytest.raises(errors.EmptyRootSet):
            hausdorff_to_circle(rs, 1.0)

    def test_nonnegative_and_shrinking(self, inside_family):
        polys = expand_closed_form(inside_family, 100)
        h = {}
        for m in (15, 100):
            rs = find_roots(polys[m].to_floating())
            h[m] = hausdorff_to_circle(rs, 1.0)
            assert h[m] >= 0
        assert h[100] < h[15]


class TestConvergenceReport:
    def test_inside_family_ladder(self, inside_family):
        rep = convergence_report(inside_family, (15, 30, 100))
        assert rep.radius == 1.0
        assert rep.radial_spread[0] > rep.radial_spread[1] > rep.radial_spread[2]
        assert rep.hausdorff[0] > rep.hausdorff[2]

    def test_reciprocal_coefficient_family(self):
        rep = convergence_report(QuadraticGF.from_coeffs(6, 5, 1), (15, 30))
        assert rep.radius == pytest.approx(3.0)
        assert rep.radial_spread[1] < rep.radial_spread[0]

    def test_empty_ladder(self, inside_family):
        rep = convergence_report(inside_family, ())
        assert rep.ms == ()
        assert rep.hausdorff == ()
        assert rep.radial_spread == ()


class TestFmOracle:
    def test_roots_hug_the_imaginary_axis(self):
        # the example family's zeros are purely imaginary, so the
        # real-part bound sits at the solver noise floor for every m
        bounds = {}
        for m in (10, 30, 50):
            rs = find_roots(fm_poly(m).to_floating())
            assert rs.converged
            bounds[m] = max(abs(z.real) for z in rs.roots)
        assert all(v < 1e-12 for v in bounds.values())
        assert bounds[50] < 0.15
