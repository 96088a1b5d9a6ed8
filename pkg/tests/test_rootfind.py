"""Root solver behaviour: oracle recovery, residual soundness, annulus bounds."""

import random
from collections import Counter

import numpy as np
import pytest

from conftest import greedy_match_errors
from zlocus import errors
from zlocus.classic import exp_taylor_section
from zlocus.rootfind import (
    Annulus,
    SolverConfig,
    find_roots,
    kakeya_annulus,
    kakeya_signed,
)
from zlocus.seqcore import (
    ArithmeticMode,
    QuadraticGF,
    ZPolynomial,
    expand_closed_form,
    normalize,
)


def poly(coeffs) -> ZPolynomial:
    vals = tuple(complex(c) for c in coeffs)
    return ZPolynomial(coeffs=vals, m=len(vals) - 1, mode=ArithmeticMode.FLOATING)


def from_factors(roots) -> ZPolynomial:
    coeffs = np.array([1.0 + 0j])
    for z in roots:
        coeffs = np.convolve(coeffs, np.array([-z, 1.0 + 0j]))
    return poly(coeffs)


class TestFindRoots:
    def test_difference_of_squares(self):
        rs = find_roots(poly([-1, 0, 1]))
        assert rs.converged
        assert rs.roots == pytest.approx((-1 + 0j, 1 + 0j))
        assert max(rs.residuals) < 1e-12

    def test_linear_classic_member(self):
        from zlocus.classic import square_term_sequence

        g2 = square_term_sequence(2).polys[2]
        rs = find_roots(g2.to_floating())
        assert rs.roots == pytest.approx((1 + 0j,))

    def test_quadratic_family_inside_disk(self, inside_family):
        p15 = expand_closed_form(inside_family, 15)[15].to_floating()
        rs = find_roots(p15)
        assert rs.converged
        assert max(rs.moduli) <= 1 + 1e-8

    def test_constant_rejected(self):
        with pytest.raises(errors.ConstantPolynomial):
            find_roots(poly([3.0]))

    def test_all_zero_rejected(self):
        with pytest.raises(errors.AllZeroPolynomial):
            find_roots(poly([0.0, 0.0]))

    def test_high_zero_coefficients_stripped(self):
        rs = find_roots(poly([-1, 0, 1, 0, 0]))
        assert rs.stripped_high_zeros == 2
        assert rs.effective_degree == 2
        assert len(rs.roots) == 2

    def test_origin_roots_exact(self):
        rs = find_roots(poly([0, 0, -1, 0, 1]))  # z^2 (z^2 - 1)
        assert rs.effective_degree == 4
        assert sorted(rs.roots, key=abs)[:2] == [0j, 0j]

    def test_determinism_bit_identical(self):
        q = QuadraticGF.from_coeffs(2, 3, -5)
        p = expand_closed_form(q, 23)[23].to_floating()
        a = find_roots(p, SolverConfig(seed=11))
        b = find_roots(p, SolverConfig(seed=11))
        assert a.roots == b.roots
        assert a.residuals == b.residuals

    def test_factored_oracle_simple_roots(self):
        rng = random.Random(17)
        for _ in range(60):
            deg = rng.randint(2, 8)
            roots = []
            while len(roots) < deg:
                z = complex(rng.randint(-3, 3), rng.randint(-3, 3))
                if all(abs(z - r) > 0.5 for r in roots):
                    roots.append(z)
            rs = find_roots(from_factors(roots))
            assert rs.converged
            assert max(greedy_match_errors(rs.roots, roots)) < 1e-8

    def test_factored_oracle_double_roots(self):
        # cluster ill-conditioning bounds the achievable accuracy for
        # multiplicity 2: individual estimates to ~sqrt(eps * scale),
        # pair means an order better
        rng = random.Random(23)
        for _ in range(40):
            deg = rng.randint(4, 8)
            vals, seen = [], set()
            doubled = None
            while len(vals) < deg:
                z = complex(rng.randint(-3, 3), rng.randint(-3, 3))
                if z in seen:
                    continue
                if doubled is None and len(vals) + 2 <= deg:
                    vals += [z, z]
                    doubled = z
                else:
                    vals.append(z)
                seen.add(z)
            rs = find_roots(from_factors(vals))
            assert rs.converged
            for z, mult in Counter(vals).items():
                nearest = sorted(rs.roots, key=lambda g: abs(g - z))[:mult]
                if mult == 1:
                    assert abs(nearest[0] - z) < 1e-8
                else:
                    assert abs(sum(nearest) / mult - z) < 1e-6
                    assert max(abs(g - z) for g in nearest) < 1e-5

    def test_residual_soundness(self):
        rng = random.Random(31)
        for _ in range(30):
            deg = rng.randint(2, 10)
            coeffs = [
                complex(rng.uniform(-5, 5), rng.uniform(-5, 5)) for _ in range(deg)
            ] + [complex(rng.uniform(0.5, 5), 0)]
            p = poly(coeffs)
            rs = find_roots(p)
            maxc = max(abs(c) for c in coeffs)
            for z in rs.roots:
                val = abs(p(z))
                assert val <= 1e-6 * deg * maxc * max(1.0, abs(z)) ** deg


class TestKakeyaAnnulus:
    def test_equal_ratios(self):
        assert kakeya_annulus(poly([1, 1, 1])) == Annulus(1.0, 1.0)

    def test_single_ratio(self):
        assert kakeya_annulus(poly([2, 4])) == Annulus(0.5, 0.5)

    def test_exponential_section(self):
        for n in (5, 12):
            ann = kakeya_annulus(exp_taylor_section(n))
            assert ann == Annulus(1.0, float(n))

    def test_rejects_nonpositive(self):
        with pytest.raises(errors.NonPositiveCoefficients):
            kakeya_annulus(poly([1, -1, 1]))
        with pytest.raises(errors.NonPositiveCoefficients):
            kakeya_annulus(poly([1, 0, 1]))

    def test_rejects_nonreal(self):
        with pytest.raises(errors.NonPositiveCoefficients):
            kakeya_annulus(poly([1, 1j, 1]))

    def test_containment_random_positive(self):
        rng = random.Random(37)
        for _ in range(50):
            deg = rng.randint(1, 12)
            coeffs = [rng.uniform(0.1, 10.0) for _ in range(deg + 1)]
            p = poly(coeffs)
            ann = kakeya_annulus(p)
            rs = find_roots(p)
            assert rs.converged
            assert all(ann.contains(mod, slack=1e-8) for mod in rs.moduli)


class TestKakeyaSigned:
    def test_alternating(self):
        assert kakeya_signed(poly([1, -1, 1])) == Annulus(1.0, 1.0)

    def test_global_negation(self):
        assert kakeya_signed(poly([-1, -1, -1])) == Annulus(1.0, 1.0)

    def test_mixed_pattern_rejected(self):
        with pytest.raises(errors.MixedSignPattern):
            kakeya_signed(poly([1, 1, -1, 1]))

    def test_normalized_family_bound_exceeds_radius(self, outside_family):
        # alternating-coefficient member of the normalized family: the
        # annulus floor sits strictly beyond the predicted radius
        nq, _ = normalize(outside_family)
        h8 = expand_closed_form(nq, 8)[8]
        ann = kakeya_signed(h8.to_floating())
        assert ann.r_min > 1.0 / abs(complex(nq.t1))

    def test_moduli_preserved(self):
        p_pos = poly([2, 3, 5])
        p_alt = poly([2, -3, 5])
        assert kakeya_annulus(p_pos) == kakeya_signed(p_alt)
