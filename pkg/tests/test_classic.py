"""Named sequences: dual constructions, trig zero formulas, figure inputs."""

import math
from fractions import Fraction

import pytest

from conftest import greedy_match_errors
from zlocus import errors
from zlocus.classic import (
    chebyshev_u,
    cube_term_sequence,
    cube_term_zero_check,
    exp_taylor_section,
    fibonacci,
    reciprocal_taylor_seq,
    square_term_sequence,
    square_term_zeros,
    szego_demo,
)
from zlocus.rootfind import find_roots
from zlocus.seqcore import expand_recurrence


class TestChebyshev:
    def test_first_members(self):
        seq = chebyshev_u(3)
        assert seq.polys[0].coeffs == (1,)
        assert seq.polys[1].coeffs == (0, 2)
        assert seq.polys[2].coeffs == (-1, 0, 4)
        assert seq.polys[3].coeffs == (0, -4, 0, 8)

    def test_dual_construction_deep(self):
        # the builder raises OracleMismatch internally on any disagreement
        seq = chebyshev_u(40)
        assert seq.M == 40
        assert seq.polys[40].degree == 40


class TestFibonacci:
    def test_first_six(self):
        assert fibonacci(5) == [0, 1, 1, 2, 3, 5]

    def test_zero_constant_term(self):
        assert fibonacci(0) == [0]

    def test_tenth(self):
        assert fibonacci(10)[10] == 55


class TestReciprocalTaylor:
    def test_exponential_section(self):
        coeffs = exp_taylor_section(2).coeffs
        seq = reciprocal_taylor_seq(coeffs, 2)
        assert seq[2].coeffs == (Fraction(1, 2), 1, 1)

    def test_constant_series(self):
        seq = reciprocal_taylor_seq([1, 0, 0, 0], 3)
        assert seq[3].coeffs == (0, 0, 0, 1)

    def test_insufficient_coefficients(self):
        with pytest.raises(errors.InsufficientCoefficients):
            reciprocal_taylor_seq([1, 2], 5)

    def test_quadratic_family_cross_check(self, outside_family):
        # Taylor coefficients of 1/(a t^2 + b t + c), reversed member-wise,
        # reproduce the family expansion exactly
        a, b, c = outside_family.a, outside_family.b, outside_family.c
        M = 12
        taylor = [1 / c]
        for j in range(1, M + 1):
            prev2 = taylor[j - 2] if j >= 2 else Fraction(0)
            taylor.append(-(b * taylor[j - 1] + a * prev2) / c)
        seq = reciprocal_taylor_seq(taylor, M)
        family = expand_recurrence(outside_family, M)
        for got, want in zip(seq, family):
            assert got.coeffs == want.coeffs

    def test_reversal_involution(self):
        rng_coeffs = [Fraction(3), Fraction(-1, 2), Fraction(5), Fraction(7, 3)]
        m = 3
        once = reciprocal_taylor_seq(rng_coeffs, m)[m].coeffs
        twice = reciprocal_taylor_seq(list(once), m)[m].coeffs
        assert twice == tuple(rng_coeffs)


class TestSquareTermFamily:
    def test_linear_member_and_formula_agree(self):
        seq = square_term_sequence(2)
        assert seq.polys[2].coeffs == (1, -1)
        assert square_term_zeros(2) == pytest.approx([1.0])

    def test_degree_bound(self):
        seq = square_term_sequence(40)
        assert all(p.degree <= p.m // 2 for p in seq.polys)

    def test_zero_formula_matches_solver(self):
        seq = square_term_sequence(40)
        for m in range(2, 41):
            formula = square_term_zeros(m)
            assert len(formula) == m // 2
            poly = seq.polys[m]
            if poly.degree < 1:
                assert not formula
                continue
            rs = find_roots(poly)
            assert rs.converged
            assert len(rs.roots) == m // 2
            errs = greedy_match_errors(rs.roots, [complex(v) for v in formula])
            assert max(errs) < 1e-8

    def test_zeros_beyond_quarter(self):
        for m in range(2, 41):
            assert all(v > 0.25 for v in square_term_zeros(m))


class TestCubeTermFamily:
    def test_first_nontrivial_member(self):
        seq = cube_term_sequence(3)
        assert seq.polys[3].coeffs == (-1, -1)

    def test_degree_bound_deep(self):
        seq = cube_term_sequence(60)
        assert all(p.degree <= p.m // 3 for p in seq.polys)

    def test_zero_bound_and_count(self):
        seq = cube_term_sequence(40)
        checks = cube_term_zero_check(40)
        assert all(checks)
        for m in range(3, 41):
            poly = seq.polys[m]
            if poly.degree < 1:
                continue
            rs = find_roots(poly)
            assert len(rs.roots) == m // 3
            assert all(abs(z.imag) < 1e-8 * (1 + abs(z)) for z in rs.roots)
            assert all(z.real < -4 / 27 + 1e-9 for z in rs.roots)

    def test_supremum_approaches_bound_from_below(self):
        seq = cube_term_sequence(60)
        sup = -math.inf
        for poly in seq.polys:
            if poly.degree < 1:
                continue
            sup = max(sup, max(z.real for z in find_roots(poly).roots))
        assert -4 / 27 - 0.01 < sup < -4 / 27


class TestSzego:
    def test_degree_one(self):
        fig = szego_demo(1)
        assert fig.roots.roots == pytest.approx((-1 + 0j,))

    def test_degree_two(self):
        fig = szego_demo(2)
        assert sorted(fig.roots.roots, key=lambda z: z.imag) == pytest.approx(
            [complex(-1, -1), complex(-1, 1)]
        )

    def test_annulus_containment_deep(self):
        fig = szego_demo(30)
        assert fig.annulus.r_min == 1.0
        assert fig.annulus.r_max == 30.0
        assert all(1.0 <= mod <= 30.0 for mod in fig.roots.moduli)

    def test_exact_factorials(self):
        sec = exp_taylor_section(20)
        assert sec.coeffs[20] == Fraction(1, math.factorial(20))
