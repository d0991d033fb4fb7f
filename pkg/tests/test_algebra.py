#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
DistSet - 精确代数层测试: 多项式工具、Sturm 隔离、实代数数与二元求解
"""

import random
from fractions import Fraction

import pytest
from sympy import Rational, sqrt

from distset.algebra.numberfield import NumberField
from distset.algebra.polynomials import (
    A,
    B,
    X,
    bipoly,
    coefficients,
    evaluate,
    from_coefficients,
    groebner_lex,
    incremental_groebner,
    integer_coefficients,
    integerize,
    is_unit_basis,
    polys_gcd,
    proportional,
    reduce_mod,
    resultant,
    to_rational,
    unipoly,
)
from distset.algebra.realalg import RealAlg, alg_sign
from distset.algebra.solver import SolveStatus, make_point, point_from_values, solve_bivariate_real
from distset.algebra.sturm import count_roots_in, sturm_isolate
from distset.core.exceptions import AlgebraError, LiteralParseError, ZeroPolynomialError
from distset.core.types import Mode


class TestPolynomials:
    """多项式工具"""

    def test_from_coefficients_ascending(self):
        assert from_coefficients([-2, 0, 1]) == unipoly(X ** 2 - 2)

    def test_integerize_primitive_positive(self):
        p = unipoly(-Rational(1, 2) * X ** 2 + Rational(1, 3))
        assert integer_coefficients(integerize(p)) == [-2, 0, 3]

    def test_proportional(self):
        assert proportional(bipoly(2 * A - 2 * B), bipoly(B - A))
        assert not proportional(bipoly(A - B), bipoly(A + B))

    def test_resultant_eliminates_variable(self):
        res = resultant(bipoly(A - B), bipoly(A ** 2 - 2), A)
        assert proportional(res, unipoly(B ** 2 - 2, B))

    def test_gcd_of_family(self):
        common = polys_gcd([bipoly((A + B) * (A - 1)), bipoly((A + B) * B)])
        assert proportional(common, bipoly(A + B))
        assert polys_gcd([bipoly(0)]) is None

    def test_unit_basis(self):
        assert is_unit_basis(groebner_lex([bipoly(A), bipoly(A - 1)]))
        assert not is_unit_basis(groebner_lex([bipoly(A + B), bipoly(A - B - 1)]))


def _random_linear(rng: random.Random, var):
    return rng.randint(-3, 3) + rng.randint(-2, 2) * var


def _random_conic(rng: random.Random):
    monomials = [1, A, B, A * B, A ** 2, B ** 2]
    return bipoly(sum(rng.randint(-3, 3) * m for m in monomials))


class TestIdealProperties:
    """Gröbner 基与结式的随机校验"""

    def test_basis_independent_of_generator_order(self):
        rng = random.Random(8086)
        for _ in range(30):
            gens = [_random_conic(rng), _random_conic(rng)]
            gens.append(bipoly(
                gens[0].as_expr() * _random_linear(rng, A) + gens[1].as_expr() * _random_linear(rng, B)
            ))
            gens = [g for g in gens if not g.is_zero]
            if not gens:
                continue
            basis = groebner_lex(gens)
            expected = {integerize(p) for p in basis}
            shuffled = list(gens)
            rng.shuffle(shuffled)
            assert {integerize(p) for p in groebner_lex(shuffled)} == expected
            assert {integerize(p) for p in incremental_groebner(shuffled)} == expected
            for g in gens:
                assert reduce_mod(g, basis).is_zero

    def test_reduce_mod_keeps_non_members(self):
        basis = groebner_lex([bipoly(A - 1), bipoly(B - 2)])
        remainder = reduce_mod(bipoly(A * B), basis)
        assert remainder.is_ground
        assert remainder.as_expr() == 2
        assert reduce_mod(bipoly(A ** 2 - 1), []).as_expr() == A ** 2 - 1

    def test_resultant_vanishes_exactly_at_common_roots(self):
        rng = random.Random(6174)
        for _ in range(50):
            roots = [_random_linear(rng, B) for _ in range(4)]
            f = bipoly((A - roots[0]) * (A - roots[1]))
            g = bipoly((A - roots[2]) * (A - roots[3]))
            res = resultant(f, g, A)
            # 一半取使两组根重合的 b, 一半随机
            i, j = rng.choice([0, 1]), rng.choice([2, 3])
            slope = unipoly(roots[i] - roots[j], B)
            if rng.random() < 0.5 and slope.degree() == 1:
                constant, linear = coefficients(slope)
                value = -constant / linear
            else:
                value = Fraction(rng.randint(-6, 6), rng.randint(1, 3))
            at_f = unipoly(f.as_expr().subs(B, to_rational(value)), A)
            at_g = unipoly(g.as_expr().subs(B, to_rational(value)), A)
            common = not at_f.gcd(at_g).is_ground
            assert (res.is_zero or evaluate(res, value) == 0) == common


class TestSturm:
    """Sturm 序列实根隔离"""

    def test_isolates_all_real_roots(self):
        intervals = sturm_isolate(unipoly((X - 1) * (X + 2) * (X ** 2 - 2)))
        assert len(intervals) == 4
        for lo, hi in intervals:
            assert lo < hi

    def test_no_real_roots(self):
        assert sturm_isolate(unipoly(X ** 2 + 1)) == []

    def test_repeated_roots_counted_once(self):
        assert len(sturm_isolate(unipoly((X - 1) ** 3 * (X + 1)))) == 2

    def test_count_roots_in_interval(self):
        p = unipoly(X ** 2 - 1)
        assert count_roots_in(p, Fraction(-2), Fraction(2)) == 2
        assert count_roots_in(p, Fraction(0), Fraction(1, 2)) == 0

    def test_zero_polynomial(self):
        with pytest.raises(ZeroPolynomialError):
            sturm_isolate(unipoly(0))


class TestRealAlg:
    """实代数数"""

    def test_roots_sorted(self):
        roots = RealAlg.roots_of(unipoly(X ** 3 - 2 * X))
        assert [r.to_float() for r in roots] == pytest.approx([-(2 ** 0.5), 0.0, 2 ** 0.5])
        assert roots[1].is_rational

    def test_compare_and_equal(self):
        root2 = RealAlg.from_literal("root([-2, 0, 1]; 1, 2)")
        assert root2.compare(RealAlg.rational(Fraction(7, 5))) == 1
        assert root2.compare(RealAlg.rational(Fraction(3, 2))) == -1
        assert root2.is_equal(RealAlg.from_literal("(0 + 1*sqrt(2))/1"))

    def test_literal_forms(self):
        assert RealAlg.from_literal("-3/6").to_literal() == "-1/2"
        assert RealAlg.from_literal("root([-2, 0, 1]; 1, 2)").to_literal() == "(0 + 1*sqrt(2))/1"
        golden = RealAlg.from_literal("(-1 + 1*sqrt(5))/4")
        assert golden.to_literal() == "(-1 + 1*sqrt(5))/4"
        assert golden.to_float() == pytest.approx((5 ** 0.5 - 1) / 4)
        cubic = RealAlg.from_literal("root([-1, 10, 32, 8]; 0, 1/10)")
        assert cubic.degree == 3
        assert RealAlg.from_literal(cubic.to_literal()).is_equal(cubic)

    @pytest.mark.parametrize("text", ["", "abc", "1/0", "root([0, 0]; 0, 1)", "root([-2, 0, 1]; 0, 1)"])
    def test_bad_literals(self, text):
        with pytest.raises(LiteralParseError):
            RealAlg.from_literal(text)

    def test_reciprocal(self):
        golden = RealAlg.from_literal("(3 + 1*sqrt(5))/2")
        assert golden.reciprocal().is_equal(RealAlg.from_literal("(3 + -1*sqrt(5))/2"))
        with pytest.raises(AlgebraError):
            RealAlg.rational(0).reciprocal()

    def test_alg_sign(self):
        root2 = RealAlg.from_literal("(0 + 1*sqrt(2))/1")
        assert alg_sign(unipoly(X ** 2 - 2), root2) == 0
        assert alg_sign(unipoly(X - Rational(141, 100)), root2) == 1
        assert alg_sign(unipoly(X ** 3 - 3), root2) == -1

    def test_number_field_arithmetic(self):
        field = NumberField(RealAlg.from_literal("(0 + 1*sqrt(2))/1"))
        theta = field.element(unipoly(X))
        assert field.is_zero(field.sub(field.mul(theta, theta), field.from_fraction(Fraction(2))))
        inverse = field.inv(theta)
        assert field.sign(field.sub(field.mul(inverse, theta), field.one)) == 0
        assert field.sign(field.sub(theta, field.from_fraction(Fraction(3, 2)))) == -1


class TestBivariateSolver:
    """二元多项式组实解"""

    def test_single_rational_point(self):
        result = solve_bivariate_real([bipoly(A + B), bipoly(A - B - 1)])
        assert result.status is SolveStatus.POINTS
        assert len(result.points) == 1
        assert result.points[0].literals() == ("1/2", "-1/2")

    def test_inconsistent(self):
        result = solve_bivariate_real([bipoly(A), bipoly(A - 1)])
        assert result.status is SolveStatus.INCONSISTENT
        assert result.points == []
        assert not result.complex_nonempty

    def test_curve_component_reported(self):
        third, fifth = Rational(1, 3), Rational(1, 5)
        result = solve_bivariate_real([
            bipoly((A + B) * (A - third)),
            bipoly((A + B) * (B - fifth)),
        ])
        assert result.status is SolveStatus.POSITIVE_DIMENSIONAL
        assert len(result.curves) == 1
        assert proportional(result.curves[0], bipoly(A + B))
        assert [p.literals() for p in result.points] == [("1/3", "1/5")]

    def test_excluded_curve_discarded(self):
        third, fifth = Rational(1, 3), Rational(1, 5)
        result = solve_bivariate_real([
            bipoly((A - B) * (A - third)),
            bipoly((A - B) * (B - fifth)),
        ])
        assert result.status is SolveStatus.POINTS
        assert result.curves == []

    def test_irrational_points(self):
        result = solve_bivariate_real([bipoly(B ** 2 - 2), bipoly(A - B - 1)])
        assert result.status is SolveStatus.POINTS
        values = sorted(p.a.to_float() for p in result.points)
        assert values == pytest.approx([1 - 2 ** 0.5, 1 + 2 ** 0.5])
        for point in result.points:
            assert point.sign_of(bipoly(B ** 2 - 2)) == 0

    def test_all_zero_generators(self):
        with pytest.raises(AlgebraError):
            solve_bivariate_real([bipoly(0)])

    def test_point_from_values(self):
        a = RealAlg.from_literal("(0 + 1*sqrt(2))/1")
        b = RealAlg.from_literal("(0 + 1*sqrt(3))/1")
        point = point_from_values(a, b)
        assert point.a.is_equal(a)
        assert point.b.is_equal(b)
        assert point.sign_of(bipoly(A ** 2 * B ** 2 - 6)) == 0
        assert point.mirrored().a.is_equal(b)

    def test_make_point_reduces_expressions(self):
        anchor = RealAlg.from_literal("(0 + 1*sqrt(2))/1")
        point = make_point(anchor, X ** 3, 1, Mode.GENERAL)
        assert point.a.to_float() == pytest.approx(float(sqrt(2) ** 3))
        assert point.b.to_literal() == "1"
        assert point.mode is Mode.GENERAL
