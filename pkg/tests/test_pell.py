import math

import pytest

from dimerq import (
    compute_rn,
    lagarias_checks,
    ljunggren_scan,
    pell_numbers,
    primitive_part,
    robinson_scan,
)
from dimerq.arith import divisors, is_prime


class TestPellNumbers:
    def test_first_values(self):
        pairs = pell_numbers(7)
        assert [p.u for p in pairs] == [1, 2, 5, 12, 29, 70, 169]
        assert [p.r for p in pairs] == [1, 3, 7, 17, 41, 99, 239]

    def test_companion_identity(self):
        # r_n^2 - 2 u_n^2 = (-1)^n
        for p in pell_numbers(200):
            assert p.r**2 - 2 * p.u**2 == (-1) ** p.n

    def test_ljunggren_witness(self):
        p7 = pell_numbers(7)[-1]
        assert p7.r == 239 and p7.u == 169
        assert p7.r**2 + 1 == 2 * 13**4

    def test_strictly_increasing(self):
        pairs = pell_numbers(300)
        assert all(a.u < b.u for a, b in zip(pairs, pairs[1:]))

    def test_validation(self):
        with pytest.raises(ValueError):
            pell_numbers(0)


class TestPrimitivePart:
    def test_first_value(self):
        assert primitive_part(1).L == 1

    def test_known_squares(self):
        assert primitive_part(7).L == 169 == 13**2
        assert primitive_part(30).L == 961 == 31**2

    def test_index_two(self):
        assert primitive_part(2).L == 2

    def test_product_formula(self):
        # u_n = prod of L_d over divisors d of n
        us = {p.n: p.u for p in pell_numbers(500)}
        for n in range(1, 501):
            prod = 1
            for d in divisors(n):
                prod *= primitive_part(d).L
            assert prod == us[n], n

    def test_prime_index_equals_pell(self):
        us = {p.n: p.u for p in pell_numbers(100)}
        for p in range(2, 101):
            if is_prime(p):
                assert primitive_part(p).L == us[p]

    def test_validation(self):
        with pytest.raises(ValueError):
            primitive_part(0)


class TestRobinsonScan:
    def test_up_to_fifty(self):
        assert robinson_scan(50) == [7, 30]

    def test_small_range(self):
        assert robinson_scan(6) == []

    def test_validation(self):
        with pytest.raises(ValueError):
            robinson_scan(1)


class TestComputeRn:
    def test_r7(self):
        report = compute_rn(7)
        assert report.L == 169
        assert report.is_square
        assert report.r_integer == 13
        assert report.r_ball.contains_int(13)

    def test_r30(self):
        report = compute_rn(30)
        assert report.r_integer == 31
        assert report.L == 961

    def test_r3_irrational(self):
        report = compute_rn(3)
        assert report.L == 5
        assert not report.is_square
        assert report.r_integer is None
        assert report.r_ball.square().contains_int(5)
        assert abs(float(report.r_ball) - math.sqrt(5)) < 1e-12

    def test_square_cross_check_range(self):
        for n in range(3, 120):
            report = compute_rn(n)
            assert report.r_ball.square().contains_int(report.L), n

    def test_degenerate_index_rejected(self):
        with pytest.raises(ValueError):
            compute_rn(2)


class TestLagariasChecks:
    def test_p5(self):
        rep = lagarias_checks(5)
        assert rep.u == 29
        assert not rep.p_divides_up
        assert not rep.up_is_square

    def test_p7_exceptional_square(self):
        rep = lagarias_checks(7)
        assert rep.u == 169
        assert not rep.p_divides_up
        assert rep.up_is_square

    def test_p13(self):
        rep = lagarias_checks(13)
        assert rep.u == 33461
        assert not rep.p_divides_up
        assert not rep.up_is_square

    def test_odd_primes_never_divide(self):
        for p in range(3, 200):
            if is_prime(p):
                assert not lagarias_checks(p).p_divides_up

    def test_validation(self):
        for bad in (2, 4, 9, 1, -7):
            with pytest.raises(ValueError):
                lagarias_checks(bad)


class TestLjunggrenScan:
    def test_tiny(self):
        assert ljunggren_scan(10) == [(1, 1)]

    def test_thousand(self):
        assert ljunggren_scan(1000) == [(1, 1), (239, 13)]

    def test_solutions_satisfy_equation(self):
        for x, y in ljunggren_scan(2000):
            assert x**2 + 1 == 2 * y**4

    def test_validation(self):
        with pytest.raises(ValueError):
            ljunggren_scan(0)
