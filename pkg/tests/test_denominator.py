import json

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dimerq import IntPoly, build_qk, poly_mul, recurrence_check, subset_product, trig_unit
from dimerq.denominator import (
    CertifiedPoly,
    PrecisionSchedule,
    denominator_degree,
    poly_from_json_dict,
    poly_json_dumps,
    poly_to_json_dict,
)
from dimerq.errors import ResourceLimitError

from reference_polys import Q7_FACTOR_A, Q7_FACTOR_B, Q8_COEFFS


def mp_unit(j: int, m: int) -> mpmath.mpf:
    """Independent 110-digit evaluation of cos(j pi/m) + sqrt(1 + cos^2)."""
    with mpmath.workdps(110):
        c = mpmath.cos(mpmath.pi * j / m)
        return c + mpmath.sqrt(1 + c * c)


def ball_contains_mp(ball, value, slack_digits=100) -> bool:
    lo, hi = ball.lower(), ball.upper()
    eps = mpmath.mpf(10) ** (-slack_digits)
    with mpmath.workdps(120):
        return mpmath.mpf(lo.numerator) / lo.denominator - eps <= value <= mpmath.mpf(hi.numerator) / hi.denominator + eps


class TestTrigUnit:
    def test_right_angle(self):
        u = trig_unit(1, 2, 128)
        assert u.c.contains_int(1)
        assert u.cbar.contains_int(-1)
        assert u.d.contains_int(4)

    def test_golden_ratio(self):
        # cos(pi/3) = 1/2, so c = (1 + sqrt 5)/2
        u = trig_unit(1, 3, 128)
        two_c = u.c.mul_int(2).add_int(-1)  # 2c - 1 = sqrt 5
        sq = two_c.square()
        assert sq.contains_int(5)
        assert float(u.c) == pytest.approx(1.618033988749895, abs=1e-12)

    def test_high_precision_oracle(self):
        with mpmath.workdps(110):
            assert ball_contains_mp(trig_unit(2, 14, 400).c, mp_unit(2, 14))
            assert ball_contains_mp(trig_unit(5, 31, 400).c, mp_unit(5, 31))

    def test_relative_radius_bound(self):
        # radius at most 2^-(precision - 8) relative to the midpoint
        for prec in (64, 128, 256):
            for j, m in ((1, 5), (3, 7), (9, 20), (13, 30)):
                u = trig_unit(j, m, prec)
                for b in (u.c, u.cbar, u.d):
                    assert b.rad << (prec - 8) <= abs(b.mid), (j, m, prec)

    def test_validation(self):
        with pytest.raises(ValueError):
            trig_unit(0, 5, 128)
        with pytest.raises(ValueError):
            trig_unit(5, 5, 128)
        with pytest.raises(ValueError):
            trig_unit(1, 3, 32)

    @settings(max_examples=60, deadline=None)
    @given(st.integers(2, 60), st.integers(1, 59), st.sampled_from([64, 128, 256]))
    def test_unit_product_is_minus_one(self, m, j, prec):
        if j >= m:
            return
        u = trig_unit(j, m, prec)
        assert (u.c * u.cbar).contains_int(-1)

    @settings(max_examples=30, deadline=None)
    @given(st.integers(2, 40), st.integers(1, 39))
    def test_d_encloses_c_plus_recip_squared(self, m, j):
        if j >= m:
            return
        u = trig_unit(j, m, 192)
        lhs = (u.c + u.c.recip()).square()
        assert lhs.lower() <= u.d.upper() and u.d.lower() <= lhs.upper()


class TestSubsetProduct:
    def test_empty_subset(self):
        sp = subset_product(13, frozenset(), 128)
        assert sp.b.rad == 0 and sp.b.contains_int(1)

    def test_single_unit_oracle(self):
        sp = subset_product(13, {2}, 256)
        assert float(sp.b) == pytest.approx(2.246979603717467, abs=1e-12)
        assert ball_contains_mp(sp.b, mp_unit(2, 14))

    def test_known_collision_overlaps(self):
        left = subset_product(13, {2}, 256)
        right = subset_product(13, {4, 6}, 256)
        assert (left.b - right.b).contains_zero

    def test_invalid_subset(self):
        with pytest.raises(ValueError):
            subset_product(13, {7}, 128)  # floor(13/2) = 6

    def test_a_complement_product(self):
        # a_S * a_{S^c} = (-1)^ell for every subset
        for k in (4, 5, 8, 9):
            ell = k // 2
            full = frozenset(range(1, ell + 1))
            for bits in range(1 << ell):
                s = frozenset(j for j in range(1, ell + 1) if bits >> (j - 1) & 1)
                a1 = subset_product(k, s, 128).a
                a2 = subset_product(k, full - s, 128).a
                assert (a1 * a2).contains_int((-1) ** ell), (k, sorted(s))


class TestBuildQk:
    def test_width_one(self):
        assert build_qk(1).poly == IntPoly([1, 0, -1])

    def test_width_two(self):
        assert build_qk(2).poly == IntPoly([1, -1, -1])

    def test_width_eight_printed(self):
        assert build_qk(8).poly == IntPoly(Q8_COEFFS)

    def test_width_seven_printed_factors(self):
        expected = poly_mul(IntPoly(Q7_FACTOR_A), IntPoly(Q7_FACTOR_B))
        assert build_qk(7).poly == expected

    def test_width_eight_palindrome(self):
        cs = build_qk(8).poly.coeffs
        assert cs == cs[::-1]

    def test_odd_width_even_support(self):
        for k in (1, 3, 5, 7, 9):
            cs = build_qk(k).poly.coeffs
            assert all(cs[i] == 0 for i in range(1, len(cs), 2))

    def test_structure(self):
        for k in range(1, 11):
            cp = build_qk(k)
            assert cp.poly[0] == 1
            assert abs(cp.poly.leading) == 1
            assert cp.poly.degree == denominator_degree(k)
            assert cp.recurrence_checked

    def test_degree_cap(self):
        with pytest.raises(ResourceLimitError):
            build_qk(19)
        with pytest.raises(ResourceLimitError):
            build_qk(8, degree_cap=8)

    def test_custom_schedule_same_result(self):
        default = build_qk(5)
        custom = build_qk(5, PrecisionSchedule(initial=512))
        assert default.poly == custom.poly
        assert custom.precision_used == 512

    def test_invalid_width(self):
        with pytest.raises(ValueError):
            build_qk(0)


class TestRecurrenceCheck:
    def test_fibonacci(self):
        assert recurrence_check(IntPoly([1, -1, -1]), 2)

    def test_width_one(self):
        assert recurrence_check(IntPoly([1, 0, -1]), 1)

    def test_wrong_recurrence(self):
        assert not recurrence_check(IntPoly([1, -2, -1]), 2)

    def test_wrong_degree_rejected(self):
        with pytest.raises(ValueError):
            recurrence_check(IntPoly([1, -1]), 2)

    def test_every_certified_poly_passes(self):
        for k in range(1, 11):
            assert recurrence_check(build_qk(k).poly, k)


class TestSerialization:
    def test_roundtrip(self):
        cp = build_qk(6)
        doc = poly_to_json_dict(cp.k, cp.poly)
        k, poly = poly_from_json_dict(json.loads(poly_json_dumps(doc)))
        assert (k, poly) == (cp.k, cp.poly)

    def test_payload_roundtrip(self):
        cp = build_qk(4)
        again = CertifiedPoly.from_payload(json.loads(json.dumps(cp.to_payload())))
        assert again == cp

    def test_degree_mismatch_rejected(self):
        with pytest.raises(ValueError):
            poly_from_json_dict({"k": 2, "degree": 3, "coeffs": ["1", "-1", "-1"]})
