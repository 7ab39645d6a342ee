import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dimerq.polys import (
    IntPoly,
    exact_div,
    poly_gcd,
    poly_mul,
    series_mul_truncate,
    squarefree_decompose,
)


def naive_mul(a: IntPoly, b: IntPoly) -> IntPoly:
    """Schoolbook oracle, independent of the production multiplier."""
    if a.is_zero or b.is_zero:
        return IntPoly(())
    out = [0] * (a.degree + b.degree + 1)
    for i, x in enumerate(a.coeffs):
        for j, y in enumerate(b.coeffs):
            out[i + j] += x * y
    return IntPoly(out)


coeffs128 = st.integers(min_value=-(2**128), max_value=2**128)
polys64 = st.lists(coeffs128, max_size=65).map(IntPoly)
small_polys = st.lists(st.integers(-50, 50), max_size=9).map(IntPoly)


class TestIntPoly:
    def test_trailing_zeros_trimmed(self):
        assert IntPoly([1, 2, 0, 0]).coeffs == (1, 2)
        assert IntPoly([0, 0]).is_zero
        assert IntPoly(()).degree == -1

    def test_degree_and_indexing(self):
        p = IntPoly([3, 0, 1])
        assert p.degree == 2
        assert p[0] == 3 and p[1] == 0 and p[2] == 1 and p[5] == 0

    def test_derivative(self):
        assert IntPoly([5, 3, 0, 2]).derivative() == IntPoly([3, 0, 6])
        assert IntPoly([7]).derivative().is_zero

    def test_primitive_part_sign(self):
        assert IntPoly([-4, 0, -6]).primitive_part() == IntPoly([2, 0, 3])
        assert IntPoly([4, 0, 6]).primitive_part() == IntPoly([2, 0, 3])

    def test_pow(self):
        assert IntPoly([1, 1]) ** 2 == IntPoly([1, 2, 1])
        assert IntPoly([0, 1]) ** 5 == IntPoly([0, 0, 0, 0, 0, 1])


class TestPolyMul:
    def test_difference_of_squares(self):
        assert poly_mul(IntPoly([1, 1]), IntPoly([1, -1])) == IntPoly([1, 0, -1])

    def test_absorbing_zero(self):
        assert poly_mul(IntPoly([3, 1, 4]), IntPoly(())).is_zero

    def test_hand_expansion(self):
        # (1 - x - x^2)(1 + x + 2x^2) = 1 - 3x^3 - 2x^4
        got = poly_mul(IntPoly([1, -1, -1]), IntPoly([1, 1, 2]))
        assert got == IntPoly([1, 0, 0, -3, -2])

    def test_karatsuba_path_matches_oracle(self):
        a = IntPoly(list(range(1, 80)))
        b = IntPoly([(-1) ** i * (i + 3) for i in range(77)])
        assert poly_mul(a, b) == naive_mul(a, b)

    @settings(max_examples=60, deadline=None)
    @given(polys64, polys64)
    def test_matches_schoolbook_oracle(self, a, b):
        assert poly_mul(a, b) == naive_mul(a, b)

    @settings(max_examples=60, deadline=None)
    @given(polys64, polys64)
    def test_commutative(self, a, b):
        assert poly_mul(a, b) == poly_mul(b, a)

    @settings(max_examples=30, deadline=None)
    @given(polys64, polys64, polys64)
    def test_associative(self, a, b, c):
        assert poly_mul(poly_mul(a, b), c) == poly_mul(a, poly_mul(b, c))

    @settings(max_examples=60, deadline=None)
    @given(polys64, polys64)
    def test_degree_additivity(self, a, b):
        p = poly_mul(a, b)
        if a.is_zero or b.is_zero:
            assert p.is_zero
        else:
            assert p.degree == a.degree + b.degree


class TestExactDiv:
    def test_roundtrip(self):
        a = IntPoly([2, -3, 1, 7])
        b = IntPoly([1, 4, -2])
        assert exact_div(poly_mul(a, b), b) == a

    def test_inexact_rejected(self):
        with pytest.raises(ValueError):
            exact_div(IntPoly([1, 0, 1]), IntPoly([1, 1]))


class TestPolyGcd:
    def test_linear_common_factor(self):
        a = IntPoly([-1, 0, 1])       # x^2 - 1
        b = IntPoly([1, -2, 1])       # x^2 - 2x + 1
        assert poly_gcd(a, b) == IntPoly([-1, 1])

    def test_gcd_with_one(self):
        assert poly_gcd(IntPoly([3, 1, 4, 1, 5]), IntPoly([1])) == IntPoly([1])

    def test_both_zero_rejected(self):
        with pytest.raises(ValueError):
            poly_gcd(IntPoly(()), IntPoly(()))

    def test_gcd_with_zero(self):
        assert poly_gcd(IntPoly([-2, 0, -4]), IntPoly(())) == IntPoly([1, 0, 2])

    def test_result_is_primitive_positive(self):
        a = IntPoly([0, -2])
        b = IntPoly([0, 0, -6])
        g = poly_gcd(a, b)
        assert g == IntPoly([0, 1])

    def test_coprime(self):
        assert poly_gcd(IntPoly([1, 1]), IntPoly([1, 0, 1])) == IntPoly([1])

    def test_divides_both(self):
        g0 = IntPoly([2, 0, 1, 3])
        a = poly_mul(g0, IntPoly([5, -1, 1]))
        b = poly_mul(g0, IntPoly([-7, 2]))
        g = poly_gcd(a, b)
        assert exact_div(a, g) is not None and exact_div(b, g) is not None
        assert g == g0.primitive_part()

    @settings(max_examples=25, deadline=None)
    @given(small_polys, small_polys, small_polys)
    def test_common_factor_extraction(self, a, b, g):
        # gcd(a g, b g) = g * gcd(a, b) up to sign, for primitive g
        if a.is_zero or b.is_zero or g.is_zero:
            return
        g = g.primitive_part()
        lhs = poly_gcd(poly_mul(a, g), poly_mul(b, g))
        rhs = poly_mul(g, poly_gcd(a, b)).primitive_part()
        assert lhs == rhs

    def test_big_coefficient_common_factor(self):
        g0 = IntPoly([10**40 + 1, 0, 1])
        a = poly_mul(g0, IntPoly([1, 10**35]))
        b = poly_mul(g0, IntPoly([-3, 0, 0, 7]))
        assert poly_gcd(a, b) == g0


class TestSquarefreeDecompose:
    def test_simple_square(self):
        # (x - 1)^2 (x + 2)
        p = poly_mul(poly_mul(IntPoly([-1, 1]), IntPoly([-1, 1])), IntPoly([2, 1]))
        d = squarefree_decompose(p)
        assert d.factors == ((IntPoly([2, 1]), 1), (IntPoly([-1, 1]), 2))

    def test_squarefree_input(self):
        p = IntPoly([6, 0, 2])  # content 2, square-free
        d = squarefree_decompose(p)
        assert d.factors == ((IntPoly([3, 0, 1]), 1),)

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            squarefree_decompose(IntPoly(()))

    def test_constant(self):
        assert squarefree_decompose(IntPoly([5])).factors == ()

    def test_multiplicities_strictly_increasing(self):
        p = poly_mul(IntPoly([1, 1]) ** 3, IntPoly([-2, 1]) ** 5)
        d = squarefree_decompose(p)
        mults = [m for _, m in d.factors]
        assert mults == sorted(set(mults)) == [3, 5]

    @settings(max_examples=25, deadline=None)
    @given(st.lists(small_polys, min_size=1, max_size=3),
           st.lists(st.integers(1, 3), min_size=3, max_size=3))
    def test_reassembly(self, parts, mults):
        p = IntPoly([1])
        for q, m in zip(parts, mults):
            if not q.is_zero:
                p = poly_mul(p, q**m)
        if p.is_zero or p.degree == 0:
            return
        d = squarefree_decompose(p)
        assert d.reassemble() == p.primitive_part()
        for f, _ in d.factors:
            assert f == f.primitive_part()
            assert poly_gcd(f, f.derivative()).degree == 0


class TestSeriesMulTruncate:
    def test_identity_polynomial(self):
        s = [3, 1, 4, 1, 5, 9]
        assert series_mul_truncate(IntPoly([1]), s, 4) == [3, 1, 4, 1]

    def test_fibonacci_annihilation(self):
        p = IntPoly([1, -1, -1])
        s = [1, 1, 2, 3, 5, 8, 13]
        assert series_mul_truncate(p, s, 7) == [1, 0, 0, 0, 0, 0, 0]

    def test_insufficient_series_rejected(self):
        with pytest.raises(ValueError):
            series_mul_truncate(IntPoly([1]), [1, 2], 3)

    @settings(max_examples=40, deadline=None)
    @given(small_polys, st.lists(st.integers(-9, 9), min_size=12, max_size=12))
    def test_matches_full_product_prefix(self, p, s):
        got = series_mul_truncate(p, s, 12)
        full = poly_mul(p, IntPoly(s + [1]))  # padded sentinel keeps length
        assert got == [full[i] for i in range(12)]
