import json
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from restchroma import IntPolynomial, compare_eventually, elementary_symmetric


def poly(*ascending):
    return IntPolynomial(ascending)


class TestConstruction:
    def test_trailing_zeros_trimmed(self):
        assert poly(1, 2, 0, 0).coeffs == (1, 2)

    def test_zero_polynomial(self):
        assert poly(0, 0).coeffs == ()
        assert poly().is_zero()
        assert poly().degree == -1

    def test_from_roots(self):
        # (x-1)(x-2) = x^2 - 3x + 2
        assert IntPolynomial.from_roots([1, 2]) == poly(2, -3, 1)
        assert IntPolynomial.from_roots([]) == IntPolynomial.one()

    def test_monomial(self):
        assert IntPolynomial.monomial(3, 2) == poly(0, 0, 0, 2)
        with pytest.raises(ValueError):
            IntPolynomial.monomial(-1)


class TestArithmetic:
    def test_product(self):
        assert poly(-1, 1) * poly(-2, 1) == poly(2, -3, 1)

    def test_self_difference_is_zero(self):
        p = poly(2, -3, 1)
        assert (p - p).is_zero()

    def test_multiplicative_identity(self):
        p = poly(2, -3, 1)
        assert p * IntPolynomial.one() == p

    def test_int_scaling(self):
        assert 3 * poly(1, 1) == poly(3, 3)
        assert poly(1, 1) * 0 == IntPolynomial.zero()


class TestEvaluation:
    def test_cubic_at_four(self):
        # equals (4-1)(4-2)(4-3) from the factored form
        assert poly(-6, 11, -6, 1).evaluate(4) == 6

    def test_at_zero_gives_constant(self):
        assert poly(-6, 11, -6, 1).evaluate(0) == -6

    def test_zero_polynomial_everywhere_zero(self):
        assert IntPolynomial.zero().evaluate(17) == 0

    def test_callable(self):
        assert poly(1, 1)(5) == 6


class TestShift:
    def test_square(self):
        assert poly(0, 0, 1).shift(1) == poly(1, -2, 1)

    def test_shift_by_zero_is_identity(self):
        p = poly(2, -3, 1)
        assert p.shift(0) == p

    def test_quadratic(self):
        # (x-1-1)(x-1-2) = (x-2)(x-3)
        assert poly(2, -3, 1).shift(1) == poly(6, -5, 1)

    @settings(max_examples=60, deadline=None)
    @given(
        st.lists(st.integers(-9, 9), max_size=5),
        st.integers(0, 5),
        st.integers(0, 20),
    )
    def test_shift_matches_evaluation(self, coeffs, k, x):
        p = IntPolynomial(coeffs)
        assert p.shift(k).evaluate(x + k) == p.evaluate(x)


class TestCompareEventually:
    def test_equal(self):
        p = poly(2, -3, 1)
        assert compare_eventually(p, p) == "equal"

    def test_cycle_fixture_ordering(self):
        # the three 3-cycle polynomials, built from their factored forms
        r1 = IntPolynomial.from_roots([1, 2, 3])
        r2 = poly(-2, 1) * poly(5, -4, 1)
        r3 = 2 * (poly(-2, 1) * poly(-2, 1)) + poly(-2, 1) * poly(-3, 1) + poly(-3, 1) * poly(-3, 1) * poly(-3, 1)
        assert compare_eventually(r3, r1) == "p_wins"
        assert compare_eventually(r1, r2) == "q_wins"
        assert compare_eventually(r2, r3) == "q_wins"

    def test_seven_cycle_fixture_ordering(self):
        p1 = poly(-581, 1333, -1404, 879, -353, 91, -14, 1)
        p2 = poly(-600, 1352, -1411, 880, -353, 91, -14, 1)
        assert compare_eventually(p2, p1) == "p_wins"

    @settings(max_examples=80, deadline=None)
    @given(st.lists(st.integers(-9, 9), max_size=5), st.lists(st.integers(-9, 9), max_size=5))
    def test_consistent_with_sampled_evaluation(self, a, b):
        p, q = IntPolynomial(a), IntPolynomial(b)
        verdict = compare_eventually(p, q)
        d = p - q
        if verdict == "equal":
            assert d.is_zero()
            return
        big = max(abs(c) for c in d.coeffs)
        x = 10 * (d.degree + 1) * (1 + big)
        if verdict == "p_wins":
            assert p.evaluate(x) > q.evaluate(x)
        else:
            assert p.evaluate(x) < q.evaluate(x)


class TestElementarySymmetric:
    def test_first(self):
        assert elementary_symmetric([1, 1, 2], 1) == 4

    def test_zeroth_is_one(self):
        assert elementary_symmetric([5, 7, 9], 0) == 1
        assert elementary_symmetric([], 0) == 1

    def test_second(self):
        # 1*1 + 1*2 + 1*2
        assert elementary_symmetric([1, 1, 2], 2) == 5

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            elementary_symmetric([1, 2], 3)
        with pytest.raises(ValueError):
            elementary_symmetric([1, 2], -1)

    @settings(max_examples=50, deadline=None)
    @given(st.lists(st.integers(-6, 6), max_size=7), st.integers(0, 7))
    def test_against_subset_enumeration(self, values, i):
        if i > len(values):
            return
        brute = 0
        for subset in combinations(values, i):
            prod = 1
            for v in subset:
                prod *= v
            brute += prod
        assert elementary_symmetric(values, i) == brute

    @settings(max_examples=40, deadline=None)
    @given(st.lists(st.integers(0, 5), max_size=6))
    def test_root_product_expansion(self, sizes):
        # prod (x - a) expands with alternating symmetric-function coefficients
        n = len(sizes)
        p = IntPolynomial.from_roots(sizes)
        for i in range(n + 1):
            expected = (-1) ** (n - i) * elementary_symmetric(sizes, n - i)
            assert p.coefficient(i) == expected


class TestRendering:
    def test_human_descending(self):
        assert str(poly(-6, 11, -6, 1)) == "x^3 - 6x^2 + 11x - 6"
        assert str(poly(16, -28, 20, -7, 1)) == "x^4 - 7x^3 + 20x^2 - 28x + 16"
        assert str(poly(0, -3, 0, 1)) == "x^3 - 3x"
        assert str(IntPolynomial.zero()) == "0"
        assert str(poly(-13,)) == "-13"
        assert str(poly(0, -1)) == "-x"

    def test_vector_str(self):
        assert poly(-6, 11, -6, 1).vector_str() == "[-6, 11, -6, 1]"

    def test_json_round_trip(self):
        p = poly(-581, 1333, -1404, 879, -353, 91, -14, 1)
        text = p.to_json()
        assert json.loads(text) == ["-581", "1333", "-1404", "879", "-353", "91", "-14", "1"]
        assert IntPolynomial.from_json(text) == p

    def test_json_rejects_non_array(self):
        with pytest.raises(ValueError):
            IntPolynomial.from_json('{"coeffs": []}')
