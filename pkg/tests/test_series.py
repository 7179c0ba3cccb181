import itertools

import pytest
from hypothesis import given, strategies as st

from hooklab import (
    Series,
    TruncationError,
    count_generalized_mex,
    gf_M_k,
    gf_all_h_fixed,
    gf_first_column_k_hooks,
    gf_fixed_hooks,
    gf_fixed_hooks_double_sum,
    gf_fixed_hooks_simplified,
    gf_generalized_mex,
    gf_h_fixed_hook_k,
    gf_h_fixed_part_k,
    gf_ones_exact,
    gf_ones_shifted,
    inv_finite_pochhammer,
    inv_pochhammer_tail,
    partition_numbers,
    pentagonal_series,
    q_binomial,
    truncated_pentagonal,
)
from hooklab.oracle import partitions_of

N = 60

series_st = st.builds(
    lambda coeffs, offset: Series.make(coeffs, offset + len(coeffs) + 3, offset=offset),
    st.lists(st.integers(-9, 9), min_size=0, max_size=8),
    st.integers(-4, 4),
)


class TestArithmetic:
    def test_product(self):
        one_plus_q = Series.make([1, 1], 4)
        sq = one_plus_q * one_plus_q
        assert sq.coefficients(0, 3) == (1, 2, 1, 0)

    def test_shift_laurent(self):
        s = Series.make([1, 1], 4).shift(-1)
        assert s.offset == -1
        assert s.coefficients(-1, 1) == (1, 1, 0)

    def test_telescoping(self):
        geo = inv_finite_pochhammer(1, 10)
        one_minus_q = Series.make([1, -1], 10)
        assert (one_minus_q * geo).coefficients(0, 9) == (1,) + (0,) * 9

    def test_order_tracking(self):
        a = Series.make([1] * 6, 5)
        b = Series.make([1] * 3, 2)
        assert (a + b).order == 2
        assert (a * b).order == 2
        with pytest.raises(TruncationError):
            (a * b).coeff(3)

    def test_scalar_and_neg(self):
        a = Series.make([1, 2], 4)
        assert (3 * a).coefficients(0, 1) == (3, 6)
        assert (-a).coefficients(0, 1) == (-1, -2)
        assert (a - a).is_zero()

    def test_json_roundtrip(self):
        s = Series.make([3, 0, -2], 5, offset=-1)
        data = s.to_json_dict()
        assert data["coeffs"][0] == "3"
        assert Series.from_json_dict(data) == s

    @staticmethod
    def _agree(x, y):
        # "equal up to order": identical coefficients on the shared exact range
        hi = min(x.order, y.order)
        lo = min(x.offset, y.offset, hi)
        return x.coefficients(lo, hi) == y.coefficients(lo, hi)

    @given(series_st, series_st)
    def test_commutative(self, a, b):
        assert a + b == b + a
        assert a * b == b * a

    @given(series_st, series_st, series_st)
    def test_associative(self, a, b, c):
        assert self._agree((a + b) + c, a + (b + c))
        assert self._agree((a * b) * c, a * (b * c))

    @given(series_st, st.integers(-5, 5))
    def test_shift_roundtrip(self, a, m):
        assert a.shift(m).shift(-m) == a


class TestPochhammer:
    def test_partition_counts(self):
        gf = inv_pochhammer_tail(1, 20)
        p = partition_numbers(20)
        assert [gf.coeff(n) for n in range(21)] == p
        assert gf.coeff(5) == 7

    def test_no_ones(self):
        assert inv_pochhammer_tail(2, 10).coeff(5) == 2  # (5), (3,2)

    def test_above_cutoff_is_one(self):
        s = inv_pochhammer_tail(11, 10)
        assert s.coefficients(0, 10) == (1,) + (0,) * 10

    def test_finite_cases(self):
        assert inv_finite_pochhammer(0, 8) == Series.one(8)
        assert inv_finite_pochhammer(1, 8).coefficients(0, 8) == (1,) * 9
        assert inv_finite_pochhammer(2, 10).coeff(4) == 3

    def test_tail_identity_from_sum(self):
        # sum_j q^((T+2)j)/(q)_j = 1/(q^(T+2); q)_inf for T <= 10
        for t in range(11):
            acc = Series.zero(N)
            for j in itertools.count(0):
                e = (t + 2) * j
                if e > N:
                    break
                acc = acc + inv_finite_pochhammer(j, N - e).shift(e)
            assert acc == inv_pochhammer_tail(t + 2, N)


def _box_partitions(weight: int, rows: int, cols: int) -> int:
    return sum(
        1 for parts in partitions_of(weight) if len(parts) <= rows and (not parts or parts[0] <= cols)
    )


class TestQBinomial:
    def test_examples(self):
        assert q_binomial(2, 1, 10).coefficients(0, 2) == (1, 1, 0)
        assert q_binomial(4, 2, 10).coefficients(0, 5) == (1, 1, 2, 1, 1, 0)
        assert q_binomial(7, 0, 10) == Series.one(10)

    def test_out_of_range_is_zero(self):
        assert q_binomial(3, 5, 10).is_zero()
        assert q_binomial(3, -1, 10).is_zero()

    def test_counts_box_partitions(self):
        for a in range(8):
            for b in range(a + 1):
                gf = q_binomial(a, b, 16)
                for w in range(17):
                    assert gf.coeff(w) == _box_partitions(w, b, a - b), (a, b, w)

    def test_symmetry(self):
        for a in range(9):
            for b in range(a + 1):
                assert q_binomial(a, b, 20) == q_binomial(a, a - b, 20)

    def test_product_identity(self):
        # 1/(q)_a * 1/(q)_b = 1/(q)_{a+b} * [a+b over a]_q
        for a in range(9):
            for b in range(9):
                lhs = inv_finite_pochhammer(a, N) * inv_finite_pochhammer(b, N)
                rhs = inv_finite_pochhammer(a + b, N) * q_binomial(a + b, a, N)
                assert lhs == rhs, (a, b)


class TestFixedHookSeries:
    def test_forms_agree(self):
        assert gf_fixed_hooks_double_sum(N) == gf_fixed_hooks_simplified(N)

    def test_known_coefficients(self):
        gf = gf_fixed_hooks(40)
        assert gf.coeff(0) == 0
        assert gf.coefficients(1, 5) == (1, 0, 1, 2, 3)
        assert gf.coeff(9) == 12

    def test_part_k_spot_values(self):
        assert gf_h_fixed_part_k(0, 1, 10).coeff(4) == 1  # only (2,1,1)
        assert gf_h_fixed_part_k(0, 9, 9).coeff(9) == 0

    def test_part_k_weight_42_example(self):
        # the weight-42 partition (11,6,5,5,4,4,4,2,1) has a -1-fixed hook
        # h_{7,1} = 6 at part size 4; the coefficient counts its whole class
        from hooklab import Partition, count_h_fixed_by_part

        lam = Partition((11, 6, 5, 5, 4, 4, 4, 2, 1))
        report = lam.find_h_fixed_hook(-1)
        assert report.position == 7 and report.hook == 6 and report.part == 4
        coeff = gf_h_fixed_part_k(-1, 4, 42).coeff(42)
        assert coeff == count_h_fixed_by_part(-1, 4, 42)[42] >= 1

    def test_part_sum_is_fixed_hooks(self):
        total = Series.zero(40)
        for k in range(1, 41):
            total = total + gf_h_fixed_part_k(0, k, 40)
        assert total == gf_fixed_hooks(40)

    def test_hook_k_edge_cases(self):
        assert gf_h_fixed_hook_k(0, 1, 10).coefficients(0, 10) == (0, 1) + (0,) * 9
        with pytest.raises(ValueError, match="needs h <="):
            gf_h_fixed_hook_k(3, 2, 10)

    def test_hook_row_one(self):
        # h = k-1 places the hook in row 1
        from hooklab import count_h_fixed_by_hook

        for k in range(1, 6):
            gf = gf_h_fixed_hook_k(k - 1, k, 20)
            table = count_h_fixed_by_hook(k - 1, k, 20)
            assert [gf.coeff(n) for n in range(21)] == [table[n] for n in range(21)]

    def test_all_h_fixed_matches_fixed_hooks(self):
        assert gf_all_h_fixed(0, 40) == gf_fixed_hooks(40)

    def test_all_h_fixed_vanishing(self):
        gf = gf_all_h_fixed(-8, 30)
        for n in range(0, 8):
            assert gf.coeff(n) == 0

    def test_all_h_minus_one_is_shifted_M_sum(self):
        # the inner sum at h = -1 is q^(-C(l,2)) M_l(q)
        total = Series.zero(N)
        for l in range(1, 11):
            c2 = l * (l - 1) // 2
            if l * (l + 1) > N:
                break
            total = total + gf_M_k(l, N + c2).shift(-c2)
        assert total.coefficients(0, N) == gf_all_h_fixed(-1, N).coefficients(0, N)

    def test_first_column_hooks_k1(self):
        gf = gf_first_column_k_hooks(1, 20)
        p = partition_numbers(20)
        assert gf.coeff(1) == 1
        assert gf.coeff(5) == 5
        assert all(gf.coeff(n) == p[n - 1] for n in range(1, 21))


class TestOnesSeries:
    def test_exact_examples(self):
        assert gf_ones_exact(0, 10).coeff(4) == 1  # only (3,1)
        assert gf_ones_exact(-1, 10).coeff(0) == 0
        assert gf_ones_exact(1, 10).coeff(2) == 1  # (1,1)
        with pytest.raises(ValueError, match="h >= -1"):
            gf_ones_exact(-2, 10)

    def test_exact_matches_part_one(self):
        for h in range(-1, 4):
            assert gf_ones_exact(h, 30) == gf_h_fixed_part_k(h, 1, 30)

    def test_shifted_matches_part_one_all_h(self):
        for h in range(-4, 4):
            assert gf_ones_shifted(h, 30) == gf_h_fixed_part_k(h, 1, 30)

    def test_shifted_equals_exact_at_minus_one(self):
        a = gf_ones_shifted(-1, 30)
        b = gf_ones_exact(-1, 30)
        assert a == b

    def test_shifted_h_minus_two_spot(self):
        # partitions of n+2 with >= 3 parts and exactly one 1; n = 3 gives (2,2,1) only
        assert gf_ones_shifted(-2, 10).coeff(3) == 1


class TestMexSeries:
    def test_M1_values(self):
        gf = gf_M_k(1, 20)
        p = partition_numbers(20)
        assert gf.coeff(0) == 0
        assert gf.coeff(1) == 0
        assert gf.coeff(5) == 2  # (5), (3,2)
        for n in range(1, 21):
            assert gf.coeff(n) == p[n] - p[n - 1]

    def test_generalized_equals_part_form(self):
        for h in range(-3, 3):
            for k in range(1, 5):
                assert gf_generalized_mex(h, k, 40) == gf_h_fixed_part_k(h, k, 40)

    def test_minus_one_is_shifted_M(self):
        for k in range(1, 6):
            c2 = k * (k - 1) // 2
            shifted = gf_M_k(k, N + c2).shift(-c2)
            assert gf_generalized_mex(-1, k, N).coefficients(0, N) == shifted.coefficients(0, N)

    def test_k1_has_no_padding(self):
        assert gf_generalized_mex(2, 1, 20) == gf_h_fixed_part_k(2, 1, 20)

    def test_generalized_matches_oracle_at_shift(self):
        h, k = 0, 1
        gf = gf_generalized_mex(h, k, 20)
        table = count_generalized_mex(h, k, 20)
        # coefficient at q^n counts partitions of n + C(k,2) - (h+1) in the class
        assert gf.coeff(4) == table[3] == 1


class TestPentagonal:
    def test_series_signs(self):
        gf = pentagonal_series(20)
        expected = {0: 1, 1: -1, 2: -1, 5: 1, 7: 1, 12: -1, 15: -1}
        for e in range(16):
            assert gf.coeff(e) == expected.get(e, 0)

    def test_recurrence(self):
        p = partition_numbers(10)
        assert p == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
        assert p[5] == p[4] + p[3] - p[0]

    def test_euler_inverse(self):
        product = pentagonal_series(N) * inv_pochhammer_tail(1, N)
        assert product == Series.one(N)

    def test_truncation_values(self):
        assert truncated_pentagonal(1, 5) == 2
        p = partition_numbers(9)
        assert truncated_pentagonal(2, 9) == p[9] - p[8] - p[7] + p[4]

    def test_truncation_sign_identity(self):
        from hooklab import count_mex_class_multi

        tables = count_mex_class_multi((1, 2, 3, 4, 5), 30)
        for k in range(1, 6):
            sign = 1 if k % 2 else -1
            for n in range(1, 31):
                assert sign * truncated_pentagonal(k, n) == tables[k][n]

    def test_nonnegative_after_sign(self):
        for k in range(1, 6):
            sign = 1 if k % 2 else -1
            for n in range(1, 61):
                assert sign * truncated_pentagonal(k, n) >= 0


class TestNonnegativity:
    def test_counting_series_have_nonnegative_coefficients(self):
        candidates = [
            gf_fixed_hooks(40),
            gf_first_column_k_hooks(3, 40),
            gf_M_k(2, 40),
            gf_all_h_fixed(-2, 40),
            gf_ones_shifted(-3, 40),
            gf_h_fixed_hook_k(-1, 3, 40),
        ]
        for s in candidates:
            assert all(c >= 0 for c in s.coefficients(0, 40))
