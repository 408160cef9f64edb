import random
from fractions import Fraction as Q

import pytest

from cauchykit.minmat import (
    MinSpec,
    SortedMinSpec,
    UnsortedInputError,
    build,
    det_closed,
    det_zero_predicate,
    inverse_column_sums,
    inverse_entry_sum,
    normalize,
)
from cauchykit.ring import FpElement, NotInvertibleError, UnorderedRingError

ANCHOR = MinSpec([1, 3], [2, 4])


def rand_spec(rng, n):
    return MinSpec(
        [Q(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(n)],
        [Q(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(n)],
    )


class TestBuild:
    def test_anchor(self):
        assert build(ANCHOR).to_rows() == [[1, 1], [2, 3]]

    def test_single(self):
        assert build(MinSpec([Q(5, 2)], [2])).to_rows() == [[2]]

    def test_constant(self):
        spec = MinSpec([7, 7], [7, 7])
        assert build(spec).to_rows() == [[7, 7], [7, 7]]

    def test_prime_field_rejected(self):
        with pytest.raises(UnorderedRingError):
            MinSpec([FpElement(1, 101)], [FpElement(2, 101)])

    def test_float_rejected(self):
        with pytest.raises(TypeError):
            MinSpec([0.5], [1])


class TestNormalize:
    def test_sorts(self):
        s = normalize(MinSpec([3, 1], [4, 2]))
        assert s.xs == (1, 3)
        assert s.ys == (2, 4)
        assert s.swapped is False

    def test_swaps_roles(self):
        s = normalize(MinSpec([5, 6], [1, 2]))
        assert s.xs == (1, 2)
        assert s.ys == (5, 6)
        assert s.swapped is True

    def test_idempotent_on_sorted(self):
        s = normalize(ANCHOR)
        assert (s.xs, s.ys, s.swapped) == ((1, 3), (2, 4), False)
        again = normalize(s)
        assert (again.xs, again.ys, again.swapped) == (s.xs, s.ys, False)

    def test_sorted_spec_validates(self):
        with pytest.raises(UnsortedInputError):
            SortedMinSpec([3, 1], [2, 4])
        with pytest.raises(UnsortedInputError):
            SortedMinSpec([3, 4], [1, 2])  # x[0] > y[0], needs the swap

    def test_determinant_magnitude_preserved(self):
        rng = random.Random(107)
        for _ in range(50):
            spec = rand_spec(rng, rng.randint(1, 5))
            before = build(spec).det_fast()
            after = build(normalize(spec)).det_fast()
            assert abs(before) == abs(after)

    def test_min_value_preserved(self):
        rng = random.Random(109)
        for _ in range(20):
            spec = rand_spec(rng, rng.randint(1, 5))
            s = normalize(spec)
            assert min(min(s.xs), min(s.ys)) == min(min(spec.xs), min(spec.ys))
            assert s.xs[0] <= s.ys[0]


class TestInverseEntrySum:
    def test_anchor(self):
        f_inv = build(ANCHOR).inverse()
        assert f_inv.to_rows() == [[3, -1], [-2, 1]]
        assert inverse_entry_sum(ANCHOR) == 1
        assert f_inv.entry_sum() == 1

    def test_single(self):
        assert inverse_entry_sum(MinSpec([Q(3)], [Q(4)])) == Q(1, 3)

    def test_fractional_min(self):
        assert inverse_entry_sum(MinSpec([Q(1, 2), 3], [2, 5])) == 2

    def test_singular_raises(self):
        with pytest.raises(NotInvertibleError):
            inverse_entry_sum(MinSpec([1, 2], [3, 4]))

    def test_matches_oracle(self):
        rng = random.Random(113)
        done = 0
        while done < 40:
            spec = rand_spec(rng, rng.randint(1, 5))
            f = build(spec)
            if f.det_fast() == 0:
                continue
            assert inverse_entry_sum(spec) == f.inverse().entry_sum()
            done += 1

    def test_unchanged_by_normalize(self):
        rng = random.Random(127)
        done = 0
        while done < 20:
            spec = rand_spec(rng, rng.randint(1, 5))
            if build(spec).det_fast() == 0:
                continue
            assert inverse_entry_sum(spec) == inverse_entry_sum(normalize(spec))
            done += 1

    def test_invertible_forces_nonzero_min(self):
        rng = random.Random(131)
        for _ in range(300):
            spec = rand_spec(rng, rng.randint(1, 4))
            if build(spec).det_fast() != 0:
                assert min(min(spec.xs), min(spec.ys)) != 0


class TestInverseColumnSums:
    def test_anchor(self):
        assert inverse_column_sums(normalize(ANCHOR)) == (1, 0)

    def test_single(self):
        assert inverse_column_sums(normalize(MinSpec([Q(4)], [Q(9)]))) == (Q(1, 4),)

    def test_matches_oracle(self):
        rng = random.Random(137)
        done = 0
        while done < 30:
            spec = normalize(rand_spec(rng, rng.randint(1, 5)))
            f = build(spec)
            if f.det_fast() == 0:
                continue
            inv = f.inverse()
            assert inverse_column_sums(spec) == tuple(inv.column_sum(j) for j in range(spec.n))
            done += 1

    def test_singular_raises(self):
        with pytest.raises(NotInvertibleError):
            inverse_column_sums(normalize(MinSpec([1, 2], [3, 4])))

    def test_unsorted_input_rejected(self):
        # the hypotheses are revalidated even for a hand-built plain spec
        with pytest.raises(UnsortedInputError):
            inverse_column_sums(MinSpec([3, 1], [2, 4]))
        with pytest.raises(UnsortedInputError):
            inverse_column_sums(MinSpec([3, 4], [1, 2]))


class TestDetClosed:
    def test_anchor(self):
        assert det_closed(ANCHOR) == 1
        assert build(ANCHOR).det_fast() == 1

    def test_single(self):
        assert det_closed(MinSpec([Q(2, 3)], [Q(1, 2)])) == Q(1, 2)

    def test_unbalanced_zero(self):
        spec = MinSpec([1, 2], [3, 4])
        assert build(spec).to_rows() == [[1, 1], [2, 2]]
        assert det_closed(spec) == 0
        assert build(spec).det_fast() == 0

    def test_unsorted_rejected(self):
        with pytest.raises(UnsortedInputError):
            det_closed(MinSpec([3, 1], [2, 4]))
        with pytest.raises(UnsortedInputError):
            det_closed(MinSpec([1, 3], [4, 2]))

    def test_no_cross_condition_needed(self):
        # x[0] > y[0] is fine here, unlike the column-sum statement
        spec = MinSpec([3, 4], [1, 2])
        assert det_closed(spec) == build(spec).det_fast()

    def test_matches_oracle(self):
        rng = random.Random(139)
        for _ in range(150):
            spec = rand_spec(rng, rng.randint(1, 6))
            sorted_spec = MinSpec(sorted(spec.xs), sorted(spec.ys))
            assert det_closed(sorted_spec) == build(sorted_spec).det_fast()


class TestDetZeroPredicate:
    def test_zero_case(self):
        assert det_zero_predicate(MinSpec([1, 2], [3, 4])) is True

    def test_nonzero_case(self):
        assert det_zero_predicate(ANCHOR) is False

    def test_zero_min_forces_zero(self):
        assert det_zero_predicate(MinSpec([0, 5], [1, 6])) is True

    def test_tracks_determinant(self):
        rng = random.Random(149)
        for _ in range(120):
            spec = rand_spec(rng, rng.randint(1, 6))
            sorted_spec = MinSpec(sorted(spec.xs), sorted(spec.ys))
            assert det_zero_predicate(sorted_spec) == (det_closed(sorted_spec) == 0)
            assert det_zero_predicate(sorted_spec) == (build(sorted_spec).det_fast() == 0)
