"""Unit tests for the enumeration-based partition oracles."""

from __future__ import annotations

import pytest

from qgordon.partitions import (
    GordonParams,
    count_A,
    count_B,
    count_W,
    count_Wbar,
    is_gordon_admissible,
    partitions_of,
)


class TestEnumeration:
    def test_partition_counts(self):
        """p(n) for n = 0..10 is 1,1,2,3,5,7,11,15,22,30,42."""
        expected = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
        assert [len(partitions_of(n)) for n in range(11)] == expected

    def test_partitions_are_frequency_pairs(self):
        got = set(partitions_of(4))
        expected = {
            ((4, 1),),
            ((3, 1), (1, 1)),
            ((2, 2),),
            ((2, 1), (1, 2)),
            ((1, 4),),
        }
        assert got == expected

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            partitions_of(-1)


class TestGordonAdmissible:
    def test_small_cases(self):
        gp = GordonParams(2, 2)
        assert is_gordon_admissible([], gp)
        assert is_gordon_admissible([4, 1], gp)
        assert not is_gordon_admissible([1, 1], gp)  # f_1 = 2 > a - 1
        assert not is_gordon_admissible([3, 2], gp)  # adjacent parts
        assert not is_gordon_admissible([2, 2], gp)  # f_2 = 2 > k - 1

    def test_ones_cap_depends_on_a(self):
        assert not is_gordon_admissible([1], (2, 1))
        assert is_gordon_admissible([1], (2, 2))
        assert is_gordon_admissible([1, 1], (3, 3))
        assert not is_gordon_admissible([1, 1], (3, 2))

    def test_accepts_tuple_params(self):
        assert is_gordon_admissible([5, 3, 1], (2, 2))

    def test_rejects_bad_parts(self):
        with pytest.raises(ValueError):
            is_gordon_admissible([0], (2, 2))

    def test_rejects_bad_params(self):
        with pytest.raises(ValueError):
            GordonParams(2, 3)
        with pytest.raises(ValueError):
            GordonParams(2, 0)


class TestCounts:
    def test_first_rogers_ramanujan_counts(self):
        """B(2,2): parts distinct with gaps >= 2."""
        expected = [1, 1, 1, 1, 2, 2, 3, 3, 4, 5, 6]
        assert [count_B(n, (2, 2)) for n in range(11)] == expected

    def test_second_rogers_ramanujan_counts(self):
        """B(2,1): additionally no part 1."""
        expected = [1, 0, 1, 1, 1, 1, 2, 2, 3, 3, 4]
        assert [count_B(n, (2, 1)) for n in range(11)] == expected

    def test_congruence_counts_match_gordon_counts(self):
        """A(k,a)(n) = B(k,a)(n) on a small grid (Gordon's theorem)."""
        for k in (2, 3):
            for a in range(1, k + 1):
                for n in range(16):
                    assert count_A(n, (k, a)) == count_B(n, (k, a)), (k, a, n)

    def test_congruence_residues(self):
        """A(2,1) partitions avoid parts = 0, 1, 4 mod 5."""
        assert count_A(1, (2, 1)) == 0
        assert count_A(2, (2, 1)) == 1  # (2)
        assert count_A(5, (2, 1)) == 1  # (3,2); (5) banned
        assert count_A(7, (2, 1)) == 2  # (7), (3,2,2)

    def test_even_parity_filter(self):
        """W(3,3)(4) = 2: the partitions (3,1) and (2,2)."""
        assert count_W(4, (3, 3)) == 2

    def test_odd_parity_filter(self):
        """Wbar(3,2): n=1 fails (odd part once), n=2 has only (2)."""
        assert count_Wbar(0, (3, 2)) == 1
        assert count_Wbar(1, (3, 2)) == 0
        assert count_Wbar(2, (3, 2)) == 1

    def test_parity_families_are_subsets_of_B(self):
        for n in range(14):
            for k in (2, 3, 4):
                for a in range(1, k + 1):
                    b = count_B(n, (k, a))
                    assert count_W(n, (k, a)) <= b
                    assert count_Wbar(n, (k, a)) <= b

    def test_B_monotone_in_a_and_k(self):
        """Loosening f_1 (a) or the pair bound (k) can only add partitions."""
        for n in range(14):
            for k in (2, 3, 4):
                for a in range(1, k):
                    assert count_B(n, (k, a)) <= count_B(n, (k, a + 1))
                for a in range(1, k + 1):
                    assert count_B(n, (k, a)) <= count_B(n, (k + 1, a))


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
