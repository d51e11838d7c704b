import itertools

import pytest
from hypothesis import given, strategies as st

from trendcontrast import (
    TimeSeries,
    extract_extremes,
    find_occurrences,
    fuse,
    group_fusion_pairs,
    group_of,
    prefix_order,
    relative_order,
    suffix_order,
)

permutations = st.integers(3, 7).flatmap(
    lambda m: st.permutations(list(range(1, m + 1))).map(tuple)
)
unique_windows = st.lists(
    st.integers(min_value=-(10**6), max_value=10**6), min_size=3, max_size=9, unique=True
)


class TestProjections:
    @pytest.mark.parametrize(
        "pattern,expected",
        [((1, 3, 2), (1, 2)), ((2, 1, 3), (2, 1)), ((2, 1, 4, 3), (2, 1, 3))],
    )
    def test_prefix_goldens(self, pattern, expected):
        assert relative_order(pattern[:-1]) == expected  # independent check
        assert prefix_order(pattern) == expected

    @pytest.mark.parametrize(
        "pattern,expected",
        [((2, 1, 3), (1, 2)), ((1, 3, 2), (2, 1)), ((3, 1, 4, 2), (1, 3, 2))],
    )
    def test_suffix_goldens(self, pattern, expected):
        assert relative_order(pattern[1:]) == expected
        assert suffix_order(pattern) == expected

    def test_too_short(self):
        with pytest.raises(ValueError):
            prefix_order((1, 2))
        with pytest.raises(ValueError):
            suffix_order((2, 1))


class TestFuse:
    def test_special_case_golden(self):
        assert fuse((2, 1, 3), (1, 3, 2)) == ((2, 1, 4, 3), (3, 1, 4, 2))

    def test_general_case_golden(self):
        assert fuse((1, 3, 2), (2, 1, 3)) == ((1, 3, 2, 4),)

    def test_seed_fusion_golden(self):
        assert fuse((1, 2), (2, 1)) == ((1, 3, 2), (2, 3, 1))
        assert fuse((2, 1), (1, 2)) == ((2, 1, 3), (3, 1, 2))

    def test_mismatched_overlap_returns_none(self):
        # suffix of (1,3,2) is (2,1) but prefix of (1,3,2) is (1,2)
        assert fuse((1, 3, 2), (1, 3, 2)) is None

    def test_length_mismatch_rejected(self):
        with pytest.raises(ValueError):
            fuse((1, 2), (1, 3, 2))

    @given(permutations, permutations)
    def test_soundness(self, p, q):
        if len(p) != len(q):
            return
        fused = fuse(p, q)
        if fused is None:
            assert suffix_order(p) != prefix_order(q)
            return
        for w in fused:
            assert sorted(w) == list(range(1, len(p) + 2))
            assert prefix_order(w) == p
            assert suffix_order(w) == q

    @given(unique_windows)
    def test_fusing_window_orders_recovers_window(self, values):
        whole = relative_order(values)
        p = relative_order(values[:-1])
        q = relative_order(values[1:])
        fused = fuse(p, q)
        assert fused is not None
        assert whole in fused


class TestGroups:
    def test_group_of(self):
        assert group_of((1, 2)) == 1
        assert group_of((2, 1)) == 2
        assert group_of((2, 3, 1)) == 1
        assert group_of((3, 1, 2)) == 2

    def test_pair_stream_targets(self):
        pairs = list(group_fusion_pairs([(1, 2)], [(2, 1)]))
        assert pairs == [((1, 2), (2, 1), 1), ((2, 1), (1, 2), 2)]

    def test_empty_group_yields_nothing(self):
        assert list(group_fusion_pairs([], [(2, 1)])) == []

    @given(st.integers(0, 4), st.integers(0, 4))
    def test_pair_count(self, a, b):
        g1 = [("g1", i) for i in range(a)]
        g2 = [("g2", i) for i in range(b)]
        pairs = list(group_fusion_pairs(g1, g2))
        assert len(pairs) == 2 * a * b
        assert len(pairs) == len(list(itertools.product(g1, g2))) + len(list(itertools.product(g2, g1)))
        for p, q, _ in pairs:
            assert p[0] != q[0]  # never a same-group pair

    @given(st.lists(st.integers(-(10**6), 10**6), min_size=3, max_size=40, unique=True))
    def test_compressed_data_has_no_monotone_triples(self, values):
        # premise of cross-group completeness: same-group fusions could only
        # match strictly monotone triples, which compression removes
        shrunk = extract_extremes(TimeSeries("s", tuple(values), "+"))
        assert find_occurrences(shrunk.values, (1, 2, 3)) == []
        assert find_occurrences(shrunk.values, (3, 2, 1)) == []
