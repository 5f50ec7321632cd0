"""Tests for permutations, pattern containment and sub-permutations."""

import pytest

from subperm_patterns.errors import (
    InvalidInputError,
    ResourceLimitError,
    SearchBudgetExceeded,
    UnsupportedInputError,
)
from subperm_patterns.permutations import (
    Permutation,
    SearchBudget,
    all_sub_permutations,
    as_permutation,
    avoider,
    avoids,
    class_sizes,
    contains_pattern,
    count_class,
    enumerate_class,
    extend_right,
    format_permutation,
    gamma,
    gamma_u,
    is_decreasing,
    is_odd_alternating,
    parse_permutation,
    standardize,
    sub_permutation,
    sub_permutation_at,
    two_line,
    word_contains,
)


@pytest.fixture
def host():
    """The running example 4 5 3 1 2 6 8 7."""
    return parse_permutation("4 5 3 1 2 6 8 7")


@pytest.fixture
def u_host():
    return parse_permutation("11 10 8 7 9 4 3 6 5 2 1")


class TestModels:
    """Test the Permutation model and its text format."""

    def test_parse_and_format(self):
        """One-line text round-trips through parse and format."""
        p = parse_permutation("3 1 2")
        assert p.entries == (3, 1, 2)
        assert format_permutation(p) == "3 1 2"
        assert parse_permutation("3,1,2") == p

    def test_empty_permutation(self):
        assert len(Permutation(())) == 0

    @pytest.mark.parametrize("text", ["1 1 2", "0 1", "2 3", "a b"])
    def test_invalid_permutations(self, text):
        with pytest.raises(InvalidInputError):
            parse_permutation(text)

    def test_compact_pattern_form(self):
        """Short patterns may be written without spaces."""
        assert as_permutation("213") == Permutation((2, 1, 3))
        assert as_permutation([1, 3, 2, 4]) == Permutation((1, 3, 2, 4))

    def test_standardize(self):
        assert standardize([40, 10, 25]) == Permutation((3, 1, 2))
        with pytest.raises(InvalidInputError):
            standardize([1, 1])


class TestPatterns:
    """Test classical pattern containment."""

    def test_short_patterns(self, host):
        assert contains_pattern(host, "213")
        assert contains_pattern(host, "321")
        assert contains_pattern("1 2 3", "12")
        assert avoids("1 2 3", "21")
        assert not contains_pattern("1 2", "123")

    def test_long_patterns(self):
        assert contains_pattern("2 5 3 1 4", "1324") is False
        assert contains_pattern("1 4 2 5 3", "1324")
        assert contains_pattern("2 5 3 1 4", "25314")
        assert not contains_pattern("1 2 3 4 5", "25314")

    def test_long_patterns_agree_with_brute_force(self):
        """Backtracking agrees with a subsequence scan on all of S_6 for 1324."""
        from itertools import combinations

        pattern = Permutation((1, 3, 2, 4))
        for p in enumerate_class(6):
            expected = any(
                standardize([p[i] for i in idx]) == pattern for idx in combinations(range(6), 4)
            )
            assert contains_pattern(p, pattern) == expected

    def test_empty_pattern_is_rejected(self):
        with pytest.raises(InvalidInputError):
            contains_pattern("1 2", Permutation(()))

    def test_budget_exhaustion(self):
        with pytest.raises(SearchBudgetExceeded):
            contains_pattern("10 9 8 7 6 5 4 3 2 1", "1324", budget=1)

    def test_every_short_pattern_agrees_with_brute_force(self):
        """All patterns of length <= 4 against a subsequence scan on sampled texts up to size 9."""
        from itertools import combinations, permutations

        import numpy as np

        rng = np.random.default_rng(np.random.SeedSequence(1729))
        texts = [Permutation(tuple(int(x) + 1 for x in rng.permutation(n))) for n in range(1, 10) for _ in range(12)]
        for length in range(1, 5):
            patterns = [Permutation(entries) for entries in permutations(range(1, length + 1))]
            for text in texts:
                found = {standardize([text[i] for i in idx]) for idx in combinations(range(len(text)), length)}
                for pattern in patterns:
                    assert contains_pattern(text, pattern) == (pattern in found), (str(text), str(pattern))

    def test_shared_budget_spans_calls(self):
        budget = SearchBudget(5)
        assert contains_pattern("1 3 2 4", "1324", budget=budget)
        assert budget.remaining == 1
        with pytest.raises(SearchBudgetExceeded):
            contains_pattern("1 3 2 4", "1324", budget=budget)

    def test_integer_budget_is_per_call(self):
        assert contains_pattern("1 3 2 4", "1324", budget=5)
        assert contains_pattern("1 3 2 4", "1324", budget=5)

    def test_word_contains(self):
        assert word_contains([30, 10, 20], Permutation((3, 1, 2)))
        assert not word_contains([10, 20, 30], Permutation((2, 1)))

    def test_avoider_name(self):
        assert avoider("213").__name__ == "av_213"

    @pytest.mark.parametrize(
        "text,expected",
        [("1", True), ("2 1 3", True), ("3 1 2", True), ("1 3 2", False), ("2 1", False), ("5 1 4 2 3", True)],
    )
    def test_odd_alternating(self, text, expected):
        assert is_odd_alternating(parse_permutation(text)) is expected


class TestSubPermutations:
    """Test sub-permutation extraction."""

    def test_running_example(self, host):
        """All eight sub-permutations of 4 5 3 1 2 6 8 7."""
        expected = {
            1: ((1, 8), "4 5 3 1 2 6 8 7"),
            2: ((5, 8), "1 2 4 3"),
            3: ((1, 3), "2 3 1"),
            4: ((1, 2), "1 2"),
            5: ((2, 2), "1"),
            6: ((6, 8), "1 3 2"),
            7: ((7, 8), "2 1"),
            8: ((7, 7), "1"),
        }
        records = all_sub_permutations(host)
        assert [r.generator_value for r in records] == list(range(1, 9))
        for record in records:
            window, pattern = expected[record.generator_value]
            assert record.window == window
            assert str(record.pattern) == pattern

    def test_first_is_host(self, host):
        assert sub_permutation(host, 1).pattern == host
        assert sub_permutation(host, 1).is_prefix

    def test_position_accessor(self, host):
        """Position 3 holds the entry 3."""
        assert sub_permutation_at(host, 3) == sub_permutation(host, 3)

    def test_out_of_range(self, host):
        with pytest.raises(InvalidInputError):
            sub_permutation(host, 0)
        with pytest.raises(InvalidInputError):
            sub_permutation(host, 9)
        with pytest.raises(InvalidInputError):
            sub_permutation_at(host, 9)

    def test_to_dict(self, host):
        record = sub_permutation(host, 6)
        assert record.to_dict() == {"generator": 6, "window": [6, 8], "pattern": "1 3 2", "size": 3}

    def test_gamma(self, host):
        """Largest Av(213) sub-permutation of the running example is g(2) = 1 2 4 3."""
        assert gamma(host, avoider("213")) == 4
        assert gamma(host, is_decreasing) == 2


class TestGammaU:
    """Test the largest non-trivial decreasing sub-permutation of a 123-avoider."""

    def test_example(self, u_host):
        assert gamma_u(u_host) == 2

    def test_decreasing_host_has_only_trivial_windows(self):
        assert gamma_u(parse_permutation("5 4 3 2 1")) == 0

    def test_rejects_123(self):
        with pytest.raises(UnsupportedInputError):
            gamma_u(parse_permutation("1 2 3"))


class TestTwoLine:
    """Test the two-line drawing of 123-avoiders."""

    def test_example(self, u_host):
        drawing = two_line(u_host)
        assert drawing.line_string() == "DDDDUDDUUDD"
        assert drawing.upper_entries == (9, 6, 5)
        assert drawing.l == 4
        assert drawing.v == 0

    def test_single_entry(self):
        drawing = two_line(parse_permutation("1"))
        assert drawing.l == 1
        assert drawing.v == 0

    def test_rejects_123(self):
        with pytest.raises(UnsupportedInputError):
            two_line(parse_permutation("2 1 3 4"))

    def test_extend_right(self):
        children = extend_right(parse_permutation("2 1"))
        assert [str(c) for c in children] == ["3 2 1", "3 1 2", "2 1 3"]

    def test_generating_tree_reaches_every_avoider(self):
        """Repeated right extensions from 1 produce each 123-avoider exactly once."""
        level = [parse_permutation("1")]
        for n in range(2, 8):
            level = [child for p in level for child in extend_right(p)]
            assert len(level) == len(set(level))
            assert set(level) == set(enumerate_class(n, "123"))

    def test_children_take_labels_one_to_l_plus_one(self):
        """Each child label is its own l, and a node labelled l has children labelled 1..l+1."""
        for n in range(1, 8):
            for p in enumerate_class(n, "123"):
                label = two_line(p).l
                labels = sorted(two_line(child).l for child in extend_right(p))
                assert labels == list(range(1, label + 2)), str(p)

    def test_decreasing_windows_follow_the_lines(self):
        """Non-trivial decreasing windows lie on U; trivial ones are prefixes on D."""
        for n in range(1, 8):
            for p in enumerate_class(n, "123"):
                upper = two_line(p).upper
                for record in all_sub_permutations(p):
                    if not is_decreasing(record.pattern):
                        continue
                    first, last = record.window
                    lines = upper[first - 1:last]
                    if record.is_prefix:
                        assert not any(lines), (str(p), record.window)
                    else:
                        assert all(lines), (str(p), record.window)


class TestOracle:
    """Test the exhaustive class enumerators."""

    def test_counts(self):
        assert count_class(4) == 24
        assert count_class(5, "123") == 42
        assert count_class(6, "1324") == 513
        assert class_sizes("213", 6) == {1: 1, 2: 2, 3: 5, 4: 14, 5: 42, 6: 132}

    def test_lexicographic_order(self):
        listed = [p.entries for p in enumerate_class(4, "231")]
        assert listed == sorted(listed)

    def test_ceiling(self):
        with pytest.raises(ResourceLimitError):
            enumerate_class(6, ceiling=5)

    def test_ceiling_from_environment(self, monkeypatch):
        monkeypatch.setenv("SUBPERM_ORACLE_CEILING", "4")
        with pytest.raises(ResourceLimitError):
            count_class(5)
