from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from billiard_partitions.enumeration import (
    Partition,
    PEPartition,
    PEType,
    compose,
    decompose,
    distinct_partitions,
    enumerate_by_shape,
    enumerate_by_sum,
    enumerate_irreducible,
    enumerate_pe_by_largest_sum,
    enumerate_pe_by_total,
    enumerate_reduced,
    is_euclidean,
    is_irreducible,
    is_pe_member,
    is_reducible_by_two,
    no_adjacent_odd,
    weight_exponent,
)
from billiard_partitions.qalgebra import ContractError

P = Partition.parse

NINE_OF_15 = ["13+2", "11+4", "10+3+2", "9+6", "9+4+2", "8+5+2", "7+6+2", "6+5+4", "6+4+3+2"]


def all_subsets_partitions(n):
    """Distinct-part partitions of n by checking every subset of {1..n}."""
    out = []
    for r in range(1, n + 1):
        if r * (r + 1) // 2 > n:
            break
        for c in combinations(range(n, 0, -1), r):
            if sum(c) == n:
                out.append(c)
    return out


def euclidean_members(limit):
    for n in range(1, limit + 1):
        yield from enumerate_by_sum(n)


class TestPartition:
    def test_parse_and_render(self):
        p = P("9+4+2")
        assert p.parts == (9, 4, 2)
        assert str(p) == "9+4+2"
        assert (p.total, p.length, p.largest, p.odd_count) == (15, 3, 9, 1)

    @pytest.mark.parametrize("text", ["2+4", "4+4", "0", "3+-1", "", "a+b", "5|2", "3+0"])
    def test_parse_rejects(self, text):
        with pytest.raises(ContractError):
            P(text)

    def test_pe_parse(self):
        p = PEPartition.parse("3+2|4+1", "light")
        assert p.m_parts == (3, 2) and p.n_parts == (4, 1)
        assert p.type_tag is PEType.LIGHT
        assert str(p) == "3+2|4+1"

    @pytest.mark.parametrize("text", ["2", "|2", "2|", "2|3|4", "2+3|4"])
    def test_pe_parse_rejects(self, text):
        with pytest.raises(ContractError):
            PEPartition.parse(text)


class TestIsEuclidean:
    @pytest.mark.parametrize(
        "text, expected",
        [("13+2", True), ("9", False), ("7+5+2", False), ("2", True), ("5+4+3+2", True)],
    )
    def test_examples(self, text, expected):
        assert is_euclidean(P(text)) is expected

    def test_empty_is_a_contract_error(self):
        with pytest.raises(ContractError):
            is_euclidean(Partition())


class TestIsIrreducible:
    @pytest.mark.parametrize(
        "text, expected", [("7+4+2", False), ("5+4+2", True), ("2", True), ("4", False)]
    )
    def test_examples(self, text, expected):
        assert is_irreducible(P(text)) is expected

    def test_requires_euclidean(self):
        with pytest.raises(ContractError):
            is_irreducible(P("9"))

    def test_gap_rule_matches_literal_definition(self):
        for p in euclidean_members(30):
            assert is_irreducible(p) == (not is_reducible_by_two(p.parts, True)), p


class TestWeights:
    @pytest.mark.parametrize(
        "text, w", [("6+4+2", 2), ("4+3+2", 0), ("7+6+4", 1), ("5+4+2", 1), ("6+5+4", 0)]
    )
    def test_examples(self, text, w):
        assert weight_exponent(P(text)) == w

    def test_requires_euclidean(self):
        with pytest.raises(ContractError):
            weight_exponent(P("7+5+2"))

    def test_nonnegative_exhaustive(self):
        assert all(weight_exponent(p) >= 0 for p in euclidean_members(40))

    def test_three_part_shapes(self):
        assert [str(p) for p in enumerate_by_shape(3, 6)] == ["6+5+4", "6+5+2", "6+4+2", "6+3+2"]
        assert [str(p) for p in enumerate_by_shape(3, 7)] == ["7+6+4", "7+6+2", "7+4+2"]
        assert [str(p) for p in enumerate_by_shape(3, 4)] == ["4+3+2"]


class TestEnumerateBySum:
    def test_fifteen(self):
        assert [str(p) for p in enumerate_by_sum(15)] == NINE_OF_15

    def test_small(self):
        assert enumerate_by_sum(1) == []
        assert [str(p) for p in enumerate_by_sum(6)] == ["6", "4+2"]

    def test_against_filtered_subsets(self):
        for n in range(1, 41):
            found = enumerate_by_sum(n)
            assert all(is_euclidean(p) and p.total == n for p in found)
            recount = [c for c in distinct_partitions(n) if c[-1] % 2 == 0 and no_adjacent_odd(c)]
            assert [p.parts for p in found] == recount

    def test_distinct_partitions_vs_subsets(self):
        for n in range(1, 21):
            assert sorted(distinct_partitions(n)) == sorted(all_subsets_partitions(n))

    def test_canonical_order(self):
        for n in range(1, 31):
            parts = [p.parts for p in enumerate_by_sum(n)]
            assert parts == sorted(parts, reverse=True)


class TestIrreducible:
    def test_examples(self):
        assert [str(p) for p in enumerate_irreducible(5, 8)] == [
            "8+7+6+4+2",
            "8+6+5+4+2",
            "8+6+4+3+2",
        ]
        assert enumerate_irreducible(1, 2) == [P("2")]
        assert enumerate_irreducible(1, 4) == []

    def test_subset_of_euclidean_and_irreducible(self):
        members = {p for p in euclidean_members(60)}
        for d in range(1, 8):
            for largest in range(1, 16):
                for p in enumerate_irreducible(d, largest):
                    assert p in members and is_irreducible(p)
                    assert p.length == d and p.largest == largest

    def test_reduced_matches_literal_definition(self):
        for n in range(1, 31):
            brute = sorted(
                c
                for c in distinct_partitions(n)
                if no_adjacent_odd(c) and not is_reducible_by_two(c, False)
            )
            built = sorted(
                p.parts
                for d in range(1, n + 1)
                for largest in range(1, n + 1)
                for p in enumerate_reduced(d, largest)
                if p.total == n
            )
            assert built == brute, n


class TestDecomposition:
    def test_examples(self):
        assert decompose(P("9+4+2")) == (P("5+4+2"), (4, 0, 0))
        assert decompose(P("2")) == (P("2"), (0,))
        assert decompose(P("6+4+2")) == (P("6+4+2"), (0, 0, 0))

    def test_compose_examples(self):
        assert compose(P("5+4+2"), (4, 0, 0)) == P("9+4+2")
        assert compose(P("2"), (0,)) == P("2")
        assert compose(P("3+2"), (2, 2)) == P("5+4")
        assert is_euclidean(P("5+4"))

    @pytest.mark.parametrize(
        "core, pad",
        [("7+4+2", (0, 0, 0)), ("5+4+2", (4, 0)), ("5+4+2", (0, 2, 0)), ("3+2", (1, 1))],
    )
    def test_compose_rejects(self, core, pad):
        with pytest.raises(ContractError):
            compose(P(core), pad)

    def test_round_trip_exhaustive(self):
        for p in euclidean_members(40):
            core, pad = decompose(p)
            assert is_irreducible(core)
            assert compose(core, pad) == p
            assert weight_exponent(core) == weight_exponent(p)

    @given(
        st.integers(1, 6).flatmap(
            lambda d: st.tuples(
                st.sampled_from(
                    [p for L in range(d + 1, 2 * d + 1) for p in enumerate_irreducible(d, L)]
                ),
                st.lists(st.integers(0, 6), min_size=d, max_size=d),
            )
        )
    )
    def test_compose_then_decompose(self, case):
        core, raw = case
        pad = tuple(sorted((2 * v for v in raw), reverse=True))
        assert decompose(compose(core, pad)) == (core, pad)


class TestPE:
    @pytest.mark.parametrize(
        "text, tag, expected",
        [
            ("1|2", "space", True),
            ("2|2", "light", True),
            ("2|3", "space", False),
            ("2|1", "time", True),
            ("1|2", "light", False),
            ("3+1|2", "space", False),
        ],
    )
    def test_membership(self, text, tag, expected):
        assert is_pe_member(PEPartition.parse(text, tag)) is expected

    def test_small_enumerations(self):
        assert [str(p) for p in enumerate_pe_by_total("light", 4)] == ["2|2"]
        assert [str(p) for p in enumerate_pe_by_total("space", 3)] == ["1|2"]
        assert [str(p) for p in enumerate_pe_by_total("time", 3)] == ["2|1"]
        assert enumerate_pe_by_total("light", 3) == []

    def test_light_is_space_and_time(self):
        for n in range(1, 13):
            for p in enumerate_pe_by_total("space", n):
                as_time = PEPartition(p.m_parts, p.n_parts, "time")
                as_light = PEPartition(p.m_parts, p.n_parts, "light")
                assert is_pe_member(as_light) == is_pe_member(as_time)
            for p in enumerate_pe_by_total("light", n):
                assert no_adjacent_odd(p.m_parts) and no_adjacent_odd(p.n_parts)

    def test_mirror(self):
        for n in range(1, 13):
            space = {p.swapped() for p in enumerate_pe_by_total("space", n)}
            assert space == set(enumerate_pe_by_total("time", n))

    def test_largest_sum_statistic(self):
        found = enumerate_pe_by_largest_sum("space", 4)
        assert all(p.largest_sum == 4 and is_pe_member(p) for p in found)
        # m_1 + n_1 = 4 with an even end on the n-list: (2+1|2), (2|2), (1|3+2)
        assert [str(p) for p in found] == ["2+1|2", "2|2", "1|3+2"]
