import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chromsym.errors import InvalidSize, VertexOutOfRange, WeightMismatch
from chromsym.graphs import (
    Graph,
    claw_graph,
    complete_bipartite_graph,
    cycle_graph,
    empty_graph,
    path_graph,
    random_graph,
    squid_graph,
)
from chromsym.partitions import multiplicity_factorial, partitions_of
from chromsym.stable import (
    count_of_type,
    count_types,
    enumerate_stable_partitions,
    has_type,
    is_semi_ordered_stable_partition,
    is_stable_set,
    render_stable_partition,
    semi_ordered_counts,
    semi_ordered_partitions_of_type,
    stable_partitions_of_type,
    type_of,
)

from helpers import bell_numbers, brute_stable_type_counts
from test_graphs import graph_from_mask, small_graphs


def triangle():
    return cycle_graph(3)


class TestStableSet:
    def test_examples(self):
        assert is_stable_set(claw_graph(), {1, 2, 3})
        assert is_stable_set(claw_graph(), {0})
        assert not is_stable_set(claw_graph(), {0, 1})

    def test_out_of_range(self):
        with pytest.raises(VertexOutOfRange):
            is_stable_set(claw_graph(), {0, 9})


class TestEnumeration:
    @pytest.mark.parametrize("d", range(1, 9))
    def test_empty_graph_gives_bell_numbers(self, d):
        assert sum(1 for _ in enumerate_stable_partitions(empty_graph(d))) == bell_numbers(d)[d]

    def test_triangle_has_only_singletons(self):
        parts = list(enumerate_stable_partitions(triangle()))
        assert parts == [((0,), (1,), (2,))]

    def test_claw_partitions(self):
        parts = list(enumerate_stable_partitions(claw_graph()))
        assert len(parts) == 5
        by_type = {}
        for p in parts:
            by_type[type_of(p)] = by_type.get(type_of(p), 0) + 1
        assert by_type == {(1, 1, 1, 1): 1, (2, 1, 1): 3, (3, 1): 1}

    def test_partitions_unique_and_canonical(self):
        seen = set()
        for p in enumerate_stable_partitions(cycle_graph(6)):
            assert p not in seen
            seen.add(p)
            sizes = [len(b) for b in p]
            assert sizes == sorted(sizes, reverse=True)
            for a, b in zip(p, p[1:]):
                if len(a) == len(b):
                    assert a[0] < b[0]

    @settings(max_examples=60, deadline=None, derandomize=True)
    @given(small_graphs)
    def test_matches_set_partition_filter_oracle(self, dm):
        g = graph_from_mask(*dm)
        counts = {}
        for p in enumerate_stable_partitions(g):
            counts[type_of(p)] = counts.get(type_of(p), 0) + 1
        assert counts == brute_stable_type_counts(g)


class TestCountTypes:
    def test_claw(self, kernel_backend):
        assert count_types(claw_graph()) == {(1, 1, 1, 1): 1, (2, 1, 1): 3, (3, 1): 1}

    def test_cycle_five(self):
        assert count_types(cycle_graph(5))[(2, 2, 1)] == 5

    def test_k2(self):
        assert count_types(complete_bipartite_graph(1, 1)) == {(1, 1): 1}

    def test_census_guard(self):
        with pytest.raises(InvalidSize):
            count_types(Graph(51))

    @settings(max_examples=50, deadline=None, derandomize=True)
    @given(small_graphs)
    def test_matches_enumeration(self, dm):
        g = graph_from_mask(*dm)
        counts = {}
        for p in enumerate_stable_partitions(g):
            counts[type_of(p)] = counts.get(type_of(p), 0) + 1
        assert count_types(g) == counts

    def test_backend_parity(self, kernel_backend):
        g = squid_graph(3)
        assert count_types(g)[(3, 3, 2)] == 12
        assert count_of_type(g, (3, 3, 2)) == 24  # semi-ordered

    def test_total_equals_enumeration(self):
        for g in (cycle_graph(7), squid_graph(3), path_graph(6)):
            total = sum(count_types(g).values())
            assert total == sum(1 for _ in enumerate_stable_partitions(g))


class TestSemiOrderedCounts:
    def test_claw(self):
        assert semi_ordered_counts(claw_graph()) == {
            (1, 1, 1, 1): 24,
            (2, 1, 1): 6,
            (3, 1): 1,
        }

    def test_k2(self):
        assert semi_ordered_counts(complete_bipartite_graph(1, 1)) == {(1, 1): 2}

    def test_ratio_is_multiplicity_factorial(self):
        for g in (cycle_graph(6), squid_graph(3), empty_graph(6)):
            unordered = count_types(g)
            ordered = semi_ordered_counts(g)
            for lam, a in unordered.items():
                assert ordered[lam] == a * multiplicity_factorial(lam)

    def test_equal_size_blocks_ordered_distinctly(self):
        # on the edgeless 5-vertex graph, {{1,2},{3,4},{0}} appears in both
        # block orders among the semi-ordered partitions of type (2,2,1)
        g = empty_graph(5)
        arrangements = set(semi_ordered_partitions_of_type(g, (2, 2, 1)))
        a = ((1, 2), (3, 4), (0,))
        b = ((3, 4), (1, 2), (0,))
        assert a in arrangements and b in arrangements
        assert len(arrangements) == semi_ordered_counts(g)[(2, 2, 1)]


class TestCountOfType:
    def test_squid_counts_match_closed_forms(self):
        g = squid_graph(3)
        assert count_of_type(g, (3, 3, 2)) == 24
        assert count_of_type(g, (4, 2, 2)) == 32

    def test_triangle_no_pair(self):
        assert count_of_type(triangle(), (2, 1)) == 0

    def test_weight_mismatch(self):
        with pytest.raises(WeightMismatch):
            count_of_type(triangle(), (2, 2))

    @settings(max_examples=40, deadline=None, derandomize=True)
    @given(small_graphs)
    def test_agrees_with_full_census(self, dm):
        g = graph_from_mask(*dm)
        full = semi_ordered_counts(g)
        for lam in partitions_of(g.n):
            assert count_of_type(g, lam) == full.get(lam, 0)

    def test_agrees_on_nine_vertex_graphs(self):
        rng = random.Random(11)
        for _ in range(5):
            g = random_graph(rng, 9, 0.4)
            full = semi_ordered_counts(g)
            for lam in partitions_of(9):
                assert count_of_type(g, lam) == full.get(lam, 0)


class TestHasType:
    def test_squid_witness_type(self):
        assert has_type(squid_graph(3), (5, 2, 1))

    def test_odd_cycle_has_no_two_block_split(self):
        assert not has_type(cycle_graph(5), (3, 2))

    def test_singletons_always(self):
        for g in (triangle(), squid_graph(3), claw_graph()):
            assert has_type(g, (1,) * g.n)

    def test_weight_mismatch(self):
        with pytest.raises(WeightMismatch):
            has_type(triangle(), (3, 1))


class TestSquidBlockInvariant:
    @pytest.mark.parametrize("n", [3, 4])
    def test_hub_block_capped(self, n):
        g = squid_graph(n)
        for p in enumerate_stable_partitions(g):
            hub_block = next(b for b in p if 0 in b)
            assert len(hub_block) <= n - 1


class TestMaterializedTypes:
    def test_pruned_enumeration_matches_filter(self):
        g = cycle_graph(7)
        for lam in partitions_of(7):
            direct = {p for p in enumerate_stable_partitions(g) if type_of(p) == lam}
            pruned = set(stable_partitions_of_type(g, lam))
            assert pruned == direct

    def test_semi_ordered_partitions_are_valid(self):
        g = squid_graph(3)
        for blocks in semi_ordered_partitions_of_type(g, (3, 3, 2)):
            assert is_semi_ordered_stable_partition(g, blocks)


def test_render():
    assert render_stable_partition(((0, 2, 4), (1, 3), (5,))) == "{0,2,4}|{1,3}|{5}"
