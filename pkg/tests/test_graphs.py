import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chromsym.errors import (
    GraphTooLarge,
    InvalidPoset,
    InvalidSize,
    VertexOutOfRange,
)
from chromsym.graphs import (
    Graph,
    Poset,
    antichain_poset,
    boolean_lattice,
    chain_poset,
    claw_graph,
    complete_bipartite_graph,
    cycle_graph,
    empty_graph,
    find_claw,
    format_edge_list,
    format_graph6,
    incomparability_graph,
    induced_subgraph,
    is_claw_free,
    parse_edge_list,
    parse_graph6,
    path_graph,
    random_graph,
    read_graph,
    separating_example_graph,
    squid_graph,
)

from helpers import brute_find_claw


def graph_from_mask(d, mask):
    pairs = [(u, v) for u in range(d) for v in range(u + 1, d)]
    return Graph(d, [pairs[k] for k in range(len(pairs)) if (mask >> k) & 1])


small_graphs = st.integers(2, 6).flatmap(
    lambda d: st.tuples(st.just(d), st.integers(0, (1 << (d * (d - 1) // 2)) - 1))
)


class TestGraphBasics:
    def test_construction_and_symmetry(self):
        g = Graph(3, [(0, 1), (1, 2)])
        assert g.has_edge(0, 1) and g.has_edge(1, 0)
        assert not g.has_edge(0, 2)
        assert g.edge_count() == 2
        assert g.degree(1) == 2

    def test_rejects_bad_edges(self):
        with pytest.raises(VertexOutOfRange):
            Graph(2, [(0, 2)])
        with pytest.raises(ValueError):
            Graph(2, [(1, 1)])

    def test_vertex_cap(self):
        Graph(64)
        with pytest.raises(GraphTooLarge):
            Graph(65)

    def test_adjacency_uint64_mirrors_rows(self):
        g = cycle_graph(5)
        arr = g.adjacency_uint64()
        assert [int(x) for x in arr] == list(g.rows())


class TestGenerators:
    def test_claw(self):
        g = claw_graph()
        assert g.n == 4 and g.edge_count() == 3
        assert sorted(g.degree(v) for v in range(4)) == [1, 1, 1, 3]

    def test_cycle(self):
        g = cycle_graph(5)
        assert g.n == 5 and g.edge_count() == 5
        assert all(g.degree(v) == 2 for v in range(5))
        with pytest.raises(InvalidSize):
            cycle_graph(2)

    def test_path_and_empty(self):
        assert path_graph(4).edge_count() == 3
        assert empty_graph(5).edge_count() == 0
        with pytest.raises(InvalidSize):
            empty_graph(0)

    def test_complete_bipartite(self):
        g = complete_bipartite_graph(2, 2)
        assert g.n == 4 and g.edge_count() == 4
        assert all(g.degree(v) == 2 for v in range(4))

    def test_squid_structure(self):
        g = squid_graph(3)
        assert g.n == 8 and g.edge_count() == 8
        assert g.degree(0) == 5  # two cycle neighbors plus three leaves
        assert g.vertex_name(0) == "u"
        assert g.vertex_name(1) == "u_1"
        assert g.vertex_name(5) == "v_1"
        # cycle edges u-u_1, u_k-u_{k+1}, u_{2n-2}-u; leaves u-v_k
        assert g.has_edge(0, 1) and g.has_edge(0, 4)
        assert g.has_edge(1, 2) and g.has_edge(2, 3) and g.has_edge(3, 4)
        for leaf in (5, 6, 7):
            assert g.degree(leaf) == 1 and g.has_edge(0, leaf)

    def test_squid_sizes(self):
        g = squid_graph(4)
        assert g.n == 11 and g.edge_count() == 11
        with pytest.raises(InvalidSize):
            squid_graph(1)

    def test_separating_example_shape(self):
        g = separating_example_graph()
        assert g.n == 6 and g.edge_count() == 8


class TestInducedSubgraph:
    def test_identity(self):
        g = claw_graph()
        h, remap = induced_subgraph(g, range(4))
        assert h == g and remap == {v: v for v in range(4)}

    def test_center_plus_leaf(self):
        h, _ = induced_subgraph(claw_graph(), {0, 2})
        assert h.n == 2 and h.edge_count() == 1

    def test_three_consecutive_cycle_vertices(self):
        h, remap = induced_subgraph(cycle_graph(5), {0, 1, 2})
        assert h.n == 3 and h.edge_count() == 2
        assert h.has_edge(remap[0], remap[1]) and h.has_edge(remap[1], remap[2])
        assert not h.has_edge(remap[0], remap[2])

    def test_out_of_range(self):
        with pytest.raises(VertexOutOfRange):
            induced_subgraph(claw_graph(), {0, 9})


class TestClawDetection:
    def test_claw_contains_itself(self):
        assert not is_claw_free(claw_graph())
        center, leaves = find_claw(claw_graph())
        assert center == 0 and sorted(leaves) == [1, 2, 3]

    @pytest.mark.parametrize("n", range(3, 9))
    def test_cycles_are_claw_free(self, n):
        assert is_claw_free(cycle_graph(n))

    def test_squid_claw_centers_at_hub(self):
        res = find_claw(squid_graph(3))
        assert res is not None
        center, leaves = res
        assert center == 0
        g = squid_graph(3)
        assert all(g.has_edge(0, x) for x in leaves)
        assert all(not g.has_edge(a, b) for a, b in combinations(leaves, 2))

    @settings(max_examples=150, deadline=None, derandomize=True)
    @given(small_graphs)
    def test_matches_four_subset_oracle(self, dm):
        g = graph_from_mask(*dm)
        assert (not is_claw_free(g)) == brute_find_claw(g)

    def test_matches_oracle_on_larger_graphs(self):
        rng = random.Random(23)
        for _ in range(60):
            g = random_graph(rng, rng.choice((7, 8)), rng.choice((0.2, 0.4, 0.6)))
            assert (not is_claw_free(g)) == brute_find_claw(g)

    @settings(max_examples=80, deadline=None, derandomize=True)
    @given(small_graphs, st.integers(0, 63))
    def test_claw_free_closed_under_induced_subgraphs(self, dm, vmask):
        g = graph_from_mask(*dm)
        if not is_claw_free(g):
            return
        vs = [v for v in range(g.n) if (vmask >> v) & 1]
        h, _ = induced_subgraph(g, vs)
        assert is_claw_free(h)


class TestPosets:
    def test_chain_inc_is_empty(self):
        assert incomparability_graph(chain_poset(4)).edge_count() == 0

    def test_antichain_inc_is_complete(self):
        g = incomparability_graph(antichain_poset(4))
        assert g.edge_count() == 6

    def test_boolean_lattice_two(self):
        p = boolean_lattice(2)
        assert p.element_count == 4
        assert p.leq(0, 3) and p.leq(1, 3) and not p.leq(1, 2)
        g = incomparability_graph(p)
        # single edge between the two singletons, top and bottom isolated
        assert g.edge_count() == 1 and g.has_edge(1, 2)

    def test_boolean_lattice_three_edge_count(self):
        # brute force incomparable pairs of subsets of a 3-set
        subsets = list(range(8))
        incomparable = sum(
            1
            for a, b in combinations(subsets, 2)
            if not (a & b == a or a & b == b)
        )
        g = incomparability_graph(boolean_lattice(3))
        assert g.n == 8 and g.edge_count() == incomparable == 9

    def test_boolean_lattice_degenerate(self):
        assert boolean_lattice(0).element_count == 1
        with pytest.raises(InvalidSize):
            boolean_lattice(17)

    def test_poset_validation(self):
        with pytest.raises(InvalidPoset):
            Poset(2, [0b11, 0b11])  # 0<=1 and 1<=0: antisymmetry broken
        with pytest.raises(InvalidPoset):
            Poset(2, [0b01, 0b110])  # relates outside the ground set
        with pytest.raises(InvalidPoset):
            Poset(2, [0b10, 0b10])  # not reflexive at 0
        with pytest.raises(InvalidPoset):
            Poset(3, [0b011, 0b110, 0b100])  # 0<=1, 1<=2 but not 0<=2


class TestFormats:
    def test_edge_list_round_trip(self):
        g = squid_graph(3)
        assert parse_edge_list(format_edge_list(g)) == g

    def test_edge_list_errors(self):
        with pytest.raises(ValueError):
            parse_edge_list("")
        with pytest.raises(ValueError):
            parse_edge_list("3 1\n2 1")  # i < j violated
        with pytest.raises(ValueError):
            parse_edge_list("3 2\n0 1")  # edge count mismatch

    def test_graph6_known_values(self):
        # K_2 and the 5-cycle against networkx's codec
        nx = pytest.importorskip("networkx")
        for g in (complete_bipartite_graph(1, 1), cycle_graph(5), squid_graph(3),
                  separating_example_graph()):
            enc = format_graph6(g)
            back = nx.from_graph6_bytes(enc.encode())
            assert back.number_of_nodes() == g.n
            assert sorted(map(tuple, (sorted(e) for e in back.edges()))) == g.edge_list()

    @settings(max_examples=80, deadline=None, derandomize=True)
    @given(small_graphs)
    def test_graph6_round_trip(self, dm):
        g = graph_from_mask(*dm)
        assert parse_graph6(format_graph6(g)) == g

    def test_graph6_header_tolerated(self):
        g = cycle_graph(5)
        assert parse_graph6(">>graph6<<" + format_graph6(g)) == g

    def test_read_graph_sniffs(self):
        g = cycle_graph(5)
        assert read_graph(format_edge_list(g)) == g
        assert read_graph(format_graph6(g)) == g
        import json

        from chromsym.graphs import format_graph_json

        assert read_graph(json.dumps(format_graph_json(g))) == g


def test_random_graph_deterministic():
    a = random_graph(random.Random(7), 8, 0.5)
    b = random_graph(random.Random(7), 8, 0.5)
    assert a == b
