import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from domrecon.families import (
    complete,
    complete_bipartite,
    complete_multipartite,
    cycle,
    empty,
    path,
    random_split,
    star,
    threshold_graph,
)
from domrecon.graphs import bits, cartesian_product, disjoint_union, make_graph
from domrecon.recognize import (
    is_complete_multipartite,
    is_split,
    is_threshold,
    multipartite_parts,
    split_partition,
    star_forest_form,
    threshold_sequence,
    universal_additions,
)


def _all_sequences(length):
    for tail in itertools.product("iu", repeat=length - 1):
        yield "i" + "".join(tail)


class TestThreshold:
    def test_recognizes_generated_sequences(self):
        for n in range(1, 7):
            for seq in _all_sequences(n):
                g = threshold_graph(seq)
                got = threshold_sequence(g)
                assert got is not None
                assert universal_additions(got) == universal_additions(seq)
                assert threshold_graph(got) == g or is_threshold(threshold_graph(got))

    def test_complete_and_empty(self):
        assert universal_additions(threshold_sequence(complete(5))) == 4
        assert universal_additions(threshold_sequence(empty(5))) == 0

    def test_star_is_threshold(self):
        assert threshold_sequence(star(4)) == "iiiiu"

    @pytest.mark.parametrize("g", [path(4), cycle(4), cycle(5), disjoint_union(
        make_graph(2, [(0, 1)]), make_graph(2, [(0, 1)]))])
    def test_rejects_classics(self, g):
        # P4, C4, C5 and 2K2 are the canonical non-threshold graphs
        assert threshold_sequence(g) is None

    def test_zero_vertices(self):
        assert threshold_sequence(empty(0)) is None

    def test_generated_graphs_have_nested_neighbourhoods(self):
        # degree order realizes a nested chain of closed neighbourhoods
        for seq in _all_sequences(6):
            g = threshold_graph(seq)
            order = sorted(range(g.n), key=g.degree)
            for i, u in enumerate(order):
                for v in order[i + 1:]:
                    assert g.adj[u] & ~(1 << v) & ~g.closed(v) == 0

    def test_universal_count_invariant_under_relabeling(self):
        import random

        from domrecon.graphs import relabel

        rng = random.Random(5)
        for seq in _all_sequences(6):
            g = threshold_graph(seq)
            perm = list(range(g.n))
            rng.shuffle(perm)
            got = threshold_sequence(relabel(g, perm))
            assert got is not None
            assert universal_additions(got) == universal_additions(seq)


class TestSplit:
    def test_generated_split_graphs(self):
        for seed in range(40):
            g = random_split(9, 4, 0.5, seed)
            parts = split_partition(g)
            assert parts is not None
            clique, independent = parts
            assert clique | independent == g.vertex_mask
            assert clique & independent == 0
            for u, v in itertools.combinations(list(bits(clique)), 2):
                assert g.has_edge(u, v)
            for u, v in itertools.combinations(list(bits(independent)), 2):
                assert not g.has_edge(u, v)

    def test_complete_and_empty_are_split(self):
        assert is_split(complete(5))
        assert is_split(empty(5))
        assert is_split(star(4))

    def test_prism_is_not_split(self):
        assert not is_split(cartesian_product(complete(3), complete(2)))

    def test_c4_and_c5_are_not_split(self):
        assert not is_split(cycle(4))
        assert not is_split(cycle(5))

    def test_threshold_graphs_are_split(self):
        for seq in _all_sequences(6):
            assert is_split(threshold_graph(seq))


class TestMultipartite:
    def test_parts_recovered(self):
        g = complete_multipartite((2, 3, 2))
        parts = multipartite_parts(g)
        assert parts is not None
        assert sorted(p.bit_count() for p in parts) == [2, 2, 3]

    def test_empty_graph_is_one_part(self):
        parts = multipartite_parts(empty(4))
        assert parts is not None and len(parts) == 1

    def test_complete_graph_is_all_singletons(self):
        parts = multipartite_parts(complete(4))
        assert parts is not None and len(parts) == 4

    def test_rejects_path(self):
        assert not is_complete_multipartite(path(4))
        assert not is_complete_multipartite(cycle(5))

    def test_k22_is_multipartite(self):
        assert is_complete_multipartite(complete_bipartite(2, 2))


class TestStarForest:
    def test_pure_empty(self):
        assert star_forest_form(empty(5)) == (4, 0)

    def test_star_plus_isolates(self):
        g = disjoint_union(star(3), empty(2))
        assert star_forest_form(g) == (2, 3)

    def test_k2_counts_as_star(self):
        assert star_forest_form(make_graph(2, [(0, 1)])) == (0, 1)

    def test_two_stars_rejected(self):
        assert star_forest_form(disjoint_union(star(2), star(2))) is None

    def test_path_rejected(self):
        assert star_forest_form(path(4)) is None

    def test_zero_vertices_rejected(self):
        assert star_forest_form(empty(0)) is None


@st.composite
def graphs(draw, max_n=7):
    n = draw(st.integers(min_value=1, max_value=max_n))
    possible = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(possible), max_size=len(possible))) if possible else []
    return make_graph(n, edges)


@given(graphs())
@settings(max_examples=120)
def test_threshold_matches_forbidden_subgraph_definition(g):
    """Threshold = no induced P4, C4, or 2K2; checked by brute force."""
    found = False
    for combo in itertools.combinations(range(g.n), 4):
        a, b, c, d = combo
        sub_edges = [
            (u, v) for u, v in itertools.combinations(combo, 2) if g.has_edge(u, v)
        ]
        k = len(sub_edges)
        if k not in (2, 3, 4):
            continue
        degs = sorted(
            sum(1 for e in sub_edges if v in e) for v in combo
        )
        if k == 2 and degs == [1, 1, 1, 1]:
            found = True  # induced 2K2
        elif k == 3 and degs == [1, 1, 2, 2]:
            found = True  # induced P4
        elif k == 4 and degs == [2, 2, 2, 2]:
            found = True  # induced C4
        if found:
            break
    assert is_threshold(g) == (not found)
