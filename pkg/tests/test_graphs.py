import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from domrecon.errors import GraphConstructionError, SizeLimit
from domrecon.graphs import (
    Graph,
    bits,
    cartesian_product,
    closed_neighborhood,
    complement,
    connected_components,
    delete_closed_neighborhood,
    diameter,
    disjoint_union,
    girth,
    induced_subgraph,
    join,
    make_graph,
    mask_of,
    metrics,
    relabel,
)

P4 = make_graph(4, [(0, 1), (1, 2), (2, 3)])
K13 = make_graph(4, [(0, 1), (0, 2), (0, 3)])
C5 = make_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
# triangular prism, two triangles joined by a matching
PRISM = make_graph(6, [(0, 2), (2, 4), (4, 0), (1, 3), (3, 5), (5, 1), (0, 1), (2, 3), (4, 5)])


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(min_value=0, max_value=max_n))
    possible = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(possible), max_size=len(possible))) if possible else []
    return make_graph(n, edges)


class TestMakeGraph:
    def test_p4(self):
        assert P4.n == 4
        assert list(P4.edges()) == [(0, 1), (1, 2), (2, 3)]
        P4.validate()

    def test_single_vertex(self):
        g = make_graph(1, [])
        assert g.n == 1 and g.edge_count() == 0

    def test_duplicate_edges_idempotent(self):
        g = make_graph(3, [(0, 1), (1, 0), (0, 1)])
        assert g.edge_count() == 1

    def test_rejects_loop(self):
        with pytest.raises(GraphConstructionError):
            make_graph(3, [(1, 1)])

    def test_rejects_out_of_range(self):
        with pytest.raises(GraphConstructionError):
            make_graph(3, [(0, 3)])

    def test_rejects_oversize(self):
        with pytest.raises(SizeLimit):
            make_graph(65, [])

    def test_labels_must_match(self):
        with pytest.raises(GraphConstructionError):
            make_graph(2, [], labels=["a"])

    def test_prism_is_cubic(self):
        assert PRISM.degrees() == [3] * 6


class TestClosedNeighborhood:
    def test_star_center_covers_all(self):
        assert closed_neighborhood(K13, 1 << 0) == 0b1111

    def test_path_interior(self):
        assert closed_neighborhood(P4, 1 << 1) == 0b0111

    def test_empty_set(self):
        assert closed_neighborhood(C5, 0) == 0


class TestDeleteClosedNeighborhood:
    def test_star_collapses(self):
        sub, index = delete_closed_neighborhood(K13, 1 << 0)
        assert sub.n == 0 and index == {}

    def test_path_endpoint_leaves_edge(self):
        sub, index = delete_closed_neighborhood(P4, 1 << 0)
        assert sub.n == 2 and sub.edge_count() == 1
        assert index == {2: 0, 3: 1}

    def test_cycle5_leaves_edge(self):
        for v in range(5):
            sub, _ = delete_closed_neighborhood(C5, 1 << v)
            assert (sub.n, sub.edge_count()) == (2, 1)

    @given(graphs())
    def test_never_contains_neighbours(self, g):
        for v in range(g.n):
            _, index = delete_closed_neighborhood(g, 1 << v)
            kept = set(index)
            assert v not in kept
            assert not (mask_of(kept) & g.adj[v])


class TestConstructions:
    def test_union_of_singletons(self):
        g = disjoint_union(make_graph(1, []), make_graph(1, []))
        assert (g.n, g.edge_count()) == (2, 0)

    def test_union_component_count(self):
        g = disjoint_union(P4, P4)
        assert len(connected_components(g)) == 2

    def test_union_k3_empty2(self):
        g = disjoint_union(make_graph(3, [(0, 1), (1, 2), (0, 2)]), make_graph(2, []))
        assert (g.n, g.edge_count()) == (5, 3)

    def test_join_builds_star(self):
        from domrecon.canonical import isomorphic

        g = join(make_graph(1, []), make_graph(4, []))
        assert isomorphic(g, make_graph(5, [(0, i) for i in range(1, 5)]))

    def test_join_k2(self):
        g = join(make_graph(1, []), make_graph(1, []))
        assert (g.n, g.edge_count()) == (2, 1)

    def test_join_builds_k23(self):
        from domrecon.canonical import isomorphic
        from domrecon.families import complete_bipartite

        g = join(make_graph(2, []), make_graph(3, []))
        assert isomorphic(g, complete_bipartite(2, 3))

    @given(graphs(max_n=5), graphs(max_n=5))
    def test_join_edge_count(self, g, h):
        assert join(g, h).edge_count() == g.edge_count() + h.edge_count() + g.n * h.n

    def test_product_square(self):
        k2 = make_graph(2, [(0, 1)])
        c4 = cartesian_product(k2, k2)
        assert (c4.n, c4.edge_count()) == (4, 4)
        assert girth(c4) == 4

    def test_product_prism(self):
        from domrecon.canonical import isomorphic

        k3 = make_graph(3, [(0, 1), (1, 2), (0, 2)])
        k2 = make_graph(2, [(0, 1)])
        assert isomorphic(cartesian_product(k3, k2), PRISM)

    def test_product_indexing_and_labels(self):
        k2 = make_graph(2, [(0, 1)])
        k3 = make_graph(3, [(0, 1), (1, 2), (0, 2)])
        prod = cartesian_product(k3, k2)
        # (u,v) lives at u*n(H)+v
        assert prod.has_edge(0 * 2 + 0, 0 * 2 + 1)
        assert prod.has_edge(0 * 2 + 0, 1 * 2 + 0)
        assert not prod.has_edge(0 * 2 + 0, 1 * 2 + 1)
        assert prod.labels[3] == "(1,1)"

    @given(graphs(max_n=4), graphs(max_n=4))
    @settings(max_examples=40)
    def test_product_order_and_degrees(self, g, h):
        prod = cartesian_product(g, h)
        assert prod.n == g.n * h.n
        for u in range(g.n):
            for v in range(h.n):
                assert prod.degree(u * h.n + v) == g.degree(u) + h.degree(v)

    def test_complement_of_complete(self):
        from domrecon.families import complete

        assert complement(complete(4)).edge_count() == 0

    def test_c5_self_complementary(self):
        from domrecon.canonical import isomorphic

        assert isomorphic(complement(C5), C5)

    @given(graphs())
    def test_complement_involution(self, g):
        assert complement(complement(g)) == g

    def test_relabel_roundtrip(self):
        perm = [2, 0, 3, 1]
        inverse = [perm.index(i) for i in range(4)]
        assert relabel(relabel(P4, perm), inverse) == P4

    def test_induced_subgraph_map_is_order_preserving(self):
        sub, index = induced_subgraph(C5, 0b11010)
        assert index == {1: 0, 3: 1, 4: 2}
        assert sub.edge_count() == 1  # only 3-4 survives


class TestMetrics:
    def test_c5(self):
        m = metrics(C5)
        assert m.girth == 5 and m.diameter == 2
        assert m.min_degree == m.max_degree == 2

    def test_tree_has_no_cycle(self):
        assert girth(P4) is None
        assert metrics(K13).girth is None

    def test_prism(self):
        m = metrics(PRISM)
        assert m.girth == 3 and m.min_degree == 3 and m.max_degree == 3

    def test_disconnected_diameter(self):
        g = disjoint_union(P4, P4)
        assert diameter(g) is None

    def test_components_partition(self):
        g = disjoint_union(P4, make_graph(2, [(0, 1)]))
        assert connected_components(g) == [[0, 1, 2, 3], [4, 5]]

    def test_empty_graph(self):
        m = metrics(make_graph(0, []))
        assert m.components == [] and m.min_degree is None

    @given(graphs())
    @settings(max_examples=60)
    def test_girth_against_bruteforce(self, g):
        # shortest cycle by checking all vertex subsets that induce a cycle
        import itertools

        best = None
        for k in range(3, g.n + 1):
            for combo in itertools.combinations(range(g.n), k):
                sub, _ = induced_subgraph(g, mask_of(combo))
                if sub.edge_count() == k and all(d == 2 for d in sub.degrees()) \
                        and len(connected_components(sub)) == 1:
                    best = k if best is None else min(best, k)
            if best is not None:
                break
        assert girth(g) == best

    def test_equality_ignores_labels(self):
        a = make_graph(2, [(0, 1)], labels=["x", "y"])
        b = make_graph(2, [(0, 1)])
        assert a == b and hash(a) == hash(b)


def test_bits_and_mask_roundtrip():
    assert list(bits(0b10110)) == [1, 2, 4]
    assert mask_of([1, 2, 4]) == 0b10110
    assert list(bits(0)) == []


@given(graphs())
@settings(max_examples=80)
def test_girth_at_least_5_forbids_shared_neighbourhoods(g):
    gi = girth(g)
    if gi is not None and gi < 5:
        return
    for u in range(g.n):
        for v in range(u + 1, g.n):
            common = (g.adj[u] & g.adj[v]).bit_count()
            if g.has_edge(u, v):
                assert common == 0
            else:
                assert common <= 1
