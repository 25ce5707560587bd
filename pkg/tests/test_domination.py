import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from domrecon.domination import (
    classify_vertices,
    domination_number,
    enumerate_mds,
    exhaustive_minimal_sets,
    is_dominating,
    is_minimal_dominating,
    minimum_mds,
)
from domrecon.errors import NotDominating, SizeLimit
from domrecon.families import complete, cycle, empty, path, star
from domrecon.graphs import bits, make_graph, mask_of

P4 = path(4)
K13 = star(3)
C4 = cycle(4)
C5 = cycle(5)


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(min_value=0, max_value=max_n))
    possible = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(possible), max_size=len(possible))) if possible else []
    return make_graph(n, edges)


def _dominates_by_sets(g, s):
    """Independent re-statement with Python sets instead of masks."""
    members = set(bits(s))
    covered = set()
    for v in members:
        covered |= {v} | set(bits(g.adj[v]))
    return covered == set(range(g.n))


class TestPredicates:
    def test_star_center(self):
        assert is_dominating(K13, 1 << 0)

    def test_empty_set_fails_on_nonempty_graph(self):
        assert not is_dominating(P4, 0)
        assert not is_dominating(make_graph(1, []), 0)

    def test_path_middle_pair(self):
        assert is_dominating(P4, mask_of([1, 2]))

    def test_star_leaves_minimal(self):
        assert is_minimal_dominating(K13, mask_of([1, 2, 3]))

    def test_center_plus_leaf_not_minimal(self):
        assert not is_minimal_dominating(K13, mask_of([0, 1]))

    def test_path_pairs(self):
        assert not is_minimal_dominating(P4, mask_of([0, 1]))  # misses the far end
        assert is_minimal_dominating(P4, mask_of([0, 2]))
        assert is_minimal_dominating(P4, mask_of([1, 2]))

    @given(graphs())
    @settings(max_examples=80)
    def test_matches_set_arithmetic(self, g):
        for s in range(1 << g.n):
            assert is_dominating(g, s) == _dominates_by_sets(g, s)


class TestClassify:
    def test_c4_opposite_pair(self):
        p = classify_vertices(C4, mask_of([0, 2]))
        assert p.critical == mask_of([0, 2])
        assert p.n1 == 0
        assert p.n2 == mask_of([1, 3])
        assert p.a2 == mask_of([0, 2]) and p.a1 == 0
        assert p.privates == {0: 1 << 0, 2: 1 << 2}

    def test_k2_both_vertices_supported(self):
        k2 = complete(2)
        p = classify_vertices(k2, 0b11)
        assert p.critical == 0 and p.supported == 0b11

    def test_star_center(self):
        p = classify_vertices(K13, 1 << 0)
        assert p.a1 == 1 << 0
        assert p.n1 == mask_of([1, 2, 3])
        assert p.privates[0] == 0b1111

    def test_rejects_non_dominating(self):
        with pytest.raises(NotDominating):
            classify_vertices(P4, 1 << 0)

    @given(graphs())
    @settings(max_examples=60)
    def test_profile_invariants(self, g):
        for s in range(1 << g.n):
            if not is_dominating(g, s):
                continue
            p = classify_vertices(g, s)
            assert p.a1 | p.a2 == p.critical and p.a1 & p.a2 == 0
            assert p.n1 | p.n2 == g.vertex_mask & ~s and p.n1 & p.n2 == 0
            for v in bits(g.vertex_mask & ~s):
                doms = (g.closed(v) & s).bit_count()
                assert (p.n1 >> v & 1) == (doms == 1)
                assert (p.n2 >> v & 1) == (doms >= 2)
            for v in bits(p.critical):
                assert (p.a1 >> v & 1) == bool(g.closed(v) & p.n1)
                assert p.privates[v] and p.privates[v] & ~g.closed(v) == 0
            assert p.supported == s & ~p.critical
            # minimality is exactly "every member is critical"
            assert is_minimal_dominating(g, s) == (p.critical == s)

    @given(graphs())
    @settings(max_examples=60)
    def test_a2_members_are_their_own_private(self, g):
        for s in range(1 << g.n):
            if not is_dominating(g, s):
                continue
            p = classify_vertices(g, s)
            for v in bits(p.a2):
                assert p.privates[v] == 1 << v


class TestEnumeration:
    def test_star_two_sets(self):
        assert enumerate_mds(K13).to_lists() == [[0], [1, 2, 3]]

    def test_isolated_vertices_mandatory(self):
        assert enumerate_mds(empty(3)).to_lists() == [[0, 1, 2]]

    def test_p4_four_sets(self):
        got = {frozenset(s) for s in enumerate_mds(P4).to_lists()}
        assert got == {
            frozenset({0, 2}),
            frozenset({0, 3}),
            frozenset({1, 2}),
            frozenset({1, 3}),
        }

    def test_sorted_ascending_and_indexed(self):
        coll = enumerate_mds(C5)
        assert list(coll.sets) == sorted(coll.sets)
        for i, m in enumerate(coll.sets):
            assert coll.index_of(m) == i

    def test_zero_vertices_has_empty_set(self):
        coll = enumerate_mds(empty(0))
        assert list(coll.sets) == [0]
        assert exhaustive_minimal_sets(empty(0)).sets == (0,)

    def test_size_limit(self):
        with pytest.raises(SizeLimit):
            enumerate_mds(empty(30))
        with pytest.raises(SizeLimit):
            exhaustive_minimal_sets(empty(30))

    @given(graphs())
    @settings(max_examples=100)
    def test_pruned_matches_exhaustive(self, g):
        assert enumerate_mds(g).sets == exhaustive_minimal_sets(g).sets

    @given(graphs())
    @settings(max_examples=60)
    def test_antichain(self, g):
        sets = enumerate_mds(g).sets
        for a, b in itertools.combinations(sets, 2):
            assert a & b != a and a & b != b

    def test_sharded_exhaustive_scan_merges_identically(self):
        g = cycle(6)
        whole = exhaustive_minimal_sets(g).sets
        chunks = []
        step = 8
        for lo in range(0, 1 << g.n, step):
            chunks.extend(
                s for s in range(lo, min(lo + step, 1 << g.n))
                if is_minimal_dominating(g, s)
            )
        assert tuple(sorted(chunks)) == whole


class TestGammaAndMinimum:
    def test_complete_graphs(self):
        for n in range(1, 6):
            assert domination_number(complete(n)) == 1
            assert len(minimum_mds(complete(n))) == n

    def test_c5(self):
        assert domination_number(C5) == 2
        assert len(minimum_mds(C5)) == 5

    def test_empty(self):
        assert domination_number(empty(4)) == 4

    @given(graphs(max_n=7))
    @settings(max_examples=50)
    def test_minimum_sets_are_smallest_members(self, g):
        coll = enumerate_mds(g)
        gamma = min(m.bit_count() for m in coll.sets)
        assert domination_number(g) == gamma
        assert minimum_mds(g).sets == tuple(
            m for m in coll.sets if m.bit_count() == gamma
        )


class TestObservations:
    """Structural facts about dominating sets, swept over random graphs."""

    @given(graphs())
    @settings(max_examples=80)
    def test_no_neighbour_in_set_implies_critical(self, g):
        for s in range(1 << g.n):
            if not is_dominating(g, s):
                continue
            p = classify_vertices(g, s)
            for v in bits(s):
                if not (g.adj[v] & s):
                    assert p.critical >> v & 1

    @given(graphs())
    @settings(max_examples=80)
    def test_a2_neighbourhood_lies_in_n2(self, g):
        for s in range(1 << g.n):
            if not is_dominating(g, s):
                continue
            p = classify_vertices(g, s)
            for v in bits(p.a2):
                assert g.adj[v] & ~p.n2 == 0

    @given(graphs())
    @settings(max_examples=80)
    def test_complement_of_minimal_dominates(self, g):
        if g.n == 0 or min(g.degrees()) == 0:
            return
        for m in enumerate_mds(g):
            assert is_dominating(g, g.vertex_mask & ~m)

    @given(graphs())
    @settings(max_examples=80)
    def test_a1_at_most_n1(self, g):
        for s in range(1 << g.n):
            if not is_dominating(g, s):
                continue
            p = classify_vertices(g, s)
            assert p.a1.bit_count() <= p.n1.bit_count()
