import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from pathdom.domination import (
    all_minimum_sets_cliques,
    all_minimum_sets_efficient,
    classify_vertices,
    constrained_domination_number,
    domination_number,
    independent_domination_number,
    is_dominating,
    minimum_dominating_set,
    minimum_dominating_sets,
    private_neighbors,
)
from pathdom.families import (
    complete,
    complete_bipartite,
    crown,
    cycle,
    generalized_petersen,
    join,
    path,
    rook,
    star,
)
from pathdom.graphs import Graph, delete_vertices, enumerate_labeled_graphs

from .conftest import graphs, naive_gamma


class TestIsDominating:
    def test_c6_antipodal(self):
        assert is_dominating(cycle(6), [0, 3])

    def test_p4_prefix_misses_tail(self):
        assert not is_dominating(path(4), [0, 1])

    def test_whole_vertex_set(self):
        g = Graph(5, [(0, 1)])
        assert is_dominating(g, range(5))

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            is_dominating(path(3), [3])


class TestGamma:
    def test_complete(self):
        assert domination_number(complete(5)) == 1

    def test_p4(self):
        assert domination_number(path(4)) == 2  # == naive below

    def test_rook3(self):
        assert domination_number(rook(3)) == 3

    def test_empty_graph(self):
        assert domination_number(Graph(0)) == 0
        assert minimum_dominating_set(Graph(0)) == frozenset()

    def test_witness_is_minimum_dominating(self):
        for g in (path(7), cycle(9), crown(4), star(5)):
            wit = minimum_dominating_set(g)
            assert is_dominating(g, wit)
            assert len(wit) == domination_number(g)

    def test_exhaustive_vs_naive_n4(self):
        for g in enumerate_labeled_graphs(4):
            assert domination_number(g) == naive_gamma(g)

    @settings(max_examples=60, deadline=None)
    @given(graphs(max_n=5))
    def test_vs_naive(self, g):
        assert domination_number(g) == naive_gamma(g)


class TestConstrained:
    def test_force_pair(self):
        assert constrained_domination_number(cycle(4), include=[0, 1]) == 2

    def test_infeasible_is_value(self):
        assert constrained_domination_number(
            cycle(4), include=[0], exclude=[1, 2, 3]
        ) is None

    def test_force_single_in_complete(self):
        assert constrained_domination_number(complete(3), include=[0]) == 1

    def test_no_constraints_equals_gamma(self):
        g = path(6)
        assert constrained_domination_number(g) == domination_number(g)

    def test_overlap_rejected(self):
        with pytest.raises(ValueError):
            constrained_domination_number(path(3), include=[0], exclude=[0])

    @settings(max_examples=40, deadline=None)
    @given(graphs(min_n=2, max_n=5), st.data())
    def test_monotone_in_constraints(self, g, data):
        inc = data.draw(st.sets(st.integers(0, g.n - 1), max_size=2))
        exc = data.draw(
            st.sets(st.integers(0, g.n - 1).filter(lambda v: v not in inc), max_size=2)
        )
        base = constrained_domination_number(g)
        constrained = constrained_domination_number(g, include=inc, exclude=exc)
        if constrained is not None:
            assert constrained >= base
            # growing either side never shrinks the answer
            relaxed = constrained_domination_number(g, include=inc)
            assert relaxed is not None and relaxed <= constrained


class TestEnumeration:
    def test_k3_singletons(self):
        assert minimum_dominating_sets(complete(3)) == [
            frozenset({0}), frozenset({1}), frozenset({2})
        ]

    def test_c6(self):
        assert [sorted(s) for s in minimum_dominating_sets(cycle(6))] == [
            [0, 3], [1, 4], [2, 5]
        ]

    def test_p4(self):
        assert [sorted(s) for s in minimum_dominating_sets(path(4))] == [
            [0, 2], [0, 3], [1, 2], [1, 3]
        ]


class TestClassify:
    def test_p4(self):
        rep = classify_vertices(path(4))
        assert all(rep.good)
        assert rep.critical_vertices == {0, 3}

    def test_star_center_only_good(self):
        rep = classify_vertices(star(3))
        assert rep.good == (True, False, False, False)
        assert rep.bad == (False, True, True, True)
        assert rep.critical_vertices == frozenset()

    def test_rook3_all_critical(self):
        rep = classify_vertices(rook(3))
        assert rep.critical_vertices == frozenset(range(9))

    def test_good_xor_bad(self):
        for g in enumerate_labeled_graphs(4):
            rep = classify_vertices(g)
            assert all(a != b for a, b in zip(rep.good, rep.bad))

    @settings(max_examples=60, deadline=None)
    @given(graphs(max_n=5))
    def test_good_matches_set_enumeration(self, g):
        rep = classify_vertices(g)
        union = set().union(*minimum_dominating_sets(g)) if g.n else set()
        assert all(rep.good[v] == (v in union) for v in range(g.n))

    @settings(max_examples=60, deadline=None)
    @given(graphs(max_n=5))
    def test_critical_matches_deletion(self, g):
        rep = classify_vertices(g)
        for v in range(g.n):
            h, _ = delete_vertices(g, [v])
            assert rep.critical[v] == (domination_number(h) == rep.gamma - 1)
            # dropping one vertex can lower gamma by at most one
            assert domination_number(h) >= rep.gamma - 1

    @settings(max_examples=60, deadline=None)
    @given(graphs(max_n=5))
    def test_strong_equality_two_routes(self, g):
        rep = classify_vertices(g)
        via_edges = all(
            constrained_domination_number(g, include=[u, v]) > rep.gamma
            for u, v in g.edges()
        )
        assert rep.strong_equality == via_edges

    @settings(max_examples=60, deadline=None)
    @given(graphs(max_n=5))
    def test_independent_number_bounds(self, g):
        rep = classify_vertices(g)
        assert rep.independent_domination_number >= rep.gamma
        if rep.strong_equality:
            assert rep.independent_domination_number == rep.gamma


class TestIndependentDomination:
    def test_examples(self):
        assert independent_domination_number(star(4)) == 1
        assert independent_domination_number(cycle(5)) == 2
        assert independent_domination_number(complete(6)) == 1

    def test_gap_to_gamma(self):
        # a cross pair dominates K_{3,3} but is never independent, so the
        # best independent dominating set is a whole side
        g = complete_bipartite(3, 3)
        assert domination_number(g) == 2
        assert independent_domination_number(g) == 3


class TestPrivateNeighbors:
    def test_alone_gets_closed_neighborhood(self):
        g = cycle(5)
        assert private_neighbors(g, 2, [2]) == g.closed_neighbors(2)

    def test_c4(self):
        assert private_neighbors(cycle(4), 0, [0, 2]) == {0}

    def test_p4(self):
        assert private_neighbors(path(4), 1, [1, 3]) == {0, 1}

    def test_not_member_rejected(self):
        with pytest.raises(ValueError):
            private_neighbors(path(4), 0, [1, 3])


class TestSetShapePredicates:
    def test_efficient(self):
        assert all_minimum_sets_efficient(crown(3))
        assert not all_minimum_sets_efficient(cycle(4))
        assert all_minimum_sets_efficient(generalized_petersen(8, 3))

    def test_cliques(self):
        # joining two parts that each need 3 dominators pins every minimum
        # set to one vertex per part, hence an edge
        g = join(path(7), path(7))
        assert domination_number(g) == 2
        assert all_minimum_sets_cliques(g)
        assert all_minimum_sets_cliques(complete(5))
        assert not all_minimum_sets_cliques(cycle(6))
