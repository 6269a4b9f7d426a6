import pytest
from hypothesis import given, settings

from pathdom.domination import domination_number
from pathdom.families import (
    complete,
    complete_bipartite,
    corona,
    crown,
    cycle,
    edgeless,
    path,
    rook,
    star,
)
from pathdom.graphs import Graph, enumerate_labeled_graphs
from pathdom.oracle import (
    all_nonadjacent_pa_three,
    characterize_aggregates,
    check_sum_bounds,
    classify_regions,
    predict_adjacent,
    predict_nonadjacent,
    predict_pair,
    predict_path_addition_number,
)
from pathdom.path_addition import (
    INFINITE,
    domination_after_path,
    path_addition_number,
    path_addition_profile,
)

from .conftest import graphs_with_pair


def k3_union_k3():
    return Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])


class TestPredictAdjacent:
    def test_p4_middle_k2_stays(self):
        assert predict_adjacent(path(4), 1, 2, 2) == 2

    def test_c4_k1_stays(self):
        assert predict_adjacent(cycle(4), 0, 1, 1) == 2

    def test_k2_k2_rises(self):
        assert predict_adjacent(path(2), 0, 1, 2) == 2  # gamma + 1

    def test_k3_unconditional(self):
        g = cycle(5)
        assert predict_adjacent(g, 0, 1, 3) == domination_number(g) + 1

    def test_wrong_case_rejected(self):
        with pytest.raises(ValueError):
            predict_adjacent(cycle(4), 0, 2, 1)
        with pytest.raises(ValueError):
            predict_adjacent(cycle(4), 0, 1, 4)


class TestPredictNonadjacent:
    def test_star_leaves_k1_rises(self):
        assert predict_nonadjacent(star(3), 1, 2, 1) == 2

    def test_c4_antipodal_k3_stays(self):
        assert predict_nonadjacent(cycle(4), 0, 2, 3) == 2

    def test_edgeless_k4_stays(self):
        assert predict_nonadjacent(edgeless(3), 0, 1, 4) == 3

    def test_edgeless_k1_drops(self):
        assert predict_nonadjacent(edgeless(3), 0, 1, 1) == 2

    def test_k5_pinned_after_flat_k4(self):
        assert predict_nonadjacent(edgeless(3), 0, 1, 5) == 4

    def test_k5_undetermined_otherwise(self):
        # same-side pair of K_{3,3}: the rise happens at k=2 already
        assert predict_nonadjacent(complete_bipartite(3, 3), 0, 1, 5) is None

    def test_wrong_case_rejected(self):
        with pytest.raises(ValueError):
            predict_nonadjacent(cycle(4), 0, 1, 1)


class TestPredictPair:
    def test_p4_end_edge(self):
        pred = predict_pair(path(4), 0, 1)
        assert pred.pa == 3 and pred.adjacent

    def test_k3(self):
        assert predict_path_addition_number(complete(3), 0, 1) == 2

    def test_rook_nonadjacent(self):
        assert predict_path_addition_number(rook(3), 0, 4) == 4

    def test_clause_is_stable_string(self):
        pred = predict_pair(star(3), 1, 2)
        assert pred.pa == 1
        assert pred.clause == "nonadjacent:k1:bad-pair-no-deleted-critical"

    def test_gamma_values_cover_defined_ks(self):
        pred = predict_pair(cycle(4), 0, 2)
        assert set(pred.gamma_values) == {1, 2, 3, 4, 5}
        pred = predict_pair(cycle(4), 0, 1)
        assert set(pred.gamma_values) == {1, 2, 3}


def test_oracle_matches_solver_exhaustive_n4():
    for g in enumerate_labeled_graphs(4):
        gamma = domination_number(g)
        for u in range(g.n):
            for v in range(u + 1, g.n):
                if g.has_edge(u, v):
                    for k in (1, 2, 3):
                        assert predict_adjacent(g, u, v, k) == \
                            domination_after_path(g, u, v, k)
                else:
                    for k in (1, 2, 3, 4):
                        assert predict_nonadjacent(g, u, v, k) == \
                            domination_after_path(g, u, v, k)
                    if predict_nonadjacent(g, u, v, 4) == gamma:
                        assert predict_nonadjacent(g, u, v, 5) == \
                            domination_after_path(g, u, v, 5)
                assert predict_path_addition_number(g, u, v) == \
                    path_addition_number(g, u, v)


@settings(max_examples=30, deadline=None)
@given(graphs_with_pair(min_n=2, max_n=5))
def test_predicted_chain_is_monotone(gup):
    g, u, v = gup
    pred = predict_pair(g, u, v)
    vals = [val for _, val in sorted(pred.gamma_values.items()) if val is not None]
    assert all(a <= b for a, b in zip(vals, vals[1:]))


class TestAggregates:
    def test_crown_strong_equality_route(self):
        agg = characterize_aggregates(crown(3))
        assert agg.max_adjacent == 2
        assert "max-adjacent=2:all-minimum-sets-independent" in agg.fired

    def test_star_max_nonadjacent_one(self):
        assert characterize_aggregates(star(3)).max_nonadjacent == 1

    def test_c5(self):
        agg = characterize_aggregates(cycle(5))
        assert (agg.min_adjacent, agg.max_adjacent) == (2, 2)
        assert (agg.min_nonadjacent, agg.max_nonadjacent) == (3, 3)

    def test_conventions(self):
        agg = characterize_aggregates(complete(4))
        assert agg.min_nonadjacent == INFINITE and agg.max_nonadjacent == INFINITE
        agg = characterize_aggregates(edgeless(3))
        assert agg.min_adjacent == INFINITE and agg.max_adjacent == INFINITE
        assert agg.min_nonadjacent == 5

    def test_matches_profile_exhaustive_n4(self):
        for g in enumerate_labeled_graphs(4):
            if g.n < 2:
                continue
            prof = path_addition_profile(g)
            agg = characterize_aggregates(g)
            assert (agg.min_adjacent, agg.max_adjacent,
                    agg.min_nonadjacent, agg.max_nonadjacent) == \
                   (prof.min_adjacent, prof.max_adjacent,
                    prof.min_nonadjacent, prof.max_nonadjacent)


class TestRegions:
    def test_corona_r0(self):
        assert classify_regions(corona(path(2))).region == "R0"
        assert classify_regions(corona(path(3))).region == "R0"
        # same graph under path labels
        assert classify_regions(path(4)).region == "R0"

    def test_c7_plus_shortcut_vertex_r1(self):
        edges = [(i, (i + 1) % 7) for i in range(7)] + [(7, 0), (7, 2)]
        rc = classify_regions(Graph(8, edges))
        assert rc.region == "R1"
        assert rc.in_a1 and not rc.in_a2 and not rc.in_a3

    def test_cycles_r3(self):
        assert classify_regions(cycle(4)).region == "R3"
        assert classify_regions(cycle(7)).region == "R3"

    def test_k2n_r4(self):
        assert classify_regions(complete_bipartite(2, 3)).region == "R4"
        assert classify_regions(complete_bipartite(2, 4)).region == "R4"

    def test_knn_r5(self):
        assert classify_regions(complete_bipartite(3, 3)).region == "R5"
        assert classify_regions(complete_bipartite(4, 4)).region == "R5"

    def test_recorded_r2_witness(self):
        # found by seeded random search over 9-vertex graphs: every vertex
        # critical, yet edges (2,3) and (4,6) lie in no minimum set
        from pathdom.formats import parse_graph6

        rc = classify_regions(parse_graph6("Hd@H]Pt"))
        assert rc.region == "R2"
        assert rc.in_a3 and not rc.in_a2

    def test_star_not_in_a(self):
        rc = classify_regions(star(3))
        assert rc.region == "NotInA" and not rc.in_a

    def test_edgeless_rejected(self):
        with pytest.raises(ValueError):
            classify_regions(edgeless(3))

    def test_flag_implications_exhaustive_n4(self):
        for g in enumerate_labeled_graphs(4):
            if g.is_edgeless():
                continue
            rc = classify_regions(g)
            assert not rc.in_a3 or rc.in_a1
            assert not (rc.in_a1 or rc.in_a2) or rc.in_a
            assert (rc.region == "NotInA") == (not rc.in_a)


class TestClassU:
    def test_c5_in(self):
        assert all_nonadjacent_pa_three(cycle(5))

    def test_two_triangles_in(self):
        assert all_nonadjacent_pa_three(k3_union_k3())

    def test_isolated_vertex_out(self):
        assert not all_nonadjacent_pa_three(Graph(3, [(0, 1)]))

    def test_complete_out(self):
        assert not all_nonadjacent_pa_three(complete(4))

    def test_matches_profile_exhaustive_n4(self):
        for g in enumerate_labeled_graphs(4):
            if g.n < 2:
                continue
            prof = path_addition_profile(g)
            assert all_nonadjacent_pa_three(g) == \
                (prof.min_nonadjacent == 3 and prof.max_nonadjacent == 3)


class TestSumBounds:
    def test_c4(self):
        assert all(check_sum_bounds(cycle(4)))

    def test_p4(self):
        assert all(check_sum_bounds(path(4)))

    def test_complete_rejected(self):
        with pytest.raises(ValueError):
            check_sum_bounds(complete(4))

    def test_disconnected_rejected(self):
        with pytest.raises(ValueError):
            check_sum_bounds(k3_union_k3())

    def test_edgeless_rejected(self):
        with pytest.raises(ValueError):
            check_sum_bounds(edgeless(3))
