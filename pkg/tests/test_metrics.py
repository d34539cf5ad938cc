from fractions import Fraction

import numpy as np
import pytest

from coocnet import (
    CooccurrenceNetwork,
    all_node_metrics,
    average_clustering,
    average_degree,
    average_shortest_path,
    build_network,
    degree,
    density,
    diameter,
    from_edge_list,
    global_summary,
    local_clustering,
    node_average_distance,
    selectivity,
    strength,
    undirected_projection,
)

import oracles


def star4() -> CooccurrenceNetwork:
    """Hub feeding three leaves; projection is a star on four nodes."""
    return from_edge_list([("hub", "x", 1), ("hub", "y", 2), ("hub", "z", 1)])


class TestDegreeFamily:
    def test_average_degree_two_nodes(self, two_node_net):
        assert average_degree(two_node_net) == 2

    def test_average_degree_single_node(self):
        assert average_degree(build_network([["solo"]])) == 0

    def test_average_degree_complete_triad(self, complete_triad):
        assert average_degree(complete_triad) == 4

    def test_average_degree_empty_network(self):
        with pytest.raises(ValueError):
            average_degree(build_network([]))

    def test_average_degree_equals_mean_stub_count(self):
        rng = np.random.default_rng(21)
        for _ in range(20):
            net = oracles.random_network(rng, max_nodes=40)
            stubs = sum(
                degree(net, n, "in") + degree(net, n, "out")
                for n in range(net.n_nodes)
            )
            assert average_degree(net) == Fraction(stubs, net.n_nodes)

    def test_strength_sums_weights(self):
        net = from_edge_list(
            [("i", "p", 3), ("i", "q", 2), ("i", "r", 1), ("i", "s", 1)]
        )
        node = net.node_id("i")
        assert strength(net, node, "out") == 7
        assert degree(net, node, "out") == 4

    def test_isolated_node_strength_is_zero(self):
        net = build_network([["solo"]])
        assert strength(net, 0, "in") == 0
        assert strength(net, 0, "out") == 0

    def test_direction_validated(self, two_node_net):
        with pytest.raises(ValueError):
            degree(two_node_net, 0, "both")
        with pytest.raises(ValueError):
            strength(two_node_net, 0, "sideways")


class TestSelectivity:
    def test_seven_weight_over_four_neighbors(self):
        net = from_edge_list(
            [("i", "p", 3), ("i", "q", 2), ("i", "r", 1), ("i", "s", 1)]
        )
        value = selectivity(net, net.node_id("i"), "out")
        assert value == Fraction(7, 4)
        assert float(value) == 1.75

    def test_single_heavy_neighbor(self):
        net = from_edge_list([("to", "do", 3)])
        assert selectivity(net, net.node_id("do"), "in") == 3

    def test_zero_degree_is_undefined(self):
        net = from_edge_list([("a", "want", 1), ("b", "want", 1)])
        want = net.node_id("want")
        assert selectivity(net, want, "in") == 1
        assert selectivity(net, want, "out") is None

    def test_identity_and_bounds_on_random_networks(self):
        rng = np.random.default_rng(33)
        for _ in range(20):
            net = oracles.random_network(rng, max_nodes=40)
            for node in range(net.n_nodes):
                for side in ("in", "out"):
                    e = selectivity(net, node, side)
                    k = degree(net, node, side)
                    if k == 0:
                        assert e is None
                        continue
                    assert e * k == strength(net, node, side)
                    weights = (
                        net.in_weights(node) if side == "in" else net.out_weights(node)
                    )
                    assert 1 <= e <= max(weights.values())


class TestClustering:
    def test_triangle_node(self, complete_triad):
        for node in range(3):
            assert local_clustering(complete_triad, node) == 1

    def test_star_center(self):
        net = star4()
        assert local_clustering(net, net.node_id("hub")) == 0

    def test_low_degree_convention(self, two_node_net):
        assert local_clustering(two_node_net, 0) == 0

    def test_cycle_with_chord(self):
        # square a-b-c-d-a plus chord a-c; node b sees neighbors {a, c},
        # which are linked: c_b = 1; node a sees {b, c, d} with two links
        # among them (b-c and c-d): c_a = 2*2/(3*2) = 2/3
        net = from_edge_list(
            [("a", "b", 1), ("b", "c", 1), ("c", "d", 1), ("d", "a", 1), ("a", "c", 1)]
        )
        assert local_clustering(net, net.node_id("b")) == 1
        assert local_clustering(net, net.node_id("a")) == Fraction(2, 3)
        for node in range(net.n_nodes):
            assert local_clustering(net, node) == oracles.local_clustering(net, node)

    def test_average_over_all_nodes(self, complete_triad):
        assert average_clustering(complete_triad) == 1
        assert average_clustering(star4()) == 0

    def test_isolated_nodes_count_in_the_average(self, complete_triad):
        net = build_network(
            [["a", "b", "c", "a"], ["loner"]]
        )  # triangle plus isolated node
        assert average_clustering(net) == Fraction(3, 4)

    def test_empty_network_rejected(self):
        with pytest.raises(ValueError):
            average_clustering(build_network([]))


class TestDensity:
    def test_complete_triad(self, complete_triad):
        assert density(complete_triad) == 1

    def test_two_nodes_both_edges(self, two_node_net):
        assert density(two_node_net) == 1

    def test_sparse_triple(self):
        net = build_network([["a", "b"], ["c"]])
        assert density(net) == Fraction(1, 6)

    def test_undefined_below_two_nodes(self):
        assert density(build_network([["solo"]])) is None


class TestDistances:
    def test_two_node_path(self):
        net = from_edge_list([("a", "b", 1)])
        assert node_average_distance(net, net.node_id("a")) == Fraction(1, 2)

    def test_three_node_path_middle(self):
        net = from_edge_list([("a", "b", 1), ("b", "c", 1)])
        assert node_average_distance(net, net.node_id("b")) == Fraction(2, 3)
        assert node_average_distance(net, net.node_id("a")) == 1

    def test_singleton_component(self):
        net = build_network([["solo"]])
        assert node_average_distance(net, 0) == 0
        assert average_shortest_path(net) is None
        assert diameter(net) is None

    def test_node_outside_largest_component(self):
        net = build_network([["a", "b", "c"], ["d"]])
        assert node_average_distance(net, net.node_id("d")) is None

    def test_three_node_path_average(self):
        net = from_edge_list([("a", "b", 1), ("b", "c", 1)])
        assert average_shortest_path(net) == Fraction(4, 3)

    def test_complete_graph_average_is_one(self, complete_triad):
        assert average_shortest_path(complete_triad) == 1
        assert diameter(complete_triad) == 1

    def test_four_node_path(self, path4):
        assert average_shortest_path(path4) == Fraction(5, 3)
        assert diameter(path4) == 3

    def test_weights_do_not_affect_distances(self):
        light = from_edge_list([("a", "b", 1), ("b", "c", 1)])
        heavy = from_edge_list([("a", "b", 9), ("b", "c", 5)])
        assert average_shortest_path(light) == average_shortest_path(heavy)
        assert diameter(light) == diameter(heavy)


class TestOracleEquivalence:
    def test_distances_components_clustering(self):
        rng = np.random.default_rng(2024)
        for _ in range(60):
            net = oracles.random_network(rng, max_nodes=50)
            want_l, want_d, want_node = oracles.path_stats(net)
            assert average_shortest_path(net) == want_l
            assert diameter(net) == want_d
            for node, expected in want_node.items():
                assert node_average_distance(net, node) == expected
            for node in range(net.n_nodes):
                assert local_clustering(net, node) == oracles.local_clustering(
                    net, node
                )

    def test_l_never_exceeds_diameter(self):
        rng = np.random.default_rng(17)
        for _ in range(30):
            net = oracles.random_network(rng, max_nodes=40)
            l_value = average_shortest_path(net)
            d_value = diameter(net)
            if l_value is not None:
                assert l_value <= d_value


class TestScaleInvariance:
    def test_weight_scaling(self):
        rng = np.random.default_rng(77)
        for _ in range(20):
            net = oracles.random_network(rng, max_nodes=30)
            scaled = oracles.scaled_network(net, 7)
            for node in range(net.n_nodes):
                for side in ("in", "out"):
                    assert degree(scaled, node, side) == degree(net, node, side)
                    base = selectivity(net, node, side)
                    if base is None:
                        assert selectivity(scaled, node, side) is None
                    else:
                        assert selectivity(scaled, node, side) == 7 * base
            assert average_degree(scaled) == average_degree(net)
            assert average_shortest_path(scaled) == average_shortest_path(net)
            assert diameter(scaled) == diameter(net)
            assert average_clustering(scaled) == average_clustering(net)
            assert density(scaled) == density(net)


class TestBatchViews:
    def test_node_records_for_two_node_net(self, two_node_net):
        records = all_node_metrics(two_node_net)
        a = records[two_node_net.node_id("a")]
        assert (a.in_degree, a.out_degree) == (1, 1)
        assert (a.in_strength, a.out_strength) == (1, 2)
        assert (a.in_selectivity, a.out_selectivity) == (1, 2)
        assert a.avg_distance == Fraction(1, 2)

    def test_empty_network_gives_empty_list(self):
        assert all_node_metrics(build_network([])) == []

    def test_records_satisfy_identities(self):
        rng = np.random.default_rng(4)
        net = oracles.random_network(rng, max_nodes=40)
        adjacency = undirected_projection(net)
        for node, rec in enumerate(all_node_metrics(net)):
            assert rec.word == net.words[node]
            if rec.in_selectivity is not None:
                assert rec.in_selectivity * rec.in_degree == rec.in_strength
            if rec.out_selectivity is not None:
                assert rec.out_selectivity * rec.out_degree == rec.out_strength
            if len(adjacency[node]) < 2:
                assert rec.clustering == 0

    def test_global_summary_triad(self, complete_triad):
        gm = global_summary(complete_triad)
        assert (gm.n_nodes, gm.n_edges) == (3, 6)
        assert gm.avg_degree == 4
        assert gm.avg_shortest_path == 1
        assert gm.diameter == 1
        assert gm.avg_clustering == 1
        assert gm.density == 1
        assert gm.n_components == 1
        assert gm.largest_component_size == 3

    def test_global_summary_single_node(self):
        gm = global_summary(build_network([["solo"]]))
        assert (gm.n_nodes, gm.n_edges) == (1, 0)
        assert gm.avg_degree == 0
        assert gm.avg_clustering == 0
        assert gm.avg_shortest_path is None
        assert gm.diameter is None
        assert gm.density is None
        assert gm.n_components == 1
        assert gm.largest_component_size == 1

    def test_global_summary_empty_network_rejected(self):
        with pytest.raises(ValueError):
            global_summary(build_network([]))

    def test_global_summary_matches_oracles(self):
        rng = np.random.default_rng(30)
        net = oracles.random_network(rng, max_nodes=30)
        gm = global_summary(net)
        want_l, want_d, _ = oracles.path_stats(net)
        assert gm.avg_shortest_path == want_l
        assert gm.diameter == want_d
        assert gm.n_components == len(oracles.components(net))
        assert gm.largest_component_size == len(oracles.largest_component(net))


class TestSampledEstimates:
    def test_sample_covering_component_is_exact(self, path4):
        assert average_shortest_path(path4, sample=10) == Fraction(5, 3)
        assert diameter(path4, sample=10) == 3

    def test_sampled_diameter_is_a_lower_bound(self):
        rng = np.random.default_rng(55)
        for _ in range(10):
            net = oracles.random_network(rng, max_nodes=40)
            exact = diameter(net)
            estimate = diameter(net, sample=3)
            if exact is not None:
                assert estimate <= exact

    def test_sampling_is_deterministic(self):
        rng = np.random.default_rng(66)
        net = oracles.random_network(rng, max_nodes=40)
        assert average_shortest_path(net, sample=5) == average_shortest_path(
            net, sample=5
        )

    def test_unsampled_sources_have_no_node_distance(self):
        net = from_edge_list(
            [("a", "b", 1), ("b", "c", 1), ("c", "d", 1), ("d", "e", 1)]
        )
        values = [node_average_distance(net, n, sample=2) for n in range(5)]
        assert sum(v is not None for v in values) == 2

    def test_invalid_sample_size(self, path4):
        with pytest.raises(ValueError):
            average_shortest_path(path4, sample=0)
