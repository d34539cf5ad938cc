"""Global and per-node structure measures for co-occurrence networks.

Degree-family measures (degree, strength, selectivity) respect edge
direction.  Distance-family measures (node average distance, average
shortest path, diameter) and clustering ignore direction and weights: they
are computed with unweighted hops on the simple undirected projection, and
path measures are restricted to the largest weak component.

All ratios are exact `fractions.Fraction` values; a measure that has no
defined value (selectivity of an isolated direction, path lengths of a
trivial component, density of a single node) is None rather than NaN.

Pairwise distances cost one breadth-first search per source node.  For
quick looks at large networks the distance-family functions accept
``sample=m`` to run the searches from m deterministically chosen source
nodes: the average shortest path becomes an estimate, the diameter a lower
bound, and node average distances are only available for sampled sources.
Exact computation (``sample=None``) is the default everywhere.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .network import CooccurrenceNetwork, undirected_projection, weak_components

_SAMPLE_SEED = 1729


@dataclass(frozen=True)
class NodeMetrics:
    """Per-node measures; selectivities and avg_distance may be None."""

    word: str
    in_degree: int
    out_degree: int
    in_strength: int
    out_strength: int
    in_selectivity: Fraction | None
    out_selectivity: Fraction | None
    clustering: Fraction
    avg_distance: Fraction | None


@dataclass(frozen=True)
class GlobalMetrics:
    """Whole-network measures; path measures and density may be None."""

    n_nodes: int
    n_edges: int
    avg_degree: Fraction
    avg_shortest_path: Fraction | None
    diameter: int | None
    avg_clustering: Fraction
    density: Fraction | None
    n_components: int
    largest_component_size: int


def degree(net: CooccurrenceNetwork, node: int, direction: str) -> int:
    """Number of distinct in- or out-neighbors."""
    if direction == "in":
        return len(net.in_weights(node))
    if direction == "out":
        return len(net.out_weights(node))
    raise ValueError(f"direction must be 'in' or 'out', got {direction!r}")


def strength(net: CooccurrenceNetwork, node: int, direction: str) -> int:
    """Sum of edge weights on the node's in- or out-side."""
    if direction == "in":
        return sum(net.in_weights(node).values())
    if direction == "out":
        return sum(net.out_weights(node).values())
    raise ValueError(f"direction must be 'in' or 'out', got {direction!r}")


def selectivity(
    net: CooccurrenceNetwork, node: int, direction: str
) -> Fraction | None:
    """Strength divided by degree on one side; None when the degree is 0.

    Weights count repeated co-occurrences, so selectivity is the average
    weight per distinct neighbor and is always >= 1 when defined.
    """
    k = degree(net, node, direction)
    if k == 0:
        return None
    return Fraction(strength(net, node, direction), k)


def average_degree(net: CooccurrenceNetwork) -> Fraction:
    """2K/N: every directed edge contributes one in- and one out-stub."""
    if net.n_nodes == 0:
        raise ValueError("average degree of an empty network is undefined")
    return Fraction(2 * net.n_edges, net.n_nodes)


def density(net: CooccurrenceNetwork) -> Fraction | None:
    """Fraction of the N(N-1) possible directed edges present; None if N < 2."""
    if net.n_nodes < 2:
        return None
    return Fraction(net.n_edges, net.n_nodes * (net.n_nodes - 1))


def local_clustering(net: CooccurrenceNetwork, node: int) -> Fraction:
    """2E/(k(k-1)) on the undirected projection; 0 when k < 2.

    E counts undirected links among the node's k projection neighbors.
    """
    adjacency = undirected_projection(net)
    neighbors = adjacency[node]
    k = len(neighbors)
    if k < 2:
        return Fraction(0)
    # each neighbor pair link is found from both ends, hence the halving
    twice_links = sum(len(adjacency[nbr] & neighbors) for nbr in neighbors)
    return Fraction(twice_links, k * (k - 1))


def average_clustering(net: CooccurrenceNetwork) -> Fraction:
    """Mean local clustering over all nodes, isolated ones included."""
    if net.n_nodes == 0:
        raise ValueError("average clustering of an empty network is undefined")
    total = sum(
        (local_clustering(net, node) for node in range(net.n_nodes)),
        Fraction(0),
    )
    return total / net.n_nodes


def _bfs_sum_and_ecc(
    adjacency: list[set[int]], source: int
) -> tuple[int, int, int]:
    """(sum of hop distances, eccentricity, reached count) from one source."""
    dist = [-1] * len(adjacency)
    dist[source] = 0
    frontier = [source]
    total = 0
    ecc = 0
    reached = 1
    depth = 0
    while frontier:
        depth += 1
        next_frontier = []
        for node in frontier:
            for nbr in adjacency[node]:
                if dist[nbr] == -1:
                    dist[nbr] = depth
                    next_frontier.append(nbr)
        if next_frontier:
            total += depth * len(next_frontier)
            reached += len(next_frontier)
            ecc = depth
        frontier = next_frontier
    return total, ecc, reached


def _distance_stats(net: CooccurrenceNetwork, sample: int | None) -> dict:
    """All-pairs (or sampled) hop-distance aggregates on the largest component.

    Cached on the network, keyed by the sample size.
    """
    cached = net._distance_cache.get(sample)
    if cached is not None:
        return cached

    labeling = weak_components(net)
    comp_nodes = [
        node
        for node in range(net.n_nodes)
        if labeling.labels[node] == labeling.largest
    ]
    n_prime = len(comp_nodes)
    if sample is None or sample >= n_prime:
        sources = comp_nodes
    else:
        if sample < 1:
            raise ValueError(f"sample must be >= 1, got {sample}")
        rng = random.Random(_SAMPLE_SEED)
        sources = sorted(rng.sample(comp_nodes, sample))

    adjacency = undirected_projection(net)
    node_sum: dict[int, int] = {}
    total = 0
    max_dist = 0
    for source in sources:
        dist_sum, ecc, reached = _bfs_sum_and_ecc(adjacency, source)
        assert reached == n_prime, "source must reach its whole component"
        node_sum[source] = dist_sum
        total += dist_sum
        if ecc > max_dist:
            max_dist = ecc

    stats = {
        "n_prime": n_prime,
        "n_sources": len(sources),
        "node_sum": node_sum,
        "total": total,
        "max_dist": max_dist,
        "labels": labeling.labels,
        "largest": labeling.largest,
        "n_components": labeling.count,
    }
    net._distance_cache[sample] = stats
    return stats


def node_average_distance(
    net: CooccurrenceNetwork, node: int, sample: int | None = None
) -> Fraction | None:
    """Mean hop distance from the node to the largest weak component.

    The average runs over all component members including the node itself
    (a zero term), matching a per-node breakdown of the average shortest
    path.  None for nodes outside the largest component, and for unsampled
    sources when ``sample`` is set.
    """
    net._check_node(node)
    stats = _distance_stats(net, sample)
    if stats["labels"][node] != stats["largest"]:
        return None
    dist_sum = stats["node_sum"].get(node)
    if dist_sum is None:
        return None
    return Fraction(dist_sum, stats["n_prime"])


def average_shortest_path(
    net: CooccurrenceNetwork, sample: int | None = None
) -> Fraction | None:
    """Mean hop distance over ordered node pairs of the largest component.

    None when the component has fewer than two nodes.  With sampling the
    outer sum runs over the sampled sources only.
    """
    stats = _distance_stats(net, sample)
    if stats["n_prime"] < 2:
        return None
    return Fraction(stats["total"], stats["n_sources"] * (stats["n_prime"] - 1))


def diameter(net: CooccurrenceNetwork, sample: int | None = None) -> int | None:
    """Longest shortest path (in hops) within the largest weak component.

    None when the component has fewer than two nodes.  With sampling this
    is max eccentricity over the sampled sources, a lower bound.
    """
    stats = _distance_stats(net, sample)
    if stats["n_prime"] < 2:
        return None
    return stats["max_dist"]


def all_node_metrics(
    net: CooccurrenceNetwork, sample: int | None = None
) -> list[NodeMetrics]:
    """NodeMetrics for every node, indexed by node id."""
    return [
        NodeMetrics(
            word=net.words[node],
            in_degree=degree(net, node, "in"),
            out_degree=degree(net, node, "out"),
            in_strength=strength(net, node, "in"),
            out_strength=strength(net, node, "out"),
            in_selectivity=selectivity(net, node, "in"),
            out_selectivity=selectivity(net, node, "out"),
            clustering=local_clustering(net, node),
            avg_distance=node_average_distance(net, node, sample),
        )
        for node in range(net.n_nodes)
    ]


def global_summary(
    net: CooccurrenceNetwork, sample: int | None = None
) -> GlobalMetrics:
    """All whole-network measures in one pass; raises on an empty network."""
    if net.n_nodes == 0:
        raise ValueError("global summary of an empty network is undefined")
    stats = _distance_stats(net, sample)
    return GlobalMetrics(
        n_nodes=net.n_nodes,
        n_edges=net.n_edges,
        avg_degree=average_degree(net),
        avg_shortest_path=average_shortest_path(net, sample),
        diameter=diameter(net, sample),
        avg_clustering=average_clustering(net),
        density=density(net),
        n_components=stats["n_components"],
        largest_component_size=stats["n_prime"],
    )
