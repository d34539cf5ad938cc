"""Directed weighted word co-occurrence networks.

Nodes are word types (dense integer ids in first-appearance order), and a
directed edge ``i -> j`` with weight ``w`` records that word ``i`` was
immediately followed by word ``j`` inside a sentence ``w`` times.  The
graph is simple: consecutive duplicate tokens never create self-loops, and
sentence boundaries never create edges.

A finished network is treated as immutable; derived views (undirected
projection, component labeling) are cached on the instance and safe for
concurrent readers.

On-disk edge-list format: UTF-8 TSV, one ``src<TAB>dst<TAB>weight`` record
per line, LF endings, sorted lexicographically by (src, dst).  The writer
is byte-deterministic so output files can be hash-compared.  The format
has no node section, so words without any edge (from one-word sentences)
do not survive a write/read round trip.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Mapping, NamedTuple, Sequence


class EdgeListFormatError(ValueError):
    """An edge-list record or file violates the format contract."""


class EdgeRecord(NamedTuple):
    src: str
    dst: str
    weight: int


class CooccurrenceNetwork:
    """Immutable directed weighted graph over a word <-> node-id table."""

    def __init__(
        self,
        words: Sequence[str],
        edge_weights: Mapping[tuple[int, int], int],
    ):
        words = tuple(words)
        ids: dict[str, int] = {}
        for i, word in enumerate(words):
            if not word or any(ch.isspace() for ch in word):
                raise ValueError(f"invalid word for node {i}: {word!r}")
            if word in ids:
                raise ValueError(f"duplicate word in node table: {word!r}")
            ids[word] = i

        n = len(words)
        out_adj: list[dict[int, int]] = [dict() for _ in range(n)]
        in_adj: list[dict[int, int]] = [dict() for _ in range(n)]
        for (src, dst), weight in edge_weights.items():
            if not (0 <= src < n and 0 <= dst < n):
                raise ValueError(f"edge ({src}, {dst}) endpoint out of range")
            if src == dst:
                raise ValueError(f"self-loop on node {src} ({words[src]!r})")
            if not isinstance(weight, int) or weight < 1:
                raise ValueError(f"edge ({src}, {dst}) weight must be >= 1")
            out_adj[src][dst] = weight
            in_adj[dst][src] = weight

        self._words = words
        self._ids = ids
        self._out = out_adj
        self._in = in_adj
        self._edge_count = sum(len(nbrs) for nbrs in out_adj)
        # lazily filled caches, see undirected_projection / metrics
        self._projection_cache: list[set[int]] | None = None
        self._distance_cache: dict = {}

    # -- basic accessors ---------------------------------------------------

    @property
    def n_nodes(self) -> int:
        return len(self._words)

    @property
    def n_edges(self) -> int:
        """Number of distinct directed edges."""
        return self._edge_count

    @property
    def words(self) -> tuple[str, ...]:
        """Node words indexed by node id."""
        return self._words

    def node_id(self, word: str) -> int:
        return self._ids[word]

    def has_word(self, word: str) -> bool:
        return word in self._ids

    def word_of(self, node: int) -> str:
        self._check_node(node)
        return self._words[node]

    def out_weights(self, node: int) -> Mapping[int, int]:
        """dst id -> weight for the node's outgoing edges (do not mutate)."""
        self._check_node(node)
        return self._out[node]

    def in_weights(self, node: int) -> Mapping[int, int]:
        """src id -> weight for the node's incoming edges (do not mutate)."""
        self._check_node(node)
        return self._in[node]

    def weight(self, src: int, dst: int) -> int:
        """Edge weight, or 0 when the edge does not exist."""
        self._check_node(src)
        self._check_node(dst)
        return self._out[src].get(dst, 0)

    def edge_items(self) -> Iterable[tuple[tuple[int, int], int]]:
        """Iterate ((src, dst), weight) over all directed edges."""
        for src, nbrs in enumerate(self._out):
            for dst, weight in nbrs.items():
                yield (src, dst), weight

    def _check_node(self, node: int) -> None:
        if not 0 <= node < len(self._words):
            raise IndexError(f"node id {node} out of range")

    def __eq__(self, other: object) -> bool:
        """Equality up to node-id relabeling: same words, same weighted edges."""
        if not isinstance(other, CooccurrenceNetwork):
            return NotImplemented
        if set(self._words) != set(other._words):
            return False
        mine = {
            (self._words[s], self._words[d]): w for (s, d), w in self.edge_items()
        }
        theirs = {
            (other._words[s], other._words[d]): w for (s, d), w in other.edge_items()
        }
        return mine == theirs

    def __repr__(self) -> str:
        return (
            f"CooccurrenceNetwork(n_nodes={self.n_nodes}, n_edges={self.n_edges})"
        )


@dataclass(frozen=True)
class ComponentLabeling:
    """Weak-component labels per node, component sizes, and the largest id."""

    labels: tuple[int, ...]
    sizes: tuple[int, ...]
    largest: int | None  # None only for the empty network; ties -> smallest id

    @property
    def count(self) -> int:
        return len(self.sizes)


def build_network(sentences: Iterable[Sequence[str]]) -> CooccurrenceNetwork:
    """Build the network from tokenized sentences.

    Every ordered pair of adjacent tokens inside one sentence increments the
    weight of the corresponding directed edge; pairs of identical tokens are
    skipped (no self-loops).  Edges never cross sentence boundaries.  Every
    observed token becomes a node, even from one-word sentences.
    """
    ids: dict[str, int] = {}
    words: list[str] = []
    weights: dict[tuple[int, int], int] = {}
    for sentence in sentences:
        prev: int | None = None
        for token in sentence:
            node = ids.get(token)
            if node is None:
                node = len(words)
                ids[token] = node
                words.append(token)
            if prev is not None and prev != node:
                key = (prev, node)
                weights[key] = weights.get(key, 0) + 1
            prev = node
    return CooccurrenceNetwork(words, weights)


def to_edge_list(net: CooccurrenceNetwork) -> list[EdgeRecord]:
    """All edges as word-keyed records, sorted lexicographically by (src, dst)."""
    records = [
        EdgeRecord(net.words[src], net.words[dst], weight)
        for (src, dst), weight in net.edge_items()
    ]
    records.sort(key=lambda r: (r.src, r.dst))
    return records


def from_edge_list(
    records: Iterable[EdgeRecord | tuple[str, str, int]],
) -> CooccurrenceNetwork:
    """Build a network from (src, dst, weight) records.

    Node ids are assigned in first-appearance order (src before dst within a
    record).  Raises EdgeListFormatError on duplicate (src, dst) pairs,
    non-positive weights, or self-loops.
    """
    ids: dict[str, int] = {}
    words: list[str] = []
    weights: dict[tuple[int, int], int] = {}

    def intern(word: str) -> int:
        node = ids.get(word)
        if node is None:
            node = len(words)
            ids[word] = node
            words.append(word)
        return node

    for src_word, dst_word, weight in records:
        if src_word == dst_word:
            raise EdgeListFormatError(f"self-loop record: {src_word!r}")
        if not isinstance(weight, int) or weight < 1:
            raise EdgeListFormatError(
                f"weight for ({src_word!r}, {dst_word!r}) must be a positive "
                f"integer, got {weight!r}"
            )
        key = (intern(src_word), intern(dst_word))
        if key in weights:
            raise EdgeListFormatError(
                f"duplicate edge record: ({src_word!r}, {dst_word!r})"
            )
        weights[key] = weight
    return CooccurrenceNetwork(words, weights)


def write_edge_list(net: CooccurrenceNetwork, path: str | Path) -> None:
    """Write the TSV edge list (sorted, LF endings, bit-exact)."""
    lines = [
        f"{rec.src}\t{rec.dst}\t{rec.weight}\n" for rec in to_edge_list(net)
    ]
    Path(path).write_bytes("".join(lines).encode("utf-8"))


def read_edge_list(path: str | Path) -> CooccurrenceNetwork:
    """Parse a TSV edge list; errors cite the offending line number."""
    records: list[EdgeRecord] = []
    seen: dict[tuple[str, str], int] = {}
    text = Path(path).read_bytes()
    try:
        decoded = text.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise EdgeListFormatError(
            f"{path}: invalid UTF-8 at byte offset {exc.start}"
        ) from exc

    lines = decoded.split("\n")
    if lines and lines[-1] == "":
        lines.pop()  # trailing newline, not an empty record
    for lineno, line in enumerate(lines, 1):
        if line == "":
            raise EdgeListFormatError(f"{path}: line {lineno}: empty line")
        fields = line.split("\t")
        if len(fields) != 3:
            raise EdgeListFormatError(
                f"{path}: line {lineno}: expected 3 tab-separated fields, "
                f"got {len(fields)}"
            )
        src, dst, weight_text = fields
        try:
            weight = int(weight_text)
        except ValueError:
            raise EdgeListFormatError(
                f"{path}: line {lineno}: weight {weight_text!r} is not an integer"
            ) from None
        if weight < 1:
            raise EdgeListFormatError(
                f"{path}: line {lineno}: weight must be >= 1, got {weight}"
            )
        if src == dst:
            raise EdgeListFormatError(f"{path}: line {lineno}: self-loop {src!r}")
        if (src, dst) in seen:
            raise EdgeListFormatError(
                f"{path}: line {lineno}: duplicate edge ({src!r}, {dst!r}), "
                f"first seen on line {seen[(src, dst)]}"
            )
        seen[(src, dst)] = lineno
        records.append(EdgeRecord(src, dst, weight))
    return from_edge_list(records)


def undirected_projection(net: CooccurrenceNetwork) -> list[set[int]]:
    """Adjacency sets of the simple undirected projection.

    Node ``j`` is a neighbor of ``i`` iff at least one of the directed edges
    ``i -> j`` / ``j -> i`` exists; weights are discarded.  Cached on the
    network (treat the returned sets as read-only).
    """
    if net._projection_cache is None:
        adjacency: list[set[int]] = [set() for _ in range(net.n_nodes)]
        for (src, dst), _ in net.edge_items():
            adjacency[src].add(dst)
            adjacency[dst].add(src)
        net._projection_cache = adjacency
    return net._projection_cache


def weak_components(net: CooccurrenceNetwork) -> ComponentLabeling:
    """Connected components of the undirected projection.

    Component ids follow the smallest node id in each component, so the
    labeling is deterministic; ties for the largest component resolve to
    the smallest component id.
    """
    adjacency = undirected_projection(net)
    labels = [-1] * net.n_nodes
    sizes: list[int] = []
    for start in range(net.n_nodes):
        if labels[start] != -1:
            continue
        comp = len(sizes)
        labels[start] = comp
        frontier = [start]
        size = 1
        while frontier:
            next_frontier = []
            for node in frontier:
                for nbr in adjacency[node]:
                    if labels[nbr] == -1:
                        labels[nbr] = comp
                        next_frontier.append(nbr)
                        size += 1
            frontier = next_frontier
        sizes.append(size)

    largest: int | None = None
    for comp, size in enumerate(sizes):
        if largest is None or size > sizes[largest]:
            largest = comp
    return ComponentLabeling(labels=tuple(labels), sizes=tuple(sizes), largest=largest)


def largest_component_subgraph(net: CooccurrenceNetwork) -> CooccurrenceNetwork:
    """Induced subgraph on the largest weak component.

    Keeps directed edges with both endpoints inside the component; node ids
    are reassigned in ascending order of the original ids.  Raises
    ValueError on an empty network.
    """
    if net.n_nodes == 0:
        raise ValueError("empty network has no largest component")
    labeling = weak_components(net)
    keep = [
        node for node in range(net.n_nodes) if labeling.labels[node] == labeling.largest
    ]
    remap = {old: new for new, old in enumerate(keep)}
    words = [net.words[old] for old in keep]
    weights = {
        (remap[src], remap[dst]): weight
        for (src, dst), weight in net.edge_items()
        if src in remap and dst in remap
    }
    return CooccurrenceNetwork(words, weights)
