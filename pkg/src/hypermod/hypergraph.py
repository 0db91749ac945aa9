"""Growable hypergraph with multiset hyperedges and cached degrees."""

from collections import Counter
from dataclasses import dataclass


@dataclass
class DegreeHistogram:
    """Number of vertices per degree, degree-0 vertices included."""

    counts: dict
    total_vertices: int


class Hypergraph:
    """Hypergraph whose hyperedges are unordered multisets of vertex ids.

    Edges are stored as sorted tuples with repetitions, so a vertex may
    appear several times in one edge and every appearance counts toward
    its degree and toward the edge cardinality. Vertices are never
    removed; ids are dense in ``0..num_vertices-1``.

    ``degree_sum`` always equals the sum of edge cardinalities.
    """

    def __init__(self, num_communities=None):
        self.num_vertices = 0
        self.edges = []
        self.degrees = []
        self.degree_sum = 0
        self.num_communities = num_communities
        self.community = [] if num_communities is not None else None

    @property
    def num_edges(self):
        return len(self.edges)

    def add_vertex(self, community=None):
        """Append a new isolated vertex, returning its id."""
        if self.community is not None:
            if community is None:
                raise ValueError("community-labeled hypergraph: a community index is required")
            if not 0 <= community < self.num_communities:
                raise ValueError(
                    f"community index {community} out of range [0, {self.num_communities})"
                )
            self.community.append(community)
        elif community is not None:
            raise ValueError("hypergraph carries no community labels")
        self.degrees.append(0)
        self.num_vertices += 1
        return self.num_vertices - 1

    def add_hyperedge(self, members):
        """Add a hyperedge (multiset of vertex ids), returning its index."""
        edge = tuple(sorted(members))
        if not edge:
            raise ValueError("hyperedge must be non-empty")
        if edge[0] < 0 or edge[-1] >= self.num_vertices:
            bad = edge[0] if edge[0] < 0 else edge[-1]
            raise ValueError(f"invalid vertex id {bad}")
        degrees = self.degrees
        for v in edge:
            degrees[v] += 1
        self.degree_sum += len(edge)
        self.edges.append(edge)
        return len(self.edges) - 1

    def set_communities(self, labels, num_communities=None):
        """Attach one community label per vertex (used when loading from files)."""
        if len(labels) != self.num_vertices:
            raise ValueError(
                f"expected {self.num_vertices} labels, got {len(labels)}"
            )
        r = num_communities if num_communities is not None else (max(labels) + 1 if labels else 0)
        for v, c in enumerate(labels):
            if not 0 <= c < r:
                raise ValueError(f"vertex {v}: community {c} out of range [0, {r})")
        self.num_communities = r
        self.community = list(labels)

    def degree_histogram(self):
        counts = Counter(self.degrees)
        return DegreeHistogram(dict(counts), self.num_vertices)

    def recomputed_degrees(self):
        """Fresh degree count from the edge list, for validating the cache."""
        deg = [0] * self.num_vertices
        for e in self.edges:
            for v in e:
                deg[v] += 1
        return deg
