"""Preferential-attachment hypergraph growth with four event types.

At every time step exactly one event happens: a new isolated vertex, a
new vertex attached by ``edges_per_event`` hyperedges, a batch of
``edges_per_event`` hyperedges on existing vertices (one of several size
distributions), or nothing. Vertex selection within a step always uses
the state from before the step, so the hyperedges of one step are
exchangeable and a new vertex can never land in its own attachment
edges beyond the one guaranteed slot per edge.
"""

import math
from dataclasses import dataclass, field

from .hypergraph import Hypergraph
from .sampling import CardinalityDistribution, PreferentialSelector, make_rng

EVENT_VERTEX = "vertex"
EVENT_VERTEX_EDGES = "vertex+edges"
EVENT_NOTHING = "nothing"

_PROB_TOL = 1e-9


@dataclass
class HParams:
    """Parameters of the general growth process.

    ``p_vertex``      probability of adding an isolated vertex
    ``p_vertex_edge`` probability of adding a vertex with attachment edges
    ``p_edge``        per-distribution probabilities of an edges-only event
    ``attach_size``   size distribution of attachment edges (new vertex included)
    ``edge_sizes``    size distributions of edges-only events, one per p_edge entry
    ``edges_per_event`` number of hyperedges added by a single event
    ``gamma``         additive smoothing of preferential selection
    ``cap_sizes``     reject sampled sizes >= max(2, ceil(t^(1/4)))
    """

    p_vertex: float
    p_vertex_edge: float
    p_edge: list
    attach_size: CardinalityDistribution
    edge_sizes: list
    edges_per_event: int = 1
    gamma: float = 0.0
    steps: int = 0
    cap_sizes: bool = False

    def validate(self):
        if min(self.p_vertex, self.p_vertex_edge, 0.0) < 0 or any(p < 0 for p in self.p_edge):
            raise ValueError("event probabilities must be non-negative")
        total = self.p_vertex + self.p_vertex_edge + sum(self.p_edge)
        if not (0.0 < total <= 1.0 + _PROB_TOL):
            raise ValueError(f"event probabilities sum to {total}, expected a value in (0, 1]")
        if len(self.p_edge) != len(self.edge_sizes):
            raise ValueError(
                f"{len(self.p_edge)} edge probabilities but {len(self.edge_sizes)} size distributions"
            )
        if self.edges_per_event < 1:
            raise ValueError("edges_per_event must be >= 1")
        if self.gamma < 0:
            raise ValueError("gamma must be non-negative")
        if self.steps < 0:
            raise ValueError("steps must be >= 0")

    @property
    def num_edge_distributions(self):
        return len(self.p_edge)


@dataclass
class HRunStats:
    """Checkpointed run trajectory: (t, vertices, edges, degree_sum, weight_sum)."""

    records: list = field(default_factory=list)
    event_counts: dict = field(default_factory=dict)

    def record(self, t, h, gamma):
        w = h.degree_sum + gamma * h.num_vertices
        self.records.append((t, h.num_vertices, h.num_edges, h.degree_sum, w))

    def count_event(self, tag):
        self.event_counts[tag] = self.event_counts.get(tag, 0) + 1


def initial_hypergraph():
    """Single vertex carrying a single size-1 hyperedge."""
    h = Hypergraph()
    v = h.add_vertex()
    h.add_hyperedge([v])
    return h


def sample_size(dist, t, cap_sizes, rng):
    """Draw a hyperedge size, optionally rejecting values >= max(2, ceil(t^0.25))."""
    if not cap_sizes:
        return dist.sample(rng)
    cap = max(2, math.ceil(t ** 0.25))
    for _ in range(100):
        z = dist.sample(rng)
        if z < cap:
            return z
    return 1


def h_step(h, params, sel, t, rng):
    """Apply one time step, returning the event tag.

    Tags are ``"vertex"``, ``"vertex+edges"``, ``"edges:<i>"`` and
    ``"nothing"``. Selection state is frozen for the whole step; degree
    increments are committed after all of the step's edges are drawn.
    """
    u = rng.random()
    if u < params.p_vertex:
        v = h.add_vertex()
        sel.add_member(v)
        return EVENT_VERTEX
    u -= params.p_vertex
    m = params.edges_per_event
    if u < params.p_vertex_edge:
        y = sample_size(params.attach_size, t, params.cap_sizes, rng)
        new_edges = [sel.select_vertices(y - 1, rng) for _ in range(m)]
        v = h.add_vertex()
        sel.add_member(v)
        for others in new_edges:
            others.append(v)
            h.add_hyperedge(others)
            for w in others:
                sel.record_degree_increment(w)
        return EVENT_VERTEX_EDGES
    u -= params.p_vertex_edge
    for i, p in enumerate(params.p_edge):
        if u < p:
            x = sample_size(params.edge_sizes[i], t, params.cap_sizes, rng)
            new_edges = [sel.select_vertices(x, rng) for _ in range(m)]
            for members in new_edges:
                h.add_hyperedge(members)
                for w in members:
                    sel.record_degree_increment(w)
            return f"edges:{i}"
        u -= p
    return EVENT_NOTHING


def checkpoint_times(steps):
    """Geometric checkpoints 1, 2, 4, ... plus the final step."""
    times = set()
    t = 1
    while t <= steps:
        times.add(t)
        t *= 2
    if steps > 0:
        times.add(steps)
    return times


def generate_h(params, seed):
    """Run the process for ``params.steps`` steps from the initial hypergraph."""
    params.validate()
    rng = make_rng(seed)
    h = initial_hypergraph()
    sel = PreferentialSelector(params.gamma)
    sel.add_member(0)
    sel.record_degree_increment(0)
    stats = HRunStats()
    stats.record(0, h, params.gamma)
    marks = checkpoint_times(params.steps)
    for t in range(1, params.steps + 1):
        tag = h_step(h, params, sel, t, rng)
        stats.count_event(tag)
        if t in marks:
            stats.record(t, h, params.gamma)
    return h, stats
