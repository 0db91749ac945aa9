"""Modularity scoring for graphs and hypergraphs, flattening, brute force.

A hyperedge is internal to a block only when every one of its vertices
(with multiplicity) lies in the block. The hypergraph degree tax raises
each block's volume fraction to the power of the edge cardinality,
weighted by the cardinality mix, which reduces to the familiar
``(vol/2|E|)^2`` graph tax on 2-uniform inputs. A hypergraph with no
edges scores 0 by convention.
"""

from collections import Counter
from dataclasses import dataclass
from itertools import combinations


class Partition:
    """Assignment of every vertex to exactly one block."""

    def __init__(self, block_of, num_blocks=None):
        block_of = list(block_of)
        if num_blocks is None:
            num_blocks = max(block_of) + 1 if block_of else 0
        for v, b in enumerate(block_of):
            if not 0 <= b < num_blocks:
                raise ValueError(f"vertex {v}: block {b} out of range [0, {num_blocks})")
        self.block_of = block_of
        self.num_blocks = num_blocks

    @classmethod
    def singletons(cls, num_vertices):
        return cls(list(range(num_vertices)), num_vertices)

    @classmethod
    def one_block(cls, num_vertices):
        return cls([0] * num_vertices, 1 if num_vertices else 0)

    def blocks(self):
        out = [[] for _ in range(self.num_blocks)]
        for v, b in enumerate(self.block_of):
            out[b].append(v)
        return out

    def relabeled(self):
        """Blocks renumbered by first appearance; canonical for comparisons."""
        mapping = {}
        labels = []
        for b in self.block_of:
            if b not in mapping:
                mapping[b] = len(mapping)
            labels.append(mapping[b])
        return Partition(labels, len(mapping) if labels else 0)

    def __eq__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return self.relabeled().block_of == other.relabeled().block_of

    def __len__(self):
        return len(self.block_of)


@dataclass
class ModularityBreakdown:
    """Score split into its edge contribution and degree tax, per block too."""

    edge_contribution: float
    degree_tax: float
    score: float
    per_block: list


@dataclass
class CardinalityProfile:
    """Fractions of hyperedges per cardinality and mean cardinality."""

    a: dict
    delta: float

    @property
    def max_cardinality(self):
        return max(self.a)


def _zero_breakdown():
    return ModularityBreakdown(0.0, 0.0, 0.0, [])


def _block_volumes(h, part):
    vol = [0.0] * part.num_blocks
    degrees = h.degrees
    for v, b in enumerate(part.block_of):
        vol[b] += degrees[v]
    return vol


def _internal_edge_counts(h, part):
    counts = [0] * part.num_blocks
    block_of = part.block_of
    for e in h.edges:
        b = block_of[e[0]]
        internal = True
        for v in e:
            if block_of[v] != b:
                internal = False
                break
        if internal:
            counts[b] += 1
    return counts


def graph_modularity_score(h, part):
    """Score a 2-uniform hypergraph under the classic graph definition."""
    if len(part) != h.num_vertices:
        raise ValueError("partition size does not match the vertex count")
    for e in h.edges:
        if len(e) != 2:
            raise ValueError(f"graph modularity needs 2-uniform input, found cardinality {len(e)}")
    ne = h.num_edges
    if ne == 0:
        return _zero_breakdown()
    vol = _block_volumes(h, part)
    internal = _internal_edge_counts(h, part)
    per_block = []
    ec_total = 0.0
    tax_total = 0.0
    for b in range(part.num_blocks):
        ec = internal[b] / ne
        tax = (vol[b] / (2.0 * ne)) ** 2
        per_block.append((ec, tax))
        ec_total += ec
        tax_total += tax
    return ModularityBreakdown(ec_total, tax_total, ec_total - tax_total, per_block)


def hypergraph_modularity_score(h, part):
    """Score any hypergraph: edge contribution minus cardinality-weighted tax."""
    if len(part) != h.num_vertices:
        raise ValueError("partition size does not match the vertex count")
    ne = h.num_edges
    if ne == 0:
        return _zero_breakdown()
    vol = _block_volumes(h, part)
    internal = _internal_edge_counts(h, part)
    vol_total = float(h.degree_sum)
    card_counts = Counter(len(e) for e in h.edges)
    card_fracs = [(ell, cnt / ne) for ell, cnt in sorted(card_counts.items())]
    per_block = []
    ec_total = 0.0
    tax_total = 0.0
    for b in range(part.num_blocks):
        ec = internal[b] / ne
        frac = vol[b] / vol_total
        tax = 0.0
        for ell, a_ell in card_fracs:
            tax += a_ell * frac ** ell
        per_block.append((ec, tax))
        ec_total += ec
        tax_total += tax
    return ModularityBreakdown(ec_total, tax_total, ec_total - tax_total, per_block)


def cardinality_profile(h):
    """Empirical cardinality fractions and mean cardinality of a hypergraph."""
    ne = h.num_edges
    if ne == 0:
        raise ValueError("cardinality profile needs at least one hyperedge")
    counts = Counter(len(e) for e in h.edges)
    a = {ell: cnt / ne for ell, cnt in sorted(counts.items())}
    return CardinalityProfile(a, h.degree_sum / ne)


def _restricted_growth_strings(n):
    """All set partitions of range(n) as block-index arrays, in place."""
    a = [0] * n
    m = [0] * n
    while True:
        yield a
        i = n - 1
        while i > 0 and a[i] > m[i - 1]:
            i -= 1
        if i == 0:
            return
        a[i] += 1
        m[i] = max(m[i - 1], a[i])
        for j in range(i + 1, n):
            a[j] = 0
            m[j] = m[i]


def brute_force_modularity(h, max_vertices=12):
    """Exact maximizer over every set partition of the vertices.

    Exhaustive over Bell(n) partitions, so n is capped (Bell(12) is
    about 4.2 million). Returns the best partition and its score.
    """
    n = h.num_vertices
    if n > max_vertices:
        raise ValueError(f"{n} vertices exceed the brute-force cap of {max_vertices}")
    if n == 0:
        return Partition([], 0), 0.0
    ne = h.num_edges
    if ne == 0:
        return Partition.one_block(n), 0.0
    degrees = h.degrees
    edges = h.edges
    vol_total = float(h.degree_sum)
    card_fracs = [(ell, cnt / ne) for ell, cnt in sorted(Counter(len(e) for e in edges).items())]
    best_q = None
    best = None
    vol = [0.0] * n
    for a in _restricted_growth_strings(n):
        nb = max(a) + 1
        for b in range(nb):
            vol[b] = 0.0
        for v in range(n):
            vol[a[v]] += degrees[v]
        ec = 0
        for e in edges:
            b = a[e[0]]
            internal = True
            for v in e:
                if a[v] != b:
                    internal = False
                    break
            if internal:
                ec += 1
        tax = 0.0
        for b in range(nb):
            frac = vol[b] / vol_total
            for ell, a_ell in card_fracs:
                tax += a_ell * frac ** ell
        q = ec / ne - tax
        if best_q is None or q > best_q:
            best_q = q
            best = list(a)
    return Partition(best).relabeled(), best_q


class WeightedGraph:
    """Undirected weighted graph on dense vertex ids, no self-loops."""

    def __init__(self, num_vertices):
        self.num_vertices = num_vertices
        self.weights = {}

    def add_weight(self, u, v, w):
        if u == v:
            raise ValueError("self-loops are not stored")
        if not (0 <= u < self.num_vertices and 0 <= v < self.num_vertices):
            raise ValueError(f"invalid edge ({u}, {v})")
        key = (u, v) if u < v else (v, u)
        self.weights[key] = self.weights.get(key, 0.0) + w

    @property
    def total_weight(self):
        return sum(self.weights.values())

    def weighted_degrees(self):
        deg = [0.0] * self.num_vertices
        for (u, v), w in self.weights.items():
            deg[u] += w
            deg[v] += w
        return deg

    def edge_list(self):
        """Deterministically ordered (u, v, weight) triples."""
        return [(u, v, w) for (u, v), w in sorted(self.weights.items())]


def flatten(h):
    """Replace each hyperedge by a clique on its distinct vertices.

    Every unordered pair of distinct members contributes weight 1;
    repeated appearances of a vertex inside one hyperedge contribute
    nothing on their own.
    """
    counts = Counter(
        pair for e in h.edges for pair in combinations(sorted(set(e)), 2)
    )
    wg = WeightedGraph(h.num_vertices)
    wg.weights = {pair: float(c) for pair, c in counts.items()}
    return wg


def weighted_graph_modularity(wg, part):
    """Graph modularity with weights in place of edge counts."""
    if len(part) != wg.num_vertices:
        raise ValueError("partition size does not match the vertex count")
    total = wg.total_weight
    if total == 0:
        return 0.0
    block_of = part.block_of
    internal = 0.0
    vol = [0.0] * part.num_blocks
    for (u, v), w in wg.weights.items():
        vol[block_of[u]] += w
        vol[block_of[v]] += w
        if block_of[u] == block_of[v]:
            internal += w
    q = internal / total
    for x in vol:
        q -= (x / (2.0 * total)) ** 2
    return q
