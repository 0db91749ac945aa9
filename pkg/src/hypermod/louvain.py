"""Louvain-style community detection on weighted flattened graphs.

Local moving followed by graph aggregation, repeated until no single
move improves weighted graph modularity by more than ``MIN_GAIN``.
The vertex visit order is shuffled once per level with the given seed;
ties between target blocks break toward the lowest block index, so runs
are fully deterministic.
"""

import random

from .modularity import Partition, weighted_graph_modularity

MIN_GAIN = 1e-9


def _move_gain(w_to_target, vol_target, w_to_current, vol_current_rest, k_v, total):
    """Modularity change of moving a vertex between two blocks.

    ``vol_current_rest`` excludes the vertex itself; the vertex's own
    self-weight cancels and is ignored.
    """
    gain_new = w_to_target / total - vol_target * k_v / (2.0 * total * total)
    gain_old = w_to_current / total - vol_current_rest * k_v / (2.0 * total * total)
    return gain_new - gain_old


def _one_level(adj, k, total, order):
    """Greedy local moving; returns (block assignment, any move happened)."""
    n = len(adj)
    block = list(range(n))
    vol = list(k)
    two_m2 = 2.0 * total * total
    improved = False
    while True:
        moves = 0
        for v in order:
            bv = block[v]
            kv = k[v]
            w_to = {}
            for u, w in adj[v].items():
                b = block[u]
                w_to[b] = w_to.get(b, 0.0) + w
            vol[bv] -= kv
            stay = w_to.get(bv, 0.0) / total - vol[bv] * kv / two_m2
            best_b, best_score = bv, stay
            for b in sorted(w_to):
                if b == bv:
                    continue
                score = w_to[b] / total - vol[b] * kv / two_m2
                if score > best_score:
                    best_b, best_score = b, score
            if 0.0 > best_score:
                # detaching into a fresh singleton block scores exactly 0
                best_b, best_score = len(vol), 0.0
            if best_b != bv and best_score - stay > MIN_GAIN:
                if best_b == len(vol):
                    vol.append(0.0)
                vol[best_b] += kv
                block[v] = best_b
                moves += 1
                improved = True
            else:
                vol[bv] += kv
        if moves == 0:
            return block, improved


def _compact(block):
    """Renumber block labels to 0..b-1 by first appearance."""
    mapping = {}
    out = []
    for b in block:
        if b not in mapping:
            mapping[b] = len(mapping)
        out.append(mapping[b])
    return out, len(mapping)


def _aggregate(adj, self_w, block, num_blocks):
    """Collapse blocks into supervertices, accumulating weights."""
    new_adj = [dict() for _ in range(num_blocks)]
    new_self = [0.0] * num_blocks
    for v, s in enumerate(self_w):
        new_self[block[v]] += s
    for v in range(len(adj)):
        bv = block[v]
        for u, w in adj[v].items():
            if u < v:
                continue
            bu = block[u]
            if bu == bv:
                new_self[bv] += w
            else:
                new_adj[bv][bu] = new_adj[bv].get(bu, 0.0) + w
                new_adj[bu][bv] = new_adj[bu].get(bv, 0.0) + w
    new_k = [2.0 * new_self[b] + sum(new_adj[b].values()) for b in range(num_blocks)]
    return new_adj, new_self, new_k


def detect_communities(graph, seed=0, max_levels=32):
    """Partition a weighted graph by greedy modularity maximization.

    Returns a partition of the graph's vertices; vertices without edges
    stay in singleton blocks. A graph with no edges yields the singleton
    partition.
    """
    n = graph.num_vertices
    if not graph.weights:
        return Partition.singletons(n)
    adj = [dict() for _ in range(n)]
    for (u, v), w in graph.weights.items():
        adj[u][v] = adj[u].get(v, 0.0) + w
        adj[v][u] = adj[v].get(u, 0.0) + w
    self_w = [0.0] * n
    k = [sum(d.values()) for d in adj]
    total = graph.total_weight
    rng = random.Random(seed)

    labels = list(range(n))
    for _level in range(max_levels):
        order = list(range(len(adj)))
        rng.shuffle(order)
        block, improved = _one_level(adj, k, total, order)
        block, num_blocks = _compact(block)
        labels = [block[b] for b in labels]
        if not improved or num_blocks == len(adj):
            break
        adj, self_w, k = _aggregate(adj, self_w, block, num_blocks)

    part = Partition(labels).relabeled()
    if weighted_graph_modularity(graph, part) < 0.0:
        return Partition.one_block(n)
    return part
