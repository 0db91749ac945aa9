"""Plain-text formats: hyperedge lists, community/partition labels, CSV.

Hyperedge lists have one whitespace-separated line of vertex ids per
hyperedge (repetitions mark multiplicity). Lines starting with ``#`` are
comments, except an optional ``#vertices N`` header which pins the
vertex count so trailing isolated vertices survive a round trip.
Community labels and partitions share one format: ``vertex<TAB>block``.
"""

from .hypergraph import Hypergraph
from .modularity import Partition


def write_hypergraph(h, path):
    with open(path, "w") as f:
        f.write(f"#vertices {h.num_vertices}\n")
        for e in h.edges:
            f.write(" ".join(str(v) for v in e))
            f.write("\n")


def parse_hypergraph(path):
    edges = []
    declared = None
    max_id = -1
    with open(path) as f:
        for lineno, raw in enumerate(f, start=1):
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                fields = line[1:].split()
                if fields and fields[0] == "vertices":
                    if len(fields) != 2 or not fields[1].isdigit():
                        raise ValueError(f"{path}:{lineno}: malformed #vertices header")
                    declared = int(fields[1])
                continue
            try:
                members = [int(tok) for tok in line.split()]
            except ValueError:
                raise ValueError(f"{path}:{lineno}: non-integer vertex id in {line!r}") from None
            if any(v < 0 for v in members):
                raise ValueError(f"{path}:{lineno}: negative vertex id")
            max_id = max(max_id, *members)
            edges.append(members)
    n = max_id + 1
    if declared is not None:
        if declared < n:
            raise ValueError(f"{path}: header declares {declared} vertices but ids reach {max_id}")
        n = declared
    h = Hypergraph()
    for _ in range(n):
        h.add_vertex()
    for members in edges:
        h.add_hyperedge(members)
    return h


def write_labels(labels, path):
    with open(path, "w") as f:
        for v, b in enumerate(labels):
            f.write(f"{v}\t{b}\n")


def parse_labels(path, num_vertices):
    """Read one label per vertex; every vertex must appear exactly once."""
    labels = [None] * num_vertices
    with open(path) as f:
        for lineno, raw in enumerate(f, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            fields = line.split("\t") if "\t" in line else line.split()
            if len(fields) != 2:
                raise ValueError(f"{path}:{lineno}: expected 'vertex<TAB>block', got {line!r}")
            try:
                v, b = int(fields[0]), int(fields[1])
            except ValueError:
                raise ValueError(f"{path}:{lineno}: non-integer field in {line!r}") from None
            if not 0 <= v < num_vertices:
                raise ValueError(f"{path}:{lineno}: vertex {v} out of range [0, {num_vertices})")
            if b < 0:
                raise ValueError(f"{path}:{lineno}: negative block {b}")
            if labels[v] is not None:
                raise ValueError(f"{path}:{lineno}: vertex {v} labeled twice")
            labels[v] = b
    for v, b in enumerate(labels):
        if b is None:
            raise ValueError(f"{path}: vertex {v} has no label")
    return labels


def parse_partition(path, num_vertices):
    return Partition(parse_labels(path, num_vertices))


def write_partition(part, path):
    write_labels(part.block_of, path)


def format_value(x):
    """Stable text for CSV cells: repr for floats, str otherwise."""
    if isinstance(x, float):
        return repr(x)
    return str(x)


def write_csv(path, header, rows):
    with open(path, "w") as f:
        f.write(",".join(header))
        f.write("\n")
        for row in rows:
            f.write(",".join(format_value(x) for x in row))
            f.write("\n")


def write_weighted_graph_csv(wg, path):
    write_csv(path, ["u", "v", "weight"], wg.edge_list())
