"""Random-walk motif generation and vertex sampling for scalability runs.

Both are fully determined by their seed.
"""

import random

from .errors import IfcsError
from .motif import Motif

MAX_REJECTIONS = 1000


def random_walk_motif(g, size, rng):
    """One motif: random walk over the undirected projection until ``size``
    distinct vertices are collected, induced edges, target type drawn among
    types occurring at least twice.  Returns None when the walk dies."""
    start = rng.choice(g.vertices())
    visited = [start]
    seen = {start}
    current = start
    while len(visited) < size:
        neighbors = g.undirected_neighbors(current)
        if not neighbors:
            return None
        current = rng.choice(neighbors)
        if current not in seen:
            seen.add(current)
            visited.append(current)
    ordered = sorted(seen)
    local = {v: i for i, v in enumerate(ordered)}
    labels = {local[v]: g.labels[g.vtype[v]] for v in ordered}
    edges = [(local[u], local[v]) for u in ordered for v in g.out_adj[u] if v in seen]

    counts = {}
    for label in labels.values():
        counts[label] = counts.get(label, 0) + 1
    eligible_types = sorted(t for t, c in counts.items() if c >= 2)
    if not eligible_types:
        return None
    t_label = rng.choice(eligible_types)
    target = rng.choice(sorted(q for q, l in labels.items() if l == t_label))
    return Motif(labels, edges, target)


def generate_motifs(g, size, count, seed):
    """``count`` valid motifs of ``size`` vertices, rejection-sampled."""
    if not 3 <= size <= 7:
        raise IfcsError("motif size must be in [3, 7], got %d" % size)
    if g.n_vertices < size:
        raise IfcsError("graph too small for motifs of size %d" % size)
    rng = random.Random(seed)
    motifs = []
    rejections = 0
    while len(motifs) < count:
        m = random_walk_motif(g, size, rng)
        if m is None:
            rejections += 1
            if rejections > MAX_REJECTIONS:
                raise IfcsError(
                    "gave up after %d rejected walks; graph cannot yield a "
                    "size-%d motif with two target-type vertices" % (rejections, size))
            continue
        motifs.append(m)
    return motifs


def sample_vertices(g, ratio, seed):
    """Uniform vertex sample of round(ratio * n) vertices, with induced edges.

    Returns (vertex ids sorted, induced edge list).  Isolated vertices are
    retained.
    """
    if not 0 < ratio <= 1:
        raise IfcsError("sampling ratio must be in (0, 1], got %r" % ratio)
    vertices = g.vertices()
    count = int(round(ratio * len(vertices)))
    rng = random.Random(seed)
    keep = sorted(rng.sample(vertices, count))
    kept = set(keep)
    edges = [(u, v) for u in keep for v in g.out_adj[u] if v in kept]
    return keep, edges
