"""Community-quality metrics computed over the M-graph.

M-neighbor links are treated as undirected for density and diameter; the
r-degree histogram counts directed out-links (a member's M-neighbors).
"""

from .errors import IfcsError

R_DEGREE_MAX_BIN = 20   # histogram bins 1..20 plus one overflow bin


def r_degree(mg, community):
    """Fraction of members per M-neighbor count, binned 1..20 with overflow.

    Keys are ints 1..20 plus the string "20+"; only non-empty bins appear.
    """
    if not community:
        raise IfcsError("r-degree of an empty community is undefined")
    members = set(community)
    for v in members:
        if not mg.has_vertex(v):
            raise IfcsError("community member %s not in M-graph" % v)
    histogram = {}
    for v in sorted(members):
        degree = sum(1 for w in mg.out_neighbors(v) if w in members)
        key = degree if degree <= R_DEGREE_MAX_BIN else "%d+" % R_DEGREE_MAX_BIN
        histogram[key] = histogram.get(key, 0) + 1
    n = len(members)
    return {key: count / n for key, count in histogram.items()}


def m_distance_diameter(mg, community):
    """Largest pairwise shortest M-distance (undirected) within the community."""
    members = set(community)
    if not members:
        raise IfcsError("diameter of an empty community is undefined")
    if len(members) == 1:
        return 0
    diameter = 0
    for source in sorted(members):
        dist = {source: 0}
        frontier = [source]
        while frontier:
            nxt = []
            for v in frontier:
                for w in mg.undirected_neighbors(v):
                    if w in members and w not in dist:
                        dist[w] = dist[v] + 1
                        nxt.append(w)
            frontier = nxt
        if len(dist) < len(members):
            raise IfcsError("community is not M-connected")
        diameter = max(diameter, max(dist.values()))
    return diameter


def density(mg, community):
    """Unordered member pairs joined by an M-edge (either direction), per member."""
    members = set(community)
    if not members:
        raise IfcsError("density of an empty community is undefined")
    pairs = set()
    for v in members:
        for w in mg.out_neighbors(v):
            if w in members:
                pairs.add((min(v, w), max(v, w)))
    return len(pairs) / len(members)


def community_metrics(mg, community):
    return {
        "r_degree_histogram": {str(k): v for k, v in r_degree(mg, community).items()},
        "density": density(mg, community),
        "m_diameter": m_distance_diameter(mg, community),
    }
