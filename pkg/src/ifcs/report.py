"""Result serialization: the JSON contract emitted by the CLI.

Key order is fixed: query, communities, stats (then metrics when requested).
Communities are sorted by smallest member id; members are reported in the
user's original external ids.
"""

import json

from .digraph import DiGraph
from .matching import Matcher
from .metrics import community_metrics

STATS_KEYS = (
    "visited_targets", "existence_checks", "instances_enumerated",
    "bound_computations", "components_pruned", "survivors_after_nlf",
    "survivors_after_exploration", "survivors_after_message_passing",
    "wall_time_ms",
)


def result_to_dict(g, result, motif_file, k, mode, metrics=None):
    communities = []
    for comp, levels in zip(result.communities, result.active_levels):
        communities.append({
            "members": [g.ext_ids[v] for v in comp],
            "active_levels": {g.ext_ids[v]: levels[v] for v in comp},
            "fairness_score": result.fairness_score,
        })
    doc = {
        "query": {"motif_file": motif_file, "k": k, "mode": mode},
        "communities": communities,
        "stats": {key: getattr(result.stats, key) for key in STATS_KEYS},
    }
    if metrics is not None:
        doc["metrics"] = metrics
    return doc


def write_result(doc, stream):
    json.dump(doc, stream, indent=2)
    stream.write("\n")


def community_m_graph(g, motif, community, budget=None):
    """M-graph restricted to one community, rebuilt by anchored enumeration."""
    members = set(community)
    matcher = Matcher(g, motif, budget=budget)
    mg = DiGraph()
    for v in sorted(members):
        mg.add_vertex(v)
        _count, mneighbors = matcher.count_around(v)
        for w in mneighbors:
            if w in members:
                mg.add_edge(v, w)
    return mg


def metrics_for_result(g, motif, result, budget=None):
    out = []
    for comp in result.communities:
        mg = community_m_graph(g, motif, comp, budget=budget)
        out.append(community_metrics(mg, comp))
    return out
