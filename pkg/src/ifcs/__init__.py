"""Individual fairest community search over typed directed graphs.

Find the motif-connected communities of target-type vertices whose members
have the most similar activity levels (minimum Gini score), via a baseline
filter-verify search or three progressively pruned variants.
"""

from .errors import BudgetExceededError, GraphError, IfcsError, MotifError, ParseError
from .fairness import fairness_score, fairness_score_sorted, gini_double_sum, lower_bound
from .hin import Hin, load_graph, weakly_connected_components, write_graph
from .matching import KERNEL_NAME, Matcher, nlf_pass
from .motif import BfsOrder, Motif, parse_motif, write_motif
from .search import (
    MODES, CommunityResult, QueryParams, SearchStats,
    baseline_search, exploration_filter, message_passing, optimized_search, run_query,
)

__version__ = "0.1.0"

__all__ = [
    "BfsOrder", "BudgetExceededError", "CommunityResult", "GraphError",
    "Hin", "IfcsError", "KERNEL_NAME", "MODES", "Matcher", "Motif",
    "MotifError", "ParseError", "QueryParams", "SearchStats",
    "baseline_search", "exploration_filter", "fairness_score",
    "fairness_score_sorted", "gini_double_sum", "load_graph", "lower_bound",
    "message_passing", "nlf_pass", "optimized_search", "parse_motif",
    "run_query", "weakly_connected_components", "write_graph", "write_motif",
]
