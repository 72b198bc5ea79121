"""The four community-search modes over one shared output contract.

  baseline  exhaustive filter-verify: fixpoint deletion of target-type
            vertices without an instance, full enumeration, weak components
            of the M-graph, minimum fairness score wins (ties accumulate).
  fva       exploration filter first, then the baseline verify/enumerate.
  fva-m     exploration filter + message-passing verification.
  fva-l     fva-m + per-component incremental search with fairness
            lower-bound pruning.

All modes return identical communities and scores; the optimized modes are
pure accelerations.  Determinism: every choice the pseudocode leaves open
(selection order, tie-breaks) is resolved by smallest id / smallest BFS
index, so repeated runs are byte-identical.
"""

import math
import time
from dataclasses import dataclass, field

from .digraph import DiGraph
from .errors import IfcsError
from .fairness import fairness_score_sorted, lower_bound
from .hin import weakly_connected_components
from .matching import Matcher, nlf_pass, star_check_backward, star_check_forward
from .motif import BfsOrder

MODES = ("baseline", "fva", "fva-m", "fva-l")


@dataclass
class QueryParams:
    k: int = 2                  # minimum community size
    budget: int = None          # per-anchor raw-embedding cap
    threads: int = 1            # accepted for interface parity; execution is sequential

    def __post_init__(self):
        if self.k < 1:
            raise IfcsError("k must be >= 1, got %d" % self.k)


@dataclass
class SearchStats:
    visited_targets: int = 0
    existence_checks: int = 0
    instances_enumerated: int = 0
    bound_computations: int = 0
    components_pruned: int = 0
    survivors_after_nlf: int = None
    survivors_after_exploration: int = None
    survivors_after_message_passing: int = None
    wall_time_ms: float = 0.0


@dataclass
class CommunityResult:
    communities: list = field(default_factory=list)     # sorted member lists
    fairness_score: float = None                        # None when no community
    active_levels: list = field(default_factory=list)   # dict per community
    stats: SearchStats = field(default_factory=SearchStats)


# -- shared helpers ----------------------------------------------------------


def _target_code(g, motif):
    return g.label_code.get(motif.target_type())


def _fixpoint_deletion(g, motif, params, stats):
    """Alg-1-style loop: re-check every surviving target vertex each round
    until a round deletes nothing.  Mutates ``g``."""
    t_code = _target_code(g, motif)
    if t_code is None:
        return
    while True:
        matcher = Matcher(g, motif, budget=params.budget)
        victims = []
        for v in g.vertices_of_type(t_code):
            stats.existence_checks += 1
            if not matcher.exists_around(v):
                victims.append(v)
        if not victims:
            return
        g.delete_vertices(victims)


def _enumerate_survivors(g, motif, params, stats, targets=None):
    """Full per-anchor enumeration: active levels plus the M-graph."""
    t_code = _target_code(g, motif)
    levels = {}
    mg = DiGraph()
    if t_code is None:
        return levels, mg
    matcher = Matcher(g, motif, budget=params.budget)
    pool = sorted(targets) if targets is not None else g.vertices_of_type(t_code)
    for v in pool:
        stats.visited_targets += 1
        count, mneighbors = matcher.count_around(v)
        stats.instances_enumerated += count
        levels[v] = count
        mg.add_vertex(v)
        for w in mneighbors:
            mg.add_edge(v, w)
    return levels, mg


def _extract_communities(mg, levels, params, stats):
    best = math.inf
    chosen = []
    for comp in weakly_connected_components(mg):
        if len(comp) < params.k:
            continue
        fs = fairness_score_sorted(sorted(levels[v] for v in comp))
        if fs < best:
            best = fs
            chosen = [comp]
        elif fs == best:
            chosen.append(comp)
    return _result(chosen, best, levels, stats)


def _result(chosen, best, levels, stats):
    chosen.sort(key=lambda c: c[0])
    return CommunityResult(
        communities=chosen,
        fairness_score=None if not chosen else best,
        active_levels=[{v: levels[v] for v in comp} for comp in chosen],
        stats=stats)


# -- baseline ----------------------------------------------------------------


def baseline_search(g, motif, params, stats=None):
    """Exact filter-verify solution; ``g`` is not mutated."""
    stats = stats or SearchStats()
    work = copy_hin(g)
    _fixpoint_deletion(work, motif, params, stats)
    levels, mg = _enumerate_survivors(work, motif, params, stats)
    return _extract_communities(mg, levels, params, stats)


# -- exploration-based filter -------------------------------------------------


def exploration_filter(g, motif, params, stats=None):
    """NLF seeding, forward candidate exploration, backward refinement.

    Returns ``(cm_graph, reduced_g, regions)``.  ``reduced_g`` is a fresh
    Hin holding only candidate-region edges, with target-type vertices
    outside the CM-graph removed.  Sound: every target vertex of the true
    M-graph (within a surviving component) is kept.
    """
    stats = stats or SearchStats()
    order = BfsOrder(motif)
    t_code = _target_code(g, motif)
    work = copy_hin(g)
    if t_code is None:
        stats.survivors_after_nlf = 0
        stats.survivors_after_exploration = 0
        return DiGraph(), work, {}

    seeds = [v for v in work.vertices_of_type(t_code)
             if nlf_pass(work, motif, motif.target, v)]
    stats.survivors_after_nlf = len(seeds)
    rejected = set(work.vertices_of_type(t_code)) - set(seeds)
    if rejected:
        work.delete_vertices(rejected)

    regions = {}
    for c in seeds:
        cand = _explore_region(work, motif, order, c)
        if cand is not None:
            regions[c] = cand

    cm, reduced = _materialize(work, motif, order, params, regions)

    # backward refinement against later-in-order neighbors, per region
    for c in sorted(regions):
        if not cm.has_vertex(c):
            regions.pop(c)
            continue
        if not _refine_region(reduced, motif, order, regions[c]):
            regions.pop(c)
    cm, reduced = _materialize(work, motif, order, params, regions)

    stats.survivors_after_exploration = cm.n_vertices
    return cm, reduced, regions


def _explore_region(g, motif, order, c):
    """Forward candidate exploration around seed c; None when it dies."""
    cand = {motif.target: {c}}
    for i in range(1, len(order)):
        u = order[i]
        earlier = [up for up in motif.neighbors(u) if order.index[up] < i]
        u_b = min(earlier, key=lambda q: order.index[q])
        pool = set()
        for v in cand[u_b]:
            pool.update(g.out_adj[v] if motif.has_edge(u_b, u) else g.in_adj[v])
        found = set()
        for v in sorted(pool):
            if (nlf_pass(g, motif, u, v)
                    and star_check_forward(g, motif, order, u, v, cand)):
                found.add(v)
        if not found:
            return None
        cand[u] = found
    return cand


def _refine_region(g, motif, order, cand):
    """Backward pass: keep candidates supported by later-order neighbors."""
    for i in range(len(order) - 2, -1, -1):
        u = order[i]
        kept = {v for v in cand[u]
                if g.has_vertex(v) and star_check_backward(g, motif, order, u, v, cand)}
        if not kept:
            return False
        cand[u] = kept
    return True


def _region_edges(g, motif, cand):
    edges = set()
    for (a, b) in motif.edges:
        targets_b = cand[b]
        for va in cand[a]:
            if not g.has_vertex(va):
                continue
            for vb in g.out_adj[va]:
                if vb in targets_b:
                    edges.add((va, vb))
    return edges


def _materialize(g, motif, order, params, regions):
    """Build the CM-graph and the region-induced reduced Hin from ``regions``.

    CM edges run from each seed to the target-type vertices of its region.
    Candidates that are not seeds themselves are dropped from the CM-graph;
    components are kept whole so no potential member is lost here (size
    filtering happens at community extraction).
    """
    t_code = _target_code(g, motif)
    cm = DiGraph()
    keep_edges = set()
    for c in sorted(regions):
        edges = _region_edges(g, motif, regions[c])
        keep_edges |= edges
        cm.add_vertex(c)
        touched = {v for e in edges for v in e}
        for v in sorted(touched):
            if v != c and g.vtype.get(v) == t_code:
                cm.add_edge(c, v)

    survivors = set(regions)
    cm.delete_vertices([v for v in cm.vertices() if v not in survivors])
    reduced = g.induced_subgraph(keep_edges)
    drop = [v for v in reduced.vertices_of_type(t_code) if not cm.has_vertex(v)]
    if drop:
        reduced.delete_vertices(drop)
    return cm, reduced


# -- message passing -----------------------------------------------------------


def message_passing(g, motif, cm, params, stats=None):
    """Verify CM vertices, re-checking only vertices whose candidate
    M-neighbors were deleted.  Mutates ``g`` and ``cm``; returns them."""
    stats = stats or SearchStats()
    worklist = set(cm.vertices())
    while worklist:
        matcher = Matcher(g, motif, budget=params.budget)
        notify = set()
        victims = []
        for v in sorted(worklist):
            stats.existence_checks += 1
            if not matcher.exists_around(v):
                victims.append(v)
                notify.update(cm.in_neighbors(v))
        if not victims:
            break
        for v in victims:
            cm.delete_vertex(v)
        g.delete_vertices([v for v in victims if g.has_vertex(v)])
        worklist = {v for v in notify if cm.has_vertex(v)}
    return g, cm


# -- optimized modes ------------------------------------------------------------


def optimized_search(g, motif, params, mode, stats=None):
    if mode not in ("fva", "fva-m", "fva-l"):
        raise IfcsError("unknown optimized mode %r" % mode)
    stats = stats or SearchStats()
    cm, work, _regions = exploration_filter(g, motif, params, stats)
    if cm.n_vertices == 0:
        return _result([], math.inf, {}, stats)

    if mode == "fva":
        _fixpoint_deletion(work, motif, params, stats)
        levels, mg = _enumerate_survivors(work, motif, params, stats)
        return _extract_communities(mg, levels, params, stats)

    message_passing(work, motif, cm, params, stats)
    stats.survivors_after_message_passing = cm.n_vertices

    if mode == "fva-m":
        levels, mg = _enumerate_survivors(
            work, motif, params, stats, targets=cm.vertices())
        return _extract_communities(mg, levels, params, stats)

    return _bounded_component_search(work, motif, cm, params, stats)


def _bounded_component_search(g, motif, cm, params, stats):
    """fva-l: walk each CM component smallest-first, expanding true
    communities member by member and pruning on the fairness lower bound."""
    matcher = Matcher(g, motif, budget=params.budget)
    cache = {}

    def enumerate_around(v):
        if v not in cache:
            stats.visited_targets += 1
            count, mneighbors = matcher.count_around(v)
            stats.instances_enumerated += count
            cache[v] = (count, mneighbors)
        return cache[v]

    best = math.inf
    chosen = []
    all_levels = {}

    comps = weakly_connected_components(cm)
    comps.sort(key=lambda c: (len(c), c[0]))
    for comp in comps:
        if len(comp) < params.k:
            continue
        remaining = set(comp)
        while remaining:
            cap = len(remaining)
            seed = min(remaining)
            community, levels, pruned = _expand_community(
                cm, remaining, seed, cap, best, enumerate_around, stats)
            remaining -= community
            all_levels.update(levels)
            if pruned:
                stats.components_pruned += 1
                continue
            if len(community) >= params.k:
                fs = fairness_score_sorted(sorted(levels[v] for v in community))
                if fs < best:
                    best = fs
                    chosen = [sorted(community)]
                elif fs == best:
                    chosen.append(sorted(community))
    return _result(chosen, best, all_levels, stats)


def _expand_community(cm, remaining, seed, cap, best, enumerate_around, stats):
    """Grow the M-connected community containing ``seed``.

    Out-closure follows enumerated M-neighbors; in-closure re-examines CM
    in-neighbors whose instances may reach back into the community.  Once
    the lower bound exceeds the running best the expansion stops scoring
    (pruned) but keeps delimiting membership.
    """
    community = {seed}
    levels = {}
    queue = [seed]
    pruned = False
    while True:
        while queue:
            queue.sort()
            v = queue.pop(0)
            count, mneighbors = enumerate_around(v)
            levels[v] = count
            if not pruned:
                stats.bound_computations += 1
                if lower_bound(sorted(levels.values()), cap) > best:
                    pruned = True
            for w in mneighbors:
                if w in remaining and w not in community:
                    community.add(w)
                    queue.append(w)
        grew = False
        fringe = {u for v in community for u in cm.in_neighbors(v)} - community
        for u in sorted(fringe & remaining):
            _count, mneighbors = enumerate_around(u)
            if any(w in community for w in mneighbors):
                community.add(u)
                queue.append(u)
                grew = True
        if not queue and not grew:
            return community, levels, pruned


# -- dispatcher -----------------------------------------------------------------


def run_query(g, motif, params, mode):
    """Route to the requested mode; attaches stats and wall time."""
    if mode not in MODES:
        raise IfcsError("unknown mode %r (expected one of %s)" % (mode, ", ".join(MODES)))
    stats = SearchStats()
    start = time.perf_counter()
    if mode == "baseline":
        result = baseline_search(g, motif, params, stats)
    else:
        result = optimized_search(g, motif, params, mode, stats)
    stats.wall_time_ms = (time.perf_counter() - start) * 1000.0
    return result


def copy_hin(g):
    """Deep-enough copy: shared label/ext tables, private structure."""
    from .hin import Hin
    c = Hin()
    c.labels = g.labels
    c.label_code = g.label_code
    c.ext_ids = g.ext_ids
    c.ext_to_id = g.ext_to_id
    c.vtype = dict(g.vtype)
    c.out_adj = {v: list(a) for v, a in g.out_adj.items()}
    c.in_adj = {v: list(a) for v, a in g.in_adj.items()}
    c.type_index = {t: set(s) for t, s in g.type_index.items()}
    c.nlf = {v: {l: list(io) for l, io in d.items()} for v, d in g.nlf.items()}
    c.n_edges = g.n_edges
    return c
