"""Pure-Python backtracking kernel for anchored motif matching.

Drop-in fallback for the compiled kernel in ``_kernel_cy``; both expose
``exists_around`` and ``count_around`` with identical semantics.  The
matching order is the motif's BFS order, each step extending the partial
embedding from an already-mapped pivot neighbor and checking every other
already-mapped constraint edge.
"""

from bisect import bisect_left

from .errors import BudgetExceededError


def _has_edge(adj, u, v):
    lst = adj[u]
    pos = bisect_left(lst, v)
    return pos < len(lst) and lst[pos] == v


def _candidates_ok(g, plan, mapping, depth, v):
    if g.vtype.get(v) != plan.ptype[depth]:
        return False
    if v not in plan.cand[depth]:
        return False
    if v in mapping:
        return False
    for (c_pos, c_dir) in plan.constraints[depth][1:]:
        w = mapping[c_pos]
        if c_dir == 0:
            if not _has_edge(g.out_adj, w, v):
                return False
        else:
            if not _has_edge(g.out_adj, v, w):
                return False
    return True


def _extend(g, plan, mapping, depth, state):
    """DFS over embeddings.  state = [raw_count, budget, stop_at_first]."""
    if depth == plan.nq:
        state[0] += 1
        if state[1] is not None and state[0] > state[1]:
            raise BudgetExceededError(
                "anchored enumeration exceeded budget of %d embeddings" % state[1])
        if state[3] is not None:
            for t_pos in plan.target_positions:
                state[3].add(mapping[t_pos])
        return bool(state[2])
    p_pos, p_dir = plan.constraints[depth][0]
    pivot_v = mapping[p_pos]
    pool = g.out_adj[pivot_v] if p_dir == 0 else g.in_adj[pivot_v]
    for v in pool:
        if _candidates_ok(g, plan, mapping, depth, v):
            mapping.append(v)
            done = _extend(g, plan, mapping, depth + 1, state)
            mapping.pop()
            if done:
                return True
    return False


def exists_around(g, plan, anchor):
    """True iff at least one embedding maps the target onto ``anchor``."""
    if g.vtype.get(anchor) != plan.ptype[0] or anchor not in plan.cand[0]:
        return False
    state = [0, None, True, None]
    return _extend(g, plan, [anchor], 1, state)

def count_around(g, plan, anchor, budget=None):
    """(raw embedding count, sorted target-type co-members) around ``anchor``."""
    if g.vtype.get(anchor) != plan.ptype[0] or anchor not in plan.cand[0]:
        return 0, []
    mneighbors = set()
    state = [0, budget, False, mneighbors]
    _extend(g, plan, [anchor], 1, state)
    return state[0], sorted(mneighbors)
