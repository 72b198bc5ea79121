# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled backtracking kernel for anchored motif matching.

Mirrors ``_kernel_py`` exactly: same matching order, same constraint
checks, same budget semantics.  ``build_context`` freezes one graph
snapshot into CSR arrays; the per-anchor entry points then run without
touching Python objects in the hot loop.
"""

import numpy as np

cimport numpy as cnp

from .errors import BudgetExceededError

cnp.import_array()


cdef class Context:
    cdef cnp.int32_t[::1] out_ptr, out_idx, in_ptr, in_idx, vtype
    cdef cnp.int32_t[::1] ptype, c_ptr, c_pos, c_dir, t_pos
    cdef cnp.uint8_t[:, ::1] cand
    cdef cnp.uint8_t[::1] mark
    cdef int n, nq
    # scratch for one running enumeration (matcher calls are sequential)
    cdef cnp.int32_t[::1] mapping
    cdef long raw, budget
    cdef list mneighbors
    cdef bint stop_first


def build_context(g, plan):
    """Freeze graph and plan into a Context of flat arrays."""
    cdef Context ctx = Context()
    n = len(g.ext_ids)
    ctx.n = n
    ctx.nq = plan.nq

    out_ptr = np.zeros(n + 1, dtype=np.int32)
    in_ptr = np.zeros(n + 1, dtype=np.int32)
    vtype = np.full(n, -1, dtype=np.int32)
    for v in g.vtype:
        vtype[v] = g.vtype[v]
        out_ptr[v + 1] = len(g.out_adj[v])
        in_ptr[v + 1] = len(g.in_adj[v])
    np.cumsum(out_ptr, out=out_ptr)
    np.cumsum(in_ptr, out=in_ptr)
    out_idx = np.zeros(max(out_ptr[n], 1), dtype=np.int32)
    in_idx = np.zeros(max(in_ptr[n], 1), dtype=np.int32)
    for v in g.vtype:
        out_idx[out_ptr[v]:out_ptr[v] + len(g.out_adj[v])] = g.out_adj[v]
        in_idx[in_ptr[v]:in_ptr[v] + len(g.in_adj[v])] = g.in_adj[v]

    ctx.out_ptr, ctx.out_idx = out_ptr, out_idx
    ctx.in_ptr, ctx.in_idx = in_ptr, in_idx
    ctx.vtype = vtype
    ctx.ptype = np.asarray(
        [(-1 if t is None else t) for t in plan.ptype], dtype=np.int32)

    c_ptr = [0]
    c_pos = []
    c_dir = []
    for cons in plan.constraints:
        for (pos, d) in cons:
            c_pos.append(pos)
            c_dir.append(d)
        c_ptr.append(len(c_pos))
    ctx.c_ptr = np.asarray(c_ptr, dtype=np.int32)
    ctx.c_pos = np.asarray(c_pos or [0], dtype=np.int32)
    ctx.c_dir = np.asarray(c_dir or [0], dtype=np.int32)
    ctx.t_pos = np.asarray(list(plan.target_positions) or [0], dtype=np.int32)
    if not plan.target_positions:
        ctx.t_pos = np.zeros(0, dtype=np.int32)

    cand = np.zeros((plan.nq, n), dtype=np.uint8)
    for i in range(plan.nq):
        for v in plan.cand[i]:
            cand[i, v] = 1
    ctx.cand = cand
    ctx.mark = np.zeros(n, dtype=np.uint8)
    ctx.mapping = np.zeros(max(plan.nq, 1), dtype=np.int32)
    return ctx


cdef inline bint _has_edge(cnp.int32_t[::1] ptr, cnp.int32_t[::1] idx,
                           int u, int v) nogil:
    cdef int lo = ptr[u], hi = ptr[u + 1], mid
    while lo < hi:
        mid = (lo + hi) >> 1
        if idx[mid] < v:
            lo = mid + 1
        else:
            hi = mid
    return lo < ptr[u + 1] and idx[lo] == v


cdef inline bint _ok(Context ctx, int depth, int v) nogil:
    cdef int j, w
    if ctx.vtype[v] != ctx.ptype[depth] or not ctx.cand[depth, v]:
        return False
    for j in range(depth):
        if ctx.mapping[j] == v:
            return False
    # constraint edges beyond the pivot
    for j in range(ctx.c_ptr[depth] + 1, ctx.c_ptr[depth + 1]):
        w = ctx.mapping[ctx.c_pos[j]]
        if ctx.c_dir[j] == 0:
            if not _has_edge(ctx.out_ptr, ctx.out_idx, w, v):
                return False
        else:
            if not _has_edge(ctx.out_ptr, ctx.out_idx, v, w):
                return False
    return True


cdef bint _extend(Context ctx, int depth):
    cdef int base, p_pos, p_dir, pivot_v, i, v, t
    cdef cnp.int32_t[::1] ptr, idx
    if depth == ctx.nq:
        ctx.raw += 1
        if ctx.budget >= 0 and ctx.raw > ctx.budget:
            raise BudgetExceededError(
                "anchored enumeration exceeded budget of %d embeddings" % ctx.budget)
        if not ctx.stop_first:
            for i in range(ctx.t_pos.shape[0]):
                t = ctx.mapping[ctx.t_pos[i]]
                if not ctx.mark[t]:
                    ctx.mark[t] = 1
                    ctx.mneighbors.append(t)
        return ctx.stop_first
    base = ctx.c_ptr[depth]
    p_pos = ctx.c_pos[base]
    p_dir = ctx.c_dir[base]
    pivot_v = ctx.mapping[p_pos]
    if p_dir == 0:
        ptr, idx = ctx.out_ptr, ctx.out_idx
    else:
        ptr, idx = ctx.in_ptr, ctx.in_idx
    for i in range(ptr[pivot_v], ptr[pivot_v + 1]):
        v = idx[i]
        if _ok(ctx, depth, v):
            ctx.mapping[depth] = v
            if _extend(ctx, depth + 1):
                return True
    return False


cdef inline bint _anchor_ok(Context ctx, int anchor):
    return (0 <= anchor < ctx.n
            and ctx.vtype[anchor] == ctx.ptype[0]
            and ctx.cand[0, anchor])


def exists_around(Context ctx, anchor):
    """True iff at least one embedding maps the target onto ``anchor``."""
    cdef int a = anchor
    if not _anchor_ok(ctx, a):
        return False
    ctx.raw = 0
    ctx.budget = -1
    ctx.stop_first = True
    ctx.mneighbors = None
    ctx.mapping[0] = a
    return _extend(ctx, 1)


def count_around(Context ctx, anchor, budget=None):
    """(raw embedding count, sorted target-type co-members) around ``anchor``."""
    cdef int a = anchor
    if not _anchor_ok(ctx, a):
        return 0, []
    ctx.raw = 0
    ctx.budget = -1 if budget is None else budget
    ctx.stop_first = False
    ctx.mneighbors = []
    ctx.mapping[0] = a
    try:
        _extend(ctx, 1)
    finally:
        for t in ctx.mneighbors:
            ctx.mark[t] = 0
    return ctx.raw, sorted(ctx.mneighbors)
