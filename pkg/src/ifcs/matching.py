"""Anchored motif-instance matching over an Hin.

Instance semantics: an instance is a distinct embedded subgraph.  Two
embeddings related by a motif automorphism that fixes the target vertex
describe the same subgraph, so they count as one instance.  The
automorphism group acts freely on embeddings, which lets the matcher count
raw embeddings and divide by the group size.

The hot inner loop lives in a kernel module: ``_kernel_cy`` (compiled
extension) when available, ``_kernel_py`` otherwise.  Set
``IFCS_PURE_PYTHON=1`` to force the fallback.
"""

import os
from itertools import permutations

from .motif import BfsOrder

if os.environ.get("IFCS_PURE_PYTHON"):
    _kernel = None
else:
    try:
        from . import _kernel_cy as _kernel
    except ImportError:
        _kernel = None

from . import _kernel_py

KERNEL_NAME = "cython" if _kernel is not None else "python"
if _kernel is None:
    _kernel = _kernel_py


def nlf_pass(g, motif, u, v):
    """Neighborhood-label-frequency admission test for data vertex v at query vertex u.

    v must carry u's type and dominate u's per-label in/out degrees; failing
    vertices cannot occur at position u in any embedding.
    """
    u_label = motif.labels[u]
    code = g.label_code.get(u_label)
    if code is None or g.vtype.get(v) != code:
        return False
    req = _nlf_requirements(motif, u)
    for label, (need_in, need_out) in req.items():
        lcode = g.label_code.get(label)
        if lcode is None:
            return False
        have_in, have_out = g.nlf_counts(v, lcode)
        if have_in < need_in or have_out < need_out:
            return False
    return True


def _nlf_requirements(motif, u):
    req = {}
    for w in motif.in_adj[u]:
        req.setdefault(motif.labels[w], [0, 0])[0] += 1
    for w in motif.out_adj[u]:
        req.setdefault(motif.labels[w], [0, 0])[1] += 1
    return req


def _star_check(g, motif, order, u, v, cand, later):
    """Shared body of the forward/backward star constraints.

    For every motif neighbor u' of u on the given side of the BFS order,
    v must have a data neighbor of the right direction inside cand[u'].
    """
    iu = order.index[u]
    for up in motif.neighbors(u):
        if (order.index[up] > iu) != later:
            continue
        pool = cand.get(up, ())
        if motif.has_edge(up, u):
            if not any(w in pool for w in g.in_adj[v]):
                return False
        if motif.has_edge(u, up):
            if not any(w in pool for w in g.out_adj[v]):
                return False
    return True


def star_check_forward(g, motif, order, u, v, cand):
    return _star_check(g, motif, order, u, v, cand, later=False)


def star_check_backward(g, motif, order, u, v, cand):
    return _star_check(g, motif, order, u, v, cand, later=True)


def motif_automorphisms(motif, fix_target=True):
    """All type- and edge-preserving self-bijections, brute force.

    Restricted to those fixing the target vertex when ``fix_target``.
    Motifs are small (<= 12 vertices) so permutation search is fine.
    """
    qids = motif.query_vertices()
    by_type = {}
    for q in qids:
        by_type.setdefault(motif.labels[q], []).append(q)
    edge_set = set(motif.edges)
    auts = []

    groups = sorted(by_type.values(), key=lambda g: g[0])
    perms_per_group = [list(permutations(g)) for g in groups]

    def product(idx, partial):
        if idx == len(groups):
            a = dict(partial)
            if fix_target and a[motif.target] != motif.target:
                return
            if all((a[s], a[t]) in edge_set for (s, t) in edge_set):
                auts.append(a)
            return
        for perm in perms_per_group[idx]:
            mapping = dict(zip(groups[idx], perm))
            product(idx + 1, {**partial, **mapping})

    product(0, {})
    return auts


class MotifPlan:
    """Matching plan: BFS-ordered constraints bound to one graph snapshot.

    Valid as long as the graph is not mutated (the search algorithms batch
    deletions between rounds and rebuild).
    """

    def __init__(self, g, motif, order=None):
        self.motif = motif
        self.order = order or BfsOrder(motif)
        self.nq = len(motif)
        self.pos_qid = list(self.order.order)
        self.qid_pos = {q: i for i, q in enumerate(self.pos_qid)}
        self.ptype = [g.label_code.get(motif.labels[q]) for q in self.pos_qid]

        # constraints[i]: (earlier position, direction) pairs for every motif
        # edge between order[i] and an earlier vertex; direction 0 means the
        # motif edge runs earlier->current.  The first entry is the pivot.
        self.constraints = [[]]
        for i in range(1, self.nq):
            u = self.pos_qid[i]
            cons = []
            for up in motif.neighbors(u):
                j = self.qid_pos[up]
                if j >= i:
                    continue
                if motif.has_edge(up, u):
                    cons.append((j, 0))
                if motif.has_edge(u, up):
                    cons.append((j, 1))
            self.constraints.append(cons)

        t_label = motif.target_type()
        self.target_positions = [
            i for i in range(1, self.nq) if motif.labels[self.pos_qid[i]] == t_label]

        auts = motif_automorphisms(motif, fix_target=True)
        # position space: translate[i] = position of a(order[i])
        self.aut_perms = sorted(
            tuple(self.qid_pos[a[q]] for q in self.pos_qid) for a in auts)
        self.n_auts = len(self.aut_perms)

        # NLF candidate snapshot per position (over-approximation: degrees
        # only shrink under deletion, so stale masks stay sound)
        self.cand = []
        for i in range(self.nq):
            q = self.pos_qid[i]
            code = self.ptype[i]
            if code is None:
                self.cand.append(frozenset())
                continue
            self.cand.append(frozenset(
                v for v in g.type_index.get(code, ()) if nlf_pass(g, motif, q, v)))


class Matcher:
    """Anchored existence, counting and enumeration for one graph snapshot."""

    def __init__(self, g, motif, order=None, budget=None):
        self.g = g
        self.motif = motif
        self.plan = MotifPlan(g, motif, order)
        self.budget = budget
        self._ctx = None
        self._kernel = _kernel
        if self._kernel is not _kernel_py:
            self._ctx = self._kernel.build_context(g, self.plan)

    def exists_around(self, anchor):
        if self._ctx is not None:
            return self._kernel.exists_around(self._ctx, anchor)
        return _kernel_py.exists_around(self.g, self.plan, anchor)

    def count_around(self, anchor):
        """Distinct instance count and sorted M-neighbor list around anchor."""
        if self._ctx is not None:
            raw, mneighbors = self._kernel.count_around(self._ctx, anchor, self.budget)
        else:
            raw, mneighbors = _kernel_py.count_around(self.g, self.plan, anchor, self.budget)
        assert raw % self.plan.n_auts == 0
        return raw // self.plan.n_auts, mneighbors

    def instances_around(self, anchor):
        """Yield each distinct instance once, as a {query id: data id} dict.

        An embedding is emitted iff it is the lexicographically smallest in
        its orbit under the target-fixing automorphisms (pure Python; meant
        for inspection and tests, the search uses count_around).
        """
        plan = self.plan
        for mapping in self._raw_embeddings(anchor):
            tup = tuple(mapping)
            if all(tup <= tuple(tup[j] for j in perm) for perm in plan.aut_perms):
                yield {plan.pos_qid[i]: tup[i] for i in range(plan.nq)}

    def _raw_embeddings(self, anchor):
        g, plan = self.g, self.plan
        if g.vtype.get(anchor) != plan.ptype[0] or anchor not in plan.cand[0]:
            return
        mapping = [anchor]
        found = [0]

        def rec(depth):
            if depth == plan.nq:
                found[0] += 1
                if self.budget is not None and found[0] > self.budget:
                    from .errors import BudgetExceededError
                    raise BudgetExceededError(
                        "anchored enumeration exceeded budget of %d embeddings" % self.budget)
                yield list(mapping)
                return
            p_pos, p_dir = plan.constraints[depth][0]
            pivot_v = mapping[p_pos]
            pool = g.out_adj[pivot_v] if p_dir == 0 else g.in_adj[pivot_v]
            for v in pool:
                if _kernel_py._candidates_ok(g, plan, mapping, depth, v):
                    mapping.append(v)
                    yield from rec(depth + 1)
                    mapping.pop()

        yield from rec(1)
