"""Typed directed graph storage for heterogeneous information networks.

Vertices carry a single type label and a dense non-negative integer id.
External (file-level) ids are kept in a side table so query results can be
reported in the user's original ids.  Adjacency lists are kept sorted by
vertex id, which makes every iteration order deterministic.
"""

from bisect import bisect_left, insort

from .errors import GraphError, ParseError

COMMENT = "#"


class Hin:
    """Simple directed graph with vertex type labels and NLF bookkeeping.

    Invariants maintained by every mutation:
      * no self-loops, no parallel edges;
      * ``type_index[code]`` holds exactly the live vertices with that label;
      * ``nlf[v][code] == [in_count, out_count]`` of v's live neighbors with
        that label, in each direction.
    """

    def __init__(self):
        self.labels = []            # code -> label string
        self.label_code = {}        # label string -> code
        self.ext_ids = []           # dense id -> external id string
        self.ext_to_id = {}
        self.vtype = {}             # live vertex id -> label code
        self.out_adj = {}           # vertex id -> sorted list of ids
        self.in_adj = {}
        self.type_index = {}        # label code -> set of vertex ids
        self.nlf = {}               # vertex id -> {label code: [in, out]}
        self.n_edges = 0
        self.duplicate_edges = 0    # collapsed duplicate input rows

    # -- construction -----------------------------------------------------

    def intern_label(self, label):
        code = self.label_code.get(label)
        if code is None:
            if not label:
                raise GraphError("empty type label")
            code = len(self.labels)
            self.label_code[label] = code
            self.labels.append(label)
        return code

    def add_vertex(self, ext_id, label):
        if ext_id in self.ext_to_id:
            raise GraphError("duplicate vertex id %r" % ext_id)
        vid = len(self.ext_ids)
        self.ext_ids.append(ext_id)
        self.ext_to_id[ext_id] = vid
        code = self.intern_label(label)
        self.vtype[vid] = code
        self.out_adj[vid] = []
        self.in_adj[vid] = []
        self.type_index.setdefault(code, set()).add(vid)
        self.nlf[vid] = {}
        return vid

    def add_edge(self, u, v):
        """Insert edge u->v.  Duplicates are collapsed, self-loops rejected."""
        if u not in self.vtype or v not in self.vtype:
            raise GraphError("edge (%s, %s) references unknown vertex" % (u, v))
        if u == v:
            raise GraphError("self-loop on vertex %s" % u)
        adj = self.out_adj[u]
        pos = bisect_left(adj, v)
        if pos < len(adj) and adj[pos] == v:
            self.duplicate_edges += 1
            return False
        adj.insert(pos, v)
        insort(self.in_adj[v], u)
        self.n_edges += 1
        self._nlf_bump(v, self.vtype[u], 0, +1)
        self._nlf_bump(u, self.vtype[v], 1, +1)
        return True

    def _nlf_bump(self, v, code, direction, delta):
        counts = self.nlf[v].setdefault(code, [0, 0])
        counts[direction] += delta
        if counts == [0, 0]:
            del self.nlf[v][code]

    # -- queries -----------------------------------------------------------

    @property
    def n_vertices(self):
        return len(self.vtype)

    def has_vertex(self, v):
        return v in self.vtype

    def has_edge(self, u, v):
        adj = self.out_adj.get(u)
        if adj is None:
            return False
        pos = bisect_left(adj, v)
        return pos < len(adj) and adj[pos] == v

    def vertices(self):
        return sorted(self.vtype)

    def vertices_of_type(self, code):
        return sorted(self.type_index.get(code, ()))

    def edges(self):
        for u in sorted(self.out_adj):
            for v in self.out_adj[u]:
                yield (u, v)

    def nlf_counts(self, v, code):
        counts = self.nlf[v].get(code)
        return (counts[0], counts[1]) if counts else (0, 0)

    def undirected_neighbors(self, v):
        """Merged in/out neighbor list, sorted, without duplicates."""
        return sorted(set(self.out_adj[v]) | set(self.in_adj[v]))

    # -- mutation ----------------------------------------------------------

    def delete_vertices(self, victims):
        """Remove ``victims`` and all incident edges, in place."""
        victims = set(victims)
        for v in victims:
            if v not in self.vtype:
                raise GraphError("cannot delete unknown vertex %s" % v)
        for v in victims:
            code = self.vtype[v]
            for w in self.out_adj[v]:
                if w in victims:
                    continue
                self.in_adj[w].remove(v)
                self._nlf_bump(w, code, 0, -1)
                self.n_edges -= 1
            for w in self.in_adj[v]:
                if w in victims:
                    continue
                self.out_adj[w].remove(v)
                self._nlf_bump(w, code, 1, -1)
                self.n_edges -= 1
            # edges internal to the victim set are counted once here
            self.n_edges -= sum(1 for w in self.out_adj[v] if w in victims)
            self.type_index[code].discard(v)
            del self.vtype[v], self.out_adj[v], self.in_adj[v], self.nlf[v]

    def induced_subgraph(self, edge_set):
        """New Hin holding exactly ``edge_set`` and its endpoints.

        Dense ids, external ids and label codes are shared with the parent.
        """
        sub = Hin()
        sub.labels = self.labels
        sub.label_code = self.label_code
        sub.ext_ids = self.ext_ids
        sub.ext_to_id = self.ext_to_id
        touched = set()
        for (u, v) in edge_set:
            if not self.has_edge(u, v):
                raise GraphError("edge (%s, %s) not present in graph" % (u, v))
            touched.add(u)
            touched.add(v)
        for v in sorted(touched):
            code = self.vtype[v]
            sub.vtype[v] = code
            sub.out_adj[v] = []
            sub.in_adj[v] = []
            sub.type_index.setdefault(code, set()).add(v)
            sub.nlf[v] = {}
        for (u, v) in sorted(edge_set):
            sub.add_edge(u, v)
        return sub

    # -- consistency (used by tests and debug assertions) -------------------

    def recompute_nlf(self):
        fresh = {v: {} for v in self.vtype}
        for v in self.vtype:
            for u in self.in_adj[v]:
                fresh[v].setdefault(self.vtype[u], [0, 0])[0] += 1
            for u in self.out_adj[v]:
                fresh[v].setdefault(self.vtype[u], [0, 0])[1] += 1
        return fresh


# -- file I/O ---------------------------------------------------------------


def _rows(stream):
    for line_no, raw in enumerate(stream, start=1):
        line = raw.rstrip("\n")
        if not line or line.startswith(COMMENT):
            continue
        yield line_no, line.split("\t")


def load_graph(vertices_source, edges_source):
    """Build an Hin from vertex and edge TSV streams.

    Vertex rows are ``ext_id<TAB>label``, edge rows ``src<TAB>dst``.  Dense
    ids are assigned in vertex-file order.  Duplicate edges are collapsed
    (counted in ``duplicate_edges``); self-loops and unknown endpoints are
    errors.
    """
    g = Hin()
    for line_no, fields in _rows(vertices_source):
        if len(fields) != 2:
            raise ParseError("expected 'id<TAB>label', got %r" % "\t".join(fields), line_no)
        ext_id, label = fields
        if not label:
            raise ParseError("empty type label", line_no)
        try:
            g.add_vertex(ext_id, label)
        except GraphError as exc:
            raise ParseError(str(exc), line_no)
    for line_no, fields in _rows(edges_source):
        if len(fields) != 2:
            raise ParseError("expected 'src<TAB>dst', got %r" % "\t".join(fields), line_no)
        src, dst = fields
        if src not in g.ext_to_id or dst not in g.ext_to_id:
            missing = src if src not in g.ext_to_id else dst
            raise ParseError("edge references unknown vertex %r" % missing, line_no)
        try:
            g.add_edge(g.ext_to_id[src], g.ext_to_id[dst])
        except GraphError as exc:
            raise ParseError(str(exc), line_no)
    return g


def write_graph(g, vertices_stream, edges_stream):
    """Serialize in the same TSV formats accepted by load_graph."""
    for v in g.vertices():
        vertices_stream.write("%s\t%s\n" % (g.ext_ids[v], g.labels[g.vtype[v]]))
    for (u, v) in g.edges():
        edges_stream.write("%s\t%s\n" % (g.ext_ids[u], g.ext_ids[v]))


# -- weak connectivity -------------------------------------------------------


def weakly_connected_components(g):
    """Partition ``g``'s vertices by weak (direction-blind) connectivity.

    Works on anything exposing ``vertices()`` and ``undirected_neighbors(v)``.
    Components are sorted by their minimum vertex id, members ascending.
    """
    seen = set()
    components = []
    for start in g.vertices():
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        stack = [start]
        while stack:
            v = stack.pop()
            for w in g.undirected_neighbors(v):
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        components.append(sorted(comp))
    components.sort(key=lambda c: c[0])
    return components
