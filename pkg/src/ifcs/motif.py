"""Target-aware motif model: parsing, validation, BFS search order."""

import logging

from .errors import MotifError, ParseError
from .hin import COMMENT

log = logging.getLogger("ifcs.motif")

DEFAULT_SIZE_CAP = 12
MIN_SIZE = 3


class Motif:
    """Small connected typed digraph with one designated target vertex.

    Query vertex ids are local small integers, unrelated to data-graph ids.
    """

    def __init__(self, labels, edges, target, size_cap=DEFAULT_SIZE_CAP):
        self.labels = dict(labels)            # qid -> type label string
        self.edges = sorted(set(edges))       # directed (src qid, dst qid)
        self.target = target
        self.out_adj = {q: [] for q in self.labels}
        self.in_adj = {q: [] for q in self.labels}
        for (u, v) in self.edges:
            if u not in self.labels or v not in self.labels:
                raise MotifError("edge (%s, %s) references unknown query vertex" % (u, v))
            if u == v:
                raise MotifError("self-loop on query vertex %s" % u)
            self.out_adj[u].append(v)
            self.in_adj[v].append(u)
        self._validate(size_cap)

    def _validate(self, size_cap):
        n = len(self.labels)
        if n < MIN_SIZE:
            raise MotifError("motif must have at least %d vertices, got %d" % (MIN_SIZE, n))
        if n > size_cap:
            raise MotifError("motif has %d vertices, cap is %d" % (n, size_cap))
        if self.target not in self.labels:
            raise MotifError("target vertex %s is not a query vertex" % self.target)
        if not self._connected():
            raise MotifError("motif is not connected")
        t_label = self.labels[self.target]
        n_target_type = sum(1 for l in self.labels.values() if l == t_label)
        if n_target_type < 2:
            log.warning(
                "motif has only %d vertex of the target type %r; "
                "no vertex can acquire M-neighbors and all communities are trivial",
                n_target_type, t_label)

    def _connected(self):
        seen = {self.target}
        stack = [self.target]
        while stack:
            u = stack.pop()
            for v in self.neighbors(u):
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        return len(seen) == len(self.labels)

    def query_vertices(self):
        return sorted(self.labels)

    def neighbors(self, q):
        """Undirected neighborhood, sorted, without duplicates."""
        return sorted(set(self.out_adj[q]) | set(self.in_adj[q]))

    def target_type(self):
        return self.labels[self.target]

    def target_type_vertices(self):
        t = self.target_type()
        return [q for q in sorted(self.labels) if self.labels[q] == t]

    def has_edge(self, u, v):
        return v in self.out_adj[u]

    def __len__(self):
        return len(self.labels)


class BfsOrder:
    """BFS visit order anchored at the motif's target vertex.

    Neighbors are expanded in ascending query-vertex id, so the order is
    deterministic.  Every vertex after the first has at least one earlier
    neighbor (in either direction).
    """

    def __init__(self, motif):
        order = [motif.target]
        index = {motif.target: 0}
        head = 0
        while head < len(order):
            u = order[head]
            head += 1
            for v in motif.neighbors(u):
                if v not in index:
                    index[v] = len(order)
                    order.append(v)
        self.order = order
        self.index = index

    def __len__(self):
        return len(self.order)

    def __getitem__(self, i):
        return self.order[i]


def parse_motif(source, size_cap=DEFAULT_SIZE_CAP):
    """Parse the three-section motif TSV: v/e lines plus one target line."""
    labels = {}
    edges = []
    target = None
    for line_no, raw in enumerate(source, start=1):
        line = raw.rstrip("\n")
        if not line or line.startswith(COMMENT):
            continue
        fields = line.split("\t")
        kind = fields[0]
        if kind == "v":
            if len(fields) != 3:
                raise ParseError("expected 'v<TAB>id<TAB>label'", line_no)
            qid = _int_field(fields[1], line_no)
            if qid in labels:
                raise ParseError("duplicate query vertex %d" % qid, line_no)
            labels[qid] = fields[2]
        elif kind == "e":
            if len(fields) != 3:
                raise ParseError("expected 'e<TAB>src<TAB>dst'", line_no)
            edges.append((_int_field(fields[1], line_no), _int_field(fields[2], line_no)))
        elif kind == "target":
            if len(fields) != 2:
                raise ParseError("expected 'target<TAB>id'", line_no)
            if target is not None:
                raise ParseError("duplicate target line", line_no)
            target = _int_field(fields[1], line_no)
        else:
            raise ParseError("unknown record kind %r" % kind, line_no)
    if target is None:
        raise MotifError("motif file has no target line")
    return Motif(labels, edges, target, size_cap=size_cap)


def write_motif(motif, stream):
    for q in motif.query_vertices():
        stream.write("v\t%d\t%s\n" % (q, motif.labels[q]))
    for (u, v) in motif.edges:
        stream.write("e\t%d\t%d\n" % (u, v))
    stream.write("target\t%d\n" % motif.target)


def _int_field(text, line_no):
    try:
        return int(text)
    except ValueError:
        raise ParseError("expected integer, got %r" % text, line_no)
