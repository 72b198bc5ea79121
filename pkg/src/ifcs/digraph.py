"""Directed homogeneous graph over target-type vertex ids.

Used for both the candidate (CM) graph produced by the exploration filter
and the verified M-graph whose weak components are the maximal communities.
"""


class DiGraph:
    def __init__(self):
        self.out = {}   # vertex -> set of out-neighbors
        self.inc = {}   # vertex -> set of in-neighbors

    def add_vertex(self, v):
        if v not in self.out:
            self.out[v] = set()
            self.inc[v] = set()

    def add_edge(self, u, v):
        self.add_vertex(u)
        self.add_vertex(v)
        self.out[u].add(v)
        self.inc[v].add(u)

    def has_vertex(self, v):
        return v in self.out

    @property
    def n_vertices(self):
        return len(self.out)

    def vertices(self):
        return sorted(self.out)

    def out_neighbors(self, v):
        return sorted(self.out[v])

    def in_neighbors(self, v):
        return sorted(self.inc[v])

    def undirected_neighbors(self, v):
        return sorted(self.out[v] | self.inc[v])

    def delete_vertex(self, v):
        for w in self.out.pop(v):
            self.inc[w].discard(v)
        for w in self.inc.pop(v):
            self.out[w].discard(v)

    def delete_vertices(self, victims):
        for v in list(victims):
            if v in self.out:
                self.delete_vertex(v)

    def copy(self):
        g = DiGraph()
        for v in self.out:
            g.out[v] = set(self.out[v])
            g.inc[v] = set(self.inc[v])
        return g
