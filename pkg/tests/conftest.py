import contextlib

import pytest

from ifcs.hin import Hin
from ifcs.motif import Motif

_capture = {}


def pytest_configure(config):
    _capture["manager"] = config.pluginmanager.getplugin("capturemanager")


def capture_disabled():
    """Context manager suspending output capture (for pass/fail lines)."""
    manager = _capture.get("manager")
    if manager is None:
        return contextlib.nullcontext()
    return manager.global_and_fixture_disabled()


def coauthor_motif():
    """Target author with two distinct coauthors through two distinct papers."""
    labels = {0: "author", 1: "paper", 2: "author", 3: "paper", 4: "author"}
    edges = [(0, 1), (2, 1), (0, 3), (4, 3)]
    return Motif(labels, edges, target=0)


def bibliography_graph():
    """Two author groups with hand-checkable active levels.

    Group one: five authors whose paper co-memberships give levels
    [2, 2, 2, 2, 12] under the coauthor motif.  Group two: three authors
    sharing two papers, all at level 2.  The groups are disconnected.
    """
    g = Hin()
    authors = ["a%d" % i for i in range(5)]
    papers = [["a0", "a2"], ["a0", "a4"], ["a0", "a4"], ["a1", "a3"],
              ["a1", "a4"], ["a1", "a4"], ["a2", "a3", "a4"]]
    for a in authors:
        g.add_vertex(a, "author")
    for i, members in enumerate(papers):
        pid = g.add_vertex("p%d" % i, "paper")
        for a in members:
            g.add_edge(g.ext_to_id[a], pid)
    for b in ("b0", "b1", "b2"):
        g.add_vertex(b, "author")
    for j in range(2):
        pid = g.add_vertex("q%d" % j, "paper")
        for b in ("b0", "b1", "b2"):
            g.add_edge(g.ext_to_id[b], pid)
    return g


@pytest.fixture
def coauthor():
    return coauthor_motif()


@pytest.fixture
def bibliography():
    return bibliography_graph()
