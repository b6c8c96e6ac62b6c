import sys
from pathlib import Path

import networkx as nx
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from intcol import Graph, verify_interval  # noqa: E402
from intcol.graphs import is_triangle_free  # noqa: E402
from reference import naive_is_interval  # noqa: E402


def assert_interval(g, c):
    """Verifier accepts, the naive reading agrees, and t obeys Delta <= t (<= |V|-1 if triangle-free)."""
    verdict = verify_interval(g, c)
    assert verdict, verdict.message
    assert naive_is_interval(g.vertex_count, g.edges, c.t, c.colors)
    assert c.t >= g.max_degree
    if is_triangle_free(g):
        assert c.t <= g.vertex_count - 1


def nx_to_graph(h) -> Graph:
    h = nx.convert_node_labels_to_integers(h)
    return Graph.from_edges(h.number_of_nodes(), h.edges())


def small_connected_corpus(max_edges=7):
    """All connected graphs with 1..max_edges edges, up to isomorphism."""
    out = []
    for h in nx.graph_atlas_g():
        if 1 <= h.number_of_edges() <= max_edges and h.number_of_nodes() >= 2 and nx.is_connected(h):
            out.append(nx_to_graph(h))
    # trees on 8 vertices are the only connected 7-edge graphs outside the atlas
    if max_edges >= 7:
        out.extend(nx_to_graph(tr) for tr in nx.nonisomorphic_trees(8))
    return out


@pytest.fixture(scope="session")
def corpus():
    return small_connected_corpus()


ACCEPTANCE_LINES = []


@pytest.fixture
def record():
    """Register one acceptance line; FAIL unless the test marks it passed."""
    entry = {"label": None, "detail": "", "ok": False}

    def _set(label, detail="", ok=True):
        entry.update(label=label, detail=detail, ok=ok)

    yield _set
    if entry["label"] is not None:
        ACCEPTANCE_LINES.append(entry)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for e in ACCEPTANCE_LINES:
        status = "PASS" if e["ok"] else "FAIL"
        terminalreporter.write_line(f"{status}  {e['label']}: {e['detail']}")
