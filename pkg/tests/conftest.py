import networkx as nx
import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("repo", deadline=None, derandomize=True,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("repo")


def to_nx(G):
    H = nx.Graph()
    H.add_nodes_from(range(G.N))
    H.add_edges_from(G.edges())
    return H


@pytest.fixture
def nxify():
    return to_nx


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    if not mod or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, (ok, detail) in sorted(mod.RESULTS.items()):
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
