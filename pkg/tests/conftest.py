import json

import pytest

from walk_partitions.walk_partitions.digraph import Digraph
from walk_partitions.walk_partitions.signature import signature_of
from walk_partitions.walk_partitions.walksum.weighted_digraph import WeightedDigraph


@pytest.fixture
def k3_loops() -> Digraph:
    return Digraph.complete(3)


@pytest.fixture
def k3() -> Digraph:
    return Digraph.complete(3, loops=False)


@pytest.fixture
def loop_graph() -> Digraph:
    return Digraph(["1"], [("1", "1")])


@pytest.fixture
def backtracks() -> Digraph:
    """
    Star around vertex 2 with the back edges of 1232421.
    """
    return Digraph(["1", "2", "3", "4"],
                   [("1", "2"), ("2", "1"), ("2", "3"), ("3", "2"), ("2", "4"), ("4", "2")])


@pytest.fixture
def k20():
    return signature_of(2, 0)


@pytest.fixture
def scalar_loop():
    def build(a: complex) -> WeightedDigraph:
        return WeightedDigraph.scalar(Digraph(["1"], [("1", "1")]), {("1", "1"): a})

    return build


@pytest.fixture
def graph_file(tmp_path):
    def write(vertices, edges, name: str = "graph.json") -> str:
        path = tmp_path / name
        path.write_text(json.dumps({
            "vertices": [v if isinstance(v, dict) else {"id": v} for v in vertices],
            "edges": [e if isinstance(e, dict) else {"from": e[0], "to": e[1]} for e in edges],
        }))
        return str(path)

    return write
