import numpy as np
import pytest

from walk_partitions.walk_partitions.digraph import Digraph, MissingEdgeException, \
    UnknownVertexException
from walk_partitions.walk_partitions.walksum.weighted_digraph import WeightedDigraph


@pytest.fixture
def mixed() -> WeightedDigraph:
    graph = Digraph("12", [("1", "2"), ("2", "2")])
    return WeightedDigraph(graph, {("1", "2"): [[1], [2]], ("2", "2"): [[3, 4], [5, 6]]},
                           {"2": 2})


def test_scalar_weights_are_one_by_one():
    wg = WeightedDigraph.scalar(Digraph("1", [("1", "1")]), {("1", "1"): 0.5})
    assert wg.weight("1", "1").shape == (1, 1)
    assert wg.dims == {"1": 1}


def test_weight_shape_follows_vertex_dimensions(mixed):
    assert mixed.weight("1", "2").shape == (2, 1)
    assert mixed.weight("2", "2").dtype == complex
    with pytest.raises(MissingEdgeException):
        mixed.weight("2", "1")


def test_block_matrix_layout(mixed):
    assert mixed.offsets() == {"1": 0, "2": 1}
    np.testing.assert_array_equal(mixed.block_matrix(), [[0, 0, 0], [1, 3, 4], [2, 5, 6]])
    np.testing.assert_array_equal(mixed.unit_columns("2"), [[0, 0], [1, 0], [0, 1]])
    np.testing.assert_array_equal(mixed.block(mixed.block_matrix(), "2"),
                                  [[1, 3, 4], [2, 5, 6]])


def test_rejects_wrong_shapes_and_missing_weights():
    graph = Digraph("12", [("1", "2")])
    with pytest.raises(ValueError, match="shape"):
        WeightedDigraph(graph, {("1", "2"): [[1, 2]]}, {"2": 2})
    with pytest.raises(ValueError, match="without weight"):
        WeightedDigraph(graph, {})
    with pytest.raises(MissingEdgeException):
        WeightedDigraph(graph, {("1", "2"): 1, ("2", "1"): 1})
    with pytest.raises(ValueError, match="positive dimension"):
        WeightedDigraph(graph, {("1", "2"): 1}, {"1": 0})
    with pytest.raises(UnknownVertexException):
        WeightedDigraph(graph, {("1", "2"): 1}, {"3": 1})
