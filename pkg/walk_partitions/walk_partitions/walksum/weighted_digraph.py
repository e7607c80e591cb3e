from __future__ import annotations

from typing import Dict, Mapping, Optional, Tuple

import numpy as np
from numpy.typing import ArrayLike

from walk_partitions.walk_partitions.digraph import Digraph, Edge, MissingEdgeException


class WeightedDigraph:
    """
    Digraph whose vertices carry dimensions d_α and whose edge (α, β) carries a complex
    d_β x d_α weight matrix. Scalar weights are stored as 1 x 1 matrices.
    """

    def __init__(self, base: Digraph, weights: Mapping[Edge, ArrayLike],
                 dims: Optional[Mapping[str, int]] = None):
        self.base = base
        self.dims: Dict[str, int] = {v: 1 for v in base.vertices}
        for vertex, dim in (dims or {}).items():
            base.index(vertex)
            if int(dim) < 1:
                raise ValueError(f"Vertex '{vertex}' must have a positive dimension, got {dim}")
            self.dims[vertex] = int(dim)
        self._weights: Dict[Edge, np.ndarray] = {}
        for (a, b), weight in weights.items():
            if not base.has_edge(a, b):
                raise MissingEdgeException(f"Weight given for the missing edge ({a}, {b})")
            matrix = np.atleast_2d(np.asarray(weight, dtype=complex))
            expected = (self.dims[b], self.dims[a])
            if matrix.shape != expected:
                raise ValueError(f"Weight of edge ({a}, {b}) must have shape {expected}, "
                                 f"got {matrix.shape}")
            self._weights[(a, b)] = matrix
        missing = sorted(set(base.edges) - set(self._weights))
        if missing:
            raise ValueError(f"Edges without weight: {missing}")
        # memo of dressed vertex weights keyed by (subgraph, vertex, signature)
        self.dressed_vertex_cache: Dict[Tuple, np.ndarray] = {}

    @classmethod
    def scalar(cls, base: Digraph, weights: Mapping[Edge, complex]) -> WeightedDigraph:
        return cls(base, {edge: [[value]] for edge, value in weights.items()})

    def weight(self, a: str, b: str) -> np.ndarray:
        """
        Method returns w_{ba}, the weight of the edge (a, b).
        """
        try:
            return self._weights[(a, b)]
        except KeyError:
            raise MissingEdgeException(f"The graph has no edge ({a}, {b})") from None

    def identity(self, vertex: str) -> np.ndarray:
        return np.eye(self.dims[vertex], dtype=complex)

    def offsets(self) -> Dict[str, int]:
        offsets, position = {}, 0
        for vertex in self.base.vertices:
            offsets[vertex] = position
            position += self.dims[vertex]
        return offsets

    def block_matrix(self) -> np.ndarray:
        """
        Method assembles the block matrix A whose (β, α) block is w_{βα}.
        :return: Square complex matrix of size sum of all dimensions.
        """
        offsets = self.offsets()
        size = sum(self.dims.values())
        matrix = np.zeros((size, size), dtype=complex)
        for (a, b), weight in self._weights.items():
            rows = slice(offsets[b], offsets[b] + self.dims[b])
            cols = slice(offsets[a], offsets[a] + self.dims[a])
            matrix[rows, cols] = weight
        return matrix

    def block(self, matrix: np.ndarray, row_vertex: str) -> np.ndarray:
        start = self.offsets()[row_vertex]
        return matrix[start:start + self.dims[row_vertex]]

    def unit_columns(self, vertex: str) -> np.ndarray:
        size = sum(self.dims.values())
        columns = np.zeros((size, self.dims[vertex]), dtype=complex)
        start = self.offsets()[vertex]
        columns[start:start + self.dims[vertex]] = self.identity(vertex)
        return columns
