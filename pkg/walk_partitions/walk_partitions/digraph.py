from __future__ import annotations

from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

import networkx as nx

from walk_partitions.walk_partitions.walk import Walk

Edge = Tuple[str, str]


class UnknownVertexException(ValueError):
    """
    A vertex label does not belong to the graph.
    """
    pass


class MissingEdgeException(ValueError):
    """
    A walk traverses an edge the graph does not have.
    """
    pass


class Digraph:
    """
    Finite directed graph with loops and without multiple edges. Instances are
    immutable; deleting vertices returns a new graph that keeps the original labels,
    so walks on a subgraph are walks on the parent graph as well.
    """

    def __init__(self, vertices: Iterable, edges: Iterable[Tuple] = ()):
        labels = tuple(str(v) for v in vertices)
        if len(set(labels)) != len(labels):
            raise ValueError(f"Vertex labels must be unique, got {list(labels)}")
        edge_list = [(str(a), str(b)) for a, b in edges]
        if len(set(edge_list)) != len(edge_list):
            raise ValueError("Multiple edges between the same ordered pair are not allowed")
        self._vertices = labels
        self._index: Dict[str, int] = {label: idx for idx, label in enumerate(labels)}
        for a, b in edge_list:
            for label in (a, b):
                if label not in self._index:
                    raise UnknownVertexException(
                        f"Edge ({a}, {b}) uses the undeclared vertex '{label}'")
        self._edges: FrozenSet[Edge] = frozenset(edge_list)
        self._hash = hash((self._vertices, self._edges))

    @classmethod
    def complete(cls, n: int, loops: bool = True) -> Digraph:
        """
        Method builds the complete digraph on vertices '1'..'n'.
        :param n: Number of vertices.
        :param loops: Whether every vertex carries a loop.
        :return: Complete digraph.
        """
        labels = [str(i) for i in range(1, n + 1)]
        return cls(labels, [(a, b) for a in labels for b in labels if loops or a != b])

    @property
    def vertices(self) -> Tuple[str, ...]:
        return self._vertices

    @property
    def edges(self) -> FrozenSet[Edge]:
        return self._edges

    @cached_property
    def nx_graph(self) -> nx.DiGraph:
        """
        Frozen networkx view of the graph; adding or removing nodes or edges raises.
        """
        graph = nx.DiGraph()
        graph.add_nodes_from(self._vertices)
        graph.add_edges_from(self._edges)
        return nx.freeze(graph)

    def index(self, vertex: str) -> int:
        """
        Method returns the dense index of a vertex.
        :param vertex: Vertex label.
        :return: Position of the vertex in the graph's vertex order.
        """
        try:
            return self._index[vertex]
        except KeyError:
            raise UnknownVertexException(f"Vertex '{vertex}' is not in the graph") from None

    def has_edge(self, a: str, b: str) -> bool:
        return (a, b) in self._edges

    def successors(self, vertex: str) -> List[str]:
        self.index(vertex)
        return sorted(self.nx_graph.successors(vertex), key=self.index)

    def remove_vertices(self, vs: Sequence[str]) -> Digraph:
        """
        Method deletes vertices together with their incident edges.
        :param vs: Labels of the vertices that should be deleted.
        :return: New graph G \\ vs. The graph itself is not changed.
        """
        removed = set()
        for v in vs:
            self.index(v)
            removed.add(v)
        if not removed:
            return self
        return Digraph(
            [v for v in self._vertices if v not in removed],
            [(a, b) for a, b in self._edges if a not in removed and b not in removed],
        )

    def order_walks(self, walks: Iterable[Walk]) -> List[Walk]:
        """
        Method removes duplicates and sorts walks lexicographically by the indices of
        their vertices.
        """
        return sorted(set(walks), key=lambda w: tuple(self.index(v) for v in w.vertices))

    def simple_cycles_at(self, alpha: str, length: int) -> List[Walk]:
        """
        Method returns the simple cycles of the given length based at alpha.
        :param alpha: Base vertex.
        :param length: Cycle length, at least 1.
        :return: Ordered list of simple cycles.
        """
        self.index(alpha)
        if length < 1:
            raise ValueError(f"Cycle length must be positive, got {length}")
        if length == 1:
            return [Walk((alpha, alpha))] if self.has_edge(alpha, alpha) else []
        cycles = []
        for last in self.nx_graph.predecessors(alpha):
            if last == alpha:
                continue
            for path in nx.all_simple_paths(self.nx_graph, alpha, last, cutoff=length - 1):
                if len(path) == length:
                    cycles.append(Walk(tuple(path) + (alpha,)))
        return self.order_walks(cycles)

    def simple_cycles_through(self, alpha: str, max_len: int) -> List[Walk]:
        cycles = []
        for length in range(1, min(max_len, len(self._vertices)) + 1):
            cycles.extend(self.simple_cycles_at(alpha, length))
        return cycles

    def longest_simple_cycle(self, alpha: str) -> int:
        """
        Method returns the length of the longest simple cycle off alpha, 0 when alpha
        lies on no cycle.
        """
        lengths = [c.length for c in self.simple_cycles_through(alpha, len(self._vertices))]
        return max(lengths, default=0)

    def simple_paths(self, alpha: str, omega: str) -> List[Walk]:
        """
        Method returns all walks from alpha to omega without repeated vertices. For
        alpha == omega the only such walk is the trivial walk (alpha).
        """
        self.index(alpha)
        self.index(omega)
        if alpha == omega:
            return [Walk.trivial(alpha)]
        return self.order_walks(
            Walk(tuple(path)) for path in nx.all_simple_paths(self.nx_graph, alpha, omega))

    def contains_walk(self, w: Walk) -> bool:
        if w.is_zero:
            return False
        return all(v in self._index for v in w.vertices) and \
            all(edge in self._edges for edge in w.edges())

    def check_walk(self, w: Walk) -> None:
        """
        Method verifies that every vertex and every traversed edge of the walk belongs
        to the graph.
        :param w: Walk to validate.
        :return: None.
        """
        for v in w.vertices:
            self.index(v)
        for a, b in w.edges():
            if not self.has_edge(a, b):
                raise MissingEdgeException(f"Walk '{w}' uses the missing edge ({a}, {b})")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self._vertices == other._vertices and self._edges == other._edges

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        edges = sorted(self._edges, key=lambda e: (self.index(e[0]), self.index(e[1])))
        return f"Digraph(vertices={list(self._vertices)}, edges={edges})"
