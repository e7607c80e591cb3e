from __future__ import annotations

from typing import List, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from walk_partitions.walk_partitions.digraph import Digraph
from walk_partitions.walk_partitions.walksum.weighted_digraph import WeightedDigraph


class GraphFileException(ValueError):
    """
    Graph file could not be read or does not describe a valid graph.
    """
    pass


Number = Union[float, int, str]
WeightValue = Union[Number, List[Number], List[List[Number]]]


class VertexSchema(BaseModel):
    """
    A vertex of a graph file.
    Attributes:
        id (str): Vertex label.
        dim (int): Dimension of the vertex space, 1 for scalar weights.
    """

    id: str
    dim: int = Field(default=1, ge=1)

    @field_validator("id", mode="before")
    @classmethod
    def _label(cls, value) -> str:
        return str(value)


class EdgeSchema(BaseModel):
    """
    A directed edge of a graph file.
    Attributes:
        source (str): Label of the first vertex, 'from' in JSON.
        to (str): Label of the second vertex.
        weight: Scalar or row-major matrix; entries may be strings such as '1+2j'.
    """

    model_config = ConfigDict(populate_by_name=True)

    source: str = Field(alias="from")
    to: str
    weight: WeightValue = 1

    @field_validator("source", "to", mode="before")
    @classmethod
    def _label(cls, value) -> str:
        return str(value)

    @field_validator("weight")
    @classmethod
    def _complex_entries(cls, value: WeightValue) -> WeightValue:
        for entry in np.asarray(value, dtype=object).ravel():
            try:
                complex(entry)
            except (TypeError, ValueError):
                raise ValueError(f"weight entry {entry!r} is not a number") from None
        return value

    def matrix(self) -> np.ndarray:
        entries = np.vectorize(complex, otypes=[complex])(np.asarray(self.weight, dtype=object))
        return np.atleast_2d(entries)


class GraphSchema(BaseModel):
    """
    Structure of a graph file.
    Attributes:
        vertices (List[VertexSchema]): Vertices in index order.
        edges (List[EdgeSchema]): Directed edges with optional weights.
    """

    model_config = ConfigDict(validate_assignment=True)

    vertices: List[VertexSchema]
    edges: List[EdgeSchema] = Field(default_factory=list)

    @model_validator(mode="after")
    def _consistent(self) -> GraphSchema:
        labels = [v.id for v in self.vertices]
        if len(set(labels)) != len(labels):
            raise ValueError("vertex ids must be unique")
        pairs = [(e.source, e.to) for e in self.edges]
        if len(set(pairs)) != len(pairs):
            raise ValueError("duplicate edges are not allowed")
        unknown = {label for pair in pairs for label in pair} - set(labels)
        if unknown:
            raise ValueError(f"edges use undeclared vertices {sorted(unknown)}")
        return self


def build_digraph(schema: GraphSchema) -> Digraph:
    return Digraph([v.id for v in schema.vertices], [(e.source, e.to) for e in schema.edges])


def build_weighted_digraph(schema: GraphSchema) -> WeightedDigraph:
    """
    Builds the weighted digraph described by a graph file, checking every weight shape
    against the vertex dimensions.
    :param schema: Parsed graph file.
    :return: Weighted digraph.
    """
    try:
        return WeightedDigraph(
            build_digraph(schema),
            {(e.source, e.to): e.matrix() for e in schema.edges},
            {v.id: v.dim for v in schema.vertices},
        )
    except ValueError as err:
        raise GraphFileException(f"Invalid weights: {err}") from None


def _plain(value: complex) -> Number:
    if value.imag == 0:
        real = value.real
        return int(real) if float(real).is_integer() else real
    return str(value)


def build_schema(graph: Digraph | WeightedDigraph) -> GraphSchema:
    """
    Builds the graph file structure of a digraph or a weighted digraph.
    :param graph: Graph to describe.
    :return: Schema ready to be dumped.
    """
    weighted = graph if isinstance(graph, WeightedDigraph) else None
    base = weighted.base if weighted else graph
    vertices = [VertexSchema(id=v, dim=weighted.dims[v] if weighted else 1)
                for v in base.vertices]
    edges = []
    for a, b in sorted(base.edges, key=lambda e: (base.index(e[0]), base.index(e[1]))):
        weight: WeightValue = 1
        if weighted:
            matrix = weighted.weight(a, b)
            weight = _plain(matrix[0, 0]) if matrix.shape == (1, 1) else \
                [[_plain(x) for x in row] for row in matrix]
        edges.append(EdgeSchema(source=a, to=b, weight=weight))
    return GraphSchema(vertices=vertices, edges=edges)
