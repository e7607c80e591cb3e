from itertools import product
from typing import Iterator, List

import numpy as np
from hypothesis import strategies as st

from walk_partitions.walk_partitions.digraph import Digraph
from walk_partitions.walk_partitions.walk import Walk
from walk_partitions.walk_partitions.walksum.weighted_digraph import WeightedDigraph

LABELS = "1234"


def labels(n: int) -> List[str]:
    return list(LABELS[:n])


def all_digraphs(n: int) -> Iterator[Digraph]:
    """
    Every digraph on the vertices '1'..'n', loops included.
    """
    pairs = [(a, b) for a in labels(n) for b in labels(n)]
    for mask in range(2 ** len(pairs)):
        yield Digraph(labels(n), [pair for i, pair in enumerate(pairs) if mask >> i & 1])


def sample_digraphs(n: int, count: int, seed: int = 0) -> Iterator[Digraph]:
    """
    Seeded sample of distinct digraphs on the vertices '1'..'n', loops included.
    """
    pairs = [(a, b) for a in labels(n) for b in labels(n)]
    rng = np.random.default_rng(seed)
    for mask in rng.choice(2 ** len(pairs), size=count, replace=False):
        yield Digraph(labels(n), [pair for i, pair in enumerate(pairs) if int(mask) >> i & 1])


def random_digraph(seed: int, n: int, density: float = 0.5) -> Digraph:
    rng = np.random.default_rng(seed)
    vertices = labels(n)
    return Digraph(vertices, [(a, b) for a in vertices for b in vertices if rng.random() < density])


def all_sequences(n: int, max_len: int) -> Iterator[Walk]:
    """
    Every walk up to max_len on the complete digraph with loops on n vertices.
    """
    for length in range(max_len + 1):
        for seq in product(labels(n), repeat=length + 1):
            yield Walk(seq)


def all_cycles(n: int, max_len: int) -> Iterator[Walk]:
    for w in all_sequences(n, max_len):
        if w.length and w.is_closed and w.head not in w.vertices[1:-1]:
            yield w


def random_weighted_digraph(seed: int, n: int, dim: int = 1, radius: float = 0.5,
                            positive: bool = False, density: float = 0.6) -> WeightedDigraph:
    """
    Random weighted digraph whose absolute block matrix has the given spectral radius,
    so every walk series involved converges absolutely.
    """
    rng = np.random.default_rng(seed)
    vertices = labels(n)
    edges = [(a, b) for a in vertices for b in vertices if rng.random() < density]
    if not edges:
        edges = [(vertices[0], vertices[-1])]
    weights = {}
    for edge in edges:
        block = rng.uniform(0.1, 1.0, (dim, dim))
        if not positive:
            block = block * np.exp(2j * np.pi * rng.random((dim, dim)))
        weights[edge] = block
    dims = {v: dim for v in vertices}
    graph = Digraph(vertices, edges)
    absolute = np.abs(WeightedDigraph(graph, weights, dims).block_matrix())
    scale = radius / max(np.max(np.abs(np.linalg.eigvals(absolute))), 1e-3)
    return WeightedDigraph(graph, {e: w * scale for e, w in weights.items()}, dims)


@st.composite
def digraphs(draw: st.DrawFn, max_vertices: int = 3) -> Digraph:
    n = draw(st.integers(min_value=1, max_value=max_vertices))
    pairs = [(a, b) for a in labels(n) for b in labels(n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
    return Digraph(labels(n), chosen)


@st.composite
def walks(draw: st.DrawFn, n: int = 3, max_len: int = 8) -> Walk:
    """
    Any vertex sequence is a walk on the complete digraph with loops.
    """
    seq = draw(st.lists(st.sampled_from(labels(n)), min_size=1, max_size=max_len + 1))
    return Walk(tuple(seq))


@st.composite
def cycles(draw: st.DrawFn, n: int = 3, max_len: int = 8) -> Walk:
    head = draw(st.sampled_from(labels(n)))
    others = [v for v in labels(n) if v != head]
    internal = draw(st.lists(st.sampled_from(others), max_size=max_len - 1)) if others else []
    return Walk((head, *internal, head))
