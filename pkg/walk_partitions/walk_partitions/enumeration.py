from __future__ import annotations

import logging
from functools import lru_cache, partial
from typing import Dict, List, Tuple

from walk_partitions.walk_partitions.digraph import Digraph
from walk_partitions.walk_partitions.settings import CACHE_SIZE
from walk_partitions.walk_partitions.signature import DressingSignature
from walk_partitions.walk_partitions.walk import Walk, WalkFactory, concatenations, decorate, \
    star_factory

logger = logging.getLogger(__name__)


def all_walks(graph: Digraph, alpha: str, omega: str, max_len: int) -> List[Walk]:
    """
    Method lists every walk from alpha to omega not longer than max_len. Exponential in
    max_len; meant as a brute-force oracle for small graphs.
    :param graph: Digraph.
    :param alpha: First vertex.
    :param omega: Last vertex.
    :param max_len: Length bound.
    :return: Ordered list of walks, including (alpha) when alpha == omega.
    """
    graph.index(alpha)
    graph.index(omega)
    found = []
    frontier = [(alpha,)]
    for _ in range(max_len + 1):
        found.extend(Walk(seq) for seq in frontier if seq[-1] == omega)
        frontier = [seq + (nxt,) for seq in frontier for nxt in graph.successors(seq[-1])]
    logger.debug("%d walks from %s to %s up to length %d", len(found), alpha, omega, max_len)
    return graph.order_walks(found)


def _irreducible_star(graph: Digraph, vertex: str, signature: DressingSignature) -> WalkFactory:
    return star_factory(
        partial(_irreducible_cycles, graph, vertex, signature, 0), vertex)


@lru_cache(maxsize=CACHE_SIZE)
def _irreducible_cycles(graph: Digraph, alpha: str, signature: DressingSignature,
                        level: int, max_len: int) -> Tuple[Walk, ...]:
    if max_len < 1:
        return ()
    bound = signature.k(level)
    cycles = []
    for length in range(1, min(max_len, len(graph.vertices)) + 1):
        for base in graph.simple_cycles_at(alpha, length):
            hedges: Dict[int, WalkFactory] = {}
            for i, vertex in enumerate(base.vertices[1:-1], start=1):
                sub = graph.remove_vertices(base.vertices[:i])
                rest = _irreducible_star(sub, vertex, signature)
                if length > bound:
                    hedges[i] = rest
                else:
                    hedges[i] = _first_then_rest(sub, vertex, signature, level + 1, rest)
            dressed = decorate(base, hedges, max_len)
            if length > bound:
                cycles.extend(dressed)
            else:
                # at least one internal vertex must carry a child
                cycles.extend(c for c in dressed if c.length > length)
    logger.debug("(%s; %d)-irreducible cycles off %s on %d vertices up to length %d: %d",
                 signature, level, alpha, len(graph.vertices), max_len, len(cycles))
    return tuple(graph.order_walks(cycles))


def _first_then_rest(graph: Digraph, vertex: str, signature: DressingSignature, level: int,
                     rest: WalkFactory) -> WalkFactory:
    first = partial(_irreducible_cycles, graph, vertex, signature, level)

    def factory(budget: int):
        yield Walk.trivial(vertex)
        yield from concatenations((first, rest), vertex, budget)

    return factory


def irreducible_cycles(graph: Digraph, alpha: str, signature: DressingSignature, level: int,
                       max_len: int) -> List[Walk]:
    """
    Method builds the (K, level)-irreducible cycles off alpha up to max_len.
    Simple cycles longer than k_level carry any number of (K, 0)-irreducible cycles off
    each internal vertex. Shorter ones carry nothing off some internal vertices and,
    off at least one, a (K, level + 1)-irreducible first child followed by any number
    of (K, 0)-irreducible cycles.
    :param graph: Digraph.
    :param alpha: Base vertex.
    :param signature: Dressing signature K.
    :param level: Level between 0 and the depth of K.
    :param max_len: Length bound.
    :return: Ordered list of cycles.
    """
    graph.index(alpha)
    if not 0 <= level <= signature.depth:
        raise ValueError(f"Level {level} is outside [0, {signature.depth}] for "
                         f"signature {signature}")
    return list(_irreducible_cycles(graph, alpha, signature, level, max_len))


def irreducible_walks(graph: Digraph, alpha: str, omega: str, signature: DressingSignature,
                      max_len: int) -> List[Walk]:
    """
    Method builds the K-irreducible walks from alpha to omega up to max_len: simple
    paths whose every vertex carries any number of (K, 0)-irreducible cycles living on
    the graph without the path vertices visited before it.
    """
    walks = []
    for path in graph.simple_paths(alpha, omega):
        hedges = {}
        for i, vertex in enumerate(path.vertices):
            sub = graph.remove_vertices(path.vertices[:i])
            hedges[i] = _irreducible_star(sub, vertex, signature)
        walks.extend(decorate(path, hedges, max_len))
    logger.debug("%d irreducible walks from %s to %s under %s up to length %d",
                 len(walks), alpha, omega, signature, max_len)
    return graph.order_walks(walks)
