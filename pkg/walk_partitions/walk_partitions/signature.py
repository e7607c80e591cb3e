from __future__ import annotations

import logging
from functools import lru_cache, partial
from typing import FrozenSet, List, Set, Tuple

from pydantic import BaseModel, ConfigDict, ValidationError, field_validator

from walk_partitions.walk_partitions.digraph import Digraph
from walk_partitions.walk_partitions.settings import CACHE_SIZE, WALK_SEPARATOR
from walk_partitions.walk_partitions.syntax_tree import SyntaxTree, factorize_cycle
from walk_partitions.walk_partitions.walk import Walk, decorate, star_factory

logger = logging.getLogger(__name__)


class InvalidSignatureException(ValueError):
    """
    Integer sequence is not a dressing signature.
    """
    pass


class DressingSignature(BaseModel):
    """
    Dressing signature [k_0, ..., k_{D-1}, 0].
    Attributes:
        entries (Tuple[int, ...]): All entries including the trailing zero.
    """

    model_config = ConfigDict(frozen=True)

    entries: Tuple[int, ...]

    @field_validator("entries")
    @classmethod
    def _validate_entries(cls, entries: Tuple[int, ...]) -> Tuple[int, ...]:
        if not entries:
            raise ValueError("a dressing signature needs at least one entry")
        if entries[-1] != 0:
            raise ValueError("the last entry must be 0")
        head = entries[:-1]
        if any(k < 0 for k in entries):
            raise ValueError("entries must be non-negative")
        if head and head[-1] < 1:
            raise ValueError("the last non-zero entry k_{D-1} must be at least 1")
        if any(k < 2 for k in head[:-1]):
            raise ValueError("entries k_0..k_{D-2} before the last non-zero entry must "
                             "be at least 2")
        return entries

    @property
    def depth(self) -> int:
        return len(self.entries) - 1

    def k(self, level: int) -> int:
        """
        Method returns k_level, with k_D = 0.
        """
        if not 0 <= level <= self.depth:
            raise IndexError(f"Level {level} is outside [0, {self.depth}] for {self}")
        return self.entries[level]

    def tail(self, level: int) -> DressingSignature:
        """
        Method returns [k_level, ..., k_{D-1}, 0].
        """
        self.k(level)
        return DressingSignature(entries=self.entries[level:])

    def drop_head(self) -> DressingSignature:
        if self.depth == 0:
            raise InvalidSignatureException("The signature [0] has no head to drop")
        return self.tail(1)

    def __str__(self) -> str:
        return WALK_SEPARATOR.join(str(k) for k in self.entries)

    def __repr__(self) -> str:
        return f"DressingSignature([{self}])"


def parse_signature(text: str) -> DressingSignature:
    """
    Method parses a comma separated dressing signature such as '3,2,0'.
    :param text: Signature text.
    :return: Validated signature.
    """
    try:
        entries = tuple(int(part) for part in text.split(WALK_SEPARATOR))
    except ValueError:
        raise InvalidSignatureException(
            f"Signature '{text}' must be a comma separated list of integers") from None
    return signature_of(*entries)


def signature_of(*entries: int) -> DressingSignature:
    try:
        return DressingSignature(entries=entries)
    except ValidationError as err:
        reasons = "; ".join(e["msg"] for e in err.errors())
        raise InvalidSignatureException(
            f"[{', '.join(map(str, entries))}] is not a dressing signature: "
            f"{reasons}") from None


def drop_head(signature: DressingSignature) -> DressingSignature:
    return signature.drop_head()


def shortlex_key(signature: DressingSignature) -> Tuple[int, Tuple[int, ...]]:
    return len(signature.entries), signature.entries


def shortlex_compare(first: DressingSignature, second: DressingSignature) -> int:
    """
    Method compares signatures in shortlex order: shorter first, then lexicographic.
    :return: -1, 0 or 1.
    """
    a, b = shortlex_key(first), shortlex_key(second)
    return (a > b) - (a < b)


def signature_family() -> List[DressingSignature]:
    return [signature_of(*e) for e in ((0,), (1, 0), (2, 0), (3, 0), (2, 1, 0), (3, 2, 0))]


def tree_is_structured(tree: SyntaxTree, signature: DressingSignature) -> bool:
    if signature.depth == 0 or tree.base.length > signature.k(0):
        return False
    inner = signature.drop_head()
    return all(tree_is_structured(child, inner) for child in tree.children())


def is_k_structured(c: Walk, signature: DressingSignature) -> bool:
    """
    Method checks that the base cycle of c is not longer than k_0 and that all its child
    cycles are drop_head(K)-structured. No cycle is [0]-structured.
    :param c: Cycle.
    :param signature: Dressing signature K.
    :return: True if c is K-structured.
    """
    return tree_is_structured(factorize_cycle(c), signature)


def _deeper_pairs(graph: Digraph, alpha: str) -> Set[Tuple[Digraph, str]]:
    pairs = set()
    for cycle in graph.simple_cycles_through(alpha, len(graph.vertices)):
        internal = cycle.vertices[1:-1]
        for i, vertex in enumerate(internal):
            sub = graph.remove_vertices((alpha,) + internal[:i])
            if sub.longest_simple_cycle(vertex):
                pairs.add((sub, vertex))
    return pairs


@lru_cache(maxsize=CACHE_SIZE)
def kmax(graph: Digraph) -> DressingSignature:
    """
    Method computes the smallest signature under which every cycle of the graph is
    structured. Entry d is the longest simple cycle among the (subgraph, vertex) pairs
    that child cycles at nesting depth d can live on.
    :param graph: Digraph.
    :return: K_max of the graph, [0] for an acyclic graph.
    """
    entries = []
    level: FrozenSet[Tuple[Digraph, str]] = frozenset(
        (graph, v) for v in graph.vertices if graph.longest_simple_cycle(v))
    while level:
        entries.append(max(sub.longest_simple_cycle(v) for sub, v in level))
        deeper: Set[Tuple[Digraph, str]] = set()
        for sub, v in level:
            deeper |= _deeper_pairs(sub, v)
        level = frozenset(deeper)
    logger.debug("kmax of %r is %s", graph, entries + [0])
    return signature_of(*entries, 0)


@lru_cache(maxsize=CACHE_SIZE)
def _structured_cycles(graph: Digraph, alpha: str, signature: DressingSignature,
                       max_len: int) -> Tuple[Walk, ...]:
    if signature.depth == 0 or max_len < 1:
        return ()
    logger.debug("Building %s-structured cycles off %s on %d vertices up to length %d",
                 signature, alpha, len(graph.vertices), max_len)
    inner = signature.drop_head()
    cycles = []
    for length in range(1, min(signature.k(0), max_len) + 1):
        for base in graph.simple_cycles_at(alpha, length):
            internal = base.vertices[1:-1]
            hedges = {}
            for i, vertex in enumerate(internal, start=1):
                sub = graph.remove_vertices(base.vertices[:i])
                hedges[i] = star_factory(partial(_structured_cycles, sub, vertex, inner), vertex)
            cycles.extend(decorate(base, hedges, max_len))
    return tuple(graph.order_walks(cycles))


def structured_cycles(graph: Digraph, alpha: str, signature: DressingSignature,
                      max_len: int) -> List[Walk]:
    """
    Method lists the K-structured cycles off alpha not longer than max_len: simple
    cycles of length at most k_0 with any configuration of drop_head(K)-structured
    cycles nested off their internal vertices.
    :param graph: Digraph.
    :param alpha: Base vertex.
    :param signature: Dressing signature K.
    :param max_len: Length bound.
    :return: Ordered list of cycles.
    """
    graph.index(alpha)
    return list(_structured_cycles(graph, alpha, signature, max_len))
