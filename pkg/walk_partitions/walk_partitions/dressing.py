from __future__ import annotations

import logging
from collections import defaultdict
from functools import lru_cache, partial
from typing import Dict, List, Set, Tuple

from pydantic import BaseModel, Field

from walk_partitions.walk_partitions.digraph import Digraph
from walk_partitions.walk_partitions.enumeration import all_walks, irreducible_walks
from walk_partitions.walk_partitions.reduction import is_cycle_irreducible, is_irreducible, \
    walk_reduce
from walk_partitions.walk_partitions.settings import CACHE_SIZE
from walk_partitions.walk_partitions.signature import DressingSignature, structured_cycles
from walk_partitions.walk_partitions.syntax_tree import SyntaxTree, factorize_cycle, \
    prime_factorize
from walk_partitions.walk_partitions.walk import Walk, WalkFactory, concatenations, decorate, \
    star_factory

logger = logging.getLogger(__name__)


class NotIrreducibleException(ValueError):
    """
    Walk or cycle handed to a dressing operator is not irreducible.
    """
    pass


class PartitionReport(BaseModel):
    """
    Outcome of checking that the dressed classes partition the walks of a graph.
    Attributes:
        walk_count (int): Number of walks checked.
        class_count (int): Number of irreducible walks, one class each.
        violations (List[str]): Human readable failures, empty on success.
    """

    walk_count: int = 0
    class_count: int = 0
    violations: List[str] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def _structured_star(graph: Digraph, vertex: str, signature: DressingSignature) -> WalkFactory:
    return star_factory(partial(structured_cycles, graph, vertex, signature), vertex)


def _hedge_factory(factories: List[WalkFactory], vertex: str) -> WalkFactory:
    return partial(concatenations, tuple(factories), vertex)


@lru_cache(maxsize=CACHE_SIZE)
def _dress_cycle(graph: Digraph, tree: SyntaxTree, signature: DressingSignature, level: int,
                 max_len: int) -> Tuple[Walk, ...]:
    base = tree.base
    short = base.length <= signature.k(level)
    hedges: Dict[int, WalkFactory] = {}
    for i, vertex in enumerate(base.vertices[1:-1], start=1):
        sub = graph.remove_vertices(base.vertices[:i])
        children = tree.children_at(vertex)
        factories: List[WalkFactory] = []
        for j, child in enumerate(children):
            # only the first child of a short cycle sits one level deeper
            child_level = level + 1 if short and j == 0 else 0
            factories.append(_structured_star(sub, vertex, signature.tail(child_level)))
            factories.append(partial(_dress_cycle, sub, child, signature, child_level))
        trailing = signature.tail(level + 1) if short and not children else signature
        factories.append(_structured_star(sub, vertex, trailing))
        hedges[i] = _hedge_factory(factories, vertex)
    return tuple(graph.order_walks(decorate(base, hedges, max_len)))


def cycle_dress(q: Walk, signature: DressingSignature, level: int, graph: Digraph,
                max_len: int) -> List[Walk]:
    """
    Method applies the cycle dressing operator to a (K, level)-irreducible cycle: every
    cycle up to max_len that the level reduction under K maps back to q.
    :param q: (K, level)-irreducible cycle on the graph.
    :param signature: Dressing signature K.
    :param level: Level between 0 and the depth of K.
    :param graph: Digraph the dressing cycles live on.
    :param max_len: Length bound.
    :return: Ordered list of dressed cycles.
    """
    graph.check_walk(q)
    if not is_cycle_irreducible(q, signature, level):
        raise NotIrreducibleException(
            f"Cycle '{q}' is not ({signature}; {level})-irreducible")
    return list(_dress_cycle(graph, factorize_cycle(q), signature, level, max_len))


def walk_dress(i: Walk, signature: DressingSignature, graph: Digraph,
               max_len: int) -> List[Walk]:
    """
    Method applies the walk dressing operator to a K-irreducible walk: every walk up to
    max_len obtained by adding K-structured cycles around the children of each base
    path vertex and dressing every child cycle.
    :param i: K-irreducible walk on the graph.
    :param signature: Dressing signature K.
    :param graph: Digraph.
    :param max_len: Length bound.
    :return: Ordered list of walks whose K-irreducible core is i.
    """
    graph.check_walk(i)
    if not is_irreducible(i, signature):
        raise NotIrreducibleException(f"Walk '{i}' is not {signature}-irreducible")
    tree = prime_factorize(i)
    path = tree.base
    hedges: Dict[int, WalkFactory] = {}
    for position, vertex in enumerate(path.vertices):
        sub = graph.remove_vertices(path.vertices[:position])
        factories: List[WalkFactory] = []
        for child in tree.children_at(vertex):
            factories.append(_structured_star(sub, vertex, signature))
            factories.append(partial(_dress_cycle, sub, child, signature, 0))
        factories.append(_structured_star(sub, vertex, signature))
        hedges[position] = _hedge_factory(factories, vertex)
    return graph.order_walks(decorate(path, hedges, max_len))


def partition_check(graph: Digraph, signature: DressingSignature,
                    max_len: int) -> PartitionReport:
    """
    Method checks on every vertex pair that the dressed classes of the irreducible walks
    are non-empty, cover all walks up to max_len and do not overlap, and that each walk
    sits in the class of its own irreducible core.
    :param graph: Digraph.
    :param signature: Dressing signature K.
    :param max_len: Length bound.
    :return: Report with counts and violations.
    """
    report = PartitionReport()
    for alpha in graph.vertices:
        for omega in graph.vertices:
            walks = all_walks(graph, alpha, omega, max_len)
            classes = {i: set(walk_dress(i, signature, graph, max_len))
                       for i in irreducible_walks(graph, alpha, omega, signature, max_len)}
            owners: Dict[Walk, List[Walk]] = defaultdict(list)
            for core, members in classes.items():
                if core not in members:
                    report.violations.append(f"class of '{core}' does not contain it")
                for member in members:
                    owners[member].append(core)
            known: Set[Walk] = set(walks)
            for w in walks:
                core = walk_reduce(w, signature)
                if not is_irreducible(core, signature):
                    report.violations.append(f"core '{core}' of '{w}' is not irreducible")
                if core not in classes:
                    report.violations.append(
                        f"'{w}' reduces to '{core}' which is not an enumerated class")
                elif w not in classes[core]:
                    report.violations.append(f"'{w}' is missing from the class of '{core}'")
                if len(owners[w]) != 1:
                    report.violations.append(
                        f"'{w}' lies in {len(owners[w])} classes: "
                        f"{', '.join(map(str, owners[w]))}")
            for member in owners:
                if member not in known:
                    report.violations.append(f"class member '{member}' is not a walk from "
                                             f"{alpha} to {omega}")
            report.walk_count += len(walks)
            report.class_count += len(classes)
    logger.info("Partition check under %s up to length %d: %d walks, %d classes, "
                "%d violations", signature, max_len, report.walk_count, report.class_count,
                len(report.violations))
    return report
