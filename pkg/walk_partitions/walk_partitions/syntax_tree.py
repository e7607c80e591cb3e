from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, reduce
from typing import Dict, Iterator, List, Optional, Tuple

from walk_partitions.walk_partitions.walk import Walk, ZeroWalkException, classify, nest

# Path from the root: one (hedge index, child index) pair per level.
NodeId = Tuple[Tuple[int, int], ...]
ROOT: NodeId = ()


class MalformedTreeException(ValueError):
    """
    Syntax tree contents could not be nested back into a walk.
    """
    pass


class NotACycleException(ValueError):
    """
    Operation requires a cycle but got another kind of walk.
    """
    pass


@dataclass(frozen=True)
class Hedge:
    """
    Ordered children of one node that are all closed walks off the same vertex.
    """

    vertex: str
    children: Tuple[SyntaxTree, ...]

    @property
    def contents(self) -> Walk:
        if not self.children:
            raise MalformedTreeException(f"Hedge at '{self.vertex}' has no children")
        # closed walks off one vertex nest by concatenation, so traversal order is kept
        return reduce(nest, (child.contents for child in self.children))


@dataclass(frozen=True)
class SyntaxTree:
    """
    Node of a canonical syntax tree. The root holds a simple path and every other node
    holds a simple cycle; hedges are ordered by the position of their vertex in the
    base walk.
    """

    base: Walk
    hedges: Tuple[Hedge, ...] = ()

    @cached_property
    def contents(self) -> Walk:
        """
        The walk the tree represents: base nested with its hedges from the last one to
        the first.
        """
        walk = self.base
        for hedge in reversed(self.hedges):
            walk = nest(walk, hedge.contents)
        if walk.is_zero:
            raise MalformedTreeException(f"Hedges of the node '{self.base}' are not nestable")
        return walk

    @property
    def head(self) -> str:
        return self.base.head

    def children_at(self, vertex: str) -> Tuple[SyntaxTree, ...]:
        for hedge in self.hedges:
            if hedge.vertex == vertex:
                return hedge.children
        return ()

    def children(self) -> Iterator[SyntaxTree]:
        for hedge in self.hedges:
            yield from hedge.children

    def nodes(self) -> Iterator[Tuple[NodeId, SyntaxTree, Optional[SyntaxTree], int]]:
        """
        Method walks the tree in pre-order, left to right.
        :return: Iterator of (node id, node, parent, index in its hedge).
        """
        yield ROOT, self, None, 0
        yield from self._descendants(ROOT)

    def _descendants(self, node_id: NodeId):
        for hedge_idx, hedge in enumerate(self.hedges):
            for child_idx, child in enumerate(hedge.children):
                child_id = node_id + ((hedge_idx, child_idx),)
                yield child_id, child, self, child_idx
                yield from child._descendants(child_id)

    def subtree(self, node_id: NodeId) -> SyntaxTree:
        node = self
        for hedge_idx, child_idx in node_id:
            try:
                node = node.hedges[hedge_idx].children[child_idx]
            except IndexError:
                raise KeyError(f"Node {node_id} does not exist in the tree") from None
        return node

    def size(self) -> int:
        return 1 + sum(child.size() for child in self.children())


def tree_contents(tree: SyntaxTree) -> Walk:
    """
    Method nests a syntax tree back into the walk it represents.
    :param tree: Syntax tree, canonical or hand built.
    :return: Contents of the tree.
    """
    return tree.contents


def build_node(base: Walk, children: Dict[str, List[SyntaxTree]]) -> SyntaxTree:
    """
    Method assembles a node from its base and the children found at its vertices. Empty
    hedges are skipped.
    :param base: Simple path or simple cycle.
    :param children: Child trees by base vertex.
    :return: Syntax tree node.
    """
    hedges = []
    seen = set()
    for vertex in base.vertices:
        if vertex in seen:
            continue
        seen.add(vertex)
        if children.get(vertex):
            hedges.append(Hedge(vertex, tuple(children[vertex])))
    return SyntaxTree(base, tuple(hedges))


def prime_factorize(w: Walk) -> SyntaxTree:
    """
    Method builds the canonical syntax tree of a walk. The walk is traversed once; on
    reaching a vertex that is already on the stack, the stretch since its earlier visit
    is cut out as a simple cycle, carrying the cycles found at its internal vertices.
    What remains on the stack at the end is the base path.
    :param w: Non-zero walk.
    :return: Canonical syntax tree.
    """
    if w.is_zero:
        raise ZeroWalkException("The zero walk has no prime factorization")
    stack: List[Tuple[str, List[SyntaxTree]]] = []
    position: Dict[str, int] = {}
    for vertex in w.vertices:
        if vertex not in position:
            position[vertex] = len(stack)
            stack.append((vertex, []))
            continue
        start = position[vertex]
        popped = stack[start + 1:]
        del stack[start + 1:]
        for label, _ in popped:
            del position[label]
        cycle = Walk((vertex,) + tuple(label for label, _ in popped) + (vertex,))
        stack[start][1].append(build_node(cycle, dict(popped)))
    path = Walk(tuple(label for label, _ in stack))
    return build_node(path, dict(stack))


def is_canonical(tree: SyntaxTree) -> bool:
    try:
        return prime_factorize(tree_contents(tree)) == tree
    except MalformedTreeException:
        return False


def factorize_cycle(c: Walk) -> SyntaxTree:
    """
    Method returns the canonical tree of a cycle as a single cycle node.
    """
    if c.is_zero or not classify(c).is_cycle:
        raise NotACycleException(f"'{c}' is not a cycle")
    (node,) = prime_factorize(c).children()
    return node
