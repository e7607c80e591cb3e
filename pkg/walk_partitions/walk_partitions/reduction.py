from __future__ import annotations

import logging
from functools import lru_cache
from typing import Dict, List, Optional

from pydantic import BaseModel

from walk_partitions.walk_partitions.settings import CACHE_SIZE
from walk_partitions.walk_partitions.signature import DressingSignature, tree_is_structured
from walk_partitions.walk_partitions.syntax_tree import (
    ROOT, NodeId, NotACycleException, SyntaxTree, build_node, factorize_cycle,
    is_canonical, prime_factorize,
)
from walk_partitions.walk_partitions.walk import Walk, ZeroWalkException

logger = logging.getLogger(__name__)


class NonCanonicalTreeException(ValueError):
    """
    Syntax tree is not the canonical tree of its contents.
    """
    pass


class NodeAnnotation(BaseModel):
    """
    Local depth and resummability of one syntax tree node.
    Attributes:
        node (str): Node id as dotted (hedge, child) pairs, 'root' for the root.
        contents (str): Walk held by the whole subtree.
        base (str): Simple path or simple cycle of the node.
        local_depth (int): Local depth with respect to the signature.
        resummable (Optional[bool]): Resummability, None for the root.
    """

    node: str
    contents: str
    base: str
    local_depth: int
    resummable: Optional[bool] = None


def _check_level(signature: DressingSignature, level: int) -> None:
    if not 0 <= level <= signature.depth:
        raise ValueError(f"Level {level} is outside [0, {signature.depth}] for "
                         f"signature {signature}")


def local_depths(tree: SyntaxTree, signature: DressingSignature) -> Dict[NodeId, int]:
    """
    Method assigns local depths in pre-order. The root and its children get 0. Any
    other node gets its parent's depth plus one when the parent is not longer than
    k_(parent depth) and all left siblings in its hedge are
    [k_(parent depth + 1), ..., 0]-structured, and 0 otherwise.
    :param tree: Canonical syntax tree.
    :param signature: Dressing signature K.
    :return: Mapping from node id to local depth.
    """
    if not is_canonical(tree):
        raise NonCanonicalTreeException("Local depths are defined on canonical trees only")
    depths: Dict[NodeId, int] = {}
    for node_id, node, parent, index in tree.nodes():
        if len(node_id) <= 1:
            depths[node_id] = 0
            continue
        parent_depth = depths[node_id[:-1]]
        siblings = parent.hedges[node_id[-1][0]].children[:index]
        if parent.base.length <= signature.k(parent_depth) and all(
                tree_is_structured(s, signature.tail(parent_depth + 1)) for s in siblings):
            depths[node_id] = parent_depth + 1
        else:
            depths[node_id] = 0
    return depths


def is_resummable(tree: SyntaxTree, node_id: NodeId, signature: DressingSignature) -> bool:
    """
    Method checks whether the cycle at node_id is [k_l, ..., 0]-structured, l being
    its local depth.
    """
    if node_id == ROOT:
        raise ValueError("The root of a syntax tree is not a cycle and cannot be resummable")
    depth = local_depths(tree, signature)[node_id]
    return tree_is_structured(tree.subtree(node_id), signature.tail(depth))


def format_node_id(node_id: NodeId) -> str:
    if node_id == ROOT:
        return "root"
    return ".".join(f"{hedge}:{child}" for hedge, child in node_id)


def annotate(w: Walk, signature: DressingSignature) -> List[NodeAnnotation]:
    tree = prime_factorize(w)
    depths = local_depths(tree, signature)
    rows = []
    for node_id, node, _, _ in tree.nodes():
        rows.append(NodeAnnotation(
            node=format_node_id(node_id),
            contents=str(node.contents),
            base=str(node.base),
            local_depth=depths[node_id],
            resummable=None if node_id == ROOT else tree_is_structured(
                node, signature.tail(depths[node_id])),
        ))
    return rows


@lru_cache(maxsize=CACHE_SIZE)
def reduce_cycle_tree(tree: SyntaxTree, signature: DressingSignature,
                      level: int) -> Optional[SyntaxTree]:
    """
    Method applies the level reduction under K to a cycle node.
    :return: Reduced node, or None when the cycle reduces to its trivial walk.
    """
    logger.debug("Reducing the cycle node %s under %s at level %d", tree.base, signature, level)
    children: Dict[str, List[SyntaxTree]] = {}
    if tree.base.length <= signature.k(level):
        inner = signature.tail(level + 1)
        # index of the first child in each hedge that is not inner-structured
        cuts = {
            hedge.vertex: next((j for j, child in enumerate(hedge.children)
                                if not tree_is_structured(child, inner)), None)
            for hedge in tree.hedges
        }
        if all(cut is None for cut in cuts.values()):
            return None
        for hedge in tree.hedges:
            cut = cuts[hedge.vertex]
            for j, child in enumerate(hedge.children):
                child_level = level + 1 if cut is None or j <= cut else 0
                reduced = reduce_cycle_tree(child, signature, child_level)
                if reduced is not None:
                    children.setdefault(hedge.vertex, []).append(reduced)
    else:
        for hedge in tree.hedges:
            for child in hedge.children:
                reduced = reduce_cycle_tree(child, signature, 0)
                if reduced is not None:
                    children.setdefault(hedge.vertex, []).append(reduced)
    return build_node(tree.base, children)


def reduce_walk_tree(tree: SyntaxTree, signature: DressingSignature) -> SyntaxTree:
    children: Dict[str, List[SyntaxTree]] = {}
    for hedge in tree.hedges:
        for child in hedge.children:
            reduced = reduce_cycle_tree(child, signature, 0)
            if reduced is not None:
                children.setdefault(hedge.vertex, []).append(reduced)
    return build_node(tree.base, children)


def cycle_reduce(c: Walk, signature: DressingSignature, level: int) -> Walk:
    """
    Method applies the cycle reduction under K at the given level. A trivial walk maps to
    itself.
    :param c: Cycle or trivial walk.
    :param signature: Dressing signature K.
    :param level: Level between 0 and the depth of K.
    :return: Reduced cycle or the trivial walk off its head.
    """
    _check_level(signature, level)
    if c.is_zero:
        raise NotACycleException("The zero walk cannot be reduced")
    if c.is_trivial:
        return c
    reduced = reduce_cycle_tree(factorize_cycle(c), signature, level)
    return Walk.trivial(c.head) if reduced is None else reduced.contents


def walk_reduce(w: Walk, signature: DressingSignature) -> Walk:
    """
    Method deletes every resummable cycle from a walk: the level 0 cycle reduction is
    applied to each cycle nested directly off the base path.
    :param w: Non-zero walk.
    :param signature: Dressing signature K.
    :return: The K-irreducible core of w.
    """
    if w.is_zero:
        raise ZeroWalkException("The zero walk cannot be reduced")
    return reduce_walk_tree(prime_factorize(w), signature).contents


def is_irreducible(w: Walk, signature: DressingSignature) -> bool:
    return walk_reduce(w, signature) == w


def is_cycle_irreducible(c: Walk, signature: DressingSignature, level: int) -> bool:
    return cycle_reduce(c, signature, level) == c


def equivalent(w1: Walk, w2: Walk, signature: DressingSignature) -> bool:
    return walk_reduce(w1, signature) == walk_reduce(w2, signature)
