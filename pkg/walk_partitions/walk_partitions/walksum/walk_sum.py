from __future__ import annotations

import logging
from typing import Iterable, List, Optional

import numpy as np
import scipy.linalg
from pydantic import BaseModel

from walk_partitions.walk_partitions.digraph import Digraph
from walk_partitions.walk_partitions.dressing import NotIrreducibleException, walk_dress
from walk_partitions.walk_partitions.enumeration import irreducible_walks
from walk_partitions.walk_partitions.reduction import is_cycle_irreducible, is_irreducible
from walk_partitions.walk_partitions.settings import get_settings
from walk_partitions.walk_partitions.signature import DressingSignature, kmax
from walk_partitions.walk_partitions.syntax_tree import SyntaxTree, factorize_cycle, \
    prime_factorize
from walk_partitions.walk_partitions.walk import Walk, ZeroWalkException
from walk_partitions.walk_partitions.walksum.weighted_digraph import WeightedDigraph

logger = logging.getLogger(__name__)


class SingularMatrixException(ArithmeticError):
    """
    Matrix that has to be inverted is singular or too badly conditioned.
    """
    pass


class WalkSumDiagnostics(BaseModel):
    """
    Advisory numbers printed next to a walk sum.
    Attributes:
        mode (str): resummed, truncated or inverse.
        signature (Optional[str]): Signature of a resummed sum.
        spectral_radius (float): Spectral radius of the block weight matrix.
        term_count (int): Number of walks or irreducible walks summed explicitly.
        vertex_condition (Optional[float]): Largest cycle weight norm among the dressed
        vertices of a resummed sum; 1 or more means a dressed vertex series may diverge.
    """

    mode: str
    signature: Optional[str] = None
    spectral_radius: float
    term_count: int
    vertex_condition: Optional[float] = None


def _check_invertible(matrix: np.ndarray, context: str) -> None:
    try:
        rcond = 1.0 / np.linalg.cond(matrix, 1)
    except np.linalg.LinAlgError:
        rcond = 0.0
    if not np.isfinite(rcond) or rcond < get_settings().rcond_threshold:
        raise SingularMatrixException(f"Cannot invert the matrix of {context}: reciprocal "
                                      f"condition estimate {rcond:.3e}")


def _invert(matrix: np.ndarray, context: str) -> np.ndarray:
    _check_invertible(matrix, context)
    return scipy.linalg.solve(matrix, np.eye(matrix.shape[0], dtype=complex))


def walk_weight(wg: WeightedDigraph, w: Walk) -> np.ndarray:
    """
    Method multiplies the edge weights of a walk from right to left. The weight of a
    trivial walk (α) is the identity of size d_α.
    :param wg: Weighted digraph.
    :param w: Non-zero walk on the graph.
    :return: Matrix of shape (d_tail, d_head).
    """
    if w.is_zero:
        raise ZeroWalkException("The zero walk has no weight")
    result = wg.identity(w.head)
    for a, b in w.edges():
        result = wg.weight(a, b) @ result
    return result


def _cycle_terms(wg: WeightedDigraph, graph: Digraph, alpha: str,
                 signature: DressingSignature) -> np.ndarray:
    # sum over simple cycles off alpha not longer than k_0, internal vertices dressed
    inner = signature.drop_head()
    total = np.zeros((wg.dims[alpha], wg.dims[alpha]), dtype=complex)
    for length in range(1, min(signature.k(0), len(graph.vertices)) + 1):
        for cycle in graph.simple_cycles_at(alpha, length):
            vertices = cycle.vertices
            term = wg.identity(alpha)
            for p in range(1, len(vertices)):
                term = wg.weight(vertices[p - 1], vertices[p]) @ term
                if p < len(vertices) - 1:
                    sub = graph.remove_vertices(vertices[:p])
                    term = _dressed_vertex(wg, sub, vertices[p], inner) @ term
            total += term
    return total


def _dressed_vertex(wg: WeightedDigraph, graph: Digraph, alpha: str,
                    signature: DressingSignature) -> np.ndarray:
    if signature.depth == 0:
        return wg.identity(alpha)
    key = (graph, alpha, signature)
    cached = wg.dressed_vertex_cache.get(key)
    if cached is not None:
        return cached
    logger.debug("Dressed vertex %s under %s on %s", alpha, signature, list(graph.vertices))
    inner = wg.identity(alpha) - _cycle_terms(wg, graph, alpha, signature)
    value = _invert(inner, f"vertex '{alpha}' dressed by {signature} on the vertices "
                           f"{list(graph.vertices)}")
    wg.dressed_vertex_cache[key] = value
    return value


def dressed_vertex_weight(wg: WeightedDigraph, alpha: str,
                          signature: DressingSignature) -> np.ndarray:
    """
    Method evaluates the weight of the vertex alpha dressed by all configurations of
    K-structured cycles, a branched continued fraction that ends after D levels.
    :param wg: Weighted digraph.
    :param alpha: Vertex.
    :param signature: Dressing signature K; [0] gives the identity.
    :return: Matrix of shape (d_α, d_α).
    """
    wg.base.index(alpha)
    return _dressed_vertex(wg, wg.base, alpha, signature)


def dressed_vertex_condition(wg: WeightedDigraph, alpha: str,
                             signature: DressingSignature) -> float:
    """
    Method returns the norm of the summed K-structured cycle weights at alpha. Values
    below 1 are sufficient for the dressed vertex series to converge.
    """
    wg.base.index(alpha)
    if signature.depth == 0:
        return 0.0
    value = float(np.linalg.norm(_cycle_terms(wg, wg.base, alpha, signature), 2))
    if value >= 1:
        logger.warning("Cycle weights at '%s' under %s have norm %.3f >= 1; the dressed "
                       "vertex series may diverge", alpha, signature, value)
    return value


def _hedge_weight(wg: WeightedDigraph, graph: Digraph, vertex: str,
                  children: tuple, levels: List[int],
                  signature: DressingSignature, trailing: DressingSignature) -> np.ndarray:
    result = wg.identity(vertex)
    for child, level in zip(children, levels):
        result = _dressed_vertex(wg, graph, vertex, signature.tail(level)) @ result
        result = _cycle_tree_weight(wg, graph, child, signature, level) @ result
    return _dressed_vertex(wg, graph, vertex, trailing) @ result


def _cycle_tree_weight(wg: WeightedDigraph, graph: Digraph, tree: SyntaxTree,
                       signature: DressingSignature, level: int) -> np.ndarray:
    vertices = tree.base.vertices
    short = tree.base.length <= signature.k(level)
    result = wg.identity(vertices[0])
    for p in range(1, len(vertices)):
        result = wg.weight(vertices[p - 1], vertices[p]) @ result
        if p == len(vertices) - 1:
            break
        vertex = vertices[p]
        sub = graph.remove_vertices(vertices[:p])
        children = tree.children_at(vertex)
        levels = [level + 1 if short and j == 0 else 0 for j in range(len(children))]
        trailing = signature.tail(level + 1) if short and not children else signature
        result = _hedge_weight(wg, sub, vertex, children, levels, signature,
                               trailing) @ result
    return result


def dressed_cycle_weight(wg: WeightedDigraph, q: Walk, signature: DressingSignature,
                         level: int) -> np.ndarray:
    """
    Method sums the weights of all cycles in the dressing of a (K, level)-irreducible
    cycle q in closed form.
    :param wg: Weighted digraph.
    :param q: (K, level)-irreducible cycle on the graph.
    :param signature: Dressing signature K.
    :param level: Level between 0 and the depth of K.
    :return: Matrix of shape (d_head, d_head).
    """
    wg.base.check_walk(q)
    if not is_cycle_irreducible(q, signature, level):
        raise NotIrreducibleException(
            f"Cycle '{q}' is not ({signature}; {level})-irreducible")
    return _cycle_tree_weight(wg, wg.base, factorize_cycle(q), signature, level)


def dressed_walk_weight(wg: WeightedDigraph, i: Walk,
                        signature: DressingSignature) -> np.ndarray:
    """
    Method sums the weights of all walks in the dressing of a K-irreducible walk i in
    closed form: every base path vertex becomes a K-dressed vertex on the graph without
    the earlier path vertices, interleaved with the dressed weights of its child cycles.
    :param wg: Weighted digraph.
    :param i: K-irreducible walk on the graph.
    :param signature: Dressing signature K.
    :return: Matrix of shape (d_tail, d_head).
    """
    wg.base.check_walk(i)
    if not is_irreducible(i, signature):
        raise NotIrreducibleException(f"Walk '{i}' is not {signature}-irreducible")
    tree = prime_factorize(i)
    vertices = tree.base.vertices
    result = wg.identity(vertices[0])
    for p, vertex in enumerate(vertices):
        if p:
            result = wg.weight(vertices[p - 1], vertex) @ result
        sub = wg.base.remove_vertices(vertices[:p])
        children = tree.children_at(vertex)
        result = _hedge_weight(wg, sub, vertex, children, [0] * len(children), signature,
                               signature) @ result
    return result


def resummation_terms(wg: WeightedDigraph, alpha: str, omega: str,
                      signature: DressingSignature, max_irreducible_len: int) -> List[Walk]:
    """
    Method lists the irreducible walks summed by resummed_walk_sum. Under K_max these
    are the simple paths and the length bound is not needed.
    """
    graph = wg.base
    if signature == kmax(graph):
        return graph.simple_paths(alpha, omega)
    return irreducible_walks(graph, alpha, omega, signature, max_irreducible_len)


def resummed_walk_sum(wg: WeightedDigraph, alpha: str, omega: str,
                      signature: DressingSignature, max_irreducible_len: int,
                      terms: Optional[List[Walk]] = None) -> np.ndarray:
    """
    Method sums the dressed weights of the K-irreducible walks from alpha to omega up to
    max_irreducible_len. Under K_max the sum runs over simple paths and is exact.
    :param terms: Irreducible walks from resummation_terms, listed again when omitted.
    :return: Matrix of shape (d_ω, d_α).
    """
    if terms is None:
        terms = resummation_terms(wg, alpha, omega, signature, max_irreducible_len)
    total = np.zeros((wg.dims[omega], wg.dims[alpha]), dtype=complex)
    for term in terms:
        total += dressed_walk_weight(wg, term, signature)
    logger.info("Resummed walk sum from %s to %s under %s over %d irreducible walks",
                alpha, omega, signature, len(terms))
    return total


def truncated_walk_sum(wg: WeightedDigraph, alpha: str, omega: str, max_len: int) -> np.ndarray:
    """
    Method sums the weights of all walks from alpha to omega up to max_len, computed as
    the sum of the (ω, α) blocks of the powers A^0..A^max_len of the block matrix.
    :return: Matrix of shape (d_ω, d_α).
    """
    wg.base.index(alpha)
    wg.base.index(omega)
    matrix = wg.block_matrix()
    columns = wg.unit_columns(alpha)
    total = wg.block(columns, omega).copy()
    for _ in range(max_len):
        columns = matrix @ columns
        total += wg.block(columns, omega)
    return total


def spectral_radius(wg: WeightedDigraph) -> float:
    matrix = wg.block_matrix()
    if not matrix.size:
        return 0.0
    return float(np.max(np.abs(np.linalg.eigvals(matrix))))


def resolvent_entry(wg: WeightedDigraph, alpha: str, omega: str) -> np.ndarray:
    """
    Method returns the (ω, α) block of (I - A)^{-1} by a direct linear solve. This is
    the limit of the walk sums whenever they converge.
    :return: Matrix of shape (d_ω, d_α).
    """
    wg.base.index(alpha)
    wg.base.index(omega)
    radius = spectral_radius(wg)
    if radius >= get_settings().spectral_radius_warning:
        logger.warning("Spectral radius %.3f of the weight matrix; walk sums do not "
                       "converge to the resolvent", radius)
    matrix = wg.block_matrix()
    system = np.eye(matrix.shape[0], dtype=complex) - matrix
    _check_invertible(system, "I - A")
    return wg.block(scipy.linalg.solve(system, wg.unit_columns(alpha)), omega)


def fiber_weight_sum(wg: WeightedDigraph, i: Walk, signature: DressingSignature,
                     max_len: int) -> np.ndarray:
    total = np.zeros((wg.dims[i.tail], wg.dims[i.head]), dtype=complex)
    for w in walk_dress(i, signature, wg.base, max_len):
        total += walk_weight(wg, w)
    return total


def diagnostics(wg: WeightedDigraph, mode: str, term_count: int,
                signature: Optional[DressingSignature] = None,
                dressed: Optional[Iterable[str]] = None) -> WalkSumDiagnostics:
    """
    Method collects the advisory numbers of a walk sum. With a signature, every dressed
    vertex is checked against the convergence condition and violations are logged.
    :param wg: Weighted digraph.
    :param mode: resummed, truncated or inverse.
    :param term_count: Number of walks summed explicitly.
    :param signature: Signature of a resummed sum.
    :param dressed: Vertices the resummed sum dresses, all vertices when omitted.
    :return: Diagnostics.
    """
    condition = None
    if signature is not None:
        vertices = wg.base.vertices if dressed is None else sorted(set(dressed), key=wg.base.index)
        condition = max((dressed_vertex_condition(wg, v, signature) for v in vertices),
                        default=0.0)
    return WalkSumDiagnostics(mode=mode, signature=None if signature is None else str(signature),
                              spectral_radius=spectral_radius(wg), term_count=term_count,
                              vertex_condition=condition)
