from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Callable, Dict, Iterable, Iterator, List, NamedTuple, Optional, Sequence, Tuple

from walk_partitions.walk_partitions.settings import WALK_SEPARATOR, ZERO_WALK_TEXT

# A factory yields closed walks off a fixed vertex whose length fits the given budget.
WalkFactory = Callable[[int], Iterable["Walk"]]


class ZeroWalkException(ValueError):
    """
    Operation is not defined on the zero walk.
    """
    pass


class MixedHeadsException(ValueError):
    """
    Closed walks of one set are not based at the same vertex.
    """
    pass


@dataclass(frozen=True)
class Walk:
    """
    A walk stored as its vertex sequence. The empty sequence stands for the zero walk
    and a sequence of one vertex for the trivial walk (α).
    """

    vertices: Tuple[str, ...] = ()

    @classmethod
    def trivial(cls, vertex: str) -> Walk:
        return cls((vertex,))

    @classmethod
    def of(cls, labels: Iterable) -> Walk:
        """
        Method builds a walk from any iterable of labels.
        :param labels: Vertex labels, converted to strings.
        :return: Walk, or the zero walk for an empty iterable.
        """
        return cls(tuple(str(label) for label in labels))

    @classmethod
    def parse(cls, text: str) -> Walk:
        """
        Method parses walk notation: comma separated labels, '(α)' for a trivial walk
        and '0' for the zero walk. Labels of one character may be written without
        commas, so '12321' and '1,2,3,2,1' are the same walk.
        :param text: Walk in text form.
        :return: Parsed walk.
        """
        text = text.strip()
        if text == ZERO_WALK_TEXT:
            return ZERO
        if text.startswith("(") and text.endswith(")"):
            label = text[1:-1].strip()
            if not label or WALK_SEPARATOR in label:
                raise ValueError(f"Trivial walk must hold exactly one vertex, got '{text}'")
            return cls.trivial(label)
        if WALK_SEPARATOR in text:
            labels = [label.strip() for label in text.split(WALK_SEPARATOR)]
        else:
            labels = list(text)
        if not labels or any(not label or label.isspace() for label in labels):
            raise ValueError(f"Walk '{text}' has an empty vertex label")
        return cls(tuple(labels))

    @property
    def is_zero(self) -> bool:
        return not self.vertices

    @property
    def is_trivial(self) -> bool:
        return len(self.vertices) == 1

    @property
    def head(self) -> str:
        self._require_nonzero("head")
        return self.vertices[0]

    @property
    def tail(self) -> str:
        self._require_nonzero("tail")
        return self.vertices[-1]

    @property
    def length(self) -> int:
        self._require_nonzero("length")
        return len(self.vertices) - 1

    @property
    def is_closed(self) -> bool:
        return self.head == self.tail

    def edges(self) -> Iterator[Tuple[str, str]]:
        return zip(self.vertices, self.vertices[1:])

    def concat(self, other: Walk) -> Walk:
        """
        Method appends a walk starting where this one ends. For closed walks off the
        same vertex this is the nesting product.
        :param other: Walk whose head equals the tail of this walk.
        :return: Concatenated walk.
        """
        if self.tail != other.head:
            raise ValueError(f"Cannot concatenate '{self}' and '{other}': "
                             f"{self.tail} != {other.head}")
        return Walk(self.vertices + other.vertices[1:])

    def _require_nonzero(self, what: str) -> None:
        if self.is_zero:
            raise ZeroWalkException(f"The zero walk has no {what}")

    def __str__(self) -> str:
        if self.is_zero:
            return ZERO_WALK_TEXT
        if self.is_trivial:
            return f"({self.vertices[0]})"
        return WALK_SEPARATOR.join(self.vertices)

    def __repr__(self) -> str:
        return f"Walk('{self}')"


ZERO = Walk()


class WalkClassification(NamedTuple):
    is_closed: bool
    is_cycle: bool
    is_simple_cycle: bool
    is_simple_path: bool


def nestable(w1: Walk, w2: Walk) -> bool:
    """
    Method checks whether w2 can be nested into w1: w2 is closed, w1 visits the head of
    w2, and nothing w1 visits before reaching that vertex belongs to w2.
    :param w1: Walk receiving the closed walk.
    :param w2: Closed walk to be nested.
    :return: True if the couple is nestable.
    """
    if w1.is_zero or w2.is_zero:
        raise ZeroWalkException("Nestability is not defined for the zero walk")
    if not w2.is_closed or w2.head not in w1.vertices:
        return False
    prefix = w1.vertices[:w1.vertices.index(w2.head)]
    return set(prefix).isdisjoint(w2.vertices[:-1])


def nest(w1: Walk, w2: Walk) -> Walk:
    """
    Method returns w1 with the final appearance of head(w2) replaced by w2, or the
    zero walk when either walk is zero or the couple is not nestable.
    """
    if w1.is_zero or w2.is_zero or not nestable(w1, w2):
        return ZERO
    vertices = w1.vertices
    position = len(vertices) - 1 - vertices[::-1].index(w2.head)
    return Walk(vertices[:position] + w2.vertices + vertices[position + 1:])


def nest_all(*walks: Walk) -> Walk:
    """
    Method nests walks left to right: nest_all(a, b, c) == nest(nest(a, b), c).
    """
    if not walks:
        raise ValueError("At least one walk is required")
    return reduce(nest, walks)


def classify(w: Walk) -> WalkClassification:
    """
    Method decides whether a walk is closed, a cycle, a simple cycle or a simple path.
    Trivial walks are closed simple paths but not cycles.
    :param w: Non-zero walk.
    :return: Classification flags.
    """
    if w.is_zero:
        raise ZeroWalkException("The zero walk cannot be classified")
    vertices = w.vertices
    internal = vertices[1:-1]
    is_closed = w.is_closed
    is_cycle = is_closed and not w.is_trivial and w.head not in internal
    return WalkClassification(
        is_closed=is_closed,
        is_cycle=is_cycle,
        is_simple_cycle=is_cycle and len(set(internal)) == len(internal),
        is_simple_path=len(set(vertices)) == len(vertices),
    )


def _star(pieces: Tuple[Walk, ...], start: Walk, budget: int) -> Iterator[Walk]:
    yield start
    for piece in pieces:
        if 0 < piece.length <= budget:
            yield from _star(pieces, start.concat(piece), budget - piece.length)


def kleene_closure(walks: Iterable[Walk], max_len: int,
                   vertex: Optional[str] = None) -> List[Walk]:
    """
    Method returns every concatenation of finitely many of the given closed walks whose
    length does not exceed max_len. The trivial walk is always included.
    :param walks: Closed walks off a common vertex.
    :param max_len: Length bound of the produced walks.
    :param vertex: Common head, required when walks is empty.
    :return: Distinct walks ordered by vertex sequence.
    """
    pieces = tuple(walks)
    heads = {w.head for w in pieces}
    if vertex is not None:
        heads.add(vertex)
    if len(heads) != 1:
        raise MixedHeadsException(f"Expected closed walks off one vertex, got heads "
                                  f"{sorted(heads)}")
    if any(not w.is_closed for w in pieces):
        raise ValueError("Kleene closure is defined for closed walks only")
    start = Walk.trivial(heads.pop())
    return sorted(set(_star(pieces, start, max_len)), key=lambda w: w.vertices)


def star_factory(cycles: WalkFactory, vertex: str) -> WalkFactory:
    """
    Method turns a factory of cycles off vertex into a factory of their Kleene closure.
    """
    def factory(budget: int) -> Iterable[Walk]:
        return _star(tuple(cycles(budget)), Walk.trivial(vertex), budget)

    return factory


def concatenations(factories: Sequence[WalkFactory], vertex: str,
                   max_len: int) -> Iterator[Walk]:
    """
    Method yields every concatenation p_1 p_2 ... p_n of closed walks off vertex where
    p_k comes from factories[k] and the total length fits max_len.
    """
    def expand(index: int, acc: Walk, budget: int) -> Iterator[Walk]:
        if index == len(factories):
            yield acc
            return
        for piece in factories[index](budget):
            if piece.length <= budget:
                yield from expand(index + 1, acc.concat(piece), budget - piece.length)

    yield from expand(0, Walk.trivial(vertex), max_len)


def decorate(base: Walk, hedges: Dict[int, WalkFactory], max_len: int) -> Iterator[Walk]:
    """
    Method yields the walks obtained by replacing base vertices with closed walks off
    them. hedges maps a position of the base to the factory of its replacements; the
    base must visit those positions' vertices only once.
    :param base: Simple path or simple cycle.
    :param hedges: Replacement factories by base position.
    :param max_len: Bound on the length of the produced walks.
    :return: Iterator of decorated walks.
    """
    positions = sorted(hedges)

    def expand(index: int, chosen: Dict[int, Walk], budget: int) -> Iterator[Walk]:
        if index == len(positions):
            vertices: List[str] = []
            for position, vertex in enumerate(base.vertices):
                if position in chosen:
                    vertices.extend(chosen[position].vertices)
                else:
                    vertices.append(vertex)
            yield Walk(tuple(vertices))
            return
        position = positions[index]
        for piece in hedges[position](budget):
            if piece.length <= budget:
                chosen[position] = piece
                yield from expand(index + 1, chosen, budget - piece.length)
        chosen.pop(position, None)

    if base.length <= max_len:
        yield from expand(0, {}, max_len - base.length)
