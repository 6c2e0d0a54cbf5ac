"""Node sets of degree n: poisedness, fundamental polynomials, node lines."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from .geometry import Line, Point, line_through
from .linalg import bareiss_determinant, clear_denominators, inverse
from .polynomial import BivariatePolynomial, monomials


class NodeSetError(ValueError):
    pass


class NotPoisedError(NodeSetError):
    pass


def node_count(n: int) -> int:
    return comb(n + 2, 2)


@dataclass(frozen=True)
class NodeLine:
    line: Line
    incident_nodes: tuple[int, ...]

    @property
    def node_count(self) -> int:
        return len(self.incident_nodes)


@dataclass(frozen=True, eq=False)
class NodeSet:
    """An ordered set of distinct nodes meant for interpolation in degree n.

    Construct through :func:`make_node_set`; derived data (collocation
    inverse, node lines) is computed once and cached on the instance.
    """

    degree: int
    nodes: tuple[Point, ...]

    def __eq__(self, other):
        if not isinstance(other, NodeSet):
            return NotImplemented
        return self.degree == other.degree and self.nodes == other.nodes

    def __hash__(self):
        h = self.__dict__.get("_hash")
        if h is None:
            h = hash((self.degree, self.nodes))
            object.__setattr__(self, "_hash", h)
        return h

    def __len__(self):
        return len(self.nodes)

    def __iter__(self):
        return iter(self.nodes)

    def __getitem__(self, i: int) -> Point:
        return self.nodes[i]

    @cached_property
    def _index(self) -> dict[Point, int]:
        return {p: i for i, p in enumerate(self.nodes)}

    def index_of(self, p: Point) -> int:
        return self._index[p]

    def __contains__(self, p: Point) -> bool:
        return p in self._index

    @cached_property
    def collocation(self):
        mons = monomials(self.degree)
        return [[p.x**i * p.y**j for i, j in mons] for p in self.nodes]

    @cached_property
    def poised(self) -> bool:
        return bareiss_determinant(clear_denominators(self.collocation)) != 0

    @cached_property
    def _inverse(self):
        inv = inverse(self.collocation)
        if inv is None:
            raise NotPoisedError(f"node set of degree {self.degree} is not poised")
        return inv

    @cached_property
    def fundamentals(self) -> tuple[BivariatePolynomial, ...]:
        if not self.poised:
            raise NotPoisedError(f"node set of degree {self.degree} is not poised")
        mons = monomials(self.degree)
        inv = self._inverse
        return tuple(
            BivariatePolynomial({m: inv[r][a] for r, m in enumerate(mons)})
            for a in range(len(self.nodes))
        )

    @cached_property
    def node_lines(self) -> tuple[NodeLine, ...]:
        groups: dict[Line, set[int]] = {}
        for i, j in combinations(range(len(self.nodes)), 2):
            groups.setdefault(line_through(self.nodes[i], self.nodes[j]), set()).update((i, j))
        return tuple(
            NodeLine(line, tuple(sorted(groups[line]))) for line in sorted(groups)
        )

    @cached_property
    def _line_index(self) -> dict[Line, NodeLine]:
        return {nl.line: nl for nl in self.node_lines}

    def node_line(self, line: Line) -> NodeLine | None:
        return self._line_index.get(line)

    def nodes_on(self, line: Line) -> tuple[int, ...]:
        nl = self._line_index.get(line)
        if nl is not None:
            return nl.incident_nodes
        return tuple(i for i, p in enumerate(self.nodes) if line(p) == 0)

    @cached_property
    def maximal(self) -> tuple[Line, ...]:
        return tuple(
            nl.line for nl in self.node_lines if nl.node_count == self.degree + 1
        )

    def without(self, removed: Iterable[int], degree: int) -> NodeSet:
        """Sub node set dropping the given indices, re-wrapped at ``degree``."""
        gone = set(removed)
        keep = tuple(p for i, p in enumerate(self.nodes) if i not in gone)
        return make_node_set(degree, keep)

    def without_lines(self, lines: Sequence[Line]) -> NodeSet:
        removed = {i for l in lines for i in self.nodes_on(l)}
        return self.without(removed, self.degree - len(lines))


@lru_cache(maxsize=4096)
def _cached_node_set(degree: int, nodes: tuple[Point, ...]) -> NodeSet:
    return NodeSet(degree, nodes)


def make_node_set(degree: int, points: Iterable[Point]) -> NodeSet:
    """Validate cardinality and distinctness.

    Identical inputs return the same cached instance, so derived data such as
    fundamental polynomials is shared between reductions that meet again.
    """
    if degree < 0:
        raise NodeSetError(f"degree must be nonnegative, got {degree}")
    pts = tuple(p if isinstance(p, Point) else Point(*p) for p in points)
    need = node_count(degree)
    if len(pts) != need:
        raise NodeSetError(f"degree {degree} needs {need} nodes, got {len(pts)}")
    if len(set(pts)) != len(pts):
        raise NodeSetError("duplicate node")
    return _cached_node_set(degree, pts)


def is_poised(X: NodeSet) -> bool:
    return X.poised


def fundamental_polynomial(X: NodeSet, a: int) -> BivariatePolynomial:
    return X.fundamentals[a]


def node_lines(X: NodeSet) -> tuple[NodeLine, ...]:
    return X.node_lines


def maximal_lines(X: NodeSet) -> tuple[Line, ...]:
    return X.maximal
