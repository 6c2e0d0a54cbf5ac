"""Reductions of a GC set with respect to a fixed line.

A reduction step removes either a maximal line meeting the fixed line at no
node (degree drops by one), or two maximal lines whose common node lies on
the fixed line (degree drops by two).  Usage of the fixed line is invariant
under both steps, which makes chains an independent oracle for usage.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .gc_analysis import certify_restriction
from .geometry import Line, intersect
from .nodeset import NodeSet

DISJOINT = "disjoint"
ADJACENT = "adjacent"


class LineIsMaximalError(ValueError):
    pass


class InvalidStepError(ValueError):
    pass


@dataclass(frozen=True)
class ReductionStep:
    kind: str
    lines: tuple[Line, ...]
    removed: frozenset  # removed nodes, as points

    @property
    def delta(self) -> int:
        return len(self.lines)


@dataclass(frozen=True)
class ReductionChain:
    line: Line
    start: NodeSet
    steps: tuple[ReductionStep, ...]
    final_set: NodeSet
    proper: bool

    @property
    def degree(self) -> int:
        return self.final_set.degree

    @property
    def s(self) -> int:
        """Number of nodes of the line left in the final set."""
        return len(self.final_set.nodes_on(self.line))

    def removed_indices(self, step: ReductionStep) -> tuple[int, ...]:
        return tuple(sorted(self.start.index_of(p) for p in step.removed))

    def predicted_users(self) -> frozenset:
        """``Y \\ line`` as indices of the starting set (meaningful when proper)."""
        on = set(self.final_set.nodes_on(self.line))
        return frozenset(
            self.start.index_of(p) for i, p in enumerate(self.final_set) if i not in on
        )


def _nodes_of(X: NodeSet, line: Line) -> set[int]:
    return set(X.nodes_on(line))


def _is_maximal(X: NodeSet, line: Line) -> bool:
    return len(X.nodes_on(line)) == X.degree + 1


def find_disjoint_maximal(X: NodeSet, line: Line) -> list[Line]:
    """Maximal lines sharing no node with ``line`` (parallel counts)."""
    if _is_maximal(X, line):
        raise LineIsMaximalError(f"{line} is maximal in the degree-{X.degree} set")
    on = _nodes_of(X, line)
    return [lam for lam in X.maximal if not (on & _nodes_of(X, lam))]


def _adjacent_pairs(X: NodeSet, line: Line) -> list[tuple[Line, Line]]:
    on = _nodes_of(X, line)
    out = []
    for l1, l2 in combinations(X.maximal, 2):
        if line in (l1, l2):
            continue
        common = _nodes_of(X, l1) & _nodes_of(X, l2) & on
        if common:
            out.append((l1, l2))
    return out


def find_adjacent_pairs(X: NodeSet, line: Line) -> list[tuple[Line, Line]]:
    """Pairs of maximal lines meeting at a node of ``line``; needs 3 <= k <= n."""
    k = len(X.nodes_on(line))
    if not 3 <= k <= X.degree:
        raise ValueError(f"adjacent pairs need 3 <= k <= n, got k={k}, n={X.degree}")
    return _adjacent_pairs(X, line)


def make_step(X: NodeSet, kind: str, lines) -> ReductionStep:
    lines = tuple(lines)
    removed = frozenset(X[i] for l in lines for i in X.nodes_on(l))
    return ReductionStep(kind, lines, removed)


def apply_step(X: NodeSet, step: ReductionStep, line: Line | None = None) -> NodeSet:
    """Remove the step's lines; the result is certified GC of the lower degree."""
    if not all(_is_maximal(X, l) for l in step.lines):
        raise InvalidStepError("step lines are not maximal in the current set")
    if step.kind == DISJOINT and len(step.lines) != 1:
        raise InvalidStepError("a disjoint step removes exactly one line")
    if step.kind == ADJACENT:
        if len(step.lines) != 2:
            raise InvalidStepError("an adjacent step removes exactly two lines")
        p = intersect(*step.lines)
        if p is None or p not in X:
            raise InvalidStepError("adjacent lines do not meet at a node")
        if line is not None and line(p) != 0:
            raise InvalidStepError("adjacent lines do not meet on the reduction line")
    if line is not None and step.kind == DISJOINT:
        if _nodes_of(X, line) & _nodes_of(X, step.lines[0]):
            raise InvalidStepError("disjoint line meets the reduction line at a node")
    Y = X.without_lines(step.lines)
    # removing maximal lines keeps the GC property; a failure here is a bug
    assert certify_restriction(X, Y, step.lines), "reduced set lost the GC property"
    return Y


def _options(X: NodeSet, line: Line) -> list[ReductionStep]:
    k = len(X.nodes_on(line))
    opts = [make_step(X, DISJOINT, (lam,)) for lam in find_disjoint_maximal(X, line)]
    if 3 <= k <= X.degree:
        opts += [make_step(X, ADJACENT, pair) for pair in _adjacent_pairs(X, line)]
    return opts


def reduce_fully(X: NodeSet, line: Line) -> ReductionChain:
    """Greedy chain: disjoint steps first, canonical order, until maximal or stuck."""
    Y, steps = X, []
    while not _is_maximal(Y, line):
        opts = _options(Y, line)
        if not opts:
            break
        step = opts[0]
        Y = apply_step(Y, step, line)
        steps.append(step)
    return ReductionChain(line, X, tuple(steps), Y, _is_maximal(Y, line))


def check_proper(X: NodeSet, line: Line) -> ReductionChain | None:
    """Backtracking search for any chain ending with ``line`` maximal.

    Returns ``None`` when none exists.  Failed intermediate sets are memoised.
    """
    greedy = reduce_fully(X, line)
    if greedy.proper:
        return greedy
    dead: set[NodeSet] = set()

    def search(Y: NodeSet, steps: tuple):
        if _is_maximal(Y, line):
            return steps, Y
        if Y in dead:
            return None
        for step in _options(Y, line):
            found = search(apply_step(Y, step, line), steps + (step,))
            if found is not None:
                return found
        dead.add(Y)
        return None

    found = search(X, ())
    if found is None:
        return None
    steps, Y = found
    return ReductionChain(line, X, steps, Y, True)


def reachable_sets(X: NodeSet, line: Line) -> dict[NodeSet, tuple[ReductionStep, ...]]:
    """Every set reachable by some chain, each with one witnessing step list."""
    seen = {X: ()}
    stack = [X]
    while stack:
        Y = stack.pop()
        if _is_maximal(Y, line):
            continue
        for step in _options(Y, line):
            Z = apply_step(Y, step, line)
            if Z not in seen:
                seen[Z] = seen[Y] + (step,)
                stack.append(Z)
    return seen
