"""Constructors and structural validators for the GC_n lattice families.

Every constructor assembles its nodes from lines and points, then certifies
the result (poised, GC by node-line splitting, expected number of maximal
lines) before returning.  Recipe conditions that fail raise
:class:`ConstructionError` naming the violated condition.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations
from math import comb
from typing import Sequence

from .gc_analysis import is_gc_set, used_nodes
from .geometry import (
    Line,
    Point,
    collinear,
    general_position,
    incident,
    intersect,
    line_through,
    to_rational,
)
from .nodeset import NodeSet, make_node_set, node_count


class ConstructionError(ValueError):
    pass


class WrongMuError(ValueError):
    pass


@dataclass(frozen=True)
class Mismatch:
    reason: str

    def __bool__(self):
        return False


@dataclass(frozen=True)
class Blueprint:
    family: str
    degree: int
    max_lines: tuple[Line, ...] = ()
    construction_lines: tuple[Line, ...] = ()
    free: tuple[Point, ...] = ()
    outside: tuple[Point, ...] = ()
    o_lines: tuple[Line, ...] = ()
    oo_lines: tuple[Line, ...] = ()
    special: tuple[Point, ...] = ()
    distinguished: Line | None = None
    m: int = 0
    extra: dict = field(default_factory=dict, compare=False)

    def to_json(self) -> dict:
        pts = lambda ps: [p.to_strings() for p in ps]
        lns = lambda ls: [l.to_strings() for l in ls]
        out = {
            "family": self.family,
            "degree": self.degree,
            "max_lines": lns(self.max_lines),
            "construction_lines": lns(self.construction_lines),
            "free_nodes": pts(self.free),
            "outside_nodes": pts(self.outside),
            "o_lines": lns(self.o_lines),
            "oo_lines": lns(self.oo_lines),
            "special_nodes": pts(self.special),
            "distinguished_line": self.distinguished.to_strings() if self.distinguished else None,
            "m": self.m,
        }
        return out


@dataclass(frozen=True)
class Construction:
    nodes: NodeSet
    line: Line | None
    blueprint: Blueprint

    def __iter__(self):
        yield self.nodes
        yield self.line


@dataclass(frozen=True)
class PencilTriple:
    families: tuple[tuple[Line, ...], tuple[Line, ...], tuple[Line, ...]]

    @property
    def degree(self) -> int:
        return len(self.families[0]) - 1


def _pt(v) -> Point:
    return v if isinstance(v, Point) else Point(*(to_rational(c) for c in v))


def _ln(v) -> Line:
    return v if isinstance(v, Line) else Line(*(to_rational(c) for c in v))


def _meet(l1: Line, l2: Line, what: str) -> Point:
    if l1 == l2:
        raise ConstructionError(f"{what}: lines coincide")
    p = intersect(l1, l2)
    if p is None:
        raise ConstructionError(f"{what}: lines are parallel")
    return p


def _join(p: Point, q: Point, what: str) -> Line:
    if p == q:
        raise ConstructionError(f"{what}: points coincide")
    return line_through(p, q)


def _certify(X: NodeSet, mu: int, family: str) -> None:
    if not X.poised:
        raise ConstructionError(f"{family}: assembled node set is not poised")
    if len(X.maximal) != mu:
        raise ConstructionError(
            f"{family}: expected {mu} maximal lines, found {len(X.maximal)}"
        )
    if not is_gc_set(X):
        raise ConstructionError(f"{family}: fundamental polynomials do not split")


def _assemble(degree: int, points: Sequence[Point], family: str) -> NodeSet:
    pts = list(points)
    if len(set(pts)) != len(pts):
        dup = next(p for p in pts if pts.count(p) > 1)
        raise ConstructionError(f"{family}: coincident nodes at {dup}")
    if len(pts) != node_count(degree):
        raise ConstructionError(
            f"{family}: {len(pts)} nodes assembled, degree {degree} needs {node_count(degree)}"
        )
    return make_node_set(degree, pts)


def _pairwise_intersections(lines: Sequence[Line]) -> list[Point]:
    return [intersect(l1, l2) for l1, l2 in combinations(lines, 2)]


# --- Chung-Yao and Carnicer-Gasca ------------------------------------------


def chung_yao(lines: Sequence[Line]) -> NodeSet:
    """All pairwise intersections of n+2 lines in general position."""
    lines = [_ln(l) for l in lines]
    if len(lines) < 3:
        raise ConstructionError("Chung-Yao lattice needs at least 3 lines")
    if not general_position(lines):
        raise ConstructionError("Chung-Yao lines are not in general position")
    X = make_node_set(len(lines) - 2, _pairwise_intersections(lines))
    return X


def carnicer_gasca(lines: Sequence[Line], free: Sequence[Point]) -> NodeSet:
    """Intersections of n+1 general lines plus one free node on each line."""
    lines = [_ln(l) for l in lines]
    free = [_pt(p) for p in free]
    n = len(lines) - 1
    if n < 2:
        raise ConstructionError("Carnicer-Gasca lattice needs at least 3 lines")
    if len(free) != len(lines):
        raise ConstructionError("need exactly one free node per line")
    if not general_position(lines):
        raise ConstructionError("Carnicer-Gasca lines are not in general position")
    cross = _pairwise_intersections(lines)
    for i, (line, p) in enumerate(zip(lines, free)):
        if not incident(line, p):
            raise ConstructionError(f"free node {p} is not on line {i}")
        if sum(incident(l, p) for l in lines) != 1:
            raise ConstructionError(f"free node {p} lies on more than one line")
    if set(free) & set(cross):
        raise ConstructionError("free node coincides with an intersection node")
    if collinear(free):
        raise ConstructionError("free nodes are collinear")
    return make_node_set(n, cross + free)


# --- principal and generalized principal lattices --------------------------


def principal_lattice(n: int) -> NodeSet:
    if n < 1:
        raise ConstructionError("degree must be at least 1")
    return make_node_set(n, [Point(i, j) for j in range(n + 1) for i in range(n + 1 - j)])


def principal_pencils(n: int) -> PencilTriple:
    """x = i, y = j, x + y = n - k, each indexed 0..n."""
    return PencilTriple(
        (
            tuple(Line(1, 0, -i) for i in range(n + 1)),
            tuple(Line(0, 1, -j) for j in range(n + 1)),
            tuple(Line(1, 1, -(n - k)) for k in range(n + 1)),
        )
    )


def _adjugate(m):
    (a, b, c), (d, e, f), (g, h, i) = m
    return [
        [e * i - f * h, c * h - b * i, b * f - c * e],
        [f * g - d * i, a * i - c * g, c * d - a * f],
        [d * h - e * g, b * g - a * h, a * e - b * d],
    ]


def projective_image(pencils: PencilTriple, matrix) -> PencilTriple:
    """Map every line through the point map ``(x, y, 1) -> matrix @ (x, y, 1)``.

    Lines transform by the adjugate, ``L' = L * adj(M)``.  An affine map is
    the special case with last row ``(0, 0, 1)``.
    """
    m = [[to_rational(v) for v in row] for row in matrix]
    adj = _adjugate(m)

    def image(l: Line) -> Line:
        row = l.coefficients
        return Line(*(sum(row[k] * adj[k][j] for k in range(3)) for j in range(3)))

    return PencilTriple(tuple(tuple(image(l) for l in fam) for fam in pencils.families))


def generalized_principal(pencils: PencilTriple) -> NodeSet:
    """Nodes ``l_i^0 ∩ l_j^1 ∩ l_k^2`` for ``i + j + k = n``."""
    fam = pencils.families
    n = pencils.degree
    if n < 1 or any(len(f) != n + 1 for f in fam):
        raise ConstructionError("each pencil needs n+1 lines, n >= 1")
    every = [l for f in fam for l in f]
    if len(set(every)) != len(every):
        raise ConstructionError("the 3n+3 pencil lines are not distinct")
    nodes = []
    for i in range(n + 1):
        for j in range(n + 1 - i):
            k = n - i - j
            p = intersect(fam[0][i], fam[1][j]) if fam[0][i] != fam[1][j] else None
            if p is None or not incident(fam[2][k], p):
                raise ConstructionError(f"triple ({i},{j},{k}) is not concurrent")
            nodes.append(p)
    if len(set(nodes)) != len(nodes):
        raise ConstructionError("triple-intersection nodes coincide")
    for p in nodes:
        for r, f in enumerate(fam):
            if sum(incident(l, p) for l in f) != 1:
                raise ConstructionError(f"node {p} is not on exactly one line of pencil {r}")
    return make_node_set(n, nodes)


# --- n maximal lines (outside node O) -------------------------------------


def n_max_lattice(
    max_lines: Sequence[Line],
    outside: Point,
    o_lines: Sequence[Line],
    dropped: Sequence[int],
    family: str = "n-max",
) -> Construction:
    """GC_n set with n maximal lines and one outside node ``O``.

    Free nodes of maximal line ``i`` are its meets with the two lines through
    ``O`` other than ``o_lines[dropped[i]]``.
    """
    lams = [_ln(l) for l in max_lines]
    O = _pt(outside)
    olines = [_ln(l) for l in o_lines]
    n = len(lams)
    if n < 3 or len(olines) != 3 or len(dropped) != n:
        raise ConstructionError(f"{family}: need n >= 3 maximal lines, 3 O-lines, n drop indices")
    if len(set(lams)) != n or not general_position(lams):
        raise ConstructionError(f"{family}: maximal lines are not in general position")
    if len(set(olines)) != 3 or not all(incident(l, O) for l in olines):
        raise ConstructionError(f"{family}: the three O-lines must be distinct and pass through O")
    if any(incident(l, O) for l in lams):
        raise ConstructionError(f"{family}: outside node lies on a maximal line")
    cross = _pairwise_intersections(lams)
    meets = {}
    for i, lam in enumerate(lams):
        for j, ol in enumerate(olines):
            meets[i, j] = _meet(lam, ol, f"{family}: maximal line {i} and O-line {j}")
    if len(set(meets.values())) != 3 * n or set(meets.values()) & set(cross):
        raise ConstructionError(
            f"{family}: maximal lines must meet the O-lines at {3 * n} distinct new points"
        )
    free = [meets[i, j] for i in range(n) for j in range(3) if j != dropped[i]]
    X = _assemble(n, cross + free + [O], family)
    for ol in olines:
        if len(X.nodes_on(ol)) >= n + 1:
            raise ConstructionError(f"{family}: O-line {ol} would carry n+1 nodes")
    bp = Blueprint(
        family,
        n,
        max_lines=tuple(lams),
        free=tuple(free),
        outside=(O,),
        o_lines=tuple(olines),
        extra={"dropped": list(dropped)},
    )
    return Construction(X, None, bp)


def verify_n_max(X: NodeSet) -> Blueprint | Mismatch:
    """Recover the outside-node structure of a set with exactly n maximal lines."""
    n = X.degree
    lams = X.maximal
    if n < 3 or len(lams) != n:
        raise WrongMuError(f"needs n >= 3 and exactly n maximal lines (n={n}, mu={len(lams)})")
    if not general_position(lams):
        return Mismatch("maximal lines are not in general position")
    on = {i: sum(incident(l, p) for l in lams) for i, p in enumerate(X)}
    outside = [X[i] for i, c in on.items() if c == 0]
    if len(outside) != 1:
        return Mismatch(f"expected 1 outside node, found {len(outside)}")
    O = outside[0]
    free = [X[i] for i, c in on.items() if c == 1]
    if len(free) != 2 * n:
        return Mismatch(f"expected {2 * n} free nodes, found {len(free)}")
    groups: dict[Line, list[Point]] = {}
    for p in free:
        groups.setdefault(line_through(O, p), []).append(p)
    if len(groups) != 3:
        return Mismatch(f"free nodes span {len(groups)} lines through O, not 3")
    olines = tuple(sorted(groups))
    for ol in olines:
        if len(X.nodes_on(ol)) >= n + 1:
            return Mismatch(f"O-line {ol} contains n+1 nodes")
    dropped = []
    for lam in lams:
        hit = [j for j, ol in enumerate(olines) if any(incident(lam, p) for p in groups[ol])]
        missing = [j for j in range(3) if j not in hit]
        dropped.append(missing[0] if len(missing) == 1 else None)
    return Blueprint(
        "n-max",
        n,
        max_lines=lams,
        free=tuple(free),
        outside=(O,),
        o_lines=olines,
        extra={"dropped": dropped},
    )


# --- n-1 maximal lines (outside nodes O1, O2, O3) ---------------------------


def _oo_lines(outside: Sequence[Point]) -> tuple[Line, Line, Line]:
    o1, o2, o3 = outside
    return (
        _join(o2, o3, "OO-line 1"),
        _join(o1, o3, "OO-line 2"),
        _join(o1, o2, "OO-line 3"),
    )


def n_minus_1_max_lattice(
    max_lines: Sequence[Line],
    outside: Sequence[Point],
    special: Sequence[Point],
    family: str = "n-1-max",
) -> Construction:
    """GC_n set with n-1 maximal lines and outside nodes ``O1, O2, O3``.

    ``special[i]`` is the free node of ``max_lines[i]`` (i < 3) off the OO
    lines; every other free node is a meet of a maximal line with an OO line,
    skipping ``oo_i ∩ max_lines[i]``.
    """
    lams = [_ln(l) for l in max_lines]
    outs = [_pt(p) for p in outside]
    spec = [_pt(p) for p in special]
    n = len(lams) + 1
    if n < 4 or len(outs) != 3 or len(spec) != 3:
        raise ConstructionError(f"{family}: need >= 3 maximal lines, 3 outside and 3 special nodes")
    if len(set(lams)) != len(lams) or not general_position(lams):
        raise ConstructionError(f"{family}: maximal lines are not in general position")
    if collinear(outs) or len(set(outs)) != 3:
        raise ConstructionError(f"{family}: outside nodes are collinear")
    for i, p in enumerate(spec):
        if not incident(lams[i], p):
            raise ConstructionError(f"{family}: special node {i + 1} is not on maximal line {i + 1}")
    for p in outs:
        if any(incident(l, p) for l in lams):
            raise ConstructionError(f"{family}: outside node {p} lies on a maximal line")
    o1, o2, o3 = outs
    a1, a2, a3 = spec
    for name, tri in (("O1,A2,A3", (o1, a2, a3)), ("O2,A1,A3", (o2, a1, a3)), ("O3,A1,A2", (o3, a1, a2))):
        if not collinear(tri):
            raise ConstructionError(f"{family}: triple {{{name}}} is not collinear")
    oo = _oo_lines(outs)
    cross = _pairwise_intersections(lams)
    for i, ol in enumerate(oo):
        for (j, lj), (k, lk) in combinations(enumerate(lams), 2):
            if incident(ol, intersect(lj, lk)):
                raise ConstructionError(
                    f"{family}: OO-line {i + 1} passes through the intersection of "
                    f"maximal lines {j + 1} and {k + 1}"
                )
    free = []
    for i, ol in enumerate(oo):
        for j, lam in enumerate(lams):
            p = _meet(ol, lam, f"{family}: OO-line {i + 1} and maximal line {j + 1}")
            if j == i:
                if p in cross or p in spec:
                    raise ConstructionError(
                        f"{family}: OO-line {i + 1} meets maximal line {i + 1} at a node"
                    )
                continue
            free.append(p)
    pts = cross + spec + free + outs
    X = _assemble(n, pts, family)
    bp = Blueprint(
        family,
        n,
        max_lines=tuple(lams),
        free=tuple(spec) + tuple(free),
        outside=tuple(outs),
        oo_lines=oo,
        special=tuple(spec),
    )
    return Construction(X, None, bp)


def verify_n_minus_1_max(X: NodeSet) -> Blueprint | Mismatch:
    """Recover the O1/O2/O3 structure of a set with exactly n-1 maximal lines.

    Tries every labelling of outside and special nodes.
    """
    n = X.degree
    lams = X.maximal
    if n < 4 or len(lams) != n - 1:
        raise WrongMuError(f"needs n >= 4 and exactly n-1 maximal lines (n={n}, mu={len(lams)})")
    if not general_position(lams):
        return Mismatch("maximal lines are not in general position")
    cross = set(_pairwise_intersections(lams))
    on = {p: [l for l in lams if incident(l, p)] for p in X}
    outside = [p for p in X if not on[p]]
    if len(outside) != 3:
        return Mismatch(f"expected 3 outside nodes, found {len(outside)}")
    if collinear(outside):
        return Mismatch("outside nodes are collinear")
    free = [p for p in X if len(on[p]) == 1]
    if len(free) != 3 * (n - 1):
        return Mismatch(f"expected {3 * (n - 1)} free nodes, found {len(free)}")
    reason = "no labelling satisfies the conditions"
    for outs in permutations(outside):
        oo = _oo_lines(outs)
        off = [p for p in free if not any(incident(l, p) for l in oo)]
        if len(off) != 3:
            reason = f"{len(off)} free nodes off the OO lines, expected 3"
            continue
        for spec in permutations(off):
            order = [on[p][0] for p in spec]
            if len(set(order)) != 3:
                reason = "special nodes share a maximal line"
                continue
            ordered = order + [l for l in lams if l not in order]
            ok = True
            for i, ol in enumerate(oo):
                cnt = sum(1 for p in free if incident(ol, p))
                if cnt != n - 2:
                    ok, reason = False, f"OO-line {i + 1} carries {cnt} free nodes, expected {n - 2}"
                    break
                p = intersect(ol, ordered[i]) if ol != ordered[i] else None
                if p is not None and p in X:
                    ok, reason = False, f"OO-line {i + 1} meets maximal line {i + 1} at a node"
                    break
            if not ok:
                continue
            o1, o2, o3 = outs
            a1, a2, a3 = spec
            if not (collinear((o1, a2, a3)) and collinear((o2, a1, a3)) and collinear((o3, a1, a2))):
                reason = "special/outside triples are not collinear"
                continue
            return Blueprint(
                "n-1-max",
                n,
                max_lines=tuple(ordered),
                free=tuple(free),
                outside=tuple(outs),
                oo_lines=oo,
                special=tuple(spec),
                extra={"intersections": sorted(cross)},
            )
    return Mismatch(reason)


# --- the unused-line configurations ----------------------------------------

Y_STAR_DROPPED = (2, 0, 1)  # lambda_i keeps free nodes on o-lines i and i+1 (cyclic)


def construct_y_star(params: dict) -> Construction:
    """GC_3 set with three maximal lines and an unused 3-node line.

    ``params``: ``outside``; ``o_line_points`` (three points, one per line
    through O); ``lambda1``, ``lambda2``; ``lambda3_point`` (a second point
    of the third maximal line, which passes through A3).
    """
    fam = "y-star"
    O = _pt(params["outside"])
    olines = [_join(O, _pt(q), f"{fam}: O-line") for q in params["o_line_points"]]
    if len(set(olines)) != 3:
        raise ConstructionError(f"{fam}: O-lines are not distinct")
    lam1, lam2 = _ln(params["lambda1"]), _ln(params["lambda2"])
    a1 = _meet(lam1, olines[0], f"{fam}: A1")
    a2 = _meet(lam2, olines[1], f"{fam}: A2")
    star = _join(a1, a2, f"{fam}: line through A1 and A2")
    a3 = _meet(star, olines[2], f"{fam}: A3")
    lam3 = _join(a3, _pt(params["lambda3_point"]), f"{fam}: third maximal line")
    lams = [lam1, lam2, lam3]
    if len(set(lams)) != 3 or not general_position(lams):
        raise ConstructionError(f"{fam}: maximal lines are concurrent or parallel")
    con = n_max_lattice(lams, O, olines, Y_STAR_DROPPED, fam)
    X = con.nodes
    if len(X.nodes_on(star)) != 3:
        raise ConstructionError(f"{fam}: distinguished line carries {len(X.nodes_on(star))} nodes, not 3")
    _certify(X, 3, fam)
    bp = _with(con.blueprint, distinguished=star, special=(a1, a2, a3))
    return Construction(X, star, bp)


def _with(bp: Blueprint, **changes) -> Blueprint:
    d = {f: getattr(bp, f) for f in bp.__dataclass_fields__}
    d.update(changes)
    return Blueprint(**d)


def x_star_points(params: dict) -> dict:
    """Run the straightedge recipe for the GC_5 set, returning named objects."""
    fam = "x-star"
    lam1, lam2, lam3 = (_ln(params[k]) for k in ("lambda1", "lambda2", "lambda3"))
    if len({lam1, lam2, lam3}) != 3 or not general_position([lam1, lam2, lam3]):
        raise ConstructionError(f"{fam}: first three maximal lines are concurrent or parallel")
    o2 = _pt(params["o2"])
    oo1 = _join(o2, _pt(params["oo1_point"]), f"{fam}: OO-line 1")
    oo3 = _join(o2, _pt(params["oo3_point"]), f"{fam}: OO-line 3")
    six = [_meet(ol, lam, f"{fam}: OO-line/maximal line") for ol in (oo1, oo3) for lam in (lam1, lam2, lam3)]
    if len(set(six)) != 6 or set(six) & set(_pairwise_intersections([lam1, lam2, lam3])):
        raise ConstructionError(f"{fam}: OO-lines 1 and 3 must meet the maximal lines at 6 distinct points")
    b = _meet(oo1, lam3, f"{fam}: B")
    c = _meet(oo3, lam2, f"{fam}: C")
    star = _join(b, c, f"{fam}: line through B and C")
    a11 = _meet(star, lam1, f"{fam}: A11")
    a33 = _meet(_join(o2, a11, f"{fam}: line O2-A11"), lam3, f"{fam}: A33")
    a22 = _pt(params["a22"])
    if not incident(lam2, a22):
        raise ConstructionError(f"{fam}: A22 is not on the second maximal line")
    o1 = _meet(_join(a22, a33, f"{fam}: line A22-A33"), oo3, f"{fam}: O1")
    o3 = _meet(_join(a22, a11, f"{fam}: line A22-A11"), oo1, f"{fam}: O3")
    oo2 = _join(o1, o3, f"{fam}: OO-line 2")
    d = _meet(oo2, star, f"{fam}: D")
    lam4 = _join(d, _pt(params["lambda4_point"]), f"{fam}: fourth maximal line")
    return dict(
        lambdas=(lam1, lam2, lam3, lam4),
        outside=(o1, o2, o3),
        special=(a11, a22, a33),
        oo=(oo1, oo2, oo3),
        star=star,
        b=b,
        c=c,
        d=d,
    )


def construct_x_star(params: dict) -> Construction:
    """GC_5 set with four maximal lines and an unused 4-node line.

    ``params``: ``lambda1..3``; ``o2``; ``oo1_point``, ``oo3_point`` (second
    points of the OO lines through O2); ``a22`` (a point of the second
    maximal line); ``lambda4_point`` (second point of the fourth maximal
    line, which passes through D).
    """
    fam = "x-star"
    r = x_star_points(params)
    con = n_minus_1_max_lattice(r["lambdas"], r["outside"], r["special"], fam)
    X = con.nodes
    oo = con.blueprint.oo_lines
    if tuple(oo) != tuple(r["oo"]):
        raise ConstructionError(f"{fam}: recipe OO-lines disagree with outside nodes")
    star = r["star"]
    if len(X.nodes_on(star)) != 4:
        raise ConstructionError(f"{fam}: distinguished line carries {len(X.nodes_on(star))} nodes, not 4")
    _certify(X, 4, fam)
    bp = _with(con.blueprint, distinguished=star)
    return Construction(X, star, bp)


@dataclass(frozen=True)
class PappusProbe:
    d: Point
    o2: Point
    o3: Point
    collinear: bool
    rejected: bool
    reason: str


def pappus_probe(params: dict) -> PappusProbe:
    """Build the degenerate configuration where the 4-node line meets the
    fourth maximal line on OO-line 1, and try to assemble it.

    ``params``: ``lambda2``, ``lambda3``, ``oo2``, ``oo3`` (lines);
    ``a11_t`` (parameter of A11 on the line through E and F);
    ``transversal_point`` (with O1 it fixes the line carrying A22, A33);
    ``lambda1_point``, ``lambda4_point``.
    """
    fam = "pappus-probe"
    lam2, lam3 = _ln(params["lambda2"]), _ln(params["lambda3"])
    oo2, oo3 = _ln(params["oo2"]), _ln(params["oo3"])
    o1 = _meet(oo2, oo3, f"{fam}: O1")
    e = _meet(oo2, lam3, f"{fam}: E")
    f = _meet(oo3, lam2, f"{fam}: F")
    ell = _join(e, f, f"{fam}: line through E and F")
    a11 = ell.point_at(params["a11_t"])
    t = _join(o1, _pt(params["transversal_point"]), f"{fam}: transversal")
    a22 = _meet(t, lam2, f"{fam}: A22")
    a33 = _meet(t, lam3, f"{fam}: A33")
    o3 = _meet(_join(a11, a22, f"{fam}: A11-A22"), oo2, f"{fam}: O3")
    o2 = _meet(_join(a11, a33, f"{fam}: A11-A33"), oo3, f"{fam}: O2")
    d = _meet(lam2, lam3, f"{fam}: D")
    is_col = collinear((d, o2, o3))
    oo1 = _join(o2, o3, f"{fam}: OO-line 1")
    b = _meet(ell, oo1, f"{fam}: B")
    lam1 = _join(a11, _pt(params["lambda1_point"]), f"{fam}: maximal line 1")
    lam4 = _join(b, _pt(params["lambda4_point"]), f"{fam}: maximal line 4")
    try:
        con = n_minus_1_max_lattice([lam1, lam2, lam3, lam4], [o1, o2, o3], [a11, a22, a33], fam)
        _certify(con.nodes, 4, fam)
    except (ConstructionError, ValueError) as exc:
        return PappusProbe(d, o2, o3, is_col, True, str(exc))
    return PappusProbe(d, o2, o3, is_col, False, "")


# --- m-modifications --------------------------------------------------------


def m_modification(
    base: tuple[NodeSet, Line] | Construction,
    m: int,
    new_line_pairs: Sequence[tuple[Line, Line]],
    dropped: Sequence[int] | None = None,
) -> Construction:
    """Add m pairs of maximal lines meeting on the distinguished line.

    The base structure is recovered from the node set: three maximal lines
    in degree 3 (outside node O), or four in degree 5 (O1, O2, O3).  For an
    O-type base each new line keeps two of its three meets with the O-lines;
    ``dropped`` (2m indices) picks the one left out.
    """
    X, star = tuple(base)[:2]
    pairs = [(_ln(p), _ln(q)) for p, q in new_line_pairs]
    if m < 0 or len(pairs) != m:
        raise ConstructionError(f"need exactly m={m} line pairs")
    n = X.degree
    if X.degree == 3 and len(X.maximal) == 3:
        kind = "y"
        bp = verify_n_max(X)
    elif X.degree == 5 and len(X.maximal) == 4:
        kind = "x"
        bp = verify_n_minus_1_max(X)
    else:
        raise ConstructionError("base must be the 3-max GC_3 or the 4-max GC_5 configuration")
    if not bp:
        raise ConstructionError(f"base structure not recognised: {bp.reason}")
    if m == 0:
        return Construction(X, star, _with(bp, distinguished=star, family=f"{kind}-star-mod"))
    on_star = set(X.nodes_on(star))
    new = []
    for i, (p, q) in enumerate(pairs):
        b = _meet(p, q, f"pair {i + 1}")
        if not incident(star, b):
            raise ConstructionError(f"pair {i + 1} does not meet on the distinguished line")
        if b in X:
            raise ConstructionError(f"pair {i + 1} meets at an existing node")
        new += [p, q]
    lams = list(bp.max_lines) + new
    if len(set(lams)) != len(lams) or not general_position(lams):
        raise ConstructionError("condition (i): maximal lines are not in general position")
    fam = f"{kind}-star-mod"
    if kind == "y":
        drops = list(dropped) if dropped is not None else [(i % 3) for i in range(2 * m)]
        if len(drops) != 2 * m:
            raise ConstructionError("need one drop index per new line")
        try:
            con = n_max_lattice(lams, bp.outside[0], bp.o_lines, list(bp.extra["dropped"]) + drops, fam)
        except ConstructionError as exc:
            raise ConstructionError(f"condition (ii): {exc}") from exc
        degree, mu, k = 2 * m + 3, 2 * m + 3, m + 3
    else:
        try:
            con = n_minus_1_max_lattice(lams, bp.outside, bp.special, fam)
        except ConstructionError as exc:
            raise ConstructionError(f"condition (ii): {exc}") from exc
        degree, mu, k = 2 * m + 5, 2 * m + 4, m + 4
    Y = con.nodes
    assert Y.degree == degree
    if len(Y.nodes_on(star)) != k:
        raise ConstructionError(f"{fam}: distinguished line carries {len(Y.nodes_on(star))} nodes, expected {k}")
    _certify(Y, mu, fam)
    return Construction(Y, star, _with(con.blueprint, distinguished=star, m=m, family=fam))


# --- parameter search ---------------------------------------------------------


def _rand_q(rng: random.Random, lo=-6, hi=6, dens=(1, 2, 3)) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.choice(dens))


def _rand_line(rng: random.Random):
    while True:
        a, b, c = rng.randint(-4, 4), rng.randint(-4, 4), rng.randint(-8, 8)
        if a or b:
            return [a, b, c]


def random_y_star_params(rng: random.Random) -> dict:
    return {
        "outside": [_rand_q(rng), _rand_q(rng)],
        "o_line_points": [[_rand_q(rng), _rand_q(rng)] for _ in range(3)],
        "lambda1": _rand_line(rng),
        "lambda2": _rand_line(rng),
        "lambda3_point": [_rand_q(rng), _rand_q(rng)],
    }


def random_x_star_params(rng: random.Random) -> dict:
    lam2 = Line(*_rand_line(rng))
    return {
        "lambda1": _rand_line(rng),
        "lambda2": list(lam2.coefficients),
        "lambda3": _rand_line(rng),
        "o2": [_rand_q(rng), _rand_q(rng)],
        "oo1_point": [_rand_q(rng), _rand_q(rng)],
        "oo3_point": [_rand_q(rng), _rand_q(rng)],
        "a22": lam2.point_at(_rand_q(rng)).to_strings(),
        "lambda4_point": [_rand_q(rng), _rand_q(rng)],
    }


def search_params(family: str, seed: int, tries: int = 2000) -> dict:
    """First random parameter set (small-height rationals) the recipe accepts."""
    rng = random.Random(seed)
    gen, build = {
        "y-star": (random_y_star_params, construct_y_star),
        "x-star": (random_x_star_params, construct_x_star),
    }[family]
    for _ in range(tries):
        params = gen(rng)
        try:
            build(params)
        except (ConstructionError, ValueError, ZeroDivisionError):
            continue
        return _jsonable(params)
    raise ConstructionError(f"no valid {family} parameters in {tries} tries (seed {seed})")


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def random_pairs(star: Line, m: int, rng: random.Random) -> list[list[list]]:
    """m line pairs, each meeting at a random point of ``star``."""
    out = []
    for _ in range(m):
        b = star.point_at(_rand_q(rng))
        pair = []
        while len(pair) < 2:
            q = Point(b.x + rng.randint(-3, 3), b.y + rng.randint(-3, 3))
            if q != b and not incident(star, q):
                pair.append(list(line_through(b, q).coefficients))
        out.append(pair)
    return out


def search_pairs(base, m: int, seed: int, tries: int = 500) -> list:
    """First random set of m pairs for which the modification validates."""
    rng = random.Random(seed)
    star = tuple(base)[1]
    for _ in range(tries):
        pairs = random_pairs(star, m, rng)
        try:
            m_modification(base, m, pairs)
        except (ConstructionError, ValueError):
            continue
        return _jsonable(pairs)
    raise ConstructionError(f"no valid {m}-modification pairs in {tries} tries (seed {seed})")
