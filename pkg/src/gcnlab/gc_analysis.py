"""GC certification, line usage queries and classification by maximal lines."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .geometry import Line
from .nodeset import NodeSet, NotPoisedError
from .polynomial import BivariatePolynomial, certainly_not_divisible, divide_by_line

log = logging.getLogger(__name__)

GPL = "GPL"
N_MINUS_1_MAX = "NMinus1Max"
N_MAX = "NMax"
CARNICER_GASCA = "CarnicerGasca"
CHUNG_YAO = "ChungYao"
UNCLASSIFIED = "Unclassified"


class NotANodeLineError(ValueError):
    pass


@dataclass(frozen=True)
class Factorization:
    node: int
    lines: tuple[Line, ...]
    scale: Fraction

    def product(self) -> BivariatePolynomial:
        out = BivariatePolynomial.constant(self.scale)
        for line in self.lines:
            out = out * line
        return out


@dataclass(frozen=True)
class UsageSet:
    line: Line
    users: frozenset[int]

    def __len__(self):
        return len(self.users)


@dataclass(frozen=True)
class GCCertificate:
    """Outcome of GC certification; truthy iff every node split into lines."""

    degree: int
    factorizations: dict[int, Factorization]
    failed: tuple[int, ...]
    suspect: tuple[int, ...] = ()
    method: str = "node-line split"

    @property
    def is_gc(self) -> bool:
        return not self.failed

    def __bool__(self):
        return self.is_gc


@dataclass(frozen=True)
class LatticeClass:
    mu: int
    tag: str
    matches: tuple[str, ...] = field(default=())


def _require_poised(X: NodeSet):
    if not X.poised:
        raise NotPoisedError(f"degree-{X.degree} node set is not poised")


def uses_line(X: NodeSet, a: int, line: Line) -> bool:
    """Whether ``line`` divides the fundamental polynomial of node ``a``."""
    _require_poised(X)
    if line(X[a]) == 0:
        # p(A) = 1, so no factor can vanish at A
        return False
    p = X.fundamentals[a]
    if certainly_not_divisible(p, line):
        return False
    return divide_by_line(p, line) is not None


@lru_cache(maxsize=65536)
def used_nodes(X: NodeSet, line: Line) -> UsageSet:
    _require_poised(X)
    return UsageSet(line, frozenset(a for a in range(len(X)) if uses_line(X, a, line)))


def _split_linear(q: BivariatePolynomial) -> tuple[Line, Fraction]:
    a, b, c = q.coeff(1, 0), q.coeff(0, 1), q.coeff(0, 0)
    line = Line(a, b, c)
    ref = next(v for v, w in zip((a, b, c), line.coefficients) if w)
    return line, ref / next(w for w in line.coefficients if w)


def factor_fundamental(X: NodeSet, a: int) -> Factorization | None:
    """Split the fundamental polynomial of node ``a`` into linear factors.

    Searches divisors among the lines through two or more nodes that avoid
    ``a``; the last linear factor may be any line.  Alternatives are tried in
    canonical line order and dead ends are memoised on the set of removed
    factors, which determines the quotient.
    """
    _require_poised(X)
    p = X.fundamentals[a]
    candidates = [nl.line for nl in X.node_lines if a not in nl.incident_nodes]
    dead: set[frozenset] = set()

    def search(q: BivariatePolynomial, used: tuple[Line, ...]):
        if q.degree == 0:
            return used, q.coeff(0, 0)
        if q.degree == 1:
            line, scale = _split_linear(q)
            return used + (line,), scale
        key = frozenset(used)
        if key in dead:
            return None
        for line in candidates:
            if line in used or certainly_not_divisible(q, line):
                continue
            r = divide_by_line(q, line)
            if r is None:
                continue
            found = search(r, used + (line,))
            if found is not None:
                return found
        dead.add(key)
        return None

    found = search(p, ())
    if found is None:
        return None
    lines, scale = found
    return Factorization(a, tuple(sorted(lines)), scale)


_DERIVED: dict[NodeSet, GCCertificate] = {}


@lru_cache(maxsize=4096)
def is_gc_set(X: NodeSet) -> GCCertificate:
    if X in _DERIVED:
        return _DERIVED[X]
    _require_poised(X)
    facs, failed, suspect = {}, [], []
    for a in range(len(X)):
        f = factor_fundamental(X, a)
        if f is None:
            failed.append(a)
            p = X.fundamentals[a]
            if any(
                divide_by_line(p, nl.line) is not None
                for nl in X.node_lines
                if a not in nl.incident_nodes
            ):
                # partial split: a remaining factor might be a line through <= 1 node
                suspect.append(a)
        else:
            facs[a] = f
    if suspect:
        log.warning("partial node-line split at nodes %s; review manually", suspect)
    return GCCertificate(X.degree, facs, tuple(failed), tuple(suspect))


def certify_restriction(X: NodeSet, Y: NodeSet, removed: tuple[Line, ...]) -> GCCertificate:
    """Certify ``Y = X minus removed lines`` from the certificate of X.

    Each removed line is a factor of every surviving node's fundamental
    polynomial; dropping it leaves lines that miss the node and cover all
    other nodes of Y.  Such a family for every node proves Y poised and GC,
    and fixes each scale, so the check needs only incidences.
    """
    if Y in _DERIVED:
        return _DERIVED[Y]
    cert = is_gc_set(X)
    if not cert:
        return GCCertificate(Y.degree, {}, tuple(range(len(Y))), method="restriction")
    facs, failed = {}, []
    gone = set(removed)
    for i, p in enumerate(Y):
        f = cert.factorizations[X.index_of(p)]
        if not gone <= set(f.lines):
            failed.append(i)
            continue
        lines = tuple(l for l in f.lines if l not in gone)
        at = Fraction(1)
        for l in lines:
            at *= l(p)
        covered = all(
            any(l(q) == 0 for l in lines) for j, q in enumerate(Y) if j != i
        )
        if at == 0 or not covered or len(lines) != Y.degree:
            failed.append(i)
            continue
        facs[i] = Factorization(i, lines, 1 / at)
    out = GCCertificate(Y.degree, facs, tuple(failed), method="restriction")
    if out:
        if len(_DERIVED) > 8192:
            _DERIVED.clear()
        _DERIVED[Y] = out
    return out


def sigma(X: NodeSet, line: Line) -> int:
    nl = X.node_line(line)
    if nl is None:
        raise NotANodeLineError(f"{line} passes through fewer than 2 nodes")
    return 2 * nl.node_count - X.degree - 1


def mu(X: NodeSet) -> int:
    return len(X.maximal)


# descending family offset: larger mu-families first
_FAMILIES = (
    (CHUNG_YAO, 2),
    (CARNICER_GASCA, 1),
    (N_MAX, 0),
    (N_MINUS_1_MAX, -1),
)


def classify(X: NodeSet) -> LatticeClass:
    """Tag X by its number of maximal lines.

    Three maximal lines always tag as GPL, since that characterisation is
    exact in every degree; other coincidences resolve to the largest family.
    """
    n, m = X.degree, mu(X)
    matches = [tag for tag, off in _FAMILIES if m == n + off]
    if m == 3:
        matches.append(GPL)
    if not matches:
        return LatticeClass(m, UNCLASSIFIED, ())
    primary = GPL if m == 3 else matches[0]
    return LatticeClass(m, primary, tuple(matches))
