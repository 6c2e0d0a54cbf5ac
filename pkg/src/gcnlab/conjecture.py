"""Falsifiable checks of the usage conjecture for node lines of GC sets.

For a k-node line with ``sigma = 2k - n - 1`` the checked clauses are

* (a) the line is unused, or used by ``C(s, 2)`` nodes with
  ``sigma <= s <= k``, realised by a reduction chain ending in a set where
  the line is maximal with ``s`` nodes;
* (b) if ``sigma >= 3`` and there are more than three maximal lines, the
  line is used;
* (c) each maximal line holds 0 or ``s - 1`` users (vacuous when unused).

Violations are reported as findings, never raised.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import comb, isqrt

from .gc_analysis import LatticeClass, NotANodeLineError, classify, used_nodes
from .geometry import Line
from .lattices import Blueprint, Mismatch, verify_n_max, verify_n_minus_1_max
from .nodeset import NodeSet
from .reduction import (
    ReductionChain,
    _adjacent_pairs,
    apply_step,
    check_proper,
    find_disjoint_maximal,
    make_step,
    ADJACENT,
)

PASS, FAIL, VACUOUS = "pass", "fail", "vacuous"


class PreconditionError(ValueError):
    pass


def triangular_root(t: int) -> int | None:
    """The s >= 2 with C(s, 2) == t, if any."""
    if t <= 0:
        return None
    s = (1 + isqrt(1 + 8 * t)) // 2
    return s if comb(s, 2) == t else None


@dataclass(frozen=True)
class LineUsageReport:
    line: Line
    k: int
    sigma: int
    users: frozenset[int]
    recovered_s: int | None
    proper_chain: ReductionChain | None
    per_maximal: dict[Line, int]
    clauses: dict[str, str]
    findings: tuple[str, ...] = ()

    @property
    def usage_size(self) -> int:
        return len(self.users)

    @property
    def passed(self) -> bool:
        return FAIL not in self.clauses.values()


@dataclass(frozen=True)
class SetReport:
    degree: int
    mu: int
    classification: LatticeClass
    lines: tuple[LineUsageReport, ...]

    @property
    def findings(self) -> list[str]:
        return [f"{r.line}: {f}" for r in self.lines for f in r.findings]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.lines)


def analyze_line(X: NodeSet, line: Line) -> LineUsageReport:
    nl = X.node_line(line)
    if nl is None:
        raise NotANodeLineError(f"{line} passes through fewer than 2 nodes")
    n, k = X.degree, nl.node_count
    sig = 2 * k - n - 1
    mu = len(X.maximal)
    users = used_nodes(X, line).users
    size = len(users)
    s = triangular_root(size)
    chain = check_proper(X, line)
    per_max = {lam: sum(1 for i in X.nodes_on(lam) if i in users) for lam in X.maximal}
    findings = []

    if size == 0:
        a = PASS
    elif s is None:
        a = FAIL
        findings.append(f"usage size {size} is not C(s,2)")
    elif not sig <= s <= k:
        a = FAIL
        findings.append(f"s={s} outside [{sig}, {k}]")
    elif chain is None:
        a = FAIL
        findings.append("used line has no proper reduction chain")
    elif chain.s != s or chain.predicted_users() != users:
        a = FAIL
        findings.append(f"chain ends with {chain.s} nodes on the line, usage says s={s}")
    else:
        a = PASS

    if sig >= 3 and mu > 3:
        b = PASS if size else FAIL
        if not size:
            findings.append(f"unused line with sigma={sig} and mu={mu}")
    else:
        b = VACUOUS

    if size == 0:
        c = VACUOUS
    elif s is None:
        c = FAIL
    else:
        bad = {lam: v for lam, v in per_max.items() if v not in (0, s - 1)}
        c = FAIL if bad else PASS
        for lam, v in bad.items():
            findings.append(f"maximal line {lam} holds {v} users, expected 0 or {s - 1}")

    return LineUsageReport(
        line, k, sig, users, s, chain, per_max, {"a": a, "b": b, "c": c}, tuple(findings)
    )


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("GCNLAB_THREADS", "1")))
    except ValueError:
        return 1


def verify_set(X: NodeSet, threads: int | None = None) -> SetReport:
    """Analyse every node line; report order follows the canonical line order."""
    lines = [nl.line for nl in X.node_lines]
    workers = threads or _threads()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(lambda l: analyze_line(X, l), lines))
    else:
        reports = [analyze_line(X, l) for l in lines]
    return SetReport(X.degree, len(X.maximal), classify(X), tuple(reports))


@dataclass(frozen=True)
class DichotomyVerdict:
    """Outcome of the n-node (or degree-3, 3-node) line characterisation."""

    usage_size: int
    case: str
    disjoint: tuple[Line, ...]
    adjacent: tuple[tuple[Line, Line], ...]
    passed: bool
    detail: str = ""

    def __bool__(self):
        return self.passed


def _identity(X: NodeSet, users, lines) -> bool:
    gone = {i for l in lines for i in X.nodes_on(l)}
    return set(users) == set(range(len(X))) - gone


def _characterise(X: NodeSet, line: Line, big: int, small: int):
    users = used_nodes(X, line).users
    size = len(users)
    disjoint = tuple(find_disjoint_maximal(X, line))
    adjacent = tuple(_adjacent_pairs(X, line))
    has_d = any(_identity(X, users, (lam, line)) for lam in disjoint)
    has_a = any(_identity(X, users, pair + (line,)) for pair in adjacent)
    problems = []
    if (size == big) != bool(disjoint):
        problems.append(f"|X_l|={size} but {len(disjoint)} disjoint maximal lines")
    if disjoint and not has_d:
        problems.append("no disjoint line realises X_l = X minus (lambda, l)")
    if (size == small) != bool(adjacent):
        problems.append(f"|X_l|={size} but {len(adjacent)} adjacent pairs")
    if adjacent and not has_a:
        problems.append("no adjacent pair realises X_l = X minus (lambda', lambda'', l)")
    return users, size, disjoint, adjacent, problems


def verify_prop_33(X: NodeSet, line: Line) -> DichotomyVerdict:
    """Degree-3 sets, 3-node lines: usage 3, 1 or 0 with structural causes."""
    if X.degree != 3 or len(X.nodes_on(line)) != 3:
        raise PreconditionError("needs a degree-3 set and a 3-node line")
    users, size, disjoint, adjacent, problems = _characterise(X, line, 3, 1)
    on = set(X.nodes_on(line))
    hits = [set(X.nodes_on(lam)) & on for lam in X.maximal]
    three_distinct = (
        len(X.maximal) == 3 and all(len(h) == 1 for h in hits) and len(set().union(*hits)) == 3
    )
    if (size == 0) != three_distinct:
        problems.append(f"|X_l|={size} but three-maximal-lines-at-distinct-nodes is {three_distinct}")
    if size not in (3, 1, 0):
        problems.append(f"|X_l|={size} not in {{3, 1, 0}}")
    case = {3: "disjoint", 1: "adjacent", 0: "three-maximal"}.get(size, "none")
    return DichotomyVerdict(size, case, disjoint, adjacent, not problems, "; ".join(problems))


def verify_theorem_32(X: NodeSet, line: Line) -> DichotomyVerdict:
    """n-node lines: usage C(n,2) or C(n-1,2), each with its structural cause."""
    n = X.degree
    if len(X.nodes_on(line)) != n:
        raise PreconditionError(f"needs an n-node line (n={n})")
    if n == 3:
        return verify_prop_33(X, line)
    big, small = comb(n, 2), comb(n - 1, 2)
    users, size, disjoint, adjacent, problems = _characterise(X, line, big, small)
    if size not in (big, small):
        problems.append(f"|X_l|={size} not in {{{big}, {small}}}")
    case = "disjoint" if size == big else "adjacent" if size == small else "none"
    return DichotomyVerdict(size, case, disjoint, adjacent, not problems, "; ".join(problems))


@dataclass(frozen=True)
class FamilyMatch:
    family: str
    m: int
    core: NodeSet
    blueprint: Blueprint

    def __bool__(self):
        return True


def _peel(X: NodeSet, line: Line, m: int):
    """Every set reached by removing m adjacent pairs (depth-first)."""
    if m == 0:
        yield X
        return
    for pair in _adjacent_pairs(X, line):
        yield from _peel(apply_step(X, make_step(X, ADJACENT, pair), line), line, m - 1)


def characterize_sigma2(X: NodeSet, line: Line) -> FamilyMatch | Mismatch:
    """Match an unused sigma=2 line to the 3-max or 4-max unused-line families."""
    n, mu = X.degree, len(X.maximal)
    nl = X.node_line(line)
    if nl is None:
        raise NotANodeLineError(f"{line} passes through fewer than 2 nodes")
    if 2 * nl.node_count - n - 1 != 2:
        raise PreconditionError("line does not have sigma = 2")
    if mu <= 3:
        raise PreconditionError("needs more than three maximal lines")
    if used_nodes(X, line).users:
        raise PreconditionError("line is used")
    if mu == n:
        family, m, core_mu = "y-star", (n - 3) // 2, 3
    elif mu == n - 1:
        family, m, core_mu = "x-star", (n - 5) // 2, 4
    else:
        return Mismatch(f"mu={mu} fits neither family at n={n}")
    if m < 0:
        return Mismatch(f"degree {n} too small for the {family} family")
    reason = "no adjacent pairs to peel"
    for core in _peel(X, line, m):
        if len(core.maximal) != core_mu:
            reason = f"core has {len(core.maximal)} maximal lines, expected {core_mu}"
            continue
        bp = verify_n_max(core) if family == "y-star" else verify_n_minus_1_max(core)
        if not bp:
            reason = bp.reason
            continue
        if used_nodes(core, line).users:
            reason = "line is used in the core"
            continue
        return FamilyMatch(family, m, core, bp)
    return Mismatch(reason)
