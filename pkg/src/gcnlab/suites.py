"""Verification suites over the built-in corpus, shared by the CLI and tests."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .conjecture import (
    characterize_sigma2,
    verify_prop_33,
    verify_set,
    verify_theorem_32,
)
from .corpus import PAPPUS_PARAMS, all_fixtures, fixture
from .gc_analysis import is_gc_set, used_nodes
from .lattices import verify_n_minus_1_max, pappus_probe


@dataclass(frozen=True)
class Check:
    label: str
    passed: bool
    detail: str = ""


@dataclass
class SuiteResult:
    name: str
    checks: list[Check] = field(default_factory=list)

    def add(self, label: str, passed: bool, detail: str = "") -> None:
        self.checks.append(Check(label, bool(passed), detail))

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]


def suite_corpus() -> SuiteResult:
    res = SuiteResult("corpus")
    for fx in all_fixtures():
        X = fx.nodes
        if not is_gc_set(X):
            res.add(f"{fx.name}: GC", False, "fundamental polynomials do not split")
            continue
        rep = verify_set(X)
        res.add(f"{fx.name}: {len(rep.lines)} lines", rep.passed, "; ".join(rep.findings))
    return res


def suite_theorem32() -> SuiteResult:
    res = SuiteResult("theorem32")
    covered, cases = set(), set()
    for fx in all_fixtures():
        X = fx.nodes
        if X.degree not in (4, 5):
            continue
        for nl in X.node_lines:
            if nl.node_count != X.degree:
                continue
            v = verify_theorem_32(X, nl.line)
            covered.add(fx.name)
            cases.add(v.case)
            res.add(f"{fx.name} {nl.line}: |X_l|={v.usage_size} ({v.case})", v.passed, v.detail)
    res.add(f"{len(covered)} fixtures with n-node lines", len(covered) >= 10)
    res.add("both cases realised", {"disjoint", "adjacent"} <= cases, str(sorted(cases)))
    return res


def suite_prop33() -> SuiteResult:
    res = SuiteResult("prop33")
    cases = set()
    for fx in all_fixtures():
        X = fx.nodes
        if X.degree != 3:
            continue
        for nl in X.node_lines:
            if nl.node_count != 3:
                continue
            v = verify_prop_33(X, nl.line)
            cases.add(v.case)
            res.add(f"{fx.name} {nl.line}: |X_l|={v.usage_size} ({v.case})", v.passed, v.detail)
    ys = fixture("y-star")
    v = verify_prop_33(ys.nodes, ys.line)
    res.add("y-star distinguished line is case (iii)", v.passed and v.case == "three-maximal")
    res.add("all three cases realised", cases >= {"disjoint", "adjacent", "three-maximal"}, str(sorted(cases)))
    return res


def pencil_usage_checks(fx, res: SuiteResult) -> None:
    """Pencil line number s is used by C(n+1-s, 2) nodes; nothing else is used."""
    X, n = fx.nodes, fx.nodes.degree
    expected = {}
    for r, fam in enumerate(fx.pencils.families):
        for s, line in enumerate(fam):
            if s < n:
                expected[line] = comb(n + 1 - s, 2)
    bad = []
    for nl in X.node_lines:
        got = len(used_nodes(X, nl.line))
        want = expected.get(nl.line, 0)
        if got != want:
            bad.append(f"{nl.line}: {got} users, expected {want}")
    res.add(f"{fx.name}: pencil usage counts", not bad, "; ".join(bad[:5]))


def suite_prop41() -> SuiteResult:
    res = SuiteResult("prop41")
    for fx in all_fixtures():
        X = fx.nodes
        if len(X.maximal) != 3:
            continue
        if fx.pencils is not None:
            pencil_usage_checks(fx, res)
        bad = []
        for nl in X.node_lines:
            on = set(nl.incident_nodes)
            if nl.line in X.maximal:
                continue
            hits = [set(X.nodes_on(lam)) & on for lam in X.maximal]
            if all(hits) and used_nodes(X, nl.line).users:
                bad.append(str(nl.line))
        res.add(f"{fx.name}: lines meeting all 3 maximal lines at nodes are unused", not bad, ", ".join(bad))
    return res


_SIGMA2_EXPECTED = {"y-star-m1": ("y-star", 1), "x-star": ("x-star", 0), "x-star-m1": ("x-star", 1)}


def suite_sigma2() -> SuiteResult:
    res = SuiteResult("sigma2")
    seen = {}
    for fx in all_fixtures():
        X = fx.nodes
        if len(X.maximal) <= 3:
            continue
        for nl in X.node_lines:
            if 2 * nl.node_count - X.degree - 1 != 2 or used_nodes(X, nl.line).users:
                continue
            match = characterize_sigma2(X, nl.line)
            detail = getattr(match, "reason", "")
            res.add(f"{fx.name} {nl.line}: unused sigma=2 line matched", bool(match), detail)
            if match:
                seen[fx.name] = (match.family, match.m)
    for name, want in _SIGMA2_EXPECTED.items():
        res.add(f"{name} matches {want[0]} family with m={want[1]}", seen.get(name) == want, str(seen.get(name)))
    return res


def suite_near_maximal_lines() -> SuiteResult:
    """(n-1)-max sets: an (n-1)-node line through nodes on one maximal line each."""
    res = SuiteResult("near-maximal")
    found = set()
    for fx in all_fixtures():
        X, n = fx.nodes, fx.nodes.degree
        if n < 4 or len(X.maximal) != n - 1:
            continue
        for nl in X.node_lines:
            if nl.node_count != n - 1:
                continue
            counts = [sum(i in X.nodes_on(lam) for lam in X.maximal) for i in nl.incident_nodes]
            if all(c == 1 for c in counts):
                unused = not used_nodes(X, nl.line).users
                found.add(n)
                res.add(f"{fx.name} {nl.line}: n={n} in {{4,5}} and unused", n in (4, 5) and unused)
    res.add("instances at n=4 and n=5", found >= {4, 5}, str(sorted(found)))
    return res


def suite_pappus() -> SuiteResult:
    res = SuiteResult("pappus")
    probe = pappus_probe(PAPPUS_PARAMS)
    res.add("D, O2, O3 collinear", probe.collinear, f"D={probe.d}, O2={probe.o2}, O3={probe.o3}")
    res.add("degenerate configuration rejected", probe.rejected, probe.reason)
    xs = fixture("x-star")
    bp = verify_n_minus_1_max(xs.nodes)
    res.add("x-star passes the (n-1)-max characterisation", bool(bp), getattr(bp, "reason", ""))
    return res


SUITES = {
    "corpus": suite_corpus,
    "theorem32": suite_theorem32,
    "prop33": suite_prop33,
    "prop41": suite_prop41,
    "sigma2": suite_sigma2,
    "near-maximal": suite_near_maximal_lines,
    "pappus": suite_pappus,
}


def run_suite(name: str) -> SuiteResult:
    return SUITES[name]()
