"""Command-line interface: generate, analyze, verify, render.

Exit codes: 0 success / all clauses pass, 1 a finding, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import corpus
from .conjecture import LineUsageReport, SetReport, analyze_line, verify_set
from .gc_analysis import NotANodeLineError, is_gc_set
from .geometry import GeometryError
from .io import ParseError, dumps, format_line, parse_line, parse_point, read_node_set
from .lattices import (
    ConstructionError,
    carnicer_gasca,
    chung_yao,
    construct_x_star,
    construct_y_star,
    generalized_principal,
    m_modification,
    principal_lattice,
    principal_pencils,
    projective_image,
    search_pairs,
    search_params,
)
from .nodeset import NodeSetError
from .suites import SUITES, run_suite
from .svg import render_svg

FAMILIES = ("chung-yao", "carnicer-gasca", "principal", "gpl", "y-star", "x-star", "modify")


class UsageError(Exception):
    pass


def _load_json(path):
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read parameters from {path}: {exc}") from None


def _need_degree(args, lo=1):
    if args.degree is None:
        raise UsageError(f"{args.family} needs --degree or --params")
    if args.degree < lo:
        raise UsageError(f"--degree must be at least {lo}")
    return args.degree


def _generate(args):
    params = _load_json(args.params) if args.params else None
    fam = args.family
    lines, blueprint = (), None
    if fam == "principal":
        X = principal_lattice(_need_degree(args))
    elif fam == "chung-yao":
        ls = [parse_line(v) for v in params["lines"]] if params else corpus.cy_lines(_need_degree(args))
        X = chung_yao(ls)
        blueprint = {"family": fam, "construction_lines": [l.to_strings() for l in ls]}
    elif fam == "carnicer-gasca":
        if params:
            ls = [parse_line(v) for v in params["lines"]]
            X = carnicer_gasca(ls, [parse_point(p) for p in params["free"]])
        else:
            n = _need_degree(args, 2)
            ls = [corpus.tangent(t) for t in range(n + 1)]
            X = corpus.cg_set(n)
        blueprint = {"family": fam, "construction_lines": [l.to_strings() for l in ls]}
    elif fam == "gpl":
        matrix = params["matrix"] if params else corpus.AFFINE_MAP
        pen = projective_image(principal_pencils(_need_degree(args)), matrix)
        X = generalized_principal(pen)
        blueprint = {
            "family": fam,
            "pencils": [[l.to_strings() for l in f] for f in pen.families],
        }
    elif fam in ("y-star", "x-star"):
        if params is None:
            params = search_params(fam, args.seed) if args.seed is not None else (
                corpus.Y_STAR_PARAMS if fam == "y-star" else corpus.X_STAR_PARAMS
            )
        con = (construct_y_star if fam == "y-star" else construct_x_star)(params)
        X, lines = con.nodes, (con.line,)
        blueprint = con.blueprint.to_json()
        blueprint["params"] = params
    else:
        if not args.base:
            raise UsageError("modify needs --base FILE")
        base = read_node_set(args.base)
        if base.distinguished is None:
            raise UsageError("base file has no distinguished line in its 'lines' block")
        m = args.m if args.m is not None else 1
        start = (base.nodes, base.distinguished)
        if params is not None:
            pairs = params["pairs"] if isinstance(params, dict) else params
        else:
            pairs = search_pairs(start, m, args.seed or 0)
        con = m_modification(start, m, pairs)
        X, lines = con.nodes, (con.line,)
        blueprint = con.blueprint.to_json()
        blueprint["pairs"] = pairs
    text = dumps(X, lines, blueprint)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def line_report_json(X, r: LineUsageReport) -> dict:
    chain = r.proper_chain
    return {
        "line": [str(c) for c in r.line.coefficients],
        "k": r.k,
        "sigma": r.sigma,
        "usage_size": r.usage_size,
        "users": sorted(r.users),
        "recovered_s": r.recovered_s,
        "proper": chain is not None,
        "chain": None
        if chain is None
        else [
            {
                "kind": st.kind,
                "lines": [[str(c) for c in l.coefficients] for l in st.lines],
                "removed": list(chain.removed_indices(st)),
            }
            for st in chain.steps
        ],
        "per_maximal": [
            {"line": [str(c) for c in lam.coefficients], "count": v} for lam, v in r.per_maximal.items()
        ],
        "clauses": r.clauses,
        "findings": list(r.findings),
    }


def line_report_text(r: LineUsageReport) -> str:
    chain = r.proper_chain
    steps = "not proper" if chain is None else f"proper, {len(chain.steps)} step(s)"
    clauses = " ".join(f"{k}={v}" for k, v in r.clauses.items())
    s = "-" if r.recovered_s is None else r.recovered_s
    out = f"line {format_line(r.line)}: k={r.k} sigma={r.sigma} usage={r.usage_size} s={s} chain: {steps}; {clauses}"
    for f in r.findings:
        out += f"\n  FINDING: {f}"
    return out


def set_report_json(X, rep: SetReport) -> dict:
    return {
        "degree": rep.degree,
        "mu": rep.mu,
        "classification": {"tag": rep.classification.tag, "matches": list(rep.classification.matches)},
        "passed": rep.passed,
        "findings": rep.findings,
        "lines": [line_report_json(X, r) for r in rep.lines],
    }


def _analyze(args):
    loaded = read_node_set(args.file)
    X = loaded.nodes
    if not X.poised:
        raise UsageError("node set is not poised")
    cert = is_gc_set(X)
    if not cert:
        raise UsageError(f"node set is not GC: no node-line split at nodes {list(cert.failed)}")
    if args.line:
        line = parse_line(args.line)
        try:
            r = analyze_line(X, line)
        except NotANodeLineError as exc:
            raise UsageError(str(exc)) from None
        if args.format == "json":
            print(json.dumps(line_report_json(X, r), indent=2))
        else:
            print(line_report_text(r))
        return 0 if r.passed else 1
    rep = verify_set(X)
    if args.format == "json":
        print(json.dumps(set_report_json(X, rep), indent=2))
    else:
        cls = rep.classification
        print(f"degree {rep.degree}, {len(X)} nodes, mu={rep.mu}, class {cls.tag} (matches: {', '.join(cls.matches) or '-'})")
        for r in rep.lines:
            print(line_report_text(r))
        print(f"verdict: {'pass' if rep.passed else 'FINDINGS'} ({len(rep.findings)} findings)")
    return 0 if rep.passed else 1


def _verify(args):
    res = run_suite(args.suite)
    if args.format == "json":
        print(json.dumps({
            "suite": res.name,
            "passed": res.passed,
            "checks": [{"label": c.label, "passed": c.passed, "detail": c.detail} for c in res.checks],
        }, indent=2))
    else:
        for c in res.checks:
            mark = "ok  " if c.passed else "FAIL"
            print(f"{mark} {c.label}" + (f" ({c.detail})" if c.detail and not c.passed else ""))
        print(f"{res.name}: {len(res.checks) - len(res.failures)}/{len(res.checks)} checks passed")
    return 0 if res.passed else 1


def _render(args):
    loaded = read_node_set(args.file)
    svg = render_svg(loaded.nodes, loaded.distinguished)
    Path(args.output).write_text(svg, encoding="utf-8")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gcnlab", description="Exact analysis of GC_n interpolation node sets.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="construct a node-set file")
    g.add_argument("family", choices=FAMILIES)
    g.add_argument("--degree", type=int)
    g.add_argument("--m", type=int, help="number of line pairs for modify")
    g.add_argument("--params", help="JSON parameter file")
    g.add_argument("--base", help="base node-set file for modify")
    g.add_argument("--seed", type=int, help="seeded search for recipe parameters")
    g.add_argument("-o", "--output", help="output path (default: stdout)")
    g.set_defaults(func=_generate)

    a = sub.add_parser("analyze", help="usage report for one line or the whole set")
    a.add_argument("file")
    a.add_argument("--line", help="line as a,b,c for a*x + b*y + c = 0")
    a.add_argument("--format", choices=("text", "json"), default="text")
    a.set_defaults(func=_analyze)

    v = sub.add_parser("verify", help="run a verification suite on the built-in corpus")
    v.add_argument("suite", choices=tuple(SUITES))
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.set_defaults(func=_verify)

    r = sub.add_parser("render", help="draw a node set as SVG")
    r.add_argument("file")
    r.add_argument("output")
    r.set_defaults(func=_render)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ParseError, ConstructionError, NodeSetError, GeometryError, KeyError, ValueError) as exc:
        msg = f"missing parameter {exc}" if isinstance(exc, KeyError) else str(exc)
        print(f"gcnlab: error: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
