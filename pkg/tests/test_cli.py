import json
import subprocess
import sys

import pytest

from gcnlab.cli import main
from gcnlab.io import read_node_set


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_generate_and_analyze_principal(tmp_path, capsys):
    f = tmp_path / "pl2.json"
    assert run(["generate", "principal", "--degree", "2", "-o", str(f)], capsys)[0] == 0
    code, out, _ = run(["analyze", str(f), "--line", "1,1,-1"], capsys)
    assert code == 0 and "usage=1" in out
    code, out, _ = run(["analyze", str(f), "--format", "json"], capsys)
    doc = json.loads(out)
    assert code == 0 and doc["passed"] and doc["mu"] == 3


def test_y_star_round_trip_and_modify(tmp_path, capsys):
    f, g = tmp_path / "y.json", tmp_path / "y1.json"
    assert run(["generate", "y-star", "-o", str(f)], capsys)[0] == 0
    loaded = read_node_set(f)
    line = ",".join(str(c) for c in loaded.distinguished.coefficients)
    code, out, _ = run(["analyze", str(f), "--line", line, "--format", "json"], capsys)
    assert code == 0 and json.loads(out)["usage_size"] == 0
    assert run(["generate", "modify", "--base", str(f), "--m", "1", "-o", str(g)], capsys)[0] == 0
    assert len(read_node_set(g).nodes) == 21


def test_invalid_inputs_exit_2(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"degree": 2, "nodes": []}')
    code, _, err = run(["analyze", str(bad)], capsys)
    assert code == 2 and err.startswith("gcnlab: error:")
    not_poised = tmp_path / "np.json"
    pts = [[str(i), "0"] for i in range(4)] + [["0", "1"], ["1", "1"]]
    not_poised.write_text(json.dumps({"degree": 2, "nodes": pts}))
    assert run(["analyze", str(not_poised)], capsys)[0] == 2
    generic = tmp_path / "g.json"
    pts = [["0", "0"], ["1", "0"], ["0", "1"], ["2", "3"], ["3", "1"], ["5", "7"]]
    generic.write_text(json.dumps({"degree": 2, "nodes": pts}))
    code, _, err = run(["analyze", str(generic)], capsys)
    assert code == 2 and "not GC" in err
    f = tmp_path / "pl2.json"
    run(["generate", "principal", "--degree", "2", "-o", str(f)], capsys)
    assert run(["analyze", str(f), "--line", "1,-1,7"], capsys)[0] == 2
    params = tmp_path / "p.json"
    params.write_text(json.dumps({"lines": [[1, 0, 0], [0, 1, 0], [1, 1, 0]]}))
    assert run(["generate", "chung-yao", "--params", str(params)], capsys)[0] == 2


def test_verify_and_render(tmp_path, capsys):
    code, out, _ = run(["verify", "prop33"], capsys)
    assert code == 0 and "checks passed" in out
    f, svg = tmp_path / "cy.json", tmp_path / "cy.svg"
    run(["generate", "chung-yao", "--degree", "3", "-o", str(f)], capsys)
    assert run(["render", str(f), str(svg)], capsys)[0] == 0
    assert "<svg" in svg.read_text()


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "gcnlab.cli", "verify", "pappus", "--format", "json"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and json.loads(proc.stdout)["passed"]
