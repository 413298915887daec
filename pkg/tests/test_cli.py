import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from cacti.cli import main

HERE = Path(__file__).parent
GOLDEN = HERE / "golden"

# (golden name, argv, expected exit code); paths are relative to tests/
CASES = [
    ("check_action", ["check", "data/sweedler_on_dual_numbers.json"], 0),
    ("check_broken_product_rule", ["check", "data/product_rule_broken.json"], 1),
    ("check_not_a_morphism", ["check", "data/not_a_morphism.json"], 1),
    ("cobar_cohomology", ["cobar-cohomology", "data/sweedler4.json", "--window", "0", "6"], 0),
    ("cobar_cohomology_f7_json", ["cobar-cohomology", "catalog:sweedler4", "--field", "F7",
                                  "--format", "json", "--window", "0", "4"], 0),
    ("cobar_cohomology_taft3", ["cobar-cohomology", "catalog:taft:3", "--field", "F7", "--max-ext", "4"], 0),
    ("cobar_cohomology_z2", ["cobar-cohomology", "catalog:group_algebra:2", "--max-ext", "4"], 0),
    ("induced_image", ["induced", "action:sweedler", "--image", "4"], 0),
    ("hochschild_cohomology", ["hochschild-cohomology", "catalog:trunc_poly:2", "--max-q", "4"], 0),
    ("identities", ["identities", "catalog:taft:3:1", "--field", "F7", "--samples", "10", "--seed", "5"], 0),
    ("identities_hochschild", ["identities", "catalog:super_line", "--side", "hochschild",
                               "--samples", "5"], 0),
    ("induced_verify", ["induced", "action:sweedler", "--verify", "--samples", "15"], 0),
    ("induced_mutation", ["induced", "action:sweedler:h(ab)", "--verify", "--samples", "15"], 1),
    ("dual", ["dual", "catalog:sweedler4"], 0),
    ("extract", ["extract", "data/sweedler4.json"], 0),
    ("extract_broken", ["extract", "data/broken_h4.json"], 1),
    ("lift", ["lift", "data/sweedler_to_taft2.json", "--samples", "10"], 0),
    ("skew_cocycle", ["skew-cocycle", "action:sweedler", "--chain", "xg,x"], 0),
]


def run(argv, capsys, monkeypatch):
    monkeypatch.chdir(HERE)
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.mark.parametrize("name,argv,expected", CASES, ids=[c[0] for c in CASES])
def test_golden(name, argv, expected, capsys, monkeypatch):
    code, out, _ = run(argv, capsys, monkeypatch)
    assert code == expected
    path = GOLDEN / f"{name}.txt"
    if os.environ.get("CACTI_REGEN_GOLDEN"):
        path.write_text(out)
    assert out == path.read_text()


def test_rerun_is_byte_identical(capsys, monkeypatch):
    argv = ["identities", "catalog:sweedler4", "--samples", "8", "--seed", "3"]
    first = run(argv, capsys, monkeypatch)
    second = run(argv, capsys, monkeypatch)
    assert first == second


def test_json_output_parses(capsys, monkeypatch):
    code, out, _ = run(["extract", "catalog:group_algebra:3", "--format", "json"], capsys, monkeypatch)
    assert code == 0
    data = json.loads(out)
    assert data["config"]["command"] == "extract"


@pytest.mark.parametrize("argv", [
    ["check", "data/missing.json"],
    ["check", "catalog:no_such_thing"],
    ["skew-cocycle", "catalog:sweedler4", "--chain", "x"],
    ["cobar-cohomology", "catalog:trunc_poly:2"],
    ["cobar-cohomology", "catalog:taft:3", "--field", "F7", "--max-ext", "7"],
    ["check"],
    ["frobnicate", "x"],
], ids=["missing-file", "unknown-catalog", "wrong-input-kind", "not-a-bialgebra", "word-budget", "no-input", "no-command"])
def test_usage_errors_exit_2(argv, capsys, monkeypatch):
    code, out, err = run(argv, capsys, monkeypatch)
    assert code == 2
    assert err


def test_console_entry_point():
    r = subprocess.run([sys.executable, "-m", "cacti.cli", "--version"], capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.startswith("cacti ")
