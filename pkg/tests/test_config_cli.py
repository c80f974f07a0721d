import csv
import json
import subprocess
import sys
from pathlib import Path

import networkx as nx
import pytest

from largeset import cli
from largeset.config import ExperimentConfig, from_mapping, load, parse_text
from largeset.errors import ConfigError
from largeset.graph import read_dimacs
from largeset.suites import SUITES, run_suite

ROOT = Path(__file__).resolve().parents[1]
FIXTURES = Path(__file__).parent / "fixtures"


# --- config --------------------------------------------------------------

def test_parse_text_full():
    cfg = parse_text("""
        # comment line
        construction = coset
        param.d = 5         # trailing comment
        window = int:-50..50
        ops = ["fatness", "syndeticity_index"]
        op.syndeticity_index.pad = 5
        format = csv
        seed = 7
        budget = 1000
    """)
    assert cfg.construction == "coset" and cfg.params == {"d": 5}
    assert cfg.window == "int:-50..50" and cfg.ops == ["fatness", "syndeticity_index"]
    assert cfg.op_params == {"syndeticity_index": {"pad": 5}}
    assert (cfg.format, cfg.seed, cfg.budget) == ("csv", 7, 1000)


def test_json_and_text_agree():
    text = parse_text("construction = coset\nparam.d = 2\nops = fatness\nop.kappa_fat.k = 3\n")
    js = parse_text(json.dumps({"construction": "coset", "params": {"d": 2}, "ops": "fatness",
                                "op_params": {"kappa_fat": {"k": 3}}}))
    assert text.to_dict() == js.to_dict()


@pytest.mark.parametrize("text,fragment", [
    ("construction = coset\nwindw = int:-5..5\n", "<config>:2: key 'windw': unknown key"),
    ("construction = coset\nconstruction = coset\n", "<config>:2: duplicate key"),
    ("param.d = 3\n", "missing required key 'construction'"),
    ("construction = coset\nops = [\"nope\"]\n", "unknown operation"),
    ("construction = coset\nop.fatness.k = 3\n", "fatness takes no parameters"),
    ("construction = coset\nop.nope.k = 3\n", "unknown operation"),
    ("construction = coset\nseed = -1\n", "seed must fit in 64 bits"),
    ("construction = coset\nbudget = 0\n", "budget must be positive"),
    ("construction = coset\nformat = xml\n", "format must be json or csv"),
    ("construction = coset\njust words\n", "<config>:2: expected 'key = value'"),
    ('{"construction": "coset",\n "x": }', "invalid JSON"),
])
def test_config_errors(text, fragment):
    with pytest.raises(ConfigError) as exc:
        parse_text(text)
    assert fragment in str(exc.value)


def test_load_reports_path(tmp_path):
    with pytest.raises(ConfigError):
        load(tmp_path / "missing.cfg")
    with pytest.raises(ConfigError):
        from_mapping([1, 2])
    assert load(ROOT / "configs" / "ends_with_a.json").construction == "ends_with_a"


@pytest.mark.parametrize("path", sorted((ROOT / "configs").iterdir()), ids=lambda p: p.name)
def test_shipped_configs_load(path):
    assert isinstance(load(path), ExperimentConfig)


# --- cli -----------------------------------------------------------------

def run(args, capsys):
    code = cli.main(args)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_catalog(capsys):
    code, out, _ = run(["catalog"], capsys)
    assert code == 0
    for name in ("cube_gap_complement", "length_filtered", "s_prime", "ends_with_a"):
        assert name in out
    code, out, _ = run(["catalog", "--family", "boolean"], capsys)
    assert "ends_with_a" not in out and "cube_gap_complement" in out
    code, out, _ = run(["catalog", "--json"], capsys)
    entries = json.loads(out)
    assert {"name", "family", "params", "description"} <= set(entries[0])


def test_eval_fatness_of_evens(tmp_path, capsys):
    code, out, _ = run(["eval", "--construction", "coset", "--param", "d=2", "--window", "int:-50..50",
                        "--op", "fatness", "--out", str(tmp_path)], capsys)
    assert code == 0
    doc = json.loads((tmp_path / "coset.json").read_text())
    assert doc["results"][0]["value"] == 3 and doc["decided"]


def test_eval_syndeticity_of_5z(tmp_path, capsys):
    code, _, _ = run(["eval", "--config", str(ROOT / "configs" / "coset5_syndetic.cfg"), "--out", str(tmp_path)],
                     capsys)
    assert code == 0
    r = json.loads((tmp_path / "coset5_syndetic.json").read_text())["results"][0]
    assert r["value"] == 5 and r["witness"] == ["0", "1", "2", "3", "4"]


def test_eval_undecided_exit_code(tmp_path, capsys):
    code, _, _ = run(["eval", "--config", str(ROOT / "configs" / "coset5_undecided.cfg"), "--out", str(tmp_path)],
                     capsys)
    assert code == 2


def test_eval_error_exit_code(tmp_path, capsys):
    code, _, err = run(["eval", "--config", str(FIXTURES / "bad_key.cfg"), "--out", str(tmp_path)], capsys)
    assert code == 1 and "bad_key.cfg:3: key 'windw'" in err
    code, _, err = run(["eval", "--construction", "coset", "--param", "d=2", "--window", "bool:1:0..3",
                        "--out", str(tmp_path)], capsys)
    assert code == 1 and "error:" in err
    code, _, err = run(["eval", "--out", str(tmp_path)], capsys)
    assert code == 1


def test_csv_rows_round_trip_through_json(tmp_path, capsys):
    run(["eval", "--config", str(FIXTURES / "determinism.cfg"), "--out", str(tmp_path)], capsys)
    doc = json.loads((tmp_path / "determinism.json").read_text())
    with open(tmp_path / "determinism.csv", newline="") as fh:
        rows = list(csv.DictReader(fh))
    assert len(rows) == len(doc["results"])
    for row, res in zip(rows, doc["results"]):
        assert {k: json.loads(v) for k, v in row.items()} == {k: res[k] for k in row}


def test_eval_csv_to_stdout(tmp_path, capsys):
    code, out, _ = run(["eval", "--config", str(ROOT / "configs" / "coset5_syndetic.cfg"),
                        "--format", "csv", "--out", str(tmp_path)], capsys)
    assert code == 0 and out.splitlines()[0].startswith("op,params,predicate")


def test_determinism_across_processes(tmp_path):
    outs = []
    for run_dir in ("one", "two"):
        subprocess.run([sys.executable, "-m", "largeset", "eval", "--config", str(FIXTURES / "determinism.cfg"),
                        "--out", str(tmp_path / run_dir)], check=True, capture_output=True)
        doc = json.loads((tmp_path / run_dir / "determinism.json").read_text())
        assert doc.pop("generated_at")
        outs.append(json.dumps(doc, sort_keys=True))
    assert outs[0] == outs[1]
    assert (tmp_path / "one" / "determinism.csv").read_bytes() == (tmp_path / "two" / "determinism.csv").read_bytes()


def test_export_graph_evens(tmp_path, capsys):
    out = tmp_path / "g.dimacs"
    code, _, _ = run(["export-graph", "--construction", "coset", "--param", "d=2", "--window", "int:-3..3",
                      "--out", str(out)], capsys)
    assert code == 0
    text = out.read_text()
    assert "c provenance" in text and '"constructor": "coset"' in text
    n, edges = read_dimacs(text)
    assert n == 7 and len(edges) == 9


def test_export_graph_whole_group_and_warning(capsys):
    code, out, _ = run(["export-graph", "--construction", "whole_group", "--param", "family=integer",
                        "--window", "int:-2..2"], capsys)
    n, edges = read_dimacs(out)
    G = nx.Graph(edges)
    assert n == 5 and G.number_of_edges() == 10
    code, out, _ = run(["export-graph", "--construction", "coset", "--param", "d=2", "--param", "r=1",
                        "--window", "int:-2..2"], capsys)
    assert "warning: the identity is not in the set" in out


def test_verify_unknown_suite(capsys):
    code, _, err = run(["verify", "nope"], capsys)
    assert code == 1
    for name in SUITES:
        assert name in err


def test_verify_two_words(capsys):
    code, out, _ = run(["verify", "two-words", "--count", "1000", "-v"], capsys)
    assert code == 0 and "PASS" in out and "2/2 checks passed" in out


def test_verify_json(tmp_path, capsys):
    code, out, _ = run(["verify", "duality", "--format", "json", "--out", str(tmp_path)], capsys)
    assert code == 0 and json.loads(out)[0]["passed"]
    assert (tmp_path / "verify.json").exists()


@pytest.mark.parametrize("name", sorted(SUITES))
def test_every_suite_passes(name):
    res = run_suite(name, seed=3)
    assert res.passed, [c.line() for c in res.checks if not c.passed]
