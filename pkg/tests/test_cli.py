import json
import os
import subprocess
import sys

import jsonschema
import pytest

from conftest import run_cli

SCHEMA_PATH = os.path.join(os.path.dirname(__file__), "..", "docs", "schema.json")


@pytest.fixture(scope="module")
def schema():
    with open(SCHEMA_PATH) as fh:
        return json.load(fh)


def validate(schema, name, payload):
    jsonschema.validate(payload, {"$ref": f"#/$defs/{name}", "$defs": schema["$defs"]})


def run_json(*argv):
    code, out, err = run_cli(*argv)
    assert code == 0, err
    return json.loads(out)


def test_info_hyperplane(schema):
    out = run_json("info", "H")
    assert out["degree"] == 3 and out["self_int"] == 3 and out["ample"] is True
    assert (out["h0"], out["genus"], out["chi"]) == (4, 1, 4)
    validate(schema, "info", out)


def test_info_labels_named_classes(schema):
    out = run_json("info", "L[1,2]")
    assert out["label"] == "L[1,2]" and out["membership"] == "line"
    assert out["canonical"] == "l - b1 - b2"


def test_cohomology_double_line(schema):
    out = run_json("cohomology", "2*L[1]", "--twists", "0..0")
    assert [(r["h0"], r["h1"], r["h2"]) for r in out["rows"]] == [(1, 1, 0)]
    validate(schema, "cohomology", out)


def test_cohomology_tsv():
    code, out, _ = run_cli("cohomology", "K", "--twists=-1..1", "--format", "tsv")
    assert code == 0
    lines = out.split("\n")
    assert lines[0] == "t\th0\th1\th2"
    assert lines[1:4] == ["-1\t0\t0\t4", "0\t0\t0\t1", "1\t1\t0\t0"]
    assert "\r" not in out and out.endswith("\n")


def test_acm(schema):
    out = run_json("acm", "C[1]")
    assert out["acm"] is True and out["nonzero_h1"] == []
    validate(schema, "acm", out)
    out = run_json("acm", "2*L[1]")
    assert out["acm"] is False and {"t": 0, "h1": 1} in out["nonzero_h1"]


def test_classify(schema):
    out = run_json("classify", "--c1", "2H", "--c2", "5")
    assert out["type"] == "A1" and out["record"]["c1_pattern"] == "2H"
    validate(schema, "classify", out)
    out = run_json("classify", "--c1", "4H", "--c2", "14")
    assert (out["type"], out["twist"]) == ("A1", -1)
    out = run_json("classify", "--c1", "H", "--c2", "0")
    assert out["type"] == "none" and out["record"] is None
    validate(schema, "classify", out)


def test_extension(schema):
    out = run_json("extension", "--m", "C[1]", "--n", "T[2|1]")
    assert (out["type"], out["ext_dim"], out["stability_label"]) == ("B1", 2, "st")
    validate(schema, "extension", out)
    out = run_json("extension", "--m", "L[1]", "--n", "L[1,2]", "--t", "-1")
    assert out["type"] == "split" and len(out["split"]) == 2
    validate(schema, "extension", out)


def test_extension_that_splits_is_a_usage_error():
    code, out, err = run_cli("extension", "--m", "L[1]", "--n", "L[2]", "--t", "1")
    assert code == 2 and out == "" and "splits" in err


@pytest.mark.parametrize("table", ["families", "extensions", "appendix", "maps"])
def test_census_tables(schema, table):
    out = run_json("census", "--table", table)
    validate(schema, f"census_{table}", out)
    code, tsv, _ = run_cli("census", "--table", table, "--format", "tsv")
    assert code == 0
    lines = tsv.rstrip("\n").split("\n")
    assert len(lines) == len(out["rows"]) + 1
    assert all(line.count("\t") == lines[0].count("\t") for line in lines)


def test_orbit(schema):
    out = run_json("orbit", "L[1]", "--list")
    assert out["size"] == 27 and len(out["elements"]) == 27
    validate(schema, "orbit", out)
    assert run_json("orbit", "H")["size"] == 1


def test_orbit_uses_cache_dir(tmp_path):
    code, _, _ = run_cli("--cache-dir", str(tmp_path), "verify", "--check", "weyl-order-51840")
    assert code == 0
    assert any(tmp_path.iterdir())
    from cubicacm import weyl
    weyl.DEFAULT_CACHE_DIR = None


def test_verify_full_report(schema, verify_output):
    code, payload, err = verify_output
    assert code == 0 and err == ""
    validate(schema, "verify", payload)
    checks = {c["id"]: c["status"] for c in payload["checks"]}
    assert checks["weyl-order-51840"] == "PASS"
    assert payload["failed"] == 0 and payload["passed"] == payload["total"] == len(checks)
    assert [c["id"] for c in payload["checks"]] == sorted(checks)


def test_verify_single_check_tsv():
    code, out, _ = run_cli("verify", "--check", "count-lines-27", "--format", "tsv")
    assert code == 0
    assert out.split("\n")[1].startswith("count-lines-27\tPASS\t")


def test_verify_list(schema):
    out = run_json("verify", "--list")
    validate(schema, "verify_list", out)
    assert "weyl-order-51840" in out["checks"]


def test_verify_exits_one_on_failure(corrupted_gram):
    code, out, _ = run_cli("verify", "--check", "count-lines-27", "--check", "weyl-order-51840")
    assert code == 1
    assert {c["status"] for c in json.loads(out)["checks"]} == {"FAIL"}


@pytest.mark.parametrize("argv,needle", [
    (["info", "b7"], "position 1"),
    (["info", "L[1,1]"], "repeated index"),
    (["cohomology", "H", "--twists", "x..2"], "twist range"),
    (["cohomology", "H", "--twists", "3..1"], "empty"),
    (["verify", "--check", "nope"], "unknown check"),
    (["classify", "--c1", "H"], "--c2"),
    (["frobnicate"], "invalid choice"),
    ([], "required"),
    (["census", "--table", "other"], "invalid choice"),
])
def test_usage_errors(argv, needle, capsys):
    code, out, err = run_cli(*argv)
    captured = capsys.readouterr()
    assert code == 2 and out == ""
    assert needle in err + captured.err


def test_json_keys_are_sorted():
    code, out, _ = run_cli("info", "T[]")
    payload = json.loads(out)
    assert list(payload) == sorted(payload)
    assert out == json.dumps(payload, sort_keys=True, indent=2) + "\n"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "cubicacm", "info", "K"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["degree"] == -3
