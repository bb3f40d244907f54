import json
import os
import subprocess

import pytest

CLI = os.environ.get("PITAIL_CLI")

pytestmark = pytest.mark.skipif(CLI is None, reason="PITAIL_CLI not set")


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


def test_coeffs_known_values():
    r = run("coeffs", "--series", "7", "--J", "1")
    assert r.returncode == 0
    assert r.stdout.strip() == "-2/557403"

    r = run("coeffs", "--series", "23", "--J", "1")
    assert r.returncode == 0
    assert r.stdout.strip() == "1/3640"


def test_unknown_series_is_a_usage_error():
    r = run("coeffs", "--series", "99", "--J", "1")
    assert r.returncode == 2
    assert "series not in catalog" in r.stderr


def test_unknown_subcommand_and_flags():
    assert run("frobnicate").returncode == 2
    assert run("coeffs", "--series", "7", "--J", "1", "--bogus").returncode == 2
    assert run().returncode == 2


def test_bad_precision_is_a_usage_error():
    r = run("remainder", "--series", "7", "--n", "2", "--prec", "32")
    assert r.returncode == 2


def test_precision_failure_is_a_computational_error():
    r = run("accelerate", "--series", "23", "--n", "3", "--prec", "64")
    assert r.returncode == 3
    assert "increase precision" in r.stderr


def test_json_envelope_shape():
    r = run("coeffs", "--series", "23", "--J", "2", "--format", "json")
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    assert set(doc) == {"command", "params", "result", "warnings"}
    assert doc["command"] == "coeffs"
    assert doc["params"]["series"] == 23
    assert doc["result"]["c"] == ["1/3640", "-3035509/24114272000"]
    assert doc["warnings"] == []


def test_json_output_is_deterministic():
    a = run("catalog", "export", "--format", "json")
    b = run("catalog", "export", "--format", "json")
    assert a.returncode == 0
    assert a.stdout == b.stdout


def test_catalog_export_round_trip():
    r = run("catalog", "export", "--format", "json")
    doc = json.loads(r.stdout)
    rows = doc["result"]
    assert len(rows) == 36
    assert rows[6]["id"] == 7
    assert rows[6]["p"] == {"coeff": "426880", "radicand": 10005}
    assert rows[6]["t"] == "-1/151931373056000"
    assert rows[32]["conjectural"] is True


def test_conjectural_warning():
    r = run("signs", "--series", "33", "--J", "10")
    assert r.returncode == 0
    assert r.stdout.strip() == "--++--++"
    assert "conjectural" in r.stderr

    doc = json.loads(run("signs", "--series", "33", "--J", "10",
                         "--format", "json").stdout)
    assert any("conjectural" in w for w in doc["warnings"])


def test_alpha_coeffs_lines():
    r = run("alpha-coeffs", "--q", "1/2", "--J", "4")
    assert r.returncode == 0
    assert r.stdout.split() == ["-3/8", "0", "1/64"]


def test_envelope_pass_exit_code():
    r = run("envelope", "--L-max", "1", "--n-max", "2", "--prec", "128")
    assert r.returncode == 0
    assert "holds" in r.stdout


def test_envelope_violation_exit_code():
    # the bracketing property is specific to the alternating boundary
    # series; a fast-converging row lands outside the bracket
    r = run("envelope", "--L-max", "1", "--n-max", "2", "--series", "34",
            "--prec", "128")
    assert r.returncode == 1
    assert "violated" in r.stdout
    assert "exploratory" in r.stderr


def test_remainder_json_fields():
    r = run("remainder", "--series", "7", "--n", "2", "--J", "3",
            "--format", "json")
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    res = doc["result"]
    for key in ("remainder", "normalizer", "ratio", "expansion", "abs_error",
                "scaled_error"):
        assert "value" in res[key] and "bits" in res[key]
    assert res["series"] == 7 and res["n"] == 2 and res["J"] == 3
