import json
import subprocess
import sys

import pytest


def run(*args):
    return subprocess.run([sys.executable, "-m", "hilbmot", *args], capture_output=True, text=True)


def test_pd_text():
    r = run("pd", "--d", "4")
    assert r.returncode == 0
    assert r.stdout.strip() == "1 + L^2*t - L^2*t^2"


def test_partitions():
    assert run("partitions", "--n", "3", "--d", "6").stdout.strip() == "48"


def test_json_envelope():
    r = run("hilb", "--d", "3", "--n", "2", "--format", "json")
    doc = json.loads(r.stdout)
    assert doc["format_version"] == "1"
    assert doc["command"] == "hilb"
    assert doc["params"] == {"d": 3, "n": 2}
    assert doc["result"]["type"] == "lpoly"


def test_latex():
    r = run("gauss", "--k", "1", "--n", "2", "--format", "latex")
    assert r.stdout.strip() == r"\mathbb{L} + 1"


def test_deterministic():
    a = run("quot", "--d", "3", "--order", "2", "--format", "json").stdout
    assert a == run("quot", "--d", "3", "--order", "2", "--format", "json").stdout


@pytest.mark.parametrize(
    "args, code, prefix",
    [
        (("yclass", "--k", "3", "--d", "9"), 3, "UnknownStratum:"),
        (("quot", "--d", "5", "--n", "2", "--r", "2"), 3, "OutOfRange:"),
        (("partitions", "--n", "6", "--d", "9", "--budget", "10"), 3, "ResourceLimit:"),
        (("hilb", "--d", "3"), 2, "UsageError:"),
        (("nosuch",), 2, ""),
        (("verify", "--module", "nosuch"), 2, "UsageError:"),
    ],
)
def test_error_codes(args, code, prefix):
    r = run(*args)
    assert r.returncode == code
    assert r.stdout == ""
    assert prefix in r.stderr


def test_macmahon_report():
    r = run("macmahon", "--d", "6", "--n", "4", "--format", "json")
    assert json.loads(r.stdout)["result"]["value"]["epsilon"] == 1


def test_andrews_report():
    r = run("macmahon", "--k", "0", "--format", "json")
    v = json.loads(r.stdout)["result"]["value"]
    assert v["computed"] == {"0": 1, "1": 5, "2": 16}
    assert v["mismatched"] == []


def test_stab():
    assert run("stab", "--d", "5", "--n", "7").stdout.strip() == "true"


def test_verify_module():
    r = run("verify", "--module", "grassmann")
    assert r.returncode == 0
    assert r.stdout.count("PASS") == r.stdout.count("\n")
