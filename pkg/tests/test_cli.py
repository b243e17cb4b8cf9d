import json
import subprocess
import sys
from pathlib import Path

import jsonschema
import pytest

from golden_commands import GOLDEN
from semicov import schema
from semicov.cli import dot_label, main
from semicov.semigroup import from_generators, natural, ordinary

GOLDEN_DIR = Path(__file__).parent / "golden"


def run(capsys, cmd):
    rc = main(cmd.split())
    out, err = capsys.readouterr()
    return rc, out, err


@pytest.mark.parametrize("name", sorted(GOLDEN))
def test_golden(capsys, name):
    rc, out, _ = run(capsys, GOLDEN[name])
    assert rc == 0
    assert out == (GOLDEN_DIR / f"{name}.txt").read_text()


@pytest.mark.parametrize("cmd, expected", [
    ("theta enumerate --gens 3,7,8 --format count", "6"),
    ("coe closure --frobenius 7 --set 5 --format msg", "4,5,6"),
    ("coe enumerate --frobenius 7 --format count", "6"),
    ("theta rank1 --gens 5,7,9 --format count", "8"),
    ("coe rank1 --frobenius 7 --format count", "4"),
])
def test_outputs(capsys, cmd, expected):
    rc, out, _ = run(capsys, cmd)
    assert rc == 0 and out.strip() == expected


def test_ns_info_natural(capsys):
    rc, out, _ = run(capsys, "ns info --gens 1")
    doc = json.loads(out)
    assert rc == 0 and doc["frobenius"] == -1 and doc["genus"] == 0


@pytest.mark.parametrize("cmd, code", [
    ("coe enumerate --frobenius 4", "EVEN_FROBENIUS"),
    ("ns info --gens 4,6", "GCD_NOT_ONE"),
    ("theta closure --gens 3,7,8 --set 3", "NOT_THETA_SET"),
    ("coe closure --frobenius 7 --set 3", "NOT_AN_FSET"),
    ("coe msg --frobenius 7 --member 3,7,8", "NOT_A_MEMBER"),
    ("theta enumerate --gens 5,7 --max-members 10", "LIMIT_EXCEEDED"),
])
def test_domain_errors_exit_1(capsys, cmd, code):
    rc, out, err = run(capsys, cmd)
    assert rc == 1
    assert out == ""
    assert f": {code}: " in err


@pytest.mark.parametrize("cmd", [
    "",
    "theta",
    "theta enumerate",
    "theta enumerate --gens 3,x",
    "coe enumerate --frobenius 7 --format xml",
    "theta closure --gens 3,7,8 --set 4 --format dot",
])
def test_usage_errors_exit_2(capsys, cmd):
    with pytest.raises(SystemExit) as exc:
        main(cmd.split())
    assert exc.value.code == 2


def test_tree_missing_source_is_usage_error(capsys):
    rc, _, err = run(capsys, "tree --family coe")
    assert rc == 2 and "--frobenius" in err


def test_env_overrides_member_cap(capsys, monkeypatch):
    monkeypatch.setenv("SEMICOV_MAX_MEMBERS", "3")
    rc, _, err = run(capsys, "theta enumerate --gens 3,7,8 --format count")
    assert rc == 1 and "LIMIT_EXCEEDED" in err
    rc, out, _ = run(capsys, "theta enumerate --gens 3,7,8 --format count --max-members 6")
    assert rc == 0 and out.strip() == "6"


@pytest.mark.parametrize("cmd, sch", [
    ("theta enumerate --gens 3,7,8", schema.FAMILY),
    ("theta enumerate --gens 5,7", schema.FAMILY),
    ("coe enumerate --frobenius 11", schema.FAMILY),
    ("theta closure --gens 5,7,9 --set 4,6", schema.SEMIGROUP),
    ("coe closure --frobenius 9 --set 4", schema.SEMIGROUP),
    ("ns info --gens 1", schema.INFO),
    ("ns info --gens 5,7,9", schema.INFO),
    ("theta msg --gens 5,7 --member 3,4,5", schema.GENERATORS),
    ("coe msg --frobenius 7 --member 4,5,6", schema.GENERATORS),
    ("theta rank1 --gens 5,7,9", schema.RANK1),
    ("coe rank1 --frobenius 11", schema.RANK1),
    ("coe check --gens 4,5,6", schema.COE_CHECK),
])
def test_json_matches_schema(capsys, cmd, sch):
    rc, out, _ = run(capsys, cmd)
    assert rc == 0
    doc = json.loads(out)
    jsonschema.validate(doc, sch)


def test_family_json_arrays_ascending(capsys):
    _, out, _ = run(capsys, "coe enumerate --frobenius 11")
    doc = json.loads(out)
    for sg in doc["members"]:
        assert sg["msg"] == sorted(sg["msg"]) and sg["gaps"] == sorted(sg["gaps"])
    for child, parent in doc["edges"]:
        assert parent < child
        assert set(doc["members"][parent]["gaps"]) - set(doc["members"][child]["gaps"]) != set()


def test_dot_labels():
    assert dot_label(from_generators([4, 5, 6])) == "4,5,6"
    assert dot_label(ordinary(7).adjoin(4)) == "4∪{8,→}"
    assert dot_label(ordinary(7)) == "{0,8,→}"
    assert dot_label(natural()) == "1"


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "semicov", "theta", "enumerate", "--gens", "3,7,8", "--format", "count"],
        capture_output=True, text=True, check=True,
    )
    assert res.stdout == "6\n"
