import json
from pathlib import Path

import pytest

from fermionic.characters import WeightGradedCharacter
from fermionic.cli import main
from fermionic.kostka import KostkaMatrix
from fermionic.qseries import LaurentPolynomial

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


GOLDEN_CASES = [
    ("sl4_kostka.txt", "kostka-matrix --rank 3 --width 4 --size-max 12 --residue 0"),
    ("sl4_kostka_inverse.txt", "kostka-matrix --rank 3 --width 4 --size-max 12 --residue 0 --inverse"),
    ("sl3_kostka.txt", "kostka-matrix --rank 2 --width 3 --size-max 9 --residue 0"),
    ("sl2_vacuum.txt", "char --rank 1 --level 1 --lambda 0 --max-degree 4"),
    ("sl3_adjoint_top.txt", "char --rank 2 --level 2 --lambda 1,1 --max-degree 0"),
    ("sl2_principal.txt", "fusion-char --principal --rank 1 --level 1 --n 1 --max-degree 3"),
    ("sl2_level2_strings.txt", "char --rank 1 --level 2 --lambda 0 --max-degree 3 --strings"),
    ("kostka_json.txt", "kostka --rank 3 --lambda 0,0,0 --n 1,0,1 --format json"),
]


@pytest.mark.parametrize("name,cmd", GOLDEN_CASES, ids=[c[0] for c in GOLDEN_CASES])
def test_golden_output(capsys, name, cmd):
    code, out, err = run(capsys, *cmd.split())
    assert code == 0 and err == ""
    assert out == (GOLDEN / name).read_text()


def test_golden_inverse_has_corner_entry():
    text = (GOLDEN / "sl4_kostka_inverse.txt").read_text()
    first_row = text.splitlines()[2]
    assert "-q^3" in first_row


@pytest.mark.parametrize(
    "args,expected",
    [
        ("--rank 3 --lambda 0,0,0 --n 1,0,1", "q"),
        ("--rank 3 --lambda 0,2,0 --n 1,2,1", "q + q^2"),
        ("--rank 2 --lambda 0,0 --n 0,0", "1"),
        ("--rank 2 --lambda 1,0 --n 1,1", "0"),
    ],
)
def test_kostka_values(capsys, args, expected):
    code, out, _ = run(capsys, "kostka", *args.split())
    assert code == 0
    assert out.strip() == expected


def test_width_zero_matrix(capsys):
    code, out, _ = run(capsys, "kostka-matrix", "--rank", "3", "--width", "0", "--size-max", "12", "--residue", "0")
    assert code == 0
    assert "[1]" in out and len(out.splitlines()) == 4


def test_vacuum_line(capsys):
    code, out, _ = run(capsys, "char", "--rank", "1", "--level", "1", "--lambda", "0", "--max-degree", "4")
    assert "[0]: 1 + q + 2*q^2 + 3*q^3 + 5*q^4" in out.splitlines()


def test_general_assembly_runs(capsys):
    code, out, _ = run(
        capsys, "char", "--rank", "3", "--level", "4", "--lambda", "1,2,1", "--max-degree", "1", "--formula", "general"
    )
    assert code == 0
    assert "[1,2,1]: 1 + " in out


@pytest.mark.parametrize(
    "argv",
    [
        "kostka --rank 3 --lambda 0,0 --n 1,0,1",
        "kostka --rank 3 --lambda 0,x,0 --n 1,0,1",
        "kostka --rank 0 --lambda 0 --n 0",
        "kostka --rank 2 --lambda -1,0 --n 1,1",
        "char --rank 1 --level 1 --lambda 0 --max-degree -1",
        "char --rank 2 --level 2 --lambda 1,1 --max-degree 2 --formula rect",
        "kostka-matrix --rank 2 --width 2 --size-max 4 --residue 5",
        "nonsense",
        "",
    ],
)
def test_malformed_input_exits_2(capsys, argv):
    code, out, err = run(capsys, *argv.split())
    assert code == 2
    assert out == ""
    assert err.startswith("fermionic: error: ") and err.count("\n") == 1


@pytest.mark.parametrize(
    "argv",
    [
        "char --rank 2 --level 1 --lambda 1,1 --max-degree 2",
        "fusion-char --rank 3 --level 3 --n 1,2,1 --max-degree 2",
        "fusion-char --principal --rank 1 --level 0 --n 1 --max-degree 2",
    ],
)
def test_level_violation_exits_3(capsys, argv):
    code, out, err = run(capsys, *argv.split())
    assert code == 3
    assert out == ""
    assert "level" in err


def _reparse(kind, data):
    if kind == "matrix":
        return KostkaMatrix.from_json(data).to_json()
    if kind == "char":
        return WeightGradedCharacter.from_json(data).to_json()
    data = dict(data)
    data["poly"] = LaurentPolynomial.from_json(data["poly"]).to_json()
    return data


@pytest.mark.parametrize(
    "kind,argv",
    [
        ("poly", "kostka --rank 3 --lambda 0,2,0 --n 1,2,1"),
        ("matrix", "kostka-matrix --rank 3 --width 4 --size-max 12 --residue 0 --inverse"),
        ("char", "char --rank 2 --level 2 --lambda 1,0 --max-degree 3"),
        ("char", "fusion-char --rank 2 --level 2 --n 1,1 --max-degree 2"),
        ("char", "fusion-char --principal --rank 1 --level 2 --n 2 --max-degree 3"),
    ],
)
def test_json_roundtrip_is_byte_identical(capsys, kind, argv):
    code, out, _ = run(capsys, *argv.split(), "--format", "json")
    assert code == 0
    rebuilt = _reparse(kind, json.loads(out))
    assert json.dumps(rebuilt, indent=2) + "\n" == out


def test_strings_json(capsys):
    code, out, _ = run(capsys, "char", "--rank", "1", "--level", "2", "--lambda", "0", "--max-degree", "3", "--strings", "--format", "json")
    data = json.loads(out)
    by_weight = {tuple(s["weight"]): s for s in data["strings"]}
    assert by_weight[(2,)]["offset"] == "1/2"
    assert by_weight[(0,)]["offset"] == "0"


def test_identical_runs_give_identical_output(capsys):
    argv = "fusion-char --rank 2 --level 3 --n 1,1 --max-degree 3".split()
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second


def test_verify_suite_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "paper-tables")
    assert code == 0 and out.rstrip().endswith("result: PASS")
    code, out, _ = run(capsys, "verify", "--suite", "oracle-lr", "--max-size", "5")
    assert code == 0
    code, out, _ = run(capsys, "verify", "--suite", "internal-identities", "--max-degree", "3")
    assert code == 0
    # the literal composite identity for single-row rectangles does not hold
    code, out, _ = run(capsys, "verify", "--suite", "oracle-charge", "--max-size", "4")
    assert code == 1 and "result: FAIL" in out


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "oracle-weyl-kac", "--max-degree", "3", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["ok"] is True
