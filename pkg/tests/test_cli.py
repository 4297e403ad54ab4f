import json
import subprocess
import sys

import pytest

from kgroth import cli
from kgroth.partitions import Partition
from kgroth.verify import Failure, SuiteResult

FIXED_INPUTS = [
    ["expand", "--what", "G", "--lambda", "1", "--degree", "3", "--basis", "schur"],
    ["expand", "--what", "g", "--lambda", "2,1", "--basis", "monomial"],
    ["expand", "--what", "Gsum", "--lambda", "1", "--degree", "3", "--basis", "GBasis", "--format", "tsv"],
    ["pieri", "--family", "g", "--lambda", "1", "--a", "1"],
    ["pieri", "--family", "G", "--lambda", "2,1", "--a", "2", "--form", "altsum"],
    ["pieri", "--family", "G", "--lambda", "2,1", "--a", "2", "--form", "mobius"],
    ["mobius", "--lambda", "2", "--a", "2", "--side", "le"],
    ["mobius", "--lambda", "1", "--a", "1", "--side", "ge", "--format", "tsv"],
    ["product", "--family", "g", "--lambda", "2,1", "--a", "2"],
    ["product", "--family", "G", "--lambda", "1", "--a", "1", "--degree", "4"],
    ["verify", "--max-size", "2", "--max-a", "2"],
]


def run(capsys, argv):
    code = cli.main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def terms(out):
    return {tuple(t["part"]): t["coeff"] for t in json.loads(out)["terms"]}


def test_pieri_example(capsys):
    code, out, _ = run(capsys, ["pieri", "--family", "g", "--lambda", "1", "--a", "1"])
    assert code == 0
    assert terms(out) == {(2,): 1, (1, 1): 1, (1,): -1}
    assert [t["part"] for t in json.loads(out)["terms"]] == [[1], [1, 1], [2]]


def test_expand_example(capsys):
    code, out, _ = run(capsys, ["expand", "--what", "G", "--lambda", "1", "--degree", "3", "--basis", "schur"])
    assert code == 0
    body = json.loads(out)
    assert body["basis"] == "schur" and body["cutoff"] == 3
    assert terms(out) == {(1,): 1, (1, 1): -1, (1, 1, 1): 1}


def test_tsv_format(capsys):
    _, out, _ = run(capsys, ["expand", "--what", "G", "--lambda", "1", "--degree", "3", "--format", "tsv"])
    assert out == "[1]\t1\n[1,1]\t-1\n[1,1,1]\t1\n"


def test_empty_partition_spellings(capsys):
    outs = {run(capsys, ["pieri", "--family", "G", "--lambda", s, "--a", "3"])[1] for s in ("0", "")}
    assert len(outs) == 1
    assert terms(outs.pop()) == {(3,): 1}


def test_all_pieri_forms_agree(capsys):
    for family in ("g", "G"):
        seen = set()
        for form in ("closed", "altsum", "mobius"):
            code, out, _ = run(capsys, ["pieri", "--family", family, "--lambda", "2,1", "--a", "2",
                                        "--form", form, "--format", "tsv"])
            assert code == 0
            seen.add(out)
        assert len(seen) == 1


def test_mobius_json(capsys):
    _, out, _ = run(capsys, ["mobius", "--lambda", "1", "--a", "1", "--side", "ge"])
    body = json.loads(out)
    vals = {json.dumps(v["element"]): v["mobius"] for v in body["values"]}
    assert vals['"0^"'] == 1 and vals["[2, 1]"] == 1 and vals["[2]"] == -1


def test_product_is_multiplicity_free(capsys):
    _, out, _ = run(capsys, ["product", "--family", "G", "--lambda", "1", "--a", "1", "--degree", "3"])
    assert terms(out) == {(2,): 1, (1, 1): 1, (3,): 1, (2, 1): 1, (1, 1, 1): 1}


@pytest.mark.parametrize(
    "argv",
    [
        ["pieri", "--lambda", "1,2"],
        ["pieri", "--lambda", "x"],
        ["bogus"],
        ["expand", "--what", "G", "--lambda", "1"],
        ["expand", "--what", "G", "--lambda", "2,1", "--degree", "2"],
        ["expand", "--what", "g", "--lambda", "1", "--basis", "GBasis"],
        ["pieri", "--lambda", "1", "--a", "-1"],
        ["mobius", "--lambda", "1", "--a", "0"],
        ["product", "--family", "G", "--lambda", "1", "--a", "2", "--degree", "2"],
    ],
)
def test_bad_input_exits_2(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        code = cli.main(argv)
        raise SystemExit(code)
    assert exc.value.code == 2
    assert capsys.readouterr().err


def test_max_degree_env(capsys, monkeypatch):
    monkeypatch.setenv("GROTH_MAX_DEGREE", "2")
    code, _, err = run(capsys, ["expand", "--what", "G", "--lambda", "1", "--degree", "3"])
    assert code == 2 and "GROTH_MAX_DEGREE" in err
    code, _, _ = run(capsys, ["expand", "--what", "G", "--lambda", "1", "--degree", "2"])
    assert code == 0


def test_verify_small(capsys):
    code, out, _ = run(capsys, ["verify", "--max-size", "2", "--max-a", "2"])
    body = json.loads(out)
    assert code == 0 and body["ok"] and body["failures"] == 0
    for suite in body["suites"]:
        assert set(suite) >= {"suite", "cases", "failures"}
        assert suite["failures"] == 0
        assert suite["cases"] > 0


def test_verify_reports_failures(capsys, monkeypatch):
    bad = SuiteResult("fake", 3, [Failure(Partition([1]), 1, Partition([2]), 1, 2)])
    monkeypatch.setattr(cli, "run_all", lambda config: [bad])
    code, out, _ = run(capsys, ["verify", "--max-size", "1", "--max-a", "1"])
    body = json.loads(out)
    assert code == 1 and not body["ok"]
    assert body["suites"][0]["failures"] == 1
    assert body["suites"][0]["examples"] == [{"lam": [1], "a": 1, "mu": [2], "expected": 1, "got": 2}]


@pytest.mark.parametrize("argv", FIXED_INPUTS, ids=lambda a: " ".join(a[:3]))
def test_byte_identical_runs(argv):
    runs = [subprocess.run([sys.executable, "-m", "kgroth", *argv], capture_output=True) for _ in range(2)]
    assert runs[0].returncode == 0
    assert runs[0].stdout == runs[1].stdout
    assert runs[0].stdout
