import csv
import json

import pytest

from tfmzv.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_eval_json(capsys):
    code, out, _ = run(capsys, "eval", "--prime", "5", "--index", "1,2")
    assert code == 0
    assert json.loads(out) == {"p": 5, "index": [1, 2], "tcoeffs": [1]}


def test_eval_scalars(capsys):
    assert run(capsys, "eval", "--prime", "5", "--index", "1,2", "--star")[1].strip() == "1"
    assert run(capsys, "eval", "--prime", "5", "--index", "2,1", "--strict")[1].strip() == "4"


def test_eval_bad_prime(capsys):
    code, _, err = run(capsys, "eval", "--prime", "4", "--index", "1")
    assert code == 2 and "even" in err
    code, _, err = run(capsys, "eval", "--prime", "9", "--index", "1")
    assert code == 2 and "3 divides 9" in err


def test_eval_bad_index(capsys):
    for bad in ("", "1,0", "a"):
        with pytest.raises(SystemExit) as exc:
            main(["eval", "--prime", "5", "--index", bad])
        assert exc.value.code == 2


def test_eval_writes_cache(capsys, tmp_path):
    run(capsys, "eval", "--prime", "7", "--index", "1,2,1", "--cache", str(tmp_path))
    lines = (tmp_path / "tvalues.jsonl").read_text().splitlines()
    assert any(json.loads(x)["index"] == [1, 2, 1] for x in lines)


def test_verify_duality_t(capsys):
    code, out, err = run(capsys, "verify", "duality-t", "--max-weight", "6", "--prime-min", "11", "--prime-max", "97")
    assert code == 0
    doc = json.loads(out)
    assert doc["summary"]["fail"] == 0 and doc["summary"]["pass"] == len(doc["outcomes"])
    assert "0 fail" in err


def test_verify_csv_out(capsys, tmp_path):
    target = tmp_path / "report.csv"
    code, _, _ = run(capsys, "verify", "weighted-sum", "harmonic", "--max-weight", "4", "--prime-max", "31",
                     "--format", "csv", "--out", str(target))
    assert code == 0
    rows = list(csv.DictReader(target.open()))
    assert rows and {r["theorem"] for r in rows} == {"weighted-sum", "harmonic"}
    assert all(r["status"] == "pass" for r in rows)


def test_verify_unknown_id(capsys):
    code, _, err = run(capsys, "verify", "no-such-id")
    assert code == 2 and "valid ids" in err and "duality-t" in err


def test_verify_usage_errors(capsys):
    assert run(capsys, "verify", "harmonic", "--jobs", "0")[0] == 2
    assert run(capsys, "verify", "harmonic", "--prime-min", "50", "--prime-max", "20")[0] == 2
    assert run(capsys, "verify", "harmonic", "--prime-max", "20000")[0] == 2
    assert run(capsys, "verify", "harmonic", "--max-weight", "0")[0] == 2


def test_verify_empty(capsys):
    code, out, _ = run(capsys, "verify")
    assert code == 0 and json.loads(out)["outcomes"] == []


def test_list(capsys):
    code, out, _ = run(capsys, "list")
    assert code == 0 and "keyprop-bb" in out and "per-prime-exact" in out


def test_verify_failure_exit(capsys, monkeypatch):
    from tfmzv.fp import FpPoly
    from tfmzv.suite import relations
    from tfmzv.suite.runner import _plan

    monkeypatch.setitem(relations.NUMERIC_BUILDERS, "plain-sum", lambda k, r: (lambda ctx: FpPoly(ctx.p, [1])))
    _plan.cache_clear()
    try:
        code, out, err = run(capsys, "verify", "plain-sum", "--max-weight", "2", "--prime-max", "13")
    finally:
        _plan.cache_clear()
    assert code == 1
    assert "FAIL plain-sum" in err and "p=11" in err
    assert json.loads(out)["outcomes"][0]["residual"] == [1]
