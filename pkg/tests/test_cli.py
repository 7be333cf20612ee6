import json

import pytest

from fmk.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_classify_table_row_count(capsys):
    code, out, _ = run(capsys, "classify", "--n", "3", "--kmax", "4")
    assert code == 0
    lines = [l for l in out.strip().splitlines() if l.strip()]
    assert len(lines) == 2 + 5  # header, rule, identity + four operator rows
    assert "Lambda_G" in out and "poly^4" in out


def test_classify_rank_two_fiber_label(capsys):
    code, out, _ = run(capsys, "classify", "--n", "2", "--kmax", "3")
    assert code == 0
    assert "poly" not in out  # rank two fibers collapse to the trivial label
    assert out.count("triv") >= 4


def test_classify_kmax_zero(capsys):
    code, out, _ = run(capsys, "classify", "--n", "3", "--kmax", "0")
    assert code == 0
    rows = [l for l in out.strip().splitlines()[2:] if l.strip()]
    assert len(rows) == 1 and rows[0].startswith("identity")


def test_classify_json_round_trip(capsys):
    code, out, _ = run(capsys, "classify", "--n", "3", "--kmax", "2",
                       "--family", "all", "--format", "json")
    assert code == 0
    data = json.loads(out)
    from fmk.engine import ClassificationRecord
    records = [ClassificationRecord.from_json(r) for r in data["records"]]
    assert [r.to_json() for r in records] == data["records"]


def test_verify_pass_exit_code(capsys):
    code, out, _ = run(capsys, "verify", "--n", "3", "--k", "3", "--max-deg", "6")
    assert code == 0
    assert out.startswith("PASS")


def test_verify_wrong_parameter_exit_code(capsys):
    code, out, _ = run(capsys, "verify", "--n", "3", "--k", "3",
                       "--lambda", "0", "--max-deg", "4")
    assert code == 1
    assert out.startswith("FAIL") and "witness" in out


def test_verify_first_order_case(capsys):
    code, out, _ = run(capsys, "verify", "--n", "4", "--k", "1", "--max-deg", "4")
    assert code == 0


def test_ktypes_table(capsys):
    code, out, _ = run(capsys, "ktypes", "--n", "3", "--k", "3", "--alpha", "+")
    assert code == 0
    assert "H^0(dim 1) + H^2(dim 5)" in out and "total 6" in out
    assert "m >= 4" in out


def test_ktypes_rank_two_usage_error(capsys):
    code, _, err = run(capsys, "ktypes", "--n", "2", "--k", "1", "--alpha", "+")
    assert code == 2
    assert "n >= 3" in err


def test_standardness_table(capsys):
    code, out, _ = run(capsys, "standardness", "--n", "3", "--kmax", "5")
    assert code == 0
    rows = [l for l in out.strip().splitlines()[2:] if l.strip()]
    assert len(rows) == 6
    assert all("standard" in row for row in rows)


def test_standardness_rank_two_usage_error(capsys):
    code, _, err = run(capsys, "standardness", "--n", "2", "--kmax", "1")
    assert code == 2


def test_reducibility_scan(capsys):
    code, out, _ = run(capsys, "reducibility", "--n", "4", "--s", "-3..5")
    assert code == 0
    rows = [l.split() for l in out.strip().splitlines()[2:]]
    reducible = [r[0] for r in rows if r[1] == "reducible"]
    assert reducible == ["0", "1", "2", "3", "4", "5"]


def test_reducibility_bad_values(capsys):
    code, _, err = run(capsys, "reducibility", "--n", "4", "--s", "5..1")
    assert code == 2
    code, _, err = run(capsys, "reducibility", "--n", "4", "--s", "abc")
    assert code == 2


def test_out_file(tmp_path, capsys):
    target = tmp_path / "table.json"
    code, out, _ = run(capsys, "classify", "--n", "2", "--kmax", "1",
                       "--format", "json", "--out", str(target))
    assert code == 0 and out == ""
    data = json.loads(target.read_text())
    assert len(data["records"]) == 2


def test_unknown_flag_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["classify", "--n", "3", "--bogus"])
    assert exc.value.code == 2


def test_missing_subcommand_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2


def test_fmk_threads_env(capsys, monkeypatch):
    monkeypatch.setenv("FMK_THREADS", "3")
    code, out, _ = run(capsys, "verify", "--n", "3", "--k", "1")
    assert code == 0 and out.startswith("PASS")
