"""Command-line behaviour: outputs, exit codes, determinism."""

import json

import pytest

from ptsep.cli import main
from ptsep.fixtures import ferrers_6531, scattered_11, staircase_19


@pytest.fixture()
def staircase_file(tmp_path):
    path = tmp_path / "staircase.txt"
    path.write_text(staircase_19().text())
    return str(path)


@pytest.fixture()
def small_file(tmp_path):
    path = tmp_path / "small.txt"
    path.write_text("[1,1] x [1,1]\n[1,1] x [1,2]\n[1,2] x [1,1]\n")
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_hilbert_singleton_all_ones(tmp_path, capsys):
    path = tmp_path / "one.txt"
    path.write_text("[1,0] x [1,0]\n")
    code, out, _ = run(capsys, "hilbert", str(path), "--box", "2,2")
    assert code == 0
    assert out.split() == ["1"] * 9


def test_hilbert_staircase_stabilizes(staircase_file, capsys):
    code, out, _ = run(capsys, "hilbert", staircase_file, "--box", "6,5")
    assert code == 0
    rows = [line.split() for line in out.strip().splitlines()]
    assert rows[5][4] == "19"
    assert rows[6][5] == "19"


def test_hilbert_ruling_pattern(tmp_path, capsys):
    path = tmp_path / "ruling.txt"
    path.write_text("".join(f"[1,1] x [1,{j}]\n" for j in range(1, 5)))
    code, out, _ = run(capsys, "hilbert", str(path), "--box", "1,5")
    assert code == 0
    assert out.strip().splitlines()[0].split() == ["1", "2", "3", "4", "4", "4"]


def test_hilbert_json_mode(staircase_file, capsys):
    code, out, _ = run(capsys, "hilbert", staircase_file, "--box", "2,2", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["box"] == [2, 2]
    assert [[0, 0], 1] in payload["values"]


def test_parse_error_exit_2(tmp_path, capsys):
    path = tmp_path / "bad.txt"
    path.write_text("[1,2 x [1,0]\n")
    code, _, err = run(capsys, "hilbert", str(path))
    assert code == 2 and "error" in err


def test_missing_file_exit_2(capsys):
    code, _, _ = run(capsys, "hilbert", "/nonexistent/points.txt")
    assert code == 2


def test_sepdeg_staircase(staircase_file, capsys):
    code, out, _ = run(capsys, "sepdeg", staircase_file, "--point", "13")
    assert code == 0
    assert "degree set: (2,3)" in out


def test_sepdeg_two_point_antidiagonal(tmp_path, capsys):
    path = tmp_path / "anti.txt"
    path.write_text("[1,1] x [1,2]\n[1,2] x [1,1]\n")
    code, out, _ = run(capsys, "sepdeg", str(path), "--point", "1")
    assert code == 0
    assert "degree set: (0,1) (1,0)" in out


def test_sepdeg_index_out_of_range(staircase_file, capsys):
    code, _, err = run(capsys, "sepdeg", staircase_file, "--point", "99")
    assert code == 4 and "out of range" in err


def test_sepdeg_json(staircase_file, capsys):
    code, out, _ = run(capsys, "sepdeg", staircase_file, "--point", "13", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["degree_set"] == [[2, 3]]
    assert "2,3" in payload["separators"]


def test_acm_verdict_6531(tmp_path, capsys):
    path = tmp_path / "f.txt"
    path.write_text(ferrers_6531().text())
    code, out, _ = run(capsys, "acm", str(path))
    assert code == 0
    assert "ACM: yes" in out
    assert "partition: 6,5,3,1" in out
    assert "conjugate: 4,3,3,2,2,1" in out
    assert "(4,1)" in out and "(3,3)" in out


def test_acm_non_star_witness(tmp_path, capsys):
    path = tmp_path / "s.txt"
    path.write_text(scattered_11().text())
    code, out, _ = run(capsys, "acm", str(path))
    assert code == 0
    assert "ACM: no" in out and "witness" in out


def test_acm_empty_input_exit_2(tmp_path, capsys):
    path = tmp_path / "empty.txt"
    path.write_text("\n")
    code, _, _ = run(capsys, "acm", str(path))
    assert code == 2


def test_acm_wrong_shape_exit_3(tmp_path, capsys):
    path = tmp_path / "p2.txt"
    path.write_text("[1,0,0] x [0,1,0]\n")
    code, _, _ = run(capsys, "acm", str(path))
    assert code == 3


def test_remove_preserved(staircase_file, capsys):
    code, out, _ = run(capsys, "remove", staircase_file, "--point", "13")
    assert code == 0
    assert "ACM_PRESERVED" in out
    assert "Hilbert consistency of the prediction: ok" in out


def test_remove_lost_small(small_file, capsys):
    code, out, _ = run(capsys, "remove", small_file, "--point", "1")
    assert code == 0
    assert "ACM_LOST" in out
    assert "3 before, 4 after" in out


def test_remove_non_acm_exit_5(tmp_path, capsys):
    path = tmp_path / "s.txt"
    path.write_text(scattered_11().text())
    code, _, _ = run(capsys, "remove", str(path), "--point", "1")
    assert code == 5


def test_remove_json(small_file, capsys):
    code, out, _ = run(capsys, "remove", small_file, "--point", "1", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["classification"] == "ACM_LOST"
    assert payload["nu_after"] == payload["nu_before"] + 1
    assert payload["kpoly_consistent"] is True


def test_hilbert_human_and_json_consistent(staircase_file, capsys):
    _, text, _ = run(capsys, "hilbert", staircase_file, "--box", "4,3")
    _, machine, _ = run(capsys, "hilbert", staircase_file, "--box", "4,3", "--json")
    grid = [line.split() for line in text.strip().splitlines()]
    payload = json.loads(machine)
    for (i, j), value in ((tuple(d), v) for d, v in payload["values"]):
        assert grid[i][j] == str(value)


def test_hilbert_triple_product_flat_output(tmp_path, capsys):
    path = tmp_path / "triple.txt"
    path.write_text("[1,1] x [1,2] x [1,3]\n[1,2] x [1,1] x [1,1]\n")
    code, out, _ = run(capsys, "hilbert", str(path), "--box", "1,1,1")
    assert code == 0
    assert "0,0,0: 1" in out
    assert "1,1,1: 2" in out


def test_acm_human_and_json_consistent(tmp_path, capsys):
    path = tmp_path / "f.txt"
    path.write_text(ferrers_6531().text())
    _, text, _ = run(capsys, "acm", str(path))
    _, machine, _ = run(capsys, "acm", str(path), "--json")
    payload = json.loads(machine)
    assert payload["acm"] is True
    assert "partition: " + ",".join(map(str, payload["partition"])) in text
    for shift in payload["s2"]:
        assert f"({shift[0]},{shift[1]})" in text


def test_outputs_deterministic(staircase_file, capsys):
    _, first, _ = run(capsys, "sepdeg", staircase_file, "--point", "13", "--json")
    _, second, _ = run(capsys, "sepdeg", staircase_file, "--point", "13", "--json")
    assert first == second


def test_sepdeg_product_28(tmp_path, capsys):
    from ptsep.fixtures import product_28, PRODUCT_28_PAIRS

    path = tmp_path / "prod.txt"
    path.write_text(product_28().text())
    index = PRODUCT_28_PAIRS.index((2, 2)) + 1
    code, out, _ = run(capsys, "sepdeg", str(path), "--point", str(index), "--box", "4,4")
    assert code == 0
    assert "degree set: (2,2)" in out


def test_remove_lost_6531(tmp_path, capsys):
    from ptsep.points import ProjPoint

    path = tmp_path / "f.txt"
    path.write_text(ferrers_6531().text())
    # point [1:2] x [1:3] sits inside the staircase: removal breaks (*)
    index = ferrers_6531().index_of(ProjPoint([(1, 2), (1, 3)])) + 1
    code, out, _ = run(capsys, "remove", str(path), "--point", str(index))
    assert code == 0
    assert "ACM_LOST" in out
    assert "3:" in out  # length-3 predicted table


def test_verify_subset(capsys):
    code, out, _ = run(capsys, "verify", "--criteria", "8")
    assert code == 0
    assert out.startswith("PASS")
    assert "1/1 criteria passed" in out


def test_verify_unknown_criterion(capsys):
    code, _, err = run(capsys, "verify", "--criteria", "77")
    assert code == 2 and "criterion" in err


def test_verify_failure_exit_1(monkeypatch, capsys):
    import ptsep.acceptance as acc

    def broken():
        return ["deliberately corrupted fixture"]

    monkeypatch.setattr(acc, "CRITERIA", ((8, "negative control", broken),))
    code, out, _ = run(capsys, "verify", "--criteria", "8")
    assert code == 1
    assert "FAIL" in out and "corrupted" in out


def test_jobs_env_validated(monkeypatch, capsys):
    monkeypatch.setenv("PTSEP_JOBS", "zero")
    code, _, err = run(capsys, "verify", "--criteria", "8")
    assert code == 2 and "PTSEP_JOBS" in err
    monkeypatch.setenv("PTSEP_JOBS", "2")
    code, _, _ = run(capsys, "verify", "--criteria", "8")
    assert code == 0
