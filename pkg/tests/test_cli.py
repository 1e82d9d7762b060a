import json
import subprocess
import sys

from fairauction.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_solve_json_walkthrough(capsys, walkthrough_path):
    code, out, err = run_cli(capsys, "solve", str(walkthrough_path), "--format", "json")
    assert code == 0, err
    report = json.loads(out)
    assert report["allocation"]["revenue"]["exact"] == "50"
    (ts,) = report["tie_settlements"]
    assert ts["shares"]["b0"] == {"exact": "29/59", "percent": "49.15%"}
    assert ts["shares"]["b1"] == {"exact": "30/59", "percent": "50.85%"}
    assert ts["payments"]["b0"]["decimal"] == "24.58"
    assert ts["payments"]["b1"]["decimal"] == "25.42"
    assert report["auctioneer_receipt"]["exact"] == "50"
    assert report["final_payments"] == []


def test_solve_text_walkthrough(capsys, walkthrough_path):
    code, out, err = run_cli(capsys, "solve", str(walkthrough_path))
    assert code == 0, err
    assert "revenue 50.00" in out
    assert "49.15%" in out and "50.85%" in out
    assert "Auctioneer receipt: 50.00" in out


def test_solve_two_bidder_vcg_payments(capsys, two_bidder_path):
    code, out, _ = run_cli(capsys, "solve", str(two_bidder_path), "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report["vcg"]["per_bidder"]["b0"]["payment"]["exact"] == "7"
    assert report["vcg"]["per_bidder"]["b1"]["payment"]["exact"] == "0"


def test_solve_oracle_flag(capsys, walkthrough_path):
    code, out, err = run_cli(capsys, "solve", str(walkthrough_path), "--oracle", "--format", "json")
    assert code == 0, err
    assert json.loads(out)["allocation"]["revenue"]["exact"] == "50"


def test_solve_reports_are_byte_identical(capsys, walkthrough_path):
    _, first, _ = run_cli(capsys, "solve", str(walkthrough_path), "--format", "json")
    _, second, _ = run_cli(capsys, "solve", str(walkthrough_path), "--format", "json")
    assert first == second


def test_solve_empty_bidders_exits_nonzero(capsys, tmp_path):
    path = tmp_path / "empty.json"
    path.write_text(
        '{"resources": ["r0"], "auctioneer_fairness": {"r0": 1}, "bidders": []}'
    )
    code, _, err = run_cli(capsys, "solve", str(path))
    assert code == 1
    assert "EmptyAuction" in err or "no positive-amount bids" in err


def test_solve_validation_error_exit_code(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(
        '{"resources": ["r0"], "auctioneer_fairness": {"r0": 1}, '
        '"bidders": [{"id": "b0", "fairness": {"r0": 1}, '
        '"bids": [{"items": ["r9"], "amount": 1}]}]}'
    )
    code, _, err = run_cli(capsys, "solve", str(path))
    assert code == 1
    assert "unknown_resource_in_bid" in err


def test_solve_parse_error_position(capsys, tmp_path):
    path = tmp_path / "syntax.json"
    path.write_text('{"resources": [,]}')
    code, _, err = run_cli(capsys, "solve", str(path))
    assert code == 1
    assert "line 1" in err


def test_solve_missing_file(capsys, tmp_path):
    code, _, err = run_cli(capsys, "solve", str(tmp_path / "nope.json"))
    assert code == 1
    assert err


def test_gen_deterministic_bytes(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    args = ["gen", "--seed", "1", "--resources", "3", "--bidders", "3",
            "--max-amount", "20"]
    assert main(args + ["--out", str(a)]) == 0
    assert main(args + ["--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_gen_matches_frozen_golden(tmp_path, generated_path):
    out = tmp_path / "gen.json"
    assert main(["gen", "--seed", "1", "--resources", "3", "--bidders", "3",
                 "--max-amount", "20", "--out", str(out)]) == 0
    assert out.read_bytes() == generated_path.read_bytes()


def test_gen_minimal_instance_is_valid(capsys, tmp_path):
    out = tmp_path / "tiny.json"
    assert main(["gen", "--seed", "5", "--resources", "1", "--bidders", "1",
                 "--max-amount", "9", "--out", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert payload["resources"] == ["r0"]
    assert len(payload["bidders"]) == 1


def test_sweep_identity_point_matches_solve(capsys, tmp_path, walkthrough_path):
    out = tmp_path / "sweep.json"
    code = main(["sweep", str(walkthrough_path), "--axis", "auctioneer-scale",
                 "--grid", "1", "--out", str(out)])
    assert code == 0
    sweep = json.loads(out.read_text())
    assert sweep["axis"] == "auctioneer-scale"
    assert len(sweep["samples"]) == 1
    sample = sweep["samples"][0]
    assert sample["value"] == "1"
    assert sample["receipt"]["exact"] == "50"
    assert sample["error"] is None


def test_sweep_grid_and_degenerate_point(capsys, tmp_path, walkthrough_path):
    out = tmp_path / "sweep.json"
    code = main(["sweep", str(walkthrough_path), "--axis", "bid-scale",
                 "--grid", "0,1,2", "--out", str(out)])
    assert code == 0
    sweep = json.loads(out.read_text())
    zero, one, two = sweep["samples"]
    assert zero["error"] is not None and "EmptyAuction" in zero["error"]
    assert one["receipt"]["exact"] == "50"
    assert two["receipt"]["exact"] == "100"
    assert sweep["summary"]["errors"] == "1"


def test_sweep_auctioneer_scale_four_points(tmp_path, walkthrough_path):
    out = tmp_path / "sweep.json"
    assert main(["sweep", str(walkthrough_path), "--axis", "auctioneer-scale",
                 "--grid", "0.5,1,2,4", "--out", str(out)]) == 0
    sweep = json.loads(out.read_text())
    assert [s["value"] for s in sweep["samples"]] == ["1/2", "1", "2", "4"]
    assert all(s["error"] is None for s in sweep["samples"])


def test_oracle_mismatch_exits_2(capsys, monkeypatch, walkthrough_path):
    from fractions import Fraction

    import fairauction.cli as cli
    from fairauction import Allocation

    monkeypatch.setattr(
        cli, "solve_wdp_bruteforce", lambda inst: Allocation((), Fraction(0))
    )
    code, _, err = run_cli(capsys, "solve", str(walkthrough_path), "--oracle")
    assert code == 2
    assert "internal error" in err


def test_module_entrypoint_subprocess(walkthrough_path):
    result = subprocess.run(
        [sys.executable, "-m", "fairauction", "solve", str(walkthrough_path),
         "--format", "json"],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0, result.stderr
    assert json.loads(result.stdout)["auctioneer_receipt"]["exact"] == "50"
