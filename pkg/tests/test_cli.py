import json

import pytest

from floqising.cli import main


def test_run_preset_to_file(tmp_path):
    out = tmp_path / "fig2a.csv"
    assert main(["run", "--preset", "fig2a", "--out", str(out)]) == 0
    lines = out.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "cycle,observable,index,value"
    assert len(lines) == 113


def test_run_preset_stdout(capsys):
    assert main(["run", "--preset", "fig2a"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "cycle,observable,index,value"
    assert len(lines) == 113


def test_run_repeat_byte_identical(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    main(["run", "--preset", "fig3", "--out", str(a)])
    main(["run", "--preset", "fig3", "--out", str(b)])
    assert a.read_bytes() == b.read_bytes()


def test_run_json_format(tmp_path):
    out = tmp_path / "fig4.json"
    assert main(["run", "--preset", "fig4_h4", "--format", "json", "--out", str(out)]) == 0
    doc = json.loads(out.read_text(encoding="utf-8"))
    assert doc["config"]["name"] == "fig4_h4"
    assert len(doc["records"]) == 160


def test_run_with_shots_seed(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    args = ["run", "--preset", "fig4_h8", "--shots", "400", "--seed", "5"]
    main(args + ["--out", str(a)])
    main(args + ["--out", str(b)])
    assert a.read_bytes() == b.read_bytes()


def test_run_config_file(tmp_path):
    cfg = {
        "name": "mini",
        "engine": "floquet",
        "params": {"J": 0.785, "mu": 0.314, "h": 0.0, "n": 3},
        "initial": "100",
        "cycles": 2,
        "observables": [{"name": "total_kinks"}],
        "output": {"format": "csv"},
    }
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps(cfg), encoding="utf-8")
    out = tmp_path / "mini.csv"
    assert main(["run", "--config", str(path), "--out", str(out)]) == 0
    assert len(out.read_text(encoding="utf-8").splitlines()) == 1 + 3


def test_run_bad_config_exits_2(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"name": "x", "engine": "floquet"}), encoding="utf-8")
    assert main(["run", "--config", str(path)]) == 2
    assert "error:" in capsys.readouterr().err


def test_run_missing_config_file_exits_2(tmp_path, capsys):
    assert main(["run", "--config", str(tmp_path / "nope.json")]) == 2
    assert "error:" in capsys.readouterr().err


def test_run_requires_source():
    with pytest.raises(SystemExit):
        main(["run"])


def test_gauge_audit_passes(capsys):
    assert main(["gauge-audit", "--sites", "3", "--boundary", "open", "--draws", "5"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["max_commutator_norm"] < 1e-10
    assert report["projector_rank"] == report["expected_rank"]


def test_gauge_audit_periodic(capsys):
    assert main(["gauge-audit", "--sites", "4", "--boundary", "periodic", "--draws", "3"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["boundary"] == "periodic"
    assert report["n_links"] == 4


def test_trotter_scan_default_ladder(capsys):
    assert main(["trotter-scan"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["dt"] == [0.1, 0.05, 0.025]
    for r in doc["successive_ratios"]:
        assert abs(r - 0.25) < 0.1


def test_trotter_scan_custom(capsys):
    assert main(["trotter-scan", "--dt-list", "0.2,0.1", "--sites", "3", "--h", "0.0"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert len(doc["error"]) == 2
    assert doc["params"]["h"] == 0.0


def test_trotter_scan_empty_list_exits_2(capsys):
    assert main(["trotter-scan", "--dt-list", ""]) == 2
    assert "dt-list" in capsys.readouterr().err


def test_list_presets(capsys):
    assert main(["list-presets"]) == 0
    out = capsys.readouterr().out
    for name in ("fig2a", "fig3", "fig4_ham_h4"):
        assert name in out
    assert "engine=hamiltonian" in out
