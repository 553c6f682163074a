import json
from pathlib import Path

import pytest

from pytamari.cli import EXIT_INVALID, EXIT_OK, main


def test_build_reports_orbits(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["build", "--nu", "ENEN", "--delta", "0,0"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "nu=ENEN delta=(0,0): 5 elements, semidistributive: yes" in out
    assert "(order 6)" in out


def test_build_defaults_to_the_tamari_lattice(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["build", "--nu", "EN^2E^2N"]) == EXIT_OK
    assert "delta=(0,2,0): 10 elements" in capsys.readouterr().out


def test_build_pads_short_increment_vectors(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["build", "--nu", "EN^2E^2N", "--delta", "1,0"]) == EXIT_OK
    assert "delta=(0,1,0)" in capsys.readouterr().out


def test_build_with_statistics(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["build", "--nu", "ENEN", "--delta", "0,0", "--stats", "ddeg,area"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "orbit  size  ddeg  average" in out
    assert "homomesic: yes" in out


def test_build_json_export(tmp_path: Path) -> None:
    target = tmp_path / "hook.json"
    argv = ["build", "--nu", "ENEN", "--delta", "0,0", "--export", "json", "--out", str(target), "--stats", "ddeg"]
    assert main(argv) == EXIT_OK
    data = json.loads(target.read_text(encoding="utf-8"))
    assert data["size"] == 5
    assert data["orbits"]["order"] == 6
    assert sorted(data["orbits"]["sizes"]) == [2, 3]
    assert data["statistics"]["ddeg"]["homomesic"] is True


def test_build_dot_export_to_stdout(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["build", "--nu", "EN", "--export", "dot"]) == EXIT_OK
    assert "digraph" in capsys.readouterr().out


def test_build_all_deltas_writes_one_file_each(tmp_path: Path) -> None:
    target = tmp_path / "lattice.dot"
    assert main(["build", "--nu", "ENEN", "--all-deltas", "--export", "dot", "--out", str(target)]) == EXIT_OK
    assert sorted(path.name for path in tmp_path.iterdir()) == ["lattice-0_0.dot", "lattice-1_0.dot"]


@pytest.mark.parametrize(
    "argv",
    [
        ["build", "--nu", "X"],
        ["build", "--nu", "E^3NE^3N", "--delta", "4,0"],
        ["build", "--nu", "EN^2E^2N", "--max-elements", "5"],
        ["verify", "--suite", "engine", "--jobs", "0"],
        ["scan", "--max-north", "0"],
    ],
)
def test_invalid_input(argv: list[str], capsys: pytest.CaptureFixture[str]) -> None:
    assert main(argv) == EXIT_INVALID
    assert capsys.readouterr().err.startswith("pytamari: error:")


def test_unknown_statistic_is_a_usage_error() -> None:
    with pytest.raises(SystemExit) as excinfo:
        main(["build", "--nu", "EN", "--stats", "height"])
    assert excinfo.value.code == EXIT_INVALID


def test_verify_writes_a_report(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    target = tmp_path / "report.json"
    assert main(["verify", "--suite", "congruence", "--max-a", "3", "--out", str(target)]) == EXIT_OK
    assert "0 failed" in capsys.readouterr().out
    report = json.loads(target.read_text(encoding="utf-8"))
    assert report["failed"] == 0
    assert report["passed"] == len(report["results"])


def test_scan(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    target = tmp_path / "scan.json"
    assert main(["scan", "--nu", "EN^2E^2N", "--nu", "E^3NE^3N", "--out", str(target)]) == EXIT_OK
    assert "2 consistent, 0 counterexample, 0 skipped" in capsys.readouterr().out
    assert json.loads(target.read_text(encoding="utf-8"))["counterexamples"] == 0


def test_scan_skips_large_paths(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["scan", "--nu", "EN^2E^2N", "--max-elements", "5"]) == EXIT_OK
    assert "1 skipped" in capsys.readouterr().out
