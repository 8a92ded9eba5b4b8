"""
CLI 테스트 - 종료 코드와 출력 파일
"""

import json

import pytest

from simulate import EXIT_NUMERIC, EXIT_OK, EXIT_VALIDATION, main


def write_json(path, data):
    path.write_text(json.dumps(data), encoding="utf-8")
    return path


SCENARIO = {
    "name": "cli",
    "mode": "rwa-single",
    "qubit": {"epsilon0": 1.0, "delta": 0.3},
    "drive": {"omega": 1.0, "pulses": [{"amplitude": 0.19, "center": 60.0, "width": 10.0}]},
    "resonance": {"order": 1},
    "grid": {"t_end": 120.0, "n_points": 121},
}


@pytest.fixture
def common(tmp_path, recipe_dir):
    return [
        "--output-dir", str(tmp_path / "out"),
        "--log-dir", str(tmp_path / "logs"),
        "--recipe-dir", str(recipe_dir),
        "--log-level", "WARNING",
    ]


def test_run_scenario_file(tmp_path, common):
    path = write_json(tmp_path / "scenario.json", SCENARIO)
    assert main(["run", str(path), *common]) == EXIT_OK
    csv = tmp_path / "out" / "cli.csv"
    assert csv.read_text(encoding="utf-8").splitlines()[0] == "t,p2,re_c1,im_c1,re_c2,im_c2"
    assert len(csv.read_text(encoding="utf-8").splitlines()) == 122
    assert (tmp_path / "out" / "cli.json").is_file()


def test_missing_block_exits_with_validation_error(tmp_path, common, capsys):
    data = {key: value for key, value in SCENARIO.items() if key != "drive"}
    path = write_json(tmp_path / "scenario.json", data)
    assert main(["run", str(path), *common]) == EXIT_VALIDATION
    assert "drive" in capsys.readouterr().out
    assert not (tmp_path / "out" / "cli.csv").exists()


def test_unknown_target_exits_with_validation_error(tmp_path, common):
    assert main(["run", str(tmp_path / "absent.json"), *common]) == EXIT_VALIDATION
    assert main(["run", "fig1a/magnus", *common]) == EXIT_VALIDATION


def test_malformed_json_exits_with_validation_error(tmp_path, common):
    path = tmp_path / "broken.json"
    path.write_text("{not json", encoding="utf-8")
    assert main(["run", str(path), *common]) == EXIT_VALIDATION


def test_numeric_failure_exits_with_numeric_code(tmp_path, common):
    data = dict(SCENARIO, mode="oracle", ode={"method": "rk4-fixed", "step": 2.0, "max_norm_drift": 1e-12})
    path = write_json(tmp_path / "scenario.json", data)
    assert main(["run", str(path), *common]) == EXIT_NUMERIC


def test_invalid_option_values(tmp_path, common):
    path = write_json(tmp_path / "scenario.json", SCENARIO)
    assert main(["run", str(path), *common, "--jobs", "0"]) == EXIT_VALIDATION
    assert main(["run", str(path), *common, "--tolerance-scale", "-1"]) == EXIT_VALIDATION


def test_recipe_run_writes_one_file_per_mode(tmp_path, common):
    assert main(["run", "fig1a", *common]) == EXIT_OK
    assert (tmp_path / "out" / "fig1a_rwa-single.csv").is_file()
    assert (tmp_path / "out" / "fig1a_oracle.csv").is_file()


def test_sweep_file(tmp_path, common):
    write_json(tmp_path / "scenario.json", SCENARIO)
    sweep = write_json(tmp_path / "sweep.json", {
        "name": "amplitudes",
        "scenario": "scenario.json",
        "parameter": "drive.pulses[0].amplitude",
        "values": {"start": 0.1, "stop": 0.2, "num": 3},
        "reduction": "final_p2",
    })
    assert main(["sweep", str(sweep), *common, "--jobs", "2"]) == EXIT_OK
    lines = (tmp_path / "out" / "amplitudes.csv").read_text(encoding="utf-8").splitlines()
    assert lines[0] == "index,drive.pulses[0].amplitude,final_p2,error"
    assert len(lines) == 4


def test_sweep_command_rejects_plain_recipe(common):
    assert main(["sweep", "fig1a", *common]) == EXIT_VALIDATION


def test_recipes_listing(common, capsys):
    assert main(["recipes", *common]) == EXIT_OK
    out = capsys.readouterr().out
    assert "레시피 8개" in out
    assert "fig8:" in out
    assert main(["recipes", "--show", "fig6", *common]) == EXIT_OK


def test_identical_runs_are_byte_identical(tmp_path, recipe_dir):
    path = write_json(tmp_path / "scenario.json", SCENARIO)
    outputs = []
    for run in ("first", "second"):
        args = ["run", str(path), "--output-dir", str(tmp_path / run), "--log-dir", str(tmp_path / "logs"),
                "--recipe-dir", str(recipe_dir)]
        assert main(args) == EXIT_OK
        outputs.append((tmp_path / run / "cli.csv").read_bytes())
        outputs.append((tmp_path / run / "cli.json").read_bytes())
    assert outputs[0] == outputs[2]
    assert outputs[1] == outputs[3]
