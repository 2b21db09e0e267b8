import json

import pytest

from cesembed import __version__
from cesembed.app.cli import build_parser, build_request, main

HALF_LINE = "ces:1,1:pow:-2,pow:0@(1,inf)"


@pytest.fixture
def small_config(tmp_path):
    path = tmp_path / "cesembed.yml"
    path.write_text(
        "grid_size: 16\nrestarts: 2\nascent_iters: 100\nladder_rungs: 3\n", encoding="utf-8"
    )
    return str(path)


def test_check_finite(small_config, capsys):
    code = main(["check", "--source", HALF_LINE, "--target", HALF_LINE, "--config", small_config])
    data = json.loads(capsys.readouterr().out)
    assert code == 0
    assert data["regime"] == "i"
    assert data["finite"] is True
    assert data["oracle"]["best_ratio"] == pytest.approx(1.0, rel=1e-6)


def test_constants_infinite_in_text(capsys):
    code = main(
        [
            "constants",
            "--source",
            "ces:1,1:pow:0,pow:1@(0,1)",
            "--target",
            "ces:1,1:pow:0,pow:0@(0,1)",
            "--format",
            "text",
        ]
    )
    lines = capsys.readouterr().out.splitlines()
    assert code == 1
    assert "finite: false" in lines
    assert "infinite: C1" in lines


def test_check_trivial(small_config, capsys):
    code = main(
        [
            "check",
            "--source",
            "ces:1,1:pow:0,pow:0@(0,1)",
            "--target",
            "ces:2,1:pow:0,pow:0@(0,1)",
            "--config",
            small_config,
        ]
    )
    data = json.loads(capsys.readouterr().out)
    assert code == 2
    assert data["notes"][-1].startswith("trivial:")


def test_norm(tmp_path, capsys):
    path = tmp_path / "f.json"
    path.write_text('{"breaks": [0, 1], "values": [1]}', encoding="utf-8")
    code = main(["norm", "--space", "ces:1,1:pow:0,pow:0@(0,1)", "--f", str(path)])
    data = json.loads(capsys.readouterr().out)
    assert code == 0
    assert data["space"] == "ces:1,1:pow:0,pow:0@(0,1)"
    assert data["norm"] == pytest.approx(0.5, rel=1e-12)
    assert data["finite"] is True


def test_flags_override_config_file(small_config):
    args = build_parser().parse_args(
        [
            "oracle",
            "--source",
            HALF_LINE,
            "--target",
            HALF_LINE,
            "--config",
            small_config,
            "--oracle-grid",
            "24",
            "--seed",
            "5",
        ]
    )
    req = build_request(args)
    assert req.oracle_cfg.grid_size == 24
    assert req.oracle_cfg.ladder_rungs == 3
    assert req.seed == 5
    assert req.output == "json"


@pytest.mark.parametrize(
    "argv",
    [
        ["check", "--source", "ces:1,1:foo:1,pow:0@(0,1)", "--target", HALF_LINE],
        ["check", "--source", HALF_LINE, "--target", HALF_LINE, "--config", "missing.yml"],
        ["norm", "--space", "leb:1:pow:0@(0,1)", "--f", "missing.json"],
        ["constants", "--source", "cop:1,2:pow:0,pow:0@(0,1)", "--target", HALF_LINE],
    ],
)
def test_library_errors_exit_with_3(tmp_path, monkeypatch, argv):
    monkeypatch.chdir(tmp_path)
    assert main(argv) == 3


@pytest.mark.parametrize(
    "argv",
    [
        ["check", "--source", HALF_LINE],
        ["multiplier", "--source", HALF_LINE, "--target", HALF_LINE],
        ["plot"],
        ["check", "--source", HALF_LINE, "--target", HALF_LINE, "--format", "xml"],
    ],
)
def test_usage_errors_exit_with_3(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 3
    assert "erro" in capsys.readouterr().err


def test_version(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
    assert capsys.readouterr().out.strip() == f"cesembed {__version__}"
