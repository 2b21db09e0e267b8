import pytest

from cesembed.lib.config import DEFAULT_NUMERICS, ConfigError, NumericsConfig
from cesembed.lib.config.loader import build_configs, load_config, load_yaml
from cesembed.lib.oracle import OracleConfig


def _write(tmp_path, text):
    path = tmp_path / "cesembed.yml"
    path.write_text(text, encoding="utf-8")
    return path


def test_load_config_flat_and_numerics(tmp_path):
    path = _write(
        tmp_path,
        "grid_size: 32\nrestarts: 2\nseed: 7\nnumerics:\n  sup_grid: 64\n  gl_order: 8\n",
    )
    oracle, numerics = load_config(path)
    assert oracle.grid_size == 32
    assert oracle.restarts == 2
    assert oracle.seed == 7
    assert oracle.ascent_iters == OracleConfig().ascent_iters
    assert numerics.sup_grid == 64
    assert numerics.gl_order == 8
    assert numerics.tau_int == DEFAULT_NUMERICS.tau_int


def test_empty_file_gives_defaults(tmp_path):
    oracle, numerics = load_config(_write(tmp_path, ""))
    assert oracle == OracleConfig()
    assert numerics == DEFAULT_NUMERICS


def test_truncation_ladder_becomes_tuples(tmp_path):
    path = _write(tmp_path, "truncation_ladder:\n  - [0.1, 0.9]\n  - [0.01, 0.99]\n")
    oracle, _ = load_config(path)
    assert oracle.truncation_ladder == ((0.1, 0.9), (0.01, 0.99))


@pytest.mark.parametrize(
    ("text", "match"),
    [
        ("bogus: 1\n", "desconhecidas"),
        ("numerics:\n  bogus: 1\n", "desconhecidas"),
        ("numerics: 3\n", "mapeamento"),
        ("- 1\n- 2\n", "mapeamento"),
        ("grid_size: [1\n", "YAML inválido"),
        ("grid_size: 2\n", "grid_size"),
        ("truncation_ladder: [1, 2]\n", "pares"),
        ("truncation_ladder:\n  - [0.01, 0.99]\n  - [0.1, 0.9]\n", "inclusão"),
    ],
)
def test_invalid_files(tmp_path, text, match):
    with pytest.raises(ConfigError, match=match):
        load_config(_write(tmp_path, text))


def test_missing_file(tmp_path):
    with pytest.raises(ConfigError, match="não encontrado"):
        load_yaml(tmp_path / "nope.yml")


def test_build_configs_layers_over_given_configs():
    base = OracleConfig(grid_size=16, restarts=3)
    oracle, numerics = build_configs(
        {"restarts": 5}, oracle=base, numerics=NumericsConfig(sup_grid=32)
    )
    assert oracle.grid_size == 16
    assert oracle.restarts == 5
    assert numerics.sup_grid == 32
