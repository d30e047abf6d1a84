from pathlib import Path

import pytest
from yacs.config import CfgNode

from overtop.config.default import DEFAULT_CFG, get_config, merge_config


CONFIGS = Path(__file__).resolve().parent.parent / "configs"


def test_defaults():
    cfg = get_config()
    assert cfg.NUMERIC.DIGITS == 40
    assert cfg.NUMERIC.GUARD_DIGITS == 20
    assert cfg.TOP.MAX_WIDTH == 6
    assert cfg.ASYMMETRIC.ACCELERATION == "wegstein"
    assert cfg.ASYMMETRIC.TOL == 1e-10
    assert cfg.RENDER.HASH_SALT == "overtop"
    assert cfg.is_frozen()
    with pytest.raises(AttributeError):
        cfg.NUMERIC.DIGITS = 12


def test_yaml_then_list_precedence():
    cfg = get_config(str(CONFIGS / "worked_triangle.yaml"), ["ASYMMETRIC.MAX_ITER", "50"])
    assert cfg.TRIANGLE.B == pytest.approx(1.0591663)
    assert cfg.ASYMMETRIC.MAX_ITER == 50
    assert cfg.ASYMMETRIC.DIGITS == 40


@pytest.mark.parametrize("name", ["worked_triangle.yaml", "high_precision.yaml", "quick.yaml"])
def test_shipped_configs_load(name):
    cfg = get_config(str(CONFIGS / name))
    assert cfg.NUMERIC.DIGITS >= 12


def test_unknown_key_rejected():
    with pytest.raises((KeyError, AssertionError)):
        get_config(extra_cfg=["NUMERIC.PRECISION", "3"])


def test_merge_config_keeps_defaults():
    partial = CfgNode()
    partial.QUINTIC = CfgNode()
    partial.QUINTIC.HEIGHT = 12
    cfg = merge_config(partial)
    assert cfg.QUINTIC.HEIGHT == 12
    assert cfg.QUINTIC.RATIONALIZE_TOL == DEFAULT_CFG.QUINTIC.RATIONALIZE_TOL
