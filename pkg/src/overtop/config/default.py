from typing import Optional, List
from yacs.config import CfgNode


DEFAULT_CFG = CfgNode()

DEFAULT_CFG.NUMERIC = CfgNode()
DEFAULT_CFG.NUMERIC.DIGITS = 40
DEFAULT_CFG.NUMERIC.GUARD_DIGITS = 20

DEFAULT_CFG.TOP = CfgNode()
DEFAULT_CFG.TOP.MAX_WIDTH = 6
DEFAULT_CFG.TOP.RESIDUAL_SLACK = 6

DEFAULT_CFG.SYMMETRIC = CfgNode()
DEFAULT_CFG.SYMMETRIC.DIGITS = 40

DEFAULT_CFG.TRIANGLE = CfgNode()
DEFAULT_CFG.TRIANGLE.A = 0.0
DEFAULT_CFG.TRIANGLE.B = 0.0
DEFAULT_CFG.TRIANGLE.C = 0.0

DEFAULT_CFG.ASYMMETRIC = CfgNode()
DEFAULT_CFG.ASYMMETRIC.DIGITS = 40
DEFAULT_CFG.ASYMMETRIC.TOL = 1e-10
DEFAULT_CFG.ASYMMETRIC.MAX_ITER = 200
DEFAULT_CFG.ASYMMETRIC.ACCELERATION = "wegstein" # "damped"
DEFAULT_CFG.ASYMMETRIC.DAMPING = 0.5
DEFAULT_CFG.ASYMMETRIC.FOOT_SAMPLES = 256
DEFAULT_CFG.ASYMMETRIC.SWEEP_SAMPLES = 60

DEFAULT_CFG.QUINTIC = CfgNode()
DEFAULT_CFG.QUINTIC.HEIGHT = 30
DEFAULT_CFG.QUINTIC.RATIONALIZE_TOL = 1e-6

DEFAULT_CFG.RENDER = CfgNode()
DEFAULT_CFG.RENDER.SIZE = 800
DEFAULT_CFG.RENDER.DPI = 100
DEFAULT_CFG.RENDER.HASH_SALT = "overtop"


def merge_config(orig_cfg: CfgNode) -> CfgNode:
    cfg = DEFAULT_CFG.clone()
    cfg.merge_from_other_cfg(orig_cfg)
    cfg.freeze()
    return cfg


def get_config(cfg_path: Optional[str]=None,
               extra_cfg: Optional[List[str]]=None) -> CfgNode:
    cfg = DEFAULT_CFG.clone()
    if cfg_path is not None:
        cfg.merge_from_file(cfg_path)
    if extra_cfg:
        cfg.merge_from_list(extra_cfg)
    cfg.freeze()
    return cfg
