from .default import DEFAULT_CFG, merge_config, get_config
