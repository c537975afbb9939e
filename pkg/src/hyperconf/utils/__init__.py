"""Utility functions for the hyperconf toolkit"""

from hyperconf.utils.logger import get_logger, run_context, setup_logging
from hyperconf.utils.config import Settings, configure, get_config, get_setting, load_config
from hyperconf.utils.helpers import (
    ensure_parent,
    format_fraction,
    format_timestamp,
    generate_run_id,
    parse_int_list,
)

__all__ = [
    # Logger
    "get_logger",
    "setup_logging",
    "run_context",
    # Config
    "Settings",
    "get_config",
    "load_config",
    "configure",
    "get_setting",
    # Helpers
    "generate_run_id",
    "format_timestamp",
    "format_fraction",
    "parse_int_list",
    "ensure_parent",
]
