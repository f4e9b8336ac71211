"""
Environment defaults for the command-line front end.

Values are read from the process environment, after loading a .env file
from the working directory if one exists. Flags given on the command line
override them.
"""

import logging
import os
from typing import Any, Dict

from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

DEFAULT_LOG_LEVEL = "WARNING"


def _int_env(name: str, default: int) -> int:
    value = os.getenv(name)
    if value is None or not value.strip():
        return default
    try:
        return int(value)
    except ValueError as e:
        raise ValueError(f"Environment variable {name} must be an integer, got '{value}'") from e


def environment_defaults() -> Dict[str, Any]:
    """
    RunConfig defaults from BISPEC_THREADS, BISPEC_SEED, BISPEC_GRID and BISPEC_NODES.

    Raises:
        ValueError: If a variable is set but not an integer
    """
    return {
        "threads": _int_env("BISPEC_THREADS", 1),
        "seed": _int_env("BISPEC_SEED", 42),
        "grid": _int_env("BISPEC_GRID", 16),
        "nodes": _int_env("BISPEC_NODES", 64),
    }


def configure_logging(verbose: bool = False) -> None:
    """Set the root level from --verbose or BISPEC_LOG_LEVEL."""
    level = "DEBUG" if verbose else os.getenv("BISPEC_LOG_LEVEL", DEFAULT_LOG_LEVEL).upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING),
                        format="%(asctime)s %(levelname)s %(name)s: %(message)s")
