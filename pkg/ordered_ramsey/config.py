"""
Configuration management for the Ordered Ramsey Toolkit.

This module provides centralized configuration for search budgets, desk-scale
caps, the result store location and environment variable handling.
"""

import os
from pathlib import Path
from typing import Optional

# Base directory for data storage
BASE_DIR = Path(__file__).parent
DATA_DIR = Path(os.getenv("ORDERED_RAMSEY_DATA_DIR", str(BASE_DIR / "data")))

# Database paths
RESULTS_DB_PATH = str(DATA_DIR / "results.sqlite")

# Search configuration
DEFAULT_NODE_BUDGET = int(os.getenv("ORDERED_RAMSEY_BUDGET", str(10**8)))
DEFAULT_THREADS = int(os.getenv("ORDERED_RAMSEY_THREADS", "1"))
DEFAULT_SEED = int(os.getenv("ORDERED_RAMSEY_SEED", "0"))

# Desk-scale caps
VERIFY_EDGE_LIMIT = 16  # builders run arrows() on outputs up to this size
DENSITY_MAX_VERTICES = 20
TANGLED_PATH_BOUND = 12  # longest path (in vertices) searched for tangledness
ENUMERATE_MAX_VERTICES = 7
RAMSEY_NUMBER_CAP = 7
FAMILY_PLACEMENT_BUDGET = int(os.getenv("ORDERED_RAMSEY_FAMILY_BUDGET", "20000"))

# Logging configuration
LOG_LEVEL = os.getenv("LOG_LEVEL", "WARNING")
LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def get_node_budget(override: Optional[int] = None) -> int:
    """
    Resolve the search node budget.

    Args:
        override: Explicit budget, e.g. from a CLI flag

    Returns:
        The override when given, otherwise the configured default
    """
    if override is not None:
        return override
    return DEFAULT_NODE_BUDGET


def ensure_data_directory() -> None:
    """
    Ensure the data directory exists for database storage.
    """
    DATA_DIR.mkdir(parents=True, exist_ok=True)
