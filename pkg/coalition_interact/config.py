"""Toolkit configuration, size caps and paths."""
import os
from pathlib import Path

# Base paths
BASE_DIR = Path(__file__).resolve().parent.parent
DATA_DIR = BASE_DIR / "data"
GENERATED_DIR = BASE_DIR / "generated"  # Default target for emitted tables and reports

# Size caps: dense storage/transforms, and per-query subset enumeration
MAX_N = int(os.getenv("COALITION_INTERACT_MAX_N", "20"))
ENUM_MAX_N = int(os.getenv("COALITION_INTERACT_ENUM_MAX_N", "16"))
SUPERADDITIVE_CHECK_MAX_N = 12  # 3^n disjoint pairs

# Exhaustive axiom quantification caps
AXIOM_MAX_N = 6
SRVPC_MAX_N = 5
LINEARITY_PAIRS = 50

# Tolerances: representation error vs. accumulated arithmetic
VALUE_TOL = 1e-12
AXIOM_TOL = 1e-9

# Tables
DEFAULT_MAX_ORDER = 2
CSV_DECIMALS = 6
REPRO_DECIMALS = 2

LOG_LEVEL = os.getenv("COALITION_INTERACT_LOG_LEVEL", "WARNING")
