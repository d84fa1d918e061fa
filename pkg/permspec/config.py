"""
Runtime configuration for permspec.

Every resource cap and certification knob is read from the environment
(or a local .env file) so that campaigns can be scaled without code changes.
"""

import os
from pathlib import Path
from typing import Optional, Tuple

from dotenv import load_dotenv

# Load environment variables
load_dotenv()

# Enumeration and matrix caps
MAX_ENUM_N = int(os.getenv("MAX_ENUM_N", "8"))
MAX_MATRIX_N = int(os.getenv("MAX_MATRIX_N", "7"))
MAX_CONVOLUTION_N = int(os.getenv("MAX_CONVOLUTION_N", "4"))
MAX_PARTITION_N = int(os.getenv("MAX_PARTITION_N", "12"))

# Symbolic product caps
MAX_SYMBOLIC_N = int(os.getenv("MAX_SYMBOLIC_N", "4"))
MAX_SYMBOLIC_F_N = int(os.getenv("MAX_SYMBOLIC_F_N", "6"))
MAX_SYMBOLIC_CHECK_N = int(os.getenv("MAX_SYMBOLIC_CHECK_N", "5"))

# Largest square matrix ranked by exact elimination; bigger F(n) matrices
# are ranked modulo a prime behind a verified minimal polynomial
MAX_EXACT_RANK_DIM = int(os.getenv("MAX_EXACT_RANK_DIM", "120"))

# Certification
ASSIGNMENT_MAX = int(os.getenv("ASSIGNMENT_MAX", str(2 ** 20)))
MAX_RESAMPLE_ATTEMPTS = int(os.getenv("MAX_RESAMPLE_ATTEMPTS", "16"))
DEFAULT_JOBS = int(os.getenv("DEFAULT_JOBS", "1"))


def parse_seeds(text: str) -> Tuple[int, ...]:
    """Parse a comma-separated seed list such as "1,2,3"."""
    seeds = tuple(int(part) for part in text.split(",") if part.strip())
    if not seeds:
        raise ValueError(f"no seeds in {text!r}")
    return seeds


DEFAULT_SEEDS = parse_seeds(os.getenv("DEFAULT_SEEDS", "1,2,3"))

# Output locations
OUTPUT_DIR = Path(os.getenv("OUTPUT_DIR", "./reports"))


def cache_dir() -> Optional[Path]:
    """Directory for character-table memos, or None when caching is off."""
    value = os.getenv("PERMSPEC_CACHE_DIR")
    return Path(value) if value else None
