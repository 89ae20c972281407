"""Size guards; ``PERFDIV_MAX_N`` overrides every default when set."""

from __future__ import annotations

import os

EXHAUSTIVE_MAX_N = 8
CLASS_MAX_N = 10
PD_MAX_N = 16


def size_guard(default: int) -> int:
    raw = os.environ.get("PERFDIV_MAX_N")
    return int(raw) if raw else default
