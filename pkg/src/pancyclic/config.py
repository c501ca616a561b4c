from __future__ import annotations

import os
from dataclasses import dataclass, field

SEARCH_HARD_LIMIT = 7
SEARCH_OVERRIDE_LIMIT = 8


@dataclass(frozen=True)
class RunConfig:
    tolerance: float = 1e-9
    table_tolerance: float = 5e-4
    oracle_max_n: int = 16
    search_max_n: int = SEARCH_HARD_LIMIT
    worker_count: int = field(default_factory=lambda: os.cpu_count() or 1)
    allow_n8: bool = False

    def __post_init__(self):
        for name in ("tolerance", "table_tolerance", "oracle_max_n", "search_max_n", "worker_count"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        limit = SEARCH_OVERRIDE_LIMIT if self.allow_n8 else SEARCH_HARD_LIMIT
        if self.search_max_n > limit:
            raise ValueError(f"search_max_n {self.search_max_n} exceeds {limit}; n = 8 needs the override flag")
