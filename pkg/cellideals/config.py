"""Defines the resource budget configuration.

Values merge in order: structured defaults, an optional YAML file, then the
``CELLIDEALS_BUDGET`` environment variable (a comma-separated dotlist such as
``max_seconds=60,max_exact_rank=6``). CLI flags override the merged result.
"""

import logging
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, cast

from omegaconf import OmegaConf

from cellideals.polyalg.budget import Budget

logger = logging.getLogger(__name__)

ENV_VAR = "CELLIDEALS_BUDGET"


@dataclass
class BudgetConfig:
    max_basis_size: int = 5000
    max_degree: int = 40
    max_seconds: Optional[float] = None
    max_enumeration_rank: int = 8
    max_exact_rank: int = 5
    allow_exact_rank6: bool = False
    witness_coefficient_bound: int = 2
    witness_multiplier_degree: int = 4
    witness_degree_bound: int = 12
    minimal_primes_max_rank: int = 6

    def to_budget(self) -> Budget:
        return Budget(
            max_basis_size=self.max_basis_size,
            max_degree=self.max_degree,
            max_seconds=self.max_seconds,
        )

    @property
    def exact_rank_limit(self) -> int:
        return max(self.max_exact_rank, 6) if self.allow_exact_rank6 else self.max_exact_rank


def load_budget_config(path: str | Path | None = None, env: bool = True) -> BudgetConfig:
    """Loads the merged budget configuration.

    Args:
        path: Optional YAML file with overrides
        env: If set, applies the dotlist in ``CELLIDEALS_BUDGET``

    Returns:
        The typed configuration

    Raises:
        ValueError: If the environment dotlist is malformed
    """
    config = OmegaConf.structured(BudgetConfig)
    if path is not None:
        logger.debug("Loading budget overrides from %s", path)
        config = OmegaConf.merge(config, OmegaConf.load(path))
    if env and (dotlist := os.environ.get(ENV_VAR, "").strip()):
        entries = [e.strip() for e in dotlist.split(",") if e.strip()]
        if any("=" not in e for e in entries):
            raise ValueError(f"Invalid {ENV_VAR} value {dotlist!r}; expected key=value pairs")
        config = OmegaConf.merge(config, OmegaConf.from_dotlist(entries))
    return cast(BudgetConfig, OmegaConf.to_object(config))
