from dataclasses import dataclass, field
from typing import Optional

from models.quasi_params import QuasiParams
from shared.errors import ConfigError


@dataclass(frozen=True)
class RandomModelParams:
    n: int
    params: QuasiParams
    seed: int = 0
    trials: int = 1

    def __post_init__(self):
        if self.n < 2:
            raise ConfigError(f"model scale n must be at least 2, got {self.n}")
        if self.trials < 1:
            raise ConfigError(f"trials must be at least 1, got {self.trials}")


@dataclass
class TrialStats:
    """Per-trial h values; None marks a sample with no edge (h undefined)."""

    n: int
    target: float
    values: list[Optional[float]] = field(default_factory=list)
    median: Optional[float] = None
    q25: Optional[float] = None
    q75: Optional[float] = None
    median_abs_error: Optional[float] = None

    @property
    def undefined_count(self) -> int:
        return sum(1 for v in self.values if v is None)

    @property
    def defined_values(self) -> list[float]:
        return [v for v in self.values if v is not None]
