from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Real

from shared.errors import ConfigError

Number = Real | Fraction


@dataclass(frozen=True)
class QuasiParams:
    """Sparsity beta in (0, 1] and class balance alpha in (0, 1) of the quasi-random model."""

    beta: Number
    alpha: Number

    def __post_init__(self):
        if not (0 < self.beta <= 1):
            raise ConfigError(f"beta must lie in (0, 1], got {self.beta}")
        if not (0 < self.alpha < 1):
            raise ConfigError(f"alpha must lie in (0, 1), got {self.alpha}")

    @property
    def alpha1(self) -> Number:
        return self.alpha

    @property
    def alpha2(self) -> Number:
        return 1 - self.alpha

    @property
    def is_dense(self) -> bool:
        return self.beta == 1


@dataclass
class SparsityReport:
    beta_v: float
    beta_e: float
    beta_hat: float
    g_values: dict[int, float] = field(default_factory=dict)
    t_values: dict[int, float] = field(default_factory=dict)
