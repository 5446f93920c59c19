from dataclasses import dataclass, field, asdict
from typing import Any, Optional


@dataclass
class ExperimentConfig:
    """Fully-resolved settings of one CLI run; echoed into every output."""

    command: str
    inputs: dict[str, Any] = field(default_factory=dict)
    params: dict[str, Any] = field(default_factory=dict)
    out: Optional[str] = None
    seed: Optional[int] = None

    def to_dict(self) -> dict:
        return asdict(self)
