from dataclasses import dataclass, field
from typing import NewType
import math

from shared.errors import ProfileError

# Layout: bytes([n1, n2]) followed by the packed biadjacency bitmap (row-major).
CanonicalKey = NewType("CanonicalKey", bytes)

PROFILE_TOL = 1e-9


def key_class_sizes(key: CanonicalKey) -> tuple[int, int]:
    return key[0], key[1]


def key_vertices(key: CanonicalKey) -> int:
    return key[0] + key[1]


def kappa_weight(key: CanonicalKey) -> float:
    return 2.0 ** -(key_vertices(key) ** 2)


@dataclass(frozen=True)
class LimitProfile:
    """Truncated vector (h(H, .))_H over canonical test graphs with at most `cap` vertices."""

    cap: int
    entries: dict[CanonicalKey, float] = field(default_factory=dict)

    def __post_init__(self):
        for key, value in self.entries.items():
            n1, n2 = key_class_sizes(key)
            if not (1 - PROFILE_TOL <= value <= n1 * n2 + PROFILE_TOL):
                raise ProfileError(
                    f"profile value {value} outside [1, {n1 * n2}] for a {n1}+{n2} test graph"
                )

    def __getitem__(self, key: CanonicalKey) -> float:
        return self.entries[key]

    def __contains__(self, key: object) -> bool:
        return key in self.entries

    def __len__(self) -> int:
        return len(self.entries)

    def distance(self, other: "LimitProfile") -> float:
        """kappa restricted to the keys both profiles carry."""
        total = 0.0
        for key in sorted(self.entries.keys() & other.entries.keys()):
            diff = abs(self.entries[key] - other.entries[key])
            if diff:
                total += diff * kappa_weight(key)
        return total

    def mix(self, other: "LimitProfile", weight: float) -> "LimitProfile":
        """weight * self + (1 - weight) * other on the keys both profiles carry."""
        if not 0 <= weight <= 1:
            raise ProfileError(f"mixing weight must lie in [0, 1], got {weight}")
        keys = self.entries.keys() & other.entries.keys()
        return LimitProfile(
            min(self.cap, other.cap),
            {key: weight * self.entries[key] + (1 - weight) * other.entries[key] for key in keys},
        )

    def to_rows(self) -> list[dict]:
        rows = []
        for key in sorted(self.entries, key=lambda k: (key_vertices(k), k)):
            n1, n2 = key_class_sizes(key)
            value = self.entries[key]
            rows.append({"key": key.hex(), "n1": n1, "n2": n2,
                         "h": value if math.isfinite(value) else None})
        return rows
