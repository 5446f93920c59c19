from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence
import logging

import numpy as np

from shared.constants import PROBABILITY_SUM_TOL
from shared.errors import DistributionError

logger = logging.getLogger(__name__)

ExactTable = tuple[tuple[Fraction, ...], ...]


def _as_fraction(value) -> Optional[Fraction]:
    """[num, den] pairs, ints and Fractions are exact; floats are not."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, np.integer)) and not isinstance(value, bool):
        return Fraction(int(value))
    if isinstance(value, (list, tuple)) and len(value) == 2:
        num, den = value
        if int(den) == 0:
            raise DistributionError(f"zero denominator in rational entry {value}")
        return Fraction(int(num), int(den))
    return None


@dataclass(frozen=True, eq=False)
class JointDistribution:
    """
    Probability table p on F1 x F2 describing X = (X1, X2). `exact` holds the same table as
    Fractions when the distribution was given in rational mode.
    """

    k1: int
    k2: int
    table: np.ndarray
    exact: Optional[ExactTable] = None

    def __post_init__(self):
        table = np.asarray(self.table, dtype=float)
        if table.shape != (self.k1, self.k2):
            raise DistributionError(f"table shape {table.shape} does not match k1={self.k1}, k2={self.k2}")
        if (table < 0).any():
            raise DistributionError("negative probability")

        if self.exact is not None:
            if sum(sum(row) for row in self.exact) != 1:
                raise DistributionError("rational table does not sum to exactly 1")
        elif abs(table.sum() - 1.0) > PROBABILITY_SUM_TOL:
            raise DistributionError(f"table sums to {table.sum()!r}, not 1")

        table.setflags(write=False)
        object.__setattr__(self, "table", table)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "JointDistribution":
        """Build from nested rows of floats, or of exact values (ints, Fractions, [num, den])."""
        rows = [list(r) for r in rows]
        if not rows or not rows[0]:
            raise DistributionError("empty probability table")
        k1, k2 = len(rows), len(rows[0])
        if any(len(r) != k2 for r in rows):
            raise DistributionError("ragged probability table")

        exact_rows = [[_as_fraction(v) for v in r] for r in rows]
        if all(v is not None for r in exact_rows for v in r):
            exact = tuple(tuple(r) for r in exact_rows)
            table = np.array([[float(v) for v in r] for r in exact], dtype=float)
            return cls(k1, k2, table, exact)

        return cls(k1, k2, np.array(rows, dtype=float))

    @property
    def is_exact(self) -> bool:
        return self.exact is not None

    @property
    def marginal1(self) -> np.ndarray:
        return self.table.sum(axis=1)

    @property
    def marginal2(self) -> np.ndarray:
        return self.table.sum(axis=0)

    def exact_marginal1(self) -> tuple[Fraction, ...]:
        self._require_exact()
        return tuple(sum(row) for row in self.exact)

    def exact_marginal2(self) -> tuple[Fraction, ...]:
        self._require_exact()
        return tuple(sum(self.exact[i][j] for i in range(self.k1)) for j in range(self.k2))

    @property
    def support(self) -> np.ndarray:
        if self.exact is not None:
            return np.array([[v > 0 for v in row] for row in self.exact], dtype=bool)
        return self.table > 0

    def is_symmetric(self, tol: float = PROBABILITY_SUM_TOL) -> bool:
        if self.k1 != self.k2:
            return False
        if self.exact is not None:
            return all(self.exact[i][j] == self.exact[j][i]
                       for i in range(self.k1) for j in range(self.k2))
        return bool(np.allclose(self.table, self.table.T, atol=tol, rtol=0))

    def symmetrized(self) -> "JointDistribution":
        """(X1, X2) and (X2, X1) mixed with equal weight; needs k1 == k2."""
        if self.k1 != self.k2:
            raise DistributionError("symmetrization needs equal alphabets")
        if self.exact is not None:
            half = Fraction(1, 2)
            rows = [[half * (self.exact[i][j] + self.exact[j][i]) for j in range(self.k2)]
                    for i in range(self.k1)]
            return JointDistribution.from_rows(rows)
        return JointDistribution(self.k1, self.k2, (self.table + self.table.T) / 2)

    def allclose(self, other: "JointDistribution", atol: float = 1e-12) -> bool:
        return (self.k1, self.k2) == (other.k1, other.k2) and bool(
            np.allclose(self.table, other.table, atol=atol, rtol=0))

    def _require_exact(self):
        if self.exact is None:
            raise DistributionError("operation needs a distribution in rational mode")

    def to_dict(self) -> dict:
        if self.exact is not None:
            p = [[[v.numerator, v.denominator] for v in row] for row in self.exact]
        else:
            p = self.table.tolist()
        return {"k1": self.k1, "k2": self.k2, "p": p}

    @classmethod
    def from_dict(cls, data: dict) -> "JointDistribution":
        try:
            dist = cls.from_rows(data["p"])
            k1, k2 = int(data["k1"]), int(data["k2"])
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, DistributionError):
                raise
            raise DistributionError(f"malformed distribution object: {exc}") from exc
        if (dist.k1, dist.k2) != (k1, k2):
            raise DistributionError(f"declared size {k1}x{k2} does not match table {dist.k1}x{dist.k2}")
        return dist
