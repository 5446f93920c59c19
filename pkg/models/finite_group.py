from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional, Sequence
import logging

import numpy as np

from shared.constants import ASSOCIATIVITY_SAMPLES, MAX_GROUP_ORDER
from shared.errors import GroupError

logger = logging.getLogger(__name__)

FULL_ASSOCIATIVITY_MAX = 256


def _check_associative(table: np.ndarray) -> bool:
    n = table.shape[0]
    if n <= FULL_ASSOCIATIVITY_MAX:
        for a in range(n):
            # (a*b)*c against a*(b*c) for every b, c
            if not np.array_equal(table[table[a, :], :], table[a, table]):
                return False
        return True

    rng = np.random.default_rng(0)
    a, b, c = rng.integers(0, n, size=(3, ASSOCIATIVITY_SAMPLES))
    return bool(np.array_equal(table[table[a, b], c], table[a, table[b, c]]))


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """A finite group as an explicit Cayley table on element indices 0..order-1."""

    name: str
    table: np.ndarray
    identity: int
    inverse: np.ndarray
    labels: tuple = field(default_factory=tuple)

    @classmethod
    def from_table(cls, table: Sequence[Sequence[int]], name: str = "group",
                   labels: Optional[Sequence] = None) -> "FiniteGroup":
        """Validate a multiplication table and derive identity and inverses."""
        array = np.asarray(table, dtype=np.int64)
        if array.ndim != 2 or array.shape[0] != array.shape[1] or array.shape[0] == 0:
            raise GroupError(f"{name}: Cayley table must be a non-empty square matrix")
        n = array.shape[0]
        if n > MAX_GROUP_ORDER:
            raise GroupError(f"{name}: order {n} above the supported maximum {MAX_GROUP_ORDER}")
        if array.min() < 0 or array.max() >= n:
            raise GroupError(f"{name}: table entries out of range")

        arange = np.arange(n)
        identities = [e for e in range(n)
                      if np.array_equal(array[e, :], arange) and np.array_equal(array[:, e], arange)]
        if not identities:
            raise GroupError(f"{name}: no identity element")
        identity = identities[0]

        inverse = np.full(n, -1, dtype=np.int64)
        for a in range(n):
            hits = np.flatnonzero(array[a, :] == identity)
            if len(hits) != 1 or array[hits[0], a] != identity:
                raise GroupError(f"{name}: element {a} has no two-sided inverse")
            inverse[a] = hits[0]

        if not _check_associative(array):
            raise GroupError(f"{name}: table is not associative")

        array.setflags(write=False)
        inverse.setflags(write=False)
        return cls(name, array, identity, inverse, tuple(labels) if labels is not None else tuple(range(n)))

    @property
    def order(self) -> int:
        return self.table.shape[0]

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverse[a])

    def to_dict(self) -> dict:
        return {"order": self.order, "table": self.table.tolist()}

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name}, order={self.order})"


@dataclass(frozen=True, eq=False)
class SubgroupRef:
    """A verified subgroup: sorted element indices of `parent`."""

    parent: FiniteGroup
    elements: tuple[int, ...]

    def __post_init__(self):
        elements = tuple(sorted(set(int(e) for e in self.elements)))
        object.__setattr__(self, "elements", elements)
        group = self.parent
        members = set(elements)

        if group.identity not in members:
            raise GroupError(f"subset of {group.name} does not contain the identity")
        for a in elements:
            if group.inv(a) not in members:
                raise GroupError(f"subset of {group.name} not closed under inverses")
        if not members.issuperset(group.table[np.ix_(elements, elements)].ravel().tolist()):
            raise GroupError(f"subset of {group.name} not closed under products")

    @property
    def order(self) -> int:
        return len(self.elements)

    @cached_property
    def mask(self) -> np.ndarray:
        mask = np.zeros(self.parent.order, dtype=bool)
        mask[list(self.elements)] = True
        return mask

    def __contains__(self, element: int) -> bool:
        return bool(self.mask[element])

    def intersection(self, other: "SubgroupRef") -> "SubgroupRef":
        if other.parent is not self.parent:
            raise GroupError("subgroups belong to different groups")
        return SubgroupRef(self.parent, tuple(sorted(set(self.elements) & set(other.elements))))

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, SubgroupRef) and other.parent is self.parent
                and other.elements == self.elements)

    def __hash__(self) -> int:
        return hash((id(self.parent), self.elements))
