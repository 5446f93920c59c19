from typing import Iterable
import logging

from models.finite_group import FiniteGroup, SubgroupRef
from shared.constants import MAX_SUBGROUP_ENUM_ORDER
from shared.errors import CapExceededError, GroupError

logger = logging.getLogger(__name__)


def generated_subgroup(group: FiniteGroup, generators: Iterable[int]) -> SubgroupRef:
    """Closure of the generators under right multiplication by generators."""
    generators = sorted({int(a) for a in generators})
    for a in generators:
        if not 0 <= a < group.order:
            raise GroupError(f"{group.name}: generator {a} out of range")

    members = {group.identity}
    frontier = [group.identity]
    while frontier:
        current = frontier.pop()
        for a in generators:
            nxt = int(group.table[current, a])
            if nxt not in members:
                members.add(nxt)
                frontier.append(nxt)
    return SubgroupRef(group, tuple(members))


def trivial_subgroup(group: FiniteGroup) -> SubgroupRef:
    return SubgroupRef(group, (group.identity,))


def whole_group(group: FiniteGroup) -> SubgroupRef:
    return SubgroupRef(group, tuple(range(group.order)))


def intersection(t1: SubgroupRef, t2: SubgroupRef) -> SubgroupRef:
    return t1.intersection(t2)


def join(t1: SubgroupRef, t2: SubgroupRef) -> SubgroupRef:
    return generated_subgroup(t1.parent, t1.elements + t2.elements)


def all_subgroups(group: FiniteGroup, max_order: int = MAX_SUBGROUP_ENUM_ORDER) -> list[SubgroupRef]:
    """
    Every subgroup, found as joins of cyclic subgroups (each subgroup is generated by its
    cyclic subgroups). Sorted by order, then by element list.
    """
    if group.order > max_order:
        raise CapExceededError("subgroup_enumeration_order", group.order, max_order)

    found: dict[tuple[int, ...], SubgroupRef] = {}
    for a in range(group.order):
        cyclic = generated_subgroup(group, [a])
        found.setdefault(cyclic.elements, cyclic)

    cyclics = list(found.values())
    frontier = list(found.values())
    while frontier:
        fresh = []
        for subgroup in frontier:
            for generator in cyclics:
                if set(generator.elements) <= set(subgroup.elements):
                    continue
                joined = join(subgroup, generator)
                if joined.elements not in found:
                    found[joined.elements] = joined
                    fresh.append(joined)
        frontier = fresh

    subgroups = sorted(found.values(), key=lambda s: (s.order, s.elements))
    logger.debug("%s has %d subgroups", group.name, len(subgroups))
    return subgroups
