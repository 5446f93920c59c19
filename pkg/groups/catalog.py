from itertools import product
from typing import Callable, Hashable, Sequence
import logging

from sympy import isprime
from sympy.combinatorics.named_groups import AlternatingGroup, SymmetricGroup

from groups.subgroups import generated_subgroup
from models.finite_group import FiniteGroup, SubgroupRef
from shared.errors import GroupError

logger = logging.getLogger(__name__)


def from_elements(elements: Sequence[Hashable], mult: Callable, name: str) -> FiniteGroup:
    """Tabulate a group given its elements and a multiplication function on them."""
    index = {element: k for k, element in enumerate(elements)}
    if len(index) != len(elements):
        raise GroupError(f"{name}: repeated elements")
    try:
        table = [[index[mult(a, b)] for b in elements] for a in elements]
    except KeyError as exc:
        raise GroupError(f"{name}: product {exc} is not an element") from exc
    return FiniteGroup.from_table(table, name=name, labels=elements)


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise GroupError(f"cyclic group order must be positive, got {n}")
    return from_elements(list(range(n)), lambda a, b: (a + b) % n, f"Z{n}")


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the n-gon, order 2n; elements (rotation, reflection flag)."""
    if n < 1:
        raise GroupError(f"dihedral group needs n >= 1, got {n}")

    def mult(a, b):
        r1, s1 = a
        r2, s2 = b
        return ((r1 + (-r2 if s1 else r2)) % n, s1 ^ s2)

    return from_elements([(r, s) for s in (0, 1) for r in range(n)], mult, f"D{n}")


def direct_product(g1: FiniteGroup, g2: FiniteGroup) -> FiniteGroup:
    """Elements are index pairs (a, b) numbered a * |g2| + b."""
    elements = list(product(range(g1.order), range(g2.order)))
    return from_elements(elements, lambda x, y: (g1.mul(x[0], y[0]), g2.mul(x[1], y[1])),
                         f"{g1.name}x{g2.name}")


def quaternion() -> FiniteGroup:
    """Q8 as signed units (sign, unit) with unit in 1, i, j, k."""
    # (u, v) -> (sign, unit) of the product u v
    unit_table = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
        ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
        ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
    }

    def mult(a, b):
        sign, unit = unit_table[(a[1], b[1])]
        return (a[0] * b[0] * sign, unit)

    return from_elements([(s, u) for s in (1, -1) for u in "1ijk"], mult, "Q8")


def _permutation_group(group, name: str) -> FiniteGroup:
    elements = sorted(group.generate(), key=lambda perm: perm.array_form)
    return from_elements(elements, lambda a, b: a * b, name)


def symmetric_group(n: int) -> FiniteGroup:
    return _permutation_group(SymmetricGroup(n), f"S{n}")


def alternating_group(n: int) -> FiniteGroup:
    return _permutation_group(AlternatingGroup(n), f"A{n}")


def heisenberg(p: int) -> tuple[FiniteGroup, SubgroupRef, SubgroupRef]:
    """
    Upper unitriangular 3x3 matrices over F_p, stored as (a, b, c) for the entries above the
    diagonal: (a, b, c)(a', b', c') = (a + a', b + b', c + c' + a b'). T1 is the subgroup with
    b = c = 0, T2 the one with a = c = 0.
    """
    if not isprime(p):
        raise GroupError(f"Heisenberg group needs a prime p, got {p}")

    def mult(x, y):
        return ((x[0] + y[0]) % p, (x[1] + y[1]) % p, (x[2] + y[2] + x[0] * y[1]) % p)

    elements = list(product(range(p), repeat=3))
    group = from_elements(elements, mult, f"U3(F{p})")
    index = {element: k for k, element in enumerate(elements)}
    t1 = generated_subgroup(group, [index[(1, 0, 0)]])
    t2 = generated_subgroup(group, [index[(0, 1, 0)]])

    # |G| = p^3, |T1| = |T2| = p, T1 and T2 meet trivially
    assert group.order == p ** 3
    assert t1.order == p and t2.order == p
    assert t1.intersection(t2).order == 1
    return group, t1, t2


def group_catalog(max_order: int = 24) -> list[FiniteGroup]:
    """Named groups of order at most `max_order`: cyclic, dihedral, abelian products, Q8, A4, S4."""
    groups = [cyclic(n) for n in range(1, max_order + 1)]
    groups += [dihedral(n) for n in range(3, max_order // 2 + 1)]

    z = {n: cyclic(n) for n in (2, 3, 4, 6, 8, 10, 12)}
    products = [
        (z[2], z[2]), (z[2], z[4]), (z[3], z[3]), (z[2], z[6]), (z[4], z[4]), (z[2], z[8]),
        (z[3], z[6]), (z[2], z[10]), (z[2], z[12]),
    ]
    for pair in products:
        if pair[0].order * pair[1].order <= max_order:
            groups.append(direct_product(*pair))
    klein = direct_product(z[2], z[2])
    for extra in (direct_product(klein, z[2]), direct_product(klein, z[4]),
                  direct_product(direct_product(klein, z[2]), z[2])):
        if extra.order <= max_order:
            groups.append(extra)

    for extra in (quaternion(), alternating_group(4), symmetric_group(4)):
        if extra.order <= max_order:
            groups.append(extra)

    logger.info("Group catalog up to order %d: %d groups", max_order, len(groups))
    return groups
