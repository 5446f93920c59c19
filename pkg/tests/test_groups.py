import numpy as np
import pytest

from groups.catalog import (
    alternating_group, cyclic, dihedral, direct_product, from_elements, group_catalog, heisenberg,
    quaternion, symmetric_group,
)
from groups.subgroups import all_subgroups, generated_subgroup, join, trivial_subgroup, whole_group
from models.finite_group import FiniteGroup, SubgroupRef
from shared.errors import CapExceededError, GroupError


class TestFiniteGroup:
    def test_cyclic_table(self):
        z5 = cyclic(5)
        assert z5.order == 5
        assert z5.identity == 0
        assert z5.mul(3, 4) == 2
        assert z5.inv(2) == 3

    def test_rejects_missing_identity(self):
        with pytest.raises(GroupError, match="identity"):
            FiniteGroup.from_table([[1, 0], [0, 0]])

    def test_rejects_non_associative(self):
        # a Latin square with identity 0 that is not a group
        table = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]]
        with pytest.raises(GroupError):
            FiniteGroup.from_table(table)

    def test_rejects_out_of_range(self):
        with pytest.raises(GroupError, match="out of range"):
            FiniteGroup.from_table([[0, 2], [2, 0]])

    def test_from_elements_requires_closure(self):
        with pytest.raises(GroupError):
            from_elements([0, 1], lambda a, b: a + b, "not-closed")


class TestCatalog:
    @pytest.mark.parametrize("factory, order", [
        (lambda: dihedral(5), 10), (quaternion, 8), (lambda: symmetric_group(4), 24),
        (lambda: alternating_group(4), 12), (lambda: direct_product(cyclic(2), cyclic(3)), 6),
    ])
    def test_orders(self, factory, order):
        assert factory().order == order

    def test_quaternion_is_non_abelian(self):
        q8 = quaternion()
        assert not np.array_equal(q8.table, q8.table.T)

    def test_catalog_respects_order_bound(self):
        groups = group_catalog(12)
        assert groups
        assert all(g.order <= 12 for g in groups)
        assert {"Z12", "D6", "Q8", "A4"} <= {g.name for g in groups}

    def test_heisenberg_needs_prime(self):
        with pytest.raises(GroupError):
            heisenberg(4)

    @pytest.mark.parametrize("p", [2, 3])
    def test_heisenberg_subgroups(self, p):
        group, t1, t2 = heisenberg(p)
        assert group.order == p ** 3
        assert t1.order == t2.order == p
        assert t1.intersection(t2).order == 1
        assert join(t1, t2) == whole_group(group)


class TestSubgroups:
    @pytest.mark.parametrize("factory, count", [
        (lambda: cyclic(6), 4), (lambda: cyclic(12), 6), (lambda: direct_product(cyclic(2), cyclic(2)), 5),
        (quaternion, 6), (lambda: dihedral(4), 10), (lambda: alternating_group(4), 10),
        (lambda: symmetric_group(4), 30),
    ])
    def test_subgroup_counts(self, factory, count):
        assert len(all_subgroups(factory())) == count

    def test_sorted_and_bounded_by_trivial_and_whole(self):
        group = dihedral(3)
        subgroups = all_subgroups(group)
        assert subgroups[0] == trivial_subgroup(group)
        assert subgroups[-1] == whole_group(group)
        assert [s.order for s in subgroups] == sorted(s.order for s in subgroups)

    def test_lagrange(self):
        group = symmetric_group(4)
        assert all(group.order % s.order == 0 for s in all_subgroups(group))

    def test_generated_subgroup(self):
        z12 = cyclic(12)
        assert generated_subgroup(z12, [8]).elements == (0, 4, 8)
        assert generated_subgroup(z12, [4, 6]).order == 6

    def test_subgroup_validation(self):
        with pytest.raises(GroupError):
            SubgroupRef(cyclic(4), (0, 1))

    def test_enumeration_cap(self):
        with pytest.raises(CapExceededError):
            all_subgroups(cyclic(20), max_order=16)
