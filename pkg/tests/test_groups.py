"""Tests for permutation groups, subgroup enumeration and conjugacy classes."""

import pytest

from burnside_marks.errors import PreconditionError, ResourceLimitError
from burnside_marks.groups import (
    all_subgroups,
    check_subgroup,
    conjugate_subgroup,
    cyclic_group,
    dihedral_generators,
    dihedral_group,
    dihedral_subgroup_classes,
    dihedral_subgroups,
    direct_product,
    generate_subgroup,
    group_from_generators,
    is_subconjugate,
    pull_subgroup,
    push_subgroup,
    subgroup_as_group,
    subgroup_classes,
    symmetric_group,
    trivial_subgroup,
    whole_group,
)
from burnside_marks.models import Permutation, Subgroup


class TestPermutation:
    """Tests for the Permutation value type."""

    def test_from_cycles(self):
        """Test building a permutation from disjoint cycles."""
        perm = Permutation.from_cycles([(0, 1, 2), (3, 4)], 5)
        assert perm.images == (1, 2, 0, 4, 3)

    def test_composition_applies_right_first(self):
        """Test that (p * q)(i) = p(q(i))."""
        p = Permutation.from_cycles([(0, 1)], 3)
        q = Permutation.from_cycles([(1, 2)], 3)
        assert (p * q)(1) == p(q(1)) == 2
        assert (p * q)(2) == p(q(2)) == 0

    def test_inverse(self):
        """Test that a permutation times its inverse is the identity."""
        perm = Permutation.from_cycles([(0, 3, 1)], 4)
        assert (perm * perm.inverse()).is_identity()

    def test_cycles_and_cycle_type(self):
        """Test cycle decomposition and cycle type including fixed points."""
        perm = Permutation((2, 0, 1, 3, 5, 4))
        assert perm.cycles() == [(0, 2, 1), (4, 5)]
        assert perm.cycle_type() == [3, 2, 1]

    def test_rejects_non_bijection(self):
        """Test that a non-bijective image array is rejected."""
        with pytest.raises(PreconditionError):
            Permutation((0, 0, 1))

    def test_rejects_overlapping_cycles(self):
        """Test that overlapping cycles are rejected."""
        with pytest.raises(PreconditionError):
            Permutation.from_cycles([(0, 1), (1, 2)], 3)

    def test_rejects_out_of_range_point(self):
        """Test that points beyond the degree are rejected."""
        with pytest.raises(PreconditionError):
            Permutation.from_cycles([(0, 5)], 3)


class TestGroupConstruction:
    """Tests for the group factories."""

    @pytest.mark.parametrize("n", range(1, 9))
    def test_cyclic_order(self, n: int):
        """Test that C_n has order n."""
        assert cyclic_group(n).order == n

    @pytest.mark.parametrize("n", range(1, 9))
    def test_dihedral_order(self, n: int):
        """Test that D_n has order 2n, including the small cases."""
        assert dihedral_group(n).order == 2 * n

    def test_small_dihedral_groups_use_regular_action(self):
        """Test that D_1 and D_2 act faithfully on 2n points."""
        assert dihedral_group(1).degree == 2
        assert dihedral_group(2).degree == 4
        assert dihedral_group(3).degree == 3

    def test_symmetric_orders(self):
        """Test the orders of S_1 to S_4."""
        assert [symmetric_group(n).order for n in range(1, 5)] == [1, 2, 6, 24]

    def test_zero_is_rejected(self):
        """Test that n = 0 is a precondition error for every family."""
        for factory in (cyclic_group, dihedral_group, symmetric_group):
            with pytest.raises(PreconditionError):
                factory(0)

    def test_symmetric_degree_cap(self):
        """Test that S_n beyond the configured degree is refused."""
        with pytest.raises(ResourceLimitError):
            symmetric_group(5, limits={"max_symmetric_degree": 4})

    def test_closure_cap(self):
        """Test that a closure exceeding the order cap is refused."""
        generators = [Permutation.from_cycles([(0, 1)], 4), Permutation.from_cycles([(0, 1, 2, 3)], 4)]
        with pytest.raises(ResourceLimitError):
            group_from_generators(4, generators, limits={"max_closure_order": 10})

    def test_generator_degree_mismatch(self):
        """Test that generators of the wrong degree are rejected."""
        with pytest.raises(PreconditionError):
            group_from_generators(4, [Permutation.identity(3)])

    def test_dihedral_relations(self):
        """Test a^n = b^2 = 1 and b a b = a^-1."""
        for n in range(1, 8):
            group = dihedral_group(n)
            a, b = dihedral_generators(group)
            assert group.power(a, n) == group.identity_index
            assert group.mult(b, b) == group.identity_index
            assert group.mult(group.mult(b, a), b) == group.inverse[a]

    def test_direct_product_embeddings(self):
        """Test that both embeddings are commuting homomorphisms."""
        first, second = cyclic_group(2), dihedral_group(3)
        product, left, right = direct_product(first, second)
        assert product.order == 12
        for i in range(first.order):
            for j in range(first.order):
                assert product.mult(left[i], left[j]) == left[first.mult(i, j)]
        for i in range(second.order):
            for j in range(second.order):
                assert product.mult(right[i], right[j]) == right[second.mult(i, j)]
        for i in range(first.order):
            for j in range(second.order):
                assert product.mult(left[i], right[j]) == product.mult(right[j], left[i])


class TestSubgroups:
    """Tests for subgroup enumeration and conjugacy classes."""

    @pytest.mark.parametrize(
        "group_factory, expected",
        [
            (lambda: cyclic_group(6), 4),
            (lambda: cyclic_group(8), 4),
            (lambda: symmetric_group(3), 6),
            (lambda: dihedral_group(4), 10),
            (lambda: symmetric_group(4), 30),
        ],
    )
    def test_subgroup_counts(self, group_factory, expected: int):
        """Test the number of subgroups of small groups."""
        assert len(all_subgroups(group_factory())) == expected

    @pytest.mark.parametrize(
        "group_factory, expected",
        [
            (lambda: cyclic_group(1), 1),
            (lambda: cyclic_group(6), 4),
            (lambda: dihedral_group(3), 4),
            (lambda: dihedral_group(4), 8),
            (lambda: dihedral_group(5), 4),
            (lambda: dihedral_group(6), 10),
            (lambda: symmetric_group(3), 4),
            (lambda: symmetric_group(4), 11),
        ],
    )
    def test_class_counts(self, group_factory, expected: int):
        """Test the size of Φ(G) for small groups."""
        assert len(subgroup_classes(group_factory())) == expected

    def test_enumeration_cap(self):
        """Test that enumeration refuses groups above the order cap."""
        with pytest.raises(ResourceLimitError):
            all_subgroups(symmetric_group(4), limits={"max_group_order": 10})

    def test_classes_ordered_by_order(self):
        """Test that Φ(G) starts at the trivial subgroup and ends at G."""
        for group in (dihedral_group(6), symmetric_group(4), cyclic_group(8)):
            classes = subgroup_classes(group)
            orders = [cls.order for cls in classes]
            assert orders == sorted(orders)
            assert classes.canonical(0) == trivial_subgroup(group)
            assert classes.canonical(len(classes) - 1) == whole_group(group)

    def test_conjugates_and_witnesses(self):
        """Test that every witness conjugates the canonical member onto its conjugate."""
        group = symmetric_group(4)
        table = subgroup_classes(group)
        assert table.subgroup_count() == 30
        for cls in table:
            for conj, g in zip(cls.conjugates, cls.witnesses):
                assert conjugate_subgroup(group, cls.canonical, g) == conj

    def test_cyclic_labels(self):
        """Test that cyclic groups label classes by subgroup order."""
        assert subgroup_classes(cyclic_group(6)).labels == ["C_1", "C_2", "C_3", "C_6"]

    def test_dihedral_labels_for_d4(self):
        """Test the C/D/D' labels of D_4."""
        labels = set(subgroup_classes(dihedral_group(4)).labels)
        assert labels == {"C_1", "D_1", "D'_1", "C_2", "D_2", "D'_2", "C_4", "D_4"}

    def test_dihedral_labels_for_odd_n(self):
        """Test that D and D' merge when n is odd."""
        assert set(subgroup_classes(dihedral_group(5)).labels) == {"C_1", "D_1", "C_5", "D_5"}

    @pytest.mark.parametrize("n", range(1, 9))
    def test_dihedral_classification_matches_generic(self, n: int):
        """Test that the labeled classification and the generic one give the same partition."""
        generic = subgroup_classes(dihedral_group(n))
        labeled = dihedral_subgroup_classes(n)
        assert [frozenset(c.conjugates) for c in generic] == [frozenset(c.conjugates) for c in labeled]

    def test_dihedral_subgroups(self):
        """Test the rotation subgroup and reflection subgroups attached to a divisor."""
        cyclic, reflections = dihedral_subgroups(6, 2)
        assert cyclic.order == 3
        assert len(reflections) == 2
        assert all(r.order == 6 for r in reflections)
        with pytest.raises(PreconditionError):
            dihedral_subgroups(6, 4)

    def test_is_subconjugate(self):
        """Test subconjugacy between reflection subgroups of D_4."""
        group = dihedral_group(4)
        table = subgroup_classes(group)
        d1 = table.canonical(table.index_of_label("D_1"))
        d2 = table.canonical(table.index_of_label("D_2"))
        dd2 = table.canonical(table.index_of_label("D'_2"))
        assert is_subconjugate(group, d1, d2)
        assert not is_subconjugate(group, d1, dd2)

    def test_index_of_unknown_subgroup(self):
        """Test that a non-subgroup is not found in Φ(G)."""
        group = cyclic_group(4)
        with pytest.raises(PreconditionError):
            subgroup_classes(group).index_of(Subgroup((0, 1)))

    def test_check_subgroup(self):
        """Test that a subset not closed under products is rejected."""
        group = symmetric_group(3)
        with pytest.raises(PreconditionError):
            check_subgroup(group, Subgroup.of([group.identity_index, 1, 2]))


class TestSubgroupAsGroup:
    """Tests for viewing a subgroup as a standalone group."""

    def test_cached(self):
        """Test that repeated calls return the same standalone group."""
        group = dihedral_group(6)
        sub = generate_subgroup(group, [dihedral_generators(group)[0]])
        first, _ = subgroup_as_group(group, sub)
        second, _ = subgroup_as_group(group, sub)
        assert first is second
        assert first.order == 6

    def test_pull_and_push(self):
        """Test that pulling and pushing subgroups along the embedding are inverse."""
        group = symmetric_group(4)
        sub = generate_subgroup(group, [group.index_of(Permutation.from_cycles([(0, 1, 2, 3)], 4))])
        standalone, embedding = subgroup_as_group(group, sub)
        inner = generate_subgroup(group, [group.power(sub.members[1], 2)])
        pulled = pull_subgroup(embedding, inner)
        assert push_subgroup(embedding, pulled) == inner
        assert pulled.order == inner.order <= standalone.order
