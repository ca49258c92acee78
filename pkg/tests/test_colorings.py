"""Tests for colored nested G-sets: φ/μ series, primitive counts and identities."""

import math
import random

import pytest

from burnside_marks.burnside import burnside_ring
from burnside_marks.colorings import (
    NGON,
    NGON_DIHEDRAL,
    PRISM,
    ColoringProblem,
    character_series,
    closed_form_phi_series,
    closed_form_total,
    corollary_gset,
    degree_census,
    dihedral_closed_forms,
    element_character_series,
    exterior_character_series,
    mu_series,
    mu_total,
    mu_totals,
    necklace_power_identity,
    necklace_product_identity,
    phi_series,
    phi_total,
    primitive_count,
    symmetric_character_series,
    verify_cyclotomic_identity,
    verify_frobenius_identity,
    verify_product_identity,
)
from burnside_marks.errors import PreconditionError
from burnside_marks.groups import (
    all_subgroups,
    conjugate_subgroup,
    cyclic_group,
    dihedral_group,
    dihedral_subgroups,
    pull_subgroup,
    subgroup_as_group,
    symmetric_group,
    trivial_subgroup,
)
from burnside_marks.gset import (
    coset_space,
    disjoint_union,
    natural_gset,
    ngon_vertices,
    ngon_vertices_dihedral,
    prism_vertices,
    restrict,
)
from burnside_marks.models import DegreeSet
from burnside_marks.series import RationalSeries

DEGREE_SETS = [DegreeSet.zero_one(), DegreeSet.full(), DegreeSet.explicit({0, 2}), DegreeSet.explicit({1, 3})]


def mu_by_label(x, k: int, label: str) -> RationalSeries:
    p = ColoringProblem(x, k)
    return mu_series(p, burnside_ring(x.group).classes.index_of_label(label))


class TestColoringProblem:
    """Tests for building a coloring problem."""

    def test_needs_two_colors(self):
        """Test that fewer than two colors are refused."""
        with pytest.raises(PreconditionError):
            ColoringProblem(ngon_vertices(3), 1)

    def test_default_truncation(self):
        """Test the default truncation for each kind of degree set."""
        x = ngon_vertices(5)
        assert ColoringProblem(x, 2).degree == 5
        assert ColoringProblem(x, 2, DegreeSet.explicit({0, 3})).degree == 15
        assert ColoringProblem(x, 2, DegreeSet.full(), truncation=7).degree == 7

    def test_explicit_zero_one_is_coloring(self):
        """Test that N = {0, 1} given explicitly is the coloring case."""
        assert DegreeSet.explicit({0, 1}) == DegreeSet.zero_one()

    def test_primitive_count_requires_colorings(self):
        """Test that totals are only defined for N = {0, 1}."""
        p = ColoringProblem(ngon_vertices(4), 2, DegreeSet.full(), truncation=4)
        with pytest.raises(PreconditionError):
            primitive_count(p)
        with pytest.raises(PreconditionError):
            phi_total(p, trivial_subgroup(p.group))


class TestPhiSeries:
    """Tests for the fixed-point series φ_{H,t}."""

    def test_hexagon_rotations(self):
        """Test φ_{C_m,t} = (1 + t^m)^{6/m} on the hexagon with two colors."""
        p = ColoringProblem(ngon_vertices(6), 2)
        ring = burnside_ring(p.group)
        for cls in ring.classes:
            expected = RationalSeries.binomial_power(1, cls.order, 6 // cls.order, 6)
            assert phi_series(p, cls.canonical) == expected

    def test_transitive_whole_group(self):
        """Test φ_{G,t} = 1 + (k-1)t^{|X|} on a transitive G-set."""
        for x in (ngon_vertices(5), prism_vertices(3), natural_gset(symmetric_group(4))):
            p = ColoringProblem(x, 3)
            whole = burnside_ring(x.group).classes.canonical(-1)
            assert phi_series(p, whole) == RationalSeries.from_polynomial({0: 1, x.size: 2}, x.size)

    def test_full_degrees(self):
        """Test φ_{1,t} = (1/(1-t))^{|X|} for N = ℕ and two colors."""
        x = ngon_vertices(3)
        p = ColoringProblem(x, 2, DegreeSet.full(), truncation=6)
        expected = RationalSeries.from_coefficients([1, -1], 6).reciprocal() ** 3
        assert phi_series(p, trivial_subgroup(x.group)) == expected

    def test_explicit_degrees(self):
        """Test φ_{1,t} = (1 + t^2)^6 for N = {0, 2}."""
        x = ngon_vertices(6)
        p = ColoringProblem(x, 2, DegreeSet.explicit({0, 2}))
        assert phi_series(p, trivial_subgroup(x.group)) == RationalSeries.binomial_power(1, 2, 6, 12)

    def test_phi_total_counts_orbits(self):
        """Test φ_H(A^X) = k^{#H-orbits}."""
        x = prism_vertices(3)
        ring = burnside_ring(x.group)
        d1 = ring.classes.canonical(ring.classes.index_of_label("D_1"))
        assert phi_total(ColoringProblem(x, 3), d1) == 27
        for k in (2, 3):
            p = ColoringProblem(x, k)
            for cls in ring.classes:
                assert phi_total(p, cls.canonical) == phi_series(p, cls.canonical).evaluate_at_one()

    @pytest.mark.parametrize("degrees", DEGREE_SETS, ids=str)
    def test_multiplicative_over_unions(self, degrees: DegreeSet):
        """Test φ_{H,t}(X ∪ Y) = φ_{H,t}(X)·φ_{H,t}(Y)."""
        group = dihedral_group(4)
        x, y = ngon_vertices_dihedral(4), prism_vertices(4)
        xy = disjoint_union(x, y)
        for sub in all_subgroups(group):
            joint = phi_series(ColoringProblem(xy, 3, degrees, 8), sub)
            split = phi_series(ColoringProblem(x, 3, degrees, 8), sub) * phi_series(
                ColoringProblem(y, 3, degrees, 8), sub
            )
            assert joint == split

    @pytest.mark.parametrize("degrees", DEGREE_SETS, ids=str)
    def test_conjugation_invariance(self, degrees: DegreeSet):
        """Test that conjugate subgroups have the same φ-series."""
        x = natural_gset(symmetric_group(4))
        p = ColoringProblem(x, 2, degrees, 6)
        group = x.group
        for sub in all_subgroups(group):
            for g in range(0, group.order, 5):
                assert phi_series(p, conjugate_subgroup(group, sub, g)) == phi_series(p, sub)

    @pytest.mark.parametrize("degrees", DEGREE_SETS, ids=str)
    def test_restriction_compatibility(self, degrees: DegreeSet):
        """Test that φ over K ≤ H ≤ G can be computed on the restricted H-set."""
        x = ngon_vertices_dihedral(6)
        group = x.group
        for h in (dihedral_subgroups(6, 1)[0], dihedral_subgroups(6, 2)[1][0]):
            _, embedding = subgroup_as_group(group, h)
            restricted = ColoringProblem(restrict(x, h), 3, degrees, 6)
            p = ColoringProblem(x, 3, degrees, 6)
            for k in all_subgroups(group):
                if k.issubset(h):
                    assert phi_series(p, k) == phi_series(restricted, pull_subgroup(embedding, k))


class TestMuSeries:
    """Tests for the orbit-type series μ_{H,t}."""

    def test_hexagon(self):
        """Test the primitive two-colorings of the hexagon under rotation."""
        p = ColoringProblem(ngon_vertices(6), 2)
        assert list(mu_series(p, 0).coeffs) == [0, 1, 2, 3, 2, 1, 0]
        assert primitive_count(p) == 9

    def test_totals_ignore_truncation(self):
        """Test that totals are taken over all degrees of a truncated problem."""
        p = ColoringProblem(ngon_vertices(6), 2, truncation=2)
        assert list(mu_series(p, 0).coeffs) == [0, 1, 2]
        assert primitive_count(p) == 9
        assert mu_total(p, 1) == 2
        assert sum(mu_totals(p)) == 14

    def test_triangular_prism(self):
        """Test the primitive two-colorings of the triangular prism."""
        p = ColoringProblem(prism_vertices(3), 2)
        assert list(mu_series(p, 0).coeffs) == [0, 1, 1, 3, 1, 1, 0]
        assert primitive_count(p) == 7

    @pytest.mark.parametrize(
        "n, k, coeffs, total",
        [
            (4, 3, [0, 0, 1, 2, 0], 3),
            (5, 3, [0, 0, 2, 4, 6, 0], 12),
            (6, 2, [0, 0, 0, 1, 0, 0, 0], 1),
        ],
    )
    def test_ngon_rotation_class(self, n: int, k: int, coeffs: list[int], total: int):
        """Test μ_{C_1,t} of the n-gon under D_n."""
        series = mu_by_label(ngon_vertices_dihedral(n), k, "C_1")
        assert list(series.coeffs) == coeffs
        assert series.evaluate_at_one() == total

    def test_whole_group_class(self):
        """Test that μ_{G,t} counts the monochromatic-by-orbit colorings."""
        p = ColoringProblem(ngon_vertices(6), 2)
        assert list(mu_series(p, 3).coeffs) == [1, 0, 0, 0, 0, 0, 1]

    def test_totals_sum_to_colorings(self):
        """Test Σ_H |G/H|·μ_H(A^X) = k^{|X|}."""
        for x in (prism_vertices(3), ngon_vertices_dihedral(4), natural_gset(symmetric_group(4))):
            for k in (2, 3):
                p = ColoringProblem(x, k)
                ring = burnside_ring(x.group)
                totals = mu_totals(p)
                assert sum(m * (x.group.order // cls.order) for m, cls in zip(totals, ring.classes)) == k**x.size

    def test_orbit_count_from_totals(self):
        """Test that the μ totals add up to the number of orbits of colorings."""
        p = ColoringProblem(ngon_vertices(6), 2)
        assert sum(mu_totals(p)) == 14

    @pytest.mark.parametrize("degrees", DEGREE_SETS, ids=str)
    def test_degree_census(self, degrees: DegreeSet):
        """Test Σ_H |G/H|·μ_{H,t} = φ_{1,t}."""
        x = prism_vertices(4)
        p = ColoringProblem(x, 3, degrees, 8)
        assert degree_census(p) == phi_series(p, trivial_subgroup(x.group))

    def test_degree_census_of_colorings(self):
        """Test that colorings by degree are binomial."""
        x = ngon_vertices_dihedral(5)
        p = ColoringProblem(x, 3)
        assert degree_census(p) == RationalSeries.binomial_power(2, 1, 5, 5)

    def test_character_series(self):
        """Test the per-class table of series."""
        p = ColoringProblem(ngon_vertices(6), 2)
        table = character_series(p, "mu")
        assert table.labels == ("C_1", "C_2", "C_3", "C_6")
        assert table.by_label("C_1") == mu_series(p, 0)
        assert character_series(p, "phi")[0] == RationalSeries.binomial_power(1, 1, 6, 6)
        with pytest.raises(PreconditionError):
            character_series(p, "psi")

    def test_element_character_series(self):
        """Test S_t and λ_t tabulated over the elements of S_3."""
        x = natural_gset(symmetric_group(3))
        exterior = element_character_series(x, "exterior")
        assert len(exterior.series) == 6
        assert [exterior.by_label("()")[n] for n in range(4)] == [1, 3, 3, 1]
        assert [exterior.by_label("(0 1 2)")[n] for n in range(4)] == [1, 0, 0, 1]
        symmetric = element_character_series(x, "symmetric", 2)
        assert symmetric.kind == "symmetric"
        assert [symmetric.by_label("(0 1)")[n] for n in range(3)] == [1, 1, 2]
        with pytest.raises(PreconditionError):
            element_character_series(x, "mu")


class TestCharacters:
    """Tests for symmetric and exterior power characters."""

    def test_two_points(self):
        """Test S_t = 1/(1-t)^2 and λ_t = (1+t)^2 at the identity on two points."""
        x = natural_gset(symmetric_group(2))
        e = x.group.identity_index
        assert list(symmetric_character_series(x, e, 4).coeffs) == [1, 2, 3, 4, 5]
        assert list(exterior_character_series(x, e).coeffs) == [1, 2, 1]

    def test_three_cycle(self):
        """Test S_t((0 1 2)) = 1/(1-t^3) on three points."""
        x = natural_gset(symmetric_group(3))
        g = next(i for i, perm in enumerate(x.group.elements) if perm.cycle_type() == [3])
        assert list(symmetric_character_series(x, g, 6).coeffs) == [1, 0, 0, 1, 0, 0, 1]
        assert list(exterior_character_series(x, g).coeffs) == [1, 0, 0, 1]

    def test_identity_dimensions(self):
        """Test the dimensions of S^n and Λ^n at the identity."""
        x = ngon_vertices_dihedral(5)
        e = x.group.identity_index
        symmetric = symmetric_character_series(x, e, 8)
        exterior = exterior_character_series(x, e)
        assert [int(c) for c in symmetric.coeffs] == [math.comb(5 + n - 1, n) for n in range(9)]
        assert [int(c) for c in exterior.coeffs] == [math.comb(5, n) for n in range(6)]

    def test_symmetric_times_exterior_at_minus_t(self):
        """Test S_t(g)·λ_{-t}(g) = 1 on random G-sets and elements."""
        rng = random.Random(13)
        groups = [cyclic_group(6), dihedral_group(4), symmetric_group(4)]
        for _ in range(50):
            group = rng.choice(groups)
            x = coset_space(group, rng.choice(all_subgroups(group)))
            g = rng.randrange(group.order)
            symmetric = symmetric_character_series(x, g, 8)
            exterior = exterior_character_series(x, g, 8).substitute_neg()
            assert symmetric * exterior == RationalSeries.one(8)


class TestIdentities:
    """Tests for the product and Frobenius-type identities and their specializations."""

    @pytest.mark.parametrize("group", [cyclic_group(6), dihedral_group(3), dihedral_group(4)], ids=repr)
    @pytest.mark.parametrize("k1, k2", [(2, 2), (2, 3)])
    def test_product_identity(self, group, k1: int, k2: int):
        """Test μ_H(A×B) = Σ b_{V1,V2}(H)·μ_{V1}(A)·μ_{V2}(B) on the regular G-set."""
        report = verify_product_identity(coset_space(group, trivial_subgroup(group)), k1, k2)
        assert report.passed
        assert len(report.checks) == len(burnside_ring(group).classes)

    def test_product_identity_on_ngon(self):
        """Test the product identity on a non-regular G-set."""
        assert verify_product_identity(ngon_vertices_dihedral(5), 2, 3).passed

    @pytest.mark.parametrize("group", [cyclic_group(3), dihedral_group(3)], ids=repr)
    @pytest.mark.parametrize("r", [2, 3])
    def test_frobenius_identity(self, group, r: int):
        """Test the identity for k^r colors on X against k colors on C_r × X."""
        report = verify_frobenius_identity(coset_space(group, trivial_subgroup(group)), 2, r)
        assert report.passed

    def test_frobenius_on_ngon(self):
        """Test the identity on the square under D_4."""
        assert verify_frobenius_identity(ngon_vertices_dihedral(4), 2, 2).passed

    def test_frobenius_precondition(self):
        """Test that Y must restrict to r copies of X."""
        x = ngon_vertices(3)
        y, embedding = corollary_gset(x, 3)
        with pytest.raises(PreconditionError):
            verify_frobenius_identity(x, 2, 2, y, embedding)
        with pytest.raises(PreconditionError):
            verify_frobenius_identity(x, 2, 3, y)

    def test_corollary_gset(self):
        """Test that C_r × X restricts to r copies of X."""
        x = ngon_vertices_dihedral(3)
        y, embedding = corollary_gset(x, 2)
        assert y.size == 6
        assert y.group.order == 12
        assert len(embedding) == x.group.order

    def test_necklace_product_identity(self):
        """Test M(k1·k2, n) = Σ_{lcm(i,j)=n} gcd(i,j)·M(k1,i)·M(k2,j)."""
        check = necklace_product_identity(2, 2, 2)
        assert (check.lhs, check.rhs) == (6, 6)
        for k1 in range(1, 4):
            for k2 in range(1, 4):
                for n in range(1, 9):
                    assert necklace_product_identity(k1, k2, n).ok

    def test_necklace_power_identity(self):
        """Test M(k^r, n) = Σ_{lcm(j,r)=nr} (j/n)·M(k,j)."""
        check = necklace_power_identity(2, 2, 1)
        assert (check.lhs, check.rhs) == (4, 4)
        for k in range(1, 4):
            for r in range(1, 4):
                for n in range(1, 7):
                    assert necklace_power_identity(k, r, n).ok

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_cyclotomic_identity(self, k: int):
        """Test the cyclotomic identity coefficient by coefficient."""
        report = verify_cyclotomic_identity(k, 12)
        assert report.passed
        assert len(report.checks) == 13


class TestDihedralClosedForms:
    """Tests for the closed forms of the prism and n-gon families."""

    @pytest.mark.parametrize(
        "family, n, k, case, total",
        [
            (PRISM, 3, 2, "prism", 7),
            (NGON_DIHEDRAL, 6, 2, "II", 1),
            (NGON_DIHEDRAL, 5, 3, "I", 12),
            (NGON_DIHEDRAL, 4, 3, "III", 3),
        ],
    )
    def test_worked_values(self, family: str, n: int, k: int, case: str, total: int):
        """Test the closed form against known primitive counts."""
        result = dihedral_closed_forms(n, k, family)
        assert result.case == case
        assert result.total == total
        assert result.closed_form == total
        assert result.checks.passed

    @pytest.mark.parametrize("family", [PRISM, NGON_DIHEDRAL])
    @pytest.mark.parametrize("n", range(1, 9))
    def test_every_divisor(self, family: str, n: int):
        """Test every divisor d of n with two and three colors."""
        for k in (2, 3):
            for d in range(1, n + 1):
                if n % d == 0:
                    result = dihedral_closed_forms(n, k, family, d)
                    assert result.divisor == d

    def test_closed_total_matches_mu(self):
        """Test closed_form_total against μ_{C_{n/d}} directly."""
        for n in (4, 6):
            x = prism_vertices(n)
            for d in (1, 2, n):
                expected = mu_by_label(x, 2, f"C_{n // d}").evaluate_at_one()
                assert closed_form_total(n, 2, PRISM, d) == expected

    def test_cyclic_ngon_phi(self):
        """Test the closed φ-series of the n-gon under rotation."""
        x = ngon_vertices(6)
        p = ColoringProblem(x, 3)
        ring = burnside_ring(x.group)
        for d in (1, 2, 3, 6):
            cls = ring.classes.canonical(ring.classes.index_of_label(f"C_{6 // d}"))
            assert closed_form_phi_series(6, 3, NGON, "C", d) == phi_series(p, cls)
        with pytest.raises(PreconditionError):
            closed_form_phi_series(6, 3, NGON, "D", 2)

    def test_rejects_bad_arguments(self):
        """Test unknown families and non-divisors."""
        with pytest.raises(PreconditionError):
            dihedral_closed_forms(6, 2, NGON)
        with pytest.raises(PreconditionError):
            dihedral_closed_forms(6, 2, PRISM, 4)
        with pytest.raises(PreconditionError):
            closed_form_total(6, 2, PRISM, 5)
