"""
burnside-marks
Tablas de marcas del anillo de Burnside, coloraciones primitivas y caracteres
de potencias simétricas con aritmética exacta.
"""

from burnside_marks.burnside import BurnsideElement, BurnsideRing, burnside_ring, decompose
from burnside_marks.colorings import (
    ColoringProblem,
    dihedral_closed_forms,
    mu_series,
    phi_series,
    primitive_count,
)
from burnside_marks.groups import (
    FiniteGroup,
    cyclic_group,
    dihedral_group,
    group_from_generators,
    subgroup_classes,
    symmetric_group,
)
from burnside_marks.gset import GSet, coset_space, ngon_vertices, ngon_vertices_dihedral, prism_vertices
from burnside_marks.models import DegreeSet, Permutation, Subgroup
from burnside_marks.series import QuadraticValue, RationalSeries, necklace_poly

__version__ = "1.0.0"
__all__ = [
    "BurnsideElement",
    "BurnsideRing",
    "ColoringProblem",
    "DegreeSet",
    "FiniteGroup",
    "GSet",
    "Permutation",
    "QuadraticValue",
    "RationalSeries",
    "Subgroup",
    "burnside_ring",
    "coset_space",
    "cyclic_group",
    "decompose",
    "dihedral_closed_forms",
    "dihedral_group",
    "group_from_generators",
    "mu_series",
    "necklace_poly",
    "ngon_vertices",
    "ngon_vertices_dihedral",
    "phi_series",
    "primitive_count",
    "prism_vertices",
    "subgroup_classes",
    "symmetric_group",
]
