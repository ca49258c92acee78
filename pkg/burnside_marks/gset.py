"""G-conjuntos finitos: construcción, restricción, órbitas y puntos fijos."""

import logging
from collections.abc import Sequence
from fractions import Fraction

from burnside_marks.config import resolve_limits
from burnside_marks.errors import GroupMismatchError, InternalConsistencyError, PreconditionError
from burnside_marks.groups import (
    FiniteGroup,
    check_subgroup,
    cyclic_group,
    dihedral_generators,
    dihedral_group,
    generate_subgroup,
    subgroup_as_group,
    trivial_subgroup,
    whole_group,
)
from burnside_marks.models import DoubleCosetDecomposition, OrbitProfile, Subgroup

logger = logging.getLogger(__name__)


class GSet:
    """Conjunto finito {0, ..., size-1} con una acción de `group`.

    action[g][x] es la imagen del punto x por el elemento de índice g.
    """

    def __init__(
        self,
        group: FiniteGroup,
        size: int,
        action: Sequence[Sequence[int]],
        labels: Sequence[str] | None = None,
        limits: dict | None = None,
    ):
        self.group = group
        self.size = size
        self.action: tuple[tuple[int, ...], ...] = tuple(tuple(row) for row in action)
        self.labels = tuple(labels) if labels is not None else None

        if len(self.action) != group.order or any(len(row) != size for row in self.action):
            raise PreconditionError("La tabla de acción no tiene dimensiones |G| × |X|")
        if self.labels is not None and len(self.labels) != size:
            raise PreconditionError("Número de etiquetas distinto del número de puntos")
        if group.order * size <= resolve_limits(limits)["action_check_pairs"]:
            self._check_axioms()

    def _check_axioms(self):
        points = list(range(self.size))
        for row in self.action:
            if sorted(row) != points:
                raise PreconditionError("Un elemento no actúa biyectivamente")
        if list(self.action[self.group.identity_index]) != points:
            raise PreconditionError("La identidad no actúa trivialmente")
        # Basta comprobar la compatibilidad con un sistema generador
        generators = self.group.generators or range(self.group.order)
        for s in generators:
            for g in range(self.group.order):
                composed = self.group.mult(s, g)
                row_s, row_g, row_sg = self.action[s], self.action[g], self.action[composed]
                if any(row_s[row_g[x]] != row_sg[x] for x in points):
                    raise PreconditionError("La acción no es compatible con el producto del grupo")

    def __len__(self) -> int:
        return self.size

    def __repr__(self) -> str:
        return f"GSet({self.group!r}, {self.size} puntos)"

    def act(self, g: int, x: int) -> int:
        return self.action[g][x]


def _same_group(x: GSet, y: GSet):
    if x.group is not y.group:
        raise GroupMismatchError(f"G-conjuntos sobre grupos distintos: {x.group!r} y {y.group!r}")


def natural_gset(group: FiniteGroup) -> GSet:
    """El dominio de las permutaciones con la acción natural."""
    return GSet(group, group.degree, [perm.images for perm in group.elements], [str(i) for i in range(group.degree)])


def empty_gset(group: FiniteGroup) -> GSet:
    return GSet(group, 0, [() for _ in range(group.order)])


def coset_space(group: FiniteGroup, subgroup: Subgroup) -> GSet:
    """G/H con la acción por multiplicación a la izquierda.

    Las clases se ordenan por su elemento de menor índice.
    """
    check_subgroup(group, subgroup)
    coset_of = [-1] * group.order
    representatives: list[int] = []
    for g in range(group.order):
        if coset_of[g] >= 0:
            continue
        point = len(representatives)
        representatives.append(g)
        for h in subgroup.members:
            coset_of[group.mult(g, h)] = point

    action = [[coset_of[group.mult(g, rep)] for rep in representatives] for g in range(group.order)]
    return GSet(group, len(representatives), action, [f"g{rep}H" for rep in representatives])


def orbits(x: GSet, subgroup: Subgroup | None = None) -> list[tuple[int, ...]]:
    """Órbitas de H (por defecto G) ordenadas por su punto mínimo."""
    members = subgroup.members if subgroup is not None else range(x.group.order)
    seen = [False] * x.size
    result = []
    for start in range(x.size):
        if seen[start]:
            continue
        orbit = {x.action[h][start] for h in members}
        for point in orbit:
            seen[point] = True
        result.append(tuple(sorted(orbit)))
    return result


def orbit_profile(x: GSet, subgroup: Subgroup) -> OrbitProfile:
    """O_{X,H,i}: número de H-órbitas de cardinal i."""
    counts: dict[int, int] = {}
    for orbit in orbits(x, subgroup):
        counts[len(orbit)] = counts.get(len(orbit), 0) + 1
    return OrbitProfile(dict(sorted(counts.items())))


def fixed_points(x: GSet, subgroup: Subgroup) -> int:
    """φ_H(X) = |X^H|."""
    rows = [x.action[h] for h in subgroup.members]
    return sum(1 for point in range(x.size) if all(row[point] == point for row in rows))


def stabilizer(x: GSet, point: int) -> Subgroup:
    return Subgroup(tuple(g for g in range(x.group.order) if x.action[g][point] == point))


def count_orbits_burnside(x: GSet) -> int:
    """Número de órbitas por el lema de Burnside: media de puntos fijos por elemento."""
    total = Fraction(
        sum(sum(1 for p in range(x.size) if x.action[g][p] == p) for g in range(x.group.order)), x.group.order
    )
    if total.denominator != 1:
        raise InternalConsistencyError("El lema de Burnside dio un número no entero de órbitas")
    return int(total)


def product(x: GSet, y: GSet) -> GSet:
    """X × Y con la acción diagonal; el par (i, j) es el punto i·|Y| + j."""
    _same_group(x, y)
    action = [
        [row_x[i] * y.size + row_y[j] for i in range(x.size) for j in range(y.size)]
        for row_x, row_y in zip(x.action, y.action)
    ]
    labels = None
    if x.labels is not None and y.labels is not None:
        labels = [f"({a},{b})" for a in x.labels for b in y.labels]
    return GSet(x.group, x.size * y.size, action, labels)


def disjoint_union(x: GSet, y: GSet) -> GSet:
    """X ∪ Y: primero los puntos de X, después los de Y desplazados."""
    _same_group(x, y)
    action = [list(row_x) + [x.size + p for p in row_y] for row_x, row_y in zip(x.action, y.action)]
    labels = None
    if x.labels is not None and y.labels is not None:
        labels = list(x.labels) + list(y.labels)
    return GSet(x.group, x.size + y.size, action, labels)


def scalar_copies(x: GSet, r: int) -> GSet:
    """r[X]: unión disjunta de r copias."""
    if r < 1:
        raise PreconditionError("Se necesita al menos una copia")
    result = x
    for _ in range(r - 1):
        result = disjoint_union(result, x)
    return result


def pullback(x: GSet, group: FiniteGroup, embedding: Sequence[int]) -> GSet:
    """Restricción de X a lo largo de un homomorfismo K -> G dado por índices."""
    if len(embedding) != group.order:
        raise PreconditionError("La inclusión debe tener un índice por elemento del dominio")
    return GSet(group, x.size, [x.action[embedding[k]] for k in range(group.order)], x.labels)


def restrict(x: GSet, subgroup: Subgroup) -> GSet:
    """Res^G_H(X) sobre H visto como grupo independiente."""
    standalone, embedding = subgroup_as_group(x.group, subgroup)
    return pullback(x, standalone, embedding)


def outer_product(
    x: GSet, y: GSet, group: FiniteGroup, left: Sequence[int], right: Sequence[int]
) -> GSet:
    """X × Y como (G1 × G2)-conjunto, con (g1, g2)(i, j) = (g1 i, g2 j)."""
    components: dict[int, tuple[int, int]] = {}
    for g1, p1 in enumerate(left):
        for g2, p2 in enumerate(right):
            components[group.mult(p1, p2)] = (g1, g2)
    if len(components) != group.order:
        raise PreconditionError("Las inclusiones no describen un producto directo")
    action = []
    for g in range(group.order):
        g1, g2 = components[g]
        row_x, row_y = x.action[g1], y.action[g2]
        action.append([row_x[i] * y.size + row_y[j] for i in range(x.size) for j in range(y.size)])
    return GSet(group, x.size * y.size, action)


def double_cosets(group: FiniteGroup, h: Subgroup, k: Subgroup) -> DoubleCosetDecomposition:
    """Dobles clases HgK con sus partes H ∩ gKg⁻¹."""
    check_subgroup(group, h)
    check_subgroup(group, k)
    covered = [False] * group.order
    representatives, parts, cosets = [], [], []
    for g in range(group.order):
        if covered[g]:
            continue
        coset = {group.mult(group.mult(a, g), b) for a in h.members for b in k.members}
        for element in coset:
            covered[element] = True
        conjugated = {group.conjugate(g, b) for b in k.members}
        representatives.append(g)
        parts.append(Subgroup.of(a for a in h.members if a in conjugated))
        cosets.append(tuple(sorted(coset)))
    return DoubleCosetDecomposition(tuple(representatives), tuple(parts), tuple(cosets))


def ngon_vertices(n: int) -> GSet:
    """Vértices del n-gono regular bajo las rotaciones C_n."""
    return natural_gset(cyclic_group(n))


def ngon_vertices_dihedral(n: int) -> GSet:
    """Vértices del n-gono regular bajo D_n, isomorfo a D_n/D_1."""
    group = dihedral_group(n)
    if group.degree == n:
        return natural_gset(group)
    _, b = dihedral_generators(group)
    return coset_space(group, generate_subgroup(group, [b]))


def prism_vertices(n: int) -> GSet:
    """Vértices del n-prisma regular bajo D_n, isomorfo a D_n/C_1.

    Cara superior 0..n-1, inferior n..2n-1; las rotaciones giran ambas caras
    y las reflexiones intercambian las caras.
    """
    group = dihedral_group(n)
    if group.degree != n:
        return coset_space(group, trivial_subgroup(group))
    action = []
    for perm in group.elements:
        flips = perm.images[1] != (perm.images[0] + 1) % n
        row = [0] * (2 * n)
        for face in (0, 1):
            target = face ^ flips
            for i in range(n):
                row[face * n + i] = target * n + perm.images[i]
        action.append(row)
    labels = [f"top{i}" for i in range(n)] + [f"bottom{i}" for i in range(n)]
    return GSet(group, 2 * n, action, labels)


def is_transitive(x: GSet) -> bool:
    return len(orbits(x, whole_group(x.group))) == 1
