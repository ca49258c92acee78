"""Grupos finitos de permutaciones, subgrupos y clases de conjugación Φ(G)."""

import logging
import threading
import weakref
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import TYPE_CHECKING

from sympy import divisors

from burnside_marks.config import resolve_limits
from burnside_marks.errors import InternalConsistencyError, PreconditionError, ResourceLimitError
from burnside_marks.models import Permutation, Subgroup, SubgroupClass

if TYPE_CHECKING:
    from burnside_marks.burnside import BurnsideRing

logger = logging.getLogger(__name__)


class FiniteGroup:
    """Grupo finito enumerado por completo.

    Los elementos se identifican por su índice en `elements`. Hasta
    `dense_order` elementos se guarda la tabla de multiplicar completa; por
    encima se multiplica bajo demanda a través del índice de permutaciones.
    """

    def __init__(
        self,
        elements: list[Permutation],
        generators: tuple[int, ...] = (),
        family: tuple[str, int] | None = None,
        dense_order: int = 512,
    ):
        if not elements:
            raise PreconditionError("Un grupo necesita al menos la identidad")
        self.elements: tuple[Permutation, ...] = tuple(elements)
        self.degree = self.elements[0].degree
        self.index: dict[Permutation, int] = {perm: i for i, perm in enumerate(self.elements)}
        if len(self.index) != len(self.elements):
            raise PreconditionError("Elementos repetidos en el grupo")

        identity = Permutation.identity(self.degree)
        if identity not in self.index:
            raise PreconditionError("El conjunto de elementos no contiene la identidad")
        self.identity_index = self.index[identity]
        self.generators = generators
        self.family = family

        try:
            self.inverse: tuple[int, ...] = tuple(self.index[perm.inverse()] for perm in self.elements)
        except KeyError as e:
            raise PreconditionError("El conjunto de elementos no es cerrado por inversos") from e

        self._table: list[list[int]] | None = None
        # Anillo de Burnside memorizado, lo asigna burnside.burnside_ring
        self.ring_cache: "BurnsideRing | None" = None
        if len(self.elements) <= dense_order:
            self._table = [[self._compose(i, j) for j in range(len(self.elements))] for i in range(len(self.elements))]

    def _compose(self, i: int, j: int) -> int:
        try:
            return self.index[self.elements[i] * self.elements[j]]
        except KeyError as e:
            raise PreconditionError("El conjunto de elementos no es cerrado por el producto") from e

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        if self.family:
            kind, n = self.family
            return f"{kind}:{n}"
        return f"perm:{self.degree} (orden {self.order})"

    def mult(self, i: int, j: int) -> int:
        if self._table is not None:
            return self._table[i][j]
        return self._compose(i, j)

    def power(self, i: int, k: int) -> int:
        result = self.identity_index
        for _ in range(k % self.element_order(i)):
            result = self.mult(result, i)
        return result

    def element_order(self, i: int) -> int:
        order, current = 1, i
        while current != self.identity_index:
            current = self.mult(current, i)
            order += 1
        return order

    def conjugate(self, g: int, h: int) -> int:
        """g · h · g⁻¹."""
        return self.mult(self.mult(g, h), self.inverse[g])

    def index_of(self, perm: Permutation) -> int:
        try:
            return self.index[perm]
        except KeyError as e:
            raise PreconditionError(f"La permutación {perm.images} no pertenece al grupo {self!r}") from e


def _closure(
    degree: int, generators: list[Permutation], max_order: int, family: tuple[str, int] | None, dense_order: int
) -> FiniteGroup:
    identity = Permutation.identity(degree)
    elements = [identity]
    seen = {identity}
    queue = deque([identity])
    while queue:
        current = queue.popleft()
        for gen in generators:
            product = gen * current
            if product not in seen:
                seen.add(product)
                elements.append(product)
                queue.append(product)
                if len(elements) > max_order:
                    raise ResourceLimitError(f"La clausura supera el orden máximo {max_order}")
    gen_indices = tuple(elements.index(gen) for gen in generators)
    logger.debug("Clausura de %d generadores sobre %d puntos: orden %d", len(generators), degree, len(elements))
    return FiniteGroup(elements, gen_indices, family, dense_order)


def group_from_generators(
    degree: int, generators: list[Permutation], limits: dict | None = None, family: tuple[str, int] | None = None
) -> FiniteGroup:
    """Clausura de los generadores, en anchura desde la identidad."""
    limits = resolve_limits(limits)
    for gen in generators:
        if gen.degree != degree:
            raise PreconditionError(f"Generador de grado {gen.degree}, se esperaba {degree}")
    return _closure(degree, generators, limits["max_closure_order"], family, limits["dense_table_order"])


def _rotation(n: int) -> Permutation:
    return Permutation(tuple((i + 1) % n for i in range(n)))


@lru_cache(maxsize=None)
def _cyclic_group(n: int) -> FiniteGroup:
    return group_from_generators(n, [_rotation(n)], family=("cyclic", n))


def cyclic_group(n: int) -> FiniteGroup:
    """C_n actuando sobre {0, ..., n-1} por el n-ciclo."""
    if n < 1:
        raise PreconditionError("cyclic_group requiere n >= 1")
    return _cyclic_group(n)


def _dihedral_regular_generators(n: int) -> list[Permutation]:
    # a^k b^s <-> punto k + n*s; acción regular por la izquierda
    def point(k: int, s: int) -> int:
        return k % n + n * s

    a = [0] * (2 * n)
    b = [0] * (2 * n)
    for s in (0, 1):
        for k in range(n):
            a[point(k, s)] = point(k + 1, s)
            b[point(k, s)] = point(-k, 1 - s)
    return [Permutation(tuple(a)), Permutation(tuple(b))]


@lru_cache(maxsize=None)
def _dihedral_group(n: int) -> FiniteGroup:
    if n <= 2:
        # Para n <= 2 la acción sobre n puntos no es fiel
        a, b = _dihedral_regular_generators(n)
        return group_from_generators(2 * n, [a, b], family=("dihedral", n))
    b = Permutation(tuple((n - i) % n for i in range(n)))
    return group_from_generators(n, [_rotation(n), b], family=("dihedral", n))


def dihedral_group(n: int) -> FiniteGroup:
    """D_n de orden 2n con generadores a (rotación) y b (reflexión i -> -i)."""
    if n < 1:
        raise PreconditionError("dihedral_group requiere n >= 1")
    return _dihedral_group(n)


@lru_cache(maxsize=None)
def _symmetric_group(n: int) -> FiniteGroup:
    generators = []
    if n >= 2:
        generators = [Permutation.from_cycles([(0, 1)], n), _rotation(n)]
    return group_from_generators(n, generators, family=("symmetric", n))


def symmetric_group(n: int, limits: dict | None = None) -> FiniteGroup:
    """Grupo simétrico completo sobre n puntos."""
    if n < 1:
        raise PreconditionError("symmetric_group requiere n >= 1")
    cap = resolve_limits(limits)["max_symmetric_degree"]
    if n > cap:
        raise ResourceLimitError(f"S_{n} supera el grado máximo configurado ({cap})")
    return _symmetric_group(n)


def direct_product(
    first: FiniteGroup, second: FiniteGroup, limits: dict | None = None
) -> tuple[FiniteGroup, tuple[int, ...], tuple[int, ...]]:
    """G1 × G2 sobre la unión disjunta de los dominios, con sus dos inclusiones."""
    d1, d2 = first.degree, second.degree

    def left(perm: Permutation) -> Permutation:
        return Permutation(perm.images + tuple(range(d1, d1 + d2)))

    def right(perm: Permutation) -> Permutation:
        return Permutation(tuple(range(d1)) + tuple(d1 + i for i in perm.images))

    generators = [left(first.elements[g]) for g in first.generators]
    generators += [right(second.elements[g]) for g in second.generators]
    product = group_from_generators(d1 + d2, generators, limits)
    left_embedding = tuple(product.index_of(left(perm)) for perm in first.elements)
    right_embedding = tuple(product.index_of(right(perm)) for perm in second.elements)
    return product, left_embedding, right_embedding


def generate_subgroup(group: FiniteGroup, generators) -> Subgroup:
    """Menor subgrupo que contiene a los generadores dados (índices)."""
    generators = [g for g in dict.fromkeys(generators) if g != group.identity_index]
    members = {group.identity_index}
    queue = deque([group.identity_index])
    while queue:
        current = queue.popleft()
        for gen in generators:
            product = group.mult(gen, current)
            if product not in members:
                members.add(product)
                queue.append(product)
    return Subgroup.of(members)


def cyclic_subgroup(group: FiniteGroup, g: int) -> Subgroup:
    return generate_subgroup(group, [g])


def trivial_subgroup(group: FiniteGroup) -> Subgroup:
    return Subgroup((group.identity_index,))


def whole_group(group: FiniteGroup) -> Subgroup:
    return Subgroup(tuple(range(group.order)))


def is_subgroup(group: FiniteGroup, subgroup: Subgroup) -> bool:
    members = set(subgroup.members)
    if group.identity_index not in members:
        return False
    if any(m < 0 or m >= group.order for m in members):
        return False
    return all(group.mult(x, y) in members for x in members for y in members)


def check_subgroup(group: FiniteGroup, subgroup: Subgroup):
    if not is_subgroup(group, subgroup):
        raise PreconditionError(f"{subgroup.members} no es un subgrupo de {group!r}")


def conjugate_subgroup(group: FiniteGroup, subgroup: Subgroup, g: int) -> Subgroup:
    """g · H · g⁻¹."""
    return Subgroup.of(group.conjugate(g, h) for h in subgroup.members)


def is_subconjugate(group: FiniteGroup, small: Subgroup, large: Subgroup) -> bool:
    """¿Existe g con g · small · g⁻¹ ⊆ large?"""
    if large.order % small.order:
        return False
    target = set(large.members)
    return any(all(group.conjugate(g, h) in target for h in small.members) for g in range(group.order))


def all_subgroups(group: FiniteGroup, limits: dict | None = None) -> list[Subgroup]:
    """Todos los subgrupos, por extensión sucesiva con subgrupos cíclicos.

    Orden determinista: por orden del subgrupo y después por conjunto de índices.
    """
    cap = resolve_limits(limits)["max_group_order"]
    if group.order > cap:
        raise ResourceLimitError(f"Orden {group.order} supera el máximo para enumerar subgrupos ({cap})")

    # Un generador por subgrupo cíclico
    cyclic: dict[Subgroup, int] = {}
    for g in range(group.order):
        sub = cyclic_subgroup(group, g)
        cyclic.setdefault(sub, g)

    found: dict[Subgroup, tuple[int, ...]] = {trivial_subgroup(group): ()}
    for sub, g in cyclic.items():
        found.setdefault(sub, (g,))

    frontier = [sub for sub in cyclic if sub.order > 1]
    while frontier:
        next_frontier = []
        for sub in frontier:
            gens = found[sub]
            members = set(sub.members)
            for cyc, g in cyclic.items():
                if g in members:
                    continue
                extended = generate_subgroup(group, gens + (g,))
                if extended not in found:
                    found[extended] = gens + (g,)
                    next_frontier.append(extended)
        frontier = next_frontier

    result = sorted(found, key=lambda s: (s.order, s.members))
    logger.debug("%r: %d subgrupos", group, len(result))
    return result


@dataclass(frozen=True, eq=False)
class SubgroupClassTable:
    """Φ(G): clases de conjugación de subgrupos, ordenadas por orden y representante."""

    group: FiniteGroup
    classes: tuple[SubgroupClass, ...]
    _lookup: dict[Subgroup, int] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        for i, cls in enumerate(self.classes):
            for sub in cls.conjugates:
                self._lookup[sub] = i

    def __len__(self) -> int:
        return len(self.classes)

    def __getitem__(self, i: int) -> SubgroupClass:
        return self.classes[i]

    def __iter__(self):
        return iter(self.classes)

    @property
    def labels(self) -> list[str]:
        return [cls.label for cls in self.classes]

    def canonical(self, i: int) -> Subgroup:
        return self.classes[i].canonical

    def index_of(self, subgroup: Subgroup) -> int:
        """Índice de la clase que contiene al subgrupo dado."""
        try:
            return self._lookup[subgroup]
        except KeyError as e:
            raise PreconditionError(f"{subgroup.members} no es un subgrupo de {self.group!r}") from e

    def index_of_label(self, label: str) -> int:
        for i, cls in enumerate(self.classes):
            if cls.label == label:
                return i
        raise PreconditionError(f"No hay ninguna clase con etiqueta {label!r}")

    def subgroup_count(self) -> int:
        return sum(len(cls.conjugates) for cls in self.classes)


def _conjugacy_class(group: FiniteGroup, subgroup: Subgroup) -> tuple[list[Subgroup], list[int]]:
    witnesses: dict[Subgroup, int] = {}
    for g in range(group.order):
        witnesses.setdefault(conjugate_subgroup(group, subgroup, g), g)
    conjugates = sorted(witnesses, key=lambda s: s.members)
    return conjugates, [witnesses[s] for s in conjugates]


def _find_witness(group: FiniteGroup, canonical: Subgroup, target: Subgroup) -> int:
    for g in range(group.order):
        if conjugate_subgroup(group, canonical, g) == target:
            return g
    raise InternalConsistencyError(f"{target.members} no es conjugado de {canonical.members}")


def subgroup_classes(group: FiniteGroup, limits: dict | None = None) -> SubgroupClassTable:
    """Partición de todos los subgrupos en clases de conjugación."""
    assigned: set[Subgroup] = set()
    classes = []
    for sub in all_subgroups(group, limits):
        if sub in assigned:
            continue
        conjugates, witnesses = _conjugacy_class(group, sub)
        assigned.update(conjugates)
        classes.append(SubgroupClass(sub, tuple(conjugates), tuple(witnesses), f"H{len(classes)}"))

    if group.family and group.family[0] == "cyclic":
        classes = [SubgroupClass(c.canonical, c.conjugates, c.witnesses, f"C_{c.order}") for c in classes]
    elif group.family and group.family[0] == "dihedral":
        classes = _transfer_dihedral_labels(group, classes)
    return SubgroupClassTable(group, tuple(classes))


def _transfer_dihedral_labels(group: FiniteGroup, classes: list[SubgroupClass]) -> list[SubgroupClass]:
    labeled = dihedral_subgroup_classes(group.family[1])
    by_members = {frozenset(c.conjugates): c.label for c in labeled}
    result = []
    for c in classes:
        label = by_members.get(frozenset(c.conjugates))
        if label is None:
            raise InternalConsistencyError(f"La clase de {c.canonical.members} no aparece en la clasificación diédrica")
        result.append(SubgroupClass(c.canonical, c.conjugates, c.witnesses, label))
    return result


def dihedral_generators(group: FiniteGroup) -> tuple[int, int]:
    """Índices de a (rotación) y b (reflexión) de un grupo construido con dihedral_group."""
    if not group.family or group.family[0] != "dihedral":
        raise PreconditionError(f"{group!r} no es un grupo diédrico")
    a, b = group.generators
    return a, b


def dihedral_subgroups(n: int, d: int) -> tuple[Subgroup, list[Subgroup]]:
    """C_{n/d} = <a^d> y los d subgrupos C_{n/d} ∪ b a^k C_{n/d}, k = 0..d-1."""
    group = dihedral_group(n)
    if d < 1 or n % d:
        raise PreconditionError(f"{d} no divide a {n}")
    a, b = dihedral_generators(group)
    rotation = group.power(a, d)
    cyclic = generate_subgroup(group, [rotation])
    reflections = [generate_subgroup(group, [rotation, group.mult(b, group.power(a, k))]) for k in range(d)]
    return cyclic, reflections


def dihedral_subgroup_classes(n: int) -> SubgroupClassTable:
    """Φ(D_n) etiquetado C_{n/d}, D_{n/d}, D'_{n/d} para cada divisor d de n.

    D_{n/d} y D'_{n/d} forman una sola clase cuando d es impar.
    """
    if n < 1:
        raise PreconditionError("dihedral_subgroup_classes requiere n >= 1")
    group = dihedral_group(n)
    classes = []

    def add(label: str, members: list[Subgroup]):
        members = sorted(set(members), key=lambda s: s.members)
        canonical = members[0]
        witnesses = tuple(_find_witness(group, canonical, m) for m in members)
        classes.append(SubgroupClass(canonical, tuple(members), witnesses, label))

    for d in divisors(n):
        m = n // d
        cyclic, reflections = dihedral_subgroups(n, d)
        add(f"C_{m}", [cyclic])
        if d % 2:
            add(f"D_{m}", reflections)
        else:
            add(f"D_{m}", reflections[0::2])
            add(f"D'_{m}", reflections[1::2])

    classes.sort(key=lambda c: (c.order, c.canonical.members))
    return SubgroupClassTable(group, tuple(classes))


_subgroup_groups: "weakref.WeakKeyDictionary[FiniteGroup, dict]" = weakref.WeakKeyDictionary()
_subgroup_lock = threading.Lock()


def subgroup_as_group(group: FiniteGroup, subgroup: Subgroup) -> tuple[FiniteGroup, tuple[int, ...]]:
    """H como grupo independiente junto con su inclusión en G.

    El resultado se memoriza: dos llamadas con el mismo H devuelven el mismo objeto.
    """
    with _subgroup_lock:
        cache = _subgroup_groups.setdefault(group, {})
        if subgroup in cache:
            return cache[subgroup]

    check_subgroup(group, subgroup)
    # Sistema generador voraz
    gens: list[int] = []
    span = trivial_subgroup(group)
    for m in subgroup.members:
        if m not in span:
            gens.append(m)
            span = generate_subgroup(group, gens)
    position = {m: i for i, m in enumerate(subgroup.members)}
    standalone = FiniteGroup(
        [group.elements[m] for m in subgroup.members], tuple(position[g] for g in gens), family=None
    )
    result = (standalone, subgroup.members)

    with _subgroup_lock:
        return cache.setdefault(subgroup, result)


def pull_subgroup(embedding: tuple[int, ...], subgroup: Subgroup) -> Subgroup:
    """Reexpresa un subgrupo de G contenido en la imagen de `embedding` en índices del dominio."""
    position = {g: i for i, g in enumerate(embedding)}
    try:
        return Subgroup.of(position[m] for m in subgroup.members)
    except KeyError as e:
        raise PreconditionError("El subgrupo no está contenido en la imagen de la inclusión") from e


def push_subgroup(embedding: tuple[int, ...], subgroup: Subgroup) -> Subgroup:
    """Imagen de un subgrupo del dominio por la inclusión."""
    return Subgroup.of(embedding[m] for m in subgroup.members)
