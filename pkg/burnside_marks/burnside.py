"""Anillo de Burnside B(G): tabla de marcas, su inversa exacta y descomposición de G-conjuntos.

Convenciones:
    marks.entries[V][W] = φ_V(G/W)
    inverse.entries[H][V] = a_{H,V}, de modo que μ_H(X) = Σ_V a_{H,V} φ_V(X)

Con Φ(G) ordenado por orden de subgrupo, la tabla de marcas es triangular
superior y su inversa se obtiene por sustitución regresiva.
"""

import logging
import threading
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from burnside_marks.config import resolve_limits
from burnside_marks.errors import GroupMismatchError, InternalConsistencyError, PreconditionError, ResourceLimitError
from burnside_marks.groups import FiniteGroup, SubgroupClassTable, subgroup_as_group, subgroup_classes
from burnside_marks.gset import GSet, coset_space, fixed_points, product, pullback
from burnside_marks.models import Subgroup

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MarkTable:
    classes: SubgroupClassTable
    entries: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, v: int) -> tuple[int, ...]:
        return self.entries[v]


@dataclass(frozen=True)
class InversionTable:
    classes: SubgroupClassTable
    entries: tuple[tuple[Fraction, ...], ...]

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, h: int) -> tuple[Fraction, ...]:
        return self.entries[h]

    def apply(self, vector: Sequence[int | Fraction]) -> list[Fraction]:
        """μ = A · φ."""
        return [sum((a * Fraction(v) for a, v in zip(row, vector) if a), Fraction(0)) for row in self.entries]


@dataclass(frozen=True)
class BurnsideElement:
    """Σ coeffs[H]·[G/H] sobre Φ(G)."""

    classes: SubgroupClassTable
    coeffs: tuple[int, ...]

    def _check(self, other: "BurnsideElement"):
        if other.classes is not self.classes:
            raise GroupMismatchError("Elementos de anillos de Burnside distintos")

    def __add__(self, other: "BurnsideElement") -> "BurnsideElement":
        self._check(other)
        return BurnsideElement(self.classes, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __getitem__(self, h: int) -> int:
        return self.coeffs[h]

    def size(self) -> int:
        """Σ coeffs[H]·|G/H|, el cardinal del G-conjunto."""
        order = self.classes.group.order
        return sum(c * (order // cls.order) for c, cls in zip(self.coeffs, self.classes))

    def as_dict(self) -> dict[str, int]:
        return {cls.label: c for cls, c in zip(self.classes, self.coeffs) if c}

    def __str__(self) -> str:
        terms = []
        for label, c in self.as_dict().items():
            body = f"[G/{label}]"
            terms.append(body if c == 1 else f"{c}{body}")
        return " + ".join(terms) if terms else "0"


def mark_table(group: FiniteGroup, classes: SubgroupClassTable | None = None) -> MarkTable:
    """φ_V(G/W) para todo V, W en Φ(G)."""
    if classes is None:
        classes = subgroup_classes(group)
    spaces = [coset_space(group, cls.canonical) for cls in classes]
    entries = tuple(tuple(fixed_points(space, v.canonical) for space in spaces) for v in classes)
    logger.debug("Tabla de marcas de %r: %d clases", group, len(entries))
    return MarkTable(classes, entries)


def inversion_table(marks: MarkTable) -> InversionTable:
    """Inversa exacta de la tabla de marcas por sustitución regresiva.

    Fila H: a_H = (e_H - Σ_{W>H} φ_H(G/W)·a_W) / φ_H(G/H), empezando por H = G.
    """
    size = len(marks)
    rows: list[list[Fraction]] = [[] for _ in range(size)]
    for h in range(size - 1, -1, -1):
        diagonal = marks[h][h]
        if diagonal == 0:
            raise InternalConsistencyError(f"Tabla de marcas singular en la clase {h}")
        row = [Fraction(0)] * size
        row[h] = Fraction(1)
        for w in range(h + 1, size):
            m = marks[h][w]
            if m:
                row = [r - m * a for r, a in zip(row, rows[w])]
        rows[h] = [r / diagonal for r in row]
    return InversionTable(marks.classes, tuple(tuple(row) for row in rows))


class BurnsideRing:
    """Φ(G), marcas, inversa y cachés de coeficientes de estructura de un grupo."""

    def __init__(self, group: FiniteGroup, classes: SubgroupClassTable | None = None, limits: dict | None = None):
        self.group = group
        self.classes = classes if classes is not None else subgroup_classes(group, limits)
        self.marks = mark_table(group, self.classes)
        self.inverse = inversion_table(self.marks)
        self._lock = threading.Lock()
        self._spaces: dict[int, GSet] = {}
        self._products: dict[tuple[int, int], tuple[int, ...]] = {}
        self._pullbacks: dict[tuple[FiniteGroup, tuple[int, ...], int], BurnsideElement] = {}

    def __len__(self) -> int:
        return len(self.classes)

    def __repr__(self) -> str:
        return f"BurnsideRing({self.group!r}, {len(self.classes)} clases)"

    def coset_space(self, v: int) -> GSet:
        with self._lock:
            space = self._spaces.get(v)
        if space is None:
            space = coset_space(self.group, self.classes.canonical(v))
            with self._lock:
                space = self._spaces.setdefault(v, space)
        return space

    def _check_gset(self, x: GSet):
        if x.group is not self.group:
            raise GroupMismatchError(f"El G-conjunto es sobre {x.group!r}, no sobre {self.group!r}")

    def _check_element(self, alpha: BurnsideElement):
        if alpha.classes is not self.classes:
            raise GroupMismatchError("El elemento no pertenece a este anillo de Burnside")

    def mark_vector(self, x: GSet) -> list[int]:
        self._check_gset(x)
        return [fixed_points(x, cls.canonical) for cls in self.classes]

    def marks_of(self, alpha: BurnsideElement) -> list[int]:
        """φ(α) = M · coeffs."""
        self._check_element(alpha)
        return [sum(m * c for m, c in zip(row, alpha.coeffs)) for row in self.marks.entries]

    def element_from_marks(self, vector: Sequence[int]) -> BurnsideElement:
        """Elemento virtual con el vector de marcas dado."""
        if len(vector) != len(self.classes):
            raise PreconditionError(f"Se esperaban {len(self.classes)} marcas, hay {len(vector)}")
        mu = self.inverse.apply(vector)
        if any(m.denominator != 1 for m in mu):
            raise PreconditionError(f"El vector {list(vector)} no es el de ningún elemento de B(G)")
        return BurnsideElement(self.classes, tuple(int(m) for m in mu))

    def decompose(self, x: GSet) -> BurnsideElement:
        """[X] = Σ μ_H(X)·[G/H] calculado a partir de las marcas."""
        mu = self.inverse.apply(self.mark_vector(x))
        if any(m.denominator != 1 or m < 0 for m in mu):
            raise InternalConsistencyError(f"Multiplicidades imposibles para un G-conjunto: {mu}")
        return BurnsideElement(self.classes, tuple(int(m) for m in mu))

    def is_isomorphic(self, x: GSet, y: GSet) -> bool:
        return self.mark_vector(x) == self.mark_vector(y)

    def transitive(self, v: int) -> BurnsideElement:
        """[G/V]."""
        coeffs = [0] * len(self.classes)
        coeffs[v] = 1
        return BurnsideElement(self.classes, tuple(coeffs))

    def unit(self) -> BurnsideElement:
        """[G/G], la clase del punto."""
        return self.transitive(len(self.classes) - 1)

    def zero(self) -> BurnsideElement:
        return BurnsideElement(self.classes, (0,) * len(self.classes))

    def add(self, alpha: BurnsideElement, beta: BurnsideElement) -> BurnsideElement:
        self._check_element(alpha)
        return alpha + beta

    def scale(self, alpha: BurnsideElement, r: int) -> BurnsideElement:
        self._check_element(alpha)
        return BurnsideElement(self.classes, tuple(r * c for c in alpha.coeffs))

    def product_coefficients(self, v1: int, v2: int) -> tuple[int, ...]:
        """b_{V1,V2}(H) para cada H de Φ(G): multiplicidades de G/V1 × G/V2."""
        key = (min(v1, v2), max(v1, v2))
        with self._lock:
            cached = self._products.get(key)
        if cached is not None:
            return cached
        coeffs = self.decompose(product(self.coset_space(v1), self.coset_space(v2))).coeffs
        with self._lock:
            return self._products.setdefault(key, coeffs)

    def multiply(self, alpha: BurnsideElement, beta: BurnsideElement) -> BurnsideElement:
        """Extensión bilineal de [G/V1]·[G/V2] = Σ_H b_{V1,V2}(H)[G/H]."""
        self._check_element(alpha)
        self._check_element(beta)
        result = [0] * len(self.classes)
        for v1, a in enumerate(alpha.coeffs):
            if not a:
                continue
            for v2, b in enumerate(beta.coeffs):
                if not b:
                    continue
                for h, coefficient in enumerate(self.product_coefficients(v1, v2)):
                    result[h] += a * b * coefficient
        return BurnsideElement(self.classes, tuple(result))

    def pullback_coefficients(self, domain: FiniteGroup, embedding: Sequence[int], v: int) -> BurnsideElement:
        """Descomposición de G/V restringido a lo largo de K -> G, en B(K)."""
        key = (domain, tuple(embedding), v)
        with self._lock:
            cached = self._pullbacks.get(key)
        if cached is not None:
            return cached
        element = burnside_ring(domain).decompose(pullback(self.coset_space(v), domain, embedding))
        with self._lock:
            return self._pullbacks.setdefault(key, element)

    def restriction_coefficients(self, subgroup: Subgroup, v: int) -> BurnsideElement:
        """c_V(K) para K en Φ(H): [Res^G_H(G/V)] en B(H)."""
        standalone, embedding = subgroup_as_group(self.group, subgroup)
        return self.pullback_coefficients(standalone, embedding, v)

    def restrict_element(self, alpha: BurnsideElement, subgroup: Subgroup) -> BurnsideElement:
        """Extensión lineal de Res^G_H mediante los coeficientes c_V."""
        self._check_element(alpha)
        standalone, _ = subgroup_as_group(self.group, subgroup)
        result = burnside_ring(standalone).zero()
        for v, a in enumerate(alpha.coeffs):
            if a:
                c = self.restriction_coefficients(subgroup, v)
                result = result + BurnsideElement(c.classes, tuple(a * x for x in c.coeffs))
        return result


_rings_lock = threading.Lock()


def burnside_ring(group: FiniteGroup, limits: dict | None = None) -> BurnsideRing:
    """Anillo de Burnside memorizado en el propio grupo.

    Con `limits` explícito la cota de orden se comprueba también al reutilizar el anillo.
    """
    ring = group.ring_cache
    if ring is None:
        ring = BurnsideRing(group, limits=limits)
        with _rings_lock:
            if group.ring_cache is None:
                group.ring_cache = ring
            else:
                ring = group.ring_cache
    elif limits is not None:
        cap = resolve_limits(limits)["max_group_order"]
        if group.order > cap:
            raise ResourceLimitError(f"Orden {group.order} supera el máximo para enumerar subgrupos ({cap})")
    return ring


def decompose(x: GSet) -> BurnsideElement:
    return burnside_ring(x.group).decompose(x)
