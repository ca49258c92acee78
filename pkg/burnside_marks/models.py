"""Modelos de datos para burnside-marks."""

from dataclasses import dataclass, field

from burnside_marks.errors import PreconditionError


@dataclass(frozen=True)
class Permutation:
    """Permutación de {0, ..., n-1}: el punto i va a images[i]."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise PreconditionError(f"No es una biyección de {{0..{len(self.images) - 1}}}: {self.images}")

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, cycles: list[tuple[int, ...]], degree: int) -> "Permutation":
        """Construye la permutación a partir de ciclos disjuntos."""
        images = list(range(degree))
        seen: set[int] = set()
        for cycle in cycles:
            for point in cycle:
                if point < 0 or point >= degree:
                    raise PreconditionError(f"Punto {point} fuera de rango para grado {degree}")
                if point in seen:
                    raise PreconditionError(f"Los ciclos no son disjuntos: {point} se repite")
                seen.add(point)
            for i, point in enumerate(cycle):
                images[point] = cycle[(i + 1) % len(cycle)]
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        # (self * other)(i) = self(other(i))
        return Permutation(tuple(self.images[j] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Ciclos no triviales, cada uno empezando por su punto mínimo."""
        seen: set[int] = set()
        result = []
        for start in range(len(self.images)):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            point = self.images[start]
            while point != start:
                cycle.append(point)
                seen.add(point)
                point = self.images[point]
            if len(cycle) > 1:
                result.append(tuple(cycle))
        return result

    def cycle_type(self) -> list[int]:
        """Longitudes de todos los ciclos, incluidos los puntos fijos, en orden decreciente."""
        lengths = [len(c) for c in self.cycles()]
        lengths += [1] * (len(self.images) - sum(lengths))
        return sorted(lengths, reverse=True)

    def __str__(self) -> str:
        """Notación de ciclos: '(0 2 4)(1 3)', o '()' para la identidad."""
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(str(p) for p in cycle) + ")" for cycle in cycles)


@dataclass(frozen=True)
class Subgroup:
    """Subgrupo dado por los índices ordenados de sus elementos en el grupo padre."""

    members: tuple[int, ...]

    @classmethod
    def of(cls, members) -> "Subgroup":
        return cls(tuple(sorted(set(members))))

    @property
    def order(self) -> int:
        return len(self.members)

    def __contains__(self, index: int) -> bool:
        return index in self.members

    def __len__(self) -> int:
        return len(self.members)

    def issubset(self, other: "Subgroup") -> bool:
        return set(self.members) <= set(other.members)


@dataclass(frozen=True)
class SubgroupClass:
    """Clase de conjugación de subgrupos: representante canónico y conjugados.

    witnesses[i] es un elemento g con conjugates[i] = g · canonical · g⁻¹.
    """

    canonical: Subgroup
    conjugates: tuple[Subgroup, ...]
    witnesses: tuple[int, ...]
    label: str = ""

    @property
    def order(self) -> int:
        return self.canonical.order


@dataclass
class OrbitProfile:
    """Histograma de órbitas: counts[i] es el número de órbitas de cardinal i."""

    counts: dict[int, int] = field(default_factory=dict)

    def __getitem__(self, size: int) -> int:
        return self.counts.get(size, 0)

    @property
    def total_points(self) -> int:
        return sum(size * count for size, count in self.counts.items())

    @property
    def orbit_count(self) -> int:
        return sum(self.counts.values())


@dataclass(frozen=True)
class DoubleCosetDecomposition:
    """Descomposición de G en dobles clases HgK.

    parts[i] = H ∩ g K g⁻¹ para g = representatives[i], con índices del grupo padre.
    """

    representatives: tuple[int, ...]
    parts: tuple[Subgroup, ...]
    cosets: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class DegreeSet:
    """Conjunto N de grados admitidos en cada punto."""

    kind: str  # "full" | "zeroone" | "explicit"
    values: frozenset[int] = frozenset()

    FULL = "full"
    ZERO_ONE = "zeroone"
    EXPLICIT = "explicit"

    def __post_init__(self):
        if self.kind not in (self.FULL, self.ZERO_ONE, self.EXPLICIT):
            raise PreconditionError(f"Tipo de conjunto de grados desconocido: {self.kind}")
        if self.kind == self.EXPLICIT:
            if not self.values:
                raise PreconditionError("El conjunto de grados debe ser no vacío")
            if any(v < 0 for v in self.values):
                raise PreconditionError("Los grados deben ser enteros no negativos")

    @classmethod
    def full(cls) -> "DegreeSet":
        return cls(cls.FULL)

    @classmethod
    def zero_one(cls) -> "DegreeSet":
        return cls(cls.ZERO_ONE)

    @classmethod
    def explicit(cls, values) -> "DegreeSet":
        values = frozenset(values)
        # {0,1} explícito es el caso de coloraciones
        if values == frozenset({0, 1}):
            return cls.zero_one()
        return cls(cls.EXPLICIT, values)

    @property
    def is_zero_one(self) -> bool:
        return self.kind == self.ZERO_ONE

    def __str__(self) -> str:
        if self.kind == self.EXPLICIT:
            return "set:" + ",".join(str(v) for v in sorted(self.values))
        return self.kind


@dataclass(frozen=True)
class IdentityCheck:
    """Una fila de verificación: ambos lados calculados por caminos independientes."""

    label: str
    lhs: object
    rhs: object

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs


@dataclass
class IdentityReport:
    """Resultado de verificar una identidad para cada clase de subgrupos."""

    name: str
    checks: list[IdentityCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.ok for check in self.checks)
