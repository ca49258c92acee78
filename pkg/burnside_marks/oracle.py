"""Oráculo de fuerza bruta: enumera coloraciones, multiconjuntos y órbitas de forma directa.

Cada coloración f: X -> {0, ..., k-1} se recorre una vez; solo se cuenta si es
la menor (lexicográficamente) de su órbita, de modo que la memoria no depende
de k^|X|. El color 0 hace de color distinguido.
"""

import logging
import math
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations_with_replacement, product

from burnside_marks.burnside import BurnsideElement, burnside_ring
from burnside_marks.colorings import ColoringProblem, mu_series
from burnside_marks.config import resolve_limits
from burnside_marks.errors import OracleMismatchError, PreconditionError, ResourceLimitError
from burnside_marks.gset import GSet, orbits, stabilizer
from burnside_marks.models import Subgroup

logger = logging.getLogger(__name__)


@dataclass
class Census:
    """Órbitas contadas por grado (número de puntos con color distinto de 0)."""

    by_degree: dict[int, int] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.by_degree.values())


def _check_colorings_cap(x: GSet, k: int, limits: dict | None):
    if k < 1:
        raise PreconditionError("El oráculo necesita al menos un color")
    cap = resolve_limits(limits)["max_oracle_colorings"]
    if k**x.size > cap:
        raise ResourceLimitError(f"{k}^{x.size} coloraciones superan la cota del oráculo ({cap})")


def _orbit_representatives(x: GSet, k: int, limits: dict | None):
    """Genera (coloración, estabilizador) para el representante mínimo de cada órbita."""
    _check_colorings_cap(x, k, limits)
    group = x.group
    # (g·f)(y) = f(g⁻¹·y)
    pullbacks = [(g, x.action[group.inverse[g]]) for g in range(group.order)]
    for coloring in product(range(k), repeat=x.size):
        fixers = []
        minimal = True
        for g, row in pullbacks:
            moved = tuple(coloring[row[y]] for y in range(x.size))
            if moved < coloring:
                minimal = False
                break
            if moved == coloring:
                fixers.append(g)
        if minimal:
            yield coloring, Subgroup.of(fixers)


def _degree(coloring: tuple[int, ...]) -> int:
    return sum(1 for c in coloring if c)


def oracle_primitive_census(x: GSet, k: int, limits: dict | None = None) -> Census:
    """Órbitas de cardinal |G| (estabilizador trivial) por grado."""
    counts: Counter[int] = Counter()
    for coloring, stab in _orbit_representatives(x, k, limits):
        if stab.order == 1:
            counts[_degree(coloring)] += 1
    logger.debug("Oráculo sobre %r, k=%d: %d órbitas primitivas", x, k, sum(counts.values()))
    return Census(dict(sorted(counts.items())))


def oracle_orbit_census(x: GSet, k: int, limits: dict | None = None) -> list[Census]:
    """Para cada clase de Φ(G), las órbitas de coloraciones isomorfas a G/H por grado."""
    classes = burnside_ring(x.group).classes
    counts: list[Counter[int]] = [Counter() for _ in range(len(classes))]
    for coloring, stab in _orbit_representatives(x, k, limits):
        counts[classes.index_of(stab)][_degree(coloring)] += 1
    return [Census(dict(sorted(c.items()))) for c in counts]


def oracle_mu_by_degree(x: GSet, k: int, h: int, limits: dict | None = None) -> Census:
    return oracle_orbit_census(x, k, limits)[h]


def oracle_symmetric_power(x: GSet, n: int, limits: dict | None = None) -> GSet:
    """Sⁿ(X): funciones f: X -> ℕ con Σ f = n, como multiconjuntos ordenados de puntos."""
    if n < 0:
        raise PreconditionError("El grado de la potencia simétrica no puede ser negativo")
    cap = resolve_limits(limits)["max_symmetric_power_points"]
    size = math.comb(x.size + n - 1, n) if x.size else int(n == 0)
    if size > cap:
        raise ResourceLimitError(f"Sⁿ(X) tendría {size} puntos, más que la cota ({cap})")

    multisets = list(combinations_with_replacement(range(x.size), n))
    index = {m: i for i, m in enumerate(multisets)}
    action = [
        [index[tuple(sorted(row[p] for p in m))] for m in multisets] for row in x.action
    ]
    labels = []
    for m in multisets:
        multiplicity = Counter(m)
        labels.append("(" + ",".join(str(multiplicity[p]) for p in range(x.size)) + ")")
    return GSet(x.group, len(multisets), action, labels, limits)


def oracle_burnside_decompose(x: GSet, limits: dict | None = None) -> BurnsideElement:
    """Recuento directo de órbitas por clase de estabilizador."""
    cap = resolve_limits(limits)["max_oracle_colorings"]
    if x.size > cap:
        raise ResourceLimitError(f"{x.size} puntos superan la cota del oráculo ({cap})")
    classes = burnside_ring(x.group).classes
    coeffs = [0] * len(classes)
    for orbit in orbits(x):
        coeffs[classes.index_of(stabilizer(x, orbit[0]))] += 1
    return BurnsideElement(classes, tuple(coeffs))


def cross_check(p: ColoringProblem, h: int = 0, limits: dict | None = None) -> Census:
    """Compara la μ_H-serie con el censo por grado del oráculo; lanza OracleMismatchError si difieren."""
    if not p.degrees.is_zero_one or p.degree < p.gset.size:
        raise PreconditionError("El oráculo compara coloraciones con la serie completa hasta grado |X|")
    if h == 0:
        census = oracle_primitive_census(p.gset, p.colors, limits)
    else:
        census = oracle_mu_by_degree(p.gset, p.colors, h, limits)
    series = mu_series(p, h)
    closed = {n: int(c) for n, c in enumerate(series.coeffs) if c}
    if closed != census.by_degree:
        raise OracleMismatchError(f"Forma cerrada {closed} frente a oráculo {census.by_degree}")
    return census
