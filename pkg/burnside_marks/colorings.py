"""G-conjuntos anidados coloreados: series φ_{H,t} y μ_{H,t}, coloraciones primitivas e identidades.

Un problema se describe por un G-conjunto X, el número de colores k (uno de
ellos distinguido) y el conjunto N de grados admitidos en cada punto. Solo
k y k - 1 intervienen en las fórmulas; los colores no se materializan aquí.
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction

from burnside_marks.burnside import burnside_ring
from burnside_marks.config import resolve_limits
from burnside_marks.errors import InternalConsistencyError, PreconditionError
from burnside_marks.groups import cyclic_group, cyclic_subgroup, direct_product
from burnside_marks.gset import (
    GSet,
    natural_gset,
    ngon_vertices,
    ngon_vertices_dihedral,
    orbit_profile,
    orbits,
    outer_product,
    prism_vertices,
    pullback,
)
from burnside_marks.models import DegreeSet, IdentityCheck, IdentityReport, Subgroup
from burnside_marks.series import (
    QuadraticValue,
    RationalSeries,
    cyclotomic_product,
    divisors,
    gcd,
    lcm,
    mobius,
    necklace_poly,
)

logger = logging.getLogger(__name__)

PRISM = "prism"
NGON = "ngon"
NGON_DIHEDRAL = "ngon_dihedral"
FAMILIES = (PRISM, NGON, NGON_DIHEDRAL)


@dataclass(frozen=True)
class ColoringProblem:
    """J_{N,A,a}(X) con |A| = colors."""

    gset: GSet
    colors: int
    degrees: DegreeSet = DegreeSet(DegreeSet.ZERO_ONE)
    truncation: int | None = None

    def __post_init__(self):
        if self.colors < 2:
            raise PreconditionError("Se necesitan al menos dos colores")
        if self.truncation is None:
            object.__setattr__(self, "truncation", default_truncation(self.gset, self.degrees))
        elif self.truncation < 0:
            raise PreconditionError("El truncamiento no puede ser negativo")

    @property
    def group(self):
        return self.gset.group

    @property
    def marked_colors(self) -> int:
        """|A'| = k - 1."""
        return self.colors - 1

    @property
    def degree(self) -> int:
        assert self.truncation is not None
        return self.truncation


def default_truncation(x: GSet, degrees: DegreeSet, limits: dict | None = None) -> int:
    """|X| para coloraciones; max(N)·|X| para N finito; el valor configurado si N = ℕ."""
    if degrees.is_zero_one:
        return x.size
    if degrees.kind == DegreeSet.EXPLICIT:
        return max(degrees.values) * x.size
    return resolve_limits(limits)["default_truncation"]


def inner_factor(p: ColoringProblem, orbit_size: int) -> RationalSeries:
    """Σ_{n∈N} ((k-1)·t^i)^n para una órbita de cardinal i."""
    c = p.marked_colors
    if p.degrees.is_zero_one:
        return RationalSeries.binomial_power(c, orbit_size, 1, p.degree)
    if p.degrees.kind == DegreeSet.FULL:
        return RationalSeries.geometric(c, orbit_size, p.degree)
    return RationalSeries.from_polynomial({n * orbit_size: c**n for n in p.degrees.values}, p.degree)


def phi_series(p: ColoringProblem, subgroup: Subgroup) -> RationalSeries:
    """φ_{H,t}: producto sobre los cardinales de H-órbita de inner_factor^O_{X,H,i}."""
    result = RationalSeries.one(p.degree)
    for size, count in orbit_profile(p.gset, subgroup).counts.items():
        if p.degrees.is_zero_one:
            factor = RationalSeries.binomial_power(p.marked_colors, size, count, p.degree)
        else:
            factor = inner_factor(p, size) ** count
        result = result * factor
    return result


def mu_series(p: ColoringProblem, h: int) -> RationalSeries:
    """μ_{H,t} = Σ_V a_{H,V} φ_{V,t} para la clase de índice h en Φ(G)."""
    ring = burnside_ring(p.group)
    row = ring.inverse[h]
    result = RationalSeries.zero(p.degree)
    for v, a in enumerate(row):
        if a:
            result = result + phi_series(p, ring.classes.canonical(v)).scale(a)
    if p.degrees.is_zero_one and (not result.is_integral() or any(c < 0 for c in result.coeffs)):
        raise InternalConsistencyError(
            f"μ-serie imposible para {ring.classes[h].label}: {result.format_polynomial()}"
        )
    return result


@dataclass(frozen=True)
class CharacterSeries:
    """Tabla de series etiquetadas.

    Los tipos 'phi' y 'mu' dan una serie por clase de Φ(G); 'symmetric' (S_t)
    y 'exterior' (λ_t) dan una por elemento de G, etiquetado en notación de ciclos.
    """

    kind: str
    labels: tuple[str, ...]
    series: tuple[RationalSeries, ...]

    def __getitem__(self, i: int) -> RationalSeries:
        return self.series[i]

    def by_label(self, label: str) -> RationalSeries:
        return self.series[self.labels.index(label)]


def character_series(p: ColoringProblem, kind: str = "mu") -> CharacterSeries:
    ring = burnside_ring(p.group)
    if kind == "mu":
        series = tuple(mu_series(p, h) for h in range(len(ring.classes)))
    elif kind == "phi":
        series = tuple(phi_series(p, cls.canonical) for cls in ring.classes)
    else:
        raise PreconditionError(f"Tipo de serie desconocido: {kind}")
    return CharacterSeries(kind, tuple(ring.classes.labels), series)


def _require_zero_one(p: ColoringProblem):
    if not p.degrees.is_zero_one:
        raise PreconditionError(f"La operación requiere N = {{0,1}}, no {p.degrees}")


def _total(series: RationalSeries) -> int:
    value = series.evaluate_at_one()
    if value.denominator != 1:
        raise InternalConsistencyError(f"Total no entero: {value}")
    return int(value)


def mu_total(p: ColoringProblem, h: int) -> int:
    """μ_H(A^X), evaluado sobre la serie completa hasta grado |X| aunque `p` esté truncado."""
    _require_zero_one(p)
    if p.degree < p.gset.size:
        p = ColoringProblem(p.gset, p.colors, p.degrees)
    return _total(mu_series(p, h))


def primitive_count(p: ColoringProblem) -> int:
    """Número de coloraciones primitivas salvo simetría: μ_{C_1} evaluado en t = 1."""
    return mu_total(p, 0)


def mu_totals(p: ColoringProblem) -> list[int]:
    """μ_H(A^X) para cada clase de Φ(G)."""
    ring = burnside_ring(p.group)
    return [mu_total(p, h) for h in range(len(ring.classes))]


def phi_total(p: ColoringProblem, subgroup: Subgroup) -> int:
    """φ_H(A^X) = k^{número de H-órbitas}."""
    _require_zero_one(p)
    return p.colors ** len(orbits(p.gset, subgroup))


def degree_census(p: ColoringProblem) -> RationalSeries:
    """Σ_H |G/H|·μ_{H,t}: la serie de cardinales de Jⁿ."""
    ring = burnside_ring(p.group)
    order = p.group.order
    result = RationalSeries.zero(p.degree)
    for h, cls in enumerate(ring.classes):
        result = result + mu_series(p, h).scale(order // cls.order)
    return result


def symmetric_character_series(x: GSet, g: int, truncation: int | None = None) -> RationalSeries:
    """S_t(χ)(g) = Π_i (1/(1 - tⁱ))^{O_{X,<g>,i}}."""
    p = ColoringProblem(x, 2, DegreeSet.full(), truncation)
    return phi_series(p, cyclic_subgroup(x.group, g))


def exterior_character_series(x: GSet, g: int, truncation: int | None = None) -> RationalSeries:
    """λ_t(χ)(g) = 1/S_{-t}(χ)(g); polinomio de grado ≤ |X|."""
    if truncation is None:
        truncation = x.size
    return symmetric_character_series(x, g, truncation).substitute_neg().reciprocal()


def element_character_series(x: GSet, kind: str = "symmetric", truncation: int | None = None) -> CharacterSeries:
    """S_t(χ) o λ_t(χ) en cada elemento de G."""
    if kind == "symmetric":
        character = symmetric_character_series
    elif kind == "exterior":
        character = exterior_character_series
    else:
        raise PreconditionError(f"Tipo de carácter desconocido: {kind}")
    group = x.group
    series = tuple(character(x, g, truncation) for g in range(group.order))
    return CharacterSeries(kind, tuple(str(perm) for perm in group.elements), series)


# Identidades de producto y de tipo Frobenius


def verify_product_identity(x: GSet, k1: int, k2: int) -> IdentityReport:
    """μ_H(A×B)^X frente a Σ b_{V1,V2}(H)·μ_{V1}(A^X)·μ_{V2}(B^X) para todo H."""
    ring = burnside_ring(x.group)
    lhs = mu_totals(ColoringProblem(x, k1 * k2))
    first = mu_totals(ColoringProblem(x, k1))
    second = mu_totals(ColoringProblem(x, k2))

    rhs = [0] * len(ring.classes)
    for v1, m1 in enumerate(first):
        if not m1:
            continue
        for v2, m2 in enumerate(second):
            if not m2:
                continue
            for h, b in enumerate(ring.product_coefficients(v1, v2)):
                rhs[h] += b * m1 * m2

    report = IdentityReport(f"producto k1={k1} k2={k2}")
    for cls, left, right in zip(ring.classes, lhs, rhs):
        report.checks.append(IdentityCheck(cls.label, left, right))
    logger.debug("Identidad de producto sobre %r: %s", x.group, "ok" if report.passed else "FALLA")
    return report


def corollary_gset(x: GSet, r: int) -> tuple[GSet, tuple[int, ...]]:
    """Y = C_r × X como (C_r × G)-conjunto, con la inclusión de G en el segundo factor."""
    cyclic = cyclic_group(r)
    big, left, right = direct_product(cyclic, x.group)
    return outer_product(natural_gset(cyclic), x, big, left, right), right


def verify_frobenius_identity(
    x: GSet, k: int, r: int, y: GSet | None = None, embedding: Sequence[int] | None = None
) -> IdentityReport:
    """μ_H(J con k^r colores sobre X) frente a Σ_V c_V(H)·μ_V(J con k colores sobre Y).

    Requiere [Res(Y)] = r[X] a lo largo de `embedding`: G -> G'. Sin Y se usa C_r × X.
    """
    if r < 1:
        raise PreconditionError("r debe ser positivo")
    if y is None:
        y, embedding = corollary_gset(x, r)
    elif embedding is None:
        raise PreconditionError("Con un Y explícito hace falta la inclusión G -> G'")
    assert embedding is not None

    ring = burnside_ring(x.group)
    restricted = pullback(y, x.group, embedding)
    if ring.mark_vector(restricted) != [r * m for m in ring.mark_vector(x)]:
        raise PreconditionError(f"Res(Y) no es isomorfo a {r} copias de X")

    big_ring = burnside_ring(y.group)
    lhs = mu_totals(ColoringProblem(x, k**r))
    upstairs = mu_totals(ColoringProblem(y, k))
    rhs = [0] * len(ring.classes)
    for v, m in enumerate(upstairs):
        if not m:
            continue
        c = big_ring.pullback_coefficients(x.group, embedding, v)
        for h, coefficient in enumerate(c.coeffs):
            rhs[h] += coefficient * m

    report = IdentityReport(f"frobenius k={k} r={r}")
    for cls, left, right in zip(ring.classes, lhs, rhs):
        report.checks.append(IdentityCheck(cls.label, left, right))
    return report


def necklace_product_identity(k1: int, k2: int, n: int) -> IdentityCheck:
    """M(k1·k2, n) = Σ_{[i,j]=n} (i,j)·M(k1,i)·M(k2,j)."""
    rhs = sum(
        gcd(i, j) * necklace_poly(k1, i) * necklace_poly(k2, j)
        for i in divisors(n)
        for j in divisors(n)
        if lcm(i, j) == n
    )
    return IdentityCheck(f"M({k1 * k2},{n})", necklace_poly(k1 * k2, n), rhs)


def necklace_power_identity(k: int, r: int, n: int) -> IdentityCheck:
    """M(k^r, n) = Σ_{[j,r]=nr} (j/n)·M(k,j)."""
    rhs = sum(
        (Fraction(j, n) * necklace_poly(k, j) for j in divisors(n * r) if lcm(j, r) == n * r), Fraction(0)
    )
    return IdentityCheck(f"M({k}^{r},{n})", necklace_poly(k**r, n), rhs)


def verify_cyclotomic_identity(k: int, degree: int) -> IdentityReport:
    """1/(1 - kt) = Π_n (1/(1 - tⁿ))^{M(k,n)} coeficiente a coeficiente."""
    if k < 1:
        raise PreconditionError("La identidad ciclotómica requiere k >= 1")
    lhs = RationalSeries.geometric(k, 1, degree)
    rhs = cyclotomic_product(k, degree)
    report = IdentityReport(f"ciclotómica k={k}")
    for n in range(degree + 1):
        report.checks.append(IdentityCheck(f"t^{n}", lhs[n], rhs[n]))
    return report


# Familias diédricas


def family_gset(family: str, n: int) -> GSet:
    if family == PRISM:
        return prism_vertices(n)
    if family == NGON_DIHEDRAL:
        return ngon_vertices_dihedral(n)
    if family == NGON:
        return ngon_vertices(n)
    raise PreconditionError(f"Familia desconocida: {family}")


def closed_form_phi_series(
    n: int, k: int, family: str, kind: str, d: int, truncation: int | None = None
) -> RationalSeries:
    """φ_{H,t} en forma cerrada para H = C_{n/d}, D_{n/d} o D'_{n/d}."""
    if d < 1 or n % d:
        raise PreconditionError(f"{d} no divide a {n}")
    if kind not in ("C", "D", "D'"):
        raise PreconditionError(f"Tipo de subgrupo desconocido: {kind}")
    c = k - 1
    if truncation is None:
        truncation = 2 * n if family == PRISM else n
    short, long = n // d, 2 * n // d

    def binomial(step: int, exponent: int) -> RationalSeries:
        return RationalSeries.binomial_power(c, step, exponent, truncation)

    if family == PRISM:
        if kind == "C":
            return binomial(short, 2 * d)
        return binomial(long, d)
    if family == NGON:
        if kind != "C":
            raise PreconditionError("El n-gono cíclico solo tiene subgrupos C")
        return binomial(short, d)
    if family != NGON_DIHEDRAL:
        raise PreconditionError(f"Familia desconocida: {family}")
    if kind == "C":
        return binomial(short, d)
    if d % 2:
        return binomial(short, 1) * binomial(long, (d - 1) // 2)
    if kind == "D":
        return binomial(short, 2) * binomial(long, d // 2 - 1)
    return binomial(long, d // 2)


def closed_form_case(family: str, d: int) -> str:
    if family == PRISM:
        return "prism"
    if d % 2:
        return "I"
    return "II" if d % 4 == 2 else "III"


def closed_form_total(n: int, k: int, family: str, d: int | None = None) -> QuadraticValue:
    """μ_{C_{n/d}} en t = 1 mediante polinomios de collar, con √k exacto."""
    d = n if d is None else d
    if d < 1 or n % d:
        raise PreconditionError(f"{d} no divide a {n}")
    root = QuadraticValue.sqrt(k)
    half = Fraction(1, 2)
    case = closed_form_case(family, d)
    if case == "prism":
        return QuadraticValue(half * (necklace_poly(k * k, d) - d * necklace_poly(k, d)))
    if case == "I":
        return (root * necklace_poly(root, d) * (-d) + necklace_poly(k, d)) * half
    if case == "II":
        return (
            root * necklace_poly(root, d // 2) * Fraction(d, 4)
            + half * necklace_poly(k, d)
            - Fraction(d, 8) * (k + 1) * necklace_poly(k, d // 2)
        )
    return necklace_poly(root, d) * (-Fraction(d, 4) * (k + 1)) + half * necklace_poly(k, d)


def _phi(p: ColoringProblem, label: str) -> RationalSeries:
    ring = burnside_ring(p.group)
    return phi_series(p, ring.classes.canonical(ring.classes.index_of_label(label)))


def _corollary_checks(p: ColoringProblem, n: int, d: int, report: IdentityReport):
    """μ de C_{n/d}, D_{n/d} y D'_{n/d} como combinaciones de φ sobre los divisores de d."""
    ring = burnside_ring(p.group)
    zero = RationalSeries.zero(p.degree)
    mu_c, mu_d, mu_dd = zero, zero, zero
    for dp in divisors(d):
        m = mobius(d // dp)
        if not m:
            continue
        label = n // dp
        phi_c = _phi(p, f"C_{label}")
        phi_d = _phi(p, f"D_{label}")
        phi_dd = phi_d if dp % 2 else _phi(p, f"D'_{label}")
        if d % 2:
            mu_d = mu_d + phi_d.scale(m)
            mu_c = mu_c + (phi_c.scale(Fraction(1, 2 * d)) - phi_d.scale(Fraction(1, 2))).scale(m)
        else:
            mu_d = mu_d + phi_d.scale(Fraction(m, 2))
            mu_dd = mu_dd + phi_dd.scale(Fraction(m, 2))
            mu_c = mu_c + (
                phi_c.scale(Fraction(1, 2 * d)) - phi_d.scale(Fraction(1, 4)) - phi_dd.scale(Fraction(1, 4))
            ).scale(m)

    m = n // d
    report.checks.append(IdentityCheck(f"μ C_{m}", mu_series(p, ring.classes.index_of_label(f"C_{m}")), mu_c))
    report.checks.append(IdentityCheck(f"μ D_{m}", mu_series(p, ring.classes.index_of_label(f"D_{m}")), mu_d))
    if d % 2 == 0:
        report.checks.append(
            IdentityCheck(f"μ D'_{m}", mu_series(p, ring.classes.index_of_label(f"D'_{m}")), mu_dd)
        )


@dataclass
class DihedralClosedForm:
    """Forma cerrada de μ_{C_{n/d}} para una familia diédrica y sus comprobaciones."""

    family: str
    n: int
    colors: int
    divisor: int
    case: str
    closed_form: QuadraticValue
    series: RationalSeries
    total: int
    checks: IdentityReport = field(default_factory=lambda: IdentityReport("diédrica"))


def dihedral_closed_forms(n: int, k: int, family: str, divisor: int | None = None) -> DihedralClosedForm:
    """Evalúa la forma cerrada y la contrasta con la μ-serie calculada por marcas.

    También comprueba las φ-series cerradas de todos los subgrupos y las
    combinaciones de Möbius que expresan μ de C, D y D' en términos de φ.
    """
    if family not in (PRISM, NGON_DIHEDRAL):
        raise PreconditionError(f"Familia diédrica desconocida: {family}")
    if n < 1 or k < 2:
        raise PreconditionError("Se requiere n >= 1 y k >= 2")
    d = n if divisor is None else divisor
    if d < 1 or n % d:
        raise PreconditionError(f"{d} no divide a {n}")

    x = family_gset(family, n)
    p = ColoringProblem(x, k)
    ring = burnside_ring(x.group)
    report = IdentityReport(f"{family} n={n} k={k} d={d}")

    for dp in divisors(n):
        kinds = ["C", "D"] if dp % 2 else ["C", "D", "D'"]
        for kind in kinds:
            label = f"{kind}_{n // dp}"
            expected = closed_form_phi_series(n, k, family, kind, dp, p.degree)
            report.checks.append(IdentityCheck(f"φ {label}", _phi(p, label), expected))
    _corollary_checks(p, n, d, report)

    closed = closed_form_total(n, k, family, d)
    if not closed.is_integer():
        raise InternalConsistencyError(f"La forma cerrada no es entera: {closed}")
    series = mu_series(p, ring.classes.index_of_label(f"C_{n // d}"))
    total = _total(series)
    report.checks.append(IdentityCheck("total", closed.to_integer(), total))
    if not report.passed:
        failed = [check.label for check in report.checks if not check.ok]
        raise InternalConsistencyError(f"Forma cerrada {family} n={n} k={k} d={d} no coincide: {failed}")
    return DihedralClosedForm(family, n, k, d, closed_form_case(family, d), closed, series, total, report)
