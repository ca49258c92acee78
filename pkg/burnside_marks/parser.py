"""Parser de especificaciones de grupos, G-conjuntos y notación de ciclos para la CLI.

Grupos:
    cyclic:N | dihedral:N | symmetric:N | perm:GRADO:(0 1 2)(3 4);(0 1)

G-conjuntos:
    regular | point | natural | ngon | ngon-dihedral | prism
    coset:ETIQUETA            (clase de Φ(G), p. ej. coset:D_1 o coset:H3)
    coset:(0 1);(2 3)         (subgrupo generado por permutaciones)
    product:(A)x(B) | union:(A)+(B) | copies:R:(A)
"""

import re
from dataclasses import dataclass

from burnside_marks.burnside import burnside_ring
from burnside_marks.errors import PreconditionError, SpecParseError
from burnside_marks.groups import (
    FiniteGroup,
    cyclic_group,
    dihedral_group,
    generate_subgroup,
    group_from_generators,
    symmetric_group,
    trivial_subgroup,
    whole_group,
)
from burnside_marks.gset import (
    GSet,
    coset_space,
    disjoint_union,
    natural_gset,
    ngon_vertices,
    ngon_vertices_dihedral,
    prism_vertices,
    product,
    scalar_copies,
)
from burnside_marks.models import Permutation

CYCLES_RE = re.compile(r"^(\(\s*[\d,\s]*\)\s*)+$")
CYCLE_RE = re.compile(r"\(([^()]*)\)")
FAMILY_RE = re.compile(r"^(cyclic|dihedral|symmetric):(\d+)$")
PERM_RE = re.compile(r"^perm:(\d+):(.*)$")

SIMPLE_GSETS = ("regular", "point", "natural", "ngon", "ngon-dihedral", "prism")


def parse_cycles(text: str, degree: int) -> Permutation:
    """'(0 1 2)(3 4)' -> Permutation; '()' es la identidad. Los puntos se separan por espacios o comas."""
    text = text.strip()
    if not CYCLES_RE.match(text):
        raise SpecParseError(f"Notación de ciclos inválida: {text!r}")
    cycles = []
    for body in CYCLE_RE.findall(text):
        points = [p for p in re.split(r"[,\s]+", body.strip()) if p]
        if points:
            cycles.append(tuple(int(p) for p in points))
    try:
        return Permutation.from_cycles(cycles, degree)
    except PreconditionError as e:
        raise SpecParseError(str(e)) from e


def format_cycles(perm: Permutation) -> str:
    return str(perm)


def _parse_generators(text: str, degree: int) -> tuple[Permutation, ...]:
    if not text.strip():
        return ()
    return tuple(parse_cycles(part, degree) for part in text.split(";"))


@dataclass(frozen=True)
class GroupSpec:
    kind: str
    n: int
    generators: tuple[Permutation, ...] = ()

    def __str__(self) -> str:
        if self.kind == "perm":
            return f"perm:{self.n}:" + ";".join(format_cycles(g) for g in self.generators)
        return f"{self.kind}:{self.n}"


def parse_group_spec(text: str) -> GroupSpec:
    text = text.strip()
    match = FAMILY_RE.match(text)
    if match:
        n = int(match.group(2))
        if n < 1:
            raise SpecParseError(f"El orden debe ser positivo: {text!r}")
        return GroupSpec(match.group(1), n)
    match = PERM_RE.match(text)
    if match:
        degree = int(match.group(1))
        if degree < 1:
            raise SpecParseError(f"El grado debe ser positivo: {text!r}")
        return GroupSpec("perm", degree, _parse_generators(match.group(2), degree))
    raise SpecParseError(f"Especificación de grupo desconocida: {text!r}")


def build_group(spec: GroupSpec, limits: dict | None = None) -> FiniteGroup:
    if spec.kind == "cyclic":
        return cyclic_group(spec.n)
    if spec.kind == "dihedral":
        return dihedral_group(spec.n)
    if spec.kind == "symmetric":
        return symmetric_group(spec.n, limits)
    return group_from_generators(spec.n, list(spec.generators), limits)


@dataclass(frozen=True)
class GSetSpec:
    kind: str
    argument: str = ""
    children: tuple["GSetSpec", ...] = ()
    count: int = 1

    def __str__(self) -> str:
        if self.kind in SIMPLE_GSETS:
            return self.kind
        if self.kind == "coset":
            return f"coset:{self.argument}"
        if self.kind == "product":
            return f"product:({self.children[0]})x({self.children[1]})"
        if self.kind == "union":
            return f"union:({self.children[0]})+({self.children[1]})"
        return f"copies:{self.count}:({self.children[0]})"


def _closing(text: str, start: int) -> int:
    """Índice del paréntesis que cierra el abierto en `start`."""
    depth = 0
    for i in range(start, len(text)):
        if text[i] == "(":
            depth += 1
        elif text[i] == ")":
            depth -= 1
            if depth == 0:
                return i
    raise SpecParseError(f"Paréntesis sin cerrar en {text!r}")


def _split_pair(text: str, separator: str) -> tuple[str, str]:
    """'(A)x(B)' -> ('A', 'B') respetando paréntesis anidados."""
    if not text.startswith("("):
        raise SpecParseError(f"Se esperaba '(' en {text!r}")
    end = _closing(text, 0)
    rest = text[end + 1 :]
    if not rest.startswith(separator + "(") or not rest.endswith(")") or _closing(rest, 1) != len(rest) - 1:
        raise SpecParseError(f"Se esperaba '(A){separator}(B)' en {text!r}")
    return text[1:end], rest[2:-1]


def _unwrap(text: str) -> str:
    if not text.startswith("(") or _closing(text, 0) != len(text) - 1:
        raise SpecParseError(f"Se esperaba '(…)' en {text!r}")
    return text[1:-1]


def parse_gset_spec(text: str) -> GSetSpec:
    text = text.strip()
    if text in SIMPLE_GSETS:
        return GSetSpec(text)
    kind, _, rest = text.partition(":")
    if kind == "coset":
        if not rest:
            raise SpecParseError("coset necesita una etiqueta o generadores")
        if rest.startswith("(") and not CYCLES_RE.match(rest.replace(";", "")):
            raise SpecParseError(f"Generadores inválidos: {rest!r}")
        return GSetSpec("coset", rest)
    if kind == "product":
        first, second = _split_pair(rest, "x")
        return GSetSpec("product", children=(parse_gset_spec(first), parse_gset_spec(second)))
    if kind == "union":
        first, second = _split_pair(rest, "+")
        return GSetSpec("union", children=(parse_gset_spec(first), parse_gset_spec(second)))
    if kind == "copies":
        count, _, inner = rest.partition(":")
        if not count.isdigit() or int(count) < 1:
            raise SpecParseError(f"Número de copias inválido en {text!r}")
        return GSetSpec("copies", children=(parse_gset_spec(_unwrap(inner)),), count=int(count))
    raise SpecParseError(f"Especificación de G-conjunto desconocida: {text!r}")


def _require_family(group: FiniteGroup, family: str, kind: str) -> int:
    if not group.family or group.family[0] != family:
        raise PreconditionError(f"'{kind}' requiere un grupo {family}:N, no {group!r}")
    return group.family[1]


def build_gset(spec: GSetSpec, group: FiniteGroup, limits: dict | None = None) -> GSet:
    if spec.kind == "regular":
        return coset_space(group, trivial_subgroup(group))
    if spec.kind == "point":
        return coset_space(group, whole_group(group))
    if spec.kind == "natural":
        return natural_gset(group)
    if spec.kind == "ngon":
        return ngon_vertices(_require_family(group, "cyclic", spec.kind))
    if spec.kind == "ngon-dihedral":
        return ngon_vertices_dihedral(_require_family(group, "dihedral", spec.kind))
    if spec.kind == "prism":
        return prism_vertices(_require_family(group, "dihedral", spec.kind))
    if spec.kind == "coset":
        if spec.argument.startswith("("):
            generators = _parse_generators(spec.argument, group.degree)
            subgroup = generate_subgroup(group, [group.index_of(g) for g in generators])
        else:
            classes = burnside_ring(group, limits).classes
            subgroup = classes.canonical(classes.index_of_label(spec.argument))
        return coset_space(group, subgroup)
    children = [build_gset(child, group, limits) for child in spec.children]
    if spec.kind == "product":
        return product(children[0], children[1])
    if spec.kind == "union":
        return disjoint_union(children[0], children[1])
    return scalar_copies(children[0], spec.count)
