"""Interfaz de línea de comandos de burnside-marks."""

import argparse
import logging
import sys

from burnside_marks import config
from burnside_marks.burnside import burnside_ring
from burnside_marks.colorings import (
    NGON_DIHEDRAL,
    PRISM,
    ColoringProblem,
    dihedral_closed_forms,
    exterior_character_series,
    mu_series,
    mu_total,
    necklace_power_identity,
    necklace_product_identity,
    symmetric_character_series,
    verify_cyclotomic_identity,
    verify_frobenius_identity,
    verify_product_identity,
)
from burnside_marks.errors import BurnsideError, InternalConsistencyError, PreconditionError, SpecParseError
from burnside_marks.models import DegreeSet, IdentityReport
from burnside_marks.oracle import cross_check, oracle_burnside_decompose
from burnside_marks.output import (
    dumps,
    element_json,
    marks_json,
    marks_text,
    report_json,
    report_text,
    series_json,
    series_text,
)
from burnside_marks.parser import build_group, build_gset, format_cycles, parse_cycles, parse_group_spec, parse_gset_spec
from burnside_marks.series import QuadraticValue, necklace_poly

logger = logging.getLogger(__name__)


class _ArgumentParser(argparse.ArgumentParser):
    """Los errores de sintaxis terminan con código 1 en lugar de 2."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def parse_degrees(text: str) -> DegreeSet:
    if text == DegreeSet.FULL:
        return DegreeSet.full()
    if text == DegreeSet.ZERO_ONE:
        return DegreeSet.zero_one()
    if text.startswith("set:"):
        try:
            values = [int(v) for v in text[4:].split(",") if v.strip()]
        except ValueError as e:
            raise SpecParseError(f"Conjunto de grados inválido: {text!r}") from e
        if not values:
            raise SpecParseError("El conjunto de grados no puede ser vacío")
        return DegreeSet.explicit(values)
    raise SpecParseError(f"Grados desconocidos: {text!r} (full | zeroone | set:0,1,3)")


def _load(args, limits: dict):
    group = build_group(parse_group_spec(args.group), limits)
    ring = burnside_ring(group, limits)
    gset = build_gset(parse_gset_spec(args.gset), group, limits) if getattr(args, "gset", None) else None
    return group, ring, gset


def _class_index(ring, text: str) -> int:
    if text.isdigit():
        index = int(text)
        if index >= len(ring.classes):
            raise PreconditionError(f"Φ(G) tiene {len(ring.classes)} clases; no existe el índice {index}")
        return index
    return ring.classes.index_of_label(text)


def cmd_marks(args, limits: dict) -> str:
    _, ring, _ = _load(args, limits)
    if args.format == "json":
        return dumps(marks_json(ring))
    return marks_text(ring)


def cmd_decompose(args, limits: dict) -> str:
    _, ring, gset = _load(args, limits)
    element = ring.decompose(gset)
    if args.oracle and oracle_burnside_decompose(gset, limits) != element:
        raise InternalConsistencyError("La descomposición por marcas y el recuento directo no coinciden")
    if args.format == "json":
        return dumps(element_json(element))
    return f"[X] = {element}  (|X| = {element.size()})"


def cmd_colorings(args, limits: dict) -> str:
    _, ring, gset = _load(args, limits)
    degrees = parse_degrees(args.degrees)
    problem = ColoringProblem(gset, args.colors, degrees, args.truncation)
    h = _class_index(ring, args.subgroup_class)
    series = mu_series(problem, h)
    total = None
    if degrees.is_zero_one:
        total = mu_total(problem, h)
    elif args.total:
        raise PreconditionError("El total solo está definido para N = {0,1}")
    if args.oracle:
        cross_check(problem, h, limits)
    label = ring.classes[h].label

    if args.format == "json":
        return dumps(series_json(label, series, total))
    if args.total:
        return str(total)
    text = series_text(series, total)
    if args.oracle:
        text += "\noráculo: ok"
    return text


def cmd_sym_characters(args, limits: dict) -> str:
    group, _, gset = _load(args, limits)
    element = group.index_of(parse_cycles(args.element, group.degree))
    if args.exterior:
        series = exterior_character_series(gset, element, args.max_degree)
        kind = "exterior"
    else:
        series = symmetric_character_series(gset, element, args.max_degree)
        kind = "symmetric"
    if args.format == "json":
        return dumps(
            {
                "element": format_cycles(group.elements[element]),
                "kind": kind,
                "series": [str(c) for c in series.coeffs],
            }
        )
    return series_text(series)


def cmd_necklace(args, limits: dict) -> str:
    if args.beads < 1:
        raise PreconditionError("El número de cuentas debe ser positivo")
    if args.sqrt:
        value = necklace_poly(QuadraticValue.sqrt(args.colors), args.beads)
        name = f"M(√{args.colors},{args.beads})"
    else:
        value = necklace_poly(args.colors, args.beads)
        name = f"M({args.colors},{args.beads})"
    if args.format == "json":
        return dumps({"colors": args.colors, "beads": args.beads, "sqrt": args.sqrt, "value": str(value)})
    return f"{name} = {value}"


def _identity_report(args, limits: dict) -> IdentityReport:
    identity = args.identity
    if identity == "cyclotomic":
        return verify_cyclotomic_identity(args.colors, args.degree)
    if identity in ("necklace-product", "necklace-power"):
        report = IdentityReport(identity)
        for n in range(1, args.degree + 1):
            if identity == "necklace-product":
                report.checks.append(necklace_product_identity(args.colors, args.colors2, n))
            else:
                report.checks.append(necklace_power_identity(args.colors, args.copies, n))
        return report
    if identity == "dihedral":
        family = NGON_DIHEDRAL if args.family == "ngon-dihedral" else PRISM
        return dihedral_closed_forms(args.n, args.colors, family, args.divisor).checks
    if not args.group or not args.gset:
        raise PreconditionError(f"La identidad {identity} necesita --group y --gset")
    _, _, gset = _load(args, limits)
    if identity == "genem":
        return verify_product_identity(gset, args.colors, args.colors2)
    return verify_frobenius_identity(gset, args.colors, args.copies)


def cmd_verify(args, limits: dict) -> str:
    report = _identity_report(args, limits)
    text = dumps(report_json(report)) if args.format == "json" else report_text(report)
    if not report.passed:
        print(text)
        raise InternalConsistencyError(f"La identidad {report.name} no se cumple")
    return text


def cmd_config(args, limits: dict) -> str:
    settings = config.load_config()
    for assignment in args.set or []:
        key, sep, value = assignment.partition("=")
        if not sep or not value.strip().lstrip("-").isdigit():
            raise SpecParseError(f"Se esperaba CLAVE=ENTERO: {assignment!r}")
        try:
            config.set_limit(settings, key.strip(), int(value))
        except KeyError as e:
            raise SpecParseError(f"Límite desconocido: {key!r}") from e
    if args.set:
        config.save_config(settings)
        config.reload_limits()
    effective = config.get_limits(settings)
    if args.format == "json":
        return dumps(effective)
    width = max(len(label) for label in config.LIMIT_LABELS.values())
    return "\n".join(
        f"{config.LIMIT_LABELS[key].ljust(width)}  {key} = {value}" for key, value in effective.items()
    )


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default="text", help="Formato de salida")
    common.add_argument("-v", "--verbose", action="store_true", help="Registro detallado (DEBUG)")

    parser = _ArgumentParser(
        prog="burnside-marks",
        description="Tablas de marcas, coloraciones primitivas y caracteres de potencias simétricas",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Ejemplos:
    burnside-marks necklace --colors 2 --beads 6
    burnside-marks marks --group dihedral:3
    burnside-marks colorings --group dihedral:3 --gset prism --colors 2 --series
    burnside-marks verify --identity genem --group cyclic:6 --gset regular --colors 2 --colors2 3
        """,
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    p = sub.add_parser("marks", parents=[common], help="Tabla de marcas y su inversa")
    p.add_argument("--group", required=True, help="cyclic:N | dihedral:N | symmetric:N | perm:GRADO:CICLOS;...")
    p.set_defaults(handler=cmd_marks)

    p = sub.add_parser("decompose", parents=[common], help="Descomposición de un G-conjunto en B(G)")
    p.add_argument("--group", required=True)
    p.add_argument("--gset", required=True)
    p.add_argument("--oracle", action="store_true", help="Contrastar con el recuento directo de órbitas")
    p.set_defaults(handler=cmd_decompose)

    p = sub.add_parser("colorings", parents=[common], help="Series μ_{H,t} de coloraciones")
    p.add_argument("--group", required=True)
    p.add_argument("--gset", required=True)
    p.add_argument("--colors", type=int, required=True)
    p.add_argument("--degrees", default=DegreeSet.ZERO_ONE, help="full | zeroone | set:0,1,3")
    p.add_argument("--subgroup-class", default="0", help="Índice o etiqueta de la clase de Φ(G)")
    p.add_argument("--truncation", type=int, default=None, help="Grado máximo de la serie")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--series", action="store_true", help="Serie con su total (por defecto)")
    mode.add_argument("--total", action="store_true", help="Solo el total")
    p.add_argument("--oracle", action="store_true", help="Contrastar con la enumeración por fuerza bruta")
    p.set_defaults(handler=cmd_colorings)

    p = sub.add_parser("sym-characters", parents=[common], help="Caracteres de potencias simétricas y exteriores")
    p.add_argument("--group", required=True)
    p.add_argument("--gset", required=True)
    p.add_argument("--element", required=True, help="Elemento en notación de ciclos, p. ej. (0 1 2)")
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--exterior", action="store_true")
    p.set_defaults(handler=cmd_sym_characters)

    p = sub.add_parser("necklace", parents=[common], help="Polinomio de collar M(k, n)")
    p.add_argument("--colors", type=int, required=True)
    p.add_argument("--beads", type=int, required=True)
    p.add_argument("--sqrt", action="store_true", help="Evaluar en √k")
    p.set_defaults(handler=cmd_necklace)

    p = sub.add_parser("verify", parents=[common], help="Verificación de identidades")
    p.add_argument(
        "--identity",
        required=True,
        choices=["genem", "genef", "cyclotomic", "dihedral", "necklace-product", "necklace-power"],
    )
    p.add_argument("--group")
    p.add_argument("--gset")
    p.add_argument("--colors", type=int, default=2)
    p.add_argument("--colors2", type=int, default=2)
    p.add_argument("--copies", type=int, default=2, help="r en la identidad de tipo Frobenius")
    p.add_argument("--degree", type=int, default=12, help="Grado de truncamiento o n máximo")
    p.add_argument("--family", choices=["prism", "ngon-dihedral"], default="prism")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--divisor", type=int, default=None)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("config", parents=[common], help="Mostrar o modificar los límites")
    p.add_argument("--show", action="store_true")
    p.add_argument("--set", action="append", metavar="CLAVE=VALOR")
    p.set_defaults(handler=cmd_config)

    return parser


def parse_and_run(argv: list[str] | None = None) -> int:
    """Ejecuta un comando. Devuelve 0 si todo va bien, 1 ante errores de sintaxis y 2 en otro caso."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 1

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    config.reload_limits()
    limits = config.get_limits()

    try:
        text = args.handler(args, limits)
    except SpecParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except BurnsideError as e:
        logger.debug("Fallo en %s", args.command, exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return 2

    sys.stdout.write(text if text.endswith("\n") else text + "\n")
    return 0
