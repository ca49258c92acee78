"""Formato de texto y JSON para la CLI."""

import json

from burnside_marks.burnside import BurnsideElement, BurnsideRing
from burnside_marks.models import IdentityReport
from burnside_marks.series import RationalSeries


def format_value(value) -> str:
    """Racionales exactos como 'p/q'; nunca coma flotante."""
    return str(value)


def format_matrix(rows: list[list], headers: list[str]) -> str:
    """Tabla alineada; la primera columna son las etiquetas de fila."""
    cells = [headers] + [[format_value(v) for v in row] for row in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(headers))]
    lines = []
    for row in cells:
        first = row[0].ljust(widths[0])
        rest = [cell.rjust(width) for cell, width in zip(row[1:], widths[1:])]
        lines.append("  ".join([first] + rest).rstrip())
    return "\n".join(lines)


def marks_text(ring: BurnsideRing) -> str:
    labels = ring.classes.labels
    headers = [""] + labels
    marks = [[label] + list(row) for label, row in zip(labels, ring.marks.entries)]
    inverse = [[label] + list(row) for label, row in zip(labels, ring.inverse.entries)]
    orders = ", ".join(f"{cls.label} (orden {cls.order}, {len(cls.conjugates)} conjugados)" for cls in ring.classes)
    return "\n".join(
        [
            f"Grupo {ring.group!r}, orden {ring.group.order}",
            f"Clases: {orders}",
            "",
            "Tabla de marcas φ_V(G/W):",
            format_matrix(marks, headers),
            "",
            "Inversa a_{H,V}:",
            format_matrix(inverse, headers),
        ]
    )


def marks_json(ring: BurnsideRing) -> dict:
    return {
        "classes": ring.classes.labels,
        "marks": [list(row) for row in ring.marks.entries],
        "inverse": [[format_value(a) for a in row] for row in ring.inverse.entries],
    }


def element_json(element: BurnsideElement) -> dict:
    return {
        "classes": element.classes.labels,
        "coeffs": list(element.coeffs),
        "size": element.size(),
    }


def series_text(series: RationalSeries, total: int | None = None) -> str:
    text = series.format_polynomial()
    if total is not None:
        text += f" (total {total})"
    return text


def series_json(label: str, series: RationalSeries, total: int | None = None) -> dict:
    return {"class": label, "series": [format_value(c) for c in series.coeffs], "total": total}


def report_text(report: IdentityReport) -> str:
    lines = [f"Identidad {report.name}:"]
    width = max((len(check.label) for check in report.checks), default=0)
    for check in report.checks:
        status = "ok" if check.ok else "FALLA"
        lines.append(f"  {check.label.ljust(width)}  {format_value(check.lhs)} = {format_value(check.rhs)}  {status}")
    lines.append("Resultado: " + ("ok" if report.passed else "FALLA"))
    return "\n".join(lines)


def report_json(report: IdentityReport) -> dict:
    return {
        "identity": report.name,
        "passed": report.passed,
        "checks": [
            {"label": c.label, "lhs": format_value(c.lhs), "rhs": format_value(c.rhs), "ok": c.ok}
            for c in report.checks
        ],
    }


def dumps(obj) -> str:
    """JSON estable: orden de claves de inserción, sangría de dos espacios y salto final."""
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"
