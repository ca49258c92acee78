#!/usr/bin/env python3
"""
burnside-marks
Tablas de marcas del anillo de Burnside, coloraciones primitivas y caracteres
de potencias simétricas con aritmética exacta.

Uso:
    python -m burnside_marks <comando> [opciones]

Ejemplo:
    python -m burnside_marks necklace --colors 2 --beads 6
"""

import sys

from burnside_marks.cli import parse_and_run


def main():
    """Punto de entrada principal."""
    sys.exit(parse_and_run(sys.argv[1:]))


if __name__ == "__main__":
    main()
