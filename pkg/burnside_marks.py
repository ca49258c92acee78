#!/usr/bin/env python3
"""
burnside-marks
Tablas de marcas del anillo de Burnside, coloraciones primitivas y caracteres
de potencias simétricas con aritmética exacta.

Uso:
    python burnside_marks.py <comando> [opciones]
"""

from burnside_marks.__main__ import main

if __name__ == "__main__":
    main()
