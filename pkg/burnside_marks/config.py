"""Configuración de límites y cotas para los cálculos de burnside-marks."""

import json
import logging
import os
from functools import lru_cache
from pathlib import Path

logger = logging.getLogger(__name__)

# Archivo de configuración
CONFIG_FILE = Path.home() / ".burnside_marks_config.json"

# Variable de entorno que sobreescribe la cota de orden de grupo
MAX_ORDER_ENV = "BURNSIDE_MAX_ORDER"

# Límites por defecto
DEFAULT_LIMITS = {
    "max_closure_order": 100000,  # Orden máximo al cerrar generadores
    "max_group_order": 200,  # Orden máximo para enumerar subgrupos
    "max_symmetric_degree": 8,  # Grado máximo de S_n
    "dense_table_order": 512,  # Hasta este orden se guarda la tabla de multiplicar completa
    "action_check_pairs": 10**6,  # Pares (g, x) verificados al construir un G-conjunto
    "max_oracle_colorings": 2_000_000,  # k^|X| máximo para el oráculo
    "max_symmetric_power_points": 200_000,  # Tamaño máximo de S^n(X) en el oráculo
    "default_truncation": 24,  # Grado de truncamiento para series infinitas
}

# Nombres descriptivos para la CLI
LIMIT_LABELS = {
    "max_closure_order": "Orden máximo de la clausura de generadores",
    "max_group_order": "Orden máximo para enumerar subgrupos",
    "max_symmetric_degree": "Grado máximo del grupo simétrico",
    "dense_table_order": "Orden máximo con tabla de multiplicar densa",
    "action_check_pairs": "Pares verificados de los axiomas de acción",
    "max_oracle_colorings": "Coloraciones máximas del oráculo",
    "max_symmetric_power_points": "Puntos máximos de una potencia simétrica",
    "default_truncation": "Grado de truncamiento por defecto",
}


def load_config() -> dict:
    """Carga la configuración desde el archivo."""
    if CONFIG_FILE.exists():
        try:
            return json.loads(CONFIG_FILE.read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError):
            logger.warning("Configuración ilegible en %s, se usan los valores por defecto", CONFIG_FILE)
    return {}


def save_config(config: dict):
    """Guarda la configuración en el archivo."""
    try:
        CONFIG_FILE.write_text(json.dumps(config, indent=2), encoding="utf-8")
    except OSError as e:
        logger.error("Error guardando configuración: %s", e)
        raise


def get_limits(config: dict | None = None) -> dict:
    """Obtiene los límites de la configuración o usa los valores por defecto.

    Las claves desconocidas o con valores no enteros se ignoran. La variable
    de entorno BURNSIDE_MAX_ORDER tiene prioridad sobre el archivo.
    """
    if config is None:
        config = load_config()
    limits = DEFAULT_LIMITS.copy()
    for key, value in config.get("limits", {}).items():
        if key in limits and isinstance(value, int) and not isinstance(value, bool):
            limits[key] = value

    env_value = os.environ.get(MAX_ORDER_ENV)
    if env_value:
        try:
            limits["max_group_order"] = int(env_value)
        except ValueError:
            logger.warning("%s=%r no es un entero, se ignora", MAX_ORDER_ENV, env_value)
    return limits


def set_limit(config: dict, key: str, value: int):
    """Establece un límite en la configuración."""
    if key not in DEFAULT_LIMITS:
        raise KeyError(key)
    config.setdefault("limits", {})[key] = value


@lru_cache(maxsize=1)
def _cached_limits() -> tuple[tuple[str, int], ...]:
    return tuple(get_limits().items())


def default_limits() -> dict:
    """Límites efectivos del proceso, leídos una sola vez."""
    return dict(_cached_limits())


def resolve_limits(limits: dict | None) -> dict:
    """Completa un diccionario parcial de límites con los valores efectivos."""
    resolved = default_limits()
    if limits:
        resolved.update(limits)
    return resolved


def reload_limits():
    """Descarta los límites memorizados para releer archivo y entorno."""
    _cached_limits.cache_clear()
