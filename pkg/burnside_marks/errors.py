"""Excepciones de burnside-marks."""


class BurnsideError(Exception):
    """Error base de la librería."""


class SpecParseError(BurnsideError):
    """Cadena de especificación o notación de ciclos mal formada."""


class PreconditionError(BurnsideError, ValueError):
    """Argumento fuera del dominio de la operación."""


class GroupMismatchError(PreconditionError):
    """Los operandos están definidos sobre grupos distintos."""


class ResourceLimitError(BurnsideError):
    """Se superó una cota configurada."""


class InternalConsistencyError(BurnsideError):
    """Falló una comprobación que siempre debe cumplirse."""


class OracleMismatchError(InternalConsistencyError):
    """La fórmula cerrada y el oráculo de fuerza bruta no coinciden."""
