"""Series formales truncadas con coeficientes racionales exactos y aritmética de collares."""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction

from sympy import divisors as _divisors
from sympy import factorint
from sympy import mobius as _mobius

from burnside_marks.errors import InternalConsistencyError, PreconditionError

logger = logging.getLogger(__name__)


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise PreconditionError(f"Coeficiente no exacto: {value!r}")


@dataclass(frozen=True)
class RationalSeries:
    """Serie Σ coeffs[n]·tⁿ truncada en el grado len(coeffs) - 1.

    Las operaciones entre series de distinto truncamiento truncan al menor.
    """

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise PreconditionError("Una serie necesita al menos el término constante")
        object.__setattr__(self, "coeffs", tuple(_as_fraction(c) for c in self.coeffs))

    # Constructores

    @classmethod
    def from_coefficients(cls, values, truncation: int) -> "RationalSeries":
        values = list(values)[: truncation + 1]
        return cls(tuple(values) + (Fraction(0),) * (truncation + 1 - len(values)))

    @classmethod
    def zero(cls, truncation: int) -> "RationalSeries":
        return cls.from_coefficients([], truncation)

    @classmethod
    def one(cls, truncation: int) -> "RationalSeries":
        return cls.from_coefficients([1], truncation)

    @classmethod
    def monomial(cls, coefficient, degree: int, truncation: int) -> "RationalSeries":
        values = [0] * (truncation + 1)
        if degree <= truncation:
            values[degree] = coefficient
        return cls(tuple(values))

    @classmethod
    def from_polynomial(cls, terms: dict[int, int | Fraction], truncation: int) -> "RationalSeries":
        """Polinomio dado como {grado: coeficiente}; los grados por encima del truncamiento se descartan."""
        values = [Fraction(0)] * (truncation + 1)
        for degree, coefficient in terms.items():
            if degree < 0:
                raise PreconditionError("Grado negativo en un polinomio")
            if degree <= truncation:
                values[degree] += _as_fraction(coefficient)
        return cls(tuple(values))

    @classmethod
    def geometric(cls, ratio, step: int, truncation: int) -> "RationalSeries":
        """1 / (1 - ratio·t^step)."""
        if step < 1:
            raise PreconditionError("El paso de una serie geométrica debe ser positivo")
        ratio = _as_fraction(ratio)
        values = [Fraction(0)] * (truncation + 1)
        power = Fraction(1)
        for degree in range(0, truncation + 1, step):
            values[degree] = power
            power *= ratio
        return cls(tuple(values))

    @classmethod
    def binomial_power(cls, coefficient, step: int, exponent: int, truncation: int) -> "RationalSeries":
        """(1 + coefficient·t^step)^exponent con exponente entero no negativo."""
        if exponent < 0:
            raise PreconditionError("binomial_power requiere exponente no negativo")
        if step < 1:
            raise PreconditionError("El paso debe ser positivo")
        coefficient = _as_fraction(coefficient)
        values = [Fraction(0)] * (truncation + 1)
        for j in range(exponent + 1):
            if j * step > truncation:
                break
            values[j * step] = math.comb(exponent, j) * coefficient**j
        return cls(tuple(values))

    # Acceso

    @property
    def truncation(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, degree: int) -> Fraction:
        if 0 <= degree <= self.truncation:
            return self.coeffs[degree]
        return Fraction(0)

    def truncate(self, truncation: int) -> "RationalSeries":
        return RationalSeries.from_coefficients(self.coeffs, truncation)

    def degree(self) -> int:
        """Mayor grado con coeficiente no nulo, -1 para la serie nula."""
        for n in range(self.truncation, -1, -1):
            if self.coeffs[n]:
                return n
        return -1

    # Aritmética

    def _coerce(self, other) -> "RationalSeries":
        if isinstance(other, RationalSeries):
            return other
        return RationalSeries.monomial(_as_fraction(other), 0, self.truncation)

    def __add__(self, other) -> "RationalSeries":
        other = self._coerce(other)
        n = min(self.truncation, other.truncation)
        return RationalSeries(tuple(self.coeffs[i] + other.coeffs[i] for i in range(n + 1)))

    __radd__ = __add__

    def __neg__(self) -> "RationalSeries":
        return RationalSeries(tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "RationalSeries":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "RationalSeries":
        return self._coerce(other) - self

    def scale(self, factor) -> "RationalSeries":
        factor = _as_fraction(factor)
        return RationalSeries(tuple(c * factor for c in self.coeffs))

    def __mul__(self, other) -> "RationalSeries":
        if not isinstance(other, RationalSeries):
            return self.scale(other)
        n = min(self.truncation, other.truncation)
        values = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            a = self.coeffs[i]
            if not a:
                continue
            for j in range(n + 1 - i):
                b = other.coeffs[j]
                if b:
                    values[i + j] += a * b
        return RationalSeries(tuple(values))

    def __rmul__(self, other) -> "RationalSeries":
        return self.scale(other)

    def __pow__(self, exponent: int) -> "RationalSeries":
        if exponent < 0:
            return self.reciprocal() ** (-exponent)
        result = RationalSeries.one(self.truncation)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def reciprocal(self) -> "RationalSeries":
        """Inversa multiplicativa; requiere término constante no nulo."""
        c0 = self.coeffs[0]
        if not c0:
            raise PreconditionError("La serie no es invertible: término constante nulo")
        values = [Fraction(0)] * (self.truncation + 1)
        values[0] = 1 / c0
        for n in range(1, self.truncation + 1):
            acc = sum((self.coeffs[i] * values[n - i] for i in range(1, n + 1)), Fraction(0))
            values[n] = -acc / c0
        return RationalSeries(tuple(values))

    def substitute_neg(self) -> "RationalSeries":
        """f(-t)."""
        return RationalSeries(tuple(c if n % 2 == 0 else -c for n, c in enumerate(self.coeffs)))

    def shift(self, k: int) -> "RationalSeries":
        """t^k · f(t), conservando el truncamiento."""
        if k < 0:
            raise PreconditionError("Desplazamiento negativo")
        return RationalSeries.from_coefficients([0] * k + list(self.coeffs), self.truncation)

    # Evaluación

    def evaluate_at_one(self) -> Fraction:
        return sum(self.coeffs, Fraction(0))

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def integer_coeffs(self) -> list[int]:
        if not self.is_integral():
            raise InternalConsistencyError(f"La serie tiene coeficientes no enteros: {self.format_polynomial()}")
        return [int(c) for c in self.coeffs]

    # Formato

    def format_polynomial(self, variable: str = "t") -> str:
        """Texto en grado ascendente: 't + 2t^2 + 3t^3'."""
        parts: list[str] = []
        for n, c in enumerate(self.coeffs):
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            magnitude = abs(c)
            if n == 0:
                body = str(magnitude)
            else:
                power = variable if n == 1 else f"{variable}^{n}"
                if magnitude == 1:
                    body = power
                elif magnitude.denominator == 1:
                    body = f"{magnitude}{power}"
                else:
                    body = f"({magnitude}){power}"
            if not parts:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts) if parts else "0"

    def __str__(self) -> str:
        return self.format_polynomial()

    def to_json(self) -> dict:
        return {"truncation": self.truncation, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "RationalSeries":
        try:
            return cls.from_coefficients([Fraction(c) for c in data["coeffs"]], int(data["truncation"]))
        except (KeyError, TypeError, ValueError) as e:
            raise PreconditionError(f"Serie JSON inválida: {e}") from e


def _square_part(n: int) -> tuple[int, int]:
    """n = outside² · inside con inside libre de cuadrados."""
    outside, inside = 1, 1
    for prime, exp in factorint(n).items():
        outside *= prime ** (exp // 2)
        inside *= prime ** (exp % 2)
    return outside, inside


@dataclass(frozen=True)
class QuadraticValue:
    """rational + surd·√radicand, con radicand libre de cuadrados."""

    rational: Fraction
    surd: Fraction = Fraction(0)
    radicand: int = 1

    def __post_init__(self):
        if self.radicand < 1:
            raise PreconditionError("El radicando debe ser un entero positivo")
        rational, surd = _as_fraction(self.rational), _as_fraction(self.surd)
        outside, inside = _square_part(self.radicand)
        surd *= outside
        if inside == 1:
            rational, surd = rational + surd, Fraction(0)
        if not surd:
            inside = 1
        object.__setattr__(self, "rational", rational)
        object.__setattr__(self, "surd", surd)
        object.__setattr__(self, "radicand", inside)

    @classmethod
    def sqrt(cls, k: int) -> "QuadraticValue":
        return cls(Fraction(0), Fraction(1), k)

    def _coerce(self, other) -> "QuadraticValue":
        if isinstance(other, QuadraticValue):
            return other
        return QuadraticValue(_as_fraction(other))

    def _common_radicand(self, other: "QuadraticValue") -> int:
        if self.radicand == 1:
            return other.radicand
        if other.radicand == 1 or other.radicand == self.radicand:
            return self.radicand
        raise PreconditionError(f"Radicandos incompatibles: √{self.radicand} y √{other.radicand}")

    def __add__(self, other) -> "QuadraticValue":
        other = self._coerce(other)
        k = self._common_radicand(other)
        return QuadraticValue(self.rational + other.rational, self.surd + other.surd, k)

    __radd__ = __add__

    def __neg__(self) -> "QuadraticValue":
        return QuadraticValue(-self.rational, -self.surd, self.radicand)

    def __sub__(self, other) -> "QuadraticValue":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "QuadraticValue":
        return self._coerce(other) - self

    def __mul__(self, other) -> "QuadraticValue":
        other = self._coerce(other)
        k = self._common_radicand(other)
        # (a + b√k)(c + d√k) = (ac + bdk) + (ad + bc)√k
        return QuadraticValue(
            self.rational * other.rational + self.surd * other.surd * k,
            self.rational * other.surd + self.surd * other.rational,
            k,
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> "QuadraticValue":
        if isinstance(other, QuadraticValue):
            if other.surd:
                raise PreconditionError("Solo se admite dividir por un racional")
            other = other.rational
        divisor = _as_fraction(other)
        return QuadraticValue(self.rational / divisor, self.surd / divisor, self.radicand)

    def __pow__(self, exponent: int) -> "QuadraticValue":
        if exponent < 0:
            raise PreconditionError("Exponente negativo")
        result = QuadraticValue(Fraction(1))
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return not self.surd and self.rational == other
        if isinstance(other, QuadraticValue):
            return (self.rational, self.surd, self.radicand) == (other.rational, other.surd, other.radicand)
        return NotImplemented

    def __hash__(self) -> int:
        if not self.surd:
            return hash(self.rational)
        return hash((self.rational, self.surd, self.radicand))

    def is_integer(self) -> bool:
        return not self.surd and self.rational.denominator == 1

    def to_integer(self) -> int:
        if not self.is_integer():
            raise InternalConsistencyError(f"{self} no es un entero")
        return int(self.rational)

    def __float__(self) -> float:
        return float(self.rational) + float(self.surd) * math.sqrt(self.radicand)

    def __str__(self) -> str:
        if not self.surd:
            return str(self.rational)
        surd = f"{self.surd}·√{self.radicand}"
        if not self.rational:
            return surd
        return f"{self.rational} + {surd}"


def mobius(n: int) -> int:
    if n < 1:
        raise PreconditionError("mobius requiere n >= 1")
    return int(_mobius(n))


def divisors(n: int) -> list[int]:
    if n < 1:
        raise PreconditionError("divisors requiere n >= 1")
    return [int(d) for d in _divisors(n)]


def gcd(i: int, j: int) -> int:
    return math.gcd(i, j)


def lcm(i: int, j: int) -> int:
    if i == 0 or j == 0:
        raise PreconditionError("lcm requiere enteros no nulos")
    return math.lcm(i, j)


def necklace_poly(k, n: int):
    """M(k, n) = (1/n) Σ_{d|n} μ(n/d) k^d.

    Para k entero devuelve int; para QuadraticValue o Fraction devuelve el mismo tipo.
    """
    if n < 1:
        raise PreconditionError("necklace_poly requiere n >= 1")
    if isinstance(k, QuadraticValue):
        total = QuadraticValue(Fraction(0))
        for d in divisors(n):
            total = total + (k**d) * mobius(n // d)
        return total / n
    total = sum(mobius(n // d) * _as_fraction(k) ** d for d in divisors(n))
    value = total / n
    if isinstance(k, int):
        if value.denominator != 1:
            raise InternalConsistencyError(f"M({k},{n}) no es entero")
        return int(value)
    return value


def mobius_inversion(b: dict[int, object]) -> dict[int, object]:
    """Devuelve a con b_n = Σ_{d|n} a_d sobre los divisores de la mayor clave."""
    if not b:
        raise PreconditionError("mobius_inversion necesita al menos un valor")
    top = max(b)
    missing = [d for d in divisors(top) if d not in b]
    if missing:
        raise PreconditionError(f"Faltan divisores de {top}: {missing}")
    result = {}
    for m in divisors(top):
        result[m] = sum((mobius(m // d) * b[d] for d in divisors(m)), 0)
    return result


def cyclotomic_product(k: int, truncation: int) -> RationalSeries:
    """Π_{n≥1} (1/(1-tⁿ))^{M(k,n)} truncado."""
    result = RationalSeries.one(truncation)
    for n in range(1, truncation + 1):
        exponent = necklace_poly(k, n)
        if exponent:
            result = result * RationalSeries.geometric(1, n, truncation) ** exponent
    return result
