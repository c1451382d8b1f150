"""Exact coefficient fields: the rationals and prime fields F_p.

Scalars are plain values supporting +, -, *, /, ==, and truthiness
(nonzero test): Fraction for the rationals, ModInt for F_p.  Element code
never needs to know which field it is working over.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import PathAlgError


@dataclass(frozen=True)
class ModInt:
    value: int
    modulus: int

    def __post_init__(self):
        object.__setattr__(self, "value", self.value % self.modulus)

    def _coerce(self, other) -> "ModInt":
        if isinstance(other, ModInt):
            if other.modulus != self.modulus:
                raise PathAlgError("mixed moduli")
            return other
        if isinstance(other, int):
            return ModInt(other, self.modulus)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        other = self._coerce(other)
        return ModInt(self.value + other.value, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return ModInt(self.value - other.value, self.modulus)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return ModInt(-self.value, self.modulus)

    def __mul__(self, other):
        other = self._coerce(other)
        return ModInt(self.value * other.value, self.modulus)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if not other:
            raise ZeroDivisionError("division by zero in F_p")
        return self * ModInt(pow(other.value, -1, other.modulus), self.modulus)

    def __bool__(self):
        return self.value != 0

    def __str__(self):
        return str(self.value)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class Field:
    """Descriptor for the coefficient field; char 0 means the rationals."""

    characteristic: int = 0

    def __post_init__(self):
        if self.characteristic and not _is_prime(self.characteristic):
            raise PathAlgError(f"{self.characteristic} is not prime")

    @property
    def name(self) -> str:
        return "Q" if self.characteristic == 0 else f"F{self.characteristic}"

    @property
    def zero(self):
        return Fraction(0) if self.characteristic == 0 else ModInt(0, self.characteristic)

    @property
    def one(self):
        return Fraction(1) if self.characteristic == 0 else ModInt(1, self.characteristic)

    def of(self, value) -> object:
        """Coerce an int, Fraction, or 'p/q' string into a scalar."""
        if isinstance(value, str):
            if "/" in value:
                num, den = value.split("/", 1)
                value = Fraction(int(num), int(den))
            else:
                value = int(value)
        if self.characteristic == 0:
            return Fraction(value)
        if isinstance(value, Fraction):
            return ModInt(value.numerator, self.characteristic) / ModInt(value.denominator, self.characteristic)
        return ModInt(value, self.characteristic)


RATIONALS = Field(0)
