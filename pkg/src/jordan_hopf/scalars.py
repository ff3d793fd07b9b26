"""Exact scalar arithmetic in a prime field or in the rationals."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING, Literal

import sympy
from sympy.functions.combinatorial.numbers import stirling

if TYPE_CHECKING:
    from collections.abc import Iterator

    import numpy as np

__all__ = [
    "FieldCfg",
    "Scalar",
    "binomial",
    "raising_factorial",
    "stirling_unsigned",
]

Scalar = int | Fraction


@dataclass(frozen=True)
class FieldCfg:
    """Coefficient field of every computation.

    Attributes
    ----------
    kind: str
        Either ``"prime"`` for the field with ``p`` elements or
        ``"rational"`` for the rationals.
    p: int
        Characteristic. Zero for the rationals, an odd prime otherwise.

    """

    kind: Literal["prime", "rational"] = "prime"
    p: int = 3

    def __post_init__(self) -> None:
        if self.kind == "rational":
            object.__setattr__(self, "p", 0)
            return
        if self.kind != "prime":
            errmsg = f"Unknown field kind {self.kind!r}."
            raise ValueError(errmsg)
        if self.p < 3 or not sympy.isprime(self.p):
            errmsg = f"The characteristic must be an odd prime, got {self.p}."
            raise ValueError(errmsg)

    @classmethod
    def prime(cls, p: int) -> FieldCfg:
        return cls("prime", p)

    @classmethod
    def rational(cls) -> FieldCfg:
        return cls("rational", 0)

    @property
    def is_prime(self) -> bool:
        return self.kind == "prime"

    def label(self) -> str:
        return f"p={self.p}" if self.is_prime else "rational"

    def reduce(self, value: int | Fraction) -> Scalar:
        """Map an integer or fraction into the field.

        Raises ``ZeroDivisionError`` when a denominator vanishes modulo
        ``p``.
        """
        if not self.is_prime:
            value = Fraction(value)
            return int(value) if value.denominator == 1 else value
        if isinstance(value, Fraction):
            den = value.denominator % self.p
            if den == 0:
                errmsg = f"{value} has no image modulo {self.p}."
                raise ZeroDivisionError(errmsg)
            return value.numerator * pow(den, -1, self.p) % self.p
        return int(value) % self.p

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        return self.reduce(a + b)

    def sub(self, a: Scalar, b: Scalar) -> Scalar:
        return self.reduce(a - b)

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        return self.reduce(a * b)

    def neg(self, a: Scalar) -> Scalar:
        return self.reduce(-a)

    def inv(self, a: Scalar) -> Scalar:
        a = self.reduce(a)
        if a == 0:
            errmsg = "Division by zero in the coefficient field."
            raise ZeroDivisionError(errmsg)
        if self.is_prime:
            return pow(a, -1, self.p)
        return self.reduce(1 / Fraction(a))

    def div(self, a: Scalar, b: Scalar) -> Scalar:
        return self.mul(a, self.inv(b))

    def power(self, a: Scalar, n: int) -> Scalar:
        if n < 0:
            return self.power(self.inv(a), -n)
        if self.is_prime:
            return pow(int(self.reduce(a)), n, self.p)
        return self.reduce(Fraction(a) ** n)

    def half(self) -> Scalar:
        return self.inv(2)

    def is_zero(self, a: Scalar) -> bool:
        return self.reduce(a) == 0

    def random(self, rng: np.random.Generator, bound: int = 5) -> Scalar:
        """Draw a random field element.

        Rationals are drawn as integers in ``[-bound, bound]``.
        """
        if self.is_prime:
            return int(rng.integers(0, self.p))
        return int(rng.integers(-bound, bound + 1))

    def elements(self) -> Iterator[int]:
        if not self.is_prime:
            errmsg = "The rationals cannot be enumerated."
            raise ValueError(errmsg)
        yield from range(self.p)

    def fmt(self, a: Scalar) -> str:
        """Render with the symmetric representative in a prime field."""
        a = self.reduce(a)
        if self.is_prime and a > self.p // 2:
            a -= self.p
        return str(a)


def binomial(n: int, k: int, cfg: FieldCfg) -> Scalar:
    if k < 0 or k > n:
        return 0
    return cfg.reduce(int(sympy.binomial(n, k)))


def raising_factorial(t: Scalar, k: int, cfg: FieldCfg) -> Scalar:
    """Return ``t (t + 1) ... (t + k - 1)`` with the empty product 1."""
    out: Scalar = cfg.reduce(1)
    for i in range(k):
        out = cfg.mul(out, cfg.add(t, i))
    return out


def stirling_unsigned(n: int, k: int) -> int:
    """Unsigned Stirling numbers of the first kind."""
    if k < 0 or k > n:
        return 0
    return int(stirling(n, k, kind=1, signed=False))
