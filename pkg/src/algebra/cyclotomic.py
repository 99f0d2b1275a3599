"""Exact values in Q(zeta_p), the home of additive-character sums."""

import cmath
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Literal

import numpy as np

from utils.helpers import FieldError

CycloOp = Literal["add", "mul", "reduce", "is_zero", "to_complex"]


def _normalize(value: Rational) -> int | Fraction:
    if isinstance(value, Fraction) and value.denominator == 1:
        return int(value.numerator)
    return value  # type: ignore[return-value]


@dataclass(frozen=True, eq=False)
class CyclotomicInteger:
    """The value sum(coeffs[i] * zeta_p**i) with zeta_p = exp(2*pi*i/p).

    Coefficients are integers for character sums; function tables scaled by a
    rational parameter carry Fraction coefficients. Equality and hashing go
    through the canonical form, in which the coefficient of zeta_p**(p-1) is 0.
    """

    p: int
    coeffs: tuple[int | Fraction, ...]

    def __post_init__(self):
        if self.p < 2:
            raise FieldError(f"cyclotomic order must be at least 2, got {self.p}")
        if len(self.coeffs) != self.p:
            raise FieldError(f"expected {self.p} coefficients, got {len(self.coeffs)}")

    @classmethod
    def zero(cls, p: int) -> "CyclotomicInteger":
        return cls(p, (0,) * p)

    @classmethod
    def one(cls, p: int) -> "CyclotomicInteger":
        return cls.from_rational(p, 1)

    @classmethod
    def from_rational(cls, p: int, value: Rational) -> "CyclotomicInteger":
        return cls(p, (_normalize(value),) + (0,) * (p - 1))

    @classmethod
    def root_power(cls, p: int, k: int) -> "CyclotomicInteger":
        """Return zeta_p**k."""
        coeffs = [0] * p
        coeffs[k % p] = 1
        return cls(p, tuple(coeffs))

    def reduce(self) -> "CyclotomicInteger":
        """Canonical form via zeta**(p-1) = -(1 + zeta + ... + zeta**(p-2))."""
        top = self.coeffs[-1]
        if top == 0:
            return self
        reduced = tuple(_normalize(c - top) for c in self.coeffs[:-1]) + (0,)
        return CyclotomicInteger(self.p, reduced)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.reduce().coeffs)

    def as_rational(self) -> Fraction | None:
        """The value as a rational number, or None when it is irrational."""
        canon = self.reduce().coeffs
        if any(c != 0 for c in canon[1:]):
            return None
        return Fraction(canon[0])

    def to_complex(self) -> complex:
        """Floating-point value, for display only."""
        zeta = cmath.exp(2j * cmath.pi / self.p)
        return sum((complex(float(c)) * zeta**i for i, c in enumerate(self.coeffs)), 0j)

    def _check_same(self, other: "CyclotomicInteger") -> None:
        if other.p != self.p:
            raise FieldError(f"mixed cyclotomic orders {self.p} and {other.p}")

    def __add__(self, other: object) -> "CyclotomicInteger":
        if isinstance(other, Rational):
            other = CyclotomicInteger.from_rational(self.p, other)
        if not isinstance(other, CyclotomicInteger):
            return NotImplemented
        self._check_same(other)
        return CyclotomicInteger(
            self.p, tuple(_normalize(a + b) for a, b in zip(self.coeffs, other.coeffs))
        )

    __radd__ = __add__

    def __neg__(self) -> "CyclotomicInteger":
        return CyclotomicInteger(self.p, tuple(-c for c in self.coeffs))

    def __sub__(self, other: object) -> "CyclotomicInteger":
        if isinstance(other, Rational):
            other = CyclotomicInteger.from_rational(self.p, other)
        if not isinstance(other, CyclotomicInteger):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: object) -> "CyclotomicInteger":
        if isinstance(other, Rational):
            return CyclotomicInteger(self.p, tuple(_normalize(c * other) for c in self.coeffs))
        if not isinstance(other, CyclotomicInteger):
            return NotImplemented
        self._check_same(other)
        out: list[int | Fraction] = [0] * self.p
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[(i + j) % self.p] += a * b
        return CyclotomicInteger(self.p, tuple(_normalize(c) for c in out))

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Rational):
            other = CyclotomicInteger.from_rational(self.p, other)
        if not isinstance(other, CyclotomicInteger):
            return NotImplemented
        return self.p == other.p and (self - other).is_zero()

    def __hash__(self) -> int:
        return hash((self.p, tuple(Fraction(c) for c in self.reduce().coeffs)))

    def __str__(self) -> str:
        canon = self.reduce().coeffs
        terms = []
        for i, c in enumerate(canon):
            if c == 0:
                continue
            base = "" if i == 0 else ("z" if i == 1 else f"z^{i}")
            if i == 0:
                terms.append(str(c))
            elif c == 1:
                terms.append(base)
            else:
                terms.append(f"({c})*{base}")
        body = " + ".join(terms) if terms else "0"
        if any(canon[1:]):
            return f"{body} (z = zeta_{self.p})"
        return body


def canonical_rows(rows: np.ndarray) -> np.ndarray:
    """Canonicalize an (N, p) array of coefficient rows, one value per row."""
    shifted = rows[:, :-1] - rows[:, -1:]
    return np.concatenate([shifted, np.zeros_like(rows[:, -1:])], axis=1)


def cyclo_arith(
    op: CycloOp, x: CyclotomicInteger, y: CyclotomicInteger | None = None
) -> CyclotomicInteger | bool | tuple[float, float]:
    """Dispatch one cyclotomic operation by name.

    Raises:
        FieldError: If the operands have different orders or ``y`` is missing.
    """
    if op in ("add", "mul"):
        if y is None:
            raise FieldError(f"{op} needs two operands")
        x._check_same(y)
        return x + y if op == "add" else x * y
    if op == "reduce":
        return x.reduce()
    if op == "is_zero":
        return x.is_zero()
    if op == "to_complex":
        value = x.to_complex()
        return (value.real, value.imag)
    raise FieldError(f"unknown cyclotomic operation: {op}")
