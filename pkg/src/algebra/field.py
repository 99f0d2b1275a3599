"""Finite fields F_q, traces and the canonical additive character.

Fields are galois ``FieldArray`` classes. Elements are galois scalars whose
integer label is the polynomial-basis encoding sum(c_i * p**i).
"""

from dataclasses import dataclass
from functools import cache, cached_property
from typing import Literal

import galois
import numpy as np

from algebra.cyclotomic import CyclotomicInteger
from utils.helpers import FieldError

FieldOp = Literal["add", "mul", "neg", "inv"]
FieldElement = galois.FieldArray

MAX_FIELD_SIZE = 2**20

# Ascending coefficients c_0..c_e of the default modulus per extension field.
MODULUS_TABLE: dict[int, tuple[int, ...]] = {
    4: (1, 1, 1),
    8: (1, 1, 0, 1),
    9: (1, 0, 1),
    16: (1, 1, 0, 0, 1),
    25: (2, 0, 1),
    27: (1, 2, 0, 1),
}


@cache
def _galois_field(p: int, e: int, modulus: tuple[int, ...] | None) -> type[galois.FieldArray]:
    if e == 1:
        return galois.GF(p)
    poly = galois.Poly(list(reversed(modulus or ())), field=galois.GF(p))
    return galois.GF(p**e, irreducible_poly=poly)


@dataclass(frozen=True)
class FieldSpec:
    """The finite field F_q with q = p**e.

    ``modulus`` lists the ascending coefficients of the monic irreducible
    polynomial defining F_q over F_p; it is None for prime fields.
    """

    p: int
    e: int
    modulus: tuple[int, ...] | None = None

    @property
    def q(self) -> int:
        return self.p**self.e

    @cached_property
    def gf(self) -> type[galois.FieldArray]:
        return _galois_field(self.p, self.e, self.modulus)

    @property
    def zero(self) -> FieldElement:
        return self.gf(0)

    @property
    def one(self) -> FieldElement:
        return self.gf(1)

    def element(self, label: int) -> FieldElement:
        """Element with the given polynomial-basis label.

        Raises:
            FieldError: If the label is outside [0, q).
        """
        if not 0 <= label < self.q:
            raise FieldError(f"label {label} outside F_{self.q}")
        return self.gf(label)

    def from_coeffs(self, coeffs: list[int] | tuple[int, ...]) -> FieldElement:
        """Element c_0 + c_1*a + ... from residues mod p."""
        if len(coeffs) != self.e or any(not 0 <= c < self.p for c in coeffs):
            raise FieldError(f"need {self.e} residues mod {self.p}, got {list(coeffs)}")
        return self.gf(sum(c * self.p**i for i, c in enumerate(coeffs)))

    def coeffs(self, a: FieldElement) -> tuple[int, ...]:
        """Residues c_0..c_{e-1} of an element in the polynomial basis."""
        label = int(a)
        out = []
        for _ in range(self.e):
            label, digit = divmod(label, self.p)
            out.append(digit)
        return tuple(out)

    def array(self, entries) -> galois.FieldArray:
        """Field array from integer labels."""
        values = np.asarray(entries, dtype=np.int64)
        if values.size and (values.min() < 0 or values.max() >= self.q):
            raise FieldError(f"entries must be labels in [0, {self.q})")
        return self.gf(values)

    def __str__(self) -> str:
        return f"F_{self.q}"


def labels(array: galois.FieldArray) -> np.ndarray:
    """Integer labels of a field array as a plain int64 ndarray."""
    return array.view(np.ndarray).astype(np.int64)


def _is_int(value) -> bool:
    return isinstance(value, (int, np.integer)) and not isinstance(value, bool)


def field_make(q: int, modulus: list[int] | tuple[int, ...] | None = None) -> FieldSpec:
    """Build F_q.

    Args:
        q: Field size, a prime power.
        modulus: Ascending coefficients of an irreducible polynomial of degree e
            over F_p. Defaults to the built-in table for extension fields.

    Returns:
        The field description.

    Raises:
        FieldError: If q is not a prime power, is too large, or the modulus is
            missing, malformed or reducible.
    """
    if not _is_int(q) or q < 2:
        raise FieldError(f"q={q!r} is not a prime power")
    if q > MAX_FIELD_SIZE:
        raise FieldError(f"q={q} exceeds the supported maximum {MAX_FIELD_SIZE}")
    if not galois.is_prime_power(int(q)):
        raise FieldError(f"q={q} is not a prime power")

    if modulus is not None and (
        not isinstance(modulus, (list, tuple)) or not all(_is_int(c) for c in modulus)
    ):
        raise FieldError(f"modulus must be a list of integer coefficients, got {modulus!r}")
    q = int(q)

    primes, exponents = galois.factors(q)
    p, e = int(primes[0]), int(exponents[0])

    if e == 1:
        if modulus is not None and len(modulus) > 2:
            raise FieldError(f"prime field F_{q} takes no modulus of degree > 1")
        return FieldSpec(p, 1, None)

    if modulus is None:
        if q not in MODULUS_TABLE:
            raise FieldError(f"no built-in modulus for q={q}")
        return FieldSpec(p, e, MODULUS_TABLE[q])

    coeffs = tuple(int(c) for c in modulus)
    if len(coeffs) != e + 1:
        raise FieldError(f"modulus for F_{q} must have degree {e}, got {len(coeffs) - 1}")
    if any(not 0 <= c < p for c in coeffs):
        raise FieldError(f"modulus coefficients must be residues mod {p}")
    if coeffs[-1] != 1:
        raise FieldError("modulus must be monic")
    if not galois.Poly(list(reversed(coeffs)), field=galois.GF(p)).is_irreducible():
        raise FieldError(f"modulus {list(coeffs)} is reducible over F_{p}")
    return FieldSpec(p, e, coeffs)


def field_arith(op: FieldOp, a: FieldElement, b: FieldElement | None = None) -> FieldElement:
    """Apply one field operation by name.

    Raises:
        FieldError: On mixed fields, a missing operand, or inv(0).
    """
    if op in ("add", "mul"):
        if b is None:
            raise FieldError(f"{op} needs two operands")
        if type(a) is not type(b):
            raise FieldError("operands belong to different fields")
        return a + b if op == "add" else a * b
    if op == "neg":
        return -a
    if op == "inv":
        if int(a) == 0:
            raise FieldError("zero has no multiplicative inverse")
        return a**-1
    raise FieldError(f"unknown field operation: {op}")


def trace_to_prime(a: FieldElement) -> int:
    """Absolute trace Tr(a) = a + a**p + ... + a**(p**(e-1)) as a residue mod p."""
    return int(a.field_trace())


def trace_table(spec: FieldSpec) -> np.ndarray:
    """Trace of every element, indexed by label."""
    return labels(spec.gf.elements.field_trace())


def trace_form_table(spec: FieldSpec) -> np.ndarray:
    """q x q table of Tr(a*b), indexed by labels."""
    elements = spec.gf.elements
    products = elements[:, np.newaxis] * elements[np.newaxis, :]
    return labels(products.field_trace())


def additive_character(a: FieldElement) -> CyclotomicInteger:
    """psi(a) = zeta_p**Tr(a), a nontrivial additive character of F_q."""
    p = type(a).characteristic
    return CyclotomicInteger.root_power(p, trace_to_prime(a))
