"""Finite Fourier transform over the matrix space F_q^(m x n).

A function table stores one value per matrix. Matrices are keyed by their
entries read row-major as base-q digits, most significant first, so key 0 is
the zero matrix and key q**(mn) - 1 has every entry equal to label q - 1.

Values live in Q(zeta_p): each row of ``numerators`` holds the p coefficients
of one value, all sharing the integer ``denominator``.
"""

from collections.abc import Callable
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm

import galois
import numpy as np
from sympy import fwht

from algebra.cyclotomic import CyclotomicInteger, canonical_rows
from algebra.field import FieldSpec, labels, trace_form_table
from codes.linear_code import CodeTuple, codeword_array, effective_length_weight, message_block
from config.parser import DEFAULT_TRANSFORM_BUDGET
from utils.helpers import CodeError, FieldError, check_budget, get_logger

logger = get_logger(__name__)

DIRECT_CHUNK = 256
INT64_SAFE = 1 << 62


@dataclass(frozen=True, eq=False)
class MatrixFunctionTable:
    """Dense table of a function F_q^(m x n) -> Q(zeta_p)."""

    field: FieldSpec
    m: int
    n: int
    numerators: np.ndarray
    denominator: int = 1

    def __post_init__(self):
        expected = (self.field.q ** (self.m * self.n), self.field.p)
        if self.numerators.shape != expected:
            raise FieldError(f"table shape {self.numerators.shape}, expected {expected}")
        if self.denominator <= 0:
            raise FieldError("table denominator must be positive")

    @property
    def size(self) -> int:
        return self.numerators.shape[0]

    def key(self, x: galois.FieldArray) -> int:
        """Row-major base-q index of a matrix."""
        digits = labels(x).reshape(-1)
        if digits.size != self.m * self.n:
            raise FieldError(f"matrix has {digits.size} entries, table expects {self.m * self.n}")
        return int(reduce(lambda acc, d: acc * self.field.q + int(d), digits, 0))

    def value(self, x: int | galois.FieldArray) -> CyclotomicInteger:
        index = x if isinstance(x, int) else self.key(x)
        return CyclotomicInteger(
            self.field.p,
            tuple(Fraction(int(c), self.denominator) for c in self.numerators[index]),
        ).reduce()

    def normalized(self) -> "MatrixFunctionTable":
        """Canonical coefficient rows with the denominator reduced."""
        rows = canonical_rows(self.numerators.astype(object))
        common = reduce(gcd, (int(c) for c in rows.flat), self.denominator)
        common = common or 1
        return MatrixFunctionTable(
            self.field, self.m, self.n, rows // common, self.denominator // common
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MatrixFunctionTable):
            return NotImplemented
        if (self.field, self.m, self.n) != (other.field, other.m, other.n):
            return False
        a, b = self.normalized(), other.normalized()
        return a.denominator == b.denominator and bool(np.all(a.numerators == b.numerators))

    __hash__ = None  # type: ignore[assignment]


def matrix_points(field: FieldSpec, m: int, n: int) -> galois.FieldArray:
    """All matrices of F_q^(m x n) in key order, shape (q**(mn), m, n)."""
    size = field.q ** (m * n)
    return message_block(field, m * n, 0, size).reshape(size, m, n)


def table_from_values(field: FieldSpec, m: int, n: int, values) -> MatrixFunctionTable:
    """Table from a sequence of rationals or cyclotomic values in key order."""
    p = field.p
    rows: list[tuple] = []
    for v in values:
        if isinstance(v, CyclotomicInteger):
            rows.append(tuple(Fraction(c) for c in v.coeffs))
        else:
            rows.append((Fraction(v),) + (Fraction(0),) * (p - 1))
    denominator = lcm(*(c.denominator for row in rows for c in row)) if rows else 1
    numerators = np.array(
        [[c.numerator * (denominator // c.denominator) for c in row] for row in rows],
        dtype=object,
    ).reshape(len(rows), p)
    return MatrixFunctionTable(field, m, n, numerators, denominator).normalized()


def table_from_function(
    field: FieldSpec, m: int, n: int, fn: Callable[[galois.FieldArray], object]
) -> MatrixFunctionTable:
    """Tabulate ``fn`` over every matrix."""
    return table_from_values(field, m, n, (fn(x) for x in matrix_points(field, m, n)))


def delta_table(field: FieldSpec, m: int, n: int, key: int = 0) -> MatrixFunctionTable:
    numerators = np.zeros((field.q ** (m * n), field.p), dtype=object)
    numerators[key, 0] = 1
    return MatrixFunctionTable(field, m, n, numerators)


def constant_table(field: FieldSpec, m: int, n: int, value: int = 1) -> MatrixFunctionTable:
    numerators = np.zeros((field.q ** (m * n), field.p), dtype=object)
    numerators[:, 0] = value
    return MatrixFunctionTable(field, m, n, numerators).normalized()


def ew_table(field: FieldSpec, m: int, n: int, z: Fraction) -> MatrixFunctionTable:
    """The table of z**ew(x), with denominators cleared to den(z)**n."""
    z = Fraction(z)
    points = labels(matrix_points(field, m, n))
    ew = np.count_nonzero(points.any(axis=1), axis=1)
    numerators = np.zeros((points.shape[0], field.p), dtype=object)
    numerators[:, 0] = [z.numerator**w * z.denominator ** (n - w) for w in ew.tolist()]
    return MatrixFunctionTable(field, m, n, numerators, z.denominator**n).normalized()


def random_integer_table(
    field: FieldSpec, m: int, n: int, rng: np.random.Generator, bound: int = 9
) -> MatrixFunctionTable:
    """Integer-valued table with entries uniform in [-bound, bound]."""
    numerators = np.zeros((field.q ** (m * n), field.p), dtype=object)
    numerators[:, 0] = [int(v) for v in rng.integers(-bound, bound + 1, size=numerators.shape[0])]
    return MatrixFunctionTable(field, m, n, numerators).normalized()


def matrix_pairing(x: galois.FieldArray, y: galois.FieldArray) -> galois.FieldArray:
    """<x, y> = Tr(x^T y), the trace of an n x n matrix over F_q.

    Raises:
        FieldError: On a shape mismatch.
    """
    if x.shape != y.shape:
        raise FieldError(f"pairing needs equal shapes, got {x.shape} and {y.shape}")
    return np.add.reduce((x.T @ y).diagonal())


def _axis_character_sum(values: np.ndarray, form: np.ndarray, p: int, sign: int) -> np.ndarray:
    """Apply K[a, b] = zeta**(sign * Tr(ab)) along axis 0 of a (q, R, p) array.

    Multiplying by zeta**k cyclically shifts the coefficient axis by k.
    """
    out = np.zeros_like(values)
    q = values.shape[0]
    for a in range(q):
        for b in range(q):
            out[a] += np.roll(values[b], (sign * int(form[a, b])) % p, axis=-1)
    return out


def _transform(f: MatrixFunctionTable, sign: int, budget: int) -> np.ndarray:
    check_budget("function table entries", f.size, budget)
    q, p, d = f.field.q, f.field.p, f.m * f.n
    form = trace_form_table(f.field)
    arr = f.numerators.astype(object).reshape((q,) * d + (p,))
    # psi(<x, xi>) factors over the mn coordinates, one q x q kernel per axis.
    for axis in range(d):
        moved = np.moveaxis(arr, axis, 0)
        shape = moved.shape
        flat = _axis_character_sum(moved.reshape(q, -1, p), form, p, sign)
        arr = np.moveaxis(flat.reshape(shape), 0, axis)
    return arr.reshape(f.size, p)


def finite_fourier_transform(
    f: MatrixFunctionTable, budget: int = DEFAULT_TRANSFORM_BUDGET
) -> MatrixFunctionTable:
    """FTf(x) = sum over xi of f(xi) * psi(<x, xi>), exactly.

    Raises:
        BudgetExceededError: If q**(mn) exceeds the budget.
    """
    logger.debug("Fourier transform over F_%d^(%dx%d)", f.field.q, f.m, f.n)
    return MatrixFunctionTable(
        f.field, f.m, f.n, _transform(f, 1, budget), f.denominator
    ).normalized()


def inverse_ft(F: MatrixFunctionTable, budget: int = DEFAULT_TRANSFORM_BUDGET) -> MatrixFunctionTable:
    """f(x) = q**(-mn) * sum over xi of F(xi) * psi(-<x, xi>)."""
    return MatrixFunctionTable(
        F.field, F.m, F.n, _transform(F, -1, budget), F.denominator * F.size
    ).normalized()


def fourier_transform_direct(
    f: MatrixFunctionTable, budget: int = DEFAULT_TRANSFORM_BUDGET
) -> MatrixFunctionTable:
    """The same transform by the double loop over (x, xi), chunked over x.

    Quadratic in the table size; used as an independent oracle.
    """
    check_budget("function table entries", f.size, budget)
    field, p = f.field, f.field.p
    form = trace_form_table(field)
    flat = labels(matrix_points(field, f.m, f.n)).reshape(f.size, -1)
    numerators = f.numerators.astype(object)
    out = np.zeros((f.size, p), dtype=object)
    for start in range(0, f.size, DIRECT_CHUNK):
        chunk = flat[start : start + DIRECT_CHUNK]
        traces = np.zeros((chunk.shape[0], f.size), dtype=np.int64)
        for j in range(flat.shape[1]):
            traces += form[chunk[:, j][:, np.newaxis], flat[:, j][np.newaxis, :]]
        traces %= p
        for r in range(p):
            mask = traces == r
            for s in range(p):
                column = numerators[:, s]
                if any(column):
                    out[start : start + chunk.shape[0], (r + s) % p] += _masked_sum(mask, column)
    return MatrixFunctionTable(field, f.m, f.n, out, f.denominator).normalized()


def _masked_sum(mask: np.ndarray, column: np.ndarray) -> np.ndarray:
    """Exact mask @ column, in int64 when no partial sum can overflow."""
    bound = max(abs(int(c)) for c in column) * column.shape[0]
    if bound < INT64_SAFE:
        return (mask.astype(np.int64) @ column.astype(np.int64)).astype(object)
    return mask.astype(object).dot(column)


def walsh_hadamard(f: MatrixFunctionTable) -> MatrixFunctionTable:
    """Binary transform by the fast Walsh-Hadamard butterfly.

    Raises:
        FieldError: Unless q = 2.
    """
    if f.field.q != 2:
        raise FieldError("the Walsh-Hadamard butterfly needs q = 2")
    values = f.normalized().numerators[:, 0]
    transformed = fwht([int(v) for v in values])
    numerators = np.zeros((f.size, 2), dtype=object)
    numerators[:, 0] = [int(v) for v in transformed]
    return MatrixFunctionTable(f.field, f.m, f.n, numerators, f.normalized().denominator).normalized()


def _tuple_keys(codes: CodeTuple, words_per_code: list[np.ndarray]) -> np.ndarray:
    """Keys of every matrix in C_1 x ... x C_m."""
    q, n = codes.field.q, codes.n
    row_weights = q ** np.arange(n - 1, -1, -1, dtype=object)
    keys = np.zeros(1, dtype=object)
    for words in words_per_code:
        row_keys = words.astype(object).dot(row_weights)
        keys = (keys[:, np.newaxis] * q**n + row_keys[np.newaxis, :]).reshape(-1)
    return keys.astype(np.int64)


def ft_characteristic(
    codes: CodeTuple, x: galois.FieldArray, budget: int = DEFAULT_TRANSFORM_BUDGET
) -> CyclotomicInteger:
    """FT of the indicator of C_1 x ... x C_m at x, as a product of row sums."""
    field = codes.field
    if x.shape != (codes.m, codes.n):
        raise CodeError(f"point has shape {x.shape}, expected {(codes.m, codes.n)}")
    check_budget("code tuple", codes.size, budget)
    traces = trace_form_table(field)
    total = CyclotomicInteger.one(field.p)
    for code, row in zip(codes.codes, labels(x)):
        words = labels(codeword_array(code, budget))
        residues = traces[words, row[np.newaxis, :]].sum(axis=1) % field.p
        counts = np.bincount(residues, minlength=field.p)
        total = total * CyclotomicInteger(field.p, tuple(int(c) for c in counts))
    return total.reduce()


def ft_ew_closed_form(x: galois.FieldArray, z: Fraction) -> Fraction:
    """(1 - z)**ew(x) * (1 + (q**m - 1) z)**(n - ew(x))."""
    z = Fraction(z)
    q = type(x).order
    m, n = x.shape
    ew = effective_length_weight(x)
    return (1 - z) ** ew * (1 + (q**m - 1) * z) ** (n - ew)


@dataclass(frozen=True)
class PoissonReport:
    """Both sides of sum over C_dual of f = (1/|C|) sum over C of FTf."""

    lhs: CyclotomicInteger
    rhs: CyclotomicInteger

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def _sum_over(f: MatrixFunctionTable, keys: np.ndarray) -> CyclotomicInteger:
    sums = f.numerators[keys].astype(object).sum(axis=0)
    return CyclotomicInteger(
        f.field.p, tuple(Fraction(int(c), f.denominator) for c in sums)
    ).reduce()


def poisson_check(
    codes: CodeTuple, f: MatrixFunctionTable, budget: int = DEFAULT_TRANSFORM_BUDGET
) -> PoissonReport:
    """Evaluate both sides of the finite Poisson summation formula exactly."""
    if (f.field, f.m, f.n) != (codes.field, codes.m, codes.n):
        raise CodeError("function table shape does not match the code tuple")
    dual = codes.dual()
    check_budget("code tuple", max(codes.size, dual.size), budget)
    dual_keys = _tuple_keys(dual, [labels(codeword_array(c, budget)) for c in dual.codes])
    primal_keys = _tuple_keys(codes, [labels(codeword_array(c, budget)) for c in codes.codes])
    lhs = _sum_over(f, dual_keys)
    rhs = _sum_over(finite_fourier_transform(f, budget), primal_keys) * Fraction(1, codes.size)
    return PoissonReport(lhs, rhs.reduce())


def characteristic_table(codes: CodeTuple, budget: int = DEFAULT_TRANSFORM_BUDGET) -> MatrixFunctionTable:
    """Indicator table of C_1 x ... x C_m."""
    size = codes.field.q ** (codes.m * codes.n)
    check_budget("function table entries", size, budget)
    numerators = np.zeros((size, codes.field.p), dtype=object)
    keys = _tuple_keys(codes, [labels(codeword_array(c, budget)) for c in codes.codes])
    numerators[keys, 0] = 1
    return MatrixFunctionTable(codes.field, codes.m, codes.n, numerators)
