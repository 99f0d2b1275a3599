"""Weight enumerators and the MacWilliams transform for codes and m-tuples."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any

import numpy as np

from algebra.field import labels
from algebra.polynomial import (
    ascending,
    evaluate,
    format_poly,
    int_poly,
    linear,
    truncated_product,
)
from codes.linear_code import (
    CodeTuple,
    LinearCode,
    WordList,
    codeword_array,
    dual_code,
    hamming_weights,
    iter_codeword_blocks,
)
from config.parser import DEFAULT_ENUMERATION_BUDGET
from utils.helpers import VerificationFailedError, check_budget, get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class WeightEnumerator:
    """W(z) = A_0 + A_1 z + ... + A_n z^n.

    ``q_effective`` (q**m) and ``set_size`` are recorded when known. The
    homogeneous form W(z1, z2) = z2**n * W(z1/z2) is derived on demand.
    """

    n: int
    coeffs: tuple[int, ...]
    q_effective: int | None = None
    set_size: int | None = None

    def __post_init__(self):
        if len(self.coeffs) != self.n + 1:
            raise VerificationFailedError(
                f"enumerator of degree bound {self.n} needs {self.n + 1} coefficients"
            )
        if any(c < 0 for c in self.coeffs):
            raise VerificationFailedError(f"negative enumerator coefficient in {list(self.coeffs)}")

    @property
    def total(self) -> int:
        return sum(self.coeffs)

    @property
    def minimum_distance(self) -> int | None:
        """Smallest nonzero weight present, None when only the zero word is."""
        for i, count in enumerate(self.coeffs[1:], start=1):
            if count:
                return i
        return None

    def evaluate(self, z: Fraction) -> Fraction:
        return evaluate(list(self.coeffs), Fraction(z))

    def to_json(self) -> dict[str, Any]:
        return {"n": self.n, "coeffs": [str(c) for c in self.coeffs]}

    def __str__(self) -> str:
        return format_poly(list(self.coeffs))


@dataclass(frozen=True)
class TransformReport:
    """Enumerated dual enumerator (lhs) against the transformed primal (rhs)."""

    lhs: WeightEnumerator
    rhs: WeightEnumerator

    @property
    def equal(self) -> bool:
        return self.lhs.coeffs == self.rhs.coeffs


@dataclass(frozen=True)
class HomogeneousReport:
    lhs: Fraction
    rhs: Fraction

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def weight_enumerator(
    code: LinearCode | WordList, budget: int = DEFAULT_ENUMERATION_BUDGET
) -> WeightEnumerator:
    """Count codewords by Hamming weight.

    Raises:
        BudgetExceededError: If |C| exceeds the budget.
    """
    counts = np.zeros(code.n + 1, dtype=np.int64)
    for block in iter_codeword_blocks(code, budget):
        counts += np.bincount(hamming_weights(block), minlength=code.n + 1)
    return WeightEnumerator(
        code.n, tuple(int(c) for c in counts), code.field.q, code.size
    )


def effective_length_enumerator(
    codes: CodeTuple, budget: int = DEFAULT_ENUMERATION_BUDGET
) -> WeightEnumerator:
    """Count matrices of C_1 x ... x C_m by number of nonzero columns.

    Raises:
        BudgetExceededError: If the product size exceeds the budget.
    """
    n = codes.n
    check_budget("code tuple", codes.size, budget)
    supports = [labels(codeword_array(code, budget)) != 0 for code in codes.codes]
    supports.sort(key=len)
    # Column supports of all partial products, then sweep the largest factor.
    combined = supports[0]
    for support in supports[1:-1]:
        combined = (combined[:, np.newaxis, :] | support[np.newaxis, :, :]).reshape(-1, n)

    counts = np.zeros(n + 1, dtype=np.int64)
    if len(supports) == 1:
        counts += np.bincount(combined.sum(axis=1), minlength=n + 1)
    else:
        for row in supports[-1]:
            counts += np.bincount((combined | row).sum(axis=1), minlength=n + 1)
    logger.debug("Effective-length enumerator of %d-tuple, %d matrices", codes.m, codes.size)
    return WeightEnumerator(
        n, tuple(int(c) for c in counts), codes.field.q**codes.m, codes.size
    )


def macwilliams_transform(W: WeightEnumerator, n: int, q_eff: int, size: int) -> WeightEnumerator:
    """(1/size) * sum(A_i (1 - z)^i (1 + (q_eff - 1) z)^(n - i)).

    Raises:
        VerificationFailedError: If a coefficient is not divisible by ``size``
            or comes out negative; both mean the input was no enumerator.
    """
    if q_eff < 2:
        raise VerificationFailedError(f"effective alphabet size must be at least 2, got {q_eff}")
    one_minus = linear(1, -1)
    one_plus = linear(1, q_eff - 1)
    total = int_poly([0])
    for i, a in enumerate(W.coeffs):
        if a:
            total += one_minus**i * one_plus ** (n - i) * a

    raw = ascending(total, n + 1)
    if any(c % size for c in raw):
        raise VerificationFailedError(f"transformed coefficients {raw} not divisible by {size}")
    space = q_eff**n
    return WeightEnumerator(
        n,
        tuple(c // size for c in raw),
        q_eff,
        space // size if space % size == 0 else None,
    )


def homogeneous_eval(W: WeightEnumerator, X: Fraction, Y: Fraction) -> Fraction:
    """W(z1=Y, z2=X) = sum(A_i * Y^i * X^(n - i))."""
    X, Y = Fraction(X), Fraction(Y)
    return sum((a * Y**i * X ** (W.n - i) for i, a in enumerate(W.coeffs)), Fraction(0))


def verify_macwilliams(
    codes: CodeTuple, budget: int = DEFAULT_ENUMERATION_BUDGET
) -> TransformReport:
    """Compare the brute-force dual enumerator with the transformed primal one."""
    lhs = effective_length_enumerator(codes.dual(), budget)
    primal = effective_length_enumerator(codes, budget)
    rhs = macwilliams_transform(primal, codes.n, codes.field.q**codes.m, codes.size)
    return TransformReport(lhs, rhs)


def verify_homogeneous(
    code: LinearCode, z1: Fraction, z2: Fraction, budget: int = DEFAULT_ENUMERATION_BUDGET
) -> HomogeneousReport:
    """W_dual(z1, z2) against (1/|C|) W_C(z2 - z1, z2 + (q - 1) z1)."""
    z1, z2 = Fraction(z1), Fraction(z2)
    dual = weight_enumerator(dual_code(code), budget)
    primal = weight_enumerator(code, budget)
    lhs = homogeneous_eval(dual, X=z2, Y=z1)
    rhs = homogeneous_eval(primal, X=z2 + (code.field.q - 1) * z1, Y=z2 - z1) / code.size
    return HomogeneousReport(lhs, rhs)


def substitute_series(W: WeightEnumerator, odd: list[int], even: list[int], degree: int) -> list[int]:
    """sum(A_i * odd**i * even**(n - i)) as a power series truncated at ``degree``."""
    total = [0] * (degree + 1)
    for i, count in enumerate(W.coeffs):
        if not count:
            continue
        term = [1]
        for _ in range(i):
            term = truncated_product(term, odd, degree)
        for _ in range(W.n - i):
            term = truncated_product(term, even, degree)
        total = [a + count * b for a, b in zip(total, term)]
    return total
