"""Construction-A lattices A(C) = {x in Z^n : x mod 2 in C} and shell counts."""

from collections.abc import Callable
from dataclasses import dataclass
from fractions import Fraction
from math import comb, isqrt
from typing import Any

import numpy as np

from algebra.field import labels
from algebra.polynomial import truncated_product
from algebra.rational import format_rational
from codes.linear_code import LinearCode, codeword_array, dual_code, require_linear
from config.parser import DEFAULT_SERIES_BUDGET
from utils.helpers import BudgetExceededError, CodeError, check_budget, get_logger

logger = get_logger(__name__)

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class ConstructionALattice:
    """The lattice scale * A(code).

    A(C) itself has scale 1. Its dual is held as (1/2) * A(C_dual), scale 1/2.
    """

    code: LinearCode
    scale: Fraction = Fraction(1)

    @property
    def n(self) -> int:
        return self.code.n

    @property
    def is_dual(self) -> bool:
        return self.scale != 1

    @property
    def det(self) -> Fraction:
        """Covolume scale**n * 2**n / |code|."""
        return self.scale**self.n * Fraction(2**self.n, self.code.size)

    def contains(self, x) -> bool:
        """Membership: x / scale is integral and reduces mod 2 into the code."""
        scaled = [Fraction(v) / self.scale for v in x]
        if len(scaled) != self.n or any(v.denominator != 1 for v in scaled):
            return False
        return self.code.contains([int(v) % 2 for v in scaled])

    def __str__(self) -> str:
        prefix = "" if self.scale == 1 else f"{format_rational(self.scale)}*"
        return f"{prefix}A([{self.n},{self.code.k}])"


@dataclass(frozen=True)
class SeriesTruncation:
    """Shell counts N_0..N_M, with the partial sum and its tail bound when evaluated."""

    radius: int
    counts: tuple[int, ...]
    value: Fraction | float | None = None
    tail_bound: Fraction | float | None = None

    def to_json(self) -> dict[str, Any]:
        def render(v):
            return format_rational(v) if isinstance(v, Fraction) else v

        out: dict[str, Any] = {"counts": [str(c) for c in self.counts]}
        if self.value is not None:
            out["value"] = render(self.value)
            out["tail_bound"] = render(self.tail_bound)
        return out


def require_binary(code: LinearCode) -> LinearCode:
    """Reject nonlinear and non-binary codes.

    Raises:
        CodeError: Unless the code is linear over F_2.
    """
    code = require_linear(code)
    if code.field.q != 2:
        raise CodeError(f"Construction A needs a binary code, got one over {code.field}")
    return code


def construction_a(code: LinearCode) -> ConstructionALattice:
    """A(C) for a binary linear code.

    Raises:
        CodeError: If the code is not binary or not linear.
    """
    return ConstructionALattice(require_binary(code))


def dual_lattice(lat: ConstructionALattice) -> ConstructionALattice:
    """A(C)* = (1/2) A(C_dual).

    Raises:
        CodeError: If ``lat`` is already a dual lattice.
    """
    if lat.is_dual:
        raise CodeError("dual_lattice expects A(C), got a lattice that is already a dual")
    return ConstructionALattice(dual_code(lat.code), HALF)


def zn_shell_count(n: int, m: int) -> int:
    """Number of x in Z^n with |x|_1 = m."""
    if m == 0:
        return 1
    return sum(2**k * comb(n, k) * comb(m - 1, k - 1) for k in range(1, min(n, m) + 1))


def majorant_radius(n: int, s: Fraction, tol: Fraction, budget: int) -> tuple[int, Fraction]:
    """Smallest M whose Z^n tail ((1+s)/(1-s))**n - T_M(s) is at most tol.

    Every Construction-A lattice has shell counts below those of Z^n, so the
    returned tail bounds the discarded mass of any of them.

    Raises:
        BudgetExceededError: If the L1 ball of radius M outgrows the budget.
    """
    closed = ((1 + s) / (1 - s)) ** n
    partial, points, m = Fraction(1), 1, 0
    while closed - partial > tol:
        m += 1
        shell = zn_shell_count(n, m)
        points += shell
        if points > budget:
            raise BudgetExceededError("lattice points for the requested tolerance", points, budget)
        partial += shell * s**m
    logger.debug("truncation radius %d for s=%s, tail %s", m, float(s), float(closed - partial))
    return m, closed - partial


def _membership_table(code: LinearCode) -> np.ndarray:
    """Boolean lookup indexed by the bitmask sum(c_j << j) of a binary word."""
    table = np.zeros(1 << code.n, dtype=bool)
    words = labels(codeword_array(code))
    table[words @ (1 << np.arange(code.n, dtype=np.int64))] = True
    return table


def _enumerate_shells(
    code: LinearCode, radius: int, bound: int, cost: Callable[[int], int], budget: int
) -> list[int]:
    """Count x in A(code) with |x_i| <= bound by cost(x) = sum cost(x_i) <= radius.

    Points are built one coordinate at a time as (parity pattern, cost) pairs
    and filtered against the code at the end.
    """
    n = code.n
    values = list(range(-bound, bound + 1))
    one_dim = [0] * (radius + 1)
    for v in values:
        if cost(v) <= radius:
            one_dim[cost(v)] += 1
    ball = [1]
    for _ in range(n):
        ball = truncated_product(ball, one_dim, radius)
    check_budget("lattice points", sum(ball), budget)

    patterns = np.zeros(1, dtype=np.int64)
    costs = np.zeros(1, dtype=np.int64)
    for j in range(n):
        next_patterns, next_costs = [], []
        for v in values:
            keep = costs + cost(v) <= radius
            next_patterns.append(patterns[keep] | ((abs(v) & 1) << j))
            next_costs.append(costs[keep] + cost(v))
        patterns = np.concatenate(next_patterns)
        costs = np.concatenate(next_costs)

    selected = costs[_membership_table(code)[patterns]]
    return [int(c) for c in np.bincount(selected, minlength=radius + 1)]


def lattice_enumerate_l1(
    lat: ConstructionALattice, R: int, budget: int = DEFAULT_SERIES_BUDGET
) -> SeriesTruncation:
    """N_m = #{x : |x|_1 = m * scale}, m = 0..R, on the integer grid A(code).

    Raises:
        BudgetExceededError: If the Z^n ball of radius R exceeds the budget.
    """
    counts = _enumerate_shells(lat.code, R, R, abs, budget)
    return SeriesTruncation(R, tuple(counts))


def lattice_enumerate_norm(
    lat: ConstructionALattice, M: int, budget: int = DEFAULT_SERIES_BUDGET
) -> list[int]:
    """Counts of x in A(code) by squared norm |x|**2 = 0..M."""
    return _enumerate_shells(lat.code, M, isqrt(M), lambda v: v * v, budget)
