"""Theta series of A(C) and the Jacobi-Poisson identity at imaginary argument."""

import math
from dataclasses import dataclass
from typing import Any

import numpy as np

from codes.linear_code import LinearCode, dual_code
from config.parser import DEFAULT_ENUMERATION_BUDGET, DEFAULT_SERIES_BUDGET
from enumerators.weight import WeightEnumerator, substitute_series, weight_enumerator
from lattice.construction_a import (
    ConstructionALattice,
    construction_a,
    dual_lattice,
    lattice_enumerate_norm,
    require_binary,
)
from utils.helpers import BudgetExceededError, ParameterRangeError, get_logger

logger = get_logger(__name__)

MAX_BOX_RADIUS = 10_000


@dataclass(frozen=True)
class ThetaReport:
    """Theta coefficients of q**0..q**M by enumeration (lhs) and by substitution (rhs)."""

    lhs: tuple[int, ...]
    rhs: tuple[int, ...]

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs

    def to_json(self) -> dict[str, Any]:
        return {
            "lhs": [str(c) for c in self.lhs],
            "rhs": [str(c) for c in self.rhs],
            "pass": self.equal,
        }


def coset_theta_series(M: int) -> tuple[list[int], list[int]]:
    """Theta series of 2Z and 2Z+1 up to q**M."""
    even = [0] * (M + 1)
    odd = [0] * (M + 1)
    for k in range(math.isqrt(M) + 1):
        target = even if k % 2 == 0 else odd
        target[k * k] += 1 if k == 0 else 2
    return even, odd


def theta_relation_check(
    code: LinearCode, M: int, budget: int = DEFAULT_SERIES_BUDGET
) -> ThetaReport:
    """Compare enumerated theta coefficients of A(C) with W_C(theta_2Z, theta_2Z+1).

    Raises:
        ParameterRangeError: If M is negative.
        BudgetExceededError: If the box |x_i| <= isqrt(M) outgrows the budget.
    """
    if M < 0:
        raise ParameterRangeError("M", M, "[0,inf)")
    code = require_binary(code)
    lhs = lattice_enumerate_norm(construction_a(code), M, budget)

    even, odd = coset_theta_series(M)
    rhs = substitute_series(weight_enumerator(code), odd, even, M)
    return ThetaReport(tuple(lhs), tuple(rhs))


@dataclass(frozen=True)
class JacobiReport:
    """Gaussian sums over the dual (lhs) and the scaled primal (rhs)."""

    lhs: float
    rhs: float
    tail: float
    tol: float
    radius: int

    @property
    def residual(self) -> float:
        return abs(self.lhs - self.rhs)

    @property
    def passed(self) -> bool:
        return self.residual <= self.tol + self.tail

    def to_json(self) -> dict[str, Any]:
        return {
            "lhs": self.lhs,
            "rhs": self.rhs,
            "residual": self.residual,
            "tail": self.tail,
            "radius": self.radius,
            "pass": self.passed,
        }


def gaussian_box_sum(W: WeightEnumerator, tau: float, B: int) -> tuple[float, float]:
    """sum of exp(-pi tau |y|**2) over y in A(C), |y_i| <= B, from W = W_C; and its tail bound.

    The box sum regroups by parity pattern: each codeword c contributes
    G_odd**w(c) * G_even**(n - w(c)). The tail is majorized over Z^n with the
    one-dimensional bound exp(-pi tau B**2) / (1 - exp(-pi tau (2B + 1))).
    """
    ks = np.arange(-B, B + 1)
    g = np.exp(-math.pi * tau * ks.astype(float) ** 2)
    even = math.fsum(g[ks % 2 == 0])
    odd = math.fsum(g[ks % 2 == 1])
    n = W.n
    box = math.fsum(a * odd**w * even ** (n - w) for w, a in enumerate(W.coeffs))
    one_dim = even + odd
    tail_1d = math.exp(-math.pi * tau * B * B) / (1 - math.exp(-math.pi * tau * (2 * B + 1)))
    return box, (one_dim + 2 * tail_1d) ** n - one_dim**n


def _dual_of(lat: ConstructionALattice) -> ConstructionALattice:
    if lat.is_dual:
        return ConstructionALattice(dual_code(lat.code))
    return dual_lattice(lat)


def jacobi_poisson_check(
    lat: ConstructionALattice,
    t: float,
    tol: float = 1e-10,
    budget: int = DEFAULT_ENUMERATION_BUDGET,
) -> JacobiReport:
    """sum over L* of exp(-pi t |x|**2) against det(L) t**(-n/2) sum over L of exp(-pi |x|**2 / t).

    The box radius grows until both weighted tails are below tol / 2.

    Raises:
        ParameterRangeError: If t <= 0 or tol <= 0.
        BudgetExceededError: If either code exceeds the enumeration budget, or
            no box radius up to the cap reaches tol.
    """
    if not t > 0:
        raise ParameterRangeError("t", t, "(0,inf)")
    if not tol > 0:
        raise ParameterRangeError("tol", tol, "(0,inf)")
    dual = _dual_of(lat)
    n = lat.n
    prefactor = float(lat.det) * t ** (-n / 2)
    dual_tau = t * float(dual.scale) ** 2
    primal_tau = float(lat.scale) ** 2 / t
    dual_weights = weight_enumerator(dual.code, budget)
    primal_weights = weight_enumerator(lat.code, budget)

    for B in range(1, MAX_BOX_RADIUS + 1):
        lhs, lhs_tail = gaussian_box_sum(dual_weights, dual_tau, B)
        rhs, rhs_tail = gaussian_box_sum(primal_weights, primal_tau, B)
        rhs, rhs_tail = prefactor * rhs, prefactor * rhs_tail
        if lhs_tail <= tol / 2 and rhs_tail <= tol / 2:
            logger.debug("Gaussian box radius %d for t=%s", B, t)
            return JacobiReport(lhs, rhs, lhs_tail + rhs_tail, tol, B)
    raise BudgetExceededError("Gaussian box radius", MAX_BOX_RADIUS + 1, MAX_BOX_RADIUS)

