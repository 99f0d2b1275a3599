"""Nu-series of Construction-A lattices and the lattice MacWilliams identity.

The nu-series of a lattice L counts points by L1 norm,
nu_L(z) = sum over x in L of z**|x|_1. For A(C) it equals the homogeneous
weight enumerator W_C((1+z**2)/(1-z**2), 2z/(1-z**2)).

With u = tanh(beta) and v = tanh(alpha) tied by exp(-2 beta) = tanh(alpha),
the identity checked here reads

    2**(n/2) nu_{A(C)*}(tanh(beta/2)**2)
        = det A(C) * sinh(2 beta)**(n/2) * nu_{A(C)}(tanh(alpha/2)).

On the exact path the half-integer powers cancel and it becomes the rational
identity sum_{C_dual} u**w = det * ((1+u)/2)**n * sum_C v**w.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from algebra.rational import exact_sqrt, format_rational, require_open_unit
from codes.linear_code import LinearCode, dual_code
from config.parser import DEFAULT_ENUMERATION_BUDGET, DEFAULT_SERIES_BUDGET
from enumerators.weight import homogeneous_eval, substitute_series, weight_enumerator
from lattice.construction_a import (
    ConstructionALattice,
    SeriesTruncation,
    construction_a,
    dual_lattice,
    lattice_enumerate_l1,
    majorant_radius,
    require_binary,
)
from utils.helpers import ParameterRangeError, get_logger

logger = get_logger(__name__)

FLOAT_SLACK = 1e-9
DEFAULT_NUMERIC_TOL = Fraction(1, 10**12)


def _require_series_argument(name: str, z: Fraction) -> None:
    if not 0 <= z < 1:
        raise ParameterRangeError(name, z, "[0,1)")


def nu_closed_form(code: LinearCode, z: Fraction) -> Fraction:
    """Exact nu_{A(C)}(z) from the weight enumerator.

    Raises:
        ParameterRangeError: Unless 0 <= z < 1.
    """
    z = Fraction(z)
    _require_series_argument("z", z)
    code = require_binary(code)
    denom = 1 - z * z
    return homogeneous_eval(weight_enumerator(code), X=(1 + z * z) / denom, Y=2 * z / denom)


def nu_series(code: LinearCode, M: int) -> list[int]:
    """Coefficients of the closed form expanded to z**M.

    The even and odd coset series of 2Z are substituted into W_C.
    """
    code = require_binary(code)
    even = [1] + [2 if m % 2 == 0 else 0 for m in range(1, M + 1)]
    odd = [0] + [2 if m % 2 == 1 else 0 for m in range(1, M + 1)]
    return substitute_series(weight_enumerator(code), odd, even, M)


def nu_truncated(
    lat: ConstructionALattice,
    z: Fraction,
    tol: Fraction,
    budget: int = DEFAULT_SERIES_BUDGET,
) -> SeriesTruncation:
    """Partial sum of nu_L(z) with a guaranteed tail bound at most ``tol``.

    For the dual scale 1/2 the series runs in sqrt(z) over the integer grid,
    so z must then be the square of a rational.

    Raises:
        ParameterRangeError: Unless 0 <= z < 1, or if sqrt(z) is irrational
            on a dual lattice.
        BudgetExceededError: If ``tol`` needs more points than the budget.
    """
    z, tol = Fraction(z), Fraction(tol)
    _require_series_argument("z", z)
    if tol <= 0:
        raise ParameterRangeError("tol", tol, "(0,inf)")
    if z == 0:
        return SeriesTruncation(0, (1,), Fraction(1), Fraction(0))

    s = z if lat.scale == 1 else exact_sqrt(z)
    if s is None:
        raise ParameterRangeError("z", z, "rational squares for a dual lattice")
    radius, tail = majorant_radius(lat.n, s, tol, budget)
    counts = lattice_enumerate_l1(lat, radius, budget).counts
    value = sum((c * s**m for m, c in enumerate(counts)), Fraction(0))
    return SeriesTruncation(radius, counts, value, tail)


def dual_lattice_nu(code: LinearCode, t: Fraction) -> Fraction:
    """nu_{A(C)*}(t**2) = nu_{A(C_dual)}(t)."""
    t = Fraction(t)
    _require_series_argument("t", t)
    return nu_closed_form(dual_code(require_binary(code)), t)


@dataclass(frozen=True)
class ParameterPair:
    """u = tanh(beta) and v = tanh(alpha) with exp(-2 beta) = tanh(alpha)."""

    u: Fraction
    v: Fraction


def beta_alpha_relation(u: Fraction) -> ParameterPair:
    """v = (1 - u) / (1 + u), an involution of (0, 1).

    Raises:
        ParameterRangeError: Unless 0 < u < 1.
    """
    u = Fraction(u)
    require_open_unit("u", u)
    return ParameterPair(u, (1 - u) / (1 + u))


@dataclass(frozen=True)
class Theorem3Report:
    lhs: Fraction
    rhs: Fraction

    @property
    def residual(self) -> Fraction:
        return self.lhs - self.rhs

    def to_json(self) -> dict[str, Any]:
        return {
            "lhs": format_rational(self.lhs),
            "rhs": format_rational(self.rhs),
            "residual": format_rational(self.residual),
            "pass": self.residual == 0,
        }


def verify_theorem3_exact(
    code: LinearCode, u: Fraction, budget: int = DEFAULT_ENUMERATION_BUDGET
) -> Theorem3Report:
    """Both sides of the rational form of the lattice identity.

    The dual side is enumerated from C_dual directly, not derived from C.

    Raises:
        ParameterRangeError: Unless 0 < u < 1.
        CodeError: For non-binary or nonlinear codes.
    """
    pair = beta_alpha_relation(u)
    code = require_binary(code)
    lhs = weight_enumerator(dual_code(code), budget).evaluate(pair.u)
    rhs = (
        construction_a(code).det
        * ((1 + pair.u) / 2) ** code.n
        * weight_enumerator(code, budget).evaluate(pair.v)
    )
    return Theorem3Report(lhs, rhs)


@dataclass(frozen=True)
class NumericReport:
    """Floating-point sides of an identity with the truncation error they carry."""

    lhs: float
    rhs: float
    tail: float

    @property
    def difference(self) -> float:
        return abs(self.lhs - self.rhs)

    @property
    def passed(self) -> bool:
        return self.difference <= self.tail + FLOAT_SLACK * max(1.0, abs(self.lhs), abs(self.rhs))

    def to_json(self) -> dict[str, Any]:
        return {
            "lhs": self.lhs,
            "rhs": self.rhs,
            "difference": self.difference,
            "tail": self.tail,
            "pass": self.passed,
        }


def _truncated_float(
    lat: ConstructionALattice, s: float, tol: Fraction, budget: int
) -> tuple[float, Fraction]:
    """sum N_m s**m over the integer grid of ``lat``, with its exact tail bound."""
    exact = Fraction(s)
    radius, tail = majorant_radius(lat.n, exact, tol, budget)
    counts = lattice_enumerate_l1(lat, radius, budget).counts
    return math.fsum(c * s**m for m, c in enumerate(counts)), tail


def verify_theorem3_numeric(
    code: LinearCode,
    beta: float,
    tol: Fraction = DEFAULT_NUMERIC_TOL,
    budget: int = DEFAULT_SERIES_BUDGET,
) -> NumericReport:
    """Evaluate both sides of the hyperbolic form by truncated enumeration.

    Raises:
        ParameterRangeError: If beta <= 0.
        BudgetExceededError: If the truncation needs more points than the budget.
    """
    if not beta > 0:
        raise ParameterRangeError("beta", beta, "(0,inf)")
    code = require_binary(code)
    n = code.n
    lat = construction_a(code)
    alpha = math.atanh(math.exp(-2 * beta))

    lhs_scale = 2 ** (n / 2)
    rhs_scale = float(lat.det) * math.sinh(2 * beta) ** (n / 2)
    # The dual's series in tanh(beta/2)**2 runs over A(C_dual) in tanh(beta/2).
    lhs_sum, lhs_tail = _truncated_float(dual_lattice(lat), math.tanh(beta / 2), tol, budget)
    rhs_sum, rhs_tail = _truncated_float(lat, math.tanh(alpha / 2), tol, budget)
    tail = lhs_scale * float(lhs_tail) + rhs_scale * float(rhs_tail)
    return NumericReport(lhs_scale * lhs_sum, rhs_scale * rhs_sum, tail)


def nu_hyperbolic_check(
    code: LinearCode,
    alpha: float,
    tol: Fraction = DEFAULT_NUMERIC_TOL,
    budget: int = DEFAULT_SERIES_BUDGET,
) -> NumericReport:
    """Truncated nu_{A(C)}(tanh(alpha/2)) against W_C(cosh alpha, sinh alpha)."""
    if not alpha > 0:
        raise ParameterRangeError("alpha", alpha, "(0,inf)")
    code = require_binary(code)
    series, tail = _truncated_float(construction_a(code), math.tanh(alpha / 2), tol, budget)
    W = weight_enumerator(code)
    closed = math.fsum(
        a * math.sinh(alpha) ** w * math.cosh(alpha) ** (code.n - w) for w, a in enumerate(W.coeffs)
    )
    return NumericReport(series, closed, float(tail))


def normalization_identity_numeric(code: LinearCode, beta: float) -> NumericReport:
    """det (sinh(2b)/2)**(n/2) (cosh a / cosh b)**n against (1 + tanh b)**n / |C|."""
    if not beta > 0:
        raise ParameterRangeError("beta", beta, "(0,inf)")
    code = require_binary(code)
    n = code.n
    alpha = math.atanh(math.exp(-2 * beta))
    lhs = (
        float(construction_a(code).det)
        * (math.sinh(2 * beta) / 2) ** (n / 2)
        * (math.cosh(alpha) / math.cosh(beta)) ** n
    )
    rhs = (1 + math.tanh(beta)) ** n / code.size
    return NumericReport(lhs, rhs, 0.0)
