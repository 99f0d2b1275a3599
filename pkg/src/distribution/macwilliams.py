"""The MacWilliams distribution, coset distribution and smoothing parameter."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any

import galois
import numpy as np

from algebra.cyclotomic import CyclotomicInteger
from algebra.field import labels, trace_form_table
from algebra.polynomial import evaluate
from algebra.rational import format_rational, nth_root_floor, require_open_unit
from codes.linear_code import (
    LinearCode,
    WordList,
    codeword_array,
    coset_representatives,
    dual_code,
    hamming_weights,
    require_linear,
)
from config.parser import DEFAULT_ENUMERATION_BUDGET
from enumerators.weight import WeightEnumerator, macwilliams_transform, weight_enumerator
from utils.helpers import (
    MwlabError,
    ParameterRangeError,
    VerificationFailedError,
    check_budget,
    get_logger,
)

logger = get_logger(__name__)


@dataclass(frozen=True)
class ProbabilityTable:
    """Exact probabilities over an explicit support of words."""

    support: galois.FieldArray
    probs: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.probs) != self.support.shape[0]:
            raise MwlabError("support and probabilities differ in length")
        if any(p < 0 for p in self.probs):
            raise VerificationFailedError("negative probability")
        total = sum(self.probs, Fraction(0))
        if total != 1:
            raise VerificationFailedError(f"probabilities sum to {total}, not 1")

    def keys(self) -> list[tuple[int, ...]]:
        return [tuple(int(v) for v in row) for row in labels(self.support)]

    def as_dict(self) -> dict[tuple[int, ...], Fraction]:
        return dict(zip(self.keys(), self.probs))

    def to_json(self) -> dict[str, Any]:
        return {
            "support": [list(k) for k in self.keys()],
            "probs": [format_rational(p) for p in self.probs],
        }


@dataclass(frozen=True)
class SmoothingResult:
    """Bisection bracket around the smoothing threshold.

    ``bracket`` satisfies S(lo) >= epsilon > S(hi). When S stays below epsilon
    on all of (0, 1) the result is eta = 0 with bracket (0, 0).
    """

    eta: Fraction
    bracket: tuple[Fraction, Fraction]
    epsilon: Fraction
    tol: Fraction

    def to_json(self) -> dict[str, Any]:
        return {
            "eta": format_rational(self.eta),
            "bracket": [format_rational(b) for b in self.bracket],
            "epsilon": format_rational(self.epsilon),
            "tol": format_rational(self.tol),
        }


@dataclass(frozen=True)
class Prop31Report:
    """Distance of the coset distribution from uniform against S(z)/2."""

    delta: Fraction
    bound: Fraction

    @property
    def passed(self) -> bool:
        return self.delta <= self.bound

    def to_json(self) -> dict[str, Any]:
        return {
            "delta": format_rational(self.delta),
            "bound": format_rational(self.bound),
            "pass": self.passed,
        }


def macwilliams_distribution(
    code: LinearCode | WordList, z: Fraction, budget: int = DEFAULT_ENUMERATION_BUDGET
) -> ProbabilityTable:
    """p(x) = z**w(x) / W_C(z) over the codewords.

    Raises:
        ParameterRangeError: Unless 0 < z < 1.
        BudgetExceededError: If |C| exceeds the budget.
    """
    z = Fraction(z)
    require_open_unit("z", z)
    words = codeword_array(code, budget)
    masses = [z**int(w) for w in hamming_weights(words)]
    total = sum(masses, Fraction(0))
    return ProbabilityTable(words, tuple(m / total for m in masses))


def coset_distribution(
    code: LinearCode, z: Fraction, budget: int = DEFAULT_ENUMERATION_BUDGET
) -> ProbabilityTable:
    """g(x) = sum over c of z**w(x + c) / (1 + (q - 1) z)**n on the transversal.

    Raises:
        ParameterRangeError: Unless 0 < z < 1.
        BudgetExceededError: If q**n exceeds the budget.
    """
    z = Fraction(z)
    require_open_unit("z", z)
    code = require_linear(code)
    q, n = code.field.q, code.n
    check_budget("coset sums", q**n, budget)

    reps = coset_representatives(code, budget)
    words = codeword_array(code, budget)
    norm = (1 + (q - 1) * z) ** n
    probs = []
    for rep in reps:
        counts = np.bincount(hamming_weights(words + rep), minlength=n + 1)
        probs.append(evaluate([int(c) for c in counts], z) / norm)
    logger.debug("Coset distribution over %d cosets of %r", len(probs), code)
    return ProbabilityTable(reps, tuple(probs))


def uniform_on_cosets(code: LinearCode, budget: int = DEFAULT_ENUMERATION_BUDGET) -> ProbabilityTable:
    """Mass 1/q**(n-k) on each canonical coset representative."""
    reps = coset_representatives(require_linear(code), budget)
    mass = Fraction(1, reps.shape[0])
    return ProbabilityTable(reps, (mass,) * reps.shape[0])


def coset_distribution_fourier(
    code: LinearCode, z: Fraction, budget: int = DEFAULT_ENUMERATION_BUDGET
) -> list[CyclotomicInteger]:
    """g on the transversal through the dual code.

    g(x) = (1/|C_dual|) * sum over c in C_dual of t**w(c) * psi(-<x, c>) with
    t = (1 - z) / (1 + (q - 1) z), in exact cyclotomic arithmetic. Values line
    up with ``coset_representatives(code)``.
    """
    z = Fraction(z)
    require_open_unit("z", z)
    code = require_linear(code)
    field, n = code.field, code.n
    p = field.p
    dual = dual_code(code)
    check_budget("coset character sums", field.q ** (n - code.k) * dual.size, budget)

    reps = labels(coset_representatives(code, budget))
    dual_words = labels(codeword_array(dual, budget))
    weights = np.count_nonzero(dual_words, axis=1)
    form = trace_form_table(field)
    t = (1 - z) / (1 + (field.q - 1) * z)

    values = []
    for rep in reps:
        residues = (-form[rep[np.newaxis, :], dual_words].sum(axis=1)) % p
        counts = np.zeros((p, n + 1), dtype=np.int64)
        np.add.at(counts, (residues, weights), 1)
        coeffs = tuple(evaluate([int(c) for c in row], t) / dual.size for row in counts)
        values.append(CyclotomicInteger(p, coeffs).reduce())
    return values


def statistical_distance(P: ProbabilityTable, Q: ProbabilityTable) -> Fraction:
    """(1/2) * sum |P(a) - Q(a)| over a common support.

    Raises:
        MwlabError: If the supports differ.
    """
    if P.keys() != Q.keys():
        raise MwlabError("statistical distance needs identical supports")
    return sum((abs(a - b) for a, b in zip(P.probs, Q.probs)), Fraction(0)) / 2


def gap_sum(dual: WeightEnumerator, q: int, z: Fraction) -> Fraction:
    """S(z) = sum over w >= 1 of A_dual_w * t**w, t = (1 - z) / (1 + (q - 1) z)."""
    t = (1 - z) / (1 + (q - 1) * z)
    return evaluate([0] + list(dual.coeffs[1:]), t)


def dual_enumerator(code: LinearCode, budget: int = DEFAULT_ENUMERATION_BUDGET) -> WeightEnumerator:
    """Dual weight enumerator by the MacWilliams transform of the primal one."""
    code = require_linear(code)
    return macwilliams_transform(weight_enumerator(code, budget), code.n, code.field.q, code.size)


def dual_gap_sum(code: LinearCode, z: Fraction, budget: int = DEFAULT_ENUMERATION_BUDGET) -> Fraction:
    """S(z) for the dual of ``code``.

    Raises:
        ParameterRangeError: Unless 0 < z < 1.
    """
    z = Fraction(z)
    require_open_unit("z", z)
    return gap_sum(dual_enumerator(code, budget), code.field.q, z)


def smoothing_parameter(
    code: LinearCode,
    epsilon: Fraction,
    tol: Fraction,
    budget: int = DEFAULT_ENUMERATION_BUDGET,
) -> SmoothingResult:
    """Bisect for inf{z in (0, 1) : S(z) < epsilon}.

    S is strictly decreasing from |C_dual| - 1 at z = 0 to 0 at z = 1, so the
    threshold is unique and the bracket keeps S(lo) >= epsilon > S(hi).

    Raises:
        ParameterRangeError: If epsilon <= 0 or tol is outside (0, 1).
    """
    epsilon, tol = Fraction(epsilon), Fraction(tol)
    if epsilon <= 0:
        raise ParameterRangeError("epsilon", epsilon, "(0,inf)")
    require_open_unit("tol", tol)

    dual = dual_enumerator(code, budget)
    q = code.field.q
    if epsilon >= dual.total - 1:
        zero = Fraction(0)
        return SmoothingResult(zero, (zero, zero), epsilon, tol)

    lo, hi = Fraction(0), Fraction(1)
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if gap_sum(dual, q, mid) < epsilon:
            hi = mid
        else:
            lo = mid
        logger.debug("bisection bracket [%s, %s]", lo, hi)
    return SmoothingResult((lo + hi) / 2, (lo, hi), epsilon, tol)


def smoothing_lower_bound(code: LinearCode, epsilon: Fraction) -> Fraction:
    """max(0, ((q**(n-k) / (1 + epsilon))**(1/n) - 1) / (q - 1)), rounded down.

    Raises:
        ParameterRangeError: If epsilon <= 0.
    """
    epsilon = Fraction(epsilon)
    if epsilon <= 0:
        raise ParameterRangeError("epsilon", epsilon, "(0,inf)")
    code = require_linear(code)
    q, n = code.field.q, code.n
    root = nth_root_floor(Fraction(q ** (n - code.k)) / (1 + epsilon), n)
    return max(Fraction(0), (root - 1) / (q - 1))


def verify_prop31(
    code: LinearCode, z: Fraction, budget: int = DEFAULT_ENUMERATION_BUDGET
) -> Prop31Report:
    """Exact distance of D_C from uniform on F_q^n / C against S(z)/2."""
    delta = statistical_distance(coset_distribution(code, z, budget), uniform_on_cosets(code, budget))
    return Prop31Report(delta, dual_gap_sum(code, z, budget) / 2)
