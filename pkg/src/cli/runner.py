"""Command dispatch for the mwlab verbs and their seeded random suites."""

import time
from collections.abc import Callable
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any

import numpy as np

from algebra.field import FieldSpec, field_make
from algebra.rational import format_rational, parse_rational
from cli.reports import Report
from codes.linear_code import (
    CodeTuple,
    LinearCode,
    WordList,
    code_from_json,
    random_code,
    require_linear,
)
from config.parser import Settings
from distribution.macwilliams import (
    coset_distribution,
    dual_enumerator,
    gap_sum,
    macwilliams_distribution,
    smoothing_lower_bound,
    smoothing_parameter,
    verify_prop31,
)
from enumerators.weight import (
    effective_length_enumerator,
    macwilliams_transform,
    verify_macwilliams,
    weight_enumerator,
)
from lattice.construction_a import construction_a, lattice_enumerate_l1
from lattice.nu import (
    DEFAULT_NUMERIC_TOL,
    dual_lattice_nu,
    nu_closed_form,
    nu_series,
    nu_truncated,
    verify_theorem3_exact,
    verify_theorem3_numeric,
)
from lattice.theta import jacobi_poisson_check, theta_relation_check
from transforms.fourier import (
    MatrixFunctionTable,
    characteristic_table,
    ew_table,
    finite_fourier_transform,
    ft_ew_closed_form,
    matrix_points,
    poisson_check,
    random_integer_table,
    table_from_values,
)
from utils.helpers import ErrorCode, MwlabError, ParameterRangeError, get_logger, read_json

logger = get_logger(__name__)

DEFAULT_SMOOTH_TOL = Fraction(1, 10**12)
DEFAULT_THETA_TERMS = 16
DEFAULT_JACOBI_TOL = 1e-10

PROP31_Z_GRID = (Fraction(1, 4), Fraction(1, 3), Fraction(1, 2), Fraction(3, 4))
THEOREM3_U_GRID = (Fraction(1, 5), Fraction(1, 3), Fraction(1, 2), Fraction(3, 4))
FT_Z_GRID = (Fraction(1, 3), Fraction(1, 2), Fraction(2, 5))
SMOOTH_EPS_GRID = (Fraction(1, 10), Fraction(1, 3), Fraction(1))
SUITE_SMOOTH_TOL = Fraction(1, 10**6)


@dataclass(frozen=True)
class CommandRequest:
    """One invocation: verb, code files, string options and an optional seed.

    Without code files and with a seed, the verb runs as a random suite of
    ``count`` cases.
    """

    verb: str
    inputs: tuple[Path, ...] = ()
    params: dict[str, str | None] = field(default_factory=dict)
    seed: int | None = None
    count: int = 1

    def has(self, name: str) -> bool:
        return self.params.get(name) is not None

    def _raw(self, name: str, default: Any) -> str | None:
        raw = self.params.get(name)
        if raw is None and default is None:
            raise MwlabError(f"Missing required option --{name}")
        return raw

    def rational(self, name: str, default: Fraction | None = None) -> Fraction:
        raw = self._raw(name, default)
        return Fraction(default) if raw is None else parse_rational(raw, name)

    def real(self, name: str, default: float | None = None) -> float:
        """A float option; ratios like ``1/1000`` are accepted too."""
        raw = self._raw(name, default)
        if raw is None:
            return float(default)  # type: ignore[arg-type]
        try:
            return float(parse_rational(raw, name))
        except ParameterRangeError:
            pass
        try:
            return float(raw)
        except ValueError:
            raise ParameterRangeError(name, raw, "decimal numbers")

    def integer(self, name: str, default: int | None = None) -> int:
        raw = self._raw(name, default)
        if raw is None:
            return int(default)  # type: ignore[arg-type]
        try:
            return int(raw)
        except ValueError:
            raise ParameterRangeError(name, raw, "integers")

    def echo(self) -> dict[str, Any]:
        out: dict[str, Any] = {"files": [str(p) for p in self.inputs]}
        out.update({k: v for k, v in sorted(self.params.items()) if v is not None})
        if self.seed is not None:
            out["seed"] = self.seed
        return out


def parse_code_file(path: Path) -> LinearCode | WordList:
    """Read a code file.

    Raises:
        CodeFileError: If the file is missing or not JSON.
        FieldError: If q is not a supported prime power.
        CodeError: If the generators or words are malformed.
    """
    return code_from_json(read_json(Path(path)))


def _single_code(request: CommandRequest) -> LinearCode | WordList:
    if not request.inputs:
        raise MwlabError(f"{request.verb} needs a code file")
    return parse_code_file(request.inputs[0])


def _code_tuple(request: CommandRequest) -> CodeTuple:
    """All given codes, or the single code repeated ``m`` times."""
    if not request.inputs:
        raise MwlabError(f"{request.verb} needs a code file")
    codes = [require_linear(parse_code_file(path)) for path in request.inputs]
    m = request.integer("m", 1)
    if m < 1:
        raise ParameterRangeError("m", m, "[1,inf)")
    if len(codes) == 1:
        codes = codes * m
    elif request.has("m") and m != len(codes):
        raise MwlabError(f"--m {m} disagrees with {len(codes)} code files")
    return CodeTuple(tuple(codes))


def _code_info(request: CommandRequest, settings: Settings) -> Report:
    code = _single_code(request)
    W = weight_enumerator(code, settings.enumeration_budget)
    results: dict[str, Any] = {
        "q": code.field.q,
        "n": code.n,
        "size": str(code.size),
        "linear": isinstance(code, LinearCode),
        "enumerator": str(W),
        "minimum_distance": W.minimum_distance,
    }
    if code.field.modulus is not None:
        results["modulus"] = list(code.field.modulus)
    if isinstance(code, LinearCode):
        results["k"] = code.k
        results["generators"] = [list(row) for row in code.generator_labels()]
    return Report(request.verb, request.echo(), results)


def _enum(request: CommandRequest, settings: Settings) -> Report:
    budget = settings.enumeration_budget
    if len(request.inputs) > 1 or request.integer("m", 1) > 1:
        codes = _code_tuple(request)
        W = effective_length_enumerator(codes, budget)
        results = {"enumerator": str(W), **W.to_json(), "m": codes.m}
    else:
        code = _single_code(request)
        W = weight_enumerator(code, budget)
        results = {"enumerator": str(W), **W.to_json()}
        if isinstance(code, LinearCode):
            dual = macwilliams_transform(W, code.n, code.field.q, code.size)
            results["dual_enumerator"] = str(dual)
    return Report(request.verb, request.echo(), results)


def _verify_macwilliams(request: CommandRequest, settings: Settings) -> Report:
    codes = _code_tuple(request)
    report = verify_macwilliams(codes, settings.enumeration_budget)
    results = {
        "m": codes.m,
        "dual_enumerated": str(report.lhs),
        "dual_transformed": str(report.rhs),
    }
    return Report(request.verb, request.echo(), results, report.equal)


def _scaled(table: MatrixFunctionTable, factor: int) -> MatrixFunctionTable:
    return MatrixFunctionTable(
        table.field, table.m, table.n, table.numerators * factor, table.denominator
    ).normalized()


def ft_identities(codes: CodeTuple, z: Fraction, budget: int) -> dict[str, Any]:
    """Check FT(chi_C) = |C| chi_C_dual and FT(z**ew) against its closed form."""
    chi = finite_fourier_transform(characteristic_table(codes, budget), budget)
    characteristic_ok = chi == _scaled(characteristic_table(codes.dual(), budget), codes.size)

    field_, m, n = codes.field, codes.m, codes.n
    transformed = finite_fourier_transform(ew_table(field_, m, n, z), budget)
    closed = table_from_values(
        field_, m, n, (ft_ew_closed_form(x, z) for x in matrix_points(field_, m, n))
    )
    return {
        "points": field_.q ** (m * n),
        "z": format_rational(z),
        "characteristic_ok": characteristic_ok,
        "closed_form_ok": transformed == closed,
    }


def _ft_check(request: CommandRequest, settings: Settings) -> Report:
    results = ft_identities(
        _code_tuple(request), request.rational("z", Fraction(1, 2)), settings.transform_budget
    )
    passed = results["characteristic_ok"] and results["closed_form_ok"]
    return Report(request.verb, request.echo(), results, passed)


def _poisson_check(request: CommandRequest, settings: Settings) -> Report:
    codes = _code_tuple(request)
    if request.has("z"):
        f = ew_table(codes.field, codes.m, codes.n, request.rational("z"))
        source = "z^ew"
    else:
        rng = np.random.default_rng(request.seed or 0)
        f = random_integer_table(codes.field, codes.m, codes.n, rng)
        source = "random integers"
    report = poisson_check(codes, f, settings.transform_budget)
    results = {"function": source, "lhs": str(report.lhs), "rhs": str(report.rhs)}
    return Report(request.verb, request.echo(), results, report.equal)


def _dist(request: CommandRequest, settings: Settings) -> Report:
    code = _single_code(request)
    z = request.rational("z")
    budget = settings.enumeration_budget
    results = {"macwilliams": macwilliams_distribution(code, z, budget).to_json()}
    if isinstance(code, LinearCode):
        results["coset"] = coset_distribution(code, z, budget).to_json()
    return Report(request.verb, request.echo(), results)


def _smooth(request: CommandRequest, settings: Settings) -> Report:
    code = require_linear(_single_code(request))
    epsilon = request.rational("eps")
    tol = request.rational("tol", DEFAULT_SMOOTH_TOL)
    result = smoothing_parameter(code, epsilon, tol, settings.enumeration_budget)
    bound = smoothing_lower_bound(code, epsilon)
    results = {**result.to_json(), "lower_bound": format_rational(bound)}
    return Report(request.verb, request.echo(), results, bound <= result.eta + tol)


def _prop31(request: CommandRequest, settings: Settings) -> Report:
    code = require_linear(_single_code(request))
    report = verify_prop31(code, request.rational("z"), settings.enumeration_budget)
    return Report(request.verb, request.echo(), report.to_json(), report.passed)


def _lattice_nu(request: CommandRequest, settings: Settings) -> Report:
    code = require_linear(_single_code(request))
    lat = construction_a(code)
    z = request.rational("z")
    tol = request.rational("tol", DEFAULT_NUMERIC_TOL)
    closed = nu_closed_form(code, z)
    series = nu_truncated(lat, z, tol, settings.series_budget)
    results: dict[str, Any] = {
        "det": format_rational(lat.det),
        "closed_form": format_rational(closed),
        "series": series.to_json(),
        "dual_nu": format_rational(dual_lattice_nu(code, z)),
    }
    passed = abs(closed - series.value) <= series.tail_bound
    if request.has("terms"):
        M = request.integer("terms")
        shells = lattice_enumerate_l1(lat, M, settings.series_budget).counts
        expected = nu_series(code, M)
        results["shell_counts"] = [str(c) for c in shells]
        results["shell_counts_closed_form"] = [str(c) for c in expected]
        passed = passed and list(shells) == expected
    return Report(request.verb, request.echo(), results, passed)


def _lattice_theta(request: CommandRequest, settings: Settings) -> Report:
    code = require_linear(_single_code(request))
    report = theta_relation_check(
        code, request.integer("terms", DEFAULT_THETA_TERMS), settings.series_budget
    )
    return Report(request.verb, request.echo(), report.to_json(), report.equal)


def _theorem3(request: CommandRequest, settings: Settings) -> Report:
    code = require_linear(_single_code(request))
    if not request.has("u") and not request.has("beta"):
        raise MwlabError("theorem3 needs --u (exact path) or --beta (numeric path)")
    results: dict[str, Any] = {}
    passed = True
    if request.has("u"):
        exact = verify_theorem3_exact(code, request.rational("u"), settings.enumeration_budget)
        results["exact"] = exact.to_json()
        passed = passed and exact.residual == 0
    if request.has("beta"):
        numeric = verify_theorem3_numeric(
            code,
            request.real("beta"),
            request.rational("tol", DEFAULT_NUMERIC_TOL),
            settings.series_budget,
        )
        results["numeric"] = numeric.to_json()
        passed = passed and numeric.passed
    return Report(request.verb, request.echo(), results, passed)


def _jacobi_poisson(request: CommandRequest, settings: Settings) -> Report:
    lat = construction_a(require_linear(_single_code(request)))
    report = jacobi_poisson_check(
        lat,
        request.real("t", 1.0),
        request.real("tol", DEFAULT_JACOBI_TOL),
        settings.enumeration_budget,
    )
    return Report(request.verb, request.echo(), report.to_json(), report.passed)


HANDLERS: dict[str, Callable[[CommandRequest, Settings], Report]] = {
    "code-info": _code_info,
    "enum": _enum,
    "verify-macwilliams": _verify_macwilliams,
    "ft-check": _ft_check,
    "poisson-check": _poisson_check,
    "dist": _dist,
    "smooth": _smooth,
    "prop31": _prop31,
    "lattice-nu": _lattice_nu,
    "lattice-theta": _lattice_theta,
    "theorem3": _theorem3,
    "jacobi-poisson": _jacobi_poisson,
}


def _largest_length(q: int, m: int, max_space: int, cap: int) -> int:
    n = 1
    while n < cap and q ** (m * (n + 1)) <= max_space:
        n += 1
    return n


@dataclass(frozen=True)
class SuiteShape:
    """Field size and code length pinned by --q and --n; None draws at random."""

    q: int | None = None
    n: int | None = None

    def to_json(self) -> dict[str, int]:
        return {k: v for k, v in (("q", self.q), ("n", self.n)) if v is not None}


def _random_field(rng: np.random.Generator, sizes: tuple[int, ...], shape: SuiteShape) -> FieldSpec:
    if shape.q is None:
        return field_make(int(rng.choice(sizes)))
    if shape.q not in sizes:
        raise ParameterRangeError("q", shape.q, "{" + ", ".join(map(str, sizes)) + "}")
    return field_make(shape.q)


def random_tuple(
    rng: np.random.Generator,
    sizes: tuple[int, ...],
    max_m: int,
    max_space: int,
    cap: int = 16,
    shape: SuiteShape = SuiteShape(),
) -> CodeTuple:
    """Random tuple with q**(mn) <= max_space, so both it and its dual stay small.

    A pinned length is used as given and left to the budgets.
    """
    field_ = _random_field(rng, sizes, shape)
    m = int(rng.integers(1, max_m + 1))
    if shape.n is None:
        n = int(rng.integers(1, _largest_length(field_.q, m, max_space, cap) + 1))
    else:
        n = shape.n
    return CodeTuple(tuple(random_code(field_, n, rng) for _ in range(m)))


def _random_single(
    rng: np.random.Generator, sizes: tuple[int, ...], max_space: int, cap: int, shape: SuiteShape
) -> LinearCode:
    return random_tuple(rng, sizes, 1, max_space, cap, shape).codes[0]


def _case_macwilliams(rng: np.random.Generator, settings: Settings, shape: SuiteShape) -> bool:
    codes = random_tuple(rng, (2, 3, 4, 5), 3, 2**16, shape=shape)
    return verify_macwilliams(codes, settings.enumeration_budget).equal


def _case_ft(rng: np.random.Generator, settings: Settings, shape: SuiteShape) -> bool:
    codes = random_tuple(rng, (2, 3), 2, 2**12, shape=shape)
    z = FT_Z_GRID[int(rng.integers(len(FT_Z_GRID)))]
    results = ft_identities(codes, z, settings.transform_budget)
    return results["characteristic_ok"] and results["closed_form_ok"]


def _case_poisson(rng: np.random.Generator, settings: Settings, shape: SuiteShape) -> bool:
    codes = random_tuple(rng, (2, 3), 2, 2**12, shape=shape)
    f = random_integer_table(codes.field, codes.m, codes.n, rng)
    return poisson_check(codes, f, settings.transform_budget).equal


def _case_prop31(rng: np.random.Generator, settings: Settings, shape: SuiteShape) -> bool:
    code = _random_single(rng, (2, 3), 2**10, 8, shape)
    return all(verify_prop31(code, z, settings.enumeration_budget).passed for z in PROP31_Z_GRID)


def _case_smooth(rng: np.random.Generator, settings: Settings, shape: SuiteShape) -> bool:
    code = _random_single(rng, (2, 3), 2**10, 8, shape)
    epsilon = SMOOTH_EPS_GRID[int(rng.integers(len(SMOOTH_EPS_GRID)))]
    result = smoothing_parameter(code, epsilon, SUITE_SMOOTH_TOL, settings.enumeration_budget)
    lo, hi = result.bracket
    if smoothing_lower_bound(code, epsilon) > result.eta + SUITE_SMOOTH_TOL:
        return False
    if result.eta == 0:
        return True
    dual = dual_enumerator(code, settings.enumeration_budget)
    q = code.field.q
    return hi - lo <= SUITE_SMOOTH_TOL and gap_sum(dual, q, lo) >= epsilon > gap_sum(dual, q, hi)


def _case_theorem3(rng: np.random.Generator, settings: Settings, shape: SuiteShape) -> bool:
    code = _random_single(rng, (2,), 2**10, 10, shape)
    return all(
        verify_theorem3_exact(code, u, settings.enumeration_budget).residual == 0
        for u in THEOREM3_U_GRID
    )


SUITE_CASES: dict[str, Callable[[np.random.Generator, Settings, SuiteShape], bool]] = {
    "verify-macwilliams": _case_macwilliams,
    "ft-check": _case_ft,
    "poisson-check": _case_poisson,
    "prop31": _case_prop31,
    "smooth": _case_smooth,
    "theorem3": _case_theorem3,
}

SUITE_ALIASES = {"theorem3-exact": "theorem3"}


def random_suite(
    verb: str, count: int, seed: int, settings: Settings, shape: SuiteShape = SuiteShape()
) -> Report:
    """Run ``count`` random cases; case i draws from default_rng(seed + i).

    Raises:
        MwlabError: If the verb has no random suite, count < 1, or the pinned
            q or n is outside what the suite draws from.
    """
    case = SUITE_CASES.get(SUITE_ALIASES.get(verb, verb))
    if case is None:
        raise MwlabError(
            f"{verb} has no random suite",
            suggestion=f"Suites exist for: {', '.join([*SUITE_CASES, *SUITE_ALIASES])}",
        )
    if count < 1:
        raise ParameterRangeError("count", count, "[1,inf)")
    if shape.n is not None and shape.n < 1:
        raise ParameterRangeError("n", shape.n, "[1,inf)")

    failed = []
    for i in range(count):
        if not case(np.random.default_rng(seed + i), settings, shape):
            logger.warning("%s failed for seed %d", verb, seed + i)
            failed.append(seed + i)
    results = {"cases": count, "passed": count - len(failed), "failed_seeds": failed}
    inputs = {"seed": seed, "count": count, **shape.to_json()}
    return Report(verb, inputs, results, not failed)


def run(request: CommandRequest, settings: Settings) -> tuple[ErrorCode, Report]:
    """Execute one request.

    Returns:
        The exit code (1 when an identity failed) and the report.

    Raises:
        MwlabError: On input errors; the error carries its exit code.
    """
    start = time.perf_counter()
    if not request.inputs and request.seed is not None:
        shape = SuiteShape(
            request.integer("q") if request.has("q") else None,
            request.integer("n") if request.has("n") else None,
        )
        report = random_suite(request.verb, request.count, request.seed, settings, shape)
    else:
        handler = HANDLERS.get(request.verb)
        if handler is None:
            raise MwlabError(f"Unknown command: {request.verb}")
        report = handler(request, settings)
    logger.info("%s finished in %.1f ms", request.verb, (time.perf_counter() - start) * 1000)
    code = ErrorCode.VERIFICATION_FAILED if report.passed is False else ErrorCode.SUCCESS
    return code, report
