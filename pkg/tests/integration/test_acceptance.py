"""Acceptance checks over seeded suites and exhaustive small instances."""

import math
from fractions import Fraction

import pytest

from algebra.field import field_make
from cli.runner import random_suite
from codes.linear_code import CodeTuple, code_from_generator
from config.parser import Settings
from enumerators.weight import verify_macwilliams
from lattice.construction_a import construction_a, lattice_enumerate_l1
from lattice.nu import nu_closed_form, nu_series, nu_truncated, verify_theorem3_numeric
from lattice.theta import jacobi_poisson_check, theta_relation_check
from transforms.fourier import ew_table, finite_fourier_transform, ft_ew_closed_form, matrix_points

pytestmark = pytest.mark.slow

Z_GRID = [Fraction(1, 3), Fraction(1, 2), Fraction(2, 5)]


def _shapes(max_space):
    """All (q, m, n) with q in {2, 3, 4, 5} and q^(mn) <= max_space."""
    shapes = []
    for q in (2, 3, 4, 5):
        for m in range(1, 13):
            for n in range(1, 13):
                if q ** (m * n) <= max_space:
                    shapes.append((q, m, n))
    return shapes


@pytest.mark.parametrize(
    "verb,count,seed",
    [
        ("verify-macwilliams", 100, 7),
        ("ft-check", 20, 1),
        ("poisson-check", 20, 2),
        ("prop31", 50, 3),
        ("smooth", 50, 5),
        ("theorem3", 100, 11),
    ],
)
def test_random_suites(verb, count, seed):
    """Every seeded case of every suite passes."""
    report = random_suite(verb, count, seed, Settings())
    assert report.results["failed_seeds"] == []
    assert report.results["passed"] == count


def test_suite_reproducible():
    """Reports for the same seed are identical."""
    first = random_suite("prop31", 10, 42, Settings()).to_json()
    assert random_suite("prop31", 10, 42, Settings()).to_json() == first


@pytest.mark.parametrize("q,m,n", _shapes(2**12))
def test_ew_closed_form_all_shapes(q, m, n):
    """FT(z^ew) matches its closed form on every small matrix space."""
    field = field_make(q)
    for z in Z_GRID:
        transformed = finite_fourier_transform(ew_table(field, m, n, z))
        for key, x in enumerate(matrix_points(field, m, n)):
            assert transformed.value(key) == ft_ew_closed_form(x, z)


def test_macwilliams_tuple_over_f5():
    """A pair of codes over F_5 satisfies the tuple identity."""
    field = field_make(5)
    first = code_from_generator(field, [[1, 2, 3]])
    second = code_from_generator(field, [[0, 1, 4], [1, 0, 1]])
    codes = CodeTuple((first, second))
    assert verify_macwilliams(codes).equal


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_shell_counts_all_binary_codes(n, all_binary_codes):
    """Shell counts of A(C) match the substitution for every C in F_2^n."""
    for code in all_binary_codes(n):
        counts = lattice_enumerate_l1(construction_a(code), 20).counts
        assert list(counts) == nu_series(code, 20)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_theta_all_binary_codes(n, all_binary_codes):
    """Theta coefficients up to q^24 for every C in F_2^n."""
    for code in all_binary_codes(n):
        assert theta_relation_check(code, 24).equal


@pytest.mark.parametrize("n", [1, 2, 3])
def test_truncation_tail_bounds(n, all_binary_codes):
    """Truncated nu-series stay within their tail bounds of the closed form."""
    tol = Fraction(1, 10**8)
    for code in all_binary_codes(n):
        for z in (Fraction(1, 5), Fraction(1, 2)):
            result = nu_truncated(construction_a(code), z, tol)
            assert 0 <= nu_closed_form(code, z) - result.value <= result.tail_bound


NUMERIC_CODES = [
    {"rows": [[1]], "n": 1},
    {"rows": [[1, 1]], "n": 2},
    {"rows": [[1, 1, 1]], "n": 3},
    {"rows": [[1, 1, 0, 0], [0, 0, 1, 1]], "n": 4},
]


@pytest.mark.parametrize("case", NUMERIC_CODES)
@pytest.mark.parametrize("beta", [0.5, 1.0])
def test_theorem3_numeric(case, beta):
    """The hyperbolic identity holds within tails plus rounding."""
    code = code_from_generator(field_make(2), case["rows"], case["n"])
    report = verify_theorem3_numeric(code, beta, Fraction(1, 10**10))
    assert report.difference <= report.tail + 1e-9


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("t", [0.7, 1.0, 1.5])
def test_jacobi_poisson_all_binary_codes(n, t, all_binary_codes):
    """Jacobi-Poisson residuals stay below 1e-8 for every C in F_2^n."""
    for code in all_binary_codes(n):
        report = jacobi_poisson_check(construction_a(code), t)
        assert report.residual < 1e-8
        assert math.isfinite(report.lhs)
