"""Unit tests for the finite Fourier transform and Poisson summation."""

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from algebra.cyclotomic import CyclotomicInteger
from algebra.field import field_make, labels
from codes.linear_code import CodeTuple, code_from_generator, random_code
from transforms.fourier import (
    characteristic_table,
    constant_table,
    delta_table,
    ew_table,
    finite_fourier_transform,
    fourier_transform_direct,
    ft_characteristic,
    ft_ew_closed_form,
    inverse_ft,
    matrix_pairing,
    matrix_points,
    poisson_check,
    random_integer_table,
    table_from_function,
    walsh_hadamard,
)
from utils.helpers import BudgetExceededError, CodeError, FieldError

SHAPES = [(2, 1, 1), (2, 2, 2), (3, 1, 2), (4, 1, 2), (5, 1, 1), (3, 2, 1)]


def _negated_keys(table):
    """Key of -x for each key x."""
    points = matrix_points(table.field, table.m, table.n)
    return [table.key(-x) for x in points]


class TestFunctionTable:
    """Tests for MatrixFunctionTable."""

    def test_key_order(self, f3):
        """Keys read entries row-major, most significant first."""
        table = delta_table(f3, 2, 1)
        assert table.key(f3.array([[0], [0]])) == 0
        assert table.key(f3.array([[1], [2]])) == 5
        assert labels(matrix_points(f3, 2, 1)[5]).tolist() == [[1], [2]]

    def test_value(self, f2):
        """Test reading a value back."""
        table = ew_table(f2, 1, 2, Fraction(1, 3))
        assert table.value(0) == 1
        assert table.value(f2.array([[1, 1]])) == Fraction(1, 9)

    def test_equality_after_scaling(self, f2):
        """Tables with proportional numerators and denominators are equal."""
        a = table_from_function(f2, 1, 1, lambda x: Fraction(1, 2))
        b = constant_table(f2, 1, 1, 2)
        assert a != b
        assert a == table_from_function(f2, 1, 1, lambda x: Fraction(2, 4))

    def test_wrong_shape(self, f2):
        """Test that the table must cover every matrix."""
        table = delta_table(f2, 1, 2)
        with pytest.raises(FieldError):
            table.key(f2.array([[1, 0, 1]]))


class TestPairing:
    """Tests for <x, y> = Tr(x^T y)."""

    def test_pairing_is_entrywise_dot(self, f3):
        """The trace of x^T y is the sum of entrywise products."""
        rng = np.random.default_rng(1)
        for _ in range(10):
            x = f3.array(rng.integers(0, 3, size=(2, 3)))
            y = f3.array(rng.integers(0, 3, size=(2, 3)))
            expected = int((labels(x) * labels(y)).sum() % 3)
            assert int(matrix_pairing(x, y)) == expected

    def test_shape_mismatch(self, f2):
        """Test that shapes must agree."""
        with pytest.raises(FieldError):
            matrix_pairing(f2.array([[1, 0]]), f2.array([[1], [0]]))


class TestFourierTransform:
    """Tests for the exact transform."""

    @pytest.mark.parametrize("q,m,n", SHAPES)
    def test_delta_transforms_to_one(self, q, m, n):
        """FT(delta_0) = 1."""
        field = field_make(q)
        assert finite_fourier_transform(delta_table(field, m, n)) == constant_table(field, m, n)

    @pytest.mark.parametrize("q,m,n", SHAPES)
    def test_one_transforms_to_delta(self, q, m, n):
        """FT(1) = q^(mn) delta_0."""
        field = field_make(q)
        transformed = finite_fourier_transform(constant_table(field, m, n))
        assert transformed.value(0) == q ** (m * n)
        assert all(transformed.value(i).is_zero() for i in range(1, transformed.size))

    @pytest.mark.parametrize("q,m,n", SHAPES)
    def test_matches_direct_sum(self, q, m, n):
        """The separable transform agrees with the double loop."""
        field = field_make(q)
        f = random_integer_table(field, m, n, np.random.default_rng(q * 100 + m * 10 + n))
        assert finite_fourier_transform(f) == fourier_transform_direct(f)

    @pytest.mark.parametrize("q,m,n", SHAPES)
    def test_inverse(self, q, m, n):
        """inverse_ft undoes the transform."""
        field = field_make(q)
        f = random_integer_table(field, m, n, np.random.default_rng(7))
        assert inverse_ft(finite_fourier_transform(f)) == f

    @pytest.mark.parametrize("q,m,n", [(3, 1, 2), (4, 1, 2), (5, 1, 1)])
    def test_double_transform_negates(self, q, m, n):
        """FT(FT f)(x) = q^(mn) f(-x)."""
        field = field_make(q)
        f = random_integer_table(field, m, n, np.random.default_rng(3))
        twice = finite_fourier_transform(finite_fourier_transform(f))
        for key, neg in enumerate(_negated_keys(f)):
            assert twice.value(key) == f.value(neg) * f.size

    def test_budget(self, f2):
        """Test that the transform respects the budget."""
        with pytest.raises(BudgetExceededError):
            finite_fourier_transform(delta_table(f2, 2, 2), budget=8)

    def test_walsh_hadamard(self, f2):
        """The butterfly agrees with the exact transform over F_2."""
        f = random_integer_table(f2, 2, 2, np.random.default_rng(11))
        assert walsh_hadamard(f) == finite_fourier_transform(f)

    def test_walsh_hadamard_binary_only(self, f3):
        """Test that the butterfly needs q = 2."""
        with pytest.raises(FieldError):
            walsh_hadamard(delta_table(f3, 1, 1))

    def test_cyclotomic_values(self, f3):
        """The transform of delta at 1 is psi(<x, 1>), irrational for q = 3."""
        transformed = finite_fourier_transform(delta_table(f3, 1, 1, key=1))
        assert transformed.value(1) == CyclotomicInteger.root_power(3, 1)
        assert transformed.value(2) == CyclotomicInteger.root_power(3, 2)


class TestCharacteristicFunction:
    """Tests for the transform of a code indicator."""

    def test_self_dual_code(self, f2, selfdual2):
        """FT of 1_C is |C| on C_dual and 0 elsewhere."""
        codes = CodeTuple((selfdual2,))
        assert ft_characteristic(codes, f2.array([[1, 1]])) == 2
        assert ft_characteristic(codes, f2.array([[1, 0]])) == 0
        assert ft_characteristic(codes, f2.array([[0, 0]])) == 2

    def test_matches_table_transform(self, f3):
        """Row-product evaluation agrees with the full table transform."""
        codes = CodeTuple((code_from_generator(f3, [[1, 2]]), code_from_generator(f3, [], n=2)))
        table = finite_fourier_transform(characteristic_table(codes))
        for key, x in enumerate(matrix_points(f3, 2, 2)):
            assert ft_characteristic(codes, x) == table.value(key)

    def test_point_shape(self, f2, selfdual2):
        """Test that the point must be an m x n matrix."""
        with pytest.raises(CodeError):
            ft_characteristic(CodeTuple((selfdual2,)), f2.array([[1, 1, 0]]))


class TestEffectiveWeightClosedForm:
    """Tests for the transform of z^ew."""

    def test_one_coordinate(self, f2):
        """Over F_2^1: FT(z^ew) is 1 + z at 0 and 1 - z at 1."""
        z = Fraction(1, 3)
        assert ft_ew_closed_form(f2.array([[0]]), z) == Fraction(4, 3)
        assert ft_ew_closed_form(f2.array([[1]]), z) == Fraction(2, 3)

    @pytest.mark.parametrize("q,m,n", SHAPES)
    @pytest.mark.parametrize("z", [Fraction(1, 3), Fraction(1, 2), Fraction(2, 5)])
    def test_closed_form(self, q, m, n, z):
        """FT(z^ew) = (1 - z)^ew (1 + (q^m - 1) z)^(n - ew) everywhere."""
        field = field_make(q)
        transformed = finite_fourier_transform(ew_table(field, m, n, z))
        for key, x in enumerate(matrix_points(field, m, n)):
            assert transformed.value(key) == ft_ew_closed_form(x, z)


class TestPoisson:
    """Tests for the finite Poisson summation formula."""

    def test_delta(self, f3):
        """Both sides are 1 for delta_0."""
        codes = CodeTuple((code_from_generator(f3, [[1, 1, 2]]),))
        report = poisson_check(codes, delta_table(f3, 1, 3))
        assert report.equal
        assert report.lhs == 1

    def test_ew_table(self, selfdual2):
        """Summing z^ew over the dual pair at z = 1/2 gives 1 + 3/4."""
        codes = CodeTuple((selfdual2, selfdual2))
        report = poisson_check(codes, ew_table(selfdual2.field, 2, 2, Fraction(1, 2)))
        assert report.lhs == Fraction(7, 4)
        assert report.equal

    @settings(max_examples=20, deadline=None)
    @given(seed=st.integers(0, 100_000), q=st.sampled_from([2, 3, 4]), n=st.integers(1, 3))
    def test_random_tables(self, seed, q, n):
        """Poisson summation holds for random integer tables."""
        rng = np.random.default_rng(seed)
        field = field_make(q)
        codes = CodeTuple((random_code(field, n, rng),))
        assert poisson_check(codes, random_integer_table(field, 1, n, rng)).equal

    def test_shape_mismatch(self, f2, rep3):
        """Test that the table must match the tuple."""
        with pytest.raises(CodeError):
            poisson_check(CodeTuple((rep3,)), delta_table(f2, 1, 2))
