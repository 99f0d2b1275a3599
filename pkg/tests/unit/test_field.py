"""Unit tests for finite fields and the additive character."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from algebra.cyclotomic import CyclotomicInteger
from algebra.field import (
    additive_character,
    field_arith,
    field_make,
    trace_form_table,
    trace_table,
    trace_to_prime,
)
from utils.helpers import FieldError

FIELD_SIZES = [2, 3, 4, 5, 8, 9]


class TestFieldMake:
    """Tests for field_make."""

    def test_prime_field(self):
        """Test building a prime field."""
        field = field_make(5)
        assert (field.p, field.e, field.q) == (5, 1, 5)
        assert field.modulus is None
        assert str(field) == "F_5"

    def test_extension_default_modulus(self):
        """Test the built-in modulus for F_4."""
        field = field_make(4)
        assert (field.p, field.e) == (2, 2)
        assert field.modulus == (1, 1, 1)

    def test_user_modulus(self):
        """Test F_9 from x^2 + 2x + 2."""
        field = field_make(9, [2, 2, 1])
        assert field.modulus == (2, 2, 1)

    @pytest.mark.parametrize("q", [0, 1, 6, 10, 12])
    def test_not_prime_power(self, q):
        """Test that non prime powers are rejected."""
        with pytest.raises(FieldError):
            field_make(q)

    def test_reducible_modulus(self):
        """Test that x^2 + 1 = (x + 1)^2 over F_2 is rejected."""
        with pytest.raises(FieldError) as exc_info:
            field_make(4, [1, 0, 1])

        assert "reducible" in exc_info.value.message

    def test_wrong_degree_modulus(self):
        """Test that a modulus of the wrong degree is rejected."""
        with pytest.raises(FieldError):
            field_make(4, [1, 1])

    def test_missing_table_entry(self):
        """Test that q without a built-in modulus needs one."""
        with pytest.raises(FieldError):
            field_make(32)

    @pytest.mark.parametrize("q", [2.0, 4.5, "4", True, None])
    def test_non_integer_q(self, q):
        """Test that q must be an integer."""
        with pytest.raises(FieldError):
            field_make(q)

    @pytest.mark.parametrize("modulus", ["x^2+x+1", [1, "1", 1], [1, 1.0, 1], [1, True, 1]])
    def test_non_integer_modulus(self, modulus):
        """Test that modulus coefficients must be integers."""
        with pytest.raises(FieldError) as exc_info:
            field_make(4, modulus)

        assert "integer coefficients" in exc_info.value.message


class TestElements:
    """Tests for element labels and arithmetic."""

    def test_omega_squared(self, f4):
        """In F_4 = F_2[w]/(w^2+w+1), w^2 = w + 1."""
        omega = f4.element(2)
        assert int(field_arith("mul", omega, omega)) == 3

    def test_label_roundtrip(self):
        """Test polynomial-basis labels in F_9."""
        field = field_make(9)
        element = field.from_coeffs((1, 2))
        assert int(element) == 7
        assert field.coeffs(element) == (1, 2)

    def test_label_out_of_range(self, f4):
        """Test that labels outside [0, q) are rejected."""
        with pytest.raises(FieldError):
            f4.element(4)
        with pytest.raises(FieldError):
            f4.array([[0, 5]])

    def test_inverse_of_zero(self, f3):
        """Test that zero has no inverse."""
        with pytest.raises(FieldError):
            field_arith("inv", f3.zero)

    def test_inverse(self, f4):
        """Test that a * a^-1 = 1 for every nonzero element."""
        for label in range(1, 4):
            a = f4.element(label)
            assert int(field_arith("mul", a, field_arith("inv", a))) == 1

    def test_prime_field_arithmetic(self, f3):
        """2 + 2 = 1 in F_3 and 3^-1 = 2 in F_5."""
        assert int(field_arith("add", f3.element(2), f3.element(2))) == 1
        assert int(field_arith("inv", field_make(5).element(3))) == 2
        assert int(field_arith("mul", field_make(7).element(3), field_make(7).element(5))) == 1

    def test_mixed_fields(self, f2, f3):
        """Test that operands from different fields are rejected."""
        with pytest.raises(FieldError):
            field_arith("add", f2.one, f3.one)

    @settings(max_examples=50, deadline=None)
    @given(
        q=st.sampled_from(FIELD_SIZES),
        a=st.integers(0, 8),
        b=st.integers(0, 8),
        c=st.integers(0, 8),
    )
    def test_distributive(self, q, a, b, c):
        """a * (b + c) = a*b + a*c."""
        field = field_make(q)
        x, y, z = (field.element(v % q) for v in (a, b, c))
        left = field_arith("mul", x, field_arith("add", y, z))
        right = field_arith("add", field_arith("mul", x, y), field_arith("mul", x, z))
        assert int(left) == int(right)


class TestTrace:
    """Tests for the absolute trace."""

    def test_prime_field_trace_is_identity(self, f3):
        """Over F_p the trace is the identity."""
        assert list(trace_table(f3)) == [0, 1, 2]

    def test_f4_trace(self, f4):
        """Tr(0) = Tr(1) = 0 and Tr(w) = Tr(w^2) = 1 in F_4."""
        assert list(trace_table(f4)) == [0, 0, 1, 1]

    def test_f9_trace_of_i(self):
        """With i^2 = -1, Tr(i) = i + i^3 = 0."""
        field = field_make(9)
        i = field.element(3)
        assert int(field_arith("mul", i, i)) == 2
        assert trace_to_prime(i) == 0

    def test_f9_trace_of_one(self):
        """Tr(1) = e mod p."""
        assert trace_to_prime(field_make(9).one) == 2

    @settings(max_examples=50, deadline=None)
    @given(q=st.sampled_from(FIELD_SIZES), a=st.integers(0, 8), b=st.integers(0, 8))
    def test_trace_additive(self, q, a, b):
        """Tr(a + b) = Tr(a) + Tr(b) mod p."""
        field = field_make(q)
        x, y = field.element(a % q), field.element(b % q)
        total = trace_to_prime(field_arith("add", x, y))
        assert total == (trace_to_prime(x) + trace_to_prime(y)) % field.p

    def test_trace_form_symmetric(self, f4):
        """Tr(ab) is symmetric in a and b."""
        table = trace_form_table(f4)
        assert (table == table.T).all()
        assert table.shape == (4, 4)

    @pytest.mark.parametrize("q", FIELD_SIZES)
    def test_trace_form_nondegenerate(self, q):
        """Only a = 0 pairs to zero with every b."""
        table = trace_form_table(field_make(q))
        zero_rows = [a for a in range(q) if not table[a].any()]
        assert zero_rows == [0]


class TestAdditiveCharacter:
    """Tests for psi = zeta_p^Tr."""

    def test_character_of_zero(self, f4):
        """psi(0) = 1."""
        assert additive_character(f4.zero) == 1

    def test_binary_character(self, f2):
        """Over F_2, psi(1) = -1."""
        assert additive_character(f2.one) == -1

    @pytest.mark.parametrize("q", FIELD_SIZES)
    def test_character_sum_vanishes(self, q):
        """The sum of psi over F_q is 0."""
        field = field_make(q)
        total = CyclotomicInteger.zero(field.p)
        for label in range(q):
            total = total + additive_character(field.element(label))
        assert total.is_zero()
