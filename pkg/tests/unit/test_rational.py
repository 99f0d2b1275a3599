"""Unit tests for rational helpers and integer polynomials."""

from fractions import Fraction

import pytest

from algebra.polynomial import ascending, evaluate, format_poly, linear, truncated_product
from algebra.rational import (
    exact_sqrt,
    format_rational,
    nth_root_floor,
    parse_rational,
    require_open_unit,
)
from utils.helpers import ParameterRangeError


class TestRational:
    """Tests for parsing, formatting and roots."""

    @pytest.mark.parametrize(
        "text,expected",
        [("3/4", Fraction(3, 4)), ("-2", Fraction(-2)), (" 6/8 ", Fraction(3, 4)), (5, Fraction(5))],
    )
    def test_parse(self, text, expected):
        """Test parsing integers and ratios."""
        assert parse_rational(text) == expected

    @pytest.mark.parametrize("text", ["0.5", "1/0", "a/b", ""])
    def test_parse_invalid(self, text):
        """Test that decimals and malformed ratios are rejected."""
        with pytest.raises(ParameterRangeError) as exc_info:
            parse_rational(text, "z")

        assert exc_info.value.name == "z"

    def test_format(self):
        """Test p/q rendering."""
        assert format_rational(Fraction(6, 8)) == "3/4"
        assert format_rational(Fraction(4, 2)) == "2"
        assert format_rational(0) == "0"

    @pytest.mark.parametrize("value", [0, 1, Fraction(3, 2), -1])
    def test_require_open_unit(self, value):
        """Test that values outside (0,1) are rejected."""
        with pytest.raises(ParameterRangeError):
            require_open_unit("z", value)

    def test_nth_root_exact(self):
        """Perfect powers give exact roots."""
        assert nth_root_floor(Fraction(8, 27), 3) == Fraction(2, 3)

    def test_nth_root_floor(self):
        """Irrational roots are rounded down to the dyadic grid."""
        root = nth_root_floor(Fraction(2), 2)
        assert root * root <= 2
        assert (root + Fraction(1, 2**64)) ** 2 > 2

    def test_exact_sqrt(self):
        """Test rational square roots."""
        assert exact_sqrt(Fraction(9, 4)) == Fraction(3, 2)
        assert exact_sqrt(Fraction(2)) is None
        assert exact_sqrt(Fraction(-1)) is None


class TestPolynomial:
    """Tests for integer polynomials."""

    def test_truncated_product(self):
        """(1 + z)^2 truncated at degree 1."""
        assert truncated_product([1, 1], [1, 1], 1) == [1, 2]
        assert truncated_product([1, 1], [1, 1], 4) == [1, 2, 1, 0, 0]

    def test_ascending(self):
        """Trailing zeros are dropped unless a length is given."""
        assert ascending(linear(1, 0)) == [1]
        assert ascending(linear(1, -1) ** 3) == [1, -3, 3, -1]
        assert ascending(linear(2, 1), 4) == [2, 1, 0, 0]

    def test_evaluate(self):
        """1 + 3z^2 at z = 1/2."""
        assert evaluate([1, 0, 3], Fraction(1, 2)) == Fraction(7, 4)

    def test_format(self):
        """Test polynomial rendering."""
        assert format_poly([1, 0, 3]) == "1+3z^2"
        assert format_poly([0, -1, 0, 2]) == "-z+2z^3"
        assert format_poly([0, 0]) == "0"
