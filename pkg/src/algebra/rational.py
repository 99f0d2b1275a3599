"""Exact rational helpers: parsing, formatting, range checks and roots."""

import re
from fractions import Fraction

from sympy import integer_nthroot

from utils.helpers import ParameterRangeError

_RATIONAL = re.compile(r"^\s*(-?\d+)\s*(?:/\s*(\d+))?\s*$")

ROOT_BITS = 64


def parse_rational(text: str | int | Fraction, name: str = "value") -> Fraction:
    """Parse ``"p/q"`` or an integer into a Fraction.

    Decimal notation is rejected: exact options must be written as ratios.

    Raises:
        ParameterRangeError: If the text is not an integer or ratio.
    """
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    match = _RATIONAL.match(text)
    if not match or match.group(2) == "0":
        raise ParameterRangeError(name, text, "rationals written as p/q")
    numerator, denominator = match.groups()
    return Fraction(int(numerator), int(denominator or 1))


def format_rational(value: Fraction | int) -> str:
    """Render as ``"p/q"``, or ``"p"`` for integers."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def require_open_unit(name: str, value: Fraction | float) -> None:
    """Raise unless 0 < value < 1."""
    if not 0 < value < 1:
        raise ParameterRangeError(name, value, "(0,1)")


def nth_root_floor(value: Fraction, n: int, bits: int = ROOT_BITS) -> Fraction:
    """Largest dyadic k / 2**bits not exceeding value**(1/n).

    The exact root is returned when numerator and denominator are perfect
    n-th powers.
    """
    if value < 0:
        raise ParameterRangeError("radicand", value, "[0, inf)")
    num_root, num_exact = integer_nthroot(value.numerator, n)
    den_root, den_exact = integer_nthroot(value.denominator, n)
    if num_exact and den_exact:
        return Fraction(int(num_root), int(den_root))
    scaled = (value.numerator << (bits * n)) // value.denominator
    root, _ = integer_nthroot(scaled, n)
    return Fraction(int(root), 1 << bits)


def exact_sqrt(value: Fraction) -> Fraction | None:
    """Rational square root, or None when value is not a rational square."""
    if value < 0:
        return None
    num_root, num_exact = integer_nthroot(value.numerator, 2)
    den_root, den_exact = integer_nthroot(value.denominator, 2)
    if num_exact and den_exact:
        return Fraction(int(num_root), int(den_root))
    return None
