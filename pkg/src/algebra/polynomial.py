"""Integer polynomials in one indeterminate z, backed by sympy."""

from fractions import Fraction

from sympy import ZZ, Poly, Symbol

Z = Symbol("z")


def int_poly(coeffs: list[int] | tuple[int, ...]) -> Poly:
    """Polynomial sum(coeffs[i] * z**i) over the integers."""
    return Poly(list(reversed([int(c) for c in coeffs])) or [0], Z, domain=ZZ)


def linear(c0: int, c1: int) -> Poly:
    """The polynomial c0 + c1*z."""
    return int_poly([c0, c1])


def ascending(poly: Poly, length: int | None = None) -> list[int]:
    """Coefficients a_0, a_1, ... padded (or truncated) to ``length``."""
    coeffs = [int(c) for c in reversed(poly.all_coeffs())]
    if length is None:
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        return coeffs
    return (coeffs + [0] * length)[:length]


def truncated_product(a: list[int], b: list[int], degree: int) -> list[int]:
    """Coefficients of a*b up to and including z**degree."""
    return ascending(int_poly(a) * int_poly(b), degree + 1)


def evaluate(coeffs: list[int], z: Fraction) -> Fraction:
    """Exact value of sum(coeffs[i] * z**i) by Horner's rule."""
    total = Fraction(0)
    for c in reversed(coeffs):
        total = total * z + c
    return total


def format_poly(coeffs: list[int], var: str = "z") -> str:
    """Render ascending coefficients as e.g. ``1+3z^2``."""
    terms = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
        if i == 0:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}{mono}"
        sign = "-" if c < 0 else "+"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    return out + "".join(f"{sign}{body}" for sign, body in terms[1:])
