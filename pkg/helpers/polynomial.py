# Exact integer polynomials as coefficient lists, lowest degree first:
# [1, 0, -2] is 1 - 2X^2.
from typing import Iterable


def times_binomial(poly: list[int], degree: int) -> list[int]:
    """Multiplies by X^degree - 1 in one pass."""

    res = [0] * (len(poly) + degree)
    for i, x in enumerate(poly):
        res[i] -= x
        res[i + degree] += x
    return res


def product_of_binomials(degrees: Iterable[int]) -> list[int]:
    """Π (X^d - 1) over `degrees`."""

    res = [1]
    for degree in degrees:
        res = times_binomial(res, degree)
    return res


def divide_by_x_minus_one(poly: list[int]) -> list[int]:
    """Exact quotient by X - 1.

    Raises:
        ArithmeticError: when 1 is not a root.
    """

    if not poly:
        return []

    # Synthetic division from the top coefficient down.
    quotient = [0] * (len(poly) - 1)
    carry = 0
    for i in range(len(poly) - 1, 0, -1):
        carry += poly[i]
        quotient[i - 1] = carry
    if carry + poly[0]:
        raise ArithmeticError("Polynomial does not vanish at X = 1.")

    return quotient


def truncated_divide_one_minus(series: list[int], degree: int) -> None:
    """Divides a series known modulo X^len(series) by 1 - X^degree, in place."""

    for j in range(degree, len(series)):
        series[j] += series[j - degree]
