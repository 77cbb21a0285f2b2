"""Exact binomials and Catalan numbers shared by the counting code."""
from __future__ import annotations

from fractions import Fraction
from math import comb


def binom(a: int, b: int) -> int:
    """C(a, b) with C(a, 0) = 1 for every integer a and 0 whenever b < 0 or b > a otherwise.

    The ``C(a, 0) = 1`` rule is needed by the exactly-once 231 formula at
    (n, k) = (4, 2), where a lower index of zero meets a top index of -1.
    """
    if b < 0:
        return 0
    if b == 0:
        return 1
    if b > a:
        return 0
    return comb(a, b)


def catalan(n: int) -> int:
    if n < 0:
        raise ValueError("Catalan numbers need n >= 0")
    return comb(2 * n, n) // (n + 1)


def pow2(e: int) -> Fraction:
    """2**e as an exact rational; negative exponents are allowed."""
    return Fraction(2) ** e


def as_integer(value: Fraction | int, context: str = "") -> int:
    """Return ``value`` as an int, failing loudly if it is not integral."""
    value = Fraction(value)
    if value.denominator != 1:
        raise ArithmeticError(f"non-integral value {value}" + (f" in {context}" if context else ""))
    return value.numerator
