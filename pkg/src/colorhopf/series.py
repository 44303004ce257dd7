"""Exact univariate power series arithmetic on lists of rationals.

A series truncated at order D is a list of D+1 Fractions (or ints),
coefficient of t^0 first.  Only what the counting identities need:
products, reciprocals, argument scaling, and a few named series.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial


def series_mul(a: list, b: list, order: int) -> list[Fraction]:
    out = [Fraction(0)] * (order + 1)
    for i, ai in enumerate(a[: order + 1]):
        if not ai:
            continue
        for j, bj in enumerate(b[: order + 1 - i]):
            out[i + j] += Fraction(ai) * bj
    return out


def series_recip(a: list, order: int) -> list[Fraction]:
    """Multiplicative inverse; requires a nonzero constant term."""
    a0 = Fraction(a[0])
    if a0 == 0:
        raise ZeroDivisionError("series has no reciprocal: zero constant term")
    out = [1 / a0]
    for n in range(1, order + 1):
        acc = Fraction(0)
        for k in range(1, n + 1):
            ak = Fraction(a[k]) if k < len(a) else Fraction(0)
            acc += ak * out[n - k]
        out.append(-acc / a0)
    return out


def scale_argument(a: list, factor: int) -> list[Fraction]:
    """The series a(factor * t)."""
    return [Fraction(c) * factor**n for n, c in enumerate(a)]


def connected_series(order: int) -> list[Fraction]:
    """c(t) = 1 - (sum_n n! t^n)^(-1): counts connected permutations."""
    fact = [Fraction(factorial(n)) for n in range(order + 1)]
    inv = series_recip(fact, order)
    out = [-c for c in inv]
    out[0] += 1
    return out


def hilbert_series(l: int, order: int) -> list[Fraction]:
    """(1-t)^l / (2(1-t)^l - 1): dimensions of the level-l algebra of
    noncommutative symmetric functions."""
    num = [Fraction(comb(l, n) * (-1) ** n) for n in range(order + 1)]
    den = [2 * c for c in num]
    den[0] -= 1
    return series_mul(num, series_recip(den, order), order)


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def ncb_series(l: int, order: int) -> list[Fraction]:
    """1 / (1 - l (1 - sqrt(1-4t)) / 2): counts l-colored maximal prime
    factorizations of non-decreasing parking words.

    (1 - sqrt(1-4t))/2 = sum_{n>=1} catalan(n-1) t^n, so no square root
    is needed.
    """
    if order > 12:
        raise ValueError(f"series order {order} exceeds the budget of 12")
    den = [Fraction(1)] + [-l * Fraction(catalan(n - 1)) for n in range(1, order + 1)]
    return series_recip(den, order)
