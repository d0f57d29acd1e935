"""Exact scalar layer: rationals, the four two-point functions, set products
and determinants.

Every number in the package is a :class:`fractions.Fraction`.  The text form
used in all JSON I/O is ``"p/q"`` or ``"p"`` with an optional leading minus.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Callable, Iterable, Sequence, Union

from .errors import DivisionByCoincidence

Rational = Fraction
Number = Union[Fraction, int]
VarSet = tuple  # tuple[Fraction, ...]

ScalarFn = Callable[[Fraction, Fraction, Fraction], Fraction]

_RATIONAL_RE = re.compile(r"-?\d+(?:/\d+)?")


def parse_rational(text: str) -> Fraction:
    """Parse the strict ``p/q`` / ``p`` text form."""
    if not isinstance(text, str) or not _RATIONAL_RE.fullmatch(text):
        raise ValueError(f"not a rational literal: {text!r}")
    value = Fraction(text)
    return value


def format_rational(value: Number) -> str:
    return str(Fraction(value))


def as_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def varset(values: Iterable) -> VarSet:
    return tuple(as_rational(v) for v in values)


def shift(values: Sequence[Fraction], d: Fraction) -> VarSet:
    return tuple(v + d for v in values)


def g_fn(x: Fraction, y: Fraction, c: Fraction) -> Fraction:
    if x == y:
        raise DivisionByCoincidence("g", x, y, c)
    return Fraction(c) / (x - y)


def f_fn(x: Fraction, y: Fraction, c: Fraction) -> Fraction:
    d = x - y
    if d == 0:
        raise DivisionByCoincidence("f", x, y, c)
    return (d + c) / d


def h_fn(x: Fraction, y: Fraction, c: Fraction) -> Fraction:
    if c == 0:
        raise DivisionByCoincidence("h", x, y, c)
    return (x - y + c) / Fraction(c)


def t_fn(x: Fraction, y: Fraction, c: Fraction) -> Fraction:
    d = x - y
    if d == 0 or d + c == 0:
        raise DivisionByCoincidence("t", x, y, c)
    return Fraction(c) * c / (d * (d + c))


def f_inv(x: Fraction, y: Fraction, c: Fraction) -> Fraction:
    """1/f(x, y), which is regular at x = y and vanishes there."""
    d = x - y
    if d + c == 0:
        raise DivisionByCoincidence("1/f", x, y, c)
    return Fraction(d) / (d + c)


def _as_seq(arg) -> Sequence[Fraction]:
    if isinstance(arg, (tuple, list)):
        return arg
    return (arg,)


def prod_over(fn: ScalarFn, left, right, c: Fraction) -> Fraction:
    """Double product ``fn(l, r)`` over every l in *left* and r in *right*.

    Either side may be a single value or a sequence; an empty side gives 1.
    """
    out = Fraction(1)
    for u in _as_seq(left):
        for v in _as_seq(right):
            out *= fn(u, v, c)
    return out


def delta_plain(ys: Sequence[Fraction], c: Fraction) -> Fraction:
    """Product of g(y_j, y_k) over j < k."""
    out = Fraction(1)
    for j in range(len(ys)):
        for k in range(j + 1, len(ys)):
            out *= g_fn(ys[j], ys[k], c)
    return out


def delta_prime(xs: Sequence[Fraction], c: Fraction) -> Fraction:
    """Product of g(x_j, x_k) over j > k."""
    out = Fraction(1)
    for j in range(len(xs)):
        for k in range(j):
            out *= g_fn(xs[j], xs[k], c)
    return out


def det_exact(m: Sequence[Sequence[Fraction]]) -> Fraction:
    """Exact determinant.

    Sizes up to 2 are expanded directly; larger matrices go through Bareiss
    fraction-free elimination with row swaps on zero pivots.
    """
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("det_exact needs a square matrix")
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(m[0][0])
    if n == 2:
        return Fraction(m[0][0]) * m[1][1] - Fraction(m[0][1]) * m[1][0]

    a = [[Fraction(v) for v in row] for row in m]
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return Fraction(0)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) / prev
            row_i[k] = Fraction(0)
        prev = pivot
    return sign * a[n - 1][n - 1]


def solve_linear(a: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> list:
    """Solve a square system exactly by Gaussian elimination.

    Raises ``ZeroDivisionError`` when the matrix is singular.
    """
    n = len(a)
    m = [[Fraction(v) for v in row] + [Fraction(r)] for row, r in zip(a, rhs)]
    for col in range(n):
        piv = next((i for i in range(col, n) if m[i][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular system")
        m[col], m[piv] = m[piv], m[col]
        inv = 1 / m[col][col]
        for i in range(n):
            if i != col and m[i][col] != 0:
                factor = m[i][col] * inv
                for j in range(col, n + 1):
                    m[i][j] -= factor * m[col][j]
    return [m[i][n] / m[i][i] for i in range(n)]
