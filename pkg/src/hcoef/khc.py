"""The gl(2) highest coefficient K_n (domain-wall six-vertex partition function).

Three independent evaluations are provided: the Izergin determinant
(:func:`k_det`), the symmetrization over x (:func:`k_sym`) and the expansion
over the poles in y_n (:func:`k_pole_expand`).  :func:`k_eval` is the entry
point used by the Z_{a,b} formulas: it also accepts points where some
x_j - y_k = -c, which the determinant cannot take directly.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from typing import Sequence

from .arith import (
    delta_plain,
    delta_prime,
    det_exact,
    f_fn,
    g_fn,
    h_fn,
    prod_over,
    t_fn,
)
from .errors import SizeMismatch


def _check(xs: Sequence, ys: Sequence) -> int:
    if len(xs) != len(ys):
        raise SizeMismatch(f"K_n needs equal cardinalities, got {len(xs)} and {len(ys)}")
    return len(xs)


def k_det(xs: Sequence[Fraction], ys: Sequence[Fraction], c: Fraction) -> Fraction:
    """K_n(x|y) = Δ'(x) Δ(y) h(x, y) det t(x_j, y_k)."""
    n = _check(xs, ys)
    if n == 0:
        return Fraction(1)
    matrix = [[t_fn(xj, yk, c) for yk in ys] for xj in xs]
    return (
        delta_prime(xs, c)
        * delta_plain(ys, c)
        * prod_over(h_fn, tuple(xs), tuple(ys), c)
        * det_exact(matrix)
    )


def k_sym(xs: Sequence[Fraction], ys: Sequence[Fraction], c: Fraction) -> Fraction:
    """Sum over all n! orderings of x of the explicit product form.

    Oracle only; keep n <= 7.
    """
    n = _check(xs, ys)
    total = Fraction(0)
    for perm in permutations(xs):
        term = Fraction(1)
        for j in range(n):
            term *= g_fn(perm[j], ys[j], c)
            for k in range(j):
                term *= f_fn(perm[j], ys[k], c) * f_fn(perm[k], perm[j], c)
        total += term
    return total


def k_pole_expand(xs: Sequence[Fraction], ys: Sequence[Fraction], c: Fraction) -> Fraction:
    """Expand K_n over its poles in y_n and recurse down to K_0 = 1."""
    n = _check(xs, ys)
    if n == 0:
        return Fraction(1)
    xs, ys = tuple(xs), tuple(ys)
    y_last, y_rest = ys[-1], ys[:-1]
    total = Fraction(0)
    for p in range(n):
        xp = xs[p]
        x_rest = xs[:p] + xs[p + 1:]
        total += (
            g_fn(xp, y_last, c)
            * prod_over(f_fn, xp, y_rest, c)
            * prod_over(f_fn, x_rest, xp, c)
            * k_pole_expand(x_rest, y_rest, c)
        )
    return total


def k_eval(xs: Sequence[Fraction], ys: Sequence[Fraction], c: Fraction) -> Fraction:
    """K_n at any point where it is regular.

    Pairs with x_j = y_k - c are removed first, each one contributing a
    factor -1 (K_{n+1}(x, z-c | y, z) = -K_n(x | y)); the rest goes to the
    determinant.
    """
    _check(xs, ys)
    xs, ys = list(xs), list(ys)
    sign = 1
    i = 0
    while i < len(xs):
        target = xs[i] + c
        try:
            k = ys.index(target)
        except ValueError:
            i += 1
            continue
        del xs[i]
        del ys[k]
        sign = -sign
    return sign * k_det(xs, ys, c)


def k_residue_at_coincidence(
    xs: Sequence[Fraction],
    ys: Sequence[Fraction],
    c: Fraction,
    variable: str = "x",
) -> Fraction:
    """Residue of K_n on the hyperplane x_n = y_n.

    The value of x_n (or y_n, for ``variable="y"``) is ignored: that slot is
    the free variable.  With respect to x_n the residue is
    ``c f(y_n, y_rest) f(x_rest, y_n) K_{n-1}(x_rest | y_rest)``; with respect
    to y_n it is the negative of that.
    """
    n = _check(xs, ys)
    if n == 0:
        raise SizeMismatch("residue needs n >= 1")
    if variable not in ("x", "y"):
        raise ValueError("variable must be 'x' or 'y'")
    xs, ys = tuple(xs), tuple(ys)
    pole = ys[-1] if variable == "x" else xs[-1]
    x_rest, y_rest = xs[:-1], ys[:-1]
    value = (
        Fraction(c)
        * prod_over(f_fn, pole, y_rest, c)
        * prod_over(f_fn, x_rest, pole, c)
        * k_eval(x_rest, y_rest, c)
    )
    return value if variable == "x" else -value
