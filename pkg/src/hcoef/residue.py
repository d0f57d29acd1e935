"""Contour-integral representations of Z_{a,b} evaluated by residues, and
the pole structure of Z_{a,b} in s_b.

Each integral is a k-fold integral of a symmetric integrand whose only
enclosed poles come from one explicit linking product, either
``f(z, P)`` (residue +c) or ``f(P, z)`` (residue -c) over a pole set P.
Evaluating it amounts to summing over unordered k-subsets of P; the k!
orderings cancel the 1/k! prefactor and the factors c cancel the
(2 pi i c)^k normalisation.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Callable, Sequence

from .arith import f_fn, f_inv, g_fn, prod_over, shift, solve_linear
from .errors import DegeneratePoint, DivisionByCoincidence, SingularSystem
from .khc import k_eval
from .zhc import PointConfig, z_small, z_value


class IntegralFormulaId(str, enum.Enum):
    INT_OR_FOR = "INT_OR_FOR"
    INT_AL_FOR = "INT_AL_FOR"
    INT_OR_FOR_TWIN = "INT_OR_FOR_TWIN"
    INT_AL_FOR_TWIN = "INT_AL_FOR_TWIN"
    INT_OR_FOR_TWIN_OUTSIDE = "INT_OR_FOR_TWIN_OUTSIDE"


@dataclass(frozen=True)
class DerivedSets:
    w: tuple
    eta: tuple
    eta_tilde: tuple
    xi: tuple

    @classmethod
    def of(cls, pt: PointConfig) -> "DerivedSets":
        c = pt.c
        return cls(
            w=pt.s + pt.x,
            eta=shift(pt.y, c) + pt.t,
            eta_tilde=pt.y + shift(pt.t, -c),
            xi=pt.t + shift(pt.x, c),
        )


def f_product(zs: Sequence[Fraction], c: Fraction) -> Fraction:
    """Symmetrisation weight: product of 1/f(z_j, z_k) over j != k."""
    out = Fraction(1)
    for j, zj in enumerate(zs):
        for k, zk in enumerate(zs):
            if j != k:
                out *= f_inv(zj, zk, c)
    return out


@dataclass(frozen=True)
class _Contour:
    order: int
    poles: tuple
    orientation: int  # +1: linking factor f(z, p); -1: f(p, z)
    prefactor: Fraction
    body: Callable[[tuple], Fraction]


def _contour(rep: IntegralFormulaId, pt: PointConfig) -> _Contour:
    a, b, c = pt.a, pt.b, pt.c
    d = DerivedSets.of(pt)
    sign_a = -1 if a % 2 else 1
    sign_b = -1 if b % 2 else 1
    al = prod_over(f_fn, pt.y, pt.x, c) * prod_over(f_fn, pt.s, pt.t, c)

    if rep is IntegralFormulaId.INT_OR_FOR:
        s_shift = shift(pt.s, -c)
        return _Contour(b, d.w, +1, Fraction(1), lambda z: (
            k_eval(s_shift, z, c) * k_eval(pt.y, z, c) * k_eval(d.w, pt.t + shift(z, c), c)
        ))
    if rep is IntegralFormulaId.INT_AL_FOR:
        y_shift = shift(pt.y, c)
        # the big K carries the enclosed set shifted by +c, i.e. eta
        return _Contour(b, d.eta_tilde, -1, sign_b * al, lambda z: (
            k_eval(z, pt.s, c) * k_eval(z, y_shift, c) * k_eval(pt.x + z, shift(d.eta_tilde, c), c)
        ))
    if rep is IntegralFormulaId.INT_OR_FOR_TWIN:
        x_shift = shift(pt.x, c)
        return _Contour(a, d.w, -1, Fraction(sign_a), lambda z: (
            k_eval(z, x_shift, c) * k_eval(z, pt.t, c) * k_eval(pt.y + shift(z, -c), d.w, c)
        ))
    if rep is IntegralFormulaId.INT_AL_FOR_TWIN:
        t_shift = shift(pt.t, -c)
        eta_shift = shift(d.eta, -c)
        return _Contour(a, d.eta, +1, al, lambda z: (
            k_eval(t_shift, z, c) * k_eval(pt.x, z, c) * k_eval(eta_shift, pt.s + z, c)
        ))
    if rep is IntegralFormulaId.INT_OR_FOR_TWIN_OUTSIDE:
        t_shift = shift(pt.t, -c)
        y_shift = shift(pt.y, c)
        pre = (sign_a * sign_b) * prod_over(f_fn, pt.y, d.w, c)
        return _Contour(a, d.xi, +1, pre, lambda z: (
            k_eval(t_shift, z, c) * k_eval(pt.x, z, c) * k_eval(d.w, y_shift + z, c)
        ))
    raise ValueError(f"unknown integral representation {rep!r}")


def z_integral(rep: IntegralFormulaId | str, pt: PointConfig) -> Fraction:
    """Residue-sum value of one of the contour-integral representations."""
    contour = _contour(IntegralFormulaId(rep), pt)
    k, poles, c = contour.order, contour.poles, pt.c
    total = Fraction(0)
    for chosen in combinations(range(len(poles)), k):
        zs = tuple(poles[i] for i in chosen)
        # linking product with the k singular factors removed
        link = Fraction(1)
        for zj in zs:
            for p in poles:
                if p == zj:
                    continue
                link *= f_fn(zj, p, c) if contour.orientation > 0 else f_fn(p, zj, c)
        total += contour.body(zs) * link * f_product(zs, c)
    residue_sign = -1 if (contour.orientation < 0 and k % 2) else 1
    return contour.prefactor * residue_sign * total


def integral_term_count(rep: IntegralFormulaId | str, a: int, b: int) -> int:
    rep = IntegralFormulaId(rep)
    if rep in (IntegralFormulaId.INT_OR_FOR, IntegralFormulaId.INT_AL_FOR):
        return comb(a + b, b)
    if rep is IntegralFormulaId.INT_OR_FOR_TWIN_OUTSIDE:
        return comb(2 * a, a)
    return comb(a + b, a)


# Pole structure in s_b

def pole_decompose(samples: Sequence[tuple], poles: Sequence[Fraction]) -> list:
    """Residues r_m with sum_m r_m / (u - p_m) = v at every sample (u, v).

    The first ``len(poles)`` samples fix the residues through a Cauchy
    system; any further samples must be reproduced exactly, otherwise
    ``ValueError`` is raised.
    """
    poles = [Fraction(p) for p in poles]
    samples = [(Fraction(u), Fraction(v)) for u, v in samples]
    n = len(poles)
    if len(samples) < n:
        raise SingularSystem(f"{len(samples)} samples cannot fix {n} residues")
    abscissae = [u for u, _ in samples]
    if len(set(abscissae)) != len(abscissae) or len(set(poles)) != n:
        raise SingularSystem("sample abscissae and poles must be pairwise distinct")
    if any(u in poles for u in abscissae):
        raise SingularSystem("a sample abscissa coincides with a pole")
    if n == 0:
        residues = []
    else:
        matrix = [[1 / (u - p) for p in poles] for u, _ in samples[:n]]
        try:
            residues = solve_linear(matrix, [v for _, v in samples[:n]])
        except ZeroDivisionError as exc:
            raise SingularSystem(str(exc)) from exc
    for u, v in samples[n:]:
        if reconstruct(residues, poles, u) != v:
            raise ValueError(f"sample at {u} is not reproduced by the simple-pole expansion")
    return residues


def reconstruct(residues: Sequence[Fraction], poles: Sequence[Fraction], u: Fraction) -> Fraction:
    return sum((r / (u - p) for r, p in zip(residues, poles)), Fraction(0))


def fresh_abscissae(pt: PointConfig, count: int, start: int = 10**4) -> list:
    """Integers u >= start that keep the point generic when put in s_b."""
    others = pt.t + pt.x + pt.s[:-1] + pt.y
    reach = {k * abs(pt.c) for k in range(3)}
    out: list = []
    u = Fraction(start)
    while len(out) < count:
        if all(abs(u - v) not in reach for v in others):
            out.append(u)
        u += 1
    return out


ZRoute = Callable[[PointConfig], Fraction]


def s_b_poles(pt: PointConfig) -> tuple:
    return pt.y + pt.t


def s_b_residues(pt: PointConfig, route: ZRoute = z_value, extra: int = 1) -> dict:
    """Residues of s_b -> Z_{a,b} at every pole in y and t.

    Z is sampled at ``a + b + extra`` fresh abscissae; the extra samples
    must be reproduced by the reconstruction.
    """
    if pt.b == 0:
        raise ValueError("s_b residues need b >= 1")
    poles = s_b_poles(pt)
    us = fresh_abscissae(pt, len(poles) + extra)
    samples = [(u, route(pt.replace(s=pt.s[:-1] + (u,)))) for u in us]
    residues = pole_decompose(samples, poles)
    return dict(zip(poles, residues))


def rec_triv_rhs(pt: PointConfig, route: ZRoute = z_value) -> Fraction:
    """Analytic residue of Z_{a,b} at s_b = y_b, in terms of Z_{a,b-1}."""
    c = pt.c
    yb, y_rest, s_rest = pt.y[-1], pt.y[:-1], pt.s[:-1]
    smaller = pt.replace(s=s_rest, y=y_rest)
    return (
        -c
        * prod_over(f_fn, yb, s_rest, c)
        * prod_over(f_fn, y_rest, yb, c)
        * prod_over(f_fn, yb, pt.x, c)
        * _route_or_small(smaller, route)
    )


def rec_nontriv_rhs(pt: PointConfig, route: ZRoute = z_value) -> Fraction:
    """Analytic residue of Z_{a,b} at s_b = t_a, in terms of Z_{a-1,b}."""
    c = pt.c
    ta, t_rest, s_rest = pt.t[-1], pt.t[:-1], pt.s[:-1]
    total = Fraction(0)
    for p, xp in enumerate(pt.x):
        x_rest = pt.x[:p] + pt.x[p + 1:]
        smaller = pt.replace(t=t_rest, x=x_rest, s=s_rest + (xp,))
        total += g_fn(xp, ta, c) * prod_over(f_fn, x_rest, xp, c) * _route_or_small(smaller, route)
    return c * prod_over(f_fn, s_rest, ta, c) * prod_over(f_fn, ta, t_rest, c) * total


def _route_or_small(pt: PointConfig, route: ZRoute) -> Fraction:
    if pt.a == 0 or pt.b == 0:
        return z_small(pt)
    return route(pt)


def verify_recursion_triv(pt: PointConfig, route: ZRoute = z_value) -> bool:
    if pt.b < 1:
        raise ValueError("needs b >= 1")
    return s_b_residues(pt, route)[pt.y[-1]] == rec_triv_rhs(pt, route)


def verify_recursion_nontriv(pt: PointConfig, route: ZRoute = z_value) -> bool:
    if pt.a < 1 or pt.b < 1:
        raise ValueError("needs a >= 1 and b >= 1")
    return s_b_residues(pt, route)[pt.t[-1]] == rec_nontriv_rhs(pt, route)


def z_recursive(pt: PointConfig) -> Fraction:
    """Z_{a,b} rebuilt from Z_{a,0} and Z_{0,b} through the residues in s_b.

    Uses only the two recursions and the decay at infinity: Z is the sum of
    its simple-pole terms in s_b.
    """
    if pt.a == 0 or pt.b == 0:
        return z_small(pt)
    sb = pt.s[-1]
    total = Fraction(0)
    for m, ym in enumerate(pt.y):
        # move y_m to the last slot; Z is symmetric in y
        perm = pt.replace(y=pt.y[:m] + pt.y[m + 1:] + (ym,))
        total += rec_triv_rhs(perm, z_recursive) / (sb - ym)
    for l, tl in enumerate(pt.t):
        perm = pt.replace(t=pt.t[:l] + pt.t[l + 1:] + (tl,))
        total += rec_nontriv_rhs(perm, z_recursive) / (sb - tl)
    return total


__all__ = [
    "DegeneratePoint",
    "DerivedSets",
    "DivisionByCoincidence",
    "IntegralFormulaId",
    "f_product",
    "fresh_abscissae",
    "integral_term_count",
    "pole_decompose",
    "rec_nontriv_rhs",
    "rec_triv_rhs",
    "reconstruct",
    "s_b_residues",
    "verify_recursion_nontriv",
    "verify_recursion_triv",
    "z_integral",
    "z_recursive",
]
