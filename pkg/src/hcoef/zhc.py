"""Z_{a,b}(t; x | s; y) as sums over set partitions.

Six formulas are implemented, each a sum of products of K_n over ways of
splitting two of the four variable sets.  They are independent evaluation
routes and must all agree.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterator, NamedTuple, Sequence

from .arith import VarSet, as_rational, f_fn, prod_over, shift, varset
from .errors import DegeneratePoint, NotBoundaryCase, SizeMismatch
from .khc import k_eval


@dataclass(frozen=True)
class PointConfig:
    c: Fraction
    t: VarSet
    x: VarSet
    s: VarSet
    y: VarSet

    @classmethod
    def build(cls, t=(), x=(), s=(), y=(), c=1, validate: bool = True) -> "PointConfig":
        pt = cls(as_rational(c), varset(t), varset(x), varset(s), varset(y))
        if validate:
            pt.validate()
        return pt

    @property
    def a(self) -> int:
        return len(self.t)

    @property
    def b(self) -> int:
        return len(self.s)

    def validate(self, generic: bool = False) -> None:
        """Reject hard coincidences (differences 0 or ±c).

        With ``generic=True`` differences of ±2c are rejected as well; such
        points are guaranteed pole-free in every representation.
        """
        if self.c == 0:
            raise DegeneratePoint("c must be non-zero")
        if len(self.t) != len(self.x):
            raise DegeneratePoint(f"#t={len(self.t)} but #x={len(self.x)}")
        if len(self.s) != len(self.y):
            raise DegeneratePoint(f"#s={len(self.s)} but #y={len(self.y)}")
        bad = degenerate_pair(self.t + self.x + self.s + self.y, self.c, 2 if generic else 1)
        if bad is not None:
            raise DegeneratePoint(f"variables {bad[0]} and {bad[1]} are too close (c={self.c})")

    def is_generic(self) -> bool:
        try:
            self.validate(generic=True)
        except DegeneratePoint:
            return False
        return True

    def replace(self, **kw) -> "PointConfig":
        fields = dict(c=self.c, t=self.t, x=self.x, s=self.s, y=self.y)
        fields.update({k: varset(v) if k != "c" else as_rational(v) for k, v in kw.items()})
        return PointConfig(**fields)


def degenerate_pair(values: Sequence[Fraction], c: Fraction, reach: int = 2):
    """First pair whose difference is k*c with |k| <= reach, or None."""
    forbidden = {k * abs(c) for k in range(reach + 1)}
    for i in range(len(values)):
        for j in range(i + 1, len(values)):
            if abs(values[i] - values[j]) in forbidden:
                return values[i], values[j]
    return None


class SubsetSplit(NamedTuple):
    indices_I: tuple
    indices_II: tuple


class SumFormulaId(str, enum.Enum):
    RHC_IHC = "RHC_IHC"
    RHC_IHC_TWIN = "RHC_IHC_TWIN"
    AL_RHC_IHC = "AL_RHC_IHC"
    AL_RHC_IHC_TWIN = "AL_RHC_IHC_TWIN"
    GF = "GF"
    S_GF = "S_GF"


def partitions(set_size: int, part_sizes: Sequence[int]) -> Iterator[tuple]:
    """Every split of range(set_size) into labelled parts of the given sizes.

    Each part is a sorted index tuple.  For two parts the items are
    :class:`SubsetSplit`; otherwise plain tuples of parts.
    """
    if any(p < 0 for p in part_sizes) or sum(part_sizes) != set_size:
        raise SizeMismatch(f"part sizes {list(part_sizes)} do not sum to {set_size}")

    def rec(pool: tuple, sizes: Sequence[int]):
        if not sizes:
            yield ()
            return
        for first in combinations(pool, sizes[0]):
            chosen = set(first)
            rest = tuple(i for i in pool if i not in chosen)
            for tail in rec(rest, sizes[1:]):
                yield (first,) + tail

    for parts in rec(tuple(range(set_size)), list(part_sizes)):
        yield SubsetSplit(*parts) if len(parts) == 2 else parts


def _pick(values: Sequence[Fraction], idx: Sequence[int]) -> VarSet:
    return tuple(values[i] for i in idx)


def _splits(values: Sequence[Fraction], size_I: int) -> Iterator[tuple]:
    for split in partitions(len(values), (size_I, len(values) - size_I)):
        yield _pick(values, split.indices_I), _pick(values, split.indices_II)


def z_small(pt: PointConfig) -> Fraction:
    """Z_{a,0} = K_a(x | t) and Z_{0,b} = K_b(y | s)."""
    if pt.a > 0 and pt.b > 0:
        raise NotBoundaryCase(f"z_small needs a = 0 or b = 0, got ({pt.a}, {pt.b})")
    if pt.b == 0:
        return k_eval(pt.x, pt.t, pt.c)
    return k_eval(pt.y, pt.s, pt.c)


def _sign(n: int) -> int:
    return -1 if n % 2 else 1


def _rhc_ihc(pt: PointConfig) -> Fraction:
    a, b, c = pt.a, pt.b, pt.c
    w = pt.s + pt.x
    s_shift = shift(pt.s, -c)
    total = Fraction(0)
    for w1, w2 in _splits(w, b):
        total += (
            k_eval(s_shift, w1, c)
            * k_eval(w2, pt.t, c)
            * k_eval(pt.y, w1, c)
            * prod_over(f_fn, w1, w2, c)
        )
    return _sign(b) * total


def _rhc_ihc_twin(pt: PointConfig) -> Fraction:
    a, b, c = pt.a, pt.b, pt.c
    w = pt.s + pt.x
    total = Fraction(0)
    for w1, w2 in _splits(w, b):
        total += (
            k_eval(shift(w2, -c), pt.x, c)
            * k_eval(w2, pt.t, c)
            * k_eval(pt.y, w1, c)
            * prod_over(f_fn, w1, w2, c)
        )
    return _sign(a) * total


def _al_prefactor(pt: PointConfig) -> Fraction:
    return prod_over(f_fn, pt.y, pt.x, pt.c) * prod_over(f_fn, pt.s, pt.t, pt.c)


def _al_rhc_ihc(pt: PointConfig) -> Fraction:
    a, b, c = pt.a, pt.b, pt.c
    eta = shift(pt.y, c) + pt.t
    t_shift = shift(pt.t, -c)
    total = Fraction(0)
    for e1, e2 in _splits(eta, a):
        total += (
            k_eval(t_shift, e1, c)
            * k_eval(pt.x, e1, c)
            * k_eval(shift(e2, -c), pt.s, c)
            * prod_over(f_fn, e1, e2, c)
        )
    return _sign(a) * _al_prefactor(pt) * total


def _al_rhc_ihc_twin(pt: PointConfig) -> Fraction:
    a, b, c = pt.a, pt.b, pt.c
    y_shift = shift(pt.y, c)
    eta = y_shift + pt.t
    total = Fraction(0)
    for e1, e2 in _splits(eta, a):
        e2_shift = shift(e2, -c)
        total += (
            k_eval(e2_shift, y_shift, c)
            * k_eval(pt.x, e1, c)
            * k_eval(e2_shift, pt.s, c)
            * prod_over(f_fn, e1, e2, c)
        )
    return _sign(b) * _al_prefactor(pt) * total


def _gf(pt: PointConfig) -> Fraction:
    a, c = pt.a, pt.c
    total = Fraction(0)
    for n in range(a + 1):
        for t1, t2 in _splits(pt.t, n):
            for x1, x2 in _splits(pt.x, n):
                total += _sign(n) * (
                    prod_over(f_fn, pt.s, t1, c)
                    * prod_over(f_fn, pt.y, x2, c)
                    * prod_over(f_fn, t1, t2, c)
                    * prod_over(f_fn, x2, x1, c)
                    * k_eval(x1, t1, c)
                    * k_eval(x2, shift(t2, -c), c)
                    * k_eval(pt.y + shift(t1, -c), pt.s + x1, c)
                )
    return total


def _s_gf(pt: PointConfig) -> Fraction:
    b, c = pt.b, pt.c
    total = Fraction(0)
    for n in range(b + 1):
        for s1, s2 in _splits(pt.s, n):
            for y1, y2 in _splits(pt.y, n):
                total += _sign(n) * (
                    prod_over(f_fn, s2, pt.t, c)
                    * prod_over(f_fn, y1, pt.x, c)
                    * prod_over(f_fn, s1, s2, c)
                    * prod_over(f_fn, y2, y1, c)
                    * k_eval(y1, s1, c)
                    * k_eval(shift(y2, c), s2, c)
                    * k_eval(s1 + pt.x, shift(y1, c) + pt.t, c)
                )
    return total


_SUM_FORMULAS = {
    SumFormulaId.RHC_IHC: _rhc_ihc,
    SumFormulaId.RHC_IHC_TWIN: _rhc_ihc_twin,
    SumFormulaId.AL_RHC_IHC: _al_rhc_ihc,
    SumFormulaId.AL_RHC_IHC_TWIN: _al_rhc_ihc_twin,
    SumFormulaId.GF: _gf,
    SumFormulaId.S_GF: _s_gf,
}


def z_sum(rep: SumFormulaId | str, pt: PointConfig) -> Fraction:
    return _SUM_FORMULAS[SumFormulaId(rep)](pt)


def z_value(pt: PointConfig) -> Fraction:
    """Z_{a,b} by the default route (sum over partitions of s and x)."""
    return _rhc_ihc(pt)


def term_count(rep: SumFormulaId | str, a: int, b: int) -> int:
    """Number of partition terms the formula sums over."""
    from math import comb

    rep = SumFormulaId(rep)
    if rep in (SumFormulaId.RHC_IHC, SumFormulaId.RHC_IHC_TWIN,
               SumFormulaId.AL_RHC_IHC, SumFormulaId.AL_RHC_IHC_TWIN):
        return comb(a + b, b)
    if rep is SumFormulaId.GF:
        return sum(comb(a, n) ** 2 for n in range(a + 1))
    return sum(comb(b, n) ** 2 for n in range(b + 1))
