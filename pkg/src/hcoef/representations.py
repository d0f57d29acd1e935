"""One registry over every way of computing Z_{a,b}."""

from __future__ import annotations

import enum
from fractions import Fraction

from .errors import BudgetExceeded
from .lattice import (
    LatticeSpec,
    configurations,
    lattice_budget,
    z_lattice_enum,
    z_lattice_transfer,
)
from .residue import IntegralFormulaId, integral_term_count, z_integral
from .zhc import PointConfig, SumFormulaId, term_count, z_sum


class RepresentationId(str, enum.Enum):
    RHC_IHC = "RHC_IHC"
    RHC_IHC_TWIN = "RHC_IHC_TWIN"
    AL_RHC_IHC = "AL_RHC_IHC"
    AL_RHC_IHC_TWIN = "AL_RHC_IHC_TWIN"
    GF = "GF"
    S_GF = "S_GF"
    INT_OR_FOR = "INT_OR_FOR"
    INT_AL_FOR = "INT_AL_FOR"
    INT_OR_FOR_TWIN = "INT_OR_FOR_TWIN"
    INT_AL_FOR_TWIN = "INT_AL_FOR_TWIN"
    INT_OR_FOR_TWIN_OUTSIDE = "INT_OR_FOR_TWIN_OUTSIDE"
    LATTICE_ENUM = "LATTICE_ENUM"
    LATTICE_TRANSFER = "LATTICE_TRANSFER"

    @classmethod
    def parse(cls, name: str) -> "RepresentationId":
        return cls(name.strip().upper().replace("-", "_"))


SUM_REPS = tuple(RepresentationId(r.value) for r in SumFormulaId)
INTEGRAL_REPS = tuple(RepresentationId(r.value) for r in IntegralFormulaId)
LATTICE_REPS = (RepresentationId.LATTICE_ENUM, RepresentationId.LATTICE_TRANSFER)


def evaluate(rep: RepresentationId | str, pt: PointConfig) -> Fraction:
    rep = RepresentationId.parse(rep) if isinstance(rep, str) else rep
    if rep in SUM_REPS:
        return z_sum(rep.value, pt)
    if rep in INTEGRAL_REPS:
        return z_integral(rep.value, pt)
    spec = LatticeSpec.from_point(pt)
    if rep is RepresentationId.LATTICE_ENUM:
        return z_lattice_enum(spec)
    return z_lattice_transfer(spec)


def default_reps(a: int, b: int) -> list:
    """Representations used for an "all" evaluation at size (a, b)."""
    reps = list(SUM_REPS + INTEGRAL_REPS)
    if a + b <= 4:
        if (a + b) ** 2 <= lattice_budget():
            reps.append(RepresentationId.LATTICE_ENUM)
        reps.append(RepresentationId.LATTICE_TRANSFER)
    return reps


def representation_term_count(rep: RepresentationId, a: int, b: int) -> int | None:
    """Partition terms summed by a formula route; None for lattice routes."""
    if rep in SUM_REPS:
        return term_count(rep.value, a, b)
    if rep in INTEGRAL_REPS:
        return integral_term_count(rep.value, a, b)
    return None


def evaluate_with_stats(rep: RepresentationId, pt: PointConfig) -> tuple:
    """Value plus a term count; for lattice routes the count is measured."""
    if rep is RepresentationId.LATTICE_TRANSFER:
        stats: dict = {}
        value = z_lattice_transfer(LatticeSpec.from_point(pt), stats=stats)
        return value, stats.get("peak_states", 0)
    if rep is RepresentationId.LATTICE_ENUM:
        spec = LatticeSpec.from_point(pt)
        size = len(spec.rows) * len(spec.columns)
        if size > lattice_budget():
            raise BudgetExceeded(f"grid has {size} vertices, enumeration budget is {lattice_budget()}")
        weights = [w for w, _ in configurations(spec)]
        return sum(weights, Fraction(0)), len(weights)
    return evaluate(rep, pt), representation_term_count(rep, pt.a, pt.b)

