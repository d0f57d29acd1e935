"""Exact evaluation of the SU(3) highest coefficient Z_{a,b} and the gl(2)
coefficient K_n by every known route, with cross-checks between them."""

from .arith import Rational, det_exact, f_fn, format_rational, g_fn, h_fn, parse_rational, t_fn
from .errors import (
    BudgetExceeded,
    DegeneratePoint,
    DivisionByCoincidence,
    NotBoundaryCase,
    SamplerExhausted,
    SingularSystem,
    SizeMismatch,
)
from .khc import k_det, k_eval, k_pole_expand, k_residue_at_coincidence, k_sym
from .lattice import LatticeSpec, yang_baxter_check, z_lattice_enum, z_lattice_transfer
from .representations import RepresentationId, evaluate
from .residue import (
    IntegralFormulaId,
    pole_decompose,
    verify_recursion_nontriv,
    verify_recursion_triv,
    z_integral,
    z_recursive,
)
from .sampler import sample_point
from .zhc import PointConfig, SumFormulaId, partitions, z_small, z_sum, z_value

__version__ = "0.1.0"
