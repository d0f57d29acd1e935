"""Z_{a,b} as a vertex-model partition function on a rectangular grid.

Two evaluators: :func:`z_lattice_enum` walks every edge colouring with
pruning on zero weights, :func:`z_lattice_transfer` contracts the grid
row by row over sparse maps of vertical colour words.  The R-matrix built
from the same weight table is checked against the Yang-Baxter equation.

Grid conventions: rows are listed bottom to top, columns left to right.
A vertex has edges (left, right, bottom, top).
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, Sequence

from .arith import as_rational, f_fn, g_fn
from .errors import BudgetExceeded, SizeMismatch

COLORS = (1, 2, 3)
DEFAULT_BUDGET = 16

WeightFn = Callable[[bool, int, int, int, int, Fraction, Fraction, Fraction], Fraction]


@dataclass(frozen=True)
class Column:
    param: Fraction
    dotted: bool = False


@dataclass(frozen=True)
class LatticeSpec:
    columns: tuple
    rows: tuple
    left: tuple
    right: tuple
    bottom: tuple
    top: tuple
    c: Fraction = Fraction(1)

    def __post_init__(self):
        if len(self.left) != len(self.rows) or len(self.right) != len(self.rows):
            raise SizeMismatch("left/right boundary must have one colour per row")
        if len(self.bottom) != len(self.columns) or len(self.top) != len(self.columns):
            raise SizeMismatch("bottom/top boundary must have one colour per column")
        for col in self.left + self.right + self.bottom + self.top:
            if col not in COLORS:
                raise ValueError(f"edge colour {col!r} not in {COLORS}")

    @classmethod
    def canonical(cls, t, x, s, y, c=1) -> "LatticeSpec":
        """Grid whose partition function is Z_{a,b}(t; x | s; y)."""
        a, b = len(t), len(s)
        columns = tuple(Column(as_rational(v), True) for v in y) + tuple(
            Column(as_rational(v), False) for v in t
        )
        rows = tuple(as_rational(v) for v in s) + tuple(as_rational(v) for v in x)
        return cls(
            columns=columns,
            rows=rows,
            left=(2,) * (a + b),
            right=(3,) * b + (1,) * a,
            bottom=(3,) * b + (2,) * a,
            top=(2,) * b + (1,) * a,
            c=as_rational(c),
        )

    @classmethod
    def from_point(cls, pt) -> "LatticeSpec":
        return cls.canonical(pt.t, pt.x, pt.s, pt.y, pt.c)

    @classmethod
    def from_json(cls, data: dict) -> "LatticeSpec":
        bnd = data["boundary"]
        return cls(
            columns=tuple(
                Column(as_rational(col["param"]), bool(col.get("dotted", False)))
                for col in data["columns"]
            ),
            rows=tuple(as_rational(r) for r in data["rows"]),
            left=tuple(bnd["left"]),
            right=tuple(bnd["right"]),
            bottom=tuple(bnd["bottom"]),
            top=tuple(bnd["top"]),
            c=as_rational(data.get("c", "1")),
        )

    def to_json(self) -> dict:
        return {
            "c": str(self.c),
            "columns": [{"param": str(col.param), "dotted": col.dotted} for col in self.columns],
            "rows": [str(r) for r in self.rows],
            "boundary": {
                "left": list(self.left),
                "right": list(self.right),
                "bottom": list(self.bottom),
                "top": list(self.top),
            },
        }


def vertex_type(dotted: bool, left: int, right: int, bottom: int, top: int) -> str | None:
    """'a', 'b', 'c' or None for a forbidden colouring."""
    if left == right == bottom == top:
        return "a"
    if left == right and bottom == top:
        return "b"
    if dotted:
        if left == top and right == bottom:
            return "c"
    elif left == bottom and right == top:
        return "c"
    return None


def vertex_weight(
    dotted: bool,
    left: int,
    right: int,
    bottom: int,
    top: int,
    row_param: Fraction,
    col_param: Fraction,
    c: Fraction,
) -> Fraction:
    kind = vertex_type(dotted, left, right, bottom, top)
    if kind is None:
        return Fraction(0)
    if kind == "b":
        return Fraction(1)
    if dotted:
        return f_fn(col_param, row_param, c) if kind == "a" else g_fn(col_param, row_param, c)
    return f_fn(row_param, col_param, c) if kind == "a" else g_fn(row_param, col_param, c)


def lattice_budget() -> int:
    raw = os.environ.get("HC_MAX_LATTICE")
    return int(raw) if raw else DEFAULT_BUDGET


def configurations(spec: LatticeSpec, weight: WeightFn = vertex_weight) -> Iterator[tuple]:
    """Yield ``(weight, vertices)`` for every non-zero edge colouring.

    ``vertices`` is a tuple, in row-major order from the bottom-left corner,
    of ``(row, col, left, right, bottom, top)``.
    """
    R, C = len(spec.rows), len(spec.columns)
    if R == 0 or C == 0:
        if R == 0 and spec.bottom == spec.top:
            yield Fraction(1), ()
        elif C == 0 and spec.left == spec.right:
            yield Fraction(1), ()
        return
    verticals = list(spec.bottom)  # colours entering the current row from below
    chosen: list = []

    def walk(idx: int, h: int, acc: Fraction):
        r, col = divmod(idx, C)
        if r == R:
            yield acc, tuple(chosen)
            return
        if col == 0:
            h = spec.left[r]
        bottom = verticals[col]
        rights = (spec.right[r],) if col == C - 1 else COLORS
        tops = (spec.top[col],) if r == R - 1 else COLORS
        column = spec.columns[col]
        for right in rights:
            for top in tops:
                w = weight(column.dotted, h, right, bottom, top, spec.rows[r], column.param, spec.c)
                if w == 0:
                    continue
                verticals[col] = top
                chosen.append((r, col, h, right, bottom, top))
                yield from walk(idx + 1, right, acc * w)
                chosen.pop()
                verticals[col] = bottom

    yield from walk(0, 0, Fraction(1))


def z_lattice_enum(spec: LatticeSpec, budget: int | None = None, weight: WeightFn = vertex_weight) -> Fraction:
    budget = lattice_budget() if budget is None else budget
    size = len(spec.rows) * len(spec.columns)
    if size > budget:
        raise BudgetExceeded(f"grid has {size} vertices, enumeration budget is {budget}")
    return sum((w for w, _ in configurations(spec, weight)), Fraction(0))


def z_lattice_transfer(
    spec: LatticeSpec, weight: WeightFn = vertex_weight, stats: dict | None = None
) -> Fraction:
    """Row-by-row contraction.  *stats*, if given, receives the peak number
    of live partial states under ``"peak_states"``."""
    C = len(spec.columns)
    peak = 0
    if C == 0:
        return Fraction(1) if spec.left == spec.right else Fraction(0)
    states = {tuple(spec.bottom): Fraction(1)}
    for r, row_param in enumerate(spec.rows):
        # (new colours so far, old colours still to be consumed, horizontal colour)
        partial = {((), word, spec.left[r]): w for word, w in states.items()}
        for col, column in enumerate(spec.columns):
            rights = (spec.right[r],) if col == C - 1 else COLORS
            nxt: dict = {}
            for (done, todo, h), acc in partial.items():
                bottom, rest = todo[0], todo[1:]
                for right in rights:
                    for top in COLORS:
                        w = weight(column.dotted, h, right, bottom, top, row_param, column.param, spec.c)
                        if w == 0:
                            continue
                        key = (done + (top,), rest, right)
                        nxt[key] = nxt.get(key, Fraction(0)) + acc * w
            partial = nxt
            peak = max(peak, len(partial))
        states = {}
        for (done, _, _), acc in partial.items():
            states[done] = states.get(done, Fraction(0)) + acc
    if stats is not None:
        stats["peak_states"] = peak
    return states.get(tuple(spec.top), Fraction(0))


# R-matrix and the Yang-Baxter equation

def r_matrix(x: Fraction, y: Fraction, c: Fraction, weight: WeightFn = vertex_weight) -> list:
    """9x9 R(x, y) read off the regular-vertex weight table.

    Basis index is 3*(first) + (second) with colours shifted to 0..2.  The
    vertex maps (left, top) to (right, bottom).
    """
    m = [[Fraction(0)] * 9 for _ in range(9)]
    for j in COLORS:
        for k in COLORS:
            for ell in COLORS:
                for mm in COLORS:
                    w = weight(False, j, k, ell, mm, x, y, c)
                    if w:
                        m[3 * (k - 1) + (ell - 1)][3 * (j - 1) + (mm - 1)] = w
    return m


def r_matrix_direct(x: Fraction, y: Fraction, c: Fraction) -> list:
    """R(x, y) = I + g(x, y) P."""
    g = g_fn(x, y, c)
    m = [[Fraction(0)] * 9 for _ in range(9)]
    for i in range(3):
        for j in range(3):
            m[3 * i + j][3 * i + j] += 1
            m[3 * j + i][3 * i + j] += g
    return m


def _embed(r9: list, pair: tuple) -> dict:
    """Sparse 27x27 operator acting as *r9* on the two given tensor slots."""
    p, q = pair
    out: dict = {}
    for col in range(27):
        digits = [col // 9, (col // 3) % 3, col % 3]
        src = 3 * digits[p] + digits[q]
        for dst in range(9):
            v = r9[dst][src]
            if v == 0:
                continue
            new = list(digits)
            new[p], new[q] = divmod(dst, 3)
            out[(9 * new[0] + 3 * new[1] + new[2], col)] = v
    return out


def _matmul(a: dict, b: dict) -> dict:
    by_row: dict = {}
    for (k, j), v in b.items():
        by_row.setdefault(k, []).append((j, v))
    out: dict = {}
    for (i, k), u in a.items():
        for j, v in by_row.get(k, ()):
            out[(i, j)] = out.get((i, j), Fraction(0)) + u * v
    return {key: v for key, v in out.items() if v != 0}


def yang_baxter_check(x, y, z, c, weight: WeightFn = vertex_weight) -> bool:
    x, y, z, c = (as_rational(v) for v in (x, y, z, c))
    r12 = _embed(r_matrix(x, y, c, weight), (0, 1))
    r13 = _embed(r_matrix(x, z, c, weight), (0, 2))
    r23 = _embed(r_matrix(y, z, c, weight), (1, 2))
    lhs = _matmul(_matmul(r12, r13), r23)
    rhs = _matmul(_matmul(r23, r13), r12)
    return lhs == rhs
