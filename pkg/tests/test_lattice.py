import json
from fractions import Fraction as F

import pytest

from conftest import points
from hcoef.errors import BudgetExceeded
from hcoef.khc import k_det
from hcoef.lattice import (
    Column,
    LatticeSpec,
    configurations,
    r_matrix,
    r_matrix_direct,
    vertex_type,
    vertex_weight,
    yang_baxter_check,
    z_lattice_enum,
    z_lattice_transfer,
)
from hcoef.zhc import SumFormulaId, z_sum

ONE = F(1)


def test_vertex_weight_examples():
    assert vertex_weight(False, 2, 2, 2, 2, F(3), F(0), ONE) == F(4, 3)
    assert vertex_weight(False, 2, 1, 2, 1, F(3), F(0), ONE) == F(1, 3)
    assert vertex_weight(True, 2, 3, 3, 2, F(5), F(7), ONE) == F(1, 2)
    assert vertex_weight(False, 1, 1, 2, 2, F(3), F(0), ONE) == 1
    assert vertex_weight(True, 1, 1, 2, 2, F(3), F(0), ONE) == 1
    # colour-exchanging patterns of the other vertex kind are forbidden
    assert vertex_weight(True, 2, 1, 2, 1, F(3), F(0), ONE) == 0
    assert vertex_weight(False, 2, 3, 3, 2, F(5), F(7), ONE) == 0
    assert vertex_weight(False, 1, 2, 3, 1, F(5), F(7), ONE) == 0


def test_dotted_a_type_swaps_arguments():
    assert vertex_weight(True, 3, 3, 3, 3, F(5), F(7), ONE) == F(3, 2)


def test_canonical_small_cases(canonical):
    assert z_lattice_enum(LatticeSpec.canonical([0], [3], [], [])) == F(1, 3)
    assert z_lattice_enum(LatticeSpec.canonical([], [], [5], [7])) == F(1, 2)
    spec = LatticeSpec.from_point(canonical)
    assert z_lattice_enum(spec) == F(9, 40)
    assert z_lattice_transfer(spec) == F(9, 40)
    assert z_lattice_transfer(LatticeSpec.canonical([0], [3], [], [])) == F(1, 3)
    assert z_lattice_transfer(LatticeSpec.canonical([], [], [], [])) == 1
    assert z_lattice_enum(LatticeSpec.canonical([], [], [], [])) == 1


def test_worked_point_configurations(canonical):
    weights = sorted(w for w, _ in configurations(LatticeSpec.from_point(canonical)))
    assert weights == [F(1, 60), F(5, 24)]


@pytest.mark.parametrize("a, b", [(1, 1), (2, 1), (1, 2), (2, 2), (3, 1), (1, 3), (4, 0), (0, 4)])
def test_enum_equals_transfer_equals_formula(a, b):
    for pt in points(a, b, 2, seed=55):
        spec = LatticeSpec.from_point(pt)
        value = z_lattice_enum(spec)
        assert value == z_lattice_transfer(spec)
        assert value == z_sum(SumFormulaId.GF, pt)


def test_boundary_matches_determinant():
    for pt in points(3, 0, 2):
        assert z_lattice_transfer(LatticeSpec.from_point(pt)) == k_det(pt.x, pt.t, pt.c)
    for pt in points(0, 3, 2):
        assert z_lattice_transfer(LatticeSpec.from_point(pt)) == k_det(pt.y, pt.s, pt.c)


def test_every_line_with_distinct_ends_has_c_vertex():
    for a, b in [(1, 1), (2, 1), (1, 2)]:
        pt = points(a, b, 1, seed=8)[0]
        spec = LatticeSpec.from_point(pt)
        for w, verts in configurations(spec):
            assert w != 0
            kinds = {(r, col): vertex_type(spec.columns[col].dotted, *v[2:])
                     for (r, col, *_), v in zip(verts, verts)}
            assert None not in kinds.values()
            for r in range(len(spec.rows)):
                if spec.left[r] != spec.right[r]:
                    assert any(kinds[(r, col)] == "c" for col in range(len(spec.columns)))
            for col in range(len(spec.columns)):
                if spec.bottom[col] != spec.top[col]:
                    assert any(kinds[(r, col)] == "c" for r in range(len(spec.rows)))


def test_budget():
    spec = LatticeSpec.from_point(points(3, 2, 1)[0])
    with pytest.raises(BudgetExceeded):
        z_lattice_enum(spec)
    assert z_lattice_enum(spec, budget=25) == z_lattice_transfer(spec)


def test_budget_env(monkeypatch):
    spec = LatticeSpec.from_point(points(2, 1, 1)[0])
    monkeypatch.setenv("HC_MAX_LATTICE", "4")
    with pytest.raises(BudgetExceeded):
        z_lattice_enum(spec)


def test_json_round_trip(canonical):
    spec = LatticeSpec.from_point(canonical)
    data = json.loads(json.dumps(spec.to_json()))
    assert data == {
        "c": "1",
        "columns": [{"param": "7", "dotted": True}, {"param": "0", "dotted": False}],
        "rows": ["5", "3"],
        "boundary": {"left": [2, 2], "right": [3, 1], "bottom": [3, 2], "top": [2, 1]},
    }
    assert LatticeSpec.from_json(data) == spec


def test_non_canonical_spec():
    # single regular vertex with pass-through boundary
    spec = LatticeSpec(columns=(Column(F(2)),), rows=(F(9),), left=(1,), right=(1,),
                       bottom=(3,), top=(3,), c=ONE)
    assert z_lattice_enum(spec) == z_lattice_transfer(spec) == 1


def test_r_matrix_from_table_is_identity_plus_permutation():
    for x, y, c in [(3, 1, 1), (F(5, 2), -4, F(2, 3))]:
        assert r_matrix(F(x), F(y), F(c)) == r_matrix_direct(F(x), F(y), F(c))


@pytest.mark.parametrize("args", [(3, 1, 0, 1), (5, 2, -1, 2), (F(1, 2), F(-7, 3), 11, F(-5, 4))])
def test_yang_baxter(args):
    assert yang_baxter_check(*args)


def _scaled(kind, factor):
    def weight(dotted, left, right, bottom, top, x, y, c):
        w = vertex_weight(dotted, left, right, bottom, top, x, y, c)
        return w * factor if vertex_type(dotted, left, right, bottom, top) == kind else w
    return weight


@pytest.mark.parametrize("kind", ["a", "b", "c"])
def test_yang_baxter_detects_mutation(kind):
    assert not yang_baxter_check(3, 1, 0, 1, weight=_scaled(kind, 2))


def test_yang_baxter_detects_single_entry():
    def weight(dotted, left, right, bottom, top, x, y, c):
        w = vertex_weight(dotted, left, right, bottom, top, x, y, c)
        return w + 1 if (left, right, bottom, top) == (1, 2, 1, 2) else w
    assert not yang_baxter_check(5, 2, -1, 2, weight=weight)
