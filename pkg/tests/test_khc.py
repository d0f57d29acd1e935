import random
from fractions import Fraction as F

import pytest

from conftest import generic
from hcoef.arith import f_fn, prod_over, shift
from hcoef.khc import k_det, k_eval, k_pole_expand, k_residue_at_coincidence, k_sym
from hcoef.residue import pole_decompose, reconstruct

ONE = F(1)
X2, Y2 = (F(7), F(-1)), (F(5), F(3))


@pytest.mark.parametrize("fn", [k_det, k_sym, k_pole_expand])
def test_examples(fn):
    assert fn((F(2),), (F(0),), ONE) == F(1, 2)
    assert fn(X2, Y2, ONE) == F(-11, 64)
    assert fn((), (), ONE) == 1


@pytest.mark.parametrize("fn", [k_sym, k_pole_expand, k_eval])
@pytest.mark.parametrize("z", [F(0), F(13, 7), F(-40)])
def test_k1_at_shifted_pair(fn, z):
    assert fn((z - 1,), (z,), ONE) == -1


@pytest.mark.parametrize("n", range(6))
def test_triple_agreement(n):
    rng = random.Random(n)
    for c in (F(1), F(-2), F(1, 3)):
        vals = generic(rng, 2 * n, c)
        xs, ys = tuple(vals[:n]), tuple(vals[n:])
        assert k_det(xs, ys, c) == k_sym(xs, ys, c) == k_pole_expand(xs, ys, c)


def test_symmetry():
    rng = random.Random(5)
    vals = generic(rng, 8, 1)
    xs, ys = vals[:4], vals[4:]
    ref = k_det(xs, ys, ONE)
    for _ in range(10):
        px, py = xs[:], ys[:]
        rng.shuffle(px)
        rng.shuffle(py)
        assert k_det(px, py, ONE) == ref


@pytest.mark.parametrize("n", range(5))
def test_shift_identities(n):
    rng = random.Random(100 + n)
    c = F(2)
    vals = generic(rng, 2 * n + 1, c)
    xs, ys, z = tuple(vals[:n]), tuple(vals[n:2 * n]), vals[-1]
    kn = k_det(xs, ys, c)
    for fn in (k_sym, k_pole_expand):
        assert fn(xs + (z - c,), ys + (z,), c) == -kn
        assert fn(xs + (z,), ys + (z + c,), c) == -kn
    red = (-1) ** n * k_det(ys, xs, c) / prod_over(f_fn, ys, xs, c)
    assert k_det(shift(xs, -c), ys, c) == red
    assert k_det(xs, shift(ys, c), c) == red


def test_k_eval_strips_several_pairs():
    c = ONE
    xs, ys = (F(4), F(10), F(22)), (F(0), F(11), F(31))
    # x=10 pairs with y=11; the rest is an ordinary K_2
    assert k_eval(xs, ys, c) == -k_det((F(4), F(22)), (F(0), F(31)), c)


def test_residue_examples():
    # the free variable's value is ignored
    assert k_residue_at_coincidence((F(99),), (F(0),), ONE, "y") == -1
    assert k_residue_at_coincidence((F(99),), (F(0),), F(3), "y") == -3
    assert k_residue_at_coincidence((F(7), F(5)), (F(3), F(99)), ONE, "y") == F(-9, 16)
    assert k_residue_at_coincidence((F(99),), (F(0),), ONE, "x") == 1
    assert k_residue_at_coincidence((F(99),), (F(0),), F(3), "x") == 3
    assert k_residue_at_coincidence((F(7), F(99)), (F(3), F(5)), ONE, "x") == F(9, 16)


def _extract(xs, ys, c, variable):
    n = len(xs)
    poles = ys if variable == "x" else xs
    us = [F(10**4 + 3 * k) for k in range(n + 2)]
    if variable == "x":
        samples = [(u, k_det(xs[:-1] + (u,), ys, c)) for u in us]
    else:
        samples = [(u, k_det(xs, ys[:-1] + (u,), c)) for u in us]
    return pole_decompose(samples, poles)[-1]


@pytest.mark.parametrize("n", [1, 2, 3, 4])
@pytest.mark.parametrize("variable", ["x", "y"])
def test_residue_matches_extraction(n, variable):
    rng = random.Random(n * 7)
    c = F(3, 2)
    vals = generic(rng, 2 * n, c)
    xs, ys = tuple(vals[:n]), tuple(vals[n:])
    assert _extract(xs, ys, c, variable) == k_residue_at_coincidence(xs, ys, c, variable)


def test_decay_reconstruction():
    rng = random.Random(3)
    c = ONE
    vals = generic(rng, 8, c)
    xs, ys = tuple(vals[:4]), tuple(vals[4:])
    us = [F(5000), F(5003), F(5007), F(5011)]
    samples = [(u, k_det(xs[:-1] + (u,), ys, c)) for u in us]
    residues = pole_decompose(samples, ys)
    fresh = F(-77777, 3)
    assert reconstruct(residues, ys, fresh) == k_det(xs[:-1] + (fresh,), ys, c)


def test_holomorphic_under_tie():
    rng = random.Random(11)
    c = ONE
    vals = generic(rng, 5, c)
    rest, ys = (vals[0],), tuple(vals[1:4])
    yk = ys[1]
    mags = []
    for e in range(3, 8):
        d = F(1, 10**e)
        x1 = yk + d
        mags.append(abs(d * k_det((x1, x1 - c) + rest, ys, c)))
    for big, small in zip(mags, mags[1:]):
        assert small < big
    # halving as well
    for e in range(3, 7):
        d = F(1, 10**e)
        v1 = abs(d * k_det((yk + d, yk + d - c) + rest, ys, c))
        v2 = abs(d / 2 * k_det((yk + d / 2, yk + d / 2 - c) + rest, ys, c))
        assert v2 < v1
