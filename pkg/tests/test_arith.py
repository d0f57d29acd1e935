from fractions import Fraction as F
from itertools import permutations

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from hcoef.arith import (
    delta_plain,
    delta_prime,
    det_exact,
    f_fn,
    format_rational,
    g_fn,
    h_fn,
    parse_rational,
    prod_over,
    solve_linear,
    t_fn,
)
from hcoef.errors import DivisionByCoincidence

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=12)
nonzero = rationals.filter(lambda v: v != 0)


def leibniz(m):
    n = len(m)
    total = F(0)
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = F(-1) ** inversions
        for i in range(n):
            term *= m[i][perm[i]]
        total += term
    return total


@pytest.mark.parametrize("x, y, c, expected", [
    (3, 1, 1, F(1, 2)),
    (1, 3, 1, F(-1, 2)),
    (5, 0, 2, F(2, 5)),
])
def test_g_examples(x, y, c, expected):
    assert g_fn(F(x), F(y), F(c)) == expected


def test_f_h_t_examples():
    assert f_fn(F(5), F(3), F(1)) == F(3, 2)
    assert f_fn(F(3), F(5), F(1)) == F(1, 2)
    assert f_fn(F(11, 3) + 2, F(11, 3), F(2)) == 2
    assert h_fn(F(7), F(5), F(1)) == 3
    assert t_fn(F(7), F(5), F(1)) == F(1, 6)
    assert t_fn(F(-1), F(5), F(1)) == F(1, 30)


def test_poles_raise():
    with pytest.raises(DivisionByCoincidence):
        g_fn(F(2), F(2), F(1))
    with pytest.raises(DivisionByCoincidence):
        f_fn(F(2), F(2), F(1))
    with pytest.raises(DivisionByCoincidence):
        t_fn(F(1), F(2), F(1))
    with pytest.raises(DivisionByCoincidence) as info:
        prod_over(g_fn, (F(1), F(4)), (F(4),), F(1))
    assert info.value.pair == (4, 4)


def test_prod_over_examples():
    assert prod_over(f_fn, (), (F(5), F(7)), F(1)) == 1
    assert prod_over(g_fn, F(7), (F(5), F(3)), F(1)) == F(1, 8)
    assert prod_over(h_fn, (F(7), F(-1)), (F(5), F(3)), F(1)) == 225


def test_deltas():
    assert delta_plain((F(5), F(3)), F(1)) == F(1, 2)
    assert delta_prime((F(7), F(-1)), F(1)) == F(-1, 8)
    assert delta_plain((F(9),), F(1)) == 1
    assert delta_prime((), F(1)) == 1


def test_det_examples():
    eye = [[F(int(i == j)) for j in range(3)] for i in range(3)]
    assert det_exact(eye) == 1
    assert det_exact([[F(1, 6), F(1, 20)], [F(1, 30), F(1, 12)]]) == F(11, 900)
    assert det_exact([[1, 2], [2, 4]]) == 0
    assert det_exact([]) == 1


def test_det_zero_pivot_needs_swap():
    m = [[0, 1, 2], [1, 0, 3], [4, -3, 8]]
    assert det_exact(m) == leibniz([[F(v) for v in row] for row in m])


@given(st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(rationals, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_det_matches_leibniz(m):
    assert det_exact(m) == leibniz(m)


@given(rationals, rationals, nonzero)
def test_function_identities(x, y, c):
    assume(x != y and x - y + c != 0 and x - y - c != 0 and y - x + c != 0)
    assert g_fn(x, y, c) == -g_fn(y, x, c)
    assert h_fn(x - c, y, c) == 1 / g_fn(x, y, c)
    assert f_fn(x - c, y, c) == 1 / f_fn(y, x, c)
    assert t_fn(x - c, y, c) == t_fn(y, x, c)
    assert f_fn(x, y, c) == 1 + g_fn(x, y, c)
    assert t_fn(x, y, c) == g_fn(x, y, c) / h_fn(x, y, c)
    assert h_fn(x, y, c) == f_fn(x, y, c) / g_fn(x, y, c)


@given(rationals)
def test_rational_text_round_trip(v):
    assert parse_rational(format_rational(v)) == v


@pytest.mark.parametrize("bad", ["1 /2", " 3", "1.5", "1/-2", "+4", "", "a/b"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)


def test_solve_linear():
    a = [[F(2), F(1)], [F(1), F(3)]]
    assert solve_linear(a, [F(3), F(5)]) == [F(4, 5), F(7, 5)]
    with pytest.raises(ZeroDivisionError):
        solve_linear([[F(1), F(2)], [F(2), F(4)]], [F(1), F(1)])
