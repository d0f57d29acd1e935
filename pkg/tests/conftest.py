import random
from fractions import Fraction

import pytest

from hcoef.sampler import sample_point
from hcoef.zhc import PointConfig

# acceptance results, printed in the terminal summary
CRITERIA: dict = {}


@pytest.fixture
def canonical():
    return PointConfig.build(t=[0], x=[3], s=[5], y=[7], c=1)


@pytest.fixture
def rng():
    return random.Random(20121)


def points(a, b, count, seed=0, c=1):
    return [sample_point(random.Random(f"{seed}:{a}:{b}:{i}"), a, b, c) for i in range(count)]


def generic(rng, count, c=Fraction(1), spread=1000):
    from hcoef.verify import generic_values

    return generic_values(rng, count, Fraction(c), spread)


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(CRITERIA):
        ok, detail = CRITERIA[key]
        terminalreporter.write_line(f"criterion {key}: {'PASS' if ok else 'FAIL'}  {detail}")
