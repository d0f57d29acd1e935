"""Deterministic generic sample points."""

from __future__ import annotations

import random

from .arith import as_rational
from .errors import DegeneratePoint, SamplerExhausted
from .zhc import PointConfig

LOW, HIGH = -1000, 1000


def sample_point(seed, a: int, b: int, c=1, low: int = LOW, high: int = HIGH,
                 max_tries: int = 1000) -> PointConfig:
    """Distinct integers from [low, high] satisfying the full ±2c exclusion.

    The same seed always yields the same point.
    """
    c = as_rational(c)
    if c == 0:
        raise DegeneratePoint("c must be non-zero")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    n = 2 * a + 2 * b
    if n > high - low + 1:
        raise SamplerExhausted(f"cannot draw {n} distinct integers from [{low}, {high}]")
    for _ in range(max_tries):
        vals = rng.sample(range(low, high + 1), n)
        pt = PointConfig.build(
            t=vals[:a], x=vals[a:2 * a], s=vals[2 * a:2 * a + b], y=vals[2 * a + b:],
            c=c, validate=False,
        )
        if pt.is_generic():
            return pt
    raise SamplerExhausted(f"no generic point after {max_tries} draws (a={a}, b={b}, c={c})")
