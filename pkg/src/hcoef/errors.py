"""Exception types shared across the package."""

from __future__ import annotations


class HCError(Exception):
    """Base class for all package errors."""


class DivisionByCoincidence(HCError, ZeroDivisionError):
    """A scalar function was evaluated on one of its poles."""

    def __init__(self, name: str, x, y, c=None):
        self.name = name
        self.pair = (x, y)
        self.c = c
        super().__init__(f"{name}({x}, {y}) hits a pole" + ("" if c is None else f" (c={c})"))


class DegeneratePoint(HCError, ValueError):
    """A point configuration fails the non-degeneracy rule."""


class SizeMismatch(HCError, ValueError):
    pass


class NotBoundaryCase(HCError, ValueError):
    pass


class BudgetExceeded(HCError, RuntimeError):
    pass


class SingularSystem(HCError, ArithmeticError):
    pass


class SamplerExhausted(HCError, RuntimeError):
    pass
