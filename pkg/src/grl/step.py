"""Finitely-representable non-negative step functions on [0, inf)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DomainError
from .intervals import Interval


@dataclass(frozen=True)
class StepFunction:
    """Breakpoints ``0 < b1 < ... < bm`` with values at ``0`` and each ``bi``,
    on each open gap ``(b_{i-1}, b_i)`` (``b0 = 0``), and on the tail ``(bm, inf)``.

    ``point_values`` has ``m + 1`` entries, ``interval_values`` has ``m``.
    """

    breakpoints: tuple = ()
    point_values: tuple = (Fraction(0),)
    interval_values: tuple = ()
    tail_value: object = Fraction(0)

    def __post_init__(self):
        bps = tuple(Fraction(b) for b in self.breakpoints)
        if any(b <= 0 for b in bps) or any(a >= b for a, b in zip(bps, bps[1:])):
            raise DomainError("breakpoints must be positive and strictly increasing")
        pv = tuple(_num(x) for x in self.point_values)
        iv = tuple(_num(x) for x in self.interval_values)
        if len(pv) != len(bps) + 1 or len(iv) != len(bps):
            raise DomainError("need one point value per breakpoint plus the origin, and one value per gap")
        tail = _num(self.tail_value)
        if any(x < 0 for x in (*pv, *iv, tail)):
            raise DomainError("step function values must be non-negative")
        object.__setattr__(self, "breakpoints", bps)
        object.__setattr__(self, "point_values", pv)
        object.__setattr__(self, "interval_values", iv)
        object.__setattr__(self, "tail_value", tail)

    @classmethod
    def constant(cls, value) -> StepFunction:
        return cls((), (value,), (), value)

    @classmethod
    def indicator(cls, hi, value=1, closed: bool = True) -> StepFunction:
        """``value`` on ``[0, hi]`` (or ``[0, hi)``), zero afterwards."""
        return cls((Fraction(hi),), (value, value if closed else 0), (value,), 0)

    @classmethod
    def from_levels(cls, breakpoints: Sequence, levels: Sequence, at_zero) -> StepFunction:
        """Left-continuous step function: ``levels[j]`` on ``(b_{j-1}, b_j]``, zero after ``b_m``."""
        levels = tuple(levels)
        return cls(tuple(breakpoints), (at_zero, *levels), levels, 0)

    def __call__(self, x):
        x = Fraction(x)
        if x < 0:
            raise DomainError("step functions live on [0, inf)")
        if x == 0:
            return self.point_values[0]
        for i, b in enumerate(self.breakpoints):
            if x < b:
                return self.interval_values[i]
            if x == b:
                return self.point_values[i + 1]
        return self.tail_value

    def cells(self) -> list[tuple[Interval, object]]:
        """The breakpoint partition of [0, inf) with the constant value on each cell."""
        out = [(Interval.point(0), self.point_values[0])]
        prev = Fraction(0)
        for i, b in enumerate(self.breakpoints):
            out.append((Interval.open(prev, b), self.interval_values[i]))
            out.append((Interval.point(b), self.point_values[i + 1]))
            prev = b
        out.append((Interval.ray(prev), self.tail_value))
        return out

    def values_on(self, cell: Interval) -> list:
        """Every value the function takes on ``cell``."""
        return [val for piece, val in self.cells() if not piece.intersect(cell).is_empty()]

    def sup(self):
        return max((*self.point_values, *self.interval_values, self.tail_value))

    @property
    def last_breakpoint(self) -> Fraction:
        return self.breakpoints[-1] if self.breakpoints else Fraction(0)

    def map(self, fn) -> StepFunction:
        return StepFunction(
            self.breakpoints,
            tuple(fn(x) for x in self.point_values),
            tuple(fn(x) for x in self.interval_values),
            fn(self.tail_value),
        )

    def combine(self, other: StepFunction, op) -> StepFunction:
        """Pointwise ``op`` of two step functions on their merged breakpoints."""
        bps, pts, mids, probe = _merged(self, other)
        pv = [op(self(x), other(x)) for x in pts]
        iv = [op(self(x), other(x)) for x in mids]
        return StepFunction(tuple(bps), tuple(pv), tuple(iv), op(self(probe), other(probe)))

    def __add__(self, other: StepFunction) -> StepFunction:
        return self.combine(other, lambda a, b: a + b)

    def scaled(self, k) -> StepFunction:
        return self.map(lambda x: k * x)

    def __le__(self, other: StepFunction) -> bool:
        _, pts, mids, probe = _merged(self, other)
        return all(self(x) <= other(x) for x in (*pts, *mids, probe))

    def __str__(self) -> str:
        parts = [f"{cell}:{_fmt(v)}" for cell, v in self.cells()]
        return " ".join(parts)


def _merged(u: StepFunction, w: StepFunction):
    """Merged breakpoints, one probe point per cell of the common breakpoint partition."""
    bps = sorted(set(u.breakpoints) | set(w.breakpoints))
    pts = [Fraction(0), *bps]
    mids = [(a + b) / 2 for a, b in zip(pts, pts[1:])]
    return bps, pts, mids, pts[-1] + 1


def _num(x):
    if isinstance(x, float):
        return x
    return Fraction(x)


def _fmt(x) -> str:
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return repr(x)
