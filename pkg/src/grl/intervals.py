"""Rational intervals of the half line [0, inf)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .extended import INF


@dataclass(frozen=True)
class Interval:
    """An interval with rational endpoints; ``hi=None`` means unbounded above."""

    lo: Fraction
    hi: Optional[Fraction]
    lo_closed: bool = True
    hi_closed: bool = False

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        if self.hi is not None:
            object.__setattr__(self, "hi", Fraction(self.hi))
        else:
            object.__setattr__(self, "hi_closed", False)
        if self.lo < 0:
            raise ValueError(f"interval starts below zero: {self}")

    @classmethod
    def point(cls, x) -> Interval:
        return cls(Fraction(x), Fraction(x), True, True)

    @classmethod
    def open(cls, lo, hi) -> Interval:
        return cls(Fraction(lo), None if hi is None else Fraction(hi), False, False)

    @classmethod
    def closed(cls, lo, hi) -> Interval:
        return cls(Fraction(lo), Fraction(hi), True, True)

    @classmethod
    def ray(cls, lo, closed: bool = False) -> Interval:
        return cls(Fraction(lo), None, closed, False)

    @property
    def bounded(self) -> bool:
        return self.hi is not None

    @property
    def is_singleton(self) -> bool:
        return self.hi is not None and self.lo == self.hi and self.lo_closed and self.hi_closed

    def is_empty(self) -> bool:
        if self.hi is None:
            return False
        if self.lo > self.hi:
            return True
        if self.lo == self.hi:
            return not (self.lo_closed and self.hi_closed)
        return False

    def length(self):
        if self.hi is None:
            return INF
        if self.is_empty():
            return Fraction(0)
        return self.hi - self.lo

    def __contains__(self, x) -> bool:
        x = Fraction(x)
        if x < self.lo or (x == self.lo and not self.lo_closed):
            return False
        if self.hi is None:
            return True
        return x < self.hi or (x == self.hi and self.hi_closed)

    def intersect(self, other: Interval) -> Interval:
        if self.lo > other.lo:
            lo, lo_closed = self.lo, self.lo_closed
        elif other.lo > self.lo:
            lo, lo_closed = other.lo, other.lo_closed
        else:
            lo, lo_closed = self.lo, self.lo_closed and other.lo_closed
        if self.hi is None:
            hi, hi_closed = other.hi, other.hi_closed
        elif other.hi is None or self.hi < other.hi:
            hi, hi_closed = self.hi, self.hi_closed
        elif other.hi < self.hi:
            hi, hi_closed = other.hi, other.hi_closed
        else:
            hi, hi_closed = self.hi, self.hi_closed and other.hi_closed
        return Interval(lo, hi, lo_closed, hi_closed)

    def issubset(self, other: Interval) -> bool:
        if self.is_empty():
            return True
        if self.lo < other.lo or (self.lo == other.lo and self.lo_closed and not other.lo_closed):
            return False
        if other.hi is None:
            return True
        if self.hi is None:
            return False
        if self.hi > other.hi:
            return False
        return not (self.hi == other.hi and self.hi_closed and not other.hi_closed)

    def bisect(self) -> tuple[Interval, Interval]:
        """Split a bounded non-degenerate interval at its midpoint; the midpoint goes right."""
        if self.hi is None or self.lo == self.hi:
            raise ValueError(f"cannot bisect {self}")
        mid = (self.lo + self.hi) / 2
        return (
            Interval(self.lo, mid, self.lo_closed, False),
            Interval(mid, self.hi, True, self.hi_closed),
        )

    def sample_points(self) -> list[Fraction]:
        """A few members of the interval (endpoints when included, plus interior points)."""
        if self.is_singleton:
            return [self.lo]
        pts = []
        if self.lo_closed:
            pts.append(self.lo)
        if self.hi is None:
            pts += [self.lo + 1, self.lo + 7]
        else:
            w = self.hi - self.lo
            pts += [self.lo + w / 3, self.lo + w / 2]
            if self.hi_closed:
                pts.append(self.hi)
        return pts

    def sort_key(self):
        return (self.lo, not self.lo_closed)

    def __str__(self) -> str:
        if self.is_singleton:
            return f"{{{_fmt(self.lo)}}}"
        left = "[" if self.lo_closed else "("
        if self.hi is None:
            return f"{left}{_fmt(self.lo)},inf)"
        right = "]" if self.hi_closed else ")"
        return f"{left}{_fmt(self.lo)},{_fmt(self.hi)}{right}"


def _fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
