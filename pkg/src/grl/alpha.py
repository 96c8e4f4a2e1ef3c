"""Set functions on the level axis [0, inf).

Four closed families are supported:

``sigma_additive``
    finitely many atoms plus piecewise-constant density on disjoint segments
    (Lebesgue measure is density 1 on [0, inf)).
``dirac``
    unit point mass at ``location``.
``vanishing_on_bounded``
    ``0`` on bounded sets, ``level`` on unbounded ones.
``distorted_power``
    ``E -> lambda(E) ** exponent``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import DomainError
from .extended import INF, Ext, is_inf, rational_power
from .intervals import Interval

FAMILIES = ("sigma_additive", "dirac", "vanishing_on_bounded", "distorted_power")


@dataclass(frozen=True)
class Segment:
    lo: Fraction
    hi: Optional[Fraction]
    density: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "density", Fraction(self.density))
        if self.hi is not None:
            object.__setattr__(self, "hi", Fraction(self.hi))
            if self.hi <= self.lo:
                raise DomainError(f"segment [{self.lo}, {self.hi}] is empty")
        if self.lo < 0 or self.density < 0:
            raise DomainError("segments must lie in [0, inf) with non-negative density")

    @property
    def interval(self) -> Interval:
        return Interval(self.lo, self.hi, True, self.hi is not None)


@dataclass(frozen=True)
class AlphaCapacity:
    kind: str
    atoms: tuple[tuple[Fraction, Fraction], ...] = ()
    segments: tuple[Segment, ...] = ()
    location: Fraction = Fraction(0)
    level: Fraction = Fraction(1)
    exponent: Fraction = Fraction(1)

    def __post_init__(self):
        if self.kind not in FAMILIES:
            raise DomainError(f"unknown set function family {self.kind!r}")
        atoms = tuple(sorted((Fraction(x), Fraction(m)) for x, m in self.atoms))
        for x, m in atoms:
            if x < 0 or m <= 0:
                raise DomainError("atoms need a location >= 0 and a positive mass")
        segs = tuple(sorted((s if isinstance(s, Segment) else Segment(*s) for s in self.segments), key=lambda s: s.lo))
        for a, b in zip(segs, segs[1:]):
            if a.hi is None or a.hi > b.lo:
                raise DomainError("segments must be pairwise disjoint")
        object.__setattr__(self, "atoms", atoms)
        object.__setattr__(self, "segments", segs)
        object.__setattr__(self, "location", Fraction(self.location))
        object.__setattr__(self, "level", Fraction(self.level))
        object.__setattr__(self, "exponent", Fraction(self.exponent))
        if self.location < 0:
            raise DomainError("dirac location must be >= 0")
        if self.kind == "vanishing_on_bounded" and self.level <= 0:
            raise DomainError("vanishing_on_bounded needs a positive level")
        if self.kind == "distorted_power" and self.exponent <= 0:
            raise DomainError("distorted_power needs a positive exponent")

    # constructors

    @classmethod
    def sigma_additive(cls, atoms=(), segments=()) -> AlphaCapacity:
        return cls("sigma_additive", atoms=tuple(atoms), segments=tuple(segments))

    @classmethod
    def lebesgue(cls, upto=None, density=1) -> AlphaCapacity:
        return cls.sigma_additive(segments=[Segment(0, upto, density)])

    @classmethod
    def dirac(cls, location) -> AlphaCapacity:
        return cls("dirac", location=Fraction(location))

    @classmethod
    def vanishing_on_bounded(cls, level=1) -> AlphaCapacity:
        return cls("vanishing_on_bounded", level=Fraction(level))

    @classmethod
    def distorted_power(cls, exponent) -> AlphaCapacity:
        return cls("distorted_power", exponent=Fraction(exponent))

    # evaluation

    def measure(self, cell: Interval) -> Ext:
        """Value of the set function on an interval."""
        if cell.is_empty():
            return Fraction(0)
        if self.kind == "sigma_additive":
            total = sum((m for x, m in self.atoms if x in cell), Fraction(0))
            for s in self.segments:
                if s.density == 0:
                    continue
                piece = cell.intersect(s.interval)
                if piece.is_empty():
                    continue
                length = piece.length()
                if is_inf(length):
                    return INF
                total += s.density * length
            return total
        if self.kind == "dirac":
            return Fraction(1) if self.location in cell else Fraction(0)
        if self.kind == "vanishing_on_bounded":
            return Fraction(0) if cell.bounded else self.level
        length = cell.length()
        if is_inf(length):
            return INF
        return rational_power(length, self.exponent)

    def mass_at_origin(self) -> Ext:
        return self.measure(Interval.point(0))

    def split_mass(self, cell: Interval, depth: int) -> Ext:
        """Total value over the pieces of ``cell`` after ``depth`` rounds of midpoint bisection.

        Singletons are never split. An unbounded cell is read through
        :meth:`countable_split_mass` at the same depth.
        """
        if cell.is_empty():
            return Fraction(0)
        if not cell.bounded:
            return self.countable_split_mass(cell, depth)
        if cell.is_singleton or depth == 0:
            return self.measure(cell)
        if self.kind in ("sigma_additive", "dirac"):
            return self.measure(cell)
        if self.kind == "vanishing_on_bounded":
            return Fraction(0)
        pieces = 2**depth
        return pieces * rational_power(cell.length() / pieces, self.exponent)

    def countable_split_mass(self, cell: Interval, depth: int = 0) -> Ext:
        """Total value over a countable partition of an unbounded cell into bounded pieces.

        The k-th unit piece ``[lo+k, lo+k+1)`` is cut into ``2**(k+depth)``
        equal parts, so the pieces shrink geometrically along the ray.
        For ``lambda**p`` the total is ``sum_k 2**((k+depth)(1-p))``, finite
        exactly when ``p > 1``.
        """
        if cell.bounded:
            raise DomainError("countable split is only defined for unbounded cells")
        if self.kind in ("sigma_additive", "dirac"):
            return self.measure(cell)
        if self.kind == "vanishing_on_bounded":
            return Fraction(0)
        p = self.exponent
        if p <= 1:
            return INF
        ratio = rational_power(Fraction(2), 1 - p)
        return rational_power(Fraction(2**depth), 1 - p) / (1 - ratio)

    def total_variation(self) -> Ext:
        if self.kind == "sigma_additive":
            total = sum((m for _, m in self.atoms), Fraction(0))
            for s in self.segments:
                if s.density == 0:
                    continue
                if s.hi is None:
                    return INF
                total += s.density * (s.hi - s.lo)
            return total
        if self.kind == "dirac":
            return Fraction(1)
        # countably many disjoint unbounded sets, or a single set of infinite length
        return INF

    # algebra

    def as_sigma_additive(self) -> Optional[AlphaCapacity]:
        if self.kind == "sigma_additive":
            return self
        if self.kind == "dirac":
            return AlphaCapacity.sigma_additive(atoms=[(self.location, 1)])
        if self.kind == "distorted_power" and self.exponent == 1:
            return AlphaCapacity.lebesgue()
        return None

    def scaled(self, k) -> AlphaCapacity:
        k = Fraction(k)
        if k <= 0:
            raise DomainError("scale factor must be positive")
        if self.kind == "vanishing_on_bounded":
            return AlphaCapacity.vanishing_on_bounded(self.level * k)
        sig = self.as_sigma_additive()
        if sig is None:
            raise DomainError(f"{self.kind} is not closed under scaling")
        return AlphaCapacity.sigma_additive(
            atoms=[(x, m * k) for x, m in sig.atoms],
            segments=[Segment(s.lo, s.hi, s.density * k) for s in sig.segments],
        )

    def __add__(self, other: AlphaCapacity) -> AlphaCapacity:
        if self.kind == other.kind == "vanishing_on_bounded":
            return AlphaCapacity.vanishing_on_bounded(self.level + other.level)
        a, b = self.as_sigma_additive(), other.as_sigma_additive()
        if a is None or b is None:
            raise DomainError(f"cannot represent the sum of {self.kind} and {other.kind}")
        return AlphaCapacity.sigma_additive(atoms=a.atoms + b.atoms, segments=_add_segments(a.segments, b.segments))

    def describe(self) -> str:
        if self.kind == "sigma_additive":
            atoms = ", ".join(f"{x}:{m}" for x, m in self.atoms)
            segs = ", ".join(f"{s.interval}x{s.density}" for s in self.segments)
            return f"sigma_additive(atoms=[{atoms}], segments=[{segs}])"
        if self.kind == "dirac":
            return f"dirac({self.location})"
        if self.kind == "vanishing_on_bounded":
            return f"vanishing_on_bounded({self.level})"
        return f"distorted_power({self.exponent})"


def _add_segments(xs, ys) -> list[Segment]:
    cuts = set()
    for s in (*xs, *ys):
        cuts.add(s.lo)
        if s.hi is not None:
            cuts.add(s.hi)
    cuts = sorted(cuts)
    pieces = list(zip(cuts, cuts[1:])) + [(cuts[-1], None)] if cuts else []

    def density_at(segs, lo, hi):
        for s in segs:
            if s.lo <= lo and (s.hi is None or (hi is not None and hi <= s.hi)):
                return s.density
        return Fraction(0)

    out = []
    for lo, hi in pieces:
        d = density_at(xs, lo, hi) + density_at(ys, lo, hi)
        if d > 0:
            out.append(Segment(lo, hi, d))
    return out


def alpha_variation(v: AlphaCapacity) -> Ext:
    """Total variation of a half-line set function (closed form per family)."""
    return v.total_variation()
