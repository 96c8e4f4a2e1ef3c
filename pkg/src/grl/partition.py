"""Interval partitions of [0, inf), tagged sums, and refinement envelopes.

A partition is a finite ordered list of disjoint cells covering [0, inf),
the last one unbounded. With ``split_tail`` (always on in the refinement
probe) that unbounded cell is read as a countable family of bounded pieces,
see :meth:`AlphaCapacity.countable_split_mass`; this is how partitions made
only of bounded sets are expressed with finitely many cells.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .alpha import AlphaCapacity
from .errors import DomainError
from .extended import Ext, format_ext, is_inf, mul
from .intervals import Interval
from .step import StepFunction

DEFAULT_TOLERANCE = 1e-6
DEFAULT_DIVERGENCE_BOUND = 1e6
DEFAULT_MAX_DEPTH = 48


@dataclass(frozen=True)
class AlphaPartition:
    cells: tuple[Interval, ...]

    def __post_init__(self):
        cells = tuple(sorted(self.cells, key=Interval.sort_key))
        if not cells:
            raise DomainError("a partition needs at least one cell")
        first, last = cells[0], cells[-1]
        if first.lo != 0 or not first.lo_closed:
            raise DomainError("the first cell must start at 0 (included)")
        if last.bounded:
            raise DomainError("the last cell must be unbounded")
        for a, b in zip(cells, cells[1:]):
            if a.is_empty() or not a.bounded or a.hi != b.lo or a.hi_closed == b.lo_closed:
                raise DomainError(f"cells {a} and {b} do not tile [0, inf)")
        object.__setattr__(self, "cells", cells)

    @classmethod
    def trivial(cls) -> AlphaPartition:
        return cls((Interval.ray(0, closed=True),))

    @classmethod
    def from_cuts(cls, cuts: Sequence, isolate: bool = False) -> AlphaPartition:
        """Half-open cells ``[c_{i-1}, c_i)``; with ``isolate`` each cut becomes a singleton."""
        pts = sorted({Fraction(c) for c in cuts if Fraction(c) > 0})
        cells = []
        prev, closed = Fraction(0), True
        if isolate:
            cells.append(Interval.point(0))
            closed = False
        for c in pts:
            if isolate:
                cells += [Interval(prev, c, closed, False), Interval.point(c)]
                closed = False
            else:
                cells.append(Interval(prev, c, closed, False))
                closed = True
            prev = c
        cells.append(Interval.ray(prev, closed=closed))
        return cls(tuple(cells))

    @classmethod
    def of_step(cls, u: StepFunction) -> AlphaPartition:
        return cls(tuple(cell for cell, _ in u.cells()))

    def bisected(self) -> AlphaPartition:
        out = []
        for c in self.cells:
            if c.bounded and not c.is_singleton:
                out.extend(c.bisect())
            else:
                out.append(c)
        return AlphaPartition(tuple(out))

    def __len__(self) -> int:
        return len(self.cells)

    def __str__(self) -> str:
        return "{" + ", ".join(str(c) for c in self.cells) + "}"


@dataclass(frozen=True)
class TaggedPartition:
    partition: AlphaPartition
    tags: tuple[Fraction, ...]

    def __post_init__(self):
        tags = tuple(Fraction(t) for t in self.tags)
        if len(tags) != len(self.partition.cells):
            raise DomainError("one tag per cell is required")
        for cell, t in zip(self.partition.cells, tags):
            if t not in cell:
                raise DomainError(f"tag {t} is not in cell {cell}")
        object.__setattr__(self, "tags", tags)

    @classmethod
    def leftmost(cls, partition: AlphaPartition) -> TaggedPartition:
        return cls(partition, tuple(c.sample_points()[0] for c in partition.cells))


def is_finer(fine: AlphaPartition, coarse: AlphaPartition) -> bool:
    """True iff every cell of ``fine`` lies inside some cell of ``coarse``."""
    return all(any(c.issubset(d) for d in coarse.cells) for c in fine.cells)


def common_refinement(p1: AlphaPartition, p2: AlphaPartition) -> AlphaPartition:
    cells = []
    for a in p1.cells:
        for b in p2.cells:
            x = a.intersect(b)
            if not x.is_empty():
                cells.append(x)
    return AlphaPartition(tuple(cells))


def _cell_mass(v: AlphaCapacity, cell: Interval, split_tail: bool, depth: int = 0) -> Ext:
    if split_tail and not cell.bounded:
        return v.countable_split_mass(cell, depth)
    return v.measure(cell)


def cell_terms(u: StepFunction, v: AlphaCapacity, tp: TaggedPartition, split_tail: bool = False) -> list:
    """Per-cell terms ``u(tag) * v(cell)`` with ``0 * inf = 0``.

    With ``split_tail`` the unbounded cell stands for its countable split
    into bounded pieces; ``u`` must then be constant on it so that the tags
    of the pieces do not matter.
    """
    terms = []
    for cell, tag in zip(tp.partition.cells, tp.tags):
        if split_tail and not cell.bounded and len(set(u.values_on(cell))) > 1:
            raise DomainError("split_tail needs u constant on the unbounded cell")
        terms.append(mul(u(tag), _cell_mass(v, cell, split_tail)))
    return terms


def tagged_sum(u: StepFunction, v: AlphaCapacity, tp: TaggedPartition, split_tail: bool = False) -> Ext:
    """Riemann-Lebesgue sum over a tagged partition; ``+inf`` when some term is infinite."""
    total = Fraction(0)
    for t in cell_terms(u, v, tp, split_tail):
        total = total + t
    return total


def tag_bounds(
    u: StepFunction, v: AlphaCapacity, p: AlphaPartition, split_tail: bool = False, tail_depth: int = 0
) -> tuple[Ext, Ext]:
    """Infimum and supremum of the tagged sum over all tag choices on ``p``."""
    lo = hi = Fraction(0)
    for cell in p.cells:
        vals = u.values_on(cell)
        m = _cell_mass(v, cell, split_tail, tail_depth)
        lo = lo + mul(min(vals), m)
        hi = hi + mul(max(vals), m)
    return lo, hi


@dataclass(frozen=True)
class EnvelopeLevel:
    depth: int
    lower: Ext
    upper: Ext


@dataclass(frozen=True)
class Verdict:
    kind: str  # converged | diverged | inconclusive
    value: Optional[Ext] = None

    def __str__(self) -> str:
        if self.kind == "converged":
            return f"converged({format_ext(self.value)})"
        return self.kind


@dataclass(frozen=True)
class EnvelopeTrace:
    levels: tuple[EnvelopeLevel, ...]
    verdict: Verdict
    tolerance: float = DEFAULT_TOLERANCE
    divergence_bound: float = DEFAULT_DIVERGENCE_BOUND

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict.kind,
            "value": None if self.verdict.value is None else format_ext(self.verdict.value),
            "tolerance": self.tolerance,
            "divergence_bound": self.divergence_bound,
            "levels": [
                {"depth": lv.depth, "lower": format_ext(lv.lower), "upper": format_ext(lv.upper)}
                for lv in self.levels
            ],
        }


def _close(a, b, tol) -> bool:
    if is_inf(a) or is_inf(b):
        return False
    return abs(a - b) < tol


def refinement_envelopes(
    u: StepFunction,
    v: AlphaCapacity,
    p0: Optional[AlphaPartition] = None,
    max_depth: int = DEFAULT_MAX_DEPTH,
    tolerance: float = DEFAULT_TOLERANCE,
    divergence_bound: float = DEFAULT_DIVERGENCE_BOUND,
) -> EnvelopeTrace:
    """Lower and upper tagged sums along repeated bisection of every bounded cell.

    Depth 0 is the common refinement of ``p0`` with the breakpoint partition of
    ``u``; depth ``d`` splits each bounded non-singleton cell into ``2**d``
    equal pieces. On those aligned cells ``u`` is constant, so the per-depth
    sums are computed from the family's closed-form total over the pieces
    rather than by listing them. The unbounded cell is read as its countable
    split into bounded pieces, refined along with the rest.
    """
    if max_depth < 1:
        raise DomainError("max_depth must be at least 1")
    base = common_refinement(p0 or AlphaPartition.trivial(), AlphaPartition.of_step(u))
    spans = [(c, min(u.values_on(c)), max(u.values_on(c))) for c in base.cells]
    levels: list[EnvelopeLevel] = []
    verdict = Verdict("inconclusive")
    for depth in range(max_depth + 1):
        lower = upper = Fraction(0)
        for cell, lo_val, hi_val in spans:
            m = v.split_mass(cell, depth)
            lower = lower + mul(lo_val, m)
            upper = upper + mul(hi_val, m)
        levels.append(EnvelopeLevel(depth, lower, upper))
        if is_inf(lower):
            verdict = Verdict("diverged")
            break
        if lower > divergence_bound and len(levels) >= 3:
            a, b, c = (lv.lower for lv in levels[-3:])
            if a < b < c:
                verdict = Verdict("diverged")
                break
        if depth >= 1:
            prev = levels[-2]
            if (
                _close(lower, upper, tolerance)
                and _close(lower, prev.lower, tolerance)
                and _close(upper, prev.upper, tolerance)
            ):
                mid = (lower + upper) / 2
                verdict = Verdict("converged", mid)
                break
    return EnvelopeTrace(tuple(levels), verdict, tolerance, divergence_bound)


def explicit_level_sums(u: StepFunction, v: AlphaCapacity, p: AlphaPartition, depth: int) -> tuple[Ext, Ext]:
    """Envelope sums at ``depth`` by listing every bisected cell (for cross-checking)."""
    base = common_refinement(p, AlphaPartition.of_step(u))
    for _ in range(depth):
        base = base.bisected()
    return tag_bounds(u, v, base, split_tail=True, tail_depth=depth)
