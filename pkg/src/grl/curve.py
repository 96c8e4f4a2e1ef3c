"""Interval scenarios: piecewise-linear integrands on ``[0, d]`` under ``lambda ** p``.

For such an ``f`` the level sets ``{x in A : f(x) >= alpha}`` are finite
unions of intervals whose endpoints move linearly with ``alpha``, so their
length ``L(alpha)`` is piecewise linear and the survival function is
``L(alpha) ** p`` piece by piece.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .alpha import AlphaCapacity
from .errors import DomainError
from .extended import Ext, rational_power
from .step import StepFunction

EPS = sys.float_info.epsilon


@dataclass(frozen=True)
class ScenarioInterval:
    domain: Fraction
    exponent: Fraction
    nu: AlphaCapacity
    knots: tuple[tuple[Fraction, Fraction], ...]
    A: tuple[tuple[Fraction, Fraction], ...]
    assume_nu_zero_at_origin: bool = False

    def __post_init__(self):
        d = Fraction(self.domain)
        p = Fraction(self.exponent)
        if d <= 0:
            raise DomainError("the domain [0, d] needs d > 0")
        if p <= 0:
            raise DomainError("the distortion exponent must be positive")
        knots = tuple((Fraction(x), Fraction(y)) for x, y in self.knots)
        if len(knots) < 2:
            raise DomainError("f needs at least two knots")
        xs = [x for x, _ in knots]
        if any(a >= b for a, b in zip(xs, xs[1:])):
            raise DomainError("knot abscissae must be strictly increasing")
        if xs[0] != 0 or xs[-1] != d:
            raise DomainError("knots must span the whole domain [0, d]")
        if any(y < 0 for _, y in knots):
            raise DomainError("f must be non-negative")
        pieces = sorted((Fraction(a), Fraction(b)) for a, b in self.A)
        for a, b in pieces:
            if a > b or a < 0 or b > d:
                raise DomainError(f"A piece [{a}, {b}] is not a subinterval of the domain")
        merged: list[tuple[Fraction, Fraction]] = []
        for a, b in pieces:
            if merged and a <= merged[-1][1]:
                merged[-1] = (merged[-1][0], max(merged[-1][1], b))
            else:
                merged.append((a, b))
        object.__setattr__(self, "domain", d)
        object.__setattr__(self, "exponent", p)
        object.__setattr__(self, "knots", knots)
        object.__setattr__(self, "A", tuple(merged))

    def f(self, x) -> Fraction:
        x = Fraction(x)
        for (x0, y0), (x1, y1) in zip(self.knots, self.knots[1:]):
            if x0 <= x <= x1:
                return y0 + (y1 - y0) * (x - x0) / (x1 - x0)
        raise DomainError(f"{x} is outside the domain")


@dataclass(frozen=True)
class SurvivalCurve:
    """``alpha -> L(alpha) ** exponent`` with ``L`` piecewise linear and left-continuous.

    ``L(0) = at_zero``; on ``(c_{j-1}, c_j]`` (``c_0 = 0``) ``L = a_j + b_j alpha``;
    ``L = 0`` after the last break.
    """

    at_zero: Fraction
    breaks: tuple[Fraction, ...]
    pieces: tuple[tuple[Fraction, Fraction], ...]
    exponent: Fraction

    @property
    def exact(self) -> bool:
        return self.exponent.denominator == 1

    def length_at(self, alpha) -> Fraction:
        alpha = Fraction(alpha)
        if alpha == 0:
            return self.at_zero
        prev = Fraction(0)
        for c, (a, b) in zip(self.breaks, self.pieces):
            if prev < alpha <= c:
                return a + b * alpha
            prev = c
        return Fraction(0)

    def __call__(self, alpha) -> Ext:
        return rational_power(self.length_at(alpha), self.exponent)

    def _limits(self, j: int, lo: Fraction, hi: Fraction) -> tuple[Ext, Ext]:
        a, b = self.pieces[j]
        return rational_power(a + b * lo, self.exponent), rational_power(a + b * hi, self.exponent)

    def positive_on_interval(self) -> bool:
        prev = Fraction(0)
        for c, (a, b) in zip(self.breaks, self.pieces):
            if a + b * (prev + c) / 2 > 0:
                return True
            prev = c
        return False

    def integrate(self, lo, hi) -> tuple[Ext, float]:
        """Lebesgue integral over ``[lo, hi]`` (``hi=None`` for no bound) and an absolute error bound."""
        lo = Fraction(lo)
        total: Ext = Fraction(0)
        err = 0.0
        prev = Fraction(0)
        for c, (a, b) in zip(self.breaks, self.pieces):
            s, t = max(prev, lo), c if hi is None else min(c, Fraction(hi))
            prev = c
            if s >= t:
                continue
            val, e = _integrate_power(a, b, s, t, self.exponent)
            total = total + val
            err += e
        return total, err

    def bracket(self, n: int) -> tuple[StepFunction, StepFunction]:
        """Step functions below and above the curve, each piece cut into ``n`` equal cells."""
        if n < 1:
            raise DomainError("bracket needs n >= 1")
        bps, lows, highs, pts = [], [], [], []
        prev = Fraction(0)
        for j, c in enumerate(self.breaks):
            grid = [prev + (c - prev) * k / n for k in range(n + 1)]
            for g0, g1 in zip(grid, grid[1:]):
                left, right = self._limits(j, g0, g1)
                lows.append(min(left, right))
                highs.append(max(left, right))
                bps.append(g1)
                pts.append(self(g1))
            prev = c
        zero = self(0)
        lower = StepFunction(tuple(bps), (zero, *pts), tuple(lows), 0)
        upper = StepFunction(tuple(bps), (zero, *pts), tuple(highs), 0)
        return lower, upper

    def describe(self) -> str:
        parts = [f"L(0)={self.at_zero}"]
        prev = Fraction(0)
        for c, (a, b) in zip(self.breaks, self.pieces):
            sign = "-" if b < 0 else "+"
            parts.append(f"({prev},{c}]: {a} {sign} {abs(b)}*t")
            prev = c
        return f"[{'; '.join(parts)}] ** {self.exponent}"


def _integrate_power(a: Fraction, b: Fraction, s: Fraction, t: Fraction, p: Fraction) -> tuple[Ext, float]:
    """Integral of ``(a + b x) ** p`` over ``[s, t]`` where the base is non-negative."""
    if p.denominator == 1:
        k = p.numerator
        if b == 0:
            return a**k * (t - s), 0.0
        return ((a + b * t) ** (k + 1) - (a + b * s) ** (k + 1)) / (b * (k + 1)), 0.0
    pf = float(p)
    if b == 0:
        val = float(a) ** pf * float(t - s)
        return val, 4 * EPS * abs(val)
    hi = float(a + b * t) ** (pf + 1)
    lo = float(a + b * s) ** (pf + 1)
    den = float(b) * (pf + 1)
    val = (hi - lo) / den
    return val, 8 * EPS * (abs(hi) + abs(lo)) / abs(den)


def survival_interval(sc: ScenarioInterval) -> SurvivalCurve:
    """The survival curve ``alpha -> (lambda({f >= alpha} and A)) ** p``."""
    # (s, t, y_at_s, y_at_t) for each linear piece of f restricted to A
    segs = []
    for (x0, y0), (x1, y1) in zip(sc.knots, sc.knots[1:]):
        for a, b in sc.A:
            s, t = max(x0, a), min(x1, b)
            if s < t:
                segs.append((s, t, sc.f(s), sc.f(t)))
    at_zero = sum((t - s for s, t, _, _ in segs), Fraction(0))
    breaks = sorted({y for _, _, ys, yt in segs for y in (ys, yt) if y > 0})
    pieces = []
    prev = Fraction(0)
    for c in breaks:
        mid = (prev + c) / 2
        a = b = Fraction(0)
        for s, t, ys, yt in segs:
            lo_y, hi_y = min(ys, yt), max(ys, yt)
            if mid <= lo_y:
                a += t - s
            elif mid < hi_y:
                # the part of [s, t] where f >= alpha has length (hi_y - alpha) / |slope|
                inv = (t - s) / (hi_y - lo_y)
                a += hi_y * inv
                b -= inv
        pieces.append((a, b))
        prev = c
    return SurvivalCurve(at_zero, tuple(breaks), tuple(pieces), sc.exponent)


def integrate_curve(curve: SurvivalCurve, nu: AlphaCapacity):
    """Closed-form RL integral of a survival curve.

    Returns ``(exists, value, method, error_bound)``; ``error_bound`` is
    ``None`` when the value is exact.
    """
    sig = nu if nu.kind == "sigma_additive" else None
    if nu.kind == "distorted_power" and nu.exponent == 1:
        sig = nu.as_sigma_additive()
    if sig is not None:
        total: Ext = Fraction(0)
        err = 0.0
        for x, m in sig.atoms:
            total = total + m * curve(x)
        for seg in sig.segments:
            if seg.density == 0:
                continue
            val, e = curve.integrate(seg.lo, seg.hi)
            total = total + seg.density * val
            err += float(seg.density) * e
        return True, total, "closed_form_sigma_additive", _bound(total, err)
    if nu.kind == "dirac":
        val = curve(nu.location)
        return True, val, "closed_form_dirac", _bound(val, 0.0)
    if nu.kind == "vanishing_on_bounded":
        return True, Fraction(0), "closed_form_vanishing_bounded", None
    if nu.exponent > 1:
        return True, Fraction(0), "closed_form_distorted_p_gt_1", None
    if curve.positive_on_interval():
        return False, None, "nonexistent_distorted_p_lt_1", None
    return True, Fraction(0), "closed_form_distorted_p_lt_1", None


def _bound(value, err: float) -> Optional[float]:
    if isinstance(value, Fraction):
        return None
    return err + 4 * EPS * abs(value)
