"""Riemann-Lebesgue integral of bounded step functions on [0, inf).

The integral is the limit of tagged sums ``sum u(s_n) v(E_n)`` along the net
of countable partitions ordered by refinement. Existence and value are
decided analytically for each family of :class:`AlphaCapacity`; the
refinement probe in :mod:`grl.partition` is an independent empirical check.

Closed forms
------------
sigma_additive
    Take the partition that isolates every breakpoint as a singleton. ``u``
    is constant on each of its cells and countable additivity makes every
    finer tagged sum equal ``sum_cells value * v(cell)``. If a cell with a
    positive value has infinite mass, no tagged sum is finite.
dirac at ``a``
    Any partition finer than one containing ``{a}`` pins the tag, giving ``u(a)``.
vanishing_on_bounded
    A partition made only of bounded cells (``[n, n+1)``) exists and every
    refinement keeps all cells bounded, so every tagged sum is ``0``.
distorted_power, ``v = lambda ** p``
    For ``a, b >= 0``: ``(a + b) ** p >= a ** p + b ** p`` when ``p > 1`` and
    ``<=`` when ``p < 1``.

    * ``p > 1``: splitting a cell never increases ``sum lambda(cell) ** p``,
      and cells of length at most ``d`` inside a bounded stretch of total
      length ``L`` give ``sum <= d ** (p - 1) * L``. Cutting the k-th unit
      piece of the ray into ``2 ** (k + j)`` parts gives a total of order
      ``2 ** (j (1 - p))``. Hence for every ``eps`` some countable partition
      has ``sum lambda(cell) ** p < eps / sup u`` and so does every refinement:
      the integral of any bounded ``u`` exists and is ``0``.
    * ``p < 1``: if ``u >= c > 0`` on an interval of length ``L``, splitting
      it into ``N`` equal cells gives at least ``c * N ** (1 - p) * L ** p``,
      unbounded in ``N``; no partition controls all its refinements, so the
      integral does not exist. If ``u`` vanishes outside finitely many
      points, isolating them (each has ``lambda = 0``) gives ``0``.
    * ``p = 1`` is Lebesgue measure and uses the sigma_additive rule.

Products ``0 * inf`` are taken to be ``0``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .alpha import AlphaCapacity
from .extended import INF, Ext, format_ext, is_inf, mul
from .partition import EnvelopeTrace, refinement_envelopes
from .step import StepFunction

METHODS = (
    "closed_form_sigma_additive",
    "closed_form_dirac",
    "closed_form_vanishing_bounded",
    "closed_form_distorted_p_gt_1",
    "closed_form_distorted_p_lt_1",
    "nonexistent_distorted_p_lt_1",
    "estimated",
)


@dataclass(frozen=True)
class RLResult:
    exists: bool
    value: Optional[Ext]
    method: str
    trace: Optional[EnvelopeTrace] = None
    note: str = ""

    def to_dict(self) -> dict:
        out = {
            "exists": self.exists,
            "value": None if self.value is None else format_ext(self.value),
            "method": self.method,
        }
        if self.note:
            out["note"] = self.note
        if self.trace is not None:
            out["trace"] = self.trace.to_dict()
        return out


def sigma_additive_value(u: StepFunction, v: AlphaCapacity) -> Ext:
    total = Fraction(0)
    for cell, val in u.cells():
        total = total + mul(val, v.measure(cell))
    return total


def rl_integrate(u: StepFunction, v: AlphaCapacity, probe: bool = False, estimate: bool = False) -> RLResult:
    """Decide existence and value of the RL integral of ``u`` against ``v``.

    ``probe`` attaches a refinement-envelope trace; nonexistent results
    always carry one. ``estimate`` skips the closed forms and reports the
    probe's verdict instead.
    """
    if estimate:
        trace = refinement_envelopes(u, v)
        if trace.verdict.kind == "converged":
            return RLResult(True, trace.verdict.value, "estimated", trace)
        return RLResult(False, None, "estimated", trace, note=f"probe verdict: {trace.verdict}")

    result = _closed_form(u, v)
    if probe or not result.exists:
        trace = refinement_envelopes(u, v)
        result = RLResult(result.exists, result.value, result.method, trace, result.note)
    return result


def _closed_form(u: StepFunction, v: AlphaCapacity) -> RLResult:
    sig = v if v.kind == "sigma_additive" else None
    if v.kind == "distorted_power" and v.exponent == 1:
        sig = v.as_sigma_additive()
    if sig is not None:
        value = sigma_additive_value(u, sig)
        if is_inf(value):
            return RLResult(False, INF, "closed_form_sigma_additive", note="positive values on a cell of infinite mass")
        return RLResult(True, value, "closed_form_sigma_additive")
    if v.kind == "dirac":
        return RLResult(True, u(v.location), "closed_form_dirac")
    if v.kind == "vanishing_on_bounded":
        return RLResult(True, Fraction(0), "closed_form_vanishing_bounded")
    if v.exponent > 1:
        return RLResult(True, Fraction(0), "closed_form_distorted_p_gt_1")
    if any(x > 0 for x in u.interval_values) or u.tail_value > 0:
        return RLResult(
            False, None, "nonexistent_distorted_p_lt_1", note="u is positive on an interval of positive length"
        )
    return RLResult(True, Fraction(0), "closed_form_distorted_p_lt_1")


def rl_integrable_flag(u: StepFunction, v: AlphaCapacity) -> bool:
    return _closed_form(u, v).exists
