"""The generalized decomposition integral of a non-negative function.

For ``f`` on ``S``, a set function ``mu`` on ``S`` and ``A`` measurable, the
survival function is ``u(alpha) = mu({s in A : f(s) >= alpha})`` and the
integral is the Riemann-Lebesgue integral of ``u`` against ``nu`` on [0, inf).
With ``nu`` the Lebesgue measure it is the Choquet integral.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Union

from .alpha import AlphaCapacity
from .capacity import Capacity, GroundSpace, Subset
from .curve import ScenarioInterval, SurvivalCurve, integrate_curve, survival_interval
from .errors import DomainError
from .extended import Ext, format_ext, is_inf
from .partition import refinement_envelopes
from .rl import RLResult, rl_integrate
from .step import StepFunction


@dataclass(frozen=True)
class ScenarioFinite:
    mu: Capacity
    nu: AlphaCapacity
    f: tuple[Fraction, ...]
    A: int
    assume_nu_zero_at_origin: bool = False

    def __post_init__(self):
        f = tuple(Fraction(x) for x in self.f)
        if len(f) != self.mu.space.size:
            raise DomainError("f must give one value per point")
        if any(x < 0 for x in f):
            raise DomainError("f must be non-negative")
        object.__setattr__(self, "f", f)
        object.__setattr__(self, "A", self.mu.space.mask(self.A))

    @property
    def space(self) -> GroundSpace:
        return self.mu.space


Scenario = Union[ScenarioFinite, ScenarioInterval]


@dataclass(frozen=True)
class GRLReport:
    integrable: bool
    value: Optional[Ext]
    survival: Union[StepFunction, SurvivalCurve]
    rl: RLResult
    error_bound: Optional[float] = None
    diagnostics: dict = field(default_factory=dict)

    @property
    def method(self) -> str:
        return self.rl.method

    def to_dict(self) -> dict:
        out = {
            "value": None if self.value is None else format_ext(self.value),
            "integrable": self.integrable,
            "method": self.rl.method,
        }
        if self.error_bound is not None:
            out["error_bound"] = repr(self.error_bound)
        diag = dict(self.diagnostics)
        diag["survival"] = str(self.survival) if isinstance(self.survival, StepFunction) else self.survival.describe()
        if self.rl.note:
            diag["note"] = self.rl.note
        if self.rl.trace is not None:
            diag["envelope"] = self.rl.trace.to_dict()
        out["diagnostics"] = diag
        return out


def level_set(f: Sequence[Fraction], A: int, alpha) -> int:
    """Bit mask of ``{s in A : f(s) >= alpha}``."""
    return sum(1 << i for i, x in enumerate(f) if A >> i & 1 and x >= alpha)


def survival_finite(f: Sequence, mu: Capacity, A: Subset) -> StepFunction:
    A = mu.space.mask(A)
    f = [Fraction(x) for x in f]
    levels = sorted({f[i] for i in mu.space.members(A) if f[i] > 0})
    return StepFunction.from_levels(levels, [mu.values[level_set(f, A, w)] for w in levels], mu.values[A])


def choquet(f: Sequence, mu: Capacity, A: Subset) -> Fraction:
    """Choquet integral by the sorting formula.

    Points of ``A`` are taken in increasing order of ``f``; each increment
    ``f(s_i) - f(s_{i-1})`` is weighted by ``mu`` of the points from ``s_i`` on.
    """
    A = mu.space.mask(A)
    order = sorted(mu.space.members(A), key=lambda i: Fraction(f[i]))
    total = Fraction(0)
    prev = Fraction(0)
    upper = A
    for i in order:
        x = Fraction(f[i])
        total += (x - prev) * mu.values[upper]
        prev = x
        upper &= ~(1 << i)
    return total


def restrict_indicator(f: Sequence, A: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) if A >> i & 1 else Fraction(0) for i, x in enumerate(f))


def _assumptions(nu: AlphaCapacity, declared: bool) -> dict:
    return {"nu_zero_at_origin": {"declared": declared, "holds": nu.mass_at_origin() == 0}}


def grl_integrate(scenario: Scenario, probe: bool = False) -> GRLReport:
    """Compute the generalized integral of a finite or interval scenario.

    Mathematical nonexistence is reported through ``integrable=False``,
    never raised.
    """
    if isinstance(scenario, ScenarioInterval):
        return _integrate_interval(scenario, probe)
    u = survival_finite(scenario.f, scenario.mu, scenario.A)
    rl = rl_integrate(u, scenario.nu, probe=probe)
    integrable = rl.exists and rl.value is not None and not is_inf(rl.value)
    return GRLReport(
        integrable=integrable,
        value=rl.value,
        survival=u,
        rl=rl,
        diagnostics={"assumptions": _assumptions(scenario.nu, scenario.assume_nu_zero_at_origin)},
    )


def _integrate_interval(sc: ScenarioInterval, probe: bool) -> GRLReport:
    curve = survival_interval(sc)
    exists, value, method, bound = integrate_curve(curve, sc.nu)
    trace = None
    if probe or not exists:
        # the lower bracket sits below u, so divergence of its sums carries over
        lower, _ = curve.bracket(2)
        trace = refinement_envelopes(lower, sc.nu)
    rl = RLResult(exists, value, method, trace)
    diagnostics = {"assumptions": _assumptions(sc.nu, sc.assume_nu_zero_at_origin)}
    return GRLReport(exists, value, curve, rl, error_bound=bound, diagnostics=diagnostics)


def integral(mu: Capacity, nu: AlphaCapacity, f: Sequence, A: Optional[Subset] = None) -> Ext:
    """Shorthand returning only the value; ``A`` defaults to the whole space.

    Raises ``ValueError`` when the integral does not exist.
    """
    A = mu.space.full if A is None else A
    rep = grl_integrate(ScenarioFinite(mu, nu, tuple(f), A))
    if not rep.integrable:
        raise ValueError("the integral does not exist")
    return rep.value
