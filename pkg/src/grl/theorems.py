"""Executable checks of the properties of the generalized integral.

Each property ``T1`` .. ``T16`` has a seeded instance generator that builds
its hypotheses by construction, a hypothesis verifier, and a conclusion
check. All comparisons are exact rational (in)equalities.

Three negative controls drop one hypothesis each (submodularity for T13,
additivity for T14, superadditivity for T15) and must find violations.
"""

from __future__ import annotations

import csv
import io
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Optional

from .alpha import AlphaCapacity, Segment
from .capacity import Capacity, GroundSpace, classify, pushforward, random_capacity
from .errors import DomainError
from .extended import format_ext, is_inf
from .formats import capacity_to_dict, nu_to_dict
from .integral import ScenarioFinite, grl_integrate, level_set, restrict_indicator, survival_finite
from .intervals import Interval
from .partition import AlphaPartition

THEOREMS = {
    "T1": "dominated bound by the variation of nu",
    "T2": "integral on A equals integral of f*chi_A on S",
    "T3": "integrability is hereditary on measurable subsets",
    "T4": "f = 0 mu-a.e. has integral 0",
    "T5": "mu-a.e. equal integrands have equal integrals",
    "T6": "monotone in the set of integration",
    "T7": "monotone in the integrand",
    "T8": "monotone in mu",
    "T9": "monotone in nu",
    "T10": "homogeneous in (nu, mu)",
    "T11": "additive in mu",
    "T12": "additive in nu",
    "T13": "sup/inf inequality for submodular mu",
    "T14": "additive over disjoint sets for additive mu",
    "T15": "superadditive in the integrand for superadditive mu",
    "T16": "transformation rule",
}

NEGATIVE_CONTROLS = {
    "NC-T13": "T13 with a non-submodular mu",
    "NC-T14": "T14 with a non-additive mu",
    "NC-T15": "T15 with a subadditive mu",
}

MAX_POINTS = 6


@dataclass(frozen=True)
class Instance:
    theorem: str
    seed: int
    data: dict

    def to_dict(self) -> dict:
        return {"theorem": self.theorem, "seed": self.seed, "data": {k: _ser(v) for k, v in self.data.items()}}


def _ser(v):
    if isinstance(v, Capacity):
        return capacity_to_dict(v)
    if isinstance(v, AlphaCapacity):
        return nu_to_dict(v)
    if isinstance(v, Fraction):
        return format_ext(v)
    if isinstance(v, (list, tuple)):
        return [_ser(x) for x in v]
    return v


@dataclass(frozen=True)
class CheckOutcome:
    theorem: str
    instance_seed: int
    hypothesis_satisfied: bool
    conclusion_holds: Optional[bool]
    witness: Optional[dict] = None
    reason: str = ""

    @property
    def skipped(self) -> bool:
        return not self.hypothesis_satisfied


# random pieces


def _rng(tag: str, seed) -> random.Random:
    return random.Random(f"{tag}/{seed}")


def _space(rng: random.Random, lo: int = 1, hi: int = MAX_POINTS) -> GroundSpace:
    return GroundSpace(rng.randint(lo, hi))


def _f(rng: random.Random, n: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(rng.randint(0, 6), rng.choice((1, 2))) for _ in range(n))


def _mask(rng: random.Random, n: int) -> int:
    return rng.randrange(1 << n)


def _sigma(rng: random.Random, zero_origin: bool, finite: bool) -> AlphaCapacity:
    atoms = []
    for _ in range(rng.randint(0, 2)):
        loc = Fraction(rng.randint(1 if zero_origin else 0, 8), rng.choice((1, 2)))
        atoms.append((loc, Fraction(rng.randint(1, 5), rng.choice((1, 2, 4)))))
    segs = []
    style = rng.choice(("lebesgue", "bounded", "none") if not finite else ("bounded", "bounded", "none"))
    if style == "lebesgue":
        segs.append(Segment(0, None, 1))
    elif style == "bounded":
        cuts = sorted({Fraction(rng.randint(0, 16), 2) for _ in range(4)})
        for a, b in zip(cuts[::2], cuts[1::2]):
            segs.append(Segment(a, b, Fraction(rng.randint(1, 4), rng.choice((1, 2)))))
    if not atoms and not segs:
        segs.append(Segment(0, None if not finite else 10, 1))
    return AlphaCapacity.sigma_additive(atoms, segs)


def random_nu(rng: random.Random, zero_origin: bool = False, finite: bool = False, families=None) -> AlphaCapacity:
    """A set function on [0, inf) from the sigma_additive, dirac or vanishing families."""
    families = families or (("sigma_additive", "dirac") if finite else ("sigma_additive", "dirac", "vanishing_on_bounded"))
    kind = rng.choice(families)
    if kind == "sigma_additive":
        return _sigma(rng, zero_origin, finite)
    if kind == "dirac":
        return AlphaCapacity.dirac(Fraction(rng.randint(1 if zero_origin else 0, 8), rng.choice((1, 2))))
    return AlphaCapacity.vanishing_on_bounded(Fraction(rng.randint(1, 5), rng.choice((1, 2))))


def _cap(rng: random.Random, space: GroundSpace, kind: str) -> Capacity:
    return random_capacity(space, kind, rng.randrange(1 << 30))


def _any_kind(rng: random.Random) -> str:
    return rng.choice(("arbitrary", "monotone", "additive", "submodular", "superadditive", "subadditive"))


# integral helpers


def _value(mu: Capacity, nu: AlphaCapacity, f, A: Optional[int] = None):
    """Integral value, or ``None`` when the integral does not exist or is infinite."""
    A = mu.space.full if A is None else A
    rep = grl_integrate(ScenarioFinite(mu, nu, tuple(f), A))
    return rep.value if rep.integrable else None


def dominated_on_cells(v1: AlphaCapacity, v2: AlphaCapacity, points: Iterable[Fraction]) -> bool:
    """``v1 <= v2`` on every cell of the partition isolating ``points`` and the families' own breakpoints."""
    cuts = set(Fraction(p) for p in points)
    for v in (v1, v2):
        cuts.update(x for x, _ in v.atoms)
        for s in v.segments:
            cuts.add(s.lo)
            if s.hi is not None:
                cuts.add(s.hi)
        if v.kind == "dirac":
            cuts.add(v.location)
    part = AlphaPartition.from_cuts(cuts, isolate=True)
    cells = list(part.cells) + [Interval.ray(0, closed=True)]
    return all(v1.measure(c) <= v2.measure(c) for c in cells)


# generators


def _null_extension(base: Capacity, space: GroundSpace, keep: list[int]) -> Capacity:
    """``E -> base(E minus N)`` where ``keep`` lists the points outside the null set ``N``."""

    def val(m):
        sub = sum(1 << j for j, i in enumerate(keep) if m >> i & 1)
        return base.values[sub]

    return Capacity.from_function(space, val)


def generate(theorem: str, seed: int) -> Instance:
    """Deterministic random instance whose construction meets the theorem's hypotheses."""
    if theorem not in THEOREMS:
        raise DomainError(f"unknown theorem id {theorem!r}")
    rng = _rng(theorem, seed)
    space = _space(rng)
    n = space.size
    d: dict = {}
    if theorem == "T1":
        d.update(mu=_cap(rng, space, _any_kind(rng)), nu=random_nu(rng, finite=True), f=_f(rng, n))
    elif theorem in ("T2", "T3"):
        d.update(mu=_cap(rng, space, _any_kind(rng)), nu=random_nu(rng, zero_origin=True), f=_f(rng, n))
        if theorem == "T2":
            d["A"] = _mask(rng, n)
    elif theorem == "T4":
        null = _mask(rng, n) or 1
        base = _cap(rng, space, "monotone")
        mu = Capacity(space, tuple(Fraction(0) if m & ~null == 0 else v for m, v in enumerate(base.values)))
        f = tuple(Fraction(rng.randint(1, 6), rng.choice((1, 2))) if null >> i & 1 else Fraction(0) for i in range(n))
        d.update(mu=mu, nu=random_nu(rng, zero_origin=True), f=f, null=null)
    elif theorem == "T5":
        space = _space(rng, lo=2)
        n = space.size
        null = rng.randrange(1, (1 << n) - 1)
        keep = [i for i in range(n) if not null >> i & 1]
        base = _cap(rng, GroundSpace(len(keep)), "subadditive")
        f = _f(rng, n)
        g = tuple(Fraction(rng.randint(0, 6), rng.choice((1, 2))) if null >> i & 1 else f[i] for i in range(n))
        d.update(mu=_null_extension(base, space, keep), nu=random_nu(rng), f=f, g=g, null=null)
    elif theorem == "T6":
        B = _mask(rng, n)
        A = B & _mask(rng, n)
        d.update(mu=_cap(rng, space, "monotone"), nu=random_nu(rng), f=_f(rng, n), A=A, B=B)
    elif theorem == "T7":
        f1 = _f(rng, n)
        f2 = tuple(x + Fraction(rng.randint(0, 3), rng.choice((1, 2))) for x in f1)
        d.update(mu=_cap(rng, space, "monotone"), nu=random_nu(rng), f1=f1, f2=f2, A=_mask(rng, n))
    elif theorem == "T8":
        mu1 = _cap(rng, space, _any_kind(rng))
        mu2 = mu1 + _cap(rng, space, "arbitrary")
        d.update(mu1=mu1, mu2=mu2, nu=random_nu(rng), f=_f(rng, n), A=_mask(rng, n))
    elif theorem == "T9":
        kind = rng.choice(("sigma_additive", "dirac", "vanishing_on_bounded"))
        if kind == "vanishing_on_bounded":
            c1 = Fraction(rng.randint(1, 5), rng.choice((1, 2)))
            nu1 = AlphaCapacity.vanishing_on_bounded(c1)
            nu2 = AlphaCapacity.vanishing_on_bounded(c1 + Fraction(rng.randint(0, 3), 2))
        else:
            nu1 = random_nu(rng, families=(kind,))
            nu2 = nu1 + _sigma(rng, False, rng.random() < 0.5) if rng.random() < 0.8 else nu1
        d.update(mu=_cap(rng, space, _any_kind(rng)), nu1=nu1, nu2=nu2, f=_f(rng, n), A=_mask(rng, n))
    elif theorem == "T10":
        a = Fraction(rng.randint(1, 9), rng.choice((1, 2, 3)))
        b = Fraction(rng.randint(1, 9), rng.choice((1, 2, 3)))
        d.update(mu=_cap(rng, space, _any_kind(rng)), nu=random_nu(rng), f=_f(rng, n), A=_mask(rng, n), a=a, b=b)
    elif theorem == "T11":
        d.update(
            mu1=_cap(rng, space, _any_kind(rng)),
            mu2=_cap(rng, space, _any_kind(rng)),
            nu=random_nu(rng),
            f=_f(rng, n),
            A=_mask(rng, n),
        )
    elif theorem == "T12":
        if rng.random() < 0.2:
            nu1, nu2 = random_nu(rng, families=("vanishing_on_bounded",)), random_nu(rng, families=("vanishing_on_bounded",))
        else:
            fam = ("sigma_additive", "dirac")
            nu1, nu2 = random_nu(rng, families=fam), random_nu(rng, families=fam)
        d.update(mu=_cap(rng, space, _any_kind(rng)), nu1=nu1, nu2=nu2, f=_f(rng, n), A=_mask(rng, n))
    elif theorem == "T13":
        d.update(mu=_cap(rng, space, "submodular"), nu=random_nu(rng), f=_f(rng, n), g=_f(rng, n), A=_mask(rng, n))
    elif theorem == "T14":
        A = _mask(rng, n)
        B = _mask(rng, n) & ~A
        d.update(mu=_cap(rng, space, "additive"), nu=random_nu(rng), f=_f(rng, n), A=A, B=B)
    elif theorem == "T15":
        d.update(mu=_cap(rng, space, "superadditive"), nu=random_nu(rng), f=_f(rng, n), g=_f(rng, n))
    elif theorem == "T16":
        target = _space(rng)
        phi = [rng.randrange(target.size) for _ in range(n)]
        d.update(mu=_cap(rng, space, _any_kind(rng)), nu=random_nu(rng), g=_f(rng, target.size), phi=phi, T=target.size)
    return Instance(theorem, seed, d)


# checks


def _hypothesis(inst: Instance) -> tuple[bool, str]:
    t, d = inst.theorem, inst.data
    if t == "T1":
        if is_inf(d["nu"].total_variation()):
            return False, "nu has infinite variation; the bound is vacuous"
        return True, ""
    if t in ("T2", "T3"):
        if d["nu"].mass_at_origin() != 0:
            return False, "nu({0}) = 0 is required"
        return True, ""
    if t == "T4":
        ok = classify(d["mu"]).fuzzy and d["mu"].values[d["null"]] == 0 and d["nu"].mass_at_origin() == 0
        ok = ok and all(x == 0 for i, x in enumerate(d["f"]) if not d["null"] >> i & 1)
        return ok, "" if ok else "needs fuzzy mu, f = 0 off a mu-null set, nu({0}) = 0"
    if t == "T5":
        flags = classify(d["mu"])
        ok = flags.fuzzy and flags.subadditive and d["mu"].values[d["null"]] == 0
        ok = ok and all(a == b for i, (a, b) in enumerate(zip(d["f"], d["g"])) if not d["null"] >> i & 1)
        return ok, "" if ok else "needs fuzzy subadditive mu and f = g off a mu-null set"
    if t == "T6":
        ok = classify(d["mu"]).fuzzy and d["A"] & ~d["B"] == 0
        return ok, "" if ok else "needs fuzzy mu and A subset of B"
    if t == "T7":
        ok = classify(d["mu"]).fuzzy and all(a <= b for a, b in zip(d["f1"], d["f2"]))
        return ok, "" if ok else "needs fuzzy mu and f1 <= f2"
    if t == "T8":
        ok = d["mu1"].setwise_le(d["mu2"])
        return ok, "" if ok else "needs mu1 <= mu2 setwise"
    if t == "T9":
        ok = dominated_on_cells(d["nu1"], d["nu2"], d["f"])
        return ok, "" if ok else "needs nu1 <= nu2 setwise"
    if t == "T10":
        return d["a"] > 0 and d["b"] > 0, ""
    if t == "T13":
        flags = classify(d["mu"])
        ok = flags.fuzzy and flags.submodular
        return ok, "" if ok else "needs fuzzy submodular mu"
    if t == "T14":
        ok = classify(d["mu"]).additive and d["A"] & d["B"] == 0
        return ok, "" if ok else "needs additive mu and disjoint A, B"
    if t == "T15":
        flags = classify(d["mu"])
        ok = flags.fuzzy and flags.superadditive
        return ok, "" if ok else "needs fuzzy superadditive mu"
    return True, ""


def _conclusion(inst: Instance) -> tuple[bool, str]:
    t, d = inst.theorem, inst.data
    mu, nu = d.get("mu"), d.get("nu")
    if t == "T1":
        u = survival_finite(d["f"], mu, mu.space.full)
        val = _value(mu, nu, d["f"])
        bound = nu.total_variation() * u.sup()
        return val is not None and val <= bound, f"value={_s(val)} bound={_s(bound)}"
    if t == "T2":
        lhs = _value(mu, nu, d["f"], d["A"])
        rhs = _value(mu, nu, restrict_indicator(d["f"], d["A"]))
        return lhs is not None and lhs == rhs, f"on A={_s(lhs)} with indicator={_s(rhs)}"
    if t == "T3":
        if _value(mu, nu, d["f"]) is None:
            return False, "not integrable on S"
        for A in mu.space.subsets():
            lhs = _value(mu, nu, d["f"], A)
            rhs = _value(mu, nu, restrict_indicator(d["f"], A))
            if lhs is None or lhs != rhs:
                return False, f"A={A}: {_s(lhs)} vs {_s(rhs)}"
        return True, ""
    if t == "T4":
        val = _value(mu, nu, d["f"])
        return val == 0, f"value={_s(val)}"
    if t == "T5":
        a, b = _value(mu, nu, d["f"]), _value(mu, nu, d["g"])
        return a is not None and a == b, f"{_s(a)} vs {_s(b)}"
    if t == "T6":
        a, b = _value(mu, nu, d["f"], d["A"]), _value(mu, nu, d["f"], d["B"])
        return _le(a, b), f"on A={_s(a)} on B={_s(b)}"
    if t == "T7":
        a, b = _value(mu, nu, d["f1"], d["A"]), _value(mu, nu, d["f2"], d["A"])
        return _le(a, b), f"{_s(a)} vs {_s(b)}"
    if t == "T8":
        a, b = _value(d["mu1"], nu, d["f"], d["A"]), _value(d["mu2"], nu, d["f"], d["A"])
        return _le(a, b), f"{_s(a)} vs {_s(b)}"
    if t == "T9":
        a, b = _value(mu, d["nu1"], d["f"], d["A"]), _value(mu, d["nu2"], d["f"], d["A"])
        return _le(a, b), f"{_s(a)} vs {_s(b)}"
    if t == "T10":
        base = _value(mu, nu, d["f"], d["A"])
        scaled = _value(mu.scaled(d["b"]), nu.scaled(d["a"]), d["f"], d["A"])
        ok = base is not None and scaled == d["a"] * d["b"] * base
        return ok, f"scaled={_s(scaled)} base={_s(base)}"
    if t == "T11":
        a = _value(d["mu1"], nu, d["f"], d["A"])
        b = _value(d["mu2"], nu, d["f"], d["A"])
        s = _value(d["mu1"] + d["mu2"], nu, d["f"], d["A"])
        return None not in (a, b, s) and s == a + b, f"{_s(s)} vs {_s(a)} + {_s(b)}"
    if t == "T12":
        a = _value(mu, d["nu1"], d["f"], d["A"])
        b = _value(mu, d["nu2"], d["f"], d["A"])
        s = _value(mu, d["nu1"] + d["nu2"], d["f"], d["A"])
        return None not in (a, b, s) and s == a + b, f"{_s(s)} vs {_s(a)} + {_s(b)}"
    if t == "T13":
        return _sup_inf(mu, nu, d["f"], d["g"], d["A"])
    if t == "T14":
        a = _value(mu, nu, d["f"], d["A"])
        b = _value(mu, nu, d["f"], d["B"])
        s = _value(mu, nu, d["f"], d["A"] | d["B"])
        return None not in (a, b, s) and s == a + b, f"{_s(s)} vs {_s(a)} + {_s(b)}"
    if t == "T15":
        return _superadd(mu, nu, d["f"], d["g"])
    if t == "T16":
        target = GroundSpace(d["T"])
        lhs = _value(pushforward(mu, d["phi"], target), nu, d["g"])
        rhs = _value(mu, nu, [d["g"][t_] for t_ in d["phi"]])
        return lhs is not None and lhs == rhs, f"on T={_s(lhs)} on S={_s(rhs)}"
    raise DomainError(f"unknown theorem id {t!r}")


def _sup_inf(mu, nu, f, g, A) -> tuple[bool, str]:
    fv = tuple(max(a, b) for a, b in zip(f, g))
    fw = tuple(min(a, b) for a, b in zip(f, g))
    vals = [_value(mu, nu, h, A) for h in (fv, fw, f, g)]
    if None in vals:
        return False, "an integral does not exist"
    lhs, rhs = vals[0] + vals[1], vals[2] + vals[3]
    return lhs <= rhs, f"sup+inf={_s(lhs)} f+g={_s(rhs)}"


def _superadd(mu, nu, f, g) -> tuple[bool, str]:
    s = tuple(a + b for a, b in zip(f, g))
    vals = [_value(mu, nu, h) for h in (s, f, g)]
    if None in vals:
        return False, "an integral does not exist"
    return vals[0] >= vals[1] + vals[2], f"int(f+g)={_s(vals[0])} int f + int g={_s(vals[1] + vals[2])}"


def _le(a, b) -> bool:
    return a is not None and b is not None and a <= b


def _s(x) -> str:
    return "undefined" if x is None else format_ext(x)


def check(inst: Instance) -> CheckOutcome:
    ok, why = _hypothesis(inst)
    if not ok:
        return CheckOutcome(inst.theorem, inst.seed, False, None, inst.to_dict(), why)
    holds, detail = _conclusion(inst)
    return CheckOutcome(inst.theorem, inst.seed, True, holds, None if holds else inst.to_dict(), detail)


# negative controls


def _nc_instance(name: str, seed: int) -> Instance:
    rng = _rng(name, seed)
    space = _space(rng, lo=2)
    n = space.size
    nu = AlphaCapacity.lebesgue()
    if name == "NC-T13":
        mu = _cap(rng, space, "superadditive")
        return Instance(name, seed, dict(mu=mu, nu=nu, f=_f(rng, n), g=_f(rng, n), A=space.full))
    if name == "NC-T14":
        mu = _cap(rng, space, rng.choice(("monotone", "submodular", "superadditive")))
        A = _mask(rng, n)
        return Instance(name, seed, dict(mu=mu, nu=nu, f=_f(rng, n), A=A, B=_mask(rng, n) & ~A))
    if name == "NC-T15":
        if rng.random() < 0.5:
            mu = Capacity.from_function(space, lambda m: 1)
        else:
            mu = _cap(rng, space, "subadditive")
        i, j = rng.sample(range(n), 2)
        f = tuple(Fraction(rng.randint(1, 6)) if k == i else Fraction(0) for k in range(n))
        g = tuple(Fraction(rng.randint(1, 6)) if k == j else Fraction(0) for k in range(n))
        return Instance(name, seed, dict(mu=mu, nu=nu, f=f, g=g))
    raise DomainError(f"unknown negative control {name!r}")


def negative_control(name: str, seed: int) -> CheckOutcome:
    """Run one control instance; ``conclusion_holds=False`` is the sought violation."""
    inst = _nc_instance(name, seed)
    d = inst.data
    flags = classify(d["mu"])
    if name == "NC-T13":
        if flags.submodular:
            return CheckOutcome(name, seed, False, None, reason="mu happens to be submodular")
        holds, detail = _sup_inf(d["mu"], d["nu"], d["f"], d["g"], d["A"])
    elif name == "NC-T14":
        if flags.additive:
            return CheckOutcome(name, seed, False, None, reason="mu happens to be additive")
        a = _value(d["mu"], d["nu"], d["f"], d["A"])
        b = _value(d["mu"], d["nu"], d["f"], d["B"])
        s = _value(d["mu"], d["nu"], d["f"], d["A"] | d["B"])
        holds, detail = s == a + b, f"{_s(s)} vs {_s(a)} + {_s(b)}"
    else:
        if not flags.subadditive or flags.superadditive:
            return CheckOutcome(name, seed, False, None, reason="mu is not strictly subadditive")
        holds, detail = _superadd(d["mu"], d["nu"], d["f"], d["g"])
    return CheckOutcome(name, seed, True, holds, None if holds else inst.to_dict(), detail)


# suite


@dataclass
class TheoremCounts:
    instances: int = 0
    skipped: int = 0
    passed: int = 0
    failed: int = 0


@dataclass
class ControlResult:
    name: str
    attempts: int
    violations: int
    witness: Optional[dict]


@dataclass
class SuiteReport:
    seed: int
    instances_per_theorem: int
    counts: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)
    controls: list = field(default_factory=list)
    wall_clock: float = 0.0

    @property
    def failed(self) -> int:
        return sum(c.failed for c in self.counts.values())

    @property
    def ok(self) -> bool:
        return self.failed == 0 and all(c.violations >= 1 for c in self.controls)

    def to_dict(self, include_clock: bool = True) -> dict:
        out = {
            "seed": self.seed,
            "instances_per_theorem": self.instances_per_theorem,
            "ok": self.ok,
            "theorems": {
                t: {"instances": c.instances, "skipped": c.skipped, "passed": c.passed, "failed": c.failed}
                for t, c in self.counts.items()
            },
            "failures": [
                {"theorem": o.theorem, "instance_seed": o.instance_seed, "detail": o.reason, "witness": o.witness}
                for o in self.failures
            ],
            "negative_controls": [
                {"name": c.name, "attempts": c.attempts, "violations": c.violations, "witness": c.witness}
                for c in self.controls
            ],
        }
        if include_clock:
            out["wall_clock_seconds"] = round(self.wall_clock, 3)
        return out

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["id", "instances", "skipped", "passed", "failed"])
        for t, c in self.counts.items():
            w.writerow([t, c.instances, c.skipped, c.passed, c.failed])
        return buf.getvalue()


def parse_theorem_ids(text: str) -> list[str]:
    if text.strip().lower() == "all":
        return list(THEOREMS)
    ids = [s.strip().upper() for s in text.split(",") if s.strip()]
    bad = [s for s in ids if s not in THEOREMS]
    if bad or not ids:
        raise DomainError(f"unknown theorem id(s): {', '.join(bad) or text!r}")
    return ids


def run_suite(
    theorems: Optional[Iterable[str]] = None,
    instances_per_theorem: int = 200,
    seed: int = 42,
    negative_controls: bool = True,
    control_budget: int = 200,
    progress: Optional[Callable[[str], None]] = None,
) -> SuiteReport:
    if instances_per_theorem < 1:
        raise DomainError("instances_per_theorem must be at least 1")
    ids = list(THEOREMS) if theorems is None else list(theorems)
    start = time.perf_counter()
    report = SuiteReport(seed, instances_per_theorem)
    for t in ids:
        if t not in THEOREMS:
            raise DomainError(f"unknown theorem id {t!r}")
        counts = TheoremCounts()
        for i in range(instances_per_theorem):
            out = check(generate(t, seed * 100_000 + i))
            counts.instances += 1
            if out.skipped:
                counts.skipped += 1
            elif out.conclusion_holds:
                counts.passed += 1
            else:
                counts.failed += 1
                report.failures.append(out)
        report.counts[t] = counts
        if progress:
            progress(t)
    if negative_controls:
        for name in NEGATIVE_CONTROLS:
            attempts = violations = 0
            witness = None
            for i in range(control_budget):
                out = negative_control(name, seed * 100_000 + i)
                if out.skipped:
                    continue
                attempts += 1
                if not out.conclusion_holds:
                    violations += 1
                    if witness is None:
                        witness = {"instance": out.witness, "detail": out.reason}
            report.controls.append(ControlResult(name, attempts, violations, witness))
    report.wall_clock = time.perf_counter() - start
    return report
