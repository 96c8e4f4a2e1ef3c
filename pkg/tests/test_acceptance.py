"""Acceptance criteria, one test per criterion.

Each test records a PASS/FAIL line that is printed in the terminal summary.
"""

import random
import time
from fractions import Fraction

import pytest

from conftest import ACCEPTANCE_LINES
from oracles import variation_brute

from grl.alpha import AlphaCapacity, Segment
from grl.capacity import KINDS, Capacity, GroundSpace, pushforward, random_capacity, variation
from grl.curve import ScenarioInterval
from grl.integral import ScenarioFinite, choquet, grl_integrate
from grl.intervals import Interval
from grl.partition import AlphaPartition, TaggedPartition, refinement_envelopes, tagged_sum
from grl.rl import rl_integrate
from grl.step import StepFunction
from grl.theorems import THEOREMS, run_suite

F = Fraction
LEB = AlphaCapacity.lebesgue()


def record(n, ok, detail):
    ACCEPTANCE_LINES.append(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")


def rand_q(rng, top=9, dens=(1, 2, 3, 4)):
    return F(rng.randint(0, top), rng.choice(dens))


def rand_step(rng, max_gap=None):
    k = rng.randint(0, 5)
    bps, x = [], F(0)
    for _ in range(k):
        x += F(rng.randint(1, 4), rng.choice((1, 2, 4))) if max_gap is None else F(rng.randint(1, 4), 4)
        bps.append(x)
    pts = tuple(rand_q(rng) for _ in range(k + 1))
    ivs = tuple(rand_q(rng) for _ in range(k))
    return StepFunction(tuple(bps), pts, ivs, F(0))


def rand_sigma(rng):
    atoms = [(rand_q(rng), F(rng.randint(1, 6), rng.choice((1, 2)))) for _ in range(rng.randint(0, 3))]
    cuts = sorted({rand_q(rng) for _ in range(4)})
    segs = [Segment(a, b, rand_q(rng)) for a, b in zip(cuts[::2], cuts[1::2])]
    if rng.random() < 0.4:
        segs.append(Segment((cuts[-1] if cuts else 0) + 1, None, F(rng.randint(1, 3))))
    return AlphaCapacity.sigma_additive(atoms, segs)


def test_criterion_1_interval_example():
    t = time.perf_counter()
    sc = ScenarioInterval(1, 2, LEB, ((0, 0), (1, 1)), ((0, 1),))
    rep = grl_integrate(sc)
    elapsed = time.perf_counter() - t
    ok = rep.integrable and rep.value == F(1, 3) and isinstance(rep.value, Fraction) and elapsed < 1
    record(1, ok, f"value={rep.value} in {elapsed:.3f}s")
    assert ok


def test_criterion_2_vanishing_on_bounded():
    t = time.perf_counter()
    rng = random.Random(2)
    nu = AlphaCapacity.vanishing_on_bounded(1)
    us = [StepFunction.constant(1), StepFunction.constant(F(7, 3))] + [rand_step(rng) for _ in range(20)]
    values = {rl_integrate(u, nu).value for u in us}
    for n in range(1, 7):
        mu = Capacity.from_function(GroundSpace(n), lambda m: 1 if m else 0)
        values.add(grl_integrate(ScenarioFinite(mu, nu, tuple(range(1, n + 1)), mu.space.full)).value)
    probes_ok = True
    for u in us:
        trace = refinement_envelopes(u, nu)
        probes_ok &= trace.verdict.kind == "converged" and trace.verdict.value == 0
        probes_ok &= all(lv.lower == lv.upper == 0 for lv in trace.levels)
        top = int(u.last_breakpoint) + 1 if u.breakpoints else 1
        cells = [Interval(k, k + 1, True, False) for k in range(top)] + [Interval.ray(top, closed=True)]
        probes_ok &= tagged_sum(u, nu, TaggedPartition.leftmost(AlphaPartition(tuple(cells))), split_tail=True) == 0
    elapsed = time.perf_counter() - t
    ok = values == {0} and probes_ok and elapsed < 1
    record(2, ok, f"values={sorted(str(v) for v in values)} envelopes all zero={probes_ok} in {elapsed:.3f}s")
    assert ok


def test_criterion_3_constant_integrand():
    rng = random.Random(3)
    bad = 0
    for i in range(50):
        c = F(rng.randint(0, 20), rng.randint(1, 7))
        target = F(rng.randint(1, 20), rng.randint(1, 7))
        space = GroundSpace(rng.randint(1, 6))
        base = random_capacity(space, "monotone", i)
        top = base(space.full)
        mu = base.scaled(target / top) if top else Capacity.from_function(space, lambda m: target if m else 0)
        value = grl_integrate(ScenarioFinite(mu, LEB, (c,) * space.size, space.full)).value
        bad += value != mu(space.full) * c or mu(space.full) != target
    record(3, bad == 0, f"{50 - bad}/50 pairs exact")
    assert bad == 0


def test_criterion_4_choquet_reduction():
    rng = random.Random(4)
    t = time.perf_counter()
    bad = 0
    for i in range(1000):
        n = rng.randint(1, 6)
        mu = random_capacity(GroundSpace(n), rng.choice(KINDS), i)
        f = tuple(rand_q(rng) for _ in range(n))
        A = rng.randrange(1 << n)
        bad += grl_integrate(ScenarioFinite(mu, LEB, f, A)).value != choquet(f, mu, A)
    elapsed = time.perf_counter() - t
    ok = bad == 0 and elapsed < 30
    record(4, ok, f"{1000 - bad}/1000 exact in {elapsed:.2f}s")
    assert ok


@pytest.fixture(scope="module")
def suite():
    t = time.perf_counter()
    rep = run_suite(list(THEOREMS), instances_per_theorem=200, seed=42)
    return rep, time.perf_counter() - t


def test_criterion_5_theorem_suite(suite):
    rep, elapsed = suite
    failing = {t: c.failed for t, c in rep.counts.items() if c.failed}
    skipped = sum(c.skipped for c in rep.counts.values())
    controls = {c.name: c.violations for c in rep.controls}
    controls_ok = all(c.violations >= 1 and c.witness is not None for c in rep.controls)
    ok = not failing and skipped == 0 and controls_ok and elapsed < 60
    record(
        5,
        ok,
        f"failures={failing or 0} skipped={skipped} control violations={controls} in {elapsed:.1f}s"
        + ("" if ok else "  (T15 is false as stated: see TestSuperadditivityClaim in test_theorems.py)"),
    )
    # everything except the superadditivity claim must hold
    assert set(failing) <= {"T15"} and skipped == 0 and controls_ok and elapsed < 60


@pytest.mark.xfail(strict=True, reason="the superadditive-integrand claim has counterexamples for non-Lebesgue nu")
def test_criterion_5_superadditivity_claim(suite):
    rep, _ = suite
    assert rep.counts["T15"].failed == 0


def test_criterion_6_rl_engine_consistency():
    rng = random.Random(6)
    worst = 0.0
    agree = True
    for _ in range(200):
        u, v = rand_step(rng), rand_sigma(rng)
        r = rl_integrate(u, v)
        trace = refinement_envelopes(u, v, max_depth=20)
        if not r.exists:
            agree &= trace.verdict.kind == "diverged"
            continue
        agree &= trace.verdict.kind == "converged"
        if trace.verdict.kind == "converged":
            worst = max(worst, abs(float(trace.verdict.value - r.value)))

    # p = 2: cells of u no longer than 1, so each contributes at most 2**-d * sup u * length
    bound_ok = True
    p2 = AlphaCapacity.distorted_power(2)
    for u in [StepFunction.indicator(1)] + [rand_step(rng, max_gap=1) for _ in range(50)]:
        support = u.last_breakpoint if u.breakpoints else F(0)
        for lv in refinement_envelopes(u, p2, max_depth=20, tolerance=0).levels:
            bound_ok &= lv.upper <= F(1, 2**lv.depth) * u.sup() * support

    half = refinement_envelopes(StepFunction.indicator(1), AlphaCapacity.distorted_power(F(1, 2)), max_depth=40)
    crossed = next((lv.depth for lv in half.levels if lv.lower > 1e6), None)
    ok = agree and worst < 1e-9 and bound_ok and crossed is not None and crossed <= 40
    record(6, ok, f"max |closed - envelope|={worst:.1e}, p=2 bound held={bound_ok}, p=1/2 lower > 1e6 at depth {crossed}")
    assert ok


def test_criterion_7_variation():
    rng = random.Random(7)
    t = time.perf_counter()
    bad = 0
    caps = []
    for i in range(100):
        space = GroundSpace(rng.randint(1, 8))
        c = random_capacity(space, "additive", i)
        caps.append(c)
        bad += variation(c, space.full) != c(space.full)
    elapsed = time.perf_counter() - t
    hand = Capacity(GroundSpace(2), (F(0), F(3, 5), F(3, 5), F(1)))
    hand_ok = variation(hand, 0b11) == F(6, 5) == variation_brute(hand.values, [0, 1])
    # the partition enumerator agrees with the closed total on the smaller spaces
    brute_ok = all(variation_brute(c.values, list(range(c.space.size))) == c(c.space.full) for c in caps if c.space.size <= 6)
    ok = bad == 0 and hand_ok and brute_ok and elapsed < 5
    record(7, ok, f"{100 - bad}/100 additive match, n=2 instance gives {variation(hand, 0b11)}, {elapsed:.2f}s")
    assert ok


def test_criterion_8_transformation_rule():
    rng = random.Random(8)
    bad = 0
    families = [LEB, AlphaCapacity.dirac(1), AlphaCapacity.vanishing_on_bounded(2), AlphaCapacity.lebesgue(upto=3)]
    for i in range(200):
        S, T = GroundSpace(rng.randint(1, 6)), GroundSpace(rng.randint(1, 6))
        phi = [rng.randrange(T.size) for _ in range(S.size)]
        mu = random_capacity(S, rng.choice(KINDS), i)
        g = tuple(rand_q(rng) for _ in range(T.size))
        nu = families[i % len(families)] if i % 5 else rand_sigma(rng)
        lhs = grl_integrate(ScenarioFinite(pushforward(mu, phi, T), nu, g, T.full))
        rhs = grl_integrate(ScenarioFinite(mu, nu, tuple(g[j] for j in phi), S.full))
        bad += (lhs.integrable, lhs.value) != (rhs.integrable, rhs.value)
    record(8, bad == 0, f"{200 - bad}/200 triples exact")
    assert bad == 0
