from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grl.alpha import AlphaCapacity, Segment
from grl.capacity import KINDS, Capacity, GroundSpace, pushforward, random_capacity
from grl.curve import ScenarioInterval, survival_interval
from grl.errors import DomainError
from grl.rl import rl_integrate
from grl.integral import ScenarioFinite, choquet, grl_integrate, integral, restrict_indicator, survival_finite

from oracles import choquet_by_levels, weighted_sum

F = Fraction
LEB = AlphaCapacity.lebesgue()


def example_mu():
    # points 0,1,2 with f = (1,2,3): {1,2} -> 7/10, {2} -> 1/2
    vals = {0: 0, 1: F(1, 5), 2: F(3, 10), 3: F(1, 2), 4: F(1, 2), 5: F(3, 5), 6: F(7, 10), 7: 1}
    return Capacity.from_function(GroundSpace(3), vals.__getitem__)


def test_survival_finite_example():
    u = survival_finite((1, 2, 3), example_mu(), 0b111)
    assert [u(x) for x in (0, 1, F(3, 2), 2, F(5, 2), 3, F(7, 2))] == [1, 1, F(7, 10), F(7, 10), F(1, 2), F(1, 2), 0]


def test_survival_zero_f_and_empty_A():
    mu = example_mu()
    u = survival_finite((0, 0, 0), mu, 0b011)
    assert u(0) == mu(0b011) and u(F(1, 100)) == 0
    assert survival_finite((1, 2, 3), mu, 0).sup() == 0


def test_choquet_examples():
    assert choquet((1, 2, 3), example_mu(), 0b111) == F(11, 5)
    assert choquet((F(5, 2),) * 3, example_mu(), 0b101) == F(5, 2) * example_mu()(0b101)
    assert grl_integrate(ScenarioFinite(example_mu(), LEB, (1, 2, 3), 0b111)).value == F(11, 5)


def test_restrict_indicator():
    assert restrict_indicator((1, 2, 3), 0b111) == (1, 2, 3)
    assert restrict_indicator((1, 2, 3), 0) == (0, 0, 0)
    assert restrict_indicator((1, 2, 3), 0b101) == (1, 0, 3)


def test_grl_examples():
    s = GroundSpace(3)
    nu = AlphaCapacity.sigma_additive([(F(1), F(1))], [Segment(0, 4, 1)])
    assert grl_integrate(ScenarioFinite(Capacity.zero(s), nu, (1, 2, 3), s.full)).value == 0
    mu = example_mu()
    assert integral(mu, LEB, (F(7, 3),) * 3) == mu(s.full) * F(7, 3)


def test_nonexistent_is_reported_not_raised():
    rep = grl_integrate(ScenarioFinite(example_mu(), AlphaCapacity.distorted_power(F(1, 2)), (1, 2, 3), 0b111))
    assert not rep.integrable and rep.value is None
    assert rep.to_dict()["diagnostics"]["envelope"]["verdict"] == "diverged"
    with pytest.raises(ValueError):
        integral(example_mu(), AlphaCapacity.distorted_power(F(1, 2)), (1, 2, 3))


def test_scenario_validation():
    mu = example_mu()
    with pytest.raises(DomainError):
        ScenarioFinite(mu, LEB, (1, 2), 0b111)
    with pytest.raises(DomainError):
        ScenarioFinite(mu, LEB, (1, -2, 0), 0b111)
    with pytest.raises(DomainError):
        ScenarioFinite(mu, LEB, (1, 2, 3), 0b1000)


def fs(n):
    return st.lists(st.builds(Fraction, st.integers(0, 9), st.sampled_from([1, 2, 3])), min_size=n, max_size=n)


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_choquet_against_oracles(data):
    n = data.draw(st.integers(1, 6))
    mu = random_capacity(GroundSpace(n), data.draw(st.sampled_from(KINDS)), data.draw(st.integers(0, 10**6)))
    f = data.draw(fs(n))
    A = data.draw(st.integers(0, (1 << n) - 1))
    value = grl_integrate(ScenarioFinite(mu, LEB, f, A)).value
    assert value == choquet(f, mu, A) == choquet_by_levels(f, mu.values, A)


@settings(max_examples=100, deadline=None)
@given(st.data())
def test_additive_choquet_is_weighted_sum(data):
    n = data.draw(st.integers(1, 6))
    masses = data.draw(st.lists(st.builds(Fraction, st.integers(0, 9), st.sampled_from([1, 5, 7])), min_size=n, max_size=n))
    mu = Capacity.from_masses(GroundSpace(n), masses)
    f = data.draw(fs(n))
    assert choquet(f, mu, mu.space.full) == weighted_sum(f, masses, mu.space.full)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_survival_properties(data):
    n = data.draw(st.integers(1, 5))
    mu = random_capacity(GroundSpace(n), "monotone", data.draw(st.integers(0, 10**6)))
    f = data.draw(fs(n))
    A = data.draw(st.integers(0, (1 << n) - 1))
    B = A | data.draw(st.integers(0, (1 << n) - 1))
    u, w = survival_finite(f, mu, A), survival_finite(f, mu, B)
    grid = sorted({F(0), *(F(x) for x in f), *(F(x) + F(1, 7) for x in f)})
    assert u(0) == mu(A)
    assert all(u(a) >= u(b) for a, b in zip(grid, grid[1:]))
    assert u <= w
    # indicator identity away from 0
    v = survival_finite(restrict_indicator(f, A), mu, mu.space.full)
    assert all(u(a) == v(a) for a in grid if a > 0)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_pushforward_level_sets(data):
    n, m = data.draw(st.integers(1, 5)), data.draw(st.integers(1, 4))
    phi = data.draw(st.lists(st.integers(0, m - 1), min_size=n, max_size=n))
    mu = random_capacity(GroundSpace(n), "arbitrary", data.draw(st.integers(0, 10**6)))
    g = data.draw(fs(m))
    T = GroundSpace(m)
    u = survival_finite(g, pushforward(mu, phi, T), T.full)
    w = survival_finite([g[j] for j in phi], mu, mu.space.full)
    grid = sorted({F(0), *(F(x) for x in g), *(F(x) + F(1, 3) for x in g)})
    assert all(u(a) == w(a) for a in grid)


# interval scenarios


def interval(p=2, knots=((0, 0), (1, 1)), A=((0, 1),), nu=LEB, d=1):
    return ScenarioInterval(d, p, nu, knots, A)


def test_interval_square_example():
    rep = grl_integrate(interval())
    assert rep.integrable and rep.value == F(1, 3) and rep.error_bound is None
    curve = survival_interval(interval())
    for a in (F(0), F(1, 4), F(1, 2), F(1)):
        assert curve(a) == (1 - a) ** 2
    assert curve(F(3, 2)) == 0


def test_interval_constant_f():
    curve = survival_interval(interval(p=1, knots=((0, 3), (2, 3)), A=((0, 2),), d=2))
    assert curve(0) == 2 and curve(3) == 2 and curve(F(301, 100)) == 0


def test_interval_union_A():
    curve = survival_interval(interval(p=1, A=((0, F(1, 2)), (F(3, 4), 1))))
    assert curve.breaks == (F(1, 2), F(3, 4), F(1))
    assert curve(F(1, 4)) == F(1, 4) + F(1, 4)
    assert curve(F(5, 8)) == F(1, 4)
    assert curve(F(7, 8)) == F(1, 8)


def test_interval_fractional_power_has_error_bound():
    rep = grl_integrate(interval(p=F(1, 2)))
    assert rep.integrable and abs(rep.value - F(2, 3)) <= rep.error_bound + 1e-15
    assert rep.error_bound < 1e-12


def test_interval_other_families():
    assert grl_integrate(interval(nu=AlphaCapacity.dirac(F(1, 2)))).value == F(1, 4)
    assert grl_integrate(interval(nu=AlphaCapacity.vanishing_on_bounded(2))).value == 0
    assert grl_integrate(interval(nu=AlphaCapacity.distorted_power(2))).value == 0
    rep = grl_integrate(interval(nu=AlphaCapacity.distorted_power(F(1, 2))))
    assert not rep.integrable and rep.rl.trace.verdict.kind == "diverged"


def test_interval_bracket_encloses_value():
    curve = survival_interval(interval())
    for n in (1, 4, 16):
        lo, hi = curve.bracket(n)
        a, b = rl_integrate(lo, LEB).value, rl_integrate(hi, LEB).value
        assert a <= F(1, 3) <= b
        assert b - a <= F(1, n)


def test_interval_validation():
    with pytest.raises(DomainError):
        interval(knots=((0, 0), (F(1, 2), 1)))
    with pytest.raises(DomainError):
        interval(A=((0, 2),))
    with pytest.raises(DomainError):
        interval(p=0)
    with pytest.raises(DomainError):
        interval(knots=((0, 1), (1, -1)))
