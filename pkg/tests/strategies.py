"""Hypothesis strategies shared by the tests."""

from fractions import Fraction

from hypothesis import strategies as st

from grl.alpha import AlphaCapacity, Segment
from grl.partition import AlphaPartition
from grl.step import StepFunction

small_q = st.builds(Fraction, st.integers(0, 12), st.sampled_from([1, 2, 3, 4]))
pos_q = st.builds(Fraction, st.integers(1, 12), st.sampled_from([1, 2, 3, 4]))


@st.composite
def partitions(draw):
    cuts = draw(st.lists(pos_q, max_size=5))
    return AlphaPartition.from_cuts(cuts, isolate=draw(st.booleans()))


@st.composite
def step_functions(draw, tail=False):
    bps = sorted(set(draw(st.lists(pos_q, min_size=0, max_size=5))))
    pts = tuple(draw(small_q) for _ in range(len(bps) + 1))
    ivs = tuple(draw(small_q) for _ in range(len(bps)))
    return StepFunction(tuple(bps), pts, ivs, draw(small_q) if tail else Fraction(0))


@st.composite
def sigma_additive(draw, finite=False):
    atoms = draw(st.lists(st.tuples(small_q, pos_q), max_size=3))
    cuts = sorted(set(draw(st.lists(small_q, max_size=4))))
    segs = [Segment(a, b, draw(small_q)) for a, b in zip(cuts[::2], cuts[1::2])]
    if not finite and draw(st.booleans()):
        start = (cuts[-1] if cuts else Fraction(0)) + 1
        segs.append(Segment(start, None, draw(pos_q)))
    return AlphaCapacity.sigma_additive(atoms, segs)
