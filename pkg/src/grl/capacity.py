"""Set functions on finite ground sets with exact rational values.

Subsets are bit masks over the point indices ``0..n-1``; the measurable
sets are the whole power set.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .errors import CapacityTooLargeError, DomainError, GenerationError

Subset = Union[int, Iterable[int]]

VARIATION_MAX_N = 12
RANDOM_MAX_N = 8
KINDS = ("monotone", "additive", "submodular", "superadditive", "subadditive", "arbitrary")


@dataclass(frozen=True)
class GroundSpace:
    size: int
    labels: Optional[tuple[str, ...]] = None

    def __post_init__(self):
        if not isinstance(self.size, int) or self.size < 1:
            raise DomainError(f"ground space size must be a positive integer, got {self.size!r}")
        if self.labels is not None:
            labels = tuple(str(x) for x in self.labels)
            if len(labels) != self.size or len(set(labels)) != self.size:
                raise DomainError("labels must be a list of size distinct strings")
            object.__setattr__(self, "labels", labels)

    @property
    def full(self) -> int:
        return (1 << self.size) - 1

    def subsets(self) -> range:
        return range(1 << self.size)

    def mask(self, subset: Subset) -> int:
        """Normalise a subset given as a bit mask or an iterable of indices."""
        if isinstance(subset, int):
            if subset < 0 or subset >> self.size:
                raise DomainError(f"subset mask {subset} is not contained in a space of size {self.size}")
            return subset
        m = 0
        for i in subset:
            if not isinstance(i, int) or not 0 <= i < self.size:
                raise DomainError(f"point index {i!r} out of range for a space of size {self.size}")
            m |= 1 << i
        return m

    def members(self, mask: int) -> list[int]:
        return [i for i in range(self.size) if mask >> i & 1]


@dataclass(frozen=True)
class PropertyFlags:
    monotone: bool
    fuzzy: bool
    submodular: bool
    additive: bool
    subadditive: bool
    superadditive: bool

    def has(self, kind: str) -> bool:
        if kind == "arbitrary":
            return True
        return getattr(self, kind)


@dataclass(frozen=True)
class Capacity:
    """A set function ``2^S -> Q>=0`` stored as a table indexed by bit mask."""

    space: GroundSpace
    values: tuple[Fraction, ...]

    def __post_init__(self):
        vals = tuple(Fraction(v) for v in self.values)
        if len(vals) != 1 << self.space.size:
            raise DomainError(f"expected {1 << self.space.size} values, got {len(vals)}")
        if vals[0] != 0:
            raise DomainError("a capacity must vanish on the empty set")
        if any(v < 0 for v in vals):
            raise DomainError("capacity values must be non-negative")
        object.__setattr__(self, "values", vals)

    @classmethod
    def from_function(cls, space: GroundSpace, fn) -> Capacity:
        return cls(space, tuple(Fraction(0) if m == 0 else Fraction(fn(m)) for m in space.subsets()))

    @classmethod
    def from_masses(cls, space: GroundSpace, masses: Sequence) -> Capacity:
        masses = [Fraction(x) for x in masses]
        if len(masses) != space.size:
            raise DomainError("one mass per point is required")
        return cls.from_function(space, lambda m: sum((masses[i] for i in space.members(m)), Fraction(0)))

    @classmethod
    def zero(cls, space: GroundSpace) -> Capacity:
        return cls(space, (Fraction(0),) * (1 << space.size))

    def __call__(self, subset: Subset) -> Fraction:
        return self.values[self.space.mask(subset)]

    def __add__(self, other: Capacity) -> Capacity:
        if other.space.size != self.space.size:
            raise DomainError("capacities live on different spaces")
        return Capacity(self.space, tuple(a + b for a, b in zip(self.values, other.values)))

    def scaled(self, k) -> Capacity:
        k = Fraction(k)
        if k < 0:
            raise DomainError("scale factor must be non-negative")
        return Capacity(self.space, tuple(k * v for v in self.values))

    def setwise_le(self, other: Capacity) -> bool:
        return all(a <= b for a, b in zip(self.values, other.values))


def evaluate(c: Capacity, subset: Subset) -> Fraction:
    return c(subset)


def classify(c: Capacity) -> PropertyFlags:
    """Decide the six classes of set functions by checking every pair of subsets.

    Additivity and superadditivity quantify over disjoint pairs; the
    remaining inequalities over all pairs. Every inequality is symmetric in
    the pair, so each unordered pair is visited once, on integers scaled to
    a common denominator.
    """
    scale = math.lcm(*(v.denominator for v in c.values))
    m = [v.numerator * (scale // v.denominator) for v in c.values]
    n_sets = len(m)
    monotone = submodular = subadditive = additive = superadditive = True
    for b in range(n_sets):
        mb = m[b]
        for d in range(b, n_sets):
            md = m[d]
            u = m[b | d]
            s = mb + md
            if monotone and ((b & ~d == 0 and mb > md) or (d & ~b == 0 and md > mb)):
                monotone = False
            if submodular and u + m[b & d] > s:
                submodular = False
            if subadditive and u > s:
                subadditive = False
            if b & d == 0:
                if additive and u != s:
                    additive = False
                if superadditive and u < s:
                    superadditive = False
        if not (monotone or submodular or subadditive or additive or superadditive):
            break
    return PropertyFlags(
        monotone=monotone,
        fuzzy=monotone and m[0] == 0,
        submodular=submodular,
        additive=additive,
        subadditive=subadditive,
        superadditive=superadditive,
    )


def variation(c: Capacity, subset: Subset) -> Fraction:
    """Largest total value of a family of pairwise disjoint subsets of ``subset``.

    Values are non-negative, so the supremum is attained by a partition of
    the whole subset; the search runs over all set partitions via a
    lowest-element dynamic program (3^k work for a k-point subset).
    """
    if c.space.size > VARIATION_MAX_N:
        raise CapacityTooLargeError(
            f"variation enumerates set partitions; space size {c.space.size} exceeds the guard {VARIATION_MAX_N}"
        )
    target = c.space.mask(subset)
    scale = math.lcm(*(v.denominator for v in c.values))
    m = [v.numerator * (scale // v.denominator) for v in c.values]
    best = {0: 0}
    # submasks in increasing numeric order: every proper submask is seen first
    subs = []
    s = target
    while True:
        subs.append(s)
        if s == 0:
            break
        s = (s - 1) & target
    for s in reversed(subs):
        if s == 0:
            continue
        low = s & -s
        rest = s ^ low
        top = 0
        t = rest
        while True:
            block = t | low
            val = m[block] + best[s ^ block]
            if val > top:
                top = val
            if t == 0:
                break
            t = (t - 1) & rest
        best[s] = top
    return Fraction(best[target], scale)


def pushforward(c: Capacity, phi: Sequence[int], target: GroundSpace) -> Capacity:
    """The image set function ``E -> c(phi^{-1}(E))`` on ``target``."""
    if len(phi) != c.space.size:
        raise DomainError("phi must assign an image to every point")
    for t in phi:
        if not isinstance(t, int) or not 0 <= t < target.size:
            raise DomainError(f"phi value {t!r} is not a point of the target space")
    pre = [0] * (1 << target.size)
    for e in range(1, 1 << target.size):
        low = (e & -e).bit_length() - 1
        pre[e] = pre[e & (e - 1)] | sum(1 << i for i, t in enumerate(phi) if t == low)
    return Capacity(target, tuple(c.values[p] for p in pre))


def preimage(phi: Sequence[int], mask: int) -> int:
    return sum(1 << i for i, t in enumerate(phi) if mask >> t & 1)


_DENOMS = (1, 2, 3, 4, 5, 6, 8, 10, 12)


def _rand_value(rng: random.Random, top: int = 12) -> Fraction:
    return Fraction(rng.randint(0, top), rng.choice(_DENOMS))


def _attempt(space: GroundSpace, kind: str, rng: random.Random) -> Capacity:
    n_sets = 1 << space.size
    if kind == "additive":
        return Capacity.from_masses(space, [_rand_value(rng) for _ in range(space.size)])
    if kind in ("submodular", "superadditive"):
        masses = [Fraction(rng.randint(0, 9)) for _ in range(space.size)]
        total = sum(masses) or Fraction(1)
        a = Fraction(rng.randint(1, 8), rng.choice(_DENOMS))
        b = Fraction(rng.randint(1, 8), rng.choice(_DENOMS))
        if kind == "submodular":
            # a t - b t^2 is concave and stays increasing on [0, 1] when b <= a / 2
            b = min(b, a / 2)
            h = lambda t: a * t - b * t * t  # noqa: E731
        else:
            h = lambda t: a * t + b * t * t  # noqa: E731
        return Capacity.from_function(
            space, lambda m: h(sum((masses[i] for i in space.members(m)), Fraction(0)) / total)
        )
    raw = [Fraction(0)] + [_rand_value(rng) for _ in range(n_sets - 1)]
    if kind == "arbitrary":
        return Capacity(space, tuple(raw))
    by_size = sorted(range(n_sets), key=lambda m: bin(m).count("1"))
    vals = list(raw)
    for m in by_size:
        for i in space.members(m):
            vals[m] = max(vals[m], vals[m ^ (1 << i)])
    if kind == "subadditive":
        for m in by_size:
            if m == 0:
                continue
            low = m & -m
            rest = m ^ low
            t = rest
            while t:
                block = t | low
                if block != m:
                    vals[m] = min(vals[m], vals[block] + vals[m ^ block])
                t = (t - 1) & rest
            if rest:
                vals[m] = min(vals[m], vals[low] + vals[rest])
    return Capacity(space, tuple(vals))


def random_capacity(space: GroundSpace, kind: str, seed, retries: int = 20) -> Capacity:
    """Seeded random capacity whose :func:`classify` flags include ``kind``."""
    if kind not in KINDS:
        raise DomainError(f"unknown capacity kind {kind!r}; expected one of {', '.join(KINDS)}")
    if space.size > RANDOM_MAX_N:
        raise DomainError(f"random capacities are limited to {RANDOM_MAX_N} points")
    rng = random.Random(f"capacity/{kind}/{space.size}/{seed}")
    for _ in range(retries):
        c = _attempt(space, kind, rng)
        if classify(c).has(kind):
            return c
    raise GenerationError(f"could not generate a {kind} capacity on {space.size} points (seed={seed!r})")
