"""Extended non-negative rationals: exact ``Fraction`` values plus ``+inf``.

Values that cannot be represented exactly (irrational powers) fall back to
``float``; callers can tell them apart with :func:`is_exact`.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

INF = math.inf

Ext = Union[Fraction, float]


def is_inf(x) -> bool:
    return isinstance(x, float) and math.isinf(x)


def is_exact(x) -> bool:
    return isinstance(x, (int, Fraction))


def parse_rational(text) -> Fraction:
    """Parse ``"p/q"``, an integer string, or an int into a ``Fraction``.

    Floats and decimal strings are rejected so that files never carry
    binary rounding into the exact engine.
    """
    if isinstance(text, bool):
        raise ValueError(f"not a rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, Fraction):
        return text
    if not isinstance(text, str):
        raise ValueError(f"not a rational: {text!r}")
    s = text.strip()
    num, sep, den = s.partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"not a rational: {text!r}") from None
    if q == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(p, q)


def parse_ext(text) -> Ext:
    if isinstance(text, str) and text.strip() in ("inf", "+inf"):
        return INF
    return parse_rational(text)


def format_ext(x) -> str:
    if is_inf(x):
        return "inf"
    if isinstance(x, float):
        return repr(x)
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def mul(u, m) -> Ext:
    """Product with the convention 0 * inf = 0."""
    if u == 0 or m == 0:
        return Fraction(0)
    return u * m


def add(*xs) -> Ext:
    total = Fraction(0)
    for x in xs:
        total = total + x
    return total


def _exact_root(n: int, k: int):
    if n < 0:
        return None
    r = round(n ** (1.0 / k)) if n else 0
    for c in (r - 1, r, r + 1):
        if c >= 0 and c**k == n:
            return c
    # large ints: fall back to integer Newton iteration
    if n.bit_length() > 50:
        x = 1 << ((n.bit_length() + k - 1) // k)
        while True:
            y = ((k - 1) * x + n // x ** (k - 1)) // k
            if y >= x:
                break
            x = y
        if x**k == n:
            return x
    return None


def rational_power(x, p: Fraction) -> Ext:
    """``x ** p`` for rational ``p``; exact whenever the result is rational."""
    p = Fraction(p)
    if is_inf(x):
        return INF
    if x == 0:
        return Fraction(0)
    if isinstance(x, float):
        return x ** float(p)
    x = Fraction(x)
    if p.denominator == 1:
        return x ** p.numerator
    k = p.denominator
    rn = _exact_root(x.numerator, k)
    rd = _exact_root(x.denominator, k)
    if rn is not None and rd is not None:
        return Fraction(rn, rd) ** p.numerator
    return float(x) ** float(p)
