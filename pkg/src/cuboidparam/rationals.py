"""Exact rational scalars and the small number-theoretic helpers.

The universal scalar is :class:`fractions.Fraction`, which already keeps
numerators and denominators reduced with a positive denominator.  This module
adds the text form used on every external surface ("p/q", denominator omitted
when 1), exact square roots, naive heights and simplest-rational
reconstruction inside an interval.
"""

import math
import re
from fractions import Fraction

from .errors import EmptyInterval, NegativeInput, ZeroDenominator

_RAT_RE = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


def parse_rational(text):
    """Parse "p" or "p/q" (q positive) into a Fraction.

    Rejects "p/0" with :class:`ZeroDenominator` and anything else with
    ValueError.  A sign is only accepted on the numerator.
    """
    m = _RAT_RE.match(text.strip())
    if not m:
        raise ValueError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ZeroDenominator(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(r):
    """Render a Fraction as "p/q", omitting "/q" when the denominator is 1."""
    r = Fraction(r)
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


def make_rational(num, den):
    """Reduced rational with positive denominator; den = 0 is an error."""
    if den == 0:
        raise ZeroDenominator("denominator must be nonzero")
    return Fraction(num, den)


def rational_sqrt(r):
    """Exact non-negative square root of r, or None when r is not a perfect
    rational square.  Negative input raises NegativeInput (a different thing
    than "not a square")."""
    r = Fraction(r)
    if r < 0:
        raise NegativeInput("square root of a negative rational")
    if r == 0:
        return Fraction(0)
    sn = math.isqrt(r.numerator)
    if sn * sn != r.numerator:
        return None
    sd = math.isqrt(r.denominator)
    if sd * sd != r.denominator:
        return None
    return Fraction(sn, sd)


def height(r):
    """Naive height max(|p|, q) of a reduced rational; height(0) = 1."""
    r = Fraction(r)
    if r == 0:
        return 1
    return max(abs(r.numerator), r.denominator)


def simplest_in_interval(lo, hi):
    """The unique rational of minimal height strictly inside (lo, hi).

    Stern-Brocot / continued-fraction descent.  The result minimises the
    numerator and the denominator simultaneously, hence also max(|p|, q).
    """
    lo, hi = Fraction(lo), Fraction(hi)
    if lo >= hi:
        raise EmptyInterval(f"empty open interval ({lo}, {hi})")
    if lo < 0 < hi:
        return Fraction(0)
    if hi <= 0:
        return -_simplest_nonneg(-hi, -lo)
    return _simplest_nonneg(lo, hi)


def _simplest_nonneg(lo, hi):
    # 0 <= lo < hi; returns the simplest rational strictly inside (lo, hi)
    n = lo.numerator // lo.denominator
    if n + 1 < hi:
        return Fraction(n + 1)
    # no integer strictly inside: x = n + 1/y with y in (1/(hi-n), 1/(lo-n))
    frac_lo = lo - n
    if frac_lo == 0:
        # y ranges over (1/(hi-n), infinity)
        inv = 1 / (hi - n)
        k = inv.numerator // inv.denominator + 1
        return n + Fraction(1, k)
    return n + 1 / _simplest_nonneg(1 / (hi - n), 1 / frac_lo)
