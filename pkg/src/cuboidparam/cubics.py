"""Deciding whether a rational cubic has three rational roots.

The route: depress the cubic, form the resolvent parameter D = B0^2/B1^3,
build the sextic D(w^2+3)^3 + 4(w-1)^2(w+1)^2, and hunt for rational w.  Each
rational root w of the sextic certifies three rational roots of the cubic and
pins one ordering of them; the root formulas below lift w back to the cubic.
Works verbatim with w a residue class in Q[w]/(m) for algebraic witnesses.
"""

from dataclasses import dataclass
from fractions import Fraction

from .coeffs import Cubic
from .errors import (DegenerateDepression, LeadingZero, NoRationalWitness,
                     NotReducedTriple, WDegenerate)
from .polynomials import (DEFAULT_HEIGHT_BOUND, Poly, rational_roots)
from .rationals import rational_sqrt


@dataclass(frozen=True)
class DepressedCubic:
    """x~^3 + b1*x~ + b0 after removing the quadratic term."""
    b1: Fraction
    b0: Fraction


@dataclass(frozen=True)
class ReducedTriple:
    """Roots of y^3 + y^2 + D: sum -1, second symmetric function 0."""
    y1: Fraction
    y2: Fraction
    y3: Fraction

    def __iter__(self):
        return iter((self.y1, self.y2, self.y3))


@dataclass(frozen=True)
class RationalityVerdict:
    decided: bool
    has_three_rational_roots: bool
    roots: tuple                 # multiset of roots, sorted
    witnesses: tuple             # (w, multiplicity) pairs, sorted by w
    path: str                    # "sextic" or "degenerate"
    d: Fraction = None           # resolvent parameter when it exists


def depress(cubic):
    """Shift away the quadratic term; returns the (B1, B0) pair."""
    if cubic.a3 == 0:
        raise LeadingZero("not a cubic: leading coefficient is zero")
    a3, a2, a1, a0 = cubic.a3, cubic.a2, cubic.a1, cubic.a0
    b1 = a1 / a3 - a2 * a2 / (3 * a3 * a3)
    b0 = a0 / a3 - a1 * a2 / (3 * a3 * a3) + 2 * a2**3 / (27 * a3**3)
    return DepressedCubic(b1=b1, b0=b0)


def d_param(cubic):
    """Resolvent parameter D = B0^2 / B1^3.

    Computed both from the depressed form and directly from the original
    coefficients; the two routes must agree exactly.
    """
    dep = depress(cubic)
    if dep.b0 == 0 or dep.b1 == 0:
        raise DegenerateDepression(
            f"B0 = {dep.b0}, B1 = {dep.b1}: outside the resolvent's scope")
    d = dep.b0 * dep.b0 / dep.b1**3
    a3, a2, a1, a0 = cubic.a3, cubic.a2, cubic.a1, cubic.a0
    d_direct = (-(9*a1*a2*a3 - 27*a0*a3*a3 - 2*a2**3)**2
                / (27 * (a2*a2 - 3*a1*a3)**3))
    assert d == d_direct
    return d


def sextic_poly(d):
    """D(w^2+3)^3 + 4(w-1)^2(1+w)^2 as a polynomial in w."""
    d = Fraction(d)
    return Poly([27*d + 4, 0, 27*d - 8, 0, 9*d + 4, 0, d])


def roots_from_w(w):
    """Ordered roots of y^3 + y^2 + D for the witness w.

    The common denominator w^2 + 3 never vanishes for rational w.  Works for
    RingElem w as well; the result is then a plain tuple of ring elements.
    """
    den = w * w + 3
    y1 = (-2) * (w + 1) / den
    y2 = 2 * (w - 1) / den
    y3 = (1 - w * w) / den
    if isinstance(w, (int, Fraction)):
        return ReducedTriple(y1, y2, y3)
    return (y1, y2, y3)


def d_from_triple(triple):
    """D = -4(w-1)^2(1+w)^2/(w^2+3)^3 expressed through the roots: their
    product is -D."""
    y1, y2, y3 = triple
    return -(y1 * y2 * y3)


def w_from_ordered_roots(triple):
    """The unique rational w reproducing the ordered triple via roots_from_w.

    Solves y2 = 2t/((t+1)^2 + 3) for t (a quadratic), sets w = t + 1, and
    keeps the branch matching the y1 component.
    """
    y1, y2, y3 = triple
    if y1 + y2 + y3 != -1 or y1*y2 + y1*y3 + y2*y3 != 0:
        raise NotReducedTriple("triple is not a root set of y^3 + y^2 + D")
    if y2 == 0:
        candidates = [Fraction(1)]
    else:
        # y2*t^2 + (2*y2 - 2)*t + 4*y2 = 0
        disc = (2*y2 - 2)**2 - 16*y2*y2
        if disc < 0:
            raise NoRationalWitness("branch quadratic has no real solution")
        s = rational_sqrt(disc)
        if s is None:
            raise NoRationalWitness("branch quadratic has irrational roots")
        candidates = [(2 - 2*y2 + s) / (2*y2) + 1, (2 - 2*y2 - s) / (2*y2) + 1]
    for w in candidates:
        got = roots_from_w(w)
        if (got.y1, got.y2, got.y3) == (y1, y2, y3):
            return w
    raise NoRationalWitness("no branch reproduces the ordered triple")


def lift_roots(cubic, w):
    """Ordered root triple of the general cubic from a witness w.

    Uses x = B0/(B1*y) - A2/(3*A3) with y from roots_from_w.  Accepts a
    RingElem w; the printed denominators 1 -/+ w forbid w = +-1.
    """
    if isinstance(w, (int, Fraction)) and w in (1, -1):
        raise WDegenerate("w = +-1 makes a lifting denominator vanish")
    dep = depress(cubic)
    if dep.b0 == 0 or dep.b1 == 0:
        raise DegenerateDepression(
            f"B0 = {dep.b0}, B1 = {dep.b1}: lifting formulas do not apply")
    shift = cubic.a2 / (3 * cubic.a3)
    ys = roots_from_w(w)
    return tuple(dep.b0 / (dep.b1 * y) - shift for y in ys)


def _rational_roots_of_cubic(cubic, height_bound):
    p = Poly([cubic.a0, cubic.a1, cubic.a2, cubic.a3])
    return rational_roots(p, height_bound)


def analyze_cubic(cubic, height_bound=DEFAULT_HEIGHT_BOUND):
    """Full rationality verdict for a rational cubic.

    Main path: rational roots of the resolvent sextic, lifted and
    cross-checked by exact evaluation.  Cubics with B0 = 0 or B1 = 0 fall
    outside the resolvent criterion and are factored directly instead.
    """
    if cubic.a3 == 0:
        raise LeadingZero("not a cubic: leading coefficient is zero")
    dep = depress(cubic)
    if dep.b0 == 0 or dep.b1 == 0:
        rr = _rational_roots_of_cubic(cubic, height_bound)
        roots = []
        for r, mult in rr.roots:
            roots.extend([r] * mult)
        has_three = len(roots) == 3
        decided = rr.decided or has_three
        return RationalityVerdict(
            decided=decided, has_three_rational_roots=has_three,
            roots=tuple(sorted(roots)), witnesses=(), path="degenerate")

    d = d_param(cubic)
    sextic = sextic_poly(d)
    if d > 0:
        # both summands of the sextic are then strictly positive
        return RationalityVerdict(
            decided=True, has_three_rational_roots=False, roots=(),
            witnesses=(), path="sextic", d=d)
    rr = rational_roots(sextic, height_bound)
    witnesses = tuple(sorted(rr.roots))
    if witnesses:
        root_multisets = set()
        for w, _ in witnesses:
            lifted = lift_roots(cubic, w)
            assert all(cubic(x) == 0 for x in lifted)
            root_multisets.add(tuple(sorted(lifted)))
        assert len(root_multisets) == 1
        return RationalityVerdict(
            decided=True, has_three_rational_roots=True,
            roots=root_multisets.pop(), witnesses=witnesses,
            path="sextic", d=d)
    return RationalityVerdict(
        decided=rr.decided, has_three_rational_roots=False, roots=(),
        witnesses=(), path="sextic", d=d)
