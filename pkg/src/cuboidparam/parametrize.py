"""The two parametrization pipelines over a rational parameter point.

For the first pipeline the edge cubic is reduced to its resolvent sextic with
parameter D1(b, c); a witness w (rational, or a residue class when w is
algebraic) lifts to the edge triple, and the face-diagonal triple follows
from a 3x3 linear completion system.  The second pipeline mirrors this,
starting from the face-diagonal cubic with parameter D2(b, c).

D1 and D2 also come in closed form.  The printed closed forms carry two
transcription defects, resolved empirically against the unambiguous pipeline
route (see TRANSCRIPTION.md): the exponent token "c^-3" inside the last
squared factor reads c^3 (making that factor the polynomial R), and the large
cube factors sit in the denominators, not the numerators.
"""

import enum
from dataclasses import dataclass
from fractions import Fraction

from .coeffs import (E21_CORRECTED, ParamPoint, cubic_d, cubic_x, eval_coeffs,
                     singular_factors)
from .cubics import analyze_cubic, d_param, lift_roots, sextic_poly
from .errors import (DegenerateDepression, NotAWitness, SingularCompletion,
                     SingularPoint, SingularSystem)
from .polynomials import Poly, square_free_part
from .quotient import RingElem, SplitEvent, linsolve3, ring_generator


class Instance(enum.Enum):
    FIRST = "first"
    SECOND = "second"


@dataclass(frozen=True)
class SexticInstance:
    which: Instance
    point: ParamPoint
    d: Fraction
    sextic: Poly


@dataclass(frozen=True)
class Solution:
    """Candidate sextuple; entries all rational or all in one quotient ring."""
    x: tuple
    d: tuple


@dataclass(frozen=True)
class VerificationReport:
    residuals: dict     # name -> residual (Fraction or RingElem)
    all_pass: bool
    positivity: bool    # None outside the rational domain


# -- explicit closed forms for D1 and D2 -------------------------------------

def _d1_square_factor(b, c):
    return (7812*b**4*c**4 - 216*b**2*c**4 - 52*b**2*c**3 + 1764*b**3*c**4
            - 1200*b**4*c**3 - 1848*b**4*c**2 + 720*b**4*c - 36*c**4*b
            - 1512*b**3*c**3 - 36*c**8*b**3 + 288*b**3*c**2 - 108*c**6*b**2
            + 380*c**5*b**2 + 378*c**7*b**3 - 231*c**8*b**4 - 300*c**7*b**4
            + 3906*c**6*b**4 - 13*c**7*b**2 - 8904*c**5*b**4 - 882*c**6*b**3
            + 18*c**6*b - 1319*b**6*c**8 + 20952*b**5*c**3 - 11952*b**5*c**2
            + 2592*b**5*c - 48372*b**6*c**4 + 31620*b**6*c**3
            - 10552*b**6*c**2 + 816*b**6*c + 1494*b**5*c**8 - 5238*b**5*c**7
            - 4*c**5 + 7905*b**6*c**7 - 24186*b**6*c**6 + 288*b**6
            + 43740*b**6*c**5 + 7686*b**5*c**6 + 576*b**7 + 128*b**8
            - 15372*b**5*c**4 - 1080*b**7*c**8 - 3546*b**7*c**6
            + 51*c**9*b**6 + 400*b**8*c**8 - 162*c**9*b**5 + 8640*b**7*c**2
            - 3456*b**7*c + 2808*b**7*c**7 - 1560*b**8*c**7 + 3940*b**8*c**6
            + 216*c**9*b**7 - 960*b**8*c - 6240*b**8*c**3 + 9*c**10*b**6
            + 7880*b**8*c**4 + 4*c**10*b**8 - 6732*b**8*c**5 + 45*c**9*b**4
            + 3200*b**8*c**2 - 11232*b**7*c**3 + 7092*b**7*c**4
            - 18*c**10*b**7 - 60*c**9*b**8)


def _d1_cube_factor(b, c):
    return (2*c**2 + 2*b**4*c**4 - 12*b**4*c**3 + 26*b**4*c**2 - 24*b**4*c
            + 8*b**4 - 6*b**3*c**4 + 18*b**3*c**3 - 36*b**3*c + 24*b**3
            + 3*b**2*c**4 + 8*b**2*c**3 - 36*b**2*c**2 + 16*b**2*c + 12*b**2
            - 6*b*c**3 + 12*b*c)


def _d2_square_factor(b, c):
    return (832*b**2*c**2 - 1440*b**2*c**4 - 840*b**2*c**3 + 4788*b**3*c**4
            + 396*b*c**3 + 720*b**3*c + 808*b**4*c**4 + 3032*b**4*c**3
            - 2576*b**4*c**2 - 96*b**4*c + 448*b**4 - 504*c**4*b
            - 4176*b**3*c**3 - 9*c**8*b**3 + 72*b**3*c**2 - 720*c**6*b**2
            + 2288*c**5*b**2 + 1044*c**7*b**3 - 322*c**8*b**4 + 758*c**7*b**4
            + 404*c**6*b**4 - 210*c**7*b**2 - 2464*c**5*b**4 - 2394*c**6*b**3
            + 72*c**4 + 252*c**6*b + 3168*b**6*c**8 + 441*c**9*b**5
            - 7056*b**5*c + 57960*b**6*c**4 - 47232*b**6*c**3
            + 25344*b**6*c**2 - 8064*b**6*c - 1809*b**5*c**8
            + 14472*b**5*c**2 + 3951*b**5*c**7 - 72*c**5 + 36*c**6
            - 11808*b**6*c**7 + 1440*b**5 + 28980*b**6*c**6 - 49032*b**6*c**5
            - 4410*b**5*c**6 + 8820*b**5*c**4 - 15804*b**5*c**3 + 1152*b**6
            - 504*c**9*b**6 - 45*c**9*b**3 - 6*c**9*b**4 + 104*c**8*b**2
            + 36*c**10*b**6 + 14*c**10*b**4 - 45*c**10*b**5 - 99*c**7*b)


def _d2_cube_factor(b, c):
    return (6*b**4*c**4 - 36*b**4*c**3 + 78*b**4*c**2 - 72*b**4*c + 24*b**4
            - 12*b**3*c**4 + 36*b**3*c**3 - 72*b**3*c + 48*b**3 + 5*b**2*c**4
            + 16*b**2*c**3 - 68*b**2*c**2 + 32*b**2*c + 20*b**2 - 12*b*c**3
            + 24*b*c + 6*c**2)


def _r_factor(b, c):
    return (b**2*c**4 - 6*b**2*c**3 + 13*b**2*c**2 - 12*b**2*c + 4*b**2
            + c**2)


def _require_nonsingular(point):
    report = singular_factors(point)
    if report.is_singular:
        raise SingularPoint(report.vanishing)


def d1_explicit(point):
    """Closed-form D1(b, c)."""
    _require_nonsingular(point)
    b, c = point.b, point.c
    cube = _d1_cube_factor(b, c)
    if cube == 0:
        raise SingularPoint({"D1-cube-factor"})
    s = _d1_square_factor(b, c)
    return -Fraction(2, 27) * s * s / (cube**3 * _r_factor(b, c)**2)


def d2_explicit(point):
    """Closed-form D2(b, c)."""
    _require_nonsingular(point)
    b, c = point.b, point.c
    cube = _d2_cube_factor(b, c)
    if cube == 0:
        raise SingularPoint({"D2-cube-factor"})
    s = _d2_square_factor(b, c)
    return -Fraction(2, 27) * b * b * s * s / (cube**3 * _r_factor(b, c)**2)


def _cubic_for(point, which, e21_variant=E21_CORRECTED):
    coeffs = eval_coeffs(point, e21_variant)
    cub = cubic_x(coeffs) if which is Instance.FIRST else cubic_d(coeffs)
    return coeffs, cub


def d_pipeline(which, point):
    """D through the resolvent-parameter formula applied to the chosen cubic."""
    _, cub = _cubic_for(point, which)
    return d_param(cub)


def build_instance(which, point):
    d = d_pipeline(which, point)
    return SexticInstance(which=which, point=point, d=d, sextic=sextic_poly(d))


def _lift_triple(point, which, w, e21_variant):
    _, cub = _cubic_for(point, which, e21_variant)
    try:
        d = d_param(cub)
    except DegenerateDepression:
        # B0 = 0 or B1 = 0: no resolvent sextic exists, so w carries no
        # information; factor the cubic directly instead
        verdict = analyze_cubic(cub)
        if verdict.has_three_rational_roots:
            return verdict.roots
        raise
    if isinstance(w, (int, Fraction)):
        if sextic_poly(d)(Fraction(w)) != 0:
            raise NotAWitness(f"{w} does not annihilate the sextic")
    return lift_roots(cub, w)


def param_first(point, w, e21_variant=E21_CORRECTED):
    """Edge triple (x1, x2, x3) from a witness of the first sextic."""
    return _lift_triple(point, Instance.FIRST, w, e21_variant)


def param_second(point, w, e21_variant=E21_CORRECTED):
    """Face-diagonal triple (d1, d2, d3) from a witness of the second sextic."""
    return _lift_triple(point, Instance.SECOND, w, e21_variant)


def complete_first(point, x, e21_variant=E21_CORRECTED):
    """Face diagonals from the edges via the first linear completion system."""
    e = eval_coeffs(point, e21_variant)
    x1, x2, x3 = x
    matrix = [[x2 * x3, x3 * x1, x1 * x2],
              [x2 + x3, x1 + x3, x1 + x2],
              [_one_like(x1), _one_like(x1), _one_like(x1)]]
    try:
        return linsolve3(matrix, [_lift_const(e.e21, x1),
                                  _lift_const(e.e11, x1),
                                  _lift_const(e.e01, x1)])
    except SingularSystem as exc:
        raise SingularCompletion(str(exc)) from exc


def complete_second(point, d, e21_variant=E21_CORRECTED):
    """Edges from the face diagonals via the second linear completion system."""
    e = eval_coeffs(point, e21_variant)
    d1, d2, d3 = d
    matrix = [[_one_like(d1), _one_like(d1), _one_like(d1)],
              [d2 + d3, d1 + d3, d1 + d2],
              [d2 * d3, d3 * d1, d1 * d2]]
    try:
        return linsolve3(matrix, [_lift_const(e.e10, d1),
                                  _lift_const(e.e11, d1),
                                  _lift_const(e.e12, d1)])
    except SingularSystem as exc:
        raise SingularCompletion(str(exc)) from exc


def _one_like(v):
    if isinstance(v, RingElem):
        return RingElem(Poly([1]), v.modulus, _checked=True)
    return Fraction(1)


def _lift_const(c, template):
    if isinstance(template, RingElem):
        return RingElem(Poly([c]), template.modulus, _checked=True)
    return c


def verify_solution(point, solution, e21_variant=E21_CORRECTED):
    """Exact residuals of every defining equation for a candidate sextuple.

    Residual names: x-cubic-i / d-cubic-i for the two cubics at each entry,
    eq-21 / eq-11 / eq-12 for the three auxiliary equations, and the two
    sum-of-squares identities sum-x2 (= 1) and sum-d2 (= 2).
    """
    _require_nonsingular(point)
    e = eval_coeffs(point, e21_variant)
    cx, cd = cubic_x(e), cubic_d(e)
    x1, x2, x3 = solution.x
    d1, d2, d3 = solution.d
    residuals = {}
    for i, xi in enumerate((x1, x2, x3), start=1):
        residuals[f"x-cubic-{i}"] = cx(xi)
    for i, di in enumerate((d1, d2, d3), start=1):
        residuals[f"d-cubic-{i}"] = cd(di)
    residuals["eq-21"] = x1*x2*d3 + x2*x3*d1 + x3*x1*d2 - e.e21
    residuals["eq-11"] = (x1*d2 + d1*x2 + x2*d3 + d2*x3 + x3*d1 + d3*x1
                          - e.e11)
    residuals["eq-12"] = x1*d2*d3 + x2*d3*d1 + x3*d1*d2 - e.e12
    residuals["sum-x2"] = x1*x1 + x2*x2 + x3*x3 - 1
    residuals["sum-d2"] = d1*d1 + d2*d2 + d3*d3 - 2
    all_pass = all(_is_zero_value(v) for v in residuals.values())
    rational = all(isinstance(v, Fraction)
                   for v in (*solution.x, *solution.d))
    positivity = (all(v > 0 for v in (*solution.x, *solution.d))
                  if rational else None)
    return VerificationReport(residuals=residuals, all_pass=all_pass,
                              positivity=positivity)


def _is_zero_value(v):
    if isinstance(v, RingElem):
        return v.is_zero
    return v == 0


def ring_verify_identities(point, which, e21_variant=E21_CORRECTED):
    """Exact identity check with w as a residue class mod the sextic.

    Builds w over the square-free part of the instance's sextic, lifts the
    triple, completes the other one, and checks the sum-of-squares identity,
    the completed triple's cubic residuals, and the held-out auxiliary
    equation (eq (1.3) third for the first instance, first for the second) in
    every factor ring reached by dynamic splitting.
    """
    e = eval_coeffs(point, e21_variant)
    if which is Instance.FIRST:
        own_cubic, other_cubic = cubic_x(e), cubic_d(e)
    else:
        own_cubic, other_cubic = cubic_d(e), cubic_x(e)
    d = d_param(own_cubic)
    modulus = square_free_part(sextic_poly(d))

    def run(mod):
        try:
            w = ring_generator(mod)
            triple = lift_roots(own_cubic, w)
            if which is Instance.FIRST:
                x1, x2, x3 = triple
                checks = [x1*x1 + x2*x2 + x3*x3 - 1]
                ds = complete_first(point, triple, e21_variant)
                checks.extend(other_cubic(di) for di in ds)
                checks.append(ds[0]*ds[0] + ds[1]*ds[1] + ds[2]*ds[2] - 2)
                d1, d2, d3 = ds
                checks.append(x1*d2*d3 + x2*d3*d1 + x3*d1*d2 - e.e12)
            else:
                d1, d2, d3 = triple
                checks = [d1*d1 + d2*d2 + d3*d3 - 2]
                xs = complete_second(point, triple, e21_variant)
                checks.extend(other_cubic(xi) for xi in xs)
                checks.append(xs[0]*xs[0] + xs[1]*xs[1] + xs[2]*xs[2] - 1)
                x1, x2, x3 = xs
                checks.append(x1*x2*d3 + x2*x3*d1 + x3*x1*d2 - e.e21)
            return all(_is_zero_value(chk) for chk in checks)
        except SplitEvent as ev:
            return all(run(f) for f in ev.factors)

    return run(modulus)
