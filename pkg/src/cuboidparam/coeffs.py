"""The nine coefficient functions E_ij(b, c) and the two cubics they define.

Every formula is evaluated exactly at a rational parameter point.  The
denominators factor through five named polynomials (Q, L1, L2, R, R21); a
point where any of them vanishes is singular and evaluation refuses it.

The one known transcription defect in the source formulas concerns E21: as
printed, the "-4c^3" term sits in its denominator (R21 = R - 4c^3) and is
missing from its numerator.  The corrected variant, which is the only one
passing the cross-equation consistency suite, carries "-4c^3" in the
numerator over the plain denominator R.  See TRANSCRIPTION.md at the
repository root.  The variant is selectable; the corrected one is default.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import SingularPoint

E21_CORRECTED = "corrected"       # -4c^3 in the numerator, denominator R
E21_PRINTED = "printed"           # as printed: denominator R21 = R - 4c^3
E21_PRINTED_R = "printed-r"       # printed numerator over denominator R
E21_VARIANTS = (E21_CORRECTED, E21_PRINTED, E21_PRINTED_R)

DENOMINATOR_FACTORS = ("Q", "L1", "L2", "R", "R21")


@dataclass(frozen=True)
class ParamPoint:
    b: Fraction
    c: Fraction

    def __iter__(self):
        return iter((self.b, self.c))


@dataclass(frozen=True)
class SingularityReport:
    vanishing: frozenset

    @property
    def is_singular(self):
        return bool(self.vanishing)


@dataclass(frozen=True)
class CoeffSet:
    e10: Fraction
    e20: Fraction
    e30: Fraction
    e01: Fraction
    e02: Fraction
    e03: Fraction
    e21: Fraction
    e11: Fraction
    e12: Fraction

    def as_dict(self):
        return {"E10": self.e10, "E20": self.e20, "E30": self.e30,
                "E01": self.e01, "E02": self.e02, "E03": self.e03,
                "E21": self.e21, "E11": self.e11, "E12": self.e12}


@dataclass(frozen=True)
class Cubic:
    """a3*x^3 + a2*x^2 + a1*x + a0."""
    a3: Fraction
    a2: Fraction
    a1: Fraction
    a0: Fraction

    def __call__(self, x):
        return ((self.a3 * x + self.a2) * x + self.a1) * x + self.a0


def _named_denominators(b, c):
    q = b*b*c*c + 2*b*b - 3*b*b*c + c - b*c*c + 2*b
    l1 = b*c - 1 - b
    l2 = b*c - c - 2*b
    r = b**2*c**4 - 6*b**2*c**3 + 13*b**2*c**2 - 12*b**2*c + 4*b**2 + c**2
    return {"Q": q, "L1": l1, "L2": l2, "R": r, "R21": r - 4*c**3}


def singular_factors(point):
    """Exactly which named denominator factors vanish at the point."""
    vals = _named_denominators(point.b, point.c)
    return SingularityReport(frozenset(k for k, v in vals.items() if v == 0))


def _e21_numerator_printed(b, c):
    return (5*c**6*b - 2*c**6*b**2 + 52*c**5*b**2 - 16*c**5*b - 2*c**7*b**2
            + 2*b**4*c**8 - 26*b**4*c**7 - 426*b**4*c**5 - 61*b**3*c**6
            + 100*b**3*c**5 + 14*c**7*b**3 - c**8*b**3 - 20*b*c**2
            - 8*b**2*c**2 - 16*b**2*c - 128*b**2*c**4 - 200*b**3*c**3
            + 244*b**3*c**2 + 32*b*c**3 + 768*b**4*c**4 - 852*b**4*c**3
            + 568*b**4*c**2 + 104*b**2*c**3 - 208*b**4*c + 8*c**4 + 16*b**3
            - 112*b**3*c + 142*b**4*c**6 + 32*b**4 - 2*c**5)


def eval_coeffs(point, e21_variant=E21_CORRECTED):
    """Exact values of the nine coefficient functions at a nonsingular point.

    Raises SingularPoint (carrying the vanishing factor names) when any
    printed denominator factor is zero.
    """
    if e21_variant not in E21_VARIANTS:
        raise ValueError(f"unknown E21 variant {e21_variant!r}")
    report = singular_factors(point)
    if report.is_singular:
        raise SingularPoint(report.vanishing)
    b, c = point.b, point.c
    dens = _named_denominators(b, c)
    q, l1, l2, r, r21 = (dens[k] for k in ("Q", "L1", "L2", "R", "R21"))
    l12 = l1 * l1 * l2 * l2

    e11 = -b * (c*c + 2 - 4*c) / q
    e10 = -(b*b*c*c + 2*b*b - 3*b*b*c - c) / q
    e01 = -b * (c*c + 2 - 2*c) / q

    e20 = (Fraction(b, 2) * (b*c*c - 2*c - 2*b)
           * (2*b*c*c - c*c - 6*b*c + 2 + 4*b) / l12)
    e02 = Fraction(1, 2) * (
        28*b**2*c**2 - 16*b**2*c - 2*c**2 - 4*b**2 - b**2*c**4 + 4*b**3*c**4
        - 12*b**3*c**3 + 4*b*c**3 + 24*b**3*c - 8*b*c - 2*b**4*c**4
        + 12*b**4*c**3 - 26*b**4*c**2 - 8*b**2*c**3 + 24*b**4*c
        - 16*b**3 - 8*b**4) / l12
    e30 = (c * b*b * (1 - c) * (c - 2) * (b*c*c - 4*b*c + 2 + 4*b)
           * (2*b*c*c - c*c - 4*b*c + 2*b) / (r * l12))
    e03 = Fraction(b, 2) * (
        b**2*c**4 - 5*b**2*c**3 + 10*b**2*c**2 - 10*b**2*c + 4*b**2
        + 2*b*c + 2*c**2 - b*c**3) * (
        2*b**2*c**4 - 12*b**2*c**3 + 26*b**2*c**2 - 24*b**2*c + 8*b**2
        - c**4*b + 3*b*c**3 - 6*b*c + 4*b + c**3 - 2*c**2 + 2*c) / (r * l12)

    n21 = _e21_numerator_printed(b, c)
    if e21_variant == E21_CORRECTED:
        e21 = Fraction(b, 2) * (n21 - 4*c**3) / (r * l12)
    elif e21_variant == E21_PRINTED:
        e21 = Fraction(b, 2) * n21 / (r21 * l12)
    else:
        e21 = Fraction(b, 2) * n21 / (r * l12)

    e12 = (16*b**6 + 32*b**5 - 6*c**5*b**2 + 2*c**5*b - 62*b**5*c**6
           + 62*b**6*c**6 + 16*b**4 - 180*b**6*c**5 - c**7*b**3 + 18*b**5*c**7
           - 12*b**6*c**7 - 2*b**5*c**8 + b**6*c**8 + 248*b**5*c**2
           + 248*b**6*c**2 - 96*b**6*c + 321*b**6*c**4 - 180*b**5*c**3
           - 144*b**5*c - 360*b**6*c**3 + b**4*c**8 + 8*b**4*c**6
           - 6*b**4*c**7 + 18*b**4*c**5 + 7*b**3*c**6 + 90*b**5*c**5
           - 14*b**3*c**5 + 17*b**2*c**4 + 32*b**4*c**2 + 28*b**3*c**3
           - 28*b**3*c**2 - 4*b*c**3 + 8*b**3*c - 57*b**4*c**4 + 36*b**4*c**3
           - 12*b**2*c**3 - 48*b**4*c - c**4) / (r * l12)

    return CoeffSet(e10=e10, e20=e20, e30=e30, e01=e01, e02=e02, e03=e03,
                    e21=e21, e11=e11, e12=e12)


def cubic_x(coeffs):
    """x^3 - E10 x^2 + E20 x - E30, whose roots are the edges."""
    return Cubic(Fraction(1), -coeffs.e10, coeffs.e20, -coeffs.e30)


def cubic_d(coeffs):
    """d^3 - E01 d^2 + E02 d - E03, whose roots are the face diagonals."""
    return Cubic(Fraction(1), -coeffs.e01, coeffs.e02, -coeffs.e03)
