"""Residue-class arithmetic in Q[w]/(m(w)) with dynamic evaluation.

The modulus is monic and square-free but not necessarily irreducible.  When
an inversion hits a zero divisor the discovered factorization is raised as a
:class:`SplitEvent`; the caller reruns its computation in each factor ring.
This sidesteps full factorization over Q: the modulus splits exactly when a
computation forces it to.
"""

from fractions import Fraction

from .errors import (BadModulus, ModulusMismatch, SingularSystem, ZeroElement)
from .polynomials import Poly, poly_gcd


class SplitEvent(Exception):
    """A zero divisor revealed a nontrivial factor pair of the modulus."""

    def __init__(self, factors):
        self.factors = tuple(factors)
        super().__init__(f"modulus splits as {self.factors!r}")


class RingElem:
    """A residue class in Q[w]/(modulus)."""

    __slots__ = ("residue", "modulus")

    def __init__(self, residue, modulus, _checked=False):
        if not _checked:
            _check_modulus(modulus)
        if isinstance(residue, (int, Fraction)):
            residue = Poly([residue])
        self.residue = residue % modulus
        self.modulus = modulus

    # -- helpers -------------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, RingElem):
            if other.modulus != self.modulus:
                raise ModulusMismatch("operands live in different rings")
            return other
        if isinstance(other, (int, Fraction)):
            return RingElem(Poly([other]), self.modulus, _checked=True)
        if isinstance(other, Poly):
            return RingElem(other, self.modulus, _checked=True)
        return None

    @property
    def is_zero(self):
        return self.residue.is_zero

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.residue == o.residue

    def __hash__(self):
        return hash((self.residue, self.modulus))

    def __bool__(self):
        return not self.is_zero

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RingElem(self.residue + o.residue, self.modulus, _checked=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RingElem(self.residue - o.residue, self.modulus, _checked=True)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RingElem(o.residue - self.residue, self.modulus, _checked=True)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RingElem(self.residue * o.residue, self.modulus, _checked=True)

    def __neg__(self):
        return RingElem(-self.residue, self.modulus, _checked=True)

    __radd__ = __add__
    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = RingElem(Poly([1]), self.modulus, _checked=True)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def inverse(self):
        """Extended-Euclid inverse.

        Raises ZeroElement on zero and SplitEvent when the residue is a zero
        divisor; the event carries a monic factor pair of the modulus.
        """
        if self.is_zero:
            raise ZeroElement("inverting zero")
        g, _, t = _ext_gcd(self.modulus, self.residue)
        if g.degree == 0:
            inv = Poly([c / g.coeffs[0] for c in t.coeffs])
            return RingElem(inv, self.modulus, _checked=True)
        g = g.monic()
        raise SplitEvent((g, (self.modulus // g).monic()))

    def __repr__(self):
        from .polynomials import format_poly
        return (f"RingElem({format_poly(self.residue)} "
                f"mod {format_poly(self.modulus)})")


def _check_modulus(modulus):
    if not isinstance(modulus, Poly) or modulus.degree < 1:
        raise BadModulus("modulus must be a polynomial of degree >= 1")
    if modulus.leading != 1:
        raise BadModulus("modulus must be monic")
    d = modulus.derivative()
    if poly_gcd(modulus, d).degree != 0:
        raise BadModulus("modulus must be square-free")


def ring_make(residue, modulus):
    """Public constructor with full modulus validation."""
    return RingElem(residue, modulus)


def ring_generator(modulus):
    """The residue class of w itself."""
    return RingElem(Poly([0, 1]), modulus)


def _ext_gcd(a, b):
    """(g, s, t) with s*a + t*b = g, over Q[w]."""
    r0, r1 = a, b
    s0, s1 = Poly([1]), Poly()
    t0, t1 = Poly(), Poly([1])
    while not r1.is_zero:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    return r0, s0, t0


def _is_zero(v):
    if isinstance(v, RingElem):
        return v.is_zero
    return v == 0


def _det3(m):
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))


def linsolve3(matrix, rhs):
    """Exact 3x3 solve by Cramer's rule.

    Entries may be Fractions or RingElems over one common modulus (mixing
    scalars in is fine; they coerce).  Raises SingularSystem on a zero
    determinant; over a ring, inverting the determinant may raise SplitEvent,
    which propagates to the caller.
    """
    det = _det3(matrix)
    if _is_zero(det):
        raise SingularSystem("coefficient matrix has zero determinant")
    out = []
    for col in range(3):
        mk = [[rhs[i] if j == col else matrix[i][j] for j in range(3)]
              for i in range(3)]
        num = _det3(mk)
        if isinstance(det, RingElem) or isinstance(num, RingElem):
            out.append(num / det)
        else:
            out.append(Fraction(num) / Fraction(det))
    return tuple(out)
