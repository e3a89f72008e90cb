"""Dense univariate polynomials over exact rationals.

Provides evaluation, Euclidean gcd, Yun square-free decomposition, Sturm real
root isolation and height-bounded rational root finding.  Degrees stay tiny
(at most 6 on the main path), so a dense list of Fractions is plenty.
"""

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import BothZero, EmptyInterval, ZeroPolynomial
from .rationals import simplest_in_interval


class Poly:
    """Univariate polynomial; coeffs[i] is the coefficient of w**i.

    The coefficient tuple never ends in zero; the zero polynomial has an
    empty tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def leading(self):
        if self.is_zero:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return not self.is_zero

    def __add__(self, other):
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([_at(self, i) + _at(other, i) for i in range(n)])

    def __sub__(self, other):
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([_at(self, i) - _at(other, i) for i in range(n)])

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __mul__(self, other):
        other = _coerce(other)
        if self.is_zero or other.is_zero:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __radd__ = __add__
    __rmul__ = __mul__

    def __rsub__(self, other):
        return _coerce(other) - self

    def __divmod__(self, other):
        other = _coerce(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly(), self
        quo = [Fraction(0)] * (dq + 1)
        lead = other.leading
        while len(rem) >= len(other.coeffs) and rem:
            k = len(rem) - len(other.coeffs)
            c = rem[-1] / lead
            quo[k] = c
            for i, b in enumerate(other.coeffs):
                rem[k + i] -= c * b
            rem.pop()
            while rem and rem[-1] == 0:
                rem.pop()
        return Poly(quo), Poly(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x):
        """Horner evaluation; exact for Fraction x, generic otherwise."""
        if self.is_zero:
            return Fraction(0) if isinstance(x, (int, Fraction)) else 0 * x
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def derivative(self):
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def monic(self):
        if self.is_zero:
            raise ZeroPolynomial("cannot normalize the zero polynomial")
        lead = self.leading
        return Poly([c / lead for c in self.coeffs])

    def shift_scale_int(self):
        """Primitive integer version: clear denominators, divide by content."""
        if self.is_zero:
            return self
        lcm = 1
        for c in self.coeffs:
            lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
        ints = [int(c * lcm) for c in self.coeffs]
        g = 0
        for v in ints:
            g = math.gcd(g, v)
        return Poly([Fraction(v // g) for v in ints])

    def __repr__(self):
        return f"Poly({format_poly(self)})"


def _coerce(v):
    if isinstance(v, Poly):
        return v
    if isinstance(v, (int, Fraction)):
        return Poly([v])
    return NotImplemented


def _at(p, i):
    return p.coeffs[i] if i < len(p.coeffs) else Fraction(0)


def poly_from_roots(roots):
    p = Poly([1])
    for r in roots:
        p = p * Poly([-Fraction(r), Fraction(1)])
    return p


def format_poly(p, var="w"):
    if p.is_zero:
        return "0"
    parts = []
    for i in range(p.degree, -1, -1):
        c = p.coeffs[i]
        if c == 0:
            continue
        if i == 0:
            term = format(c)
        else:
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            pw = var if i == 1 else f"{var}^{i}"
            term = f"{mag}{pw}"
            if c < 0:
                term = "-" + term
        if parts and not term.startswith("-"):
            parts.append("+ " + term)
        elif parts:
            parts.append("- " + term[1:])
        else:
            parts.append(term)
    return " ".join(parts)


def poly_gcd(p, q):
    """Monic gcd by the Euclidean algorithm; BothZero if p = q = 0."""
    if p.is_zero and q.is_zero:
        raise BothZero("gcd(0, 0) is undefined")
    a, b = p, q
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def square_free_part(p):
    """Monic polynomial with the same distinct roots, each simple."""
    if p.is_zero:
        raise ZeroPolynomial("square-free part of zero")
    if p.degree == 0:
        return Poly([1])
    g = poly_gcd(p, p.derivative())
    return (p // g).monic()


def square_free_decomposition(p):
    """Yun's algorithm: list of (factor, multiplicity), factors monic,
    pairwise coprime, non-constant, with p ~ prod factor**multiplicity."""
    if p.is_zero:
        raise ZeroPolynomial("square-free decomposition of zero")
    p = p.monic()
    if p.degree == 0:
        return []
    out = []
    dp = p.derivative()
    a = poly_gcd(p, dp)
    b = p // a
    c = dp // a
    i = 1
    while True:
        d = c - b.derivative()
        f = poly_gcd(b, d) if not (b.is_zero and d.is_zero) else Poly([1])
        if f.degree > 0:
            out.append((f, i))
        b2 = b // f
        if b2.degree == 0:
            break
        c = d // f
        b = b2
        i += 1
    return out


# -- Sturm sequences and real root isolation ---------------------------------

def sturm_chain(p):
    chain = [p, p.derivative()]
    while not chain[-1].is_zero and chain[-1].degree > 0:
        chain.append(-(chain[-2] % chain[-1]))
    if chain[-1].is_zero:
        chain.pop()
    return chain


def _sign_variations(chain, x):
    signs = []
    for q in chain:
        v = q(x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def root_bound(p):
    """Cauchy bound: every real root lies strictly inside (-B, B)."""
    lead = abs(p.leading)
    m = max((abs(c) for c in p.coeffs[:-1]), default=Fraction(0))
    return 1 + m / lead


@dataclass(frozen=True)
class IsolatingInterval:
    """Open interval (lo, hi) holding exactly one distinct real root, or a
    point when lo == hi."""
    lo: Fraction
    hi: Fraction
    multiplicity: int = 1

    @property
    def is_point(self):
        return self.lo == self.hi


def isolate_real_roots(p):
    """Disjoint isolating intervals for the distinct real roots of p, with
    multiplicities taken from the square-free decomposition, sorted by
    position on the real line."""
    if p.is_zero:
        raise ZeroPolynomial("cannot isolate roots of zero")
    if p.degree == 0:
        return []
    f = square_free_part(p)
    chain = sturm_chain(f)
    bound = root_bound(f)
    lo, hi = -bound, bound

    intervals = []

    def recurse(a, b, count):
        # count = number of roots of f in the half-open interval (a, b]
        if count == 0:
            return
        if count == 1:
            if f(b) == 0:
                intervals.append((b, b))
            else:
                intervals.append((a, b))
            return
        mid = (a + b) / 2
        left = _sign_variations(chain, a) - _sign_variations(chain, mid)
        recurse(a, mid, left)
        recurse(mid, b, count - left)

    total = _sign_variations(chain, lo) - _sign_variations(chain, hi)
    recurse(lo, hi, total)
    intervals = [_clear_left_endpoint(f, chain, a, b) for a, b in intervals]
    intervals.sort()

    decomp = square_free_decomposition(p)
    out = []
    for a, b in intervals:
        mult = _multiplicity_at(decomp, f, a, b)
        out.append(IsolatingInterval(a, b, mult))
    return out


def _clear_left_endpoint(f, chain, a, b):
    """Shrink (a, b) until f is nonzero at both endpoints.

    Bisection can place the left endpoint of one interval exactly on the
    root isolated by its neighbour; sign tests downstream need clean
    endpoints.  The right endpoint is root-free by construction.
    """
    if a == b or f(a) != 0:
        return (a, b)
    while True:
        mid = (a + b) / 2
        if f(mid) == 0:
            return (mid, mid)
        if _sign_variations(chain, mid) - _sign_variations(chain, b) == 1:
            return (mid, b)
        b = mid


def _multiplicity_at(decomp, sqfree, a, b):
    for factor, mult in decomp:
        if a == b:
            if factor(a) == 0:
                return mult
        else:
            fa, fb = factor(a), factor(b)
            if fa == 0 or fb == 0:
                # endpoint of the isolating interval is never a root of the
                # square-free part, but can be a root of another factor? No:
                # factors divide the square-free part's root set.
                continue
            if (fa > 0) != (fb > 0):
                return mult
    raise AssertionError("isolating interval matches no square-free factor")


def refine_interval(p, interval, width):
    """Shrink an open isolating interval of (the square-free part of) p by
    sign bisection until hi - lo < width.  Point intervals pass through.
    Returns a new IsolatingInterval; may collapse to a point if bisection
    lands exactly on the root."""
    if interval.is_point:
        return interval
    f = square_free_part(p)
    lo, hi = interval.lo, interval.hi
    flo = f(lo)
    while hi - lo >= width:
        mid = (lo + hi) / 2
        fm = f(mid)
        if fm == 0:
            return IsolatingInterval(mid, mid, interval.multiplicity)
        if (flo > 0) != (fm > 0):
            hi = mid
        else:
            lo, flo = mid, fm
    return IsolatingInterval(lo, hi, interval.multiplicity)


@dataclass(frozen=True)
class RationalRootResult:
    """Rational roots with multiplicities, plus the isolating intervals whose
    rationality could not be decided at the height bound."""
    roots: tuple          # tuple of (Fraction, multiplicity)
    undecided: tuple      # tuple of IsolatingInterval

    @property
    def decided(self):
        return not self.undecided


DEFAULT_HEIGHT_BOUND = 10**6


def rational_roots(p, height_bound=DEFAULT_HEIGHT_BOUND):
    """All rational roots of p up to the reconstruction height bound.

    Each isolating interval is shrunk below 1/(2*H^2); the simplest rational
    in it is then the only candidate of height <= H, and it is accepted only
    on exact evaluation to zero.  Intervals whose candidate fails are
    reported as undecided: the root is either irrational or of height > H.
    """
    if p.is_zero:
        raise ZeroPolynomial("rational roots of zero")
    roots = []
    undecided = []
    width = Fraction(1, 2 * height_bound * height_bound)
    for iv in isolate_real_roots(p):
        iv = refine_interval(p, iv, width)
        if iv.is_point:
            roots.append((iv.lo, iv.multiplicity))
            continue
        try:
            cand = simplest_in_interval(iv.lo, iv.hi)
        except EmptyInterval:  # pragma: no cover - refine keeps lo < hi
            undecided.append(iv)
            continue
        if p(cand) == 0:
            roots.append((cand, iv.multiplicity))
        else:
            # any rational root of height <= bound inside an interval this
            # narrow would have to equal cand, so none exists; the root is
            # irrational or of larger height
            undecided.append(iv)
    return RationalRootResult(tuple(roots), tuple(undecided))


# -- divisor-enumeration cross-check ----------------------------------------

def _pollard_rho(n, rng, max_iter=200000):
    if n % 2 == 0:
        return 2
    while True:
        x = rng.randrange(2, n)
        y, c, d = x, rng.randrange(1, n), 1
        it = 0
        while d == 1:
            it += 1
            if it > max_iter:
                return None
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d


def _factorize(n, rng, trial_limit=10000):
    """Prime factorization dict, or None when Pollard rho gives up."""
    factors = {}
    for p in range(2, trial_limit):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
        if p * p > n:
            break
    if n > 1:
        stack = [n]
        while stack:
            m = stack.pop()
            if m == 1:
                continue
            if _is_probable_prime(m):
                factors[m] = factors.get(m, 0) + 1
                continue
            d = _pollard_rho(m, rng)
            if d is None:
                return None
            stack.extend([d, m // d])
    return factors


def _is_probable_prime(n):
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _divisors(factors):
    divs = [1]
    for p, e in factors.items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return divs

def rational_roots_by_divisors(p, seed=0):
    """Rational-root-theorem cross-check: enumerate p/q with p | a0, q | an
    of the primitive integer form.  Returns None when factoring gives up
    (inputs too large); meant for small inputs only."""
    if p.is_zero:
        raise ZeroPolynomial("rational roots of zero")
    rng = random.Random(seed)
    prim = p.shift_scale_int()
    # strip powers of w
    k = 0
    cs = list(prim.coeffs)
    while cs and cs[0] == 0:
        cs.pop(0)
        k += 1
    roots = {}
    if k:
        roots[Fraction(0)] = k
    body = Poly(cs)
    if body.degree >= 1:
        a0 = abs(int(body.coeffs[0]))
        an = abs(int(body.leading))
        f0 = _factorize(a0, rng)
        fn = _factorize(an, rng)
        if f0 is None or fn is None:
            return None
        for num in _divisors(f0):
            for den in _divisors(fn):
                for cand in (Fraction(num, den), Fraction(-num, den)):
                    if cand in roots or body(cand) != 0:
                        continue
                    mult = 0
                    q = body
                    lin = Poly([-cand, 1])
                    while True:
                        quo, rem = divmod(q, lin)
                        if not rem.is_zero:
                            break
                        q = quo
                        mult += 1
                    roots[cand] = mult
    return tuple(sorted(roots.items()))
