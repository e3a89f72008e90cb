import random
from fractions import Fraction

from cuboidparam import ParamPoint, singular_factors


def random_nonsingular_points(n, seed=0, height=50, nonzero_b=False):
    """Deterministic stream of nonsingular parameter points."""
    rng = random.Random(seed)
    out = []
    while len(out) < n:
        b = Fraction(rng.randint(-height, height), rng.randint(1, height))
        c = Fraction(rng.randint(-height, height), rng.randint(1, height))
        if nonzero_b and b == 0:
            continue
        point = ParamPoint(b, c)
        if singular_factors(point).is_singular:
            continue
        out.append(point)
    return out
