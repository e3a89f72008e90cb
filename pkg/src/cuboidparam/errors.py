"""Exception hierarchy shared by all modules."""


class CuboidError(Exception):
    """Base class for all library errors."""


# -- rational arithmetic ----------------------------------------------------

class ZeroDenominator(CuboidError):
    pass


class NegativeInput(CuboidError):
    pass


class EmptyInterval(CuboidError):
    pass


# -- polynomial algebra -----------------------------------------------------

class BothZero(CuboidError):
    pass


class ZeroPolynomial(CuboidError):
    pass


class BadModulus(CuboidError):
    pass


class ModulusMismatch(CuboidError):
    pass


class ZeroElement(CuboidError):
    pass


class SingularSystem(CuboidError):
    pass


# -- coefficient evaluation and cubic reduction -----------------------------

class SingularPoint(CuboidError):
    """Some printed denominator factor vanishes at the parameter point."""

    def __init__(self, vanishing):
        self.vanishing = frozenset(vanishing)
        super().__init__("singular point, vanishing factors: "
                         + ", ".join(sorted(self.vanishing)))


class LeadingZero(CuboidError):
    pass


class DegenerateDepression(CuboidError):
    """The depressed cubic has B0 = 0 or B1 = 0; the resolvent-sextic
    criterion does not apply."""


class WDegenerate(CuboidError):
    """w = 1 or w = -1: a printed lifting denominator vanishes."""


class NotReducedTriple(CuboidError):
    pass


class NoRationalWitness(CuboidError):
    pass


class NotAWitness(CuboidError):
    pass


class SingularCompletion(CuboidError):
    pass


# -- search harness ---------------------------------------------------------

class ConfigInvalid(CuboidError):
    pass


class CheckpointMismatch(CuboidError):
    pass


class CheckpointCorrupt(CuboidError):
    pass
