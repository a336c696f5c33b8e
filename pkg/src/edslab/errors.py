"""Exception hierarchy for the whole package.

Every failure mode that callers are expected to catch has its own class
here; modules never raise bare ValueError for a condition a user can
trigger through the public API.
"""


class EdslabError(Exception):
    """Base class for all package errors."""


# --- algebra ---------------------------------------------------------------

class DescriptorMismatch(EdslabError):
    """Operands belong to different coefficient fields."""


class DivisionByZero(EdslabError):
    pass


class BothZero(EdslabError):
    """gcd(0, 0) requested."""


class ZeroModulus(EdslabError):
    pass


class NotASquare(EdslabError):
    """Polynomial (or integer) square root does not exist."""


class ZeroInput(EdslabError):
    pass


class NotSquarefreeDecidable(EdslabError):
    """Derivative vanished in characteristic p; the gcd test is inconclusive."""


class RangeTooLarge(EdslabError):
    """Enumeration request exceeds the configured desk-scale guard."""


class ParseError(EdslabError):
    """Malformed polynomial expression; carries the offending position."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class CoefficientNotInField(EdslabError):
    """A fractional literal has no meaning in the target field."""


class ZeroDenominator(EdslabError):
    pass


# --- curve -----------------------------------------------------------------

class SingularCurve(EdslabError):
    """Discriminant vanished."""


class NonIntegralModel(EdslabError):
    """Curve coefficients over k(T) must be polynomials."""


class PointNotOnCurve(EdslabError):
    pass


class ForbiddenJInvariant(EdslabError):
    """a = 0 or b = 0 would put j in {0, 1728}, which is out of scope."""


class SingularConstants(EdslabError):
    """4a^3 + 27b^2 = 0."""


class BadDelta(EdslabError):
    """Twisting polynomial must be monic, squarefree and nonconstant."""


class BadReduction(EdslabError):
    """The chosen prime divides the discriminant numerator."""


class NotIrreducible(EdslabError):
    pass


# --- eds -------------------------------------------------------------------

class PointAtInfinity(EdslabError):
    pass


class NonSquareDenominator(EdslabError):
    """x-coordinate denominator is not a perfect square; the model is not integral."""


class TorsionEncountered(EdslabError):
    """Some multiple of the point hit the identity."""

    def __init__(self, order):
        super().__init__(f"point has finite order {order}")
        self.order = order


class NoNontrivialDenominator(EdslabError):
    """Search bound exhausted without finding a multiple with D != 1."""


class PositiveCharacteristic(EdslabError):
    """Check is only meaningful in characteristic zero."""


class ShortFormRequired(EdslabError):
    """Operation needs a curve in the shape y^2 = x^3 + ax + b."""


class ConstantInput(EdslabError):
    pass


class SharedFactorGuard(EdslabError):
    """Hypothesis gcd(A - B, B) = 1 fails for the supplied unit."""


# --- ffexp -----------------------------------------------------------------

class PTooSmall(EdslabError):
    """Characteristic must be at least 5."""


class HasseViolation(EdslabError):
    """|a_N| exceeded 2 q^{N/2}; indicates an upstream bug."""


class NotCoprime(EdslabError):
    pass


class DeltaNotIrreducible(EdslabError):
    pass


class NoAdmissibleN(EdslabError):
    """Both group-order candidates were divisible by p (should be impossible)."""


class DegreeGuard(EdslabError):
    """Projected polynomial degree exceeds the configured ceiling."""


# --- cli -------------------------------------------------------------------

class ValidationError(EdslabError):
    """Configuration value rejected; names the offending field when known."""

    def __init__(self, field, reason=None):
        if reason is None:
            super().__init__(str(field))
            self.field = None
            self.reason = str(field)
        else:
            super().__init__(f"config field '{field}': {reason}")
            self.field = field
            self.reason = reason


class UnknownCommand(EdslabError):
    pass
