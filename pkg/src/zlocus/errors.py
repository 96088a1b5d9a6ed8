"""Exception types shared across the library.

Every error raised on purpose derives from ZlocusError so callers (and the
CLI exit-code mapping) can distinguish precondition failures from bugs.
"""


class ZlocusError(Exception):
    """Base class for all library-specific errors."""


class DegenerateQuadratic(ZlocusError):
    """The leading coefficient a is zero, so there is no two-root mode."""


class ZeroConstantTerm(ZlocusError):
    """c = 0: the expansion divides by the constant term."""


class RepeatedRoot(ZlocusError):
    """The closed form requires two distinct denominator roots."""


class ZeroRoot(ZlocusError):
    pass


class ZeroScale(ZlocusError):
    pass


class ZeroProduct(ZlocusError):
    """Normalization needs a*c != 0."""


class ConstantPolynomial(ZlocusError):
    pass


class AllZeroPolynomial(ZlocusError):
    pass


class NonPositiveCoefficients(ZlocusError):
    """The annulus bound only applies to real, strictly positive coefficients."""


class MixedSignPattern(ZlocusError):
    """Neither negation nor the z -> -z substitution yields positive coefficients."""


class WrongCase(ZlocusError):
    """The quadratic does not satisfy the hypotheses of the requested check."""


class EqualModulusRoots(ZlocusError):
    """Both roots share a modulus, so the dominance classification degenerates."""


class EmptyRootSet(ZlocusError):
    pass


class InsufficientCoefficients(ZlocusError):
    pass


class OracleMismatch(ZlocusError):
    """Two independent constructions of the same object disagree."""


class SolverNonConvergence(ZlocusError):
    """The root solver failed to converge even after a restart."""


class ExclusionThresholdNotFound(ZlocusError):
    """No threshold below the ladder maximum stabilizes the exclusion ball."""
