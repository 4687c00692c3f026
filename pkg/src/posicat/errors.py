"""Exception hierarchy for posicat.

Every error raised by this package derives from PosicatError, so callers can
catch one base class at API boundaries (the CLI maps them to exit code 2).
"""


class PosicatError(Exception):
    """Base class for all posicat errors."""


# --- window / cycle construction ---

class NotBounded(PosicatError):
    """Some i has f(i) < i or f(i) > i + n."""


class NotBijective(PosicatError):
    """Window residues modulo n collide."""


class NonIntegralK(PosicatError):
    """Displacement sum is not divisible by the period n."""


class NotNCycle(PosicatError):
    """Input does not describe a single n-cycle."""


class DegeneratePeriod(PosicatError):
    """Period n = 1 admits no n-cycle lift with strict bounds."""


class NotTheta(PosicatError):
    """Operation requires a single-cycle permutation with strict bounds."""


class NotAnInversion(PosicatError):
    """The given pair (i, j) is not an inversion of the permutation."""


class LimitExceeded(PosicatError):
    """A bounded search (conjugation-class BFS) exceeded its node limit."""


# --- polynomials ---

class InexactDivision(PosicatError):
    """Polynomial division left a remainder; signals a recurrence bug."""


# --- engine ---

class IrreducibleElement(PosicatError):
    """No reduction step applies anywhere in the conjugation class.

    The constructive reduction is guaranteed to make progress, so this
    exception always indicates an implementation bug.
    """


# --- inversion sets / paths ---

class AlphaOnDeltaLine(PosicatError):
    """Shift vector is an integer multiple of (k, n)."""


class NonIntegralNu(PosicatError):
    """The rotation statistic came out non-integral; signals a bug."""


class NotRepetitionFree(PosicatError):
    """Operation requires all inversion-multiset multiplicities to be 1."""


class PreconditionViolated(PosicatError):
    """A stated precondition (e.g. double crossing at i) does not hold."""


# --- profiles / synthesis ---

class InvalidProfile(PosicatError):
    """Height sequence fails the concave-profile conditions."""


class NotCentrallySymmetric(PosicatError):
    """Forbidden set is not invariant under the central reflection."""


class NotConvex(PosicatError):
    """Forbidden set does not contain all lattice points of its hull."""


class SynthesisFailed(PosicatError):
    """Profile perturbation schedule was exhausted; signals a bug."""


# --- enumeration ---

class TooManyPaths(PosicatError):
    """Path listing would exceed the configured cap."""
