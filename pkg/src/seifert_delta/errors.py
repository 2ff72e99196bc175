"""Exception hierarchy shared by all modules."""


class SeifertDeltaError(Exception):
    """Base class for all errors raised by this package."""


class NotCoprime(SeifertDeltaError):
    """Arguments that must be coprime are not."""


class ParseError(SeifertDeltaError):
    """Malformed textual or JSON input."""


class InconsistentClass(SeifertDeltaError):
    """Orbifold line bundle data violating the mod-1 degree constraint."""


class ConditionViolation(SeifertDeltaError):
    """Spin^c data that does not satisfy the defining conditions."""


class WrongHolonomy(SeifertDeltaError):
    """Operation restricted to one fibre-holonomy class got the other."""


class GeometricResidue(SeifertDeltaError):
    """Scale-dependent terms failed to cancel; indicates an internal bug."""


class NonRealResult(SeifertDeltaError):
    """A group sum that must be real came out complex; internal bug."""


class ZeroEuler(SeifertDeltaError):
    """Euler number zero where a nonzero one is required."""


class WrongForm(SeifertDeltaError):
    """Seifert data not of the special shape an operation requires."""


class InvalidFraction(SeifertDeltaError):
    """No negative continued fraction expansion with all entries >= 2."""


class UnknownSuite(SeifertDeltaError):
    """Verification suite name not recognised."""
