"""Exception types shared by the whole package."""


class NilCleanError(Exception):
    """Base class for every library-specific error."""


class ElementRingMismatch(NilCleanError):
    """An element was combined with a ring it does not belong to."""


class BadParameter(NilCleanError):
    """A constructor argument violates an arity or divisibility constraint."""


class OrderCapExceeded(NilCleanError):
    """Construction would produce a ring larger than the configured cap."""


class CapExceeded(NilCleanError):
    """An enumeration exceeded its configured cap."""


class ExhaustiveTooLarge(NilCleanError):
    """Exhaustive axiom verification was requested above the size limit."""


class NotAnIdeal(NilCleanError):
    """A member set is not closed under the two-sided ideal axioms."""


class NotCentralIdempotent(NilCleanError):
    """The designated element is not a central idempotent."""


class NotAlmostIdempotent(NilCleanError):
    """Idempotent lifting needs a - a^2 to be nilpotent, and it is not."""


class PreconditionViolated(NilCleanError):
    """A documented operation precondition does not hold."""


class UnknownCheck(NilCleanError):
    """No registered check carries the requested id."""


class InternalInvariantViolation(NilCleanError):
    """A computed object failed its own closure re-verification (a bug)."""


class ParseError(NilCleanError):
    """Ring-spec text could not be parsed; carries the failing position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class AxiomFailure(NilCleanError):
    """A ring failed axiom verification; carries the offending report."""

    def __init__(self, report):
        super().__init__(f"axiom verification failed: {report.summary()}")
        self.report = report
