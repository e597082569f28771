"""Exception hierarchy shared across the package.

Every rigorous routine fails loudly: a bound that cannot be certified
raises instead of returning a silently-widened result.
"""


class DDECertError(Exception):
    """Base class for all package errors."""


class InvalidIntervalError(DDECertError):
    """Endpoints out of order, or NaN endpoints."""


class DivisionByZeroInterval(DDECertError):
    """Divisor interval contains zero."""


class DomainError(DDECertError):
    """Argument outside the domain of a rigorous elementary function."""


class OverflowPoison(DDECertError):
    """An infinite endpoint reached an operation that cannot absorb it."""


class OutOfValidity(DDECertError):
    """Evaluation point outside a Taylor representation's validity window."""


class OutOfDomain(DDECertError):
    """Evaluation point outside the span of a grid representation."""


class OrderTooLow(DDECertError):
    """Differentiation requested on a jet of order zero."""


class PositivityLost(DDECertError):
    """A power/sqrt recurrence needs a positive base and the enclosure touches zero."""


class EnclosureFailure(DDECertError):
    """A-priori enclosure iteration did not stabilize."""


class BranchAmbiguous(DDECertError):
    """A solution piece could not be classified as wholly above or below the section level."""


class BranchCheckFailed(DDECertError):
    """A freshly built piece violates its claimed branch invariant."""


class HeadOnSection(DDECertError):
    """The propagated head value contains the section level 1."""


class ProofFailure(DDECertError):
    """A property-(P) verification attempt aborted; carries the failed condition.

    Raised whenever any sub-algorithm aborts or the return conditions cannot
    be certified.  Never produced on success, so a returned certificate is
    always backed by a fully verified run.
    """

    def __init__(self, condition: str, step: int | None = None, detail: str = ""):
        self.condition = condition
        self.step = step
        self.detail = detail
        where = f" at step {step}" if step is not None else ""
        msg = f"{condition}{where}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class LedgerInfeasible(DDECertError):
    """A constant in the explicit ledger cannot be certified from the tube."""

    def __init__(self, constant: str, detail: str = ""):
        self.constant = constant
        self.detail = detail
        msg = constant if not detail else f"{constant}: {detail}"
        super().__init__(msg)


class EpsilonVanishes(DDECertError):
    """No admissible closeness threshold above 1e-300 exists."""


class EventAccumulation(DDECertError):
    """Non-rigorous simulator detected more than 10^4 switching events (grazing suspected)."""
