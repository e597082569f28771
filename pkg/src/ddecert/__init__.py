"""Validated-numerics certification of stable periodic orbits for delay equations.

The package proves, with interval arithmetic throughout, that
``x'(t) = -c x(t) + d g(x(t-1))`` with the switched feedback
``g(xi) = xi**k`` on ``[0, 1)`` and ``g = 0`` above 1 has a periodic
solution crossing the section ``x = 1`` transversally, and derives from the
certified orbit the explicit constant ledger and thresholds under which the
smooth equation ``y'(t) = -a y(t) + b f(y(t-1))`` inherits a stable
periodic orbit.
"""

from .interval import Interval, PI, from_decimal_string, make_interval
from .errors import (
    BranchAmbiguous,
    BranchCheckFailed,
    DDECertError,
    DivisionByZeroInterval,
    DomainError,
    EnclosureFailure,
    EpsilonVanishes,
    EventAccumulation,
    HeadOnSection,
    InvalidIntervalError,
    LedgerInfeasible,
    OrderTooLow,
    OutOfDomain,
    OutOfValidity,
    OverflowPoison,
    PositivityLost,
    ProofFailure,
)

__version__ = "0.1.0"

__all__ = [
    "Interval",
    "PI",
    "from_decimal_string",
    "make_interval",
    "DDECertError",
    "InvalidIntervalError",
    "DivisionByZeroInterval",
    "DomainError",
    "OverflowPoison",
    "OutOfValidity",
    "OutOfDomain",
    "OrderTooLow",
    "PositivityLost",
    "EnclosureFailure",
    "BranchAmbiguous",
    "BranchCheckFailed",
    "HeadOnSection",
    "ProofFailure",
    "LedgerInfeasible",
    "EpsilonVanishes",
    "EventAccumulation",
    "__version__",
]
