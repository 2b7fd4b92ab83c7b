"""threesq: sums-of-three-squares identity verification toolkit.

Exact truncated q-series arithmetic, brute-force counting oracles,
binary quadratic form class numbers, and certified arbitrary-precision
checks of Kronecker-type identities, with a CLI front end.
"""

from .backend import active_backend
from .counts import DecompositionCounts, Triple
from .identities import IdentityCheckResult
from .numeric import CheckOutcome, EvalContext
from .qforms import FormCensus, QuadForm
from .registry import IDENTITY_IDS, CheckReport, run_check
from .series import IntSeries, equal_to_order, neg_pochhammer, pochhammer, theta_signed

__version__ = "0.1.0"

__all__ = [
    "IntSeries",
    "pochhammer",
    "neg_pochhammer",
    "theta_signed",
    "equal_to_order",
    "Triple",
    "DecompositionCounts",
    "QuadForm",
    "FormCensus",
    "EvalContext",
    "CheckOutcome",
    "IdentityCheckResult",
    "CheckReport",
    "IDENTITY_IDS",
    "run_check",
    "active_backend",
    "__version__",
]
