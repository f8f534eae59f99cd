"""betasf: spectral form factor structure for beta ensembles.

Exact derivation of the linear differential equations satisfied by bulk
two-point correlations of circular beta ensembles, series and structure
function analysis of their solutions, and numerical kernels for the
matching unitary and Laguerre ensemble identities.
"""

from .errors import (
    BetasfError,
    DegenerateEliminationError,
    DomainError,
    IrregularSingularityError,
    NonRealLimitError,
    OrderCollapseError,
    QuadratureError,
    ResonanceError,
    SingularSystemError,
    TruncationInstabilityError,
    UnsupportedExpansionError,
    ZeroOperatorError,
)

__version__ = "0.1.0"

__all__ = [
    "BetasfError",
    "DegenerateEliminationError",
    "DomainError",
    "IrregularSingularityError",
    "NonRealLimitError",
    "OrderCollapseError",
    "QuadratureError",
    "ResonanceError",
    "SingularSystemError",
    "TruncationInstabilityError",
    "UnsupportedExpansionError",
    "ZeroOperatorError",
    "__version__",
]
