"""Exception hierarchy for betasf."""


class BetasfError(Exception):
    """Base class for all betasf errors."""


class LaurentError(BetasfError):
    """Negative exponent on an indeterminate that does not admit them."""


class ZeroOperatorError(BetasfError):
    """An operation that needs a nonzero operator received the zero operator."""


class DegenerateEliminationError(BetasfError):
    """A leading recurrence coefficient (n-p)*E_p vanishes identically."""


class OrderCollapseError(BetasfError):
    """The leading-order operator lost derivative order in a scaling limit."""


class NonRealLimitError(BetasfError):
    """A limit operator has genuinely complex coefficients after unit removal."""


class TruncationInstabilityError(BetasfError):
    """Two truncation depths of a series substitution disagree."""


class IrregularSingularityError(BetasfError):
    """Indicial polynomial degree does not match the operator order."""


class ResonanceError(BetasfError):
    """An indicial pivot vanishes at a positive shift of the chosen exponent."""


class UnsupportedExpansionError(BetasfError):
    """The operator does not admit the requested expansion ansatz."""


class SingularSystemError(BetasfError):
    """An exact linear system has no unique solution."""


class QuadratureError(BetasfError):
    """Two independent quadrature schemes disagree beyond tolerance."""


class DomainError(BetasfError):
    """Argument outside the supported domain of a special function or map."""
