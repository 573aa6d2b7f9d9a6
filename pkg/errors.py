"""
Exception hierarchy for the maximality toolkit.

Everything derives from ValueError so callers that only care about
"bad input" can keep catching that.
"""

from typing import List, Optional


class MaximalityError(ValueError):
    """Base class for all toolkit errors."""


class ConfigurationError(MaximalityError):
    """Settings file contains an unknown key or an unparsable value."""


class ProfileFormatError(MaximalityError):
    """A profile document could not be read or typed."""

    def __init__(self, message: str, field: Optional[str] = None):
        super().__init__(message)
        self.field = field


class ProfileValidationError(MaximalityError):
    """A profile violates one or more of its invariants."""

    def __init__(self, violations: List["object"]):
        self.violations = list(violations)
        rendered = "; ".join(str(v) for v in self.violations)
        super().__init__(f"invalid surface profile: {rendered}")


class SmithTheoryError(MaximalityError):
    """The profile describes no involution on any space."""


class MissingHodgeDataError(MaximalityError):
    """An operation needs Hodge numbers and the profile has none."""


class HypothesisError(MaximalityError):
    """The operation's hypotheses are not met by the profile."""


class ConsistencyError(MaximalityError):
    """An internal identity failed; indicates a bug or contradictory data."""


class OracleMismatchError(ConsistencyError):
    """An independent oracle disagrees with the closed-form value."""


class ComplexError(MaximalityError):
    """Malformed simplicial complex, chain complex or involution."""


class NonRegularInvolutionError(ComplexError):
    """An invariant simplex is not fixed pointwise."""


class ResourceBudgetError(MaximalityError):
    """A construction would exceed the configured size budget."""

    def __init__(self, what: str, needed: int, budget: int):
        super().__init__(
            f"{what} needs {needed} entries, over the configured budget of {budget}"
        )
        self.needed = needed
        self.budget = budget
