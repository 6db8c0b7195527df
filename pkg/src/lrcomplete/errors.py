"""Exception hierarchy for algorithmic failure modes."""


class CompletionError(Exception):
    """Base class for all package-specific errors."""


class NonOrthonormalFactorError(CompletionError):
    """A factor expected to have orthonormal columns does not."""


class PowerConvergenceError(CompletionError):
    """Power iteration exhausted its budget without certifying the residual."""


class InvalidSplitError(CompletionError):
    """Oracle-splitting probabilities violate p_k <= p <= 1/K."""


class FilterBudgetError(CompletionError):
    """Row/column drop quota would leave nothing behind."""


class DegenerateRidgeError(CompletionError):
    """Ridge system is singular with a zero regularizer."""


class EmptyCandidateSetError(CompletionError):
    """Column sampling produced an empty candidate set; resample advised."""


class RankDeficiencyError(CompletionError):
    """Regression design matrix has (numerically) deficient column rank."""


class NoConsensusError(CompletionError):
    """No aggregation candidate has a majority of close neighbors."""


class NonTerminationError(CompletionError):
    """Main completion loop exceeded its iteration cap."""


class EnumerationBudgetError(CompletionError):
    """Exact-mode subset enumeration exceeds the configured budget."""


class CertificationError(CompletionError):
    """Noise-agnostic wrapper hit the accuracy floor without certifying."""


class PreconditionError(CompletionError):
    """An operation's input contract was violated."""
