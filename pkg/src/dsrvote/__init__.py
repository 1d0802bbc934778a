"""dsrvote: exact-arithmetic social choice via pivot-specific partitions.

The engine scores alternatives through per-pivot ordered partitions of
the roster, aggregates exact rational totals, and ships classical
solution concepts (Condorcet, Smith, Schwartz, uncovered set, Copeland)
plus brute-force oracles used to cross-check the implementation.
"""

from .ballots import parse_ballots, parse_matrix, render_matrix, render_profile
from .errors import (
    CoverageError,
    DimensionError,
    DsrError,
    EmptyBlock,
    EmptySubset,
    InconsistentPair,
    MixedBallotStyles,
    ParseError,
    SingletonSubset,
    TiesPresent,
    TooLarge,
    UnknownAlternative,
)
from .majority import PairwiseTally, majority_of_profile, majority_relation, tally
from .model import (
    AlternativeSet,
    ApprovalProfile,
    Outcome,
    PreferenceRelation,
    Profile,
    WeakOrder,
    approval_to_weak_order,
    is_transitive,
    restrict,
    validate_relation,
    weak_order_to_relation,
)
from .oracle import EnumerationSpec, check_theorem_suite
from .partitions import (
    Neighborhoods,
    SpecificPartition,
    beta,
    block_dominates,
    gamma,
    neighborhoods,
    seek_partition,
)
from .scoring import (
    DEFAULT_ALPHA,
    ScoreTable,
    ScoringConfig,
    compute_scores,
    linear_order_score,
    mu,
    social_ranking,
    winner_set,
)
from .solutions import (
    ChoiceSet,
    CopelandResult,
    condorcet_loser,
    condorcet_winner,
    copeland,
    covers,
    schwartz_set,
    smith_set,
    top_cycle,
    uncovered_set,
)

__version__ = "0.1.0"

__all__ = [
    "AlternativeSet",
    "ApprovalProfile",
    "ChoiceSet",
    "CopelandResult",
    "CoverageError",
    "DEFAULT_ALPHA",
    "DimensionError",
    "DsrError",
    "EmptyBlock",
    "EmptySubset",
    "EnumerationSpec",
    "InconsistentPair",
    "MixedBallotStyles",
    "Neighborhoods",
    "Outcome",
    "PairwiseTally",
    "ParseError",
    "PreferenceRelation",
    "Profile",
    "ScoreTable",
    "ScoringConfig",
    "SingletonSubset",
    "SpecificPartition",
    "TiesPresent",
    "TooLarge",
    "UnknownAlternative",
    "WeakOrder",
    "approval_to_weak_order",
    "beta",
    "block_dominates",
    "check_theorem_suite",
    "compute_scores",
    "condorcet_loser",
    "condorcet_winner",
    "copeland",
    "covers",
    "gamma",
    "is_transitive",
    "linear_order_score",
    "majority_of_profile",
    "majority_relation",
    "mu",
    "neighborhoods",
    "parse_ballots",
    "parse_matrix",
    "render_matrix",
    "render_profile",
    "restrict",
    "schwartz_set",
    "seek_partition",
    "smith_set",
    "social_ranking",
    "tally",
    "top_cycle",
    "uncovered_set",
    "validate_relation",
    "weak_order_to_relation",
    "winner_set",
]
