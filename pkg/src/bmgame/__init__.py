"""Banach-Mazur games on the unit interval with exact rational arithmetic.

An engine, strategy laboratory, and arena for the topological game where two
players alternate nested nonempty open sets.  All sets are finite unions of
open rational intervals, so legality, density, closure containment and the
finite-depth certificates are decided exactly.
"""

from .intervals import (
    EmptySetError,
    IntervalUnion,
    OpenInterval,
    Rational,
    UNIT,
    format_rational,
    parse_rational,
    simplest_rational_between,
)
from .referee import (
    Certificate,
    CertificateFailure,
    CertificateKind,
    IllegalMove,
    Move,
    Player,
    Ruleset,
    SubsetMode,
    Transcript,
    Violation,
    ViolationKind,
    check_certificate,
    exclusion_certificate,
    localization_certificate,
    new_game,
)
from .spaces import (
    AmbientSpace,
    DenseOpenFamily,
    MeagreCover,
    Region,
    cofinite_dense_open,
    constant_family,
    enumerate_rational,
    farey_cover,
    farey_family,
    is_dense,
    is_nowhere_dense,
)
from .strategies import (
    CapExceeded,
    RefinementFamily,
    RefinementNode,
    RefinementTree,
    Strategy,
    StrategyFault,
    alice_exclusion,
    baire_point,
    bob_dense_chaser,
    bob_shrink,
    disjoint_refinement,
    left_third_map,
    random_strategy,
    run_match,
    shrink_select,
    sigma_refinement_tree,
    strategy_from_id,
)

__all__ = [
    "AmbientSpace",
    "CapExceeded",
    "Certificate",
    "CertificateFailure",
    "CertificateKind",
    "DenseOpenFamily",
    "EmptySetError",
    "IllegalMove",
    "IntervalUnion",
    "MeagreCover",
    "Move",
    "OpenInterval",
    "Player",
    "Rational",
    "RefinementFamily",
    "RefinementNode",
    "RefinementTree",
    "Region",
    "Ruleset",
    "Strategy",
    "StrategyFault",
    "SubsetMode",
    "Transcript",
    "UNIT",
    "Violation",
    "ViolationKind",
    "alice_exclusion",
    "baire_point",
    "bob_dense_chaser",
    "bob_shrink",
    "check_certificate",
    "cofinite_dense_open",
    "constant_family",
    "disjoint_refinement",
    "enumerate_rational",
    "exclusion_certificate",
    "farey_cover",
    "farey_family",
    "format_rational",
    "is_dense",
    "is_nowhere_dense",
    "left_third_map",
    "localization_certificate",
    "new_game",
    "parse_rational",
    "random_strategy",
    "run_match",
    "shrink_select",
    "sigma_refinement_tree",
    "simplest_rational_between",
    "strategy_from_id",
]

__version__ = "0.1.0"
