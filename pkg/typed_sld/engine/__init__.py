from .diagnosis import (
    Diagnosis,
    Solution,
    Verdict,
    diagnose_program,
    diagnose_query,
    generic_query,
    solve,
)
from .export import to_dot, to_json, tree_from_json
from .resolution import (
    Derivation,
    DerivationStep,
    DepthExceeded,
    Erroneous,
    Failed,
    FalseProgress,
    NoApplicableClause,
    Progress,
    Resultant,
    StepResult,
    Success,
    WrongHalt,
    applicable_clauses,
    derive,
    leftmost,
    resultants,
    rightmost,
    select_atom,
    tsld_step,
)
from .tree import (
    Edge,
    Terminal,
    TreeClassification,
    TsldTree,
    blamed_clauses,
    branches,
    build_tree,
    classify,
    format_tree,
    iter_answers,
    tree_answers,
)

__all__ = [
    "Derivation",
    "DerivationStep",
    "DepthExceeded",
    "Diagnosis",
    "Edge",
    "Erroneous",
    "Failed",
    "FalseProgress",
    "NoApplicableClause",
    "Progress",
    "Resultant",
    "Solution",
    "StepResult",
    "Success",
    "Terminal",
    "TreeClassification",
    "TsldTree",
    "Verdict",
    "WrongHalt",
    "applicable_clauses",
    "blamed_clauses",
    "branches",
    "build_tree",
    "classify",
    "derive",
    "diagnose_program",
    "diagnose_query",
    "format_tree",
    "generic_query",
    "iter_answers",
    "leftmost",
    "resultants",
    "rightmost",
    "select_atom",
    "solve",
    "to_dot",
    "to_json",
    "tree_answers",
    "tree_from_json",
    "tsld_step",
]
