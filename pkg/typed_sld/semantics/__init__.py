from .checkers import (
    Check,
    SoundnessReport,
    TypingReport,
    TypingVerdict,
    Violation,
    candidate_contexts,
    check_lemma_blamed_clause,
    check_resultant_soundness,
    check_soundness_theorem,
    derived_interpretation,
    entails,
    enumerate_models,
    is_ill_typed_program,
    is_ill_typed_query,
    is_smaller,
    minimal_candidates,
    top_interpretation,
    widened_interpretation,
)
from .domains import (
    AtomVal,
    BaseDomain,
    FloatVal,
    IntVal,
    SemDomain,
    SemValue,
    StringVal,
    TreeDomain,
    TreeVal,
    complies,
    domain_of,
    eval_term,
    term_domain,
)
from .fixpoint import AtomSet, match_term, tp_fixpoint, tp_step
from .interpretation import (
    Interpretation,
    ModelCheck,
    Relation,
    check_model,
    eval_atom,
    eval_clause,
    eval_query,
    evaluate,
    models,
)
from .pools import CANONICAL_CONSTANTS, Bounds, Pools

__all__ = [
    "CANONICAL_CONSTANTS",
    "AtomSet",
    "AtomVal",
    "BaseDomain",
    "Bounds",
    "Check",
    "FloatVal",
    "IntVal",
    "Interpretation",
    "ModelCheck",
    "Pools",
    "Relation",
    "SemDomain",
    "SemValue",
    "SoundnessReport",
    "StringVal",
    "TreeDomain",
    "TreeVal",
    "TypingReport",
    "TypingVerdict",
    "Violation",
    "candidate_contexts",
    "check_lemma_blamed_clause",
    "check_model",
    "check_resultant_soundness",
    "check_soundness_theorem",
    "complies",
    "derived_interpretation",
    "domain_of",
    "entails",
    "enumerate_models",
    "eval_atom",
    "eval_clause",
    "eval_query",
    "eval_term",
    "evaluate",
    "is_ill_typed_program",
    "is_ill_typed_query",
    "is_smaller",
    "match_term",
    "minimal_candidates",
    "models",
    "term_domain",
    "top_interpretation",
    "tp_fixpoint",
    "tp_step",
    "widened_interpretation",
]
