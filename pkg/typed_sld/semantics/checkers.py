"""Declarative verdicts: ill-typed programs and queries, model ordering and soundness checks.

Every universally quantified definition is decided over the finite pools of
:mod:`typed_sld.semantics.pools`. A verdict reached after any bound cut the
enumeration short is reported as ``unknown``.
"""

import logging
from collections import defaultdict
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from enum import StrEnum
from itertools import islice, product
from typing import Any, Literal

from ..engine.diagnosis import Verdict, diagnose_program, diagnose_query
from ..engine.export import validate
from ..engine.resolution import Derivation, Success, resultants
from ..engine.tree import branches, build_tree, tree_answers
from ..errors import PreconditionError
from ..kleene import WRONG, TruthValue
from ..syntax.substitution import apply
from ..syntax.terms import Compound, Const, PredAtom, PredKey, Program, Query, Term, Var
from .domains import (
    DOMAIN_OF_TYPE,
    Context,
    SemDomain,
    State,
    TreeDomain,
    domain_of,
    eval_term,
    term_domain,
)
from .fixpoint import AtomSet, tp_fixpoint
from .interpretation import (
    DomainTuple,
    Expression,
    Interpretation,
    Relation,
    ValueTuple,
    check_model,
    expression_atoms,
)
from .pools import Bounds, Pools

logger = logging.getLogger(__name__)

QueryReading = Literal["model", "wrong-free"]
LemmaReading = Literal["differs", "equals"]


class TypingVerdict(StrEnum):
    ILL_TYPED = "ill-typed"
    WELL_TYPED = "well-typed"
    UNKNOWN = "unknown"


def derived_interpretation(
    atoms: AtomSet, extra_sigs: Mapping[PredKey, Iterable[DomainTuple]] | None = None
) -> Interpretation:
    """The interpretation whose truths are ``atoms`` and whose signatures are just wide enough.

    ``extra_sigs`` gives signatures to predicates that have no atom in the set;
    their truth sets stay empty.
    """
    truths: dict[PredKey, set[ValueTuple]] = defaultdict(set)
    for atom in atoms:
        truths[atom.key].add(tuple(eval_term(arg, {}) for arg in atom.args))
    relations = {
        key: Relation(
            frozenset(tuple(map(domain_of, values)) for values in tuples), frozenset(tuples)
        )
        for key, tuples in truths.items()
    }
    for key, signature in (extra_sigs or {}).items():
        if key not in relations:
            relations[key] = Relation(frozenset(signature))
    return Interpretation(relations)


def top_interpretation(interp: Interpretation, pools: Pools) -> Interpretation:
    """Same signatures as ``interp`` with every pooled tuple inside them true."""
    return Interpretation(
        {
            key: Relation(
                relation.signature,
                frozenset(
                    values
                    for domains in relation.signature
                    for values in product(*map(pools.values_of, domains))
                ),
            )
            for key, relation in interp.relations.items()
        }
    )


def _match_domain(term: Term, domain: SemDomain, context: dict[str, SemDomain]) -> dict[str, SemDomain] | None:
    match term:
        case Var(name):
            if name in context:
                return context if context[name] == domain else None
            return {**context, name: domain}
        case Const(_, ty):
            return context if DOMAIN_OF_TYPE[ty] == domain else None
        case Compound(functor, args):
            if not isinstance(domain, TreeDomain) or (domain.functor, len(domain.children)) != (
                functor,
                len(args),
            ):
                return None
            for arg, child in zip(args, domain.children, strict=True):
                extended = _match_domain(arg, child, context)
                if extended is None:
                    return None
                context = extended
            return context
    raise TypeError(f"not a term: {term!r}")


def _match_domains(
    args: Sequence[Term], domains: DomainTuple, context: dict[str, SemDomain]
) -> dict[str, SemDomain] | None:
    if len(args) != len(domains):
        return None
    for arg, domain in zip(args, domains, strict=True):
        extended = _match_domain(arg, domain, context)
        if extended is None:
            return None
        context = extended
    return context


def _sorted_signature(relation: Relation) -> list[DomainTuple]:
    return sorted(relation.signature, key=lambda domains: tuple(map(str, domains)))


def candidate_contexts(
    atoms: Sequence[PredAtom],
    interp: Interpretation,
    pools: Pools,
    bounds: Bounds = Bounds(),
    *,
    free: frozenset[PredKey] = frozenset(),
) -> tuple[list[dict[str, SemDomain]], bool]:
    """Contexts under which no atom of ``atoms`` falls outside its signature.

    Each atom's argument patterns are matched against the signature tuples of
    its predicate, so every other context makes some atom wrong. Atoms whose key
    is in ``free`` do not constrain the context; variables they alone hold range
    over the pooled domains.
    """
    found: list[dict[str, SemDomain]] = [{}]
    truncated = False
    for atom in atoms:
        if atom.key in free:
            continue
        signature = _sorted_signature(interp.relation(atom.key))
        found = [
            extended
            for context in found
            for domains in signature
            if (extended := _match_domains(atom.args, domains, context)) is not None
        ]
        if len(found) > bounds.max_contexts:
            found, truncated = found[: bounds.max_contexts], True
        if not found:
            return [], truncated
    names = list(dict.fromkeys(name for atom in atoms for name in atom.variables()))
    unbound = [name for name in names if name not in found[0]]
    if unbound:
        domains, pool_truncated = pools.domains
        truncated |= pool_truncated
        filled = (
            {**context, **dict(zip(unbound, choice, strict=True))}
            for context in found
            for choice in product(domains, repeat=len(unbound))
        )
        found = list(islice(filled, bounds.max_contexts + 1))
        if len(found) > bounds.max_contexts:
            found, truncated = found[: bounds.max_contexts], True
    if truncated:
        logger.warning("context search capped at %d contexts", bounds.max_contexts)
    return found, truncated


def widened_interpretation(
    atoms: AtomSet,
    groups: Iterable[Sequence[PredAtom]],
    pools: Pools,
    bounds: Bounds = Bounds(),
    *,
    defined: frozenset[PredKey] = frozenset(),
) -> tuple[Interpretation, bool]:
    """The derived interpretation with undefined predicates widened to every tuple ``groups`` demand.

    Only predicates outside ``defined`` and absent from ``atoms`` are widened;
    a defined predicate with no atom in the fixpoint keeps an empty signature,
    so its atoms stay wrong. Widening an undefined predicate only turns wrong
    atoms into false ones, so this interpretation models whatever a narrower
    one does.
    """
    base = derived_interpretation(atoms)
    groups = [tuple(group) for group in groups]
    absent = frozenset(
        atom.key
        for group in groups
        for atom in group
        if atom.key not in base.relations and atom.key not in defined
    )
    demanded: dict[PredKey, set[DomainTuple]] = {key: set() for key in absent}
    truncated = False
    for group in groups:
        contexts, group_truncated = candidate_contexts(group, base, pools, bounds, free=absent)
        truncated |= group_truncated
        for context in contexts:
            for atom in group:
                if atom.key in absent:
                    demanded[atom.key].add(tuple(term_domain(arg, context) for arg in atom.args))
    return derived_interpretation(atoms, demanded), truncated


@dataclass(frozen=True)
class Violation:
    subject: str
    context: Context | None
    state: State | None
    value: TruthValue

    def __str__(self) -> str:
        if self.context is None:
            return f"{self.subject}: every context makes it {self.value}"
        rendered = ", ".join(f"{name}={value}" for name, value in (self.state or {}).items())
        return f"{self.subject}: {{{rendered}}} gives {self.value}"


@dataclass(frozen=True)
class ContextSearch:
    context: Context | None
    violation: Violation | None
    truncated: bool


def find_context(
    subject: str,
    expr: Expression,
    interp: Interpretation,
    pools: Pools,
    bounds: Bounds = Bounds(),
) -> ContextSearch:
    """The first candidate context in which ``interp`` models ``expr``."""
    contexts, truncated = candidate_contexts(expression_atoms(expr), interp, pools, bounds)
    if not contexts:
        return ContextSearch(None, Violation(subject, None, None, WRONG), truncated)
    violation = None
    for context in contexts:
        check = check_model(interp, expr, context, bounds, pools)
        truncated |= check.truncated
        if check.holds:
            return ContextSearch(context, None, truncated)
        if violation is None:
            assert check.value is not None
            violation = Violation(subject, context, check.counterexample, check.value)
    return ContextSearch(None, violation, truncated)


@dataclass(frozen=True)
class ProgramModel:
    contexts: dict[str, Context]
    violation: Violation | None
    truncated: bool

    @property
    def holds(self) -> bool:
        return self.violation is None


def model_program(
    program: Program, interp: Interpretation, pools: Pools, bounds: Bounds = Bounds()
) -> ProgramModel:
    """Looks for one context per clause in which ``interp`` models the clause."""
    contexts: dict[str, Context] = {}
    truncated = False
    for clause in program.clauses:
        search = find_context(clause.id, clause, interp, pools, bounds)
        truncated |= search.truncated
        if search.context is None:
            return ProgramModel(contexts, search.violation, truncated)
        contexts[clause.id] = search.context
    return ProgramModel(contexts, None, truncated)


def _relation_json(relation: Relation) -> dict[str, Any]:
    return {
        "signature": [[str(d) for d in domains] for domains in _sorted_signature(relation)],
        "truth_set": sorted([str(v) for v in values] for values in relation.truth_set),
    }


@dataclass(frozen=True)
class TypingReport:
    subject: str
    verdict: TypingVerdict
    atoms: AtomSet
    interpretation: Interpretation
    contexts: dict[str, Context] = field(default_factory=dict)
    violation: Violation | None = None
    truncated: bool = False

    def to_json(self) -> dict[str, Any]:
        document = {
            "subject": self.subject,
            "verdict": self.verdict.value,
            "truncated": self.truncated,
            "fixpoint": [str(atom) for atom in self.atoms],
            "iterations": self.atoms.iterations,
            "interpretation": {
                f"{pred}/{arity}": _relation_json(relation)
                for (pred, arity), relation in sorted(self.interpretation.relations.items())
            },
            "contexts": {
                subject: {name: str(domain) for name, domain in context.items()}
                for subject, context in self.contexts.items()
            },
            "violation": None
            if self.violation is None
            else {
                "subject": self.violation.subject,
                "context": None
                if self.violation.context is None
                else {name: str(d) for name, d in self.violation.context.items()},
                "state": None
                if self.violation.state is None
                else {name: str(v) for name, v in self.violation.state.items()},
                "value": self.violation.value.value,
            },
        }
        validate(document, "report.schema.json")
        return document

    def __str__(self) -> str:
        lines = [f"{self.subject}: {self.verdict}"]
        if self.truncated:
            lines.append("  (an enumeration bound was reached)")
        if self.violation is not None:
            lines.append(f"  violated by {self.violation}")
        for subject, context in self.contexts.items():
            rendered = ", ".join(f"{name}: {domain}" for name, domain in context.items())
            lines.append(f"  {subject} in {{{rendered}}}")
        return "\n".join(lines)


def _verdict(violation: Violation | None, truncated: bool) -> TypingVerdict:
    if truncated:
        return TypingVerdict.UNKNOWN
    return TypingVerdict.WELL_TYPED if violation is None else TypingVerdict.ILL_TYPED


def is_ill_typed_program(
    program: Program, bounds: Bounds = Bounds(), *, pools: Pools | None = None
) -> TypingReport:
    """Ill-typed when no interpretation derived from T_P↑ω(∅) models every clause."""
    pools = pools or Pools.for_atoms(program.atoms(), bounds)
    atoms = tp_fixpoint(program, bounds=bounds, pools=pools)
    interp, widening_truncated = widened_interpretation(
        atoms,
        ((clause.head, *clause.body) for clause in program.clauses),
        pools,
        bounds,
        defined=frozenset(program.head_keys()),
    )
    found = model_program(program, interp, pools, bounds)
    truncated = atoms.truncated or widening_truncated or found.truncated
    verdict = _verdict(found.violation, truncated)
    logger.debug("program is %s", verdict)
    return TypingReport(
        "program", verdict, atoms, interp, found.contexts, found.violation, truncated
    )


def is_ill_typed_query(
    program: Program,
    query: Query,
    bounds: Bounds = Bounds(),
    *,
    reading: QueryReading = "model",
) -> TypingReport:
    """Ill-typed when no derived interpretation modelling the program models the query.

    With ``reading="wrong-free"`` the query only has to stay clear of ``wrong``
    in some context, rather than be true in every state of it.
    """
    pools = Pools.for_atoms((*program.atoms(), *query.atoms), bounds)
    atoms = tp_fixpoint(program, bounds=bounds, pools=pools)
    groups = [(clause.head, *clause.body) for clause in program.clauses]
    interp, truncated = widened_interpretation(
        atoms, [*groups, query.atoms], pools, bounds, defined=frozenset(program.head_keys())
    )
    subject = str(query)
    if query.is_empty:
        return TypingReport(subject, TypingVerdict.WELL_TYPED, atoms, interp)
    found = model_program(program, interp, pools, bounds)
    truncated |= atoms.truncated or found.truncated
    if not found.holds:
        return TypingReport(
            subject, _verdict(found.violation, truncated), atoms, interp, found.contexts,
            found.violation, truncated,
        )
    if reading == "wrong-free":
        contexts, contexts_truncated = candidate_contexts(query.atoms, interp, pools, bounds)
        truncated |= contexts_truncated
        search = ContextSearch(
            contexts[0] if contexts else None,
            None if contexts else Violation("query", None, None, WRONG),
            truncated,
        )
    else:
        search = find_context("query", query, interp, pools, bounds)
        truncated |= search.truncated
    contexts = dict(found.contexts)
    if search.context is not None:
        contexts["query"] = search.context
    return TypingReport(
        subject,
        _verdict(search.violation, truncated),
        atoms,
        interp,
        contexts,
        search.violation,
        truncated,
    )


def _falsity_set(relation: Relation, pools: Pools) -> frozenset[ValueTuple]:
    return frozenset(
        values
        for domains in relation.signature
        for values in product(*map(pools.values_of, domains))
        if values not in relation.truth_set
    )


def is_smaller(
    first: Interpretation,
    second: Interpretation,
    bounds: Bounds = Bounds(),
    pools: Pools | None = None,
) -> bool:
    """True sets grow, and where they coincide the false sets grow too, for every predicate."""
    if first.keys() != second.keys():
        raise PreconditionError("interpretations must interpret the same predicates")
    pools = pools or Pools.for_atoms((), bounds, (*first.values(), *second.values()))
    for key in first.keys():
        left, right = first.relation(key), second.relation(key)
        if not left.truth_set <= right.truth_set:
            return False
        if left.truth_set == right.truth_set and not _falsity_set(
            left, pools
        ) <= _falsity_set(right, pools):
            return False
    return True


def minimal_candidates(
    candidates: Sequence[Interpretation],
    bounds: Bounds = Bounds(),
    pools: Pools | None = None,
) -> tuple[Interpretation, ...]:
    """The candidates smaller than every other candidate."""
    return tuple(
        candidate
        for candidate in candidates
        if all(is_smaller(candidate, other, bounds, pools) for other in candidates)
    )


def _never_matches(atom: PredAtom, ground: PredAtom, pools: Pools, reading: LemmaReading) -> bool:
    """Whether no state lines the domains of ``atom`` up with those of ``ground`` under ``reading``."""
    target = tuple(domain_of(eval_term(arg, {})) for arg in ground.args)
    if reading == "differs":
        return _match_domains(atom.args, target, {}) is None
    names = atom.variables()
    domains, _ = pools.domains
    for choice in product(domains, repeat=len(names)):
        context = dict(zip(names, choice, strict=True))
        actual = tuple(term_domain(arg, context) for arg in atom.args)
        if all(a != t for a, t in zip(actual, target, strict=True)):
            return False
    return True


def check_lemma_blamed_clause(
    program: Program,
    clause_id: str,
    bounds: Bounds = Bounds(),
    *,
    reading: LemmaReading = "differs",
) -> bool:
    """Some body atom of a blamed clause can never line up, domain by domain, with a T_P atom.

    ``reading="differs"`` asks for a differing argument position against every
    atom of T_P↑ω(∅); ``reading="equals"`` asks for a position with equal domains.
    """
    diagnosis = diagnose_program(program, bounds.depth_bound)
    if clause_id not in diagnosis.blamed:
        raise PreconditionError(f"{clause_id} is not a blamed clause")
    pools = Pools.for_atoms(program.atoms(), bounds)
    grouped = tp_fixpoint(program, bounds=bounds, pools=pools).by_key()
    clause = program.clause(clause_id)
    return any(
        all(_never_matches(atom, ground, pools, reading) for ground in grouped.get(atom.key, ()))
        for atom in clause.body
    )


def enumerate_models(
    program: Program, pools: Pools, bounds: Bounds = Bounds(), extra: Sequence[Query] = ()
) -> tuple[Interpretation, ...]:
    """The derived interpretation and its pooled top, whichever of them model the program."""
    atoms = tp_fixpoint(program, bounds=bounds, pools=pools)
    groups = [(clause.head, *clause.body) for clause in program.clauses]
    derived, _ = widened_interpretation(
        atoms,
        [*groups, *(q.atoms for q in extra)],
        pools,
        bounds,
        defined=frozenset(program.head_keys()),
    )
    candidates = dict.fromkeys((derived, top_interpretation(derived, pools)))
    return tuple(
        interp for interp in candidates if model_program(program, interp, pools, bounds).holds
    )


def entails(
    models: Iterable[Interpretation],
    expr: Expression,
    pools: Pools,
    bounds: Bounds = Bounds(),
) -> bool:
    """Every model makes ``expr`` true in every context that keeps it clear of ``wrong``, and there is one."""
    for interp in models:
        contexts, _ = candidate_contexts(expression_atoms(expr), interp, pools, bounds)
        if not contexts:
            return False
        if not all(check_model(interp, expr, c, bounds, pools).holds for c in contexts):
            return False
    return True


def check_resultant_soundness(
    program: Program, derivation: Derivation, bounds: Bounds = Bounds()
) -> bool:
    """Every resultant of the derivation is a consequence of the program."""
    found = resultants(derivation)
    pools = Pools.for_atoms(
        (*program.atoms(), *derivation.query.atoms, *(a for r in found for a in r.head.atoms)),
        bounds,
    )
    models = enumerate_models(program, pools, bounds, extra=(derivation.query,))
    return all(entails(models, resultant, pools, bounds) for resultant in found)


@dataclass(frozen=True)
class Check:
    claim: str
    subject: str
    holds: bool
    detail: str = ""

    def __str__(self) -> str:
        mark = "ok" if self.holds else "VIOLATED"
        return f"[{mark}] {self.claim}: {self.subject}" + (f" ({self.detail})" if self.detail else "")


@dataclass(frozen=True)
class SoundnessReport:
    checks: tuple[Check, ...]

    @property
    def violations(self) -> tuple[Check, ...]:
        return tuple(check for check in self.checks if not check.holds)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __str__(self) -> str:
        return "\n".join(map(str, self.checks)) or "nothing to check"


def check_soundness_theorem(
    program: Program, query: Query, bounds: Bounds = Bounds()
) -> SoundnessReport:
    """Runs the engine and confronts each of its conclusions with the declarative checkers."""
    checks: list[Check] = []
    pools = Pools.for_atoms((*program.atoms(), *query.atoms), bounds)
    tree = build_tree(program, query, bounds.depth_bound)
    models = enumerate_models(program, pools, bounds, extra=(query,))
    for answer in tree_answers(tree, query.variables()):
        instance = apply(answer, query)
        checks.append(
            Check(
                "answer is a consequence of the program",
                str(instance),
                entails(models, instance, pools, bounds),
                f"{len(models)} model(s)",
            )
        )
    for derivation in branches(tree):
        if isinstance(derivation.outcome, Success):
            checks.append(
                Check(
                    "resultants are consequences of the program",
                    str(derivation),
                    check_resultant_soundness(program, derivation, bounds),
                )
            )
    program_diagnosis = diagnose_program(program, bounds.depth_bound)
    if program_diagnosis.verdict is Verdict.TYPE_ERROR_IN_PROGRAM:
        report = is_ill_typed_program(program, bounds)
        checks.append(
            Check(
                "type error in program makes it ill-typed",
                f"blamed {', '.join(sorted(program_diagnosis.blamed))}",
                report.verdict is not TypingVerdict.WELL_TYPED,
                str(report.verdict),
            )
        )
    query_diagnosis = diagnose_query(program, query, bounds.depth_bound)
    if query_diagnosis.verdict is Verdict.TYPE_ERROR_IN_QUERY:
        report = is_ill_typed_query(program, query, bounds)
        checks.append(
            Check(
                "type error in query makes it ill-typed",
                str(query),
                report.verdict is not TypingVerdict.WELL_TYPED,
                str(report.verdict),
            )
        )
    return SoundnessReport(tuple(checks))
