"""TSLD-trees: construction, classification, answers and blamed clauses."""

import logging
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from enum import StrEnum
from typing import TypeAlias

from ..errors import PreconditionError
from ..syntax.substitution import EMPTY, Substitution, compose
from ..syntax.terms import Program, Query
from ..unify import typed_unify_atoms
from .resolution import (
    Derivation,
    DerivationOutcome,
    DerivationStep,
    DepthExceeded,
    Erroneous,
    Failed,
    FalseProgress,
    NoApplicableClause,
    Progress,
    ResolutionStep,
    SelectionRule,
    Success,
    Unifier,
    WrongHalt,
    applicable_clauses,
    leftmost,
    tsld_step,
)

logger = logging.getLogger(__name__)

_WalkState: TypeAlias = tuple[Query, frozenset[str], Substitution, int]


class Terminal(StrEnum):
    SUCCESS = "success"
    FALSE = "false"
    WRONG = "wrong"
    DEPTH = "depth"

    @property
    def symbol(self) -> str:
        return "□" if self is Terminal.SUCCESS else self.value


class TreeClassification(StrEnum):
    SUCCESSFUL = "successful"
    FINITELY_FAILED = "finitely failed"
    FINITELY_ERRONEOUS = "finitely erroneous"
    DEPTH_BOUNDED = "depth bounded"


@dataclass(frozen=True)
class Edge:
    step: ResolutionStep
    child: "TsldTree"

    @property
    def clause_id(self) -> str:
        return self.step.clause_id


@dataclass(frozen=True)
class TsldTree:
    """A node of a TSLD-tree.

    ``query`` is ``None`` only for ``wrong`` terminals. ``answer`` is the
    composition of the mgus on the path from the root, restricted to the root
    query's variables. A node whose selected atom has no applicable clause is
    a ``false`` terminal that keeps its query.
    """

    query: Query | None
    terminal: Terminal | None = None
    selected: int | None = None
    edges: tuple[Edge, ...] = ()
    answer: Substitution = EMPTY
    depth: int = 0

    @property
    def children(self) -> dict[str, "TsldTree"]:
        return {edge.clause_id: edge.child for edge in self.edges}

    @property
    def label(self) -> str:
        if self.terminal is not None:
            return self.terminal.symbol
        return str(self.query)

    def nodes(self) -> Iterator["TsldTree"]:
        """Pre-order traversal, children in clause order."""
        stack = [self]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(edge.child for edge in reversed(node.edges))

    def leaves(self) -> Iterator["TsldTree"]:
        return (node for node in self.nodes() if node.terminal is not None)


@dataclass
class _Open:
    """An inner node whose children are still being expanded."""

    query: Query
    selected: int
    clause_ids: tuple[str, ...]
    used: frozenset[str]
    answer: Substitution
    depth: int
    edges: list[Edge] = field(default_factory=list)
    pending: ResolutionStep | None = None

    def close(self) -> "TsldTree":
        return TsldTree(self.query, None, self.selected, tuple(self.edges), self.answer, self.depth)


def build_tree(
    program: Program,
    query: Query,
    depth_bound: int = 64,
    *,
    selection: SelectionRule = leftmost,
    unifier: Unifier = typed_unify_atoms,
) -> TsldTree:
    """Expands every applicable clause at every node; nodes at ``depth_bound`` steps become ``depth`` terminals.

    Expansion keeps its own stack, so the depth bound is not limited by Python's
    recursion limit.
    """
    if depth_bound < 1:
        raise PreconditionError(f"depth bound must be at least 1, got {depth_bound}")
    names = query.variables()

    def open_node(
        current: Query, used: frozenset[str], answer: Substitution, depth: int
    ) -> TsldTree | _Open:
        if current.is_empty:
            return TsldTree(current, Terminal.SUCCESS, answer=answer, depth=depth)
        if current.is_false:
            return TsldTree(current, Terminal.FALSE, answer=answer, depth=depth)
        if depth >= depth_bound:
            return TsldTree(current, Terminal.DEPTH, answer=answer, depth=depth)
        index = selection(current)
        clause_ids = applicable_clauses(program, current.atoms[index])
        if not clause_ids:
            return TsldTree(current, Terminal.FALSE, index, answer=answer, depth=depth)
        return _Open(current, index, clause_ids, used, answer, depth)

    root = open_node(query, frozenset(names), EMPTY, 0)
    stack = [root] if isinstance(root, _Open) else []
    tree = root if isinstance(root, TsldTree) else None
    while stack:
        top = stack[-1]
        if len(top.edges) == len(top.clause_ids):
            stack.pop()
            finished = top.close()
            if not stack:
                tree = finished
                break
            parent = stack[-1]
            assert parent.pending is not None
            parent.edges.append(Edge(parent.pending, finished))
            parent.pending = None
            continue

        clause_id = top.clause_ids[len(top.edges)]
        step = tsld_step(
            program, top.query, clause_id, avoid=top.used, selection=selection, unifier=unifier
        )
        child: TsldTree | _Open
        match step:
            case Progress(resolvent, _, theta, _, renamed):
                # only the query's own variables are ever read back from the answer
                child = open_node(
                    resolvent,
                    top.used | frozenset(renamed.variables()),
                    compose(theta, top.answer).restrict(names),
                    top.depth + 1,
                )
            case FalseProgress(resolvent):
                child = open_node(resolvent, top.used, top.answer, top.depth + 1)
            case WrongHalt():
                child = TsldTree(None, Terminal.WRONG, depth=top.depth + 1)
        if isinstance(child, _Open):
            top.pending = step
            stack.append(child)
        else:
            top.edges.append(Edge(step, child))

    assert tree is not None
    logger.debug("built TSLD-tree for %s with %d nodes", query, sum(1 for _ in tree.nodes()))
    return tree


def classify(tree: TsldTree) -> TreeClassification:
    leaves = [leaf.terminal for leaf in tree.leaves()]
    if Terminal.SUCCESS in leaves:
        return TreeClassification.SUCCESSFUL
    if Terminal.DEPTH in leaves:
        return TreeClassification.DEPTH_BOUNDED
    if all(leaf is Terminal.WRONG for leaf in leaves):
        return TreeClassification.FINITELY_ERRONEOUS
    return TreeClassification.FINITELY_FAILED


def tree_answers(tree: TsldTree, names: Iterable[str]) -> Iterator[Substitution]:
    """Computed answers of the success leaves, left to right, restricted to ``names``."""
    names = tuple(names)
    for leaf in tree.leaves():
        if leaf.terminal is Terminal.SUCCESS:
            yield leaf.answer.restrict(names)


def iter_answers(
    program: Program,
    query: Query,
    depth_bound: int = 64,
    *,
    selection: SelectionRule = leftmost,
    unifier: Unifier = typed_unify_atoms,
) -> Iterator[Substitution]:
    """Lazily walks the TSLD-tree depth-first, yielding answers as they are found."""
    names = query.variables()

    def successors(
        current: Query, used: frozenset[str], answer: Substitution, depth: int
    ) -> Iterator[_WalkState]:
        index = selection(current)
        for clause_id in applicable_clauses(program, current.atoms[index]):
            step = tsld_step(
                program, current, clause_id, avoid=used, selection=selection, unifier=unifier
            )
            # a false marker can never lead back to the empty query
            if isinstance(step, Progress) and not step.resolvent.false_marker:
                yield (
                    step.resolvent,
                    used | frozenset(step.input_clause.variables()),
                    compose(step.mgu, answer).restrict(names),
                    depth + 1,
                )

    def walk() -> Iterator[Substitution]:
        stack: list[Iterator[_WalkState]] = [iter([(query, frozenset(names), EMPTY, 0)])]
        while stack:
            state = next(stack[-1], None)
            if state is None:
                stack.pop()
                continue
            current, used, answer, depth = state
            if current.is_empty:
                yield answer.restrict(names)
            elif not current.is_false and depth < depth_bound:
                stack.append(successors(current, used, answer, depth))

    return walk()


def blamed_clauses(tree: TsldTree) -> frozenset[str]:
    """Clauses used at least once whose every branch ends in ``wrong``.

    Branches cut by the depth bound count as not erroneous.
    """
    used: set[str] = set()
    innocent: set[str] = set()
    stack: list[tuple[TsldTree, tuple[str, ...]]] = [(tree, ())]
    while stack:
        node, path = stack.pop()
        if node.terminal is not None:
            if node.terminal is not Terminal.WRONG:
                innocent.update(path)
            continue
        for edge in node.edges:
            used.add(edge.clause_id)
            stack.append((edge.child, (*path, edge.clause_id)))
    return frozenset(used - innocent)


def branches(tree: TsldTree) -> Iterator[Derivation]:
    """Every root-to-leaf path of the tree as a derivation."""
    if tree.query is None:
        return
    root_query = tree.query

    def outcome_of(leaf: TsldTree) -> DerivationOutcome:
        match leaf.terminal:
            case Terminal.SUCCESS:
                return Success(leaf.answer.restrict(root_query.variables()))
            case Terminal.WRONG:
                return Erroneous()
            case Terminal.DEPTH:
                return DepthExceeded()
        return Failed()

    stack: list[tuple[TsldTree, tuple[DerivationStep, ...]]] = [(tree, ())]
    while stack:
        node, steps = stack.pop()
        if node.terminal is not None:
            if node.terminal is Terminal.FALSE and node.selected is not None:
                assert node.query is not None
                steps = (*steps, DerivationStep(node.query, NoApplicableClause(node.selected)))
            yield Derivation(root_query, steps, outcome_of(node))
            continue
        assert node.query is not None
        for edge in reversed(node.edges):
            stack.append((edge.child, (*steps, DerivationStep(node.query, edge.step))))


def format_tree(tree: TsldTree) -> str:
    """Renders the tree as indented text, one node per line."""
    lines = [tree.label]

    def edges_of(node: TsldTree, prefix: str) -> list[tuple[Edge, str, bool]]:
        last = len(node.edges) - 1
        return [(edge, prefix, position == last) for position, edge in enumerate(node.edges)]

    stack = edges_of(tree, "")[::-1]
    while stack:
        edge, prefix, last = stack.pop()
        lines.append(f"{prefix}{'└─' if last else '├─'} {edge.clause_id}: {edge.child.label}")
        stack.extend(edges_of(edge.child, prefix + ("   " if last else "│  "))[::-1])
    return "\n".join(lines)
