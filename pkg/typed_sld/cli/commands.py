"""The batch commands behind ``tsld solve``, ``tsld check`` and ``tsld tree``."""

import json
import logging
from collections.abc import Callable
from functools import wraps
from typing import Any, Concatenate, ParamSpec

from ..engine import (
    Diagnosis,
    TreeClassification,
    Verdict,
    build_tree,
    classify,
    diagnose_program,
    format_tree,
    solve,
    to_dot,
    to_json,
)
from ..errors import ConfigError, ParseError, TsldError, UsageError
from ..semantics import TypingVerdict, is_ill_typed_program
from ..syntax import Program, Query, Substitution, parse_program, parse_query
from .config import RunConfig
from .results import EX_DATAERR, EX_USAGE, CommandFailure, CommandResult

logger = logging.getLogger(__name__)

P = ParamSpec("P")

EX_DEPTH = 3

CLASSIFICATION_EXIT: dict[TreeClassification, int] = {
    TreeClassification.SUCCESSFUL: 0,
    TreeClassification.FINITELY_FAILED: 1,
    TreeClassification.FINITELY_ERRONEOUS: 2,
    TreeClassification.DEPTH_BOUNDED: EX_DEPTH,
}

VERDICT_EXIT: dict[Verdict, int] = {
    Verdict.NO_TYPE_ERROR: 0,
    Verdict.TYPE_ERROR_IN_PROGRAM: 2,
    Verdict.TYPE_ERROR_IN_QUERY: 2,
    Verdict.UNKNOWN_DEPTH_BOUNDED: EX_DEPTH,
}


def command(
    fn: Callable[Concatenate[RunConfig, P], CommandResult],
) -> Callable[Concatenate[RunConfig, P], CommandResult]:
    """Turns the errors a command may raise into a failed result with the right exit code."""

    @wraps(fn)
    def run(config: RunConfig, *args: P.args, **kwargs: P.kwargs) -> CommandResult:
        try:
            return fn(config, *args, **kwargs)
        except ParseError as e:
            return CommandFailure(error=f"parse error: {e}", exit_code=EX_DATAERR)
        except (UsageError, ConfigError) as e:
            return CommandFailure(error=e.message, exit_code=EX_USAGE)
        except OSError as e:
            return CommandFailure(error=f"cannot read {e.filename}: {e.strerror}", exit_code=EX_USAGE)
        except TsldError as e:
            return CommandFailure(error=e.message, exit_code=EX_USAGE)
        except RecursionError:
            logger.debug("recursion limit hit in %s", fn.__name__, exc_info=True)
            return CommandFailure(
                error="terms nest too deeply to follow; retry with a smaller --depth",
                exit_code=EX_DEPTH,
            )

    return run


def load_program(config: RunConfig) -> Program:
    if config.program_path is None:
        raise UsageError("no program given (use --program FILE)")
    text = config.program_path.read_text(encoding="utf-8")
    try:
        return parse_program(text)
    except ParseError as e:
        raise ParseError(f"{config.program_path}: {e.message}", e.line, e.column) from None


def format_answer(answer: Substitution) -> str:
    """``true`` for the empty answer, otherwise ``X = 1, Y = a``."""
    if not answer:
        return "true"
    return ", ".join(f"{name} = {term}" for name, term in answer.items())


def _blamed_lines(program: Program, diagnosis: Diagnosis) -> list[str]:
    return [f"  {clause_id}: {program.clause(clause_id)}" for clause_id in sorted(diagnosis.blamed)]


@command
def cmd_solve(config: RunConfig, query_text: str) -> CommandResult:
    program = load_program(config)
    query = parse_query(query_text)
    solution = solve(program, query, config.depth_bound, config.max_answers)
    exit_code = CLASSIFICATION_EXIT[solution.classification]
    logger.debug("%s: %s", query, solution.classification)
    match config.output_format:
        case "dot":
            return CommandResult(output=to_dot(solution.tree), exit_code=exit_code)
        case "json":
            document = {
                "query": str(query),
                "answers": [{n: str(t) for n, t in answer.items()} for answer in solution.answers],
                "classification": solution.classification.value,
                "diagnosis": {
                    "verdict": solution.diagnosis.verdict.value,
                    "blamed": sorted(solution.diagnosis.blamed),
                },
                "tree": to_json(solution.tree),
            }
            return CommandResult(output=json.dumps(document, indent=2), exit_code=exit_code)
    lines = [format_answer(answer) + "." for answer in solution.answers] or ["no answers."]
    lines.append(f"tree: {solution.classification}")
    lines.append(f"diagnosis: {solution.diagnosis.verdict}")
    if solution.diagnosis.blamed:
        lines.append("blamed clauses:")
        lines.extend(_blamed_lines(program, solution.diagnosis))
    return CommandResult(output="\n".join(lines), exit_code=exit_code)


@command
def cmd_check(config: RunConfig) -> CommandResult:
    return check_program(config, load_program(config))


@command
def check_program(config: RunConfig, program: Program) -> CommandResult:
    """Diagnoses an already loaded program."""
    diagnosis = diagnose_program(program, config.depth_bound)
    report = is_ill_typed_program(program, config.bounds()) if config.semantic else None
    exit_code = VERDICT_EXIT[diagnosis.verdict]
    if config.output_format == "json":
        document: dict[str, Any] = {
            "generic_query": str(diagnosis.query),
            "verdict": diagnosis.verdict.value,
            "blamed": [
                {"id": clause_id, "clause": str(program.clause(clause_id))}
                for clause_id in sorted(diagnosis.blamed)
            ],
            "evidence": [str(derivation) for derivation in diagnosis.evidence],
            "semantic": None if report is None else report.to_json(),
        }
        return CommandResult(output=json.dumps(document, indent=2), exit_code=exit_code)
    if config.output_format == "dot":
        return CommandResult(output=to_dot(diagnosis.tree, "generic"), exit_code=exit_code)
    lines = [f"generic query: {diagnosis.query}", f"verdict: {diagnosis.verdict}"]
    if diagnosis.blamed:
        lines.append("blamed clauses:")
        lines.extend(_blamed_lines(program, diagnosis))
        lines.append("evidence:")
        lines.extend(f"  {derivation}" for derivation in diagnosis.evidence)
    if report is not None:
        lines.append(f"declarative verdict: {report.verdict}")
        if report.verdict is not TypingVerdict.WELL_TYPED:
            lines.extend(f"  {line}" for line in str(report).splitlines()[1:])
    return CommandResult(output="\n".join(lines), exit_code=exit_code)


def render_tree(config: RunConfig, program: Program, query: Query) -> str:
    tree = build_tree(program, query, config.depth_bound)
    match config.output_format:
        case "dot":
            return to_dot(tree)
        case "json":
            return json.dumps(to_json(tree), indent=2)
    return f"{format_tree(tree)}\n{classify(tree)}"


@command
def cmd_tree(config: RunConfig, query_text: str) -> CommandResult:
    program = load_program(config)
    return CommandResult(output=render_tree(config, program, parse_query(query_text)))
