"""Interactive top level: one query per line, answers one at a time."""

import logging
import sys
from collections.abc import Callable
from dataclasses import replace
from pathlib import Path
from typing import TextIO

from ..engine import TreeClassification, build_tree, classify, iter_answers
from ..errors import ParseError
from ..syntax import Program, parse_query
from .commands import check_program, command, format_answer, load_program, render_tree
from .config import RunConfig
from .results import CommandFailure, CommandResult

logger = logging.getLogger(__name__)

PROMPT = "?- "

HELP = """\
:load FILE     load a program, replacing the current one
:check         diagnose the loaded program
:tree QUERY    show the TSLD-tree of QUERY
:help          show this text
:quit          leave
Anything else is read as a query. After an answer, type ; for the next one."""

NO_ANSWER: dict[TreeClassification, str] = {
    TreeClassification.FINITELY_FAILED: "false.",
    TreeClassification.FINITELY_ERRONEOUS: "wrong.",
    TreeClassification.DEPTH_BOUNDED: "unknown (depth bound reached).",
}


class Quit(Exception):
    """Raised by the ``:quit`` directive."""


class Repl:
    def __init__(self, config: RunConfig, stdin: TextIO = sys.stdin, stdout: TextIO = sys.stdout):
        self.config = config
        self.stdin = stdin
        self.stdout = stdout
        self.program: Program | None = None
        self.directives: dict[str, Callable[[str], CommandResult]] = {
            "load": self.load,
            "check": self.check,
            "tree": self.tree,
            "help": self.help,
            "quit": self.quit,
        }

    def write(self, text: str):
        self.stdout.write(text)
        self.stdout.flush()

    def show(self, result: CommandResult):
        if result.output:
            self.write(result.output + "\n")
        if result.error:
            self.write(f"error: {result.error}\n")

    def load(self, argument: str) -> CommandResult:
        if not argument:
            return CommandFailure(error="usage: :load FILE")

        @command
        def read(config: RunConfig) -> CommandResult:
            self.program = load_program(config)
            self.config = config
            return CommandResult(
                output=f"loaded {len(self.program)} clause(s) from {config.program_path}"
            )

        return read(replace(self.config, program_path=Path(argument)))

    def check(self, argument: str) -> CommandResult:
        if self.program is None:
            return CommandFailure(error="no program loaded (use :load FILE)")
        return check_program(self.config, self.program)

    def tree(self, argument: str) -> CommandResult:
        if self.program is None:
            return CommandFailure(error="no program loaded (use :load FILE)")
        program = self.program

        @command
        def show(config: RunConfig) -> CommandResult:
            return CommandResult(output=render_tree(config, program, parse_query(argument)))

        return show(self.config)

    def help(self, argument: str) -> CommandResult:
        return CommandResult(output=HELP)

    def quit(self, argument: str) -> CommandResult:
        raise Quit

    def directive(self, line: str) -> CommandResult:
        name, _, argument = line[1:].partition(" ")
        handler = self.directives.get(name)
        if handler is None:
            return CommandFailure(error=f"unknown directive :{name} (try :help)")
        return handler(argument.strip())

    def ask(self, text: str):
        """Answers a query Prolog-style, waiting for ``;`` before each further answer."""
        if self.program is None:
            self.show(CommandFailure(error="no program loaded (use :load FILE)"))
            return
        try:
            query = parse_query(text)
        except ParseError as e:
            self.show(CommandFailure(error=f"parse error: {e}"))
            return
        logger.debug("query %s against %d clause(s)", query, len(self.program))
        answers = iter_answers(self.program, query, self.config.depth_bound)
        current = next(answers, None)
        if current is None:
            classification = classify(build_tree(self.program, query, self.config.depth_bound))
            self.write(NO_ANSWER.get(classification, "false.") + "\n")
            return
        while current is not None:
            following = next(answers, None)
            if following is None:
                self.write(format_answer(current) + ".\n")
                return
            self.write(format_answer(current) + " ")
            if self.stdin.readline().strip() != ";":
                self.write(".\n")
                return
            self.write(";\n")
            current = following

    def run(self) -> int:
        if self.config.program_path is not None:
            self.show(self.load(str(self.config.program_path)))
        while True:
            self.write(PROMPT)
            line = self.stdin.readline()
            if not line:
                self.write("\n")
                return 0
            line = line.strip()
            if not line:
                continue
            try:
                if line.startswith(":"):
                    self.show(self.directive(line))
                else:
                    self.ask(line)
            except Quit:
                return 0
