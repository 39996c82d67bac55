"""Lexer and recursive-descent parser for the mini-Prolog program language.

Constants are typed by lexical class: ``12`` and ``-3`` are integers, ``1.5``
is a float, ``abc`` is an atom and ``"abc"`` is a string. Identifiers that start
with an uppercase letter or ``_`` are variables; each bare ``_`` is a distinct
anonymous variable. ``%`` starts a comment running to the end of the line.
"""

import re
from collections.abc import Iterator
from dataclasses import dataclass
from typing import Literal

from ..errors import ParseError
from .terms import BaseType, Clause, Compound, Const, PredAtom, Program, Query, Term, Var

TokenKind = Literal[
    "FLOAT", "INT", "STRING", "VAR", "NAME", "NECK", "LPAREN", "RPAREN", "COMMA", "END", "EOF"
]

_TOKEN_SPEC: list[tuple[str, str]] = [
    ("SKIP", r"[ \t\r]+|%[^\n]*"),
    ("NEWLINE", r"\n"),
    ("FLOAT", r"-?\d+\.\d+"),
    ("INT", r"-?\d+"),
    ("STRING", r'"(?:[^"\\\n]|\\.)*"'),
    ("VAR", r"[A-Z_][A-Za-z0-9_]*"),
    ("NAME", r"[a-z][A-Za-z0-9_]*"),
    ("NECK", r":-"),
    ("LPAREN", r"\("),
    ("RPAREN", r"\)"),
    ("COMMA", r","),
    ("END", r"\."),
    ("MISMATCH", r"."),
]
_TOKEN_RE = re.compile("|".join(f"(?P<{kind}>{pattern})" for kind, pattern in _TOKEN_SPEC))
_ESCAPE_RE = re.compile(r"\\(.)")
_ESCAPES = {"n": "\n", "t": "\t"}


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    text: str
    line: int
    column: int


def tokenize(src: str) -> Iterator[Token]:
    line, line_start = 1, 0
    for match in _TOKEN_RE.finditer(src):
        kind = match.lastgroup
        text = match.group()
        column = match.start() - line_start + 1
        if kind == "NEWLINE":
            line, line_start = line + 1, match.end()
        elif kind == "MISMATCH":
            raise ParseError(f"unexpected character {text!r}", line, column)
        elif kind != "SKIP":
            yield Token(kind, text, line, column)  # type: ignore[arg-type]
    yield Token("EOF", "", line, len(src) - line_start + 1)


def _unescape(text: str) -> str:
    return _ESCAPE_RE.sub(lambda m: _ESCAPES.get(m.group(1), m.group(1)), text[1:-1])


class _Parser:
    def __init__(self, src: str):
        self.tokens = list(tokenize(src))
        self.pos = 0
        self.anonymous = 0
        self.named: set[str] = set()

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def error(self, message: str) -> ParseError:
        token = self.current
        found = "end of input" if token.kind == "EOF" else repr(token.text)
        return ParseError(f"{message}, found {found}", token.line, token.column)

    def accept(self, kind: TokenKind) -> Token | None:
        if self.current.kind == kind:
            token = self.current
            self.pos += 1
            return token
        return None

    def expect(self, kind: TokenKind, what: str) -> Token:
        token = self.accept(kind)
        if token is None:
            raise self.error(f"expected {what}")
        return token

    def at_eof(self) -> bool:
        return self.current.kind == "EOF"

    def start_scope(self) -> None:
        """Starts a clause or query: ``_`` names skip every variable written up to its ``.``."""
        self.anonymous = 0
        self.named = set()
        for token in self.tokens[self.pos :]:
            if token.kind == "END":
                break
            if token.kind == "VAR":
                self.named.add(token.text)

    def fresh_anonymous(self) -> Var:
        while True:
            self.anonymous += 1
            name = f"_G{self.anonymous}"
            if name not in self.named:
                return Var(name)

    def program(self) -> Program:
        clauses = []
        while not self.at_eof():
            clauses.append(self.clause(f"c{len(clauses) + 1}"))
        return Program(tuple(clauses))

    def clause(self, clause_id: str) -> Clause:
        self.start_scope()
        head = self.atom()
        body: tuple[PredAtom, ...] = ()
        if self.accept("NECK"):
            body = self.conjunction()
        self.expect("END", "'.' at end of clause")
        return Clause(clause_id, head, body)

    def conjunction(self) -> tuple[PredAtom, ...]:
        atoms = [self.atom()]
        while self.accept("COMMA"):
            atoms.append(self.atom())
        return tuple(atoms)

    def atom(self) -> PredAtom:
        name = self.expect("NAME", "predicate name")
        if not self.accept("LPAREN"):
            return PredAtom(name.text)
        if self.accept("RPAREN"):
            return PredAtom(name.text)
        args = self.arguments()
        return PredAtom(name.text, args)

    def arguments(self) -> tuple[Term, ...]:
        args = [self.term()]
        while self.accept("COMMA"):
            args.append(self.term())
        self.expect("RPAREN", "',' or ')'")
        return tuple(args)

    def term(self) -> Term:
        token = self.current
        match token.kind:
            case "VAR":
                self.pos += 1
                if token.text == "_":
                    return self.fresh_anonymous()
                return Var(token.text)
            case "INT":
                self.pos += 1
                return Const(token.text, BaseType.INT)
            case "FLOAT":
                self.pos += 1
                return Const(token.text, BaseType.FLOAT)
            case "STRING":
                self.pos += 1
                return Const(_unescape(token.text), BaseType.STRING)
            case "NAME":
                self.pos += 1
                if not self.accept("LPAREN"):
                    return Const(token.text, BaseType.ATOM)
                if self.current.kind == "RPAREN":
                    raise self.error(f"compound term {token.text} needs an argument")
                return Compound(token.text, self.arguments())
        raise self.error("expected a term")


def parse_program(src: str) -> Program:
    """Parses program text; clause ids are ``c1``, ``c2``, … in source order."""
    return _Parser(src).program()


def parse_query(src: str) -> Query:
    """Parses ``a1, …, an.``; blank text or a lone ``.`` is the empty query."""
    parser = _Parser(src)
    if parser.at_eof():
        return Query()
    parser.start_scope()
    if parser.accept("END"):
        if not parser.at_eof():
            raise parser.error("expected end of input")
        return Query()
    atoms = parser.conjunction()
    parser.expect("END", "'.' at end of query")
    if not parser.at_eof():
        raise parser.error("expected end of input")
    return Query(atoms)


def parse_term(src: str) -> Term:
    parser = _Parser(src)
    parser.start_scope()
    term = parser.term()
    if not parser.at_eof():
        raise parser.error("expected end of input")
    return term
