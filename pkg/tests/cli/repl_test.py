from io import StringIO

import pytest

from programs import MISMATCHED_CALL, NUMBERS_AND_ATOM
from typed_sld.cli.config import RunConfig
from typed_sld.cli.repl import HELP, Repl


@pytest.fixture
def session(program_file):
    def run(lines: str, text: str | None = NUMBERS_AND_ATOM, **options) -> str:
        path = program_file(text) if text is not None else None
        stdout = StringIO()
        repl = Repl(RunConfig(program_path=path, **options), StringIO(lines), stdout)
        assert repl.run() == 0
        return stdout.getvalue()

    return run


def transcript(output: str) -> str:
    """Drops the greeting line written when the program loads."""
    return output.split("\n", 1)[1]


def test_loads_the_program_on_start(session, program_file):
    output = session("")
    assert output.startswith("loaded 3 clause(s) from ")


def test_failing_query(session):
    assert transcript(session("p(b).\n")) == "?- false.\n?- \n"


def test_erroneous_query(session):
    assert transcript(session("p(1.5).\n")) == "?- wrong.\n?- \n"


def test_depth_bounded_query(session):
    output = session("p(1).\n", "p(X) :- p(X).\n", depth_bound=4)
    assert transcript(output) == "?- unknown (depth bound reached).\n?- \n"


def test_answers_on_demand(session):
    assert transcript(session("p(X).\n;\n;\n")) == "?- X = 0 ;\nX = 1 ;\nX = a.\n?- \n"


def test_stop_after_first_answer(session):
    assert transcript(session("p(X).\n\n")) == "?- X = 0 .\n?- \n"


def test_ground_success(session):
    assert transcript(session("p(1).\n")) == "?- true.\n?- \n"


def test_parse_error_keeps_the_session(session):
    output = transcript(session("p(X\np(0).\n"))
    assert output.startswith("?- error: parse error: line 1")
    assert output.endswith("?- true.\n?- \n")


def test_directives(session):
    output = transcript(session(":help\n:check\n:tree p(b).\n:nope\n:quit\np(X).\n"))
    assert HELP in output
    assert "verdict: no type error" in output
    assert "└─ c3: false" in output
    assert "error: unknown directive :nope (try :help)" in output
    assert "X = 0" not in output


def test_without_a_program(session, program_file):
    output = session(f"p(X).\n:check\n:load {program_file(NUMBERS_AND_ATOM, 'later.pl')}\np(0).\n", None)
    assert output.count("error: no program loaded (use :load FILE)") == 2
    assert "loaded 3 clause(s)" in output
    assert output.endswith("?- true.\n?- \n")


def test_load_needs_a_file(session):
    assert "error: usage: :load FILE" in session(":load\n")


def test_load_reports_missing_files(session, tmp_path):
    assert "error: cannot read" in session(f":load {tmp_path / 'absent.pl'}\n")


def test_check_uses_the_loaded_program(program_file):
    path = program_file(NUMBERS_AND_ATOM)
    repl = Repl(RunConfig(), StringIO(), StringIO())
    assert repl.load(str(path)).exit_code == 0
    path.write_text(MISMATCHED_CALL, encoding="utf-8")
    result = repl.check("")
    assert result.exit_code == 0
    assert result.output.startswith("generic query: p(X1)\nverdict: no type error")
