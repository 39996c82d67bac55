"""Small programs with known TSLD behaviour, shared by the test modules."""

from typed_sld.syntax import Program, parse_program

NUMBERS_AND_ATOM = """\
p(0).
p(1).
p(a).
"""

EQUAL_PAIR = "p(X,X).\n"

INT_AND_MIXED = """\
p(1).
p(2).
q(1).
q(a).
r(X) :- p(X), q(X).
"""

MISMATCHED_CALL = """\
p(X,X).
q(X) :- p(1,a).
"""

ATOM_CALL_OF_INT = """\
p(1).
q(a).
q(X) :- p(a).
"""

WELL_TYPED_CHAIN = """\
p(1).
q(a).
q(X) :- p(X).
"""

FAMILY = """\
father(john,mary).
father(phil,john).
grandfather(X,Y) :- father(X,Z), father(Z,Y).
"""

FLOAT_CALL = """\
p(1).
p(a).
q(X) :- p(1.1).
"""

NATURALS = """\
nat(zero).
nat(s(X)) :- nat(X).
"""


def load(text: str) -> Program:
    return parse_program(text)
