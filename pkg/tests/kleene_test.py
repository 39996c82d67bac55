from itertools import product

import pytest

from typed_sld.kleene import (
    FALSE,
    TRUE,
    WRONG,
    TruthValue,
    conj,
    disj,
    fold_and,
    fold_or,
    implies,
    neg,
)

VALUES = list(TruthValue)


@pytest.mark.parametrize("op", [conj, disj, implies])
@pytest.mark.parametrize("value", VALUES)
def test_wrong_absorbs(op, value):
    assert op(WRONG, value) is WRONG
    assert op(value, WRONG) is WRONG


@pytest.mark.parametrize(
    "a, b, expected",
    [
        (TRUE, TRUE, TRUE),
        (TRUE, FALSE, FALSE),
        (FALSE, TRUE, FALSE),
        (FALSE, FALSE, FALSE),
    ],
)
def test_conj_is_classical_on_booleans(a, b, expected):
    assert conj(a, b) is expected
    assert (a & b) is expected


def test_disj_and_neg():
    assert disj(FALSE, FALSE) is FALSE
    assert disj(FALSE, TRUE) is TRUE
    assert (TRUE | FALSE) is TRUE
    assert neg(TRUE) is FALSE
    assert ~FALSE is TRUE
    assert ~WRONG is WRONG


def test_implies_truth_table():
    table = {(a, b): implies(a, b) for a, b in product([TRUE, FALSE], repeat=2)}
    assert table == {
        (TRUE, TRUE): TRUE,
        (TRUE, FALSE): FALSE,
        (FALSE, TRUE): TRUE,
        (FALSE, FALSE): TRUE,
    }


def test_false_body_does_not_hide_wrong_head():
    assert implies(FALSE, WRONG) is WRONG


def test_folds():
    assert fold_and([]) is TRUE
    assert fold_or([]) is FALSE
    assert fold_and([TRUE, FALSE, WRONG]) is WRONG
    assert fold_or([TRUE, WRONG]) is WRONG
    assert fold_and([TRUE, TRUE]) is TRUE


def test_from_bool():
    assert TruthValue.from_bool(True) is TRUE
    assert TruthValue.from_bool(False) is FALSE
    assert str(WRONG) == "wrong"
