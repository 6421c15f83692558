import json

import pytest
from gmpy2 import mpq
from hypothesis import given

from tuaxioms import SolutionSpec, make_game, zero_game
from tuaxioms.axioms import AxiomInstance, Exhaustive, search_counterexample
from tuaxioms.gamefile import (
    GameFileError,
    dump_game,
    game_to_dict,
    instance_from_dict,
    instance_to_dict,
    parse_game_file,
    parse_rational,
)

from conftest import games

W1_DOC = {
    "n": 3,
    "worth": [
        {"coalition": [1], "value": "1"},
        {"coalition": [2], "value": "1"},
        {"coalition": [3], "value": "1"},
        {"coalition": [1, 2, 3], "value": "2"},
    ],
}


def test_parse_w1_game(w1_v):
    assert parse_game_file(json.dumps(W1_DOC).encode()) == w1_v
    assert parse_game_file(W1_DOC) == w1_v


def test_empty_worth_list_is_zero_game():
    assert parse_game_file('{"n": 3, "worth": []}') == zero_game(3)


@pytest.mark.parametrize(
    "doc",
    [
        '{"n": 3, "worth": [{"coalition": [1], "value": "1/0"}]}',
        '{"n": 3, "worth": [{"coalition": [4], "value": "1"}]}',
        '{"n": 3, "worth": [{"coalition": [2, 1], "value": "1"}]}',
        '{"n": 3, "worth": [{"coalition": [1], "value": "1"}, {"coalition": [1], "value": "2"}]}',
        '{"n": 3, "worth": [{"coalition": [], "value": "1"}]}',
        '{"n": 3, "worth": [{"coalition": [1], "value": 0.5}]}',
        '{"n": 3, "worth": [{"coalition": [1], "value": "abc"}]}',
        '{"n": 0, "worth": []}',
        '{"worth": []}',
        "not json",
    ],
)
def test_malformed_documents(doc):
    with pytest.raises(GameFileError):
        parse_game_file(doc)


def test_empty_coalition_with_zero_is_allowed():
    g = parse_game_file('{"n": 2, "worth": [{"coalition": [], "value": "0"}, {"coalition": [1, 2], "value": "3"}]}')
    assert g == make_game(2, [([1, 2], 3)])


def test_parse_rational():
    assert parse_rational("-6/4") == mpq(-3, 2)
    assert parse_rational(7) == 7
    with pytest.raises(GameFileError):
        parse_rational(True)


@given(games())
def test_round_trip(v):
    assert parse_game_file(dump_game(v)) == v
    assert parse_game_file(dump_game(v, include_zeros=True)) == v
    doc = game_to_dict(v)
    assert all(isinstance(r["value"], str) for r in doc["worth"])


def test_instance_round_trip():
    ce = search_counterexample("anonymity", SolutionSpec("asym_first_player"), Exhaustive())
    assert ce.found
    d = json.loads(json.dumps(instance_to_dict(ce.instance)))
    assert instance_from_dict(d) == ce.instance
    assert isinstance(instance_from_dict(d), AxiomInstance)
