"""JSON game files and serialization of instances and verdicts.

A game file looks like::

    {"n": 3,
     "worth": [{"coalition": [1], "value": "1"},
               {"coalition": [1, 2, 3], "value": "2"}]}

Values are integer or ``"p/q"`` strings; unlisted coalitions are worth 0.
Rationals are always written as strings so nothing passes through a float.
"""

from __future__ import annotations

import json
import re
from pathlib import Path

from gmpy2 import mpq

from .core import Game, GameError, Permutation, coalition, make_game, members, size

SCHEMA_VERSION = 1

_RATIONAL = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


class GameFileError(GameError):
    pass


def parse_rational(text) -> mpq:
    """Parse ``"p"`` or ``"p/q"``; JSON integers are accepted as well."""
    if isinstance(text, bool) or isinstance(text, float):
        raise GameFileError(f"rationals must be strings or integers, got {text!r}")
    if isinstance(text, int):
        return mpq(text)
    m = _RATIONAL.match(str(text))
    if not m:
        raise GameFileError(f"malformed rational {text!r}")
    num, den = int(m.group(1)), int(m.group(2) or 1)
    if den == 0:
        raise GameFileError(f"zero denominator in {text!r}")
    return mpq(num, den)


def value_to_json(x):
    if isinstance(x, (tuple, list)):
        return [str(mpq(a)) for a in x]
    return str(mpq(x))


def game_from_dict(doc: dict) -> Game:
    if not isinstance(doc, dict) or "n" not in doc:
        raise GameFileError("game document needs an 'n' field")
    n = doc["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise GameFileError(f"n must be a positive integer, got {n!r}")
    records = doc.get("worth", [])
    if not isinstance(records, list):
        raise GameFileError("'worth' must be a list")
    assignments = []
    for rec in records:
        try:
            players, value = rec["coalition"], rec["value"]
        except (TypeError, KeyError):
            raise GameFileError(f"worth record needs 'coalition' and 'value': {rec!r}") from None
        if not isinstance(players, list) or any(
            not isinstance(p, int) or isinstance(p, bool) for p in players
        ):
            raise GameFileError(f"coalition must be a list of player numbers: {players!r}")
        if any(b <= a for a, b in zip(players, players[1:])):
            raise GameFileError(f"coalition must be strictly increasing: {players!r}")
        if any(not 1 <= p <= n for p in players):
            raise GameFileError(f"player out of range 1..{n} in {players!r}")
        assignments.append((coalition(players, n), parse_rational(value)))
    try:
        return make_game(n, assignments)
    except GameFileError:
        raise
    except GameError as exc:
        raise GameFileError(str(exc)) from None


def parse_game_file(data) -> Game:
    """Parse a game document from bytes, text or an already-decoded dict."""
    if isinstance(data, dict):
        return game_from_dict(data)
    if isinstance(data, (bytes, bytearray)):
        data = data.decode("utf-8")
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise GameFileError(f"not valid JSON: {exc}") from None
    return game_from_dict(doc)


def game_to_dict(v: Game, include_zeros: bool = False) -> dict:
    order = sorted(range(1, 1 << v.n), key=lambda S: (size(S), members(S)))
    worth = [
        {"coalition": list(members(S)), "value": str(v.worths[S])}
        for S in order
        if include_zeros or v.worths[S] != 0
    ]
    return {"n": v.n, "worth": worth}


def dump_game(v: Game, include_zeros: bool = False) -> str:
    return json.dumps(game_to_dict(v, include_zeros), indent=2)


def read_game(path) -> Game:
    return parse_game_file(Path(path).read_bytes())


def write_game(v: Game, path, include_zeros: bool = False) -> None:
    Path(path).write_text(dump_game(v, include_zeros) + "\n")


def instance_to_dict(inst) -> dict:
    d = {
        "axiom": inst.axiom,
        "games": [game_to_dict(g) for g in inst.games],
        "players": list(inst.players),
        "scalars": [str(a) for a in inst.scalars],
    }
    if inst.permutation is not None:
        d["permutation"] = list(inst.permutation.images)
    return d


def instance_from_dict(d: dict):
    from .axioms import AxiomInstance

    perm = d.get("permutation")
    return AxiomInstance(
        d["axiom"],
        tuple(game_from_dict(g) for g in d["games"]),
        tuple(d.get("players", ())),
        tuple(parse_rational(a) for a in d.get("scalars", ())),
        Permutation(perm) if perm is not None else None,
    )
