"""Witness games and the facts they were built to demonstrate.

Bundles live in ``data/witnesses.json`` in the game-file format.  Every fact
is re-checked through the public API only: player classification from
:mod:`tuaxioms.core`, payoffs from :func:`tuaxioms.solutions.evaluate` (or the
permutation oracle), axiom outcomes from :func:`tuaxioms.axioms.check_instance`.
Facts tagged ``computed`` carry values derived independently; ``claimed``
facts restate the qualitative claim behind the witness.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .axioms import AxiomInstance, axiom_id, check_instance
from .core import Game, coalition, is_null, is_nullifying, symmetric_pair
from .gamefile import game_from_dict, parse_rational, write_game
from .solutions import SolutionSpec, evaluate, shapley_oracle


@dataclass(frozen=True)
class WitnessBundle:
    id: str
    title: str
    games: dict
    facts: tuple
    instances: tuple

    def game(self, expr: str) -> Game:
        """A named game or a ``+``-separated sum of named games."""
        parts = [p.strip() for p in expr.split("+")]
        g = self.games[parts[0]]
        for p in parts[1:]:
            g = g + self.games[p]
        return g


@dataclass(frozen=True)
class FactResult:
    bundle: str
    index: int
    description: str
    source: str
    passed: bool
    detail: str = ""


@dataclass
class CorpusReport:
    results: list

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> list:
        return [r for r in self.results if not r.passed]

    def lines(self) -> list[str]:
        out = []
        for r in self.results:
            mark = "PASS" if r.passed else "FAIL"
            out.append(f"{mark} {r.bundle}[{r.index}] ({r.source}) {r.description}")
            if r.detail and not r.passed:
                out.append(f"     {r.detail}")
        n_ok = sum(r.passed for r in self.results)
        out.append(f"{n_ok}/{len(self.results)} facts hold")
        return out

    def to_dict(self) -> dict:
        return {
            "all_passed": self.all_passed,
            "facts": [
                {
                    "bundle": r.bundle,
                    "index": r.index,
                    "description": r.description,
                    "source": r.source,
                    "passed": r.passed,
                    "detail": r.detail,
                }
                for r in self.results
            ],
        }


@lru_cache(maxsize=None)
def _raw_data() -> dict:
    text = resources.files("tuaxioms").joinpath("data/witnesses.json").read_text()
    return json.loads(text)


def bundle_ids() -> tuple:
    return tuple(b["id"] for b in _raw_data()["bundles"])


@lru_cache(maxsize=None)
def witness(bundle_id: str) -> WitnessBundle:
    for b in _raw_data()["bundles"]:
        if b["id"] == bundle_id:
            games = {name: game_from_dict(doc) for name, doc in b["games"].items()}
            bundle = WitnessBundle(b["id"], b["title"], games, tuple(b["facts"]), ())
            instances = tuple(_instance(bundle, rec) for rec in b["instances"])
            return WitnessBundle(b["id"], b["title"], games, tuple(b["facts"]), instances)
    raise KeyError(f"unknown witness bundle {bundle_id!r}; known: {', '.join(bundle_ids())}")


def _instance(bundle: WitnessBundle, rec: dict) -> AxiomInstance:
    return AxiomInstance(
        axiom_id(rec["axiom"]),
        tuple(bundle.game(name) for name in rec["games"]),
        tuple(rec.get("players", ())),
        tuple(parse_rational(a) for a in rec.get("scalars", ())),
    )


def witness_instances(axiom: str, ids=None) -> list:
    """Corpus instances of ``axiom``, bundle by bundle in id order."""
    axiom = axiom_id(axiom)
    out = []
    for bid in ids or bundle_ids():
        out.extend(inst for inst in witness(bid).instances if inst.axiom == axiom)
    return out


def _describe(fact: dict) -> str:
    kind = fact["kind"]
    if kind in ("null", "nullifying"):
        neg = "" if fact["expect"] else "not "
        return f"player {fact['player']} is {neg}{kind} in {fact['game']}"
    if kind == "worth":
        return f"{fact['game']}({','.join(map(str, fact['coalition']))}) = {fact['value']}"
    if kind == "payoff":
        sol = SolutionSpec.from_dict(fact["solution"])
        return f"{sol.label()} gives player {fact['player']} {fact['value']} on {fact['game']}"
    if kind == "oracle_payoff":
        return f"permutation oracle gives player {fact['player']} {fact['value']} on {fact['game']}"
    if kind == "payoff_differs":
        sol = SolutionSpec.from_dict(fact["solution"])
        a, b = fact["games"]
        return f"{sol.label()} pays player {fact['player']} differently on {a} and {b}"
    if kind == "symmetric":
        i, j = fact["players"]
        return f"players {i},{j} symmetric in {fact['game']}: {fact['expect']}"
    if kind == "instance":
        sol = SolutionSpec.from_dict(fact["solution"])
        verb = "holds" if fact["expect"] else "fails"
        args = ", ".join(fact["games"] + [str(p) for p in fact["players"]])
        return f"{fact['axiom']} {verb} for {sol.label()} on ({args})"
    return kind


def check_fact(bundle: WitnessBundle, fact: dict) -> tuple[bool, str]:
    kind = fact["kind"]
    if kind == "null":
        got = is_null(bundle.game(fact["game"]), fact["player"])
        return got == fact["expect"], f"got {got}"
    if kind == "nullifying":
        got = is_nullifying(bundle.game(fact["game"]), fact["player"])
        return got == fact["expect"], f"got {got}"
    if kind == "symmetric":
        got = symmetric_pair(bundle.game(fact["game"]), *fact["players"])
        return got == fact["expect"], f"got {got}"
    if kind == "worth":
        g = bundle.game(fact["game"])
        got = g(coalition(fact["coalition"], g.n))
        return got == parse_rational(fact["value"]), f"got {got}"
    if kind == "payoff":
        sol = SolutionSpec.from_dict(fact["solution"])
        got = evaluate(sol, bundle.game(fact["game"]))[fact["player"] - 1]
        return got == parse_rational(fact["value"]), f"got {got}"
    if kind == "oracle_payoff":
        got = shapley_oracle(bundle.game(fact["game"]))[fact["player"] - 1]
        return got == parse_rational(fact["value"]), f"got {got}"
    if kind == "payoff_differs":
        sol = SolutionSpec.from_dict(fact["solution"])
        a, b = (evaluate(sol, bundle.game(e))[fact["player"] - 1] for e in fact["games"])
        return a != b, f"got {a} and {b}"
    if kind == "instance":
        sol = SolutionSpec.from_dict(fact["solution"])
        inst = AxiomInstance(
            axiom_id(fact["axiom"]),
            tuple(bundle.game(e) for e in fact["games"]),
            tuple(fact["players"]),
            tuple(parse_rational(a) for a in fact.get("scalars", ())),
        )
        out = check_instance(inst.axiom, sol, inst)
        return out.holds == fact["expect"], f"lhs {out.lhs} {out.relation} rhs {out.rhs}: {out.holds}"
    raise ValueError(f"unknown fact kind {kind!r}")


def run_all_witnesses(ids=None) -> CorpusReport:
    results = []
    for bid in ids or bundle_ids():
        bundle = witness(bid)
        for k, fact in enumerate(bundle.facts):
            try:
                ok, detail = check_fact(bundle, fact)
            except Exception as exc:  # a broken fact is a failed fact, not a crash
                ok, detail = False, f"{type(exc).__name__}: {exc}"
            results.append(FactResult(bid, k, _describe(fact), fact["source"], ok, detail))
    return CorpusReport(results)


def export_bundle(bundle_id: str, directory) -> list[Path]:
    """Write each game of a bundle as ``<id>_<name>.json`` in the game-file format."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    out = []
    for name, g in witness(bundle_id).games.items():
        path = directory / f"{bundle_id}_{name}.json"
        write_game(g, path, include_zeros=True)
        out.append(path)
    return out
