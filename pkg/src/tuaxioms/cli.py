"""Command-line entry point: ``tuaxioms <verb> [flags]``.

Exit status is 0 on success or a pass, 1 when a counterexample or a
separating game is found (or a corpus fact fails), 2 on usage errors.
``--format json`` emits one document with a ``schema_version`` field.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import corpus
from .axioms import (
    AXIOM_IDS,
    DEFAULT_GRID,
    DEFAULT_MAX_CANDIDATES,
    ALIASES,
    Exhaustive,
    Random,
    Witnesses,
    axiom_id,
    check_instance,
    describe,
    search_counterexample,
)
from .characterize import fit_alpha, verify_family_membership
from .core import (
    BASES,
    Game,
    GameError,
    dividends,
    format_coalition,
    members,
    null_players,
    nullifying_players,
    symmetric_pairs,
    to_coefficients,
)
from .gamefile import (
    SCHEMA_VERSION,
    instance_from_dict,
    parse_rational,
    read_game,
    value_to_json,
)
from .solutions import SOLUTION_IDS, SolutionSpec, evaluate

EXIT_OK, EXIT_FOUND, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# formatting

def fmt_vector(x) -> str:
    return "(" + ", ".join(str(a) for a in x) + ")"


def fmt_set(players) -> str:
    return "{" + ",".join(str(p) for p in sorted(players)) + "}"


def game_label(v: Game) -> str:
    """``u_{T}`` for a unanimity game, otherwise the nonzero worths."""
    c = dividends(v)
    support = [T for T in range(1, 1 << v.n) if c.coeff[T] != 0]
    if not support:
        return "0"
    if len(support) == 1 and c.coeff[support[0]] == 1:
        return f"u_{fmt_set(members(support[0]))}"
    parts = [f"v{format_coalition(S)}={v.worths[S]}" for S in range(1, 1 << v.n) if v.worths[S] != 0]
    return "[" + ", ".join(parts) + "]"


def instance_lines(inst) -> list[str]:
    out = [f"  axiom: {inst.axiom}"]
    for k, g in enumerate(inst.games, 1):
        out.append(f"  game {k}: {game_label(g)}")
    if inst.players:
        out.append(f"  players: {', '.join(map(str, inst.players))}")
    if inst.scalars:
        out.append(f"  scalars: {', '.join(map(str, inst.scalars))}")
    if inst.permutation is not None:
        out.append(f"  permutation: {list(inst.permutation.images)}")
    return out


def emit(args, doc: dict, lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps({"schema_version": SCHEMA_VERSION, "command": args.verb, **doc}, indent=2))
    else:
        print("\n".join(lines))


# ---------------------------------------------------------------------------
# argument helpers

def _solution(args) -> SolutionSpec:
    param = None
    if args.solution == "egalitarian":
        if args.alpha is None:
            raise UsageError("--solution egalitarian needs --alpha")
        param = parse_rational(args.alpha)
    elif args.alpha is not None:
        raise UsageError("--alpha only applies to --solution egalitarian")
    if args.solution == "vi_plus_a":
        param = parse_rational(args.a) if args.a is not None else None
    elif getattr(args, "a", None) is not None:
        raise UsageError("--a only applies to --solution vi_plus_a")
    return SolutionSpec(args.solution, param)


def _grid(text: str) -> tuple:
    items = [t for t in text.split(",") if t.strip()]
    if not items:
        raise UsageError("--grid needs at least one value")
    return tuple(parse_rational(t) for t in items)


def _max_candidates(text: str):
    if text.lower() == "none":
        return None
    try:
        k = int(text)
    except ValueError:
        raise UsageError(f"--max-candidates must be a positive integer or 'none', got {text!r}") from None
    if k <= 0:
        raise UsageError("--max-candidates must be positive")
    return k


def _axiom(text: str) -> str:
    try:
        return axiom_id(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


# ---------------------------------------------------------------------------
# verbs

def cmd_compute(args) -> int:
    spec = _solution(args)
    v = read_game(args.game)
    x = evaluate(spec, v)
    emit(args, {"solution": spec.to_dict(), "payoff": value_to_json(x)}, [fmt_vector(x)])
    return EXIT_OK


def cmd_dividends(args) -> int:
    v = read_game(args.game)
    c = to_coefficients(v, args.basis)
    rows = [(T, c.coeff[T]) for T in range(1, 1 << v.n)]
    doc = {
        "basis": args.basis,
        "n": v.n,
        "coefficients": [{"coalition": list(members(T)), "value": str(x)} for T, x in rows],
    }
    lines = [f"{args.basis} coefficients"] + [f"  {format_coalition(T):12s} {x}" for T, x in rows if x != 0]
    if len(lines) == 1:
        lines.append("  (all zero)")
    emit(args, doc, lines)
    return EXIT_OK


def cmd_classify(args) -> int:
    v = read_game(args.game)
    np_, nf = sorted(null_players(v)), sorted(nullifying_players(v))
    pairs = symmetric_pairs(v)
    doc = {"null_players": np_, "nullifying_players": nf, "symmetric_pairs": [list(p) for p in pairs]}
    lines = [
        f"null players:       {fmt_set(np_)}",
        f"nullifying players: {fmt_set(nf)}",
        "symmetric pairs:    " + (", ".join(f"({i},{j})" for i, j in pairs) or "none"),
    ]
    emit(args, doc, lines)
    return EXIT_OK


def _strategy(args):
    if args.mode == "exhaustive":
        if args.trials is not None or args.seed is not None:
            raise UsageError("--trials/--seed apply to --mode random only")
        grid = _grid(args.grid) if args.grid else DEFAULT_GRID
        return Exhaustive(grid, args.n or 3, _max_candidates(args.max_candidates))
    if args.grid or args.max_candidates != str(DEFAULT_MAX_CANDIDATES):
        raise UsageError("--grid/--max-candidates apply to --mode exhaustive only")
    if args.mode == "random":
        return Random(args.n or 3, args.trials or 1000, args.seed or 0)
    if args.n or args.trials is not None or args.seed is not None:
        raise UsageError("--mode witnesses takes no --n/--trials/--seed")
    return Witnesses()


def _replay(args, spec: SolutionSpec) -> int:
    try:
        doc = json.loads(Path(args.replay).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read replay file: {exc}") from None
    # accept a full check report, a bare verdict, or a bare instance
    if "verdict" in doc:
        doc = doc["verdict"]
    if "instance" in doc:
        doc = doc["instance"]
    try:
        inst = instance_from_dict(doc)
    except (KeyError, TypeError) as exc:
        raise UsageError(f"replay file has no axiom instance: {exc}") from None
    if args.axiom is not None and _axiom(args.axiom) != inst.axiom:
        raise UsageError(f"replay instance is for {inst.axiom}, not {_axiom(args.axiom)}")
    out = check_instance(inst.axiom, spec, inst)
    doc = {
        "solution": spec.to_dict(),
        "axiom": inst.axiom,
        "replay": {"holds": out.holds, "lhs": value_to_json(out.lhs), "rhs": value_to_json(out.rhs),
                   "relation": out.relation},
    }
    verdict = "holds" if out.holds else "FAILS"
    lines = [f"replayed {inst.axiom} for {spec.label()}: {verdict}",
             f"  lhs={_show(out.lhs)} {out.relation} rhs={_show(out.rhs)}"]
    emit(args, doc, lines + instance_lines(inst))
    return EXIT_OK if out.holds else EXIT_FOUND


def _show(x) -> str:
    return fmt_vector(x) if isinstance(x, tuple) else str(x)


def cmd_check(args) -> int:
    spec = _solution(args)
    if args.replay:
        return _replay(args, spec)
    if args.axiom is None:
        raise UsageError("check needs --axiom (or --replay FILE)")
    axiom = _axiom(args.axiom)
    strategy = _strategy(args)
    v = search_counterexample(axiom, spec, strategy)
    doc = {"solution": spec.to_dict(), "axiom": axiom, "strategy": strategy.to_dict(), "verdict": v.to_dict()}
    lines = [f"{axiom} for {spec.label()}: {describe(v)}"]
    if v.found:
        lines += instance_lines(v.instance)
    emit(args, doc, lines)
    return EXIT_FOUND if v.found else EXIT_OK


def cmd_fit(args) -> int:
    spec = _solution(args)
    if args.n < 3:
        raise UsageError("fit needs --n >= 3")
    fit = fit_alpha(spec, args.n)
    m = verify_family_membership(spec, args.n, args.trials, args.seed)
    doc = {"solution": spec.to_dict(), "n": args.n, "fit": fit.to_dict(), "membership": m.to_dict()}
    if fit.consistent:
        lines = [f"alpha = {fit.alpha} (null-player payoff on u_{{1}} is {fit.eta})"]
    else:
        lines = [
            f"inconsistent: fitted alpha = {fit.alpha}, but on u_{fmt_set(members(fit.coalition))} "
            f"player {fit.player} gets {fit.actual}, the family gives {fit.expected}"
        ]
    if m.member:
        lines.append(f"in family for {m.trials} random games ({m.note})")
    else:
        lines.append(f"NOT in family ({m.phase} phase): on {game_label(m.witness)}")
        lines.append(f"  solution gives {fmt_vector(m.actual)}, alpha={m.alpha} member gives {fmt_vector(m.expected)}")
    emit(args, doc, lines)
    return EXIT_OK if m.member else EXIT_FOUND


def cmd_corpus(args) -> int:
    if not args.run_all and not args.export:
        raise UsageError("corpus needs --run-all and/or --export DIR")
    doc, lines, status = {}, [], EXIT_OK
    if args.export:
        paths = [str(p) for bid in corpus.bundle_ids() for p in corpus.export_bundle(bid, args.export)]
        doc["exported"] = paths
        lines.append(f"exported {len(paths)} game files to {args.export}")
    if args.run_all:
        report = corpus.run_all_witnesses()
        doc["report"] = report.to_dict()
        lines += report.lines()
        status = EXIT_OK if report.all_passed else EXIT_FOUND
    emit(args, doc, lines)
    return status


# ---------------------------------------------------------------------------
# parser

def _axiom_help() -> str:
    short = ", ".join(f"{k}={v}" for k, v in sorted(ALIASES.items()))
    return f"axiom id ({', '.join(AXIOM_IDS)}) or alias ({short})"


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("plain", "json"), default="plain", help="report format")

    sol = argparse.ArgumentParser(add_help=False)
    sol.add_argument("--solution", required=True, choices=SOLUTION_IDS)
    sol.add_argument("--alpha", help="egalitarian parameter, e.g. 1/2")
    sol.add_argument("--a", help="constant for vi_plus_a (default 1)")

    p = argparse.ArgumentParser(prog="tuaxioms", description="Exact TU-game solutions and axiom checks.")
    sub = p.add_subparsers(dest="verb", required=True)

    c = sub.add_parser("compute", parents=[fmt, sol], help="payoff vector of a solution on a game file")
    c.add_argument("--game", required=True, type=Path)
    c.set_defaults(func=cmd_compute)

    d = sub.add_parser("dividends", parents=[fmt], help="basis coefficients of a game")
    d.add_argument("--game", required=True, type=Path)
    d.add_argument("--basis", choices=BASES, default="unanimity")
    d.set_defaults(func=cmd_dividends)

    k = sub.add_parser("classify", parents=[fmt], help="null, nullifying and symmetric players")
    k.add_argument("--game", required=True, type=Path)
    k.set_defaults(func=cmd_classify)

    ch = sub.add_parser("check", parents=[fmt, sol], help="search for an axiom counterexample")
    ch.add_argument("--axiom", help=_axiom_help())
    ch.add_argument("--mode", choices=("exhaustive", "random", "witnesses"), default="exhaustive")
    ch.add_argument("--grid", help="comma-separated rationals, default -1,0,1,2")
    ch.add_argument("--n", type=int)
    ch.add_argument("--trials", type=int)
    ch.add_argument("--seed", type=int)
    ch.add_argument("--max-candidates", default=str(DEFAULT_MAX_CANDIDATES),
                    help="cap on exhaustive candidates, or 'none'")
    ch.add_argument("--replay", type=Path, help="re-check an instance from a JSON check report")
    ch.set_defaults(func=cmd_check)

    f = sub.add_parser("fit", parents=[fmt, sol], help="fit alpha and test family membership")
    f.add_argument("--n", type=int, required=True)
    f.add_argument("--trials", type=int, default=500)
    f.add_argument("--seed", type=int, default=0)
    f.set_defaults(func=cmd_fit)

    co = sub.add_parser("corpus", parents=[fmt], help="witness corpus regression")
    co.add_argument("--run-all", action="store_true")
    co.add_argument("--export", type=Path, metavar="DIR", help="write every bundle game as a game file")
    co.set_defaults(func=cmd_corpus)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, GameError, ValueError, OSError) as exc:
        print(f"tuaxioms {args.verb}: error: {exc}", file=sys.stderr)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
