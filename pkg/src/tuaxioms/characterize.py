"""Desk checks of the egalitarian-Shapley and equal-division characterizations.

:func:`fit_alpha` recovers the family parameter of a solution from its
payoffs on unanimity games: the common payoff ``eta`` of a null player fixes
``alpha = n * eta``, after which every unanimity payoff is pinned down.
:func:`verify_family_membership` then checks the identity
``phi = alpha * ED + (1 - alpha) * Sh`` on seeded random games.  A pass is
evidence within the trial budget, not a proof.

:func:`implication_crosscheck` compares axiom verdicts against three
implications that hold for every solution:

* P1: linearity and null player in a productive environment give null
  player neutrality;
* P2: nullifying player neutrality and coalitional standard equivalence
  agree;
* P3: under linearity, the nullifying player property and nullifying
  player neutrality agree.

Verdicts come from finite searches, so a "violation" here means the search
code is wrong, not that the implication fails.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .axioms import (
    COALITIONAL_STANDARD_EQUIVALENCE,
    LINEARITY,
    NULL_PLAYER_NEUTRALITY,
    NULL_PLAYER_PRODUCTIVE_ENVIRONMENT,
    NULLIFYING_PLAYER_NEUTRALITY,
    NULLIFYING_PLAYER_PROPERTY,
    Exhaustive,
    _rng,
    random_game,
    search_counterexample,
)
from .core import Game, members, unanimity_game
from .solutions import SolutionSpec, egalitarian_shapley, evaluate

MIN_PLAYERS = 3


def _require_n(n: int) -> None:
    if n < MIN_PLAYERS:
        raise ValueError(f"the characterization checks assume n >= {MIN_PLAYERS}, got {n}")


@dataclass(frozen=True)
class ConsistentFit:
    alpha: object
    eta: object
    kind: str = field(default="consistent_fit", init=False)

    @property
    def consistent(self) -> bool:
        return True

    def to_dict(self) -> dict:
        return {"outcome": self.kind, "alpha": str(self.alpha), "eta": str(self.eta)}


@dataclass(frozen=True)
class Inconsistent:
    """First unanimity payoff that contradicts the fitted ``alpha``."""

    alpha: object
    eta: object
    coalition: int
    player: int
    expected: object
    actual: object
    kind: str = field(default="inconsistent", init=False)

    @property
    def consistent(self) -> bool:
        return False

    def to_dict(self) -> dict:
        return {
            "outcome": self.kind,
            "alpha": str(self.alpha),
            "eta": str(self.eta),
            "coalition": list(members(self.coalition)),
            "player": self.player,
            "expected": str(self.expected),
            "actual": str(self.actual),
        }


FitResult = ConsistentFit | Inconsistent


def unanimity_payoff(alpha, n: int, t: int, inside: bool):
    """Family payoff on ``u_T`` with ``|T| = t``: ``alpha/n``, plus ``(1 - alpha)/t`` inside ``T``."""
    out = alpha / n
    if inside:
        out += (1 - alpha) / t
    return out


def fit_alpha(solution: SolutionSpec, n: int) -> FitResult:
    """Fit ``alpha`` from the payoff of player ``n`` on ``u_{1}``, then check every ``u_T``.

    For each ``T`` the players outside ``T`` are checked before those inside,
    so a solution that treats null players inconsistently is reported at a
    null player.
    """
    _require_n(n)
    eta = evaluate(solution, unanimity_game(n, 1))[n - 1]
    alpha = n * eta
    for T in range(1, 1 << n):
        phi = evaluate(solution, unanimity_game(n, T))
        t = bin(T).count("1")
        outside = [i for i in range(1, n + 1) if not T >> (i - 1) & 1]
        inside = [i for i in range(1, n + 1) if T >> (i - 1) & 1]
        for i in outside + inside:
            expected = unanimity_payoff(alpha, n, t, i in inside)
            if phi[i - 1] != expected:
                return Inconsistent(alpha, eta, T, i, expected, phi[i - 1])
    return ConsistentFit(alpha, eta)


@dataclass(frozen=True)
class InFamily:
    alpha: object
    trials: int
    kind: str = field(default="in_family", init=False)
    note: str = field(default="evidence within the trial budget, not a proof", init=False)

    @property
    def member(self) -> bool:
        return True

    def to_dict(self) -> dict:
        return {"outcome": self.kind, "alpha": str(self.alpha), "trials": self.trials, "note": self.note}


@dataclass(frozen=True)
class NotInFamily:
    """A game on which the solution differs from the family member at ``alpha``."""

    alpha: object
    witness: Game
    expected: tuple
    actual: tuple
    phase: str
    kind: str = field(default="not_in_family", init=False)

    @property
    def member(self) -> bool:
        return False

    def recheck(self, solution: SolutionSpec) -> bool:
        """True if the witness still separates the solution from the family."""
        family = egalitarian_shapley(self.alpha, self.witness)
        return family == self.expected and evaluate(solution, self.witness) != family

    def to_dict(self) -> dict:
        from .gamefile import game_to_dict, value_to_json

        return {
            "outcome": self.kind,
            "alpha": str(self.alpha),
            "phase": self.phase,
            "witness": game_to_dict(self.witness),
            "expected": value_to_json(self.expected),
            "actual": value_to_json(self.actual),
        }


MembershipVerdict = InFamily | NotInFamily


def verify_family_membership(solution: SolutionSpec, n: int, trials: int = 500, seed: int = 0) -> MembershipVerdict:
    """Fit ``alpha`` on unanimity games, then test the family identity on random games."""
    _require_n(n)
    if trials <= 0:
        raise ValueError("trials must be positive")
    fit = fit_alpha(solution, n)
    if not fit.consistent:
        g = unanimity_game(n, fit.coalition)
        return NotInFamily(fit.alpha, g, egalitarian_shapley(fit.alpha, g), evaluate(solution, g), "fit")
    alpha = fit.alpha
    rng = _rng(seed)
    for _ in range(trials):
        g = random_game(rng, n)
        expected = egalitarian_shapley(alpha, g)
        actual = evaluate(solution, g)
        if actual != expected:
            return NotInFamily(alpha, g, expected, actual, "random")
    return InFamily(alpha, trials)


# ---------------------------------------------------------------------------
# implication cross-checks

CROSSCHECK_AXIOMS = (
    LINEARITY,
    NULL_PLAYER_PRODUCTIVE_ENVIRONMENT,
    NULL_PLAYER_NEUTRALITY,
    NULLIFYING_PLAYER_PROPERTY,
    NULLIFYING_PLAYER_NEUTRALITY,
    COALITIONAL_STANDARD_EQUIVALENCE,
)


@dataclass(frozen=True)
class ImplicationCheck:
    name: str
    applies: bool
    consistent: bool
    explanation: str


@dataclass
class CrosscheckReport:
    solution: SolutionSpec
    verdicts: dict
    checks: list

    @property
    def consistent(self) -> bool:
        return all(c.consistent for c in self.checks)

    def lines(self) -> list[str]:
        out = [f"solution {self.solution.label()}"]
        for ax, v in self.verdicts.items():
            out.append(f"  {ax:36s} {'counterexample' if v.found else v.kind}")
        for c in self.checks:
            status = "ok" if c.consistent else "VIOLATION (search bug)"
            out.append(f"  {c.name}: {status}; {c.explanation}")
        return out

    def to_dict(self) -> dict:
        return {
            "solution": self.solution.to_dict(),
            "verdicts": {ax: v.to_dict() for ax, v in self.verdicts.items()},
            "checks": [
                {"name": c.name, "applies": c.applies, "consistent": c.consistent, "explanation": c.explanation}
                for c in self.checks
            ],
            "consistent": self.consistent,
        }


def implication_crosscheck(solution: SolutionSpec, strategy=None) -> CrosscheckReport:
    """Run the six relevant searches and test the three implications on their verdicts.

    "Passes" below means the search found no counterexample (a full pass or
    an exhausted budget).
    """
    strategy = Exhaustive() if strategy is None else strategy
    verdicts = {ax: search_counterexample(ax, solution, strategy) for ax in CROSSCHECK_AXIOMS}
    ok = {ax: not v.found for ax, v in verdicts.items()}

    linear = ok[LINEARITY]
    p1_applies = linear and ok[NULL_PLAYER_PRODUCTIVE_ENVIRONMENT]
    p1 = ImplicationCheck(
        "P1 linearity + productive-environment => null player neutrality",
        p1_applies,
        not p1_applies or ok[NULL_PLAYER_NEUTRALITY],
        "hypotheses hold, conclusion " + ("holds" if ok[NULL_PLAYER_NEUTRALITY] else "FAILS")
        if p1_applies
        else "vacuous: a hypothesis fails",
    )
    same = ok[NULLIFYING_PLAYER_NEUTRALITY] == ok[COALITIONAL_STANDARD_EQUIVALENCE]
    p2 = ImplicationCheck(
        "P2 nullifying player neutrality <=> coalitional standard equivalence",
        True,
        same,
        "verdicts agree" if same else "verdicts DIFFER",
    )
    same3 = ok[NULLIFYING_PLAYER_PROPERTY] == ok[NULLIFYING_PLAYER_NEUTRALITY]
    p3 = ImplicationCheck(
        "P3 under linearity: nullifying player property <=> nullifying player neutrality",
        linear,
        not linear or same3,
        ("verdicts agree" if same3 else "verdicts DIFFER") if linear else "vacuous: linearity fails",
    )
    return CrosscheckReport(solution, verdicts, [p1, p2, p3])
