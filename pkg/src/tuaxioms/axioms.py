"""Axioms as decidable instance predicates, instance generators and search.

Every axiom is universally quantified over games, players and scalars.  An
:class:`AxiomInstance` fixes one choice of those variables; :func:`instance_holds`
decides the axiom's equation (or inequality) on it exactly.

:func:`search_counterexample` walks instances according to a strategy:

* :class:`Exhaustive` enumerates every admissible instance built from games
  whose nonempty-coalition worths range over a finite grid, in a fixed order,
  up to ``max_candidates`` candidates (``None`` for no cap).
* :class:`Random` draws seeded instances from :func:`generate_instance`.
* :class:`Witnesses` replays the instances stored in the witness corpus.

A :class:`Passed` verdict only means no counterexample exists in the explored
domain.  A capped exhaustive run that stops early returns
:class:`BudgetExhausted` instead.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterator, Sequence

import numpy as np
from gmpy2 import mpq

from .core import (
    ZERO,
    Game,
    Permutation,
    all_permutations,
    is_null,
    is_nullifying,
    permute_game,
    rat,
    symmetric_pair,
    zeta,
)
from .solutions import SolutionSpec, evaluate

EFFICIENCY = "efficiency"
ADDITIVITY = "additivity"
LINEARITY = "linearity"
SYMMETRY = "symmetry"
ANONYMITY = "anonymity"
NULL_PLAYER_PROPERTY = "null_player_property"
COALITIONAL_STRATEGIC_EQUIVALENCE = "coalitional_strategic_equivalence"
NULL_PLAYER_NEUTRALITY = "null_player_neutrality"
NULL_PLAYER_PRODUCTIVE_ENVIRONMENT = "null_player_productive_environment"
WEAK_MONOTONICITY = "weak_monotonicity"
NULLIFYING_PLAYER_PROPERTY = "nullifying_player_property"
COALITIONAL_STANDARD_EQUIVALENCE = "coalitional_standard_equivalence"
NULLIFYING_PLAYER_NEUTRALITY = "nullifying_player_neutrality"

# axiom -> (number of games, number of players, number of scalars, uses a permutation)
SHAPES = {
    EFFICIENCY: (1, 0, 0, False),
    ADDITIVITY: (2, 0, 0, False),
    LINEARITY: (2, 0, 2, False),
    SYMMETRY: (1, 2, 0, False),
    ANONYMITY: (1, 1, 0, True),
    NULL_PLAYER_PROPERTY: (1, 1, 0, False),
    COALITIONAL_STRATEGIC_EQUIVALENCE: (2, 1, 0, False),
    NULL_PLAYER_NEUTRALITY: (3, 1, 0, False),
    NULL_PLAYER_PRODUCTIVE_ENVIRONMENT: (1, 1, 0, False),
    WEAK_MONOTONICITY: (2, 1, 0, False),
    NULLIFYING_PLAYER_PROPERTY: (1, 1, 0, False),
    COALITIONAL_STANDARD_EQUIVALENCE: (2, 1, 0, False),
    NULLIFYING_PLAYER_NEUTRALITY: (3, 1, 0, False),
}
AXIOM_IDS = tuple(SHAPES)

ALIASES = {
    "npp": NULL_PLAYER_PROPERTY,
    "cse": COALITIONAL_STRATEGIC_EQUIVALENCE,
    "npn": NULL_PLAYER_NEUTRALITY,
    "nppe": NULL_PLAYER_PRODUCTIVE_ENVIRONMENT,
    "nfpp": NULLIFYING_PLAYER_PROPERTY,
    "nfpn": NULLIFYING_PLAYER_NEUTRALITY,
}

INEQUALITY_AXIOMS = frozenset({NULL_PLAYER_PRODUCTIVE_ENVIRONMENT, WEAK_MONOTONICITY})

LINEAR_SCALARS = tuple(mpq(x) for x in ("1", "-1", "2", "-2", "1/2", "-1/2", "3/2", "-3/2"))
DEFAULT_GRID = tuple(mpq(x) for x in (-1, 0, 1, 2))
DEFAULT_MAX_CANDIDATES = 200_000


class InstanceError(ValueError):
    """An instance does not match its axiom's shape or preconditions."""


def axiom_id(name: str) -> str:
    key = name.strip().lower().replace("-", "_")
    key = ALIASES.get(key, key)
    if key not in SHAPES:
        raise ValueError(f"unknown axiom {name!r}")
    return key


# ---------------------------------------------------------------------------
# instances

@dataclass(frozen=True)
class AxiomInstance:
    """The quantified variables of one axiom check.

    ``games`` is ``(v,)``, ``(v, w)`` or ``(v, w, u)``; ``players`` holds
    ``i`` (and ``j`` for symmetry); ``scalars`` holds ``a, b`` for linearity.
    Shape and preconditions are validated on construction.
    """

    axiom: str
    games: tuple
    players: tuple = ()
    scalars: tuple = ()
    permutation: Permutation | None = None

    def __post_init__(self):
        try:
            object.__setattr__(self, "axiom", axiom_id(self.axiom))
        except ValueError as exc:
            raise InstanceError(str(exc)) from None
        object.__setattr__(self, "games", tuple(self.games))
        object.__setattr__(self, "players", tuple(int(p) for p in self.players))
        object.__setattr__(self, "scalars", tuple(rat(a) for a in self.scalars))
        if self.permutation is not None and not isinstance(self.permutation, Permutation):
            object.__setattr__(self, "permutation", Permutation(self.permutation))
        validate_instance(self)

    @classmethod
    def _trusted(cls, axiom, games, players=(), scalars=(), permutation=None) -> "AxiomInstance":
        inst = object.__new__(cls)
        object.__setattr__(inst, "axiom", axiom)
        object.__setattr__(inst, "games", tuple(games))
        object.__setattr__(inst, "players", tuple(players))
        object.__setattr__(inst, "scalars", tuple(scalars))
        object.__setattr__(inst, "permutation", permutation)
        return inst

    @property
    def n(self) -> int:
        return self.games[0].n


def validate_instance(inst: AxiomInstance) -> None:
    if inst.axiom not in SHAPES:
        raise InstanceError(f"unknown axiom {inst.axiom!r}")
    n_games, n_players, n_scalars, uses_perm = SHAPES[inst.axiom]
    if len(inst.games) != n_games or len(inst.players) != n_players or len(inst.scalars) != n_scalars:
        raise InstanceError(
            f"{inst.axiom} expects {n_games} games, {n_players} players, {n_scalars} scalars; "
            f"got {len(inst.games)}, {len(inst.players)}, {len(inst.scalars)}"
        )
    if uses_perm != (inst.permutation is not None):
        raise InstanceError(f"{inst.axiom} {'needs' if uses_perm else 'takes no'} permutation")
    n = inst.games[0].n
    if any(g.n != n for g in inst.games):
        raise InstanceError("games have different player counts")
    if any(not 1 <= p <= n for p in inst.players):
        raise InstanceError(f"player out of range 1..{n}")
    if uses_perm and inst.permutation.n != n:
        raise InstanceError("permutation size does not match the games")
    if not _admissible(inst.axiom, inst.games, inst.players):
        raise InstanceError(f"instance violates the preconditions of {inst.axiom}")


def _admissible(axiom: str, games: Sequence[Game], players: Sequence[int]) -> bool:
    if axiom == SYMMETRY:
        i, j = players
        return i != j and symmetric_pair(games[0], i, j)
    if axiom == NULL_PLAYER_PROPERTY:
        return is_null(games[0], players[0])
    if axiom == NULL_PLAYER_PRODUCTIVE_ENVIRONMENT:
        return games[0].grand_worth >= 0 and is_null(games[0], players[0])
    if axiom == COALITIONAL_STRATEGIC_EQUIVALENCE:
        return is_null(games[1], players[0])
    if axiom == NULL_PLAYER_NEUTRALITY:
        _, w, u = games
        i = players[0]
        return w.grand_worth == u.grand_worth and is_null(w, i) and is_null(u, i)
    if axiom == WEAK_MONOTONICITY:
        return dominates(games[0], games[1], players[0])
    if axiom == NULLIFYING_PLAYER_PROPERTY:
        return is_nullifying(games[0], players[0])
    if axiom == COALITIONAL_STANDARD_EQUIVALENCE:
        return is_nullifying(games[1], players[0])
    if axiom == NULLIFYING_PLAYER_NEUTRALITY:
        _, w, u = games
        i = players[0]
        return w.grand_worth == u.grand_worth and is_nullifying(w, i) and is_nullifying(u, i)
    return True


def dominates(v: Game, w: Game, i: int) -> bool:
    """``v(N) >= w(N)`` and ``i``'s marginal contributions in ``v`` dominate those in ``w``."""
    if v.grand_worth < w.grand_worth:
        return False
    bit = 1 << (i - 1)
    a, b = v.worths, w.worths
    return all(a[S | bit] - a[S] >= b[S | bit] - b[S] for S in range(1 << v.n) if not S & bit)


# ---------------------------------------------------------------------------
# predicates

@dataclass(frozen=True)
class Outcome:
    holds: bool
    lhs: object
    rhs: object
    relation: str = "=="


def _vec_add(x, y):
    return tuple(a + b for a, b in zip(x, y))


def _plus(v: Game, w: Game) -> Game:
    return v + w


def _predicate(axiom: str, phi: Callable, games, players, scalars, perm, plus=_plus) -> Outcome:
    v = games[0]
    if axiom == EFFICIENCY:
        lhs, rhs = sum(phi(v), ZERO), v.grand_worth
    elif axiom == ADDITIVITY:
        lhs, rhs = phi(plus(v, games[1])), _vec_add(phi(v), phi(games[1]))
    elif axiom == LINEARITY:
        w = games[1]
        a, b = scalars
        combined = Game._raw(v.n, tuple(a * x + b * y for x, y in zip(v.worths, w.worths)))
        lhs = phi(combined)
        rhs = tuple(a * x + b * y for x, y in zip(phi(v), phi(w)))
    elif axiom == SYMMETRY:
        i, j = players
        p = phi(v)
        lhs, rhs = p[i - 1], p[j - 1]
    elif axiom == ANONYMITY:
        i = players[0]
        lhs, rhs = phi(v)[i - 1], phi(permute_game(v, perm))[perm(i) - 1]
    elif axiom in (NULL_PLAYER_PROPERTY, NULLIFYING_PLAYER_PROPERTY):
        lhs, rhs = phi(v)[players[0] - 1], ZERO
    elif axiom in (COALITIONAL_STRATEGIC_EQUIVALENCE, COALITIONAL_STANDARD_EQUIVALENCE):
        i = players[0]
        lhs, rhs = phi(plus(v, games[1]))[i - 1], phi(v)[i - 1]
    elif axiom in (NULL_PLAYER_NEUTRALITY, NULLIFYING_PLAYER_NEUTRALITY):
        i = players[0]
        lhs, rhs = phi(plus(v, games[1]))[i - 1], phi(plus(v, games[2]))[i - 1]
    elif axiom == NULL_PLAYER_PRODUCTIVE_ENVIRONMENT:
        return _ge(phi(v)[players[0] - 1], ZERO)
    elif axiom == WEAK_MONOTONICITY:
        i = players[0]
        return _ge(phi(v)[i - 1], phi(games[1])[i - 1])
    else:
        raise InstanceError(f"unknown axiom {axiom!r}")
    return Outcome(lhs == rhs, lhs, rhs)


def _ge(lhs, rhs) -> Outcome:
    return Outcome(lhs >= rhs, lhs, rhs, ">=")


def check_instance(axiom: str, solution: SolutionSpec, instance: AxiomInstance) -> Outcome:
    """Evaluate the axiom on ``instance`` and return both sides."""
    axiom = axiom_id(axiom)
    if instance.axiom != axiom:
        raise InstanceError(f"instance was built for {instance.axiom}, not {axiom}")
    return _predicate(
        axiom,
        lambda g: evaluate(solution, g),
        instance.games,
        instance.players,
        instance.scalars,
        instance.permutation,
    )


def instance_holds(axiom: str, solution: SolutionSpec, instance: AxiomInstance) -> bool:
    return check_instance(axiom, solution, instance).holds


# ---------------------------------------------------------------------------
# random sampling

def _rng(seed) -> np.random.Generator:
    return np.random.default_rng(int(seed) & (2**64 - 1))


_DENOMS = (1, 1, 1, 2, 3)


def random_rational(rng: np.random.Generator, lo: int = -4, hi: int = 4) -> mpq:
    return mpq(int(rng.integers(lo, hi + 1)), _DENOMS[int(rng.integers(len(_DENOMS)))])


def random_nonnegative(rng: np.random.Generator) -> mpq:
    return random_rational(rng, 0, 4)


def random_worths(rng: np.random.Generator, m: int, sparsity: float = 0.0) -> list:
    out = []
    for _ in range(m):
        if sparsity and rng.random() < sparsity:
            out.append(ZERO)
        else:
            out.append(random_rational(rng))
    return out


def random_dense_game(rng: np.random.Generator, n: int) -> Game:
    return Game._raw(n, (ZERO, *random_worths(rng, (1 << n) - 1)))


def _extend_null(n: int, i: int, sub: Sequence) -> Game:
    """Lift worths on subsets of ``N - {i}`` (indexed by compressed mask) so ``i`` is null."""
    return Game._raw(n, tuple(sub[_drop_bit(S, i)] for S in range(1 << n)))


def _extend_nullifying(n: int, i: int, sub: Sequence) -> Game:
    bit = 1 << (i - 1)
    return Game._raw(n, tuple(ZERO if S & bit else sub[_drop_bit(S, i)] for S in range(1 << n)))


def _drop_bit(S: int, i: int) -> int:
    """Compress mask ``S`` by deleting bit ``i - 1``."""
    low = S & ((1 << (i - 1)) - 1)
    return low | (S >> i) << (i - 1)


def random_null_game(rng, n: int, i: int) -> Game:
    return _extend_null(n, i, (ZERO, *random_worths(rng, (1 << (n - 1)) - 1)))


def random_nullifying_game(rng, n: int, i: int) -> Game:
    return _extend_nullifying(n, i, (ZERO, *random_worths(rng, (1 << (n - 1)) - 1)))


STRUCTURES = ("dense", "sparse", "null", "nullifying", "constant", "symmetric", "unanimity")


def random_game(rng: np.random.Generator, n: int, structure: str | None = None) -> Game:
    """A seeded random game; ``structure=None`` picks one of :data:`STRUCTURES` at random.

    Structured draws matter: rules that branch on nullifying players or
    constant games are indistinguishable from Shapley on dense draws.
    """
    if structure is None:
        structure = STRUCTURES[int(rng.integers(len(STRUCTURES)))]
    m = (1 << n) - 1
    if structure == "dense":
        return random_dense_game(rng, n)
    if structure == "sparse":
        return Game._raw(n, (ZERO, *random_worths(rng, m, sparsity=0.7)))
    if structure == "null":
        return random_null_game(rng, n, int(rng.integers(1, n + 1)))
    if structure == "nullifying":
        return random_nullifying_game(rng, n, int(rng.integers(1, n + 1)))
    if structure == "constant":
        c = random_rational(rng)
        return Game._raw(n, (ZERO,) + (c,) * m)
    if structure == "symmetric":
        by_size = [ZERO] + random_worths(rng, n)
        return Game._raw(n, tuple(by_size[bin(S).count("1")] for S in range(1 << n)))
    if structure == "unanimity":
        lam = [ZERO] * (1 << n)
        for _ in range(int(rng.integers(1, 4))):
            lam[int(rng.integers(1, m + 1))] += random_rational(rng)
        return Game._raw(n, tuple(zeta(lam)))
    raise ValueError(f"unknown structure {structure!r}")


def _random_pair(rng, n: int) -> tuple[int, int]:
    i, j = rng.choice(np.arange(1, n + 1), size=2, replace=False)
    return int(i), int(j)


def generate_instance(axiom: str, n: int, seed: int) -> AxiomInstance:
    """A random admissible instance of ``axiom`` on ``n`` players, deterministic in the seed.

    Preconditions are met by construction: null players come from extending a
    game on ``N - {i}``, nullifying players from zeroing every coalition that
    contains ``i``, symmetric pairs from ``v'(S) + v'(tau S)`` with ``tau`` the
    transposition, and weak-monotonicity pairs from a nonnegative increment.
    """
    axiom = axiom_id(axiom)
    if n < 2:
        raise InstanceError(f"generating {axiom} instances needs n >= 2, got {n}")
    rng = _rng(seed)
    i = int(rng.integers(1, n + 1))
    if axiom == EFFICIENCY:
        return AxiomInstance._trusted(axiom, (random_game(rng, n),))
    if axiom == ADDITIVITY:
        return AxiomInstance._trusted(axiom, (random_game(rng, n), random_game(rng, n)))
    if axiom == LINEARITY:
        a, b = (LINEAR_SCALARS[int(k)] for k in rng.integers(len(LINEAR_SCALARS), size=2))
        return AxiomInstance._trusted(axiom, (random_game(rng, n), random_game(rng, n)), (), (a, b))
    if axiom == SYMMETRY:
        i, j = _random_pair(rng, n)
        base = random_dense_game(rng, n)
        tau = Permutation.transposition(n, i, j)
        v = base + permute_game(base, tau)
        return AxiomInstance._trusted(axiom, (v,), (min(i, j), max(i, j)))
    if axiom == ANONYMITY:
        pi = Permutation(int(x) for x in rng.permutation(np.arange(1, n + 1)))
        return AxiomInstance._trusted(axiom, (random_game(rng, n),), (i,), (), pi)
    if axiom in (NULL_PLAYER_PROPERTY, NULL_PLAYER_PRODUCTIVE_ENVIRONMENT):
        v = random_null_game(rng, n, i)
        if axiom == NULL_PLAYER_PRODUCTIVE_ENVIRONMENT and v.grand_worth < 0:
            v = -v
        return AxiomInstance._trusted(axiom, (v,), (i,))
    if axiom == COALITIONAL_STRATEGIC_EQUIVALENCE:
        return AxiomInstance._trusted(axiom, (random_game(rng, n), random_null_game(rng, n, i)), (i,))
    if axiom == NULL_PLAYER_NEUTRALITY:
        v = random_game(rng, n)
        top = (1 << (n - 1)) - 1
        c = random_rational(rng)
        subs = []
        for _ in range(2):
            sub = [ZERO, *random_worths(rng, top)]
            sub[top] = c
            subs.append(_extend_null(n, i, sub))
        return AxiomInstance._trusted(axiom, (v, *subs), (i,))
    if axiom == WEAK_MONOTONICITY:
        w = random_game(rng, n)
        bit = 1 << (i - 1)
        g = [ZERO] * (1 << n)
        for S in range(1 << n):
            if not S & bit:
                if S:
                    g[S] = random_nonnegative(rng)
                g[S | bit] = g[S] + random_nonnegative(rng)
        v = w + Game._raw(n, tuple(g))
        return AxiomInstance._trusted(axiom, (v, w), (i,))
    if axiom == NULLIFYING_PLAYER_PROPERTY:
        return AxiomInstance._trusted(axiom, (random_nullifying_game(rng, n, i),), (i,))
    if axiom == COALITIONAL_STANDARD_EQUIVALENCE:
        return AxiomInstance._trusted(
            axiom, (random_game(rng, n), random_nullifying_game(rng, n, i)), (i,)
        )
    if axiom == NULLIFYING_PLAYER_NEUTRALITY:
        v = random_game(rng, n)
        return AxiomInstance._trusted(
            axiom, (v, random_nullifying_game(rng, n, i), random_nullifying_game(rng, n, i)), (i,)
        )
    raise InstanceError(f"no generator for {axiom}")


# ---------------------------------------------------------------------------
# strategies and verdicts

@dataclass(frozen=True)
class Exhaustive:
    """Every admissible instance over games with nonempty worths drawn from ``grid``.

    ``max_candidates`` caps the number of candidate instances examined
    (admissible or not); ``None`` removes the cap.
    """

    grid: tuple = DEFAULT_GRID
    n: int = 3
    max_candidates: int | None = DEFAULT_MAX_CANDIDATES

    def __post_init__(self):
        grid = tuple(sorted({rat(x) for x in self.grid}, key=_grid_key))
        if not grid:
            raise ValueError("exhaustive grid must be nonempty")
        if self.n < 2:
            raise ValueError("exhaustive search needs n >= 2")
        if self.max_candidates is not None and self.max_candidates <= 0:
            raise ValueError("max_candidates must be positive")
        object.__setattr__(self, "grid", grid)

    def to_dict(self) -> dict:
        return {
            "mode": "exhaustive",
            "grid": [str(x) for x in self.grid],
            "n": self.n,
            "max_candidates": self.max_candidates,
        }


@dataclass(frozen=True)
class Random:
    n: int = 3
    trials: int = 1000
    seed: int = 0

    def __post_init__(self):
        if self.trials <= 0:
            raise ValueError("trials must be positive")
        if self.n < 2:
            raise ValueError("random search needs n >= 2")

    def to_dict(self) -> dict:
        return {"mode": "random", "n": self.n, "trials": self.trials, "seed": self.seed}


@dataclass(frozen=True)
class Witnesses:
    """Replay corpus instances; ``ids=None`` means every bundle."""

    ids: tuple | None = None

    def to_dict(self) -> dict:
        return {"mode": "witnesses", "ids": None if self.ids is None else list(self.ids)}


def _grid_key(x):
    # zero first, then by magnitude, positive before negative
    return (abs(x), x < 0)


@dataclass(frozen=True)
class Passed:
    instances_checked: int
    kind: str = field(default="passed", init=False)

    @property
    def found(self) -> bool:
        return False

    def to_dict(self) -> dict:
        return {"outcome": self.kind, "instances_checked": self.instances_checked}


@dataclass(frozen=True)
class BudgetExhausted:
    """The cap was reached before the domain was covered; no counterexample seen."""

    instances_checked: int
    candidates_examined: int
    kind: str = field(default="budget_exhausted", init=False)

    @property
    def found(self) -> bool:
        return False

    def to_dict(self) -> dict:
        return {
            "outcome": self.kind,
            "instances_checked": self.instances_checked,
            "candidates_examined": self.candidates_examined,
        }


@dataclass(frozen=True)
class Counterexample:
    instance: AxiomInstance
    lhs: object
    rhs: object
    relation: str = "=="
    index: int = 0
    kind: str = field(default="counterexample", init=False)

    @property
    def found(self) -> bool:
        return True

    def to_dict(self) -> dict:
        from .gamefile import instance_to_dict, value_to_json

        return {
            "outcome": self.kind,
            "index": self.index,
            "relation": self.relation,
            "lhs": value_to_json(self.lhs),
            "rhs": value_to_json(self.rhs),
            "instance": instance_to_dict(self.instance),
        }


Verdict = Passed | BudgetExhausted | Counterexample


# ---------------------------------------------------------------------------
# exhaustive enumeration

class _GameFamily:
    """Indexable family of games whose free worths range over a grid.

    ``free`` lists the compressed masks that take grid values; ``lift`` turns a
    compressed worth vector into a game.  Families small enough to cache are
    listed simplest first: by the largest grid position used, then by the
    number of nonzero worths, then lexicographically.  Sparse games with a
    single nonzero worth on any coalition therefore come early.  Larger
    families fall back to a mixed-radix decode with the first free coalition
    varying fastest.
    """

    def __init__(self, grid, width: int, lift: Callable, cache_limit: int = 1 << 17):
        self.grid = grid
        self.width = width
        self.base = len(grid)
        self.size = self.base ** (width - 1) if width > 1 else 1
        self.lift = lift
        if self.size <= cache_limit:
            self._cache = [None] * self.size
            self._order = sorted(
                product(range(self.base), repeat=width - 1),
                key=lambda d: (max(d, default=0), sum(x != 0 for x in d), d),
            )
        else:
            self._cache = self._order = None

    def __len__(self):
        return self.size

    def digits_to_game(self, digits) -> Game:
        return self.lift((ZERO, *(self.grid[d] for d in digits)))

    def __getitem__(self, k: int) -> Game:
        if self._cache is not None:
            g = self._cache[k]
            if g is None:
                g = self._cache[k] = self.digits_to_game(self._order[k])
            return g
        return self.digits_to_game(self._digits(k))

    def _digits(self, k: int) -> list:
        out = [0] * (self.width - 1)
        for pos in range(self.width - 1):
            k, out[pos] = divmod(k, self.base)
        return out


def _all_games(grid, n) -> _GameFamily:
    return _GameFamily(grid, 1 << n, lambda w: Game._raw(n, w))


def _null_family(grid, n, i) -> _GameFamily:
    return _GameFamily(grid, 1 << (n - 1), lambda sub: _extend_null(n, i, sub))


def _nullifying_family(grid, n, i) -> _GameFamily:
    return _GameFamily(grid, 1 << (n - 1), lambda sub: _extend_nullifying(n, i, sub))


def shell_order(sizes: Sequence[int]) -> Iterator[tuple]:
    """Index tuples over ``range(s)`` for each size, by growing boxes.

    All tuples with maximum coordinate ``m`` are listed before any with
    ``m + 1``, so every prefix of the order covers a full box ``[0, m)^k``
    before moving on.  Within a shell the order is lexicographic.
    """
    k = len(sizes)
    if k == 0 or min(sizes) == 0:
        return
    if k == 1:
        yield from ((x,) for x in range(sizes[0]))
        return
    top = max(sizes)
    for m in range(top):
        # p is the first coordinate equal to m; earlier ones are < m
        for p in range(k):
            if sizes[p] <= m:
                continue
            before = [range(min(m, s)) for s in sizes[:p]]
            after = [range(min(m + 1, s)) for s in sizes[p + 1:]]
            for head in product(*before):
                for tail in product(*after):
                    yield (*head, m, *tail)


class _Memo:
    """Bounded memo of a solution's payoff vectors keyed by game identity.

    Games are kept alive by the table, so an ``id`` is never reused while its
    entry exists.  Hashing ``mpq`` tuples costs as much as evaluating a
    small game, hence identity rather than equality.
    """

    def __init__(self, solution: SolutionSpec, limit: int = 100_000):
        self.solution = solution
        self.limit = limit
        self.table = {}

    def __call__(self, g: Game):
        t = self.table
        hit = t.get(id(g))
        if hit is not None:
            return hit[1]
        if len(t) >= self.limit:
            t.clear()
        out = evaluate(self.solution, g)
        t[id(g)] = (g, out)
        return out


class _SumCache:
    """Reuse ``v + g`` objects when ``g`` is one of a few pinned games.

    The neutrality searches add the same representative game to every ``v``
    once per augmenting game; returning the same object lets :class:`_Memo`
    hit.
    """

    def __init__(self, limit: int = 100_000):
        self.pinned = set()
        self.keep = []
        self.limit = limit
        self.table = {}

    def pin(self, games) -> None:
        for g in games:
            self.keep.append(g)
            self.pinned.add(id(g))

    def __call__(self, v: Game, g: Game) -> Game:
        if id(g) not in self.pinned:
            return v + g
        key = (id(v), id(g))
        hit = self.table.get(key)
        if hit is not None:
            return hit[1]
        if len(self.table) >= self.limit:
            self.table.clear()
        out = v + g
        self.table[key] = (v, out)
        return out


def _candidates(axiom: str, grid, n: int, sums: _SumCache | None = None) -> Iterator:
    """Yield ``(games, players, scalars, perm)`` or ``None`` for an inadmissible candidate."""
    players = range(1, n + 1)
    if axiom in (EFFICIENCY, SYMMETRY, ADDITIVITY, LINEARITY, ANONYMITY, WEAK_MONOTONICITY):
        games = _all_games(grid, n)
    if axiom == EFFICIENCY:
        for (k,) in shell_order([len(games)]):
            yield (games[k],), (), (), None
    elif axiom == SYMMETRY:
        pairs = [(i, j) for i in players for j in players if i < j]
        for (k,) in shell_order([len(games)]):
            v = games[k]
            for i, j in pairs:
                yield ((v,), (i, j), (), None) if symmetric_pair(v, i, j) else None
    elif axiom == ADDITIVITY:
        for k, l in shell_order([len(games)] * 2):
            yield (games[k], games[l]), (), (), None
    elif axiom == LINEARITY:
        s = len(LINEAR_SCALARS)
        for k, l, x, y in shell_order([len(games), len(games), s, s]):
            yield (games[k], games[l]), (), (LINEAR_SCALARS[x], LINEAR_SCALARS[y]), None
    elif axiom == ANONYMITY:
        perms = list(all_permutations(n))
        for k, p in shell_order([len(games), len(perms)]):
            for i in players:
                yield (games[k],), (i,), (), perms[p]
    elif axiom == WEAK_MONOTONICITY:
        for k, l in shell_order([len(games)] * 2):
            v, w = games[k], games[l]
            for i in players:
                yield ((v, w), (i,), (), None) if dominates(v, w, i) else None
    elif axiom in (NULL_PLAYER_PROPERTY, NULL_PLAYER_PRODUCTIVE_ENVIRONMENT, NULLIFYING_PLAYER_PROPERTY):
        make = _nullifying_family if axiom == NULLIFYING_PLAYER_PROPERTY else _null_family
        fams = {i: make(grid, n, i) for i in players}
        need_nonneg = axiom == NULL_PLAYER_PRODUCTIVE_ENVIRONMENT
        for (k,) in shell_order([len(fams[1])]):
            for i in players:
                v = fams[i][k]
                yield None if need_nonneg and v.grand_worth < 0 else ((v,), (i,), (), None)
    elif axiom in (
        COALITIONAL_STRATEGIC_EQUIVALENCE,
        COALITIONAL_STANDARD_EQUIVALENCE,
        NULL_PLAYER_NEUTRALITY,
        NULLIFYING_PLAYER_NEUTRALITY,
    ):
        nullifying = axiom in (COALITIONAL_STANDARD_EQUIVALENCE, NULLIFYING_PLAYER_NEUTRALITY)
        neutral = axiom in (NULL_PLAYER_NEUTRALITY, NULLIFYING_PLAYER_NEUTRALITY)
        make = _nullifying_family if nullifying else _null_family
        games = _all_games(grid, n)
        fams = {i: make(grid, n, i) for i in players}
        reps = {i: _representatives(fams[i]) for i in players} if neutral else None
        if neutral and sums is not None:
            sums.pin(g for r in reps.values() for g in r.values())
        for k, l in shell_order([len(games), len(fams[1])]):
            v = games[k]
            for i in players:
                w = fams[i][l]
                if neutral:
                    yield (v, w, reps[i][w.grand_worth]), (i,), (), None
                else:
                    yield (v, w), (i,), (), None
    else:
        raise InstanceError(f"no enumeration for {axiom}")


def _representatives(family: _GameFamily) -> dict:
    """One game of the family per attainable grand worth.

    The representative is the sparsest one: every free worth 0 except the one
    that fixes the grand worth.  Comparing every ``w`` against the representative of its grand-worth class
    decides the neutrality axioms over all pairs ``(w, u)``, since equality
    is transitive.
    """
    reps = {}
    # the grand worth of a null/nullifying lift is fixed by one free digit
    # (the last one) or is identically 0
    for d in range(family.base):
        digits = [0] * (family.width - 1)
        digits[-1] = d
        g = family.digits_to_game(digits)
        reps.setdefault(g.grand_worth, g)
    return reps


def _run(axiom, items, phi, cap, plus=_plus) -> Verdict:
    checked = 0
    examined = 0
    for item in items:
        if cap is not None and examined >= cap:
            return BudgetExhausted(checked, examined)
        examined += 1
        if item is None:
            continue
        games, players, scalars, perm = item
        out = _predicate(axiom, phi, games, players, scalars, perm, plus)
        checked += 1
        if not out.holds:
            inst = AxiomInstance._trusted(axiom, games, players, scalars, perm)
            return Counterexample(inst, out.lhs, out.rhs, out.relation, examined - 1)
    return Passed(checked)


def search_counterexample(axiom: str, solution: SolutionSpec, strategy) -> Verdict:
    """First counterexample in the strategy's deterministic order, else a pass verdict."""
    axiom = axiom_id(axiom)
    if isinstance(strategy, Exhaustive):
        phi = _Memo(solution)
        sums = _SumCache()
        items = _candidates(axiom, strategy.grid, strategy.n, sums)
        return _run(axiom, items, phi, strategy.max_candidates, sums)
    if isinstance(strategy, Random):
        seeds = _rng(strategy.seed).integers(0, 2**63 - 1, size=strategy.trials, dtype=np.int64)
        items = (
            (inst.games, inst.players, inst.scalars, inst.permutation)
            for inst in (generate_instance(axiom, strategy.n, int(s)) for s in seeds)
        )
        return _run(axiom, items, lambda g: evaluate(solution, g), None)
    if isinstance(strategy, Witnesses):
        from .corpus import witness_instances

        items = (
            (inst.games, inst.players, inst.scalars, inst.permutation)
            for inst in witness_instances(axiom, strategy.ids)
        )
        return _run(axiom, items, lambda g: evaluate(solution, g), None)
    raise TypeError(f"unknown search strategy {strategy!r}")


# ---------------------------------------------------------------------------
# reports

@dataclass
class AxiomReport:
    solution: SolutionSpec
    strategy: object
    verdicts: dict

    def failed(self) -> list[str]:
        return [ax for ax, v in self.verdicts.items() if v.found]

    def passed(self) -> list[str]:
        return [ax for ax, v in self.verdicts.items() if not v.found]

    def to_dict(self) -> dict:
        return {
            "solution": self.solution.to_dict(),
            "strategy": self.strategy.to_dict(),
            "verdicts": {ax: v.to_dict() for ax, v in self.verdicts.items()},
        }

    def lines(self) -> list[str]:
        out = [f"solution {self.solution.label()}"]
        for ax, v in self.verdicts.items():
            out.append(f"  {ax:36s} {describe(v)}")
        return out


def describe(v: Verdict) -> str:
    if isinstance(v, Passed):
        return f"passed ({v.instances_checked} instances)"
    if isinstance(v, BudgetExhausted):
        return f"no counterexample within budget ({v.instances_checked} instances, cap reached)"
    return f"COUNTEREXAMPLE lhs={_fmt(v.lhs)} rhs={_fmt(v.rhs)} ({v.relation} fails)"


def _fmt(x) -> str:
    if isinstance(x, tuple):
        return "(" + ", ".join(str(a) for a in x) + ")"
    return str(x)


def axiom_report(solution: SolutionSpec, axioms: Sequence[str] = AXIOM_IDS, strategy=None) -> AxiomReport:
    strategy = Exhaustive() if strategy is None else strategy
    verdicts = {}
    for ax in axioms:
        ax = axiom_id(ax)
        verdicts[ax] = search_counterexample(ax, solution, strategy)
    return AxiomReport(solution, strategy, verdicts)
