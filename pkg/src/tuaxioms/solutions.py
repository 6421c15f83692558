"""Solution concepts: exact maps from a game to a payoff vector.

A payoff vector is a tuple of ``mpq`` of length ``n``; player ``i`` reads
``payoff[i - 1]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial
from operator import mul

from gmpy2 import mpq

from .core import ZERO, Game, GameError, mobius, null_players, nullifying_players, rat, size

ORACLE_MAX_PLAYERS = 8


@lru_cache(maxsize=None)
def _shapley_coefficients(n: int) -> tuple:
    """Per player ``i``, the coefficient of each worth ``v(S)`` in ``Sh_i(v)``.

    Expanding ``sum_{S ni i} c_s (v(S) - v(S - i))`` with
    ``c_s = (s-1)!(n-s)!/n!`` gives ``+c_s`` on coalitions containing ``i``
    and ``-c_{s+1}`` on the others.
    """
    nf = factorial(n)
    c = [None] + [mpq(factorial(s - 1) * factorial(n - s), nf) for s in range(1, n + 1)]
    out = []
    for i in range(n):
        bit = 1 << i
        row = [ZERO] * (1 << n)
        for S in range(1 << n):
            row[S] = c[size(S)] if S & bit else -c[size(S) + 1]
        row[0] = -c[1]
        out.append(tuple(row))
    return tuple(out)


def shapley(v: Game) -> tuple:
    """Shapley value by the weighted marginal-contribution formula."""
    w = v.worths
    return tuple(sum(map(mul, row, w), ZERO) for row in _shapley_coefficients(v.n))


def shapley_dividends(v: Game) -> tuple:
    """Shapley value as each player's share ``lambda_T / |T|`` of the dividends."""
    lam = mobius(v.worths)
    out = [ZERO] * v.n
    for T in range(1, 1 << v.n):
        if lam[T]:
            share = lam[T] / size(T)
            for i in range(v.n):
                if T >> i & 1:
                    out[i] += share
    return tuple(out)


def shapley_oracle(v: Game) -> tuple:
    """Shapley value by literal enumeration of all ``n!`` arrival orders."""
    from itertools import permutations

    n = v.n
    if n > ORACLE_MAX_PLAYERS:
        raise ValueError(f"permutation oracle limited to n <= {ORACLE_MAX_PLAYERS}, got {n}")
    w = v.worths
    totals = [0] * n
    count = 0
    for order in permutations(range(n)):
        S = 0
        for i in order:
            totals[i] += w[S | 1 << i] - w[S]
            S |= 1 << i
        count += 1
    return tuple(mpq(t) / count for t in totals)


def equal_division(v: Game) -> tuple:
    share = v.worths[-1] / v.n
    return (share,) * v.n


def egalitarian_shapley(alpha, v: Game) -> tuple:
    """``alpha * ED(v) + (1 - alpha) * Sh(v)`` for any rational ``alpha``."""
    alpha = rat(alpha)
    ed = v.worths[-1] / v.n
    beta = 1 - alpha
    return tuple(alpha * ed + beta * x for x in shapley(v))


def _singles(v: Game) -> list:
    return [v.worths[1 << i] for i in range(v.n)]


def equal_surplus_division(v: Game) -> tuple:
    singles = _singles(v)
    surplus = (v.worths[-1] - sum(singles, ZERO)) / v.n
    return tuple(x + surplus for x in singles)


def phi1(v: Game) -> tuple:
    """Proportional-to-singletons rule; null players get 0 when singletons sum to 0."""
    singles = _singles(v)
    total = sum(singles, ZERO)
    top = v.worths[-1]
    if total != 0:
        return tuple(x * top / total for x in singles)
    nulls = null_players(v)
    if len(nulls) == v.n:
        # every player null forces v == 0, so branch 2 covers everyone
        assert v.is_zero()
        return (ZERO,) * v.n
    share = top / (v.n - len(nulls))
    return tuple(ZERO if i in nulls else share for i in v.players)


def _constant_on_nonempty(v: Game) -> bool:
    w = v.worths
    first = w[1]
    return all(x == first for x in w[2:])


def phi2(v: Game) -> tuple:
    """Nullifying players get 0; otherwise ED on constant games, Shapley elsewhere."""
    nf = nullifying_players(v)
    if nf:
        share = v.worths[-1] / (v.n - len(nf)) if len(nf) < v.n else ZERO
        return tuple(ZERO if i in nf else share for i in v.players)
    if _constant_on_nonempty(v):
        return equal_division(v)
    return shapley(v)


def zero_solution(v: Game) -> tuple:
    return (ZERO,) * v.n


def asym_first_player(v: Game) -> tuple:
    """Player 1 gets nothing; the others split ``v(N)`` equally."""
    if v.n < 2:
        raise GameError("the asymmetric solution needs at least two players")
    share = v.worths[-1] / (v.n - 1)
    return (ZERO,) + (share,) * (v.n - 1)


def max_v1(v: Game) -> tuple:
    x = v.worths[1]
    return (x if x > 0 else ZERO,) * v.n


def vi_plus_a(a, v: Game) -> tuple:
    a = rat(a)
    if a == 0:
        raise ValueError("vi_plus_a needs a nonzero constant")
    return tuple(x + a for x in _singles(v))


# ---------------------------------------------------------------------------
# catalog

SOLUTION_IDS = (
    "shapley",
    "equal_division",
    "egalitarian",
    "equal_surplus_division",
    "phi1",
    "phi2",
    "zero",
    "asym_first_player",
    "max_v1",
    "vi_plus_a",
)

_PLAIN = {
    "shapley": shapley,
    "equal_division": equal_division,
    "equal_surplus_division": equal_surplus_division,
    "phi1": phi1,
    "phi2": phi2,
    "zero": zero_solution,
    "asym_first_player": asym_first_player,
    "max_v1": max_v1,
}


@dataclass(frozen=True)
class SolutionSpec:
    """A catalog entry plus its parameter.

    ``param`` is ``alpha`` for ``egalitarian`` and ``a`` for ``vi_plus_a``
    (default 1); it is ``None`` for every other solution.
    """

    id: str
    param: object = field(default=None)

    def __post_init__(self):
        if self.id not in SOLUTION_IDS:
            raise ValueError(f"unknown solution {self.id!r}")
        if self.id == "egalitarian":
            if self.param is None:
                raise ValueError("egalitarian needs alpha")
            object.__setattr__(self, "param", rat(self.param))
        elif self.id == "vi_plus_a":
            a = rat(1 if self.param is None else self.param)
            if a == 0:
                raise ValueError("vi_plus_a needs a nonzero constant")
            object.__setattr__(self, "param", a)
        elif self.param is not None:
            raise ValueError(f"{self.id} takes no parameter")

    @classmethod
    def egalitarian(cls, alpha) -> "SolutionSpec":
        return cls("egalitarian", alpha)

    def __call__(self, v: Game) -> tuple:
        return evaluate(self, v)

    def label(self) -> str:
        if self.id == "egalitarian":
            return f"egalitarian(alpha={self.param})"
        if self.id == "vi_plus_a":
            return f"vi_plus_a(a={self.param})"
        return self.id

    def to_dict(self) -> dict:
        d = {"id": self.id}
        if self.param is not None:
            d["param"] = str(self.param)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "SolutionSpec":
        return cls(d["id"], d.get("param"))

    def __str__(self):
        return self.label()


def evaluate(spec: SolutionSpec, v: Game) -> tuple:
    if spec.id == "egalitarian":
        return egalitarian_shapley(spec.param, v)
    if spec.id == "vi_plus_a":
        return vi_plus_a(spec.param, v)
    return _PLAIN[spec.id](v)


def catalog(alphas=(-1, mpq(1, 2), 3), a=1) -> list[SolutionSpec]:
    """Every solution in the catalog, with egalitarian expanded over ``alphas``."""
    out = []
    for sid in SOLUTION_IDS:
        if sid == "egalitarian":
            out.extend(SolutionSpec("egalitarian", x) for x in alphas)
        elif sid == "vi_plus_a":
            out.append(SolutionSpec("vi_plus_a", a))
        else:
            out.append(SolutionSpec(sid))
    return out

