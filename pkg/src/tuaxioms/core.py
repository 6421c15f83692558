"""Exact TU-games over a fixed player set.

Worths are exact rationals (``gmpy2.mpq``) stored in a tuple indexed by
coalition bitmask: player ``i`` (1-based) lives on bit ``i - 1``.  Players are
1-based at every public entry point.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations as _permutations
from operator import add, sub
from typing import Iterable, Iterator, Mapping, Sequence

from gmpy2 import mpq

Rat = type(mpq(0))

ZERO = mpq(0)
ONE = mpq(1)

UNANIMITY = "unanimity"
CANONICAL = "canonical"
BASES = (UNANIMITY, CANONICAL)


class GameError(ValueError):
    """Raised for malformed games, coalitions, players or permutations."""


def rat(x) -> Rat:
    """Coerce an int, Fraction, mpq or ``"p/q"`` string to an exact rational.

    Floats are rejected: they would silently break exactness.
    """
    if isinstance(x, Rat):
        return x
    if isinstance(x, float):
        raise TypeError(f"refusing float {x!r}; pass an int, Fraction or 'p/q' string")
    if isinstance(x, bool):
        raise TypeError("refusing bool as a rational")
    try:
        return mpq(x)
    except ZeroDivisionError as exc:
        raise GameError(f"zero denominator in {x!r}") from exc


# ---------------------------------------------------------------------------
# coalitions

def coalition(players: Iterable[int], n: int | None = None) -> int:
    """Bitmask of a collection of 1-based players."""
    mask = 0
    for p in players:
        p = int(p)
        if p < 1 or (n is not None and p > n):
            raise GameError(f"player {p} out of range 1..{n}")
        mask |= 1 << (p - 1)
    return mask


def members(mask: int) -> tuple[int, ...]:
    """Sorted 1-based players of a coalition bitmask."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def size(mask: int) -> int:
    return bin(mask).count("1")


def grand(n: int) -> int:
    return (1 << n) - 1


def format_coalition(mask: int) -> str:
    return "{" + ",".join(map(str, members(mask))) + "}"


# ---------------------------------------------------------------------------
# games

class Game:
    """A TU-game: ``n`` players and a worth for each of the ``2**n`` coalitions.

    Instances are immutable and hashable.  Use :func:`make_game` to build one
    from a sparse list of assignments; the constructor takes the full worth
    vector and validates it.
    """

    __slots__ = ("n", "worths", "_hash")

    def __init__(self, n: int, worths: Sequence):
        if n < 1:
            raise GameError("a game needs at least one player")
        if len(worths) != 1 << n:
            raise GameError(f"expected {1 << n} worths, got {len(worths)}")
        worths = tuple(rat(x) for x in worths)
        if worths[0] != 0:
            raise GameError("the empty coalition must have worth 0")
        self.n = n
        self.worths = worths
        self._hash = None

    @classmethod
    def _raw(cls, n: int, worths: tuple) -> "Game":
        # trusted fast path: worths already a tuple of mpq with worths[0] == 0
        g = object.__new__(cls)
        g.n = n
        g.worths = worths
        g._hash = None
        return g

    def __call__(self, S) -> Rat:
        """Worth of ``S`` given as a bitmask or an iterable of players."""
        if not isinstance(S, int):
            S = coalition(S, self.n)
        return self.worths[S]

    @property
    def grand_worth(self) -> Rat:
        return self.worths[-1]

    @property
    def players(self) -> range:
        return range(1, self.n + 1)

    def __eq__(self, other):
        if not isinstance(other, Game):
            return NotImplemented
        return self.n == other.n and self.worths == other.worths

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.worths))
        return self._hash

    def __add__(self, other: "Game") -> "Game":
        _same_n(self, other)
        return Game._raw(self.n, tuple(map(add, self.worths, other.worths)))

    def __sub__(self, other: "Game") -> "Game":
        _same_n(self, other)
        return Game._raw(self.n, tuple(map(sub, self.worths, other.worths)))

    def __neg__(self) -> "Game":
        return Game._raw(self.n, tuple(-a for a in self.worths))

    def scale(self, a) -> "Game":
        a = rat(a)
        return Game._raw(self.n, tuple(a * x for x in self.worths))

    def is_zero(self) -> bool:
        return not any(self.worths)

    def items(self) -> Iterator[tuple[int, Rat]]:
        """Nonempty coalitions and their worths, in mask order."""
        return ((S, self.worths[S]) for S in range(1, 1 << self.n))

    def __repr__(self):
        body = ", ".join(f"{format_coalition(S)}: {x}" for S, x in self.items() if x != 0)
        return f"Game(n={self.n}, {{{body}}})"


def _same_n(v: Game, w: Game) -> None:
    if v.n != w.n:
        raise GameError(f"player counts differ: {v.n} vs {w.n}")


def make_game(n: int, assignments: Iterable[tuple] | Mapping = ()) -> Game:
    """Build a game from ``(coalition, worth)`` pairs; unlisted coalitions get 0.

    Coalitions may be bitmasks or iterables of 1-based players.

    >>> make_game(3, [((1,), 1), ((1, 2, 3), 2)])(7)
    mpq(2,1)
    """
    if n < 1:
        raise GameError("a game needs at least one player")
    if isinstance(assignments, Mapping):
        assignments = assignments.items()
    worths = [ZERO] * (1 << n)
    seen = set()
    for S, value in assignments:
        mask = S if isinstance(S, int) else coalition(S, n)
        if mask < 0 or mask >= 1 << n:
            raise GameError(f"coalition {S!r} out of range for n={n}")
        if mask in seen:
            raise GameError(f"duplicate coalition {format_coalition(mask)}")
        seen.add(mask)
        value = rat(value)
        if mask == 0 and value != 0:
            raise GameError("the empty coalition must have worth 0")
        worths[mask] = value
    return Game._raw(n, tuple(worths))


def zero_game(n: int) -> Game:
    return Game._raw(n, (ZERO,) * (1 << n))


def linear_combine(a, v: Game, b, w: Game) -> Game:
    """The game ``a*v + b*w``."""
    _same_n(v, w)
    a, b = rat(a), rat(b)
    return Game._raw(v.n, tuple(a * x + b * y for x, y in zip(v.worths, w.worths)))


def _basis_mask(n: int, T) -> int:
    mask = T if isinstance(T, int) else coalition(T, n)
    if mask == 0:
        raise GameError("basis games need a nonempty coalition")
    if mask >= 1 << n:
        raise GameError(f"coalition {T!r} out of range for n={n}")
    return mask


def unanimity_game(n: int, T) -> Game:
    """``u_T``: worth 1 on every superset of ``T``."""
    T = _basis_mask(n, T)
    return Game._raw(n, tuple(ONE if S & T == T else ZERO for S in range(1 << n)))


def canonical_game(n: int, T) -> Game:
    """``e_T``: worth 1 on ``T`` only."""
    T = _basis_mask(n, T)
    return Game._raw(n, tuple(ONE if S == T else ZERO for S in range(1 << n)))


# ---------------------------------------------------------------------------
# basis coordinates

@dataclass(frozen=True)
class CoefficientMap:
    """Coordinates of a game in the unanimity or canonical basis.

    ``coeff[T]`` is the coefficient of basis game ``T`` (a bitmask); index 0 is
    unused and always 0.
    """

    n: int
    basis: str
    coeff: tuple

    def __post_init__(self):
        if self.basis not in BASES:
            raise GameError(f"unknown basis {self.basis!r}")
        if len(self.coeff) != 1 << self.n:
            raise GameError("coefficient vector has the wrong length")

    def __getitem__(self, T) -> Rat:
        if not isinstance(T, int):
            T = coalition(T, self.n)
        if T == 0:
            raise KeyError("the empty coalition carries no coefficient")
        return self.coeff[T]

    def items(self) -> Iterator[tuple[int, Rat]]:
        return ((T, self.coeff[T]) for T in range(1, 1 << self.n))


def mobius(values: Sequence) -> list:
    """Subset-sum Möbius inversion, ``f(T) = sum_{S <= T} (-1)^{|T-S|} g(S)``.

    In-place sweep over the ``n`` dimensions, ``O(n 2^n)`` operations.
    """
    f = list(values)
    m = len(f)
    bit = 1
    while bit < m:
        for S in range(m):
            if S & bit:
                f[S] -= f[S ^ bit]
        bit <<= 1
    return f


def zeta(values: Sequence) -> list:
    """Inverse of :func:`mobius`: ``g(S) = sum_{T <= S} f(T)``."""
    g = list(values)
    m = len(g)
    bit = 1
    while bit < m:
        for S in range(m):
            if S & bit:
                g[S] += g[S ^ bit]
        bit <<= 1
    return g


def to_coefficients(v: Game, basis: str = UNANIMITY) -> CoefficientMap:
    """Harsanyi dividends (``unanimity``) or plain worths (``canonical``)."""
    if basis == UNANIMITY:
        coeff = mobius(v.worths)
    elif basis == CANONICAL:
        coeff = list(v.worths)
    else:
        raise GameError(f"unknown basis {basis!r}")
    return CoefficientMap(v.n, basis, tuple(coeff))


def dividends(v: Game) -> CoefficientMap:
    return to_coefficients(v, UNANIMITY)


def from_coefficients(c: CoefficientMap) -> Game:
    coeff = list(c.coeff)
    coeff[0] = ZERO
    if c.basis == UNANIMITY:
        return Game._raw(c.n, tuple(zeta(coeff)))
    return Game._raw(c.n, tuple(coeff))


def coefficients_from(n: int, basis: str, assignments) -> CoefficientMap:
    """Sparse constructor mirroring :func:`make_game` for coefficient maps."""
    g = make_game(n, assignments)
    return CoefficientMap(n, basis, g.worths)


# ---------------------------------------------------------------------------
# player classification

def _check_player(v: Game, i: int) -> int:
    if not 1 <= i <= v.n:
        raise GameError(f"player {i} out of range 1..{v.n}")
    return 1 << (i - 1)


def is_null(v: Game, i: int) -> bool:
    bit = _check_player(v, i)
    w = v.worths
    return all(w[S | bit] == w[S] for S in range(1 << v.n) if not S & bit)


def is_nullifying(v: Game, i: int) -> bool:
    bit = _check_player(v, i)
    w = v.worths
    return all(w[S | bit] == 0 for S in range(1 << v.n) if not S & bit)


def null_players(v: Game) -> frozenset:
    """Players whose marginal contribution to every coalition is zero."""
    return frozenset(i for i in v.players if is_null(v, i))


def null_players_by_dividends(v: Game) -> frozenset:
    """Null players read off the Harsanyi dividends: ``lambda_T = 0`` for all ``T`` containing ``i``."""
    lam = mobius(v.worths)
    out = []
    for i in v.players:
        bit = 1 << (i - 1)
        if all(lam[T] == 0 for T in range(1 << v.n) if T & bit):
            out.append(i)
    return frozenset(out)


def nullifying_players(v: Game) -> frozenset:
    """Players whose presence forces every coalition's worth to zero."""
    return frozenset(i for i in v.players if is_nullifying(v, i))


def symmetric_pair(v: Game, i: int, j: int) -> bool:
    """True if ``v(S+i) == v(S+j)`` for every ``S`` avoiding both players."""
    if i == j:
        raise GameError("symmetry needs two distinct players")
    bi, bj = _check_player(v, i), _check_player(v, j)
    w = v.worths
    both = bi | bj
    return all(w[S | bi] == w[S | bj] for S in range(1 << v.n) if not S & both)


def symmetric_pairs(v: Game) -> list[tuple[int, int]]:
    return [(i, j) for i in v.players for j in v.players if i < j and symmetric_pair(v, i, j)]


# ---------------------------------------------------------------------------
# permutations

class Permutation:
    """A bijection on ``1..n``, stored as the tuple of images."""

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(int(x) for x in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise GameError(f"{images!r} is not a permutation of 1..{len(images)}")
        self.images = images

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> "Permutation":
        images = list(range(1, n + 1))
        images[i - 1], images[j - 1] = j, i
        return cls(images)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def compose(self, other: "Permutation") -> "Permutation":
        """``self o other``: apply ``other`` first."""
        return Permutation(self(other(i)) for i in range(1, other.n + 1))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, p in enumerate(self.images, 1):
            inv[p - 1] = i
        return Permutation(inv)

    def apply_mask(self, mask: int) -> int:
        out = 0
        for i, p in enumerate(self.images):
            if mask >> i & 1:
                out |= 1 << (p - 1)
        return out

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation({list(self.images)})"


def all_permutations(n: int) -> Iterator[Permutation]:
    return (Permutation(p) for p in _permutations(range(1, n + 1)))


def permute_game(v: Game, pi: Permutation) -> Game:
    """The relabelled game ``pi v`` with ``(pi v)(pi(S)) = v(S)``."""
    if not isinstance(pi, Permutation):
        pi = Permutation(pi)
    if pi.n != v.n:
        raise GameError(f"permutation on {pi.n} players applied to a {v.n}-player game")
    out = [ZERO] * (1 << v.n)
    for S, x in enumerate(v.worths):
        out[pi.apply_mask(S)] = x
    return Game._raw(v.n, tuple(out))
