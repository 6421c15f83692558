import pytest
from gmpy2 import mpq
from hypothesis import given, strategies as st

from tuaxioms import (
    Game,
    GameError,
    Permutation,
    canonical_game,
    coalition,
    from_coefficients,
    linear_combine,
    make_game,
    null_players,
    nullifying_players,
    permute_game,
    rat,
    symmetric_pair,
    to_coefficients,
    unanimity_game,
    zero_game,
)
from tuaxioms.core import (
    all_permutations,
    dividends,
    format_coalition,
    is_null,
    members,
    mobius,
    null_players_by_dividends,
    symmetric_pairs,
    zeta,
)

from conftest import brute_mobius, games


def test_rat_rejects_floats_and_bools():
    assert rat(3) == 3 and rat("2/4") == mpq(1, 2)
    for bad in (0.5, True):
        with pytest.raises(TypeError):
            rat(bad)
    with pytest.raises(GameError):
        rat("1/0")


def test_coalition_round_trip():
    assert coalition([1, 3], 3) == 0b101
    assert members(0b101) == (1, 3)
    assert format_coalition(0b110) == "{2,3}"
    with pytest.raises(GameError):
        coalition([4], 3)


def test_game_validation():
    with pytest.raises(GameError):
        Game(2, [0, 1, 2])
    with pytest.raises(GameError):
        Game(1, [1, 0])
    with pytest.raises(GameError):
        Game(0, [0])


def test_make_game_sparse(w1_v):
    v = make_game(3, [([1], 1), ([2], 1), ([3], 1), ([1, 2, 3], 2)])
    assert v == w1_v
    assert v([1, 2]) == 0 and v(0b111) == 2
    assert make_game(3, {(1, 2): "1/2"})([1, 2]) == mpq(1, 2)
    with pytest.raises(GameError):
        make_game(3, [([1], 1), ([1], 2)])
    with pytest.raises(GameError):
        make_game(3, [([], 1)])


def test_basis_games():
    u = unanimity_game(3, [1, 2])
    assert [u(S) for S in range(8)] == [0, 0, 0, 1, 0, 0, 0, 1]
    e = canonical_game(3, [1, 2])
    assert [e(S) for S in range(8)] == [0, 0, 0, 1, 0, 0, 0, 0]
    with pytest.raises(GameError):
        unanimity_game(3, [])


def test_w1_dividends(w1_v):
    lam = dividends(w1_v)
    assert [lam[[i]] for i in (1, 2, 3)] == [1, 1, 1]
    assert [lam[p] for p in ([1, 2], [1, 3], [2, 3])] == [-2, -2, -2]
    assert lam[[1, 2, 3]] == 5
    with pytest.raises(KeyError):
        lam[0]


@given(games())
def test_mobius_matches_definition(v):
    assert mobius(v.worths) == brute_mobius(v)


@given(games())
def test_basis_round_trip(v):
    for basis in ("unanimity", "canonical"):
        assert from_coefficients(to_coefficients(v, basis)) == v
    assert zeta(mobius(v.worths)) == list(v.worths)


@given(games(), games())
def test_dividends_are_linear(v, w):
    if v.n != w.n:
        return
    lhs = dividends(linear_combine(2, v, -3, w)).coeff
    rhs = tuple(2 * a - 3 * b for a, b in zip(dividends(v).coeff, dividends(w).coeff))
    assert lhs == rhs


@given(games())
def test_null_detection_agrees_with_dividends(v):
    assert null_players(v) == null_players_by_dividends(v)


def test_null_and_nullifying():
    u = unanimity_game(3, [1])
    assert null_players(u) == {2, 3}
    assert nullifying_players(u) == frozenset()
    # a nullifying player kills every coalition it joins
    w = make_game(3, [([1], 2), ([2], 1), ([1, 2], 5)])
    assert nullifying_players(w) == {3}
    assert not is_null(w, 3)
    assert null_players(zero_game(3)) == nullifying_players(zero_game(3)) == {1, 2, 3}


def test_symmetry(w1_v):
    assert symmetric_pairs(w1_v) == [(1, 2), (1, 3), (2, 3)]
    u = unanimity_game(3, [1, 2])
    assert symmetric_pair(u, 1, 2) and not symmetric_pair(u, 1, 3)
    with pytest.raises(GameError):
        symmetric_pair(u, 1, 1)


def test_permutation_algebra():
    pi = Permutation([2, 3, 1])
    assert pi.compose(pi.inverse()) == Permutation.identity(3)
    assert Permutation.transposition(3, 1, 3).images == (3, 2, 1)
    assert len(list(all_permutations(4))) == 24
    with pytest.raises(GameError):
        Permutation([1, 1, 2])


@given(games(min_n=2), st.data())
def test_permute_game_relabels(v, data):
    images = data.draw(st.permutations(range(1, v.n + 1)))
    pi = Permutation(images)
    pv = permute_game(v, pi)
    for S in range(1 << v.n):
        assert pv(pi.apply_mask(S)) == v(S)
    assert permute_game(pv, pi.inverse()) == v


@given(games())
def test_game_arithmetic(v):
    assert v - v == zero_game(v.n)
    assert v + (-v) == zero_game(v.n)
    assert v.scale(2) == v + v
    assert hash(Game(v.n, v.worths)) == hash(v)
