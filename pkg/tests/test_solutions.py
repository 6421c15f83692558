import pytest
from gmpy2 import mpq
from hypothesis import given, strategies as st

from tuaxioms import SolutionSpec, evaluate, make_game, unanimity_game, zero_game
from tuaxioms.solutions import (
    SOLUTION_IDS,
    asym_first_player,
    catalog,
    egalitarian_shapley,
    equal_division,
    equal_surplus_division,
    max_v1,
    phi1,
    phi2,
    shapley,
    shapley_dividends,
    shapley_oracle,
    vi_plus_a,
)

from conftest import games

q = mpq


@given(games(max_n=5))
def test_three_shapley_methods_agree(v):
    assert shapley(v) == shapley_dividends(v) == shapley_oracle(v)


@given(games())
def test_shapley_is_efficient(v):
    assert sum(shapley(v)) == v.grand_worth


def test_oracle_refuses_large_n():
    with pytest.raises(ValueError):
        shapley_oracle(zero_game(9))


def test_shapley_on_unanimity_games():
    assert shapley(unanimity_game(4, [2, 4])) == (0, q(1, 2), 0, q(1, 2))


def test_symmetric_game_is_split_equally(w1_v):
    # v is symmetric, so every efficient symmetric rule gives v(N)/3
    for alpha in (-2, 0, q(1, 2), 1, 3):
        assert egalitarian_shapley(alpha, w1_v) == (q(2, 3),) * 3
    assert equal_surplus_division(w1_v) == (q(2, 3),) * 3


def test_egalitarian_endpoints():
    v = make_game(3, [([1], 1), ([1, 2], 3), ([1, 2, 3], 6)])
    assert egalitarian_shapley(0, v) == shapley(v)
    assert egalitarian_shapley(1, v) == equal_division(v)
    assert egalitarian_shapley(-1, unanimity_game(3, [1])) == (q(5, 3), q(-1, 3), q(-1, 3))


def test_esd():
    v = make_game(3, [([1], 3), ([2], -1), ([1, 2, 3], 5)])
    assert equal_surplus_division(v) == (q(4), q(0), q(1))


def test_phi1_branches():
    # singletons sum to 2 -> proportional split of v(N)
    v = make_game(3, [([1], 1), ([2], 1), ([3], 0), ([1, 2, 3], 4)])
    assert phi1(v) == (2, 2, 0)
    # singletons sum to 0 -> null players get nothing, the rest split v(N)
    assert phi1(unanimity_game(3, [1, 2])) == (q(1, 2), q(1, 2), 0)
    assert phi1(zero_game(3)) == (0, 0, 0)


def test_phi2_branches():
    u = make_game(3, [([1], 2), ([2], 1), ([1, 2], 5)])  # player 3 nullifying
    assert phi2(u) == (0, 0, 0)
    const = make_game(3, {S: 1 for S in range(1, 8)})
    assert phi2(const) == (q(1, 3),) * 3
    v = make_game(3, [([1], 1), ([1, 2, 3], 3)])
    assert phi2(v) == shapley(v)


def test_small_rules():
    v = make_game(3, [([1], -2), ([2], 5), ([1, 2, 3], 6)])
    assert asym_first_player(v) == (0, 3, 3)
    assert max_v1(v) == (0, 0, 0)
    assert max_v1(unanimity_game(3, [1])) == (1, 1, 1)
    assert vi_plus_a(1, v) == (-1, 6, 1)
    with pytest.raises(ValueError):
        vi_plus_a(0, v)


def test_spec_validation():
    with pytest.raises(ValueError):
        SolutionSpec("egalitarian")
    with pytest.raises(ValueError):
        SolutionSpec("shapley", 1)
    with pytest.raises(ValueError):
        SolutionSpec("nope")
    assert SolutionSpec("vi_plus_a").param == 1
    assert SolutionSpec("egalitarian", "1/2").label() == "egalitarian(alpha=1/2)"


def test_spec_dict_round_trip():
    for spec in catalog():
        assert SolutionSpec.from_dict(spec.to_dict()) == spec
    assert {s.id for s in catalog()} == set(SOLUTION_IDS)


@given(games(min_n=2), st.sampled_from(catalog()))
def test_evaluate_returns_n_rationals(v, spec):
    x = evaluate(spec, v)
    assert len(x) == v.n
    assert spec(v) == x
