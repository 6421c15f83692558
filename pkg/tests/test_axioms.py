import itertools

import pytest
from gmpy2 import mpq
from hypothesis import given, settings, strategies as st

from tuaxioms import Game, SolutionSpec, make_game, unanimity_game, zero_game
from tuaxioms.axioms import (
    AXIOM_IDS,
    LINEAR_SCALARS,
    SHAPES,
    AxiomInstance,
    BudgetExhausted,
    Counterexample,
    Exhaustive,
    InstanceError,
    Passed,
    Random,
    Witnesses,
    _admissible,
    axiom_id,
    axiom_report,
    check_instance,
    generate_instance,
    instance_holds,
    search_counterexample,
    shell_order,
)
from tuaxioms.core import all_permutations
from tuaxioms.solutions import catalog

q = mpq
SH = SolutionSpec("shapley")
ED = SolutionSpec("equal_division")


def test_aliases():
    assert axiom_id("NPP") == "null_player_property"
    assert axiom_id("nfpn") == "nullifying_player_neutrality"
    assert axiom_id("cse") == "coalitional_strategic_equivalence"
    with pytest.raises(ValueError):
        axiom_id("fairness")


def test_instance_validation():
    u = unanimity_game(3, [1])
    AxiomInstance("null_player_property", (u,), (3,))
    with pytest.raises(InstanceError):
        AxiomInstance("null_player_property", (u,), (1,))  # player 1 is not null
    with pytest.raises(InstanceError):
        AxiomInstance("linearity", (u,), (), (1, 1))  # needs two games
    with pytest.raises(InstanceError):
        AxiomInstance("anonymity", (u,), (1,))  # needs a permutation
    with pytest.raises(InstanceError):
        AxiomInstance("symmetry", (u,), (1, 2))  # 1 and 2 are not symmetric in u_{1}


def test_ed_violates_npp_on_u1():
    inst = AxiomInstance("null_player_property", (unanimity_game(3, [1]),), (3,))
    out = check_instance("npp", ED, inst)
    assert not out.holds and out.lhs == q(1, 3) and out.rhs == 0
    assert instance_holds("npp", SH, inst)


def test_inequality_axioms_report_relation():
    v = make_game(3, [([1], 1), ([1, 3], 1), ([1, 2], 1), ([1, 2, 3], 1)])  # 2, 3 null
    out = check_instance("nppe", SH, AxiomInstance("nppe", (v,), (2,)))
    assert out.relation == ">=" and out.holds


def test_check_instance_rejects_wrong_axiom():
    inst = AxiomInstance("efficiency", (zero_game(2),))
    with pytest.raises(InstanceError):
        check_instance("additivity", SH, inst)


@pytest.mark.parametrize("axiom", AXIOM_IDS)
@pytest.mark.parametrize("n", [2, 3, 4])
def test_generated_instances_are_admissible(axiom, n):
    for seed in range(40):
        inst = generate_instance(axiom, n, seed)
        AxiomInstance(inst.axiom, inst.games, inst.players, inst.scalars, inst.permutation)
        assert generate_instance(axiom, n, seed) == inst


def test_shell_order_is_complete_and_boxed():
    sizes = [4, 3, 5]
    order = list(shell_order(sizes))
    assert len(order) == len(set(order)) == 4 * 3 * 5
    seen = set()
    for t in order:
        seen.add(t)
        m = max(t)
        # once a tuple with max m appears, every tuple with max < m is already listed
        assert all(u in seen for u in itertools.product(*(range(min(m, s)) for s in sizes)))


def test_exhaustive_grid_is_zero_first():
    assert Exhaustive().grid == (0, 1, -1, 2)
    with pytest.raises(ValueError):
        Exhaustive(grid=())


# -- brute-force oracle on a tiny domain ------------------------------------

TINY_GRID = tuple(q(x) for x in (-1, 0, 1))


def _tiny_games(n):
    for ws in itertools.product(TINY_GRID, repeat=(1 << n) - 1):
        yield Game(n, (q(0), *ws))


def brute_force_fails(axiom, spec, n=2):
    """Does any admissible instance on the tiny domain break the axiom?"""
    games = list(_tiny_games(n))
    n_games, n_players, n_scalars, uses_perm = SHAPES[axiom]
    player_tuples = [p for p in itertools.permutations(range(1, n + 1), n_players)]
    scalar_tuples = list(itertools.product(LINEAR_SCALARS, repeat=n_scalars))
    perms = list(all_permutations(n)) if uses_perm else [None]
    for gs in itertools.product(games, repeat=n_games):
        for ps in player_tuples:
            if not _admissible(axiom, gs, ps):
                continue
            for sc in scalar_tuples:
                for pi in perms:
                    inst = AxiomInstance._trusted(axiom, gs, ps, sc, pi)
                    if not check_instance(axiom, spec, inst).holds:
                        return True
    return False


@pytest.mark.parametrize("spec", catalog(), ids=lambda s: s.label())
def test_search_agrees_with_brute_force(spec):
    strategy = Exhaustive(grid=TINY_GRID, n=2, max_candidates=None)
    for axiom in AXIOM_IDS:
        verdict = search_counterexample(axiom, spec, strategy)
        assert not isinstance(verdict, BudgetExhausted)
        assert verdict.found == brute_force_fails(axiom, spec), axiom


def test_counterexamples_replay():
    for axiom in ("npp", "cse", "nfpn"):
        for spec in (SH, ED, SolutionSpec("equal_surplus_division")):
            v = search_counterexample(axiom, spec, Exhaustive())
            if v.found:
                inst = v.instance
                rebuilt = AxiomInstance(inst.axiom, inst.games, inst.players, inst.scalars, inst.permutation)
                assert not instance_holds(axiom, spec, rebuilt)


def test_budget_exhausted():
    v = search_counterexample("efficiency", SH, Exhaustive(max_candidates=10))
    assert isinstance(v, BudgetExhausted) and v.candidates_examined == 10 and not v.found


def test_small_full_search_passes():
    v = search_counterexample("efficiency", SH, Exhaustive(n=2, max_candidates=None))
    assert isinstance(v, Passed) and v.instances_checked == 4 ** 3


def test_random_mode_is_deterministic():
    s = Random(n=3, trials=200, seed=7)
    a = search_counterexample("npp", ED, s)
    b = search_counterexample("npp", ED, s)
    assert isinstance(a, Counterexample) and a == b
    assert not search_counterexample("linearity", SolutionSpec("egalitarian", q(1, 2)), s).found


def test_witness_mode_finds_u1():
    v = search_counterexample("npp", ED, Witnesses())
    assert v.found
    assert v.instance.games[0] == unanimity_game(3, [1]) and v.instance.players == (3,)
    assert not search_counterexample("npp", SH, Witnesses()).found


def test_axiom_report():
    rep = axiom_report(ED, ["efficiency", "npp"], Exhaustive(n=2, max_candidates=None))
    assert rep.failed() == ["null_player_property"]
    assert rep.passed() == ["efficiency"]
    assert rep.to_dict()["strategy"]["mode"] == "exhaustive"
    assert any("COUNTEREXAMPLE" in line for line in rep.lines())


@settings(max_examples=30)
@given(st.sampled_from(AXIOM_IDS), st.integers(0, 2**32))
def test_shapley_axioms_on_random_instances(axiom, seed):
    # Shapley satisfies every axiom except the nullifying ones
    inst = generate_instance(axiom, 3, seed)
    if "nullifying" in axiom or axiom == "coalitional_standard_equivalence":
        return
    assert instance_holds(axiom, SH, inst)


@settings(max_examples=30)
@given(st.sampled_from(AXIOM_IDS), st.integers(0, 2**32))
def test_equal_division_axioms_on_random_instances(axiom, seed):
    inst = generate_instance(axiom, 3, seed)
    if axiom in ("null_player_property", "coalitional_strategic_equivalence", "weak_monotonicity"):
        return
    assert instance_holds(axiom, ED, inst)
