"""
Checking axioms and searching for counterexamples
=================================================

An instance fixes the quantified games and players of one axiom.  Searches
walk an enumeration (exhaustive over a worth grid), seeded random draws,
or the witness corpus.
"""

# %%
from tuaxioms import SolutionSpec, unanimity_game
from tuaxioms.axioms import AxiomInstance, Exhaustive, Random, Witnesses, axiom_report, check_instance, search_counterexample

ed = SolutionSpec("equal_division")
inst = AxiomInstance("null_player_property", (unanimity_game(3, [1]),), (3,))
print(check_instance("npp", ed, inst))

# %%
# the three strategies
for strategy in (Exhaustive(), Random(n=4, trials=300, seed=1), Witnesses()):
    v = search_counterexample("npp", ed, strategy)
    print(strategy.to_dict()["mode"], "->", v.kind)

# %%
# a capped exhaustive run over every axiom; no counterexample within the cap
# is reported as budget_exhausted, never as a proof
report = axiom_report(SolutionSpec("shapley"), strategy=Exhaustive(max_candidates=5000))
print("\n".join(report.lines()))
