"""
Fitting alpha and testing family membership
===========================================
"""

# %%
from gmpy2 import mpq
from tuaxioms import SolutionSpec
from tuaxioms.axioms import Exhaustive
from tuaxioms.characterize import fit_alpha, implication_crosscheck, verify_family_membership

print(fit_alpha(SolutionSpec("egalitarian", mpq(-3, 2)), 4))
print(fit_alpha(SolutionSpec("equal_surplus_division"), 3))

# %%
# phi2 looks like Shapley on unanimity games; random structured games expose it
m = verify_family_membership(SolutionSpec("phi2"), 3, trials=500, seed=0)
print(m.kind, m.phase)
print(" witness:", m.witness)
print(" solution:", m.actual, " family:", m.expected)

# %%
rep = implication_crosscheck(SolutionSpec("max_v1"), Exhaustive(max_candidates=20_000))
print("\n".join(rep.lines()))
