"""
Games, coalitions and Harsanyi dividends
========================================

Worths are exact rationals; coalitions are bitmasks internally but every
public function also takes a list of players.
"""

# %%
from tuaxioms import make_game, to_coefficients, from_coefficients, unanimity_game
from tuaxioms.core import null_players, nullifying_players, symmetric_pairs, format_coalition

v = make_game(3, [([1], 1), ([2], 1), ([3], 1), ([1, 2, 3], 2)])
print(v)
print("v({1,2}) =", v([1, 2]), " v(N) =", v.grand_worth)

# %%
# dividends: the coordinates of v in the unanimity basis
lam = to_coefficients(v, "unanimity")
for T, x in lam.items():
    print(f"lambda{format_coalition(T):8s} = {x}")

assert from_coefficients(lam) == v

# %%
# u_{1} has two null players and no nullifying player
u1 = unanimity_game(3, [1])
print("null:", sorted(null_players(u1)), " nullifying:", sorted(nullifying_players(u1)))
print("symmetric pairs of v:", symmetric_pairs(v))
