"""
Solution concepts
=================

Three routes to the Shapley value, the egalitarian-Shapley family and the
counterexample rules used to show the axioms are independent.
"""

# %%
from gmpy2 import mpq
from tuaxioms import SolutionSpec, evaluate, make_game
from tuaxioms.solutions import catalog, shapley, shapley_dividends, shapley_oracle


def show(x):
    return "(" + ", ".join(map(str, x)) + ")"


w = make_game(3, [([1], 1), ([1, 2], 3), ([2, 3], 2), ([1, 2, 3], 6)])
for f in (shapley, shapley_dividends, shapley_oracle):
    print(f"{f.__name__:18s}", show(f(w)))

# %%
# alpha = 0 is Shapley, alpha = 1 is equal division; alpha may be any rational
for alpha in (-1, 0, mpq(1, 2), 1, 3):
    print(f"alpha={alpha!s:>4}", show(evaluate(SolutionSpec("egalitarian", alpha), w)))

# %%
for spec in catalog():
    print(f"{spec.label():24s}", show(evaluate(spec, w)))
