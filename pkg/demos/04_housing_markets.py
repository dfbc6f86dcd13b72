"""
Housing markets and top trading cycles
======================================

Object trades along cycles give the feasible payoffs of a Shapley-Scarf
market. With strict preferences the top trading cycle outcome sits in
the core.
"""

from ccp import core, shapley_scarf, top_trading_cycles
from ccp.concepts import in_core
from ccp.instances import EXAMPLE1_UTILITIES, random_strict_housing_market

g = shapley_scarf(EXAMPLE1_UTILITIES)
print("F({1,2,3}):", [[str(m) for m in x.amounts] for x in g.feasible((1, 2, 3))])
o = top_trading_cycles(EXAMPLE1_UTILITIES)
print("TTC:", o, "in core:", in_core(g, o))

for seed in range(5):
    u = random_strict_housing_market(seed, 4)
    m = shapley_scarf(u)
    print(seed, top_trading_cycles(u), "core size", len(core(m)))
