"""
Building stable outcomes stage by stage
=======================================

When the weak top coalition property holds, peeling off one witness at a
time yields a core outcome. A failing instance reports the scope where
the property breaks.
"""

from ccp import (PropertyFailure, builtin, construct_core_outcome, construct_is_outcome,
                 find_weak_top_coalition, random_ccp, satisfies_weak_top_coalition_property)

g = builtin("gstar")
w = find_weak_top_coalition(g, g.agents)
print("witness on the full population:", w.top, [str(m) for m in w.vector.amounts], w.tiers)
print("core outcome:", construct_core_outcome(g))
print("individually stable outcome:", construct_is_outcome(g))

try:
    construct_core_outcome(builtin("example1"))
except PropertyFailure as exc:
    print("example1:", exc)

# how often does the property hold on random three-agent problems?
hits = sum(satisfies_weak_top_coalition_property(random_ccp(s, 3))[0] for s in range(50))
print(f"{hits}/50 random instances have the property")
