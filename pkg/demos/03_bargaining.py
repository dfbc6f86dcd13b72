"""
Objections and counter-objections
=================================

Example 2 has an empty core, yet every pairing survives in the weak
bargaining set. Requiring counter-objections to protect outsiders wipes
all of them out.
"""

from ccp import (StrongObjection, builtin, find_strong_counter_objections,
                 validate_outcome, wb_chain_construct, weak_bargaining_set)

g = builtin("example2")
for o in weak_bargaining_set(g):
    print("WB:", o)
print("classical WB:", weak_bargaining_set(g, classical=True))

base = validate_outcome(g, [[1, 3], [2]], {1: 1, 2: 0, 3: 2})
objecting = validate_outcome(g, [[1, 2], [3]], {1: 2, 2: 1, 3: 0})
obj = StrongObjection(base, objecting, (1, 2))
for c in find_strong_counter_objections(g, obj):
    print("countered by", c.block, "via", c.counter, "classical:", c.classical)

# the objection chain starting from a Pareto optimal outcome
print(wb_chain_construct(g, base))
