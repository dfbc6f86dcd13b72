"""
Cores of small contract choice problems
=======================================

Example 1 is a four-agent roommate problem with an empty core. Adding
a feasible three-agent trade (the G* instance) makes the core nonempty.
"""

from ccp import builtin, core, individually_stable_set
from ccp.combinatorics import all_outcomes

g = builtin("example1")
print("example1 outcomes:", len(all_outcomes(g)))

# every outcome is blocked by some coalition
print("core:", core(g))
print("individually stable:", individually_stable_set(g))

star = builtin("gstar")
for o in core(star):
    print("gstar core outcome:", o)
