"""Exact solvers for contract choice problems: outcomes, core, strict core,
individual stability, weak bargaining sets, and the top-coalition style
sufficient conditions with their constructive procedures."""

from .model import (CCP, CCPError, DEFAULT_MAX_AGENTS, Outcome, PayoffVector,
                    SizeGuardError, ValidationError, ccp_to_json, coalition,
                    restrict, singletons_outcome, to_money, validate_ccp,
                    validate_outcome)
from .combinatorics import (all_outcomes, full_cycles, ordered_partitions, outcomes,
                            partitions, subsets)
from .concepts import (blocks, core, individually_stable_set, pareto_optimal,
                       pareto_set, strict_core, unilateral_blocks, weakly_blocks,
                       weakly_pareto_optimal)
from .properties import (PropertyFailure, VerificationError, combine_outcomes,
                         construct_core_outcome, construct_is_outcome,
                         construct_strict_core_outcome, find_top_coalition,
                         find_weak_top_coalition, find_weak_top_cycle,
                         satisfies_top_coalition_property,
                         satisfies_weak_top_coalition_property,
                         satisfies_weak_top_cycle_property)
from .bargaining import (ChainDiscrepancy, CounterObjection, NotParetoOptimalError,
                         StrongObjection, find_strong_counter_objections,
                         is_strong_objection, wb_chain_construct, weak_bargaining_set)
from .instances import (builtin, generalized_matching, is_super_additive,
                        man_woman_child, marriage, random_ccp, roommate,
                        shapley_scarf, top_trading_cycles)

__version__ = "0.1.0"
