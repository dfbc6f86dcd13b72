"""Witness search for the top-coalition style conditions and the stagewise
constructions that turn those witnesses into core, strict-core and
individually stable outcomes.

Every witness vector is nonnegative, so a witness on ``top`` extends to an
outcome by leaving everyone else alone at 0.  All searches run in the
canonical order: top coalitions by size then lexicographically, then the
vector's position in the feasible set, then tiers or rankings.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .combinatorics import ordered_partitions, subsets
from .concepts import (find_blocking_coalition, find_weakly_blocking_coalition,
                       is_individually_stable, strict_core)
from .model import (CCPError, DEFAULT_MAX_AGENTS, Outcome, PayoffVector,
                    ValidationError, check_size)

ZERO = Fraction(0)


class PropertyFailure(CCPError):
    """No witness exists for some scope, so a construction cannot proceed."""

    def __init__(self, scope, prop):
        self.scope = tuple(scope)
        self.prop = prop
        super().__init__(f"{prop} property fails at scope {list(self.scope)}")


class VerificationError(CCPError):
    """A construction produced something the enumerators reject.

    ``candidate`` holds the constructed outcome and ``detail`` the reason.
    """

    def __init__(self, message, candidate=None, detail=None):
        self.candidate = candidate
        self.detail = detail
        super().__init__(message)


@dataclass(frozen=True)
class WeakTopCoalitionWitness:
    scope: tuple
    top: tuple
    vector: PayoffVector
    tiers: tuple  # ordered partition of top


@dataclass(frozen=True)
class TopCoalitionWitness:
    scope: tuple
    top: tuple
    vector: PayoffVector


@dataclass(frozen=True)
class WeakTopCycleWitness:
    scope: tuple
    top: tuple
    vector: PayoffVector
    rank: dict  # agent -> 1..|top|

    def __hash__(self):
        return hash((self.scope, self.top, self.vector, tuple(sorted(self.rank.items()))))


def _improvements(g, scope, a, level):
    """Pairs ``(T, x)`` with T a subset of scope minus a and ``x(a) > level``.

    T empty is skipped: F({a}) = {0} never beats a nonnegative level.
    """
    rest = tuple(b for b in scope if b != a)
    found = []
    for t in subsets(rest):
        s = tuple(sorted(t + (a,)))
        i = s.index(a)
        for x in g.feasible(s):
            if x.amounts[i] > level:
                found.append((frozenset(t), x))
    return found


def _candidate_tops(g, scope):
    for top in subsets(scope):
        for x in g.feasible(top):
            if x.nonnegative:
                yield top, x


def find_weak_top_coalition(g, scope, max_agents=DEFAULT_MAX_AGENTS):
    """First witness of the weak top-coalition condition for ``scope``, or None.

    A tier-1 member can never improve on its payoff with partners from the
    scope; a member of tier t improves only with help from an earlier tier.
    """
    scope = tuple(sorted(scope))
    check_size(len(scope), max_agents)
    for top, x in _candidate_tops(g, scope):
        # for each member, the partner sets through which it could gain
        gains = {a: [t for t, _ in _improvements(g, scope, a, m)]
                 for a, m in zip(top, x.amounts)}
        for tiers in ordered_partitions(top, None):
            if _tiers_ok(tiers, gains):
                return WeakTopCoalitionWitness(scope, top, x, tiers)
    return None


def _tiers_ok(tiers, gains):
    earlier = set()
    for t, tier in enumerate(tiers):
        for a in tier:
            if t == 0:
                if gains[a]:
                    return False
            elif any(earlier.isdisjoint(ts) for ts in gains[a]):
                return False
        earlier.update(tier)
    return True


def find_top_coalition(g, scope, max_agents=DEFAULT_MAX_AGENTS):
    """First top coalition for ``scope``: every member is at its best within the scope."""
    scope = tuple(sorted(scope))
    check_size(len(scope), max_agents)
    for top, x in _candidate_tops(g, scope):
        if all(not _improvements(g, scope, a, m) for a, m in zip(top, x.amounts)):
            return TopCoalitionWitness(scope, top, x)
    return None


def find_weak_top_cycle(g, scope, max_agents=DEFAULT_MAX_AGENTS):
    """First weak top-cycle witness for ``scope``, or None.

    Payoffs outside ``top`` count as 0 when deciding whether some partner
    vetoes a gain; any outcome extending the witness pays at least that.
    The ranking returned is the lexicographically smallest admissible one.
    """
    scope = tuple(sorted(scope))
    check_size(len(scope), max_agents)
    for top, x in _candidate_tops(g, scope):
        level = dict(zip(top, x.amounts))
        outside = set(scope) - set(top)
        must_precede = {}
        ok = True
        for a in top:
            before = set()
            for t, y in _improvements(g, scope, a, level[a]):
                if t <= outside:
                    ok = False
                    break
                ys = y.as_dict()
                if all(ys[c] > level.get(c, ZERO) for c in t):
                    before.update(b for b in t if b in level)
            if not ok:
                break
            must_precede[a] = before
        if not ok:
            continue
        order = _lex_first_order(top, must_precede)
        if order is not None:
            rank = {a: i + 1 for i, a in enumerate(order)}
            return WeakTopCycleWitness(scope, top, x, rank)
    return None


def _lex_first_order(items, must_precede):
    """Lexicographically smallest ordering honouring ``must_precede``, or None on a cycle."""
    placed, order = set(), []
    while len(order) < len(items):
        nxt = next((a for a in items if a not in placed
                    and must_precede[a] <= placed), None)
        if nxt is None:
            return None
        order.append(nxt)
        placed.add(nxt)
    return order


def _check_all_scopes(g, finder, max_agents):
    check_size(g.n, max_agents)
    witnesses = {v: finder(g, v, max_agents) for v in subsets(g.agents)}
    return all(w is not None for w in witnesses.values()), witnesses


def satisfies_weak_top_coalition_property(g, max_agents=DEFAULT_MAX_AGENTS):
    """``(holds, {scope: witness or None})`` over every nonempty scope."""
    return _check_all_scopes(g, find_weak_top_coalition, max_agents)


def satisfies_top_coalition_property(g, max_agents=DEFAULT_MAX_AGENTS):
    return _check_all_scopes(g, find_top_coalition, max_agents)


def satisfies_weak_top_cycle_property(g, max_agents=DEFAULT_MAX_AGENTS):
    return _check_all_scopes(g, find_weak_top_cycle, max_agents)


def failing_scope(witnesses):
    """The first scope without a witness, or None."""
    return next((v for v, w in witnesses.items() if w is None), None)


def combine_outcomes(pieces):
    """Union under substitutions: keep each piece's payoffs on its chosen block.

    ``pieces`` is a sequence of ``(outcome, block)``; the blocks must be
    blocks of their outcomes and partition the agent set.
    """
    if not pieces:
        raise ValidationError("nothing to combine")
    agents = set(pieces[0][0].payoff)
    errors, seen, payoff = [], set(), {}
    for o, b in pieces:
        b = tuple(sorted(b))
        if b not in o.structure:
            errors.append(f"{list(b)} is not a block of its outcome")
        if seen & set(b):
            errors.append(f"block {list(b)} overlaps an earlier block")
        seen.update(b)
        payoff.update((a, o.payoff[a]) for a in b)
    if seen != agents:
        errors.append("blocks do not cover the agent set")
    if errors:
        raise ValidationError(errors)
    return Outcome([b for _, b in pieces], payoff)


def _extend(g, top, vector):
    """The outcome made of ``top`` at ``vector`` plus singletons at 0."""
    payoff = {a: ZERO for a in g.agents}
    payoff.update(vector.as_dict())
    blocks = [top] + [(a,) for a in g.agents if a not in top]
    return Outcome(blocks, payoff)


def construction_stages(g, finder, label, max_agents=DEFAULT_MAX_AGENTS):
    """Peel off witnesses from the remaining agents until none are left.

    Returns the list of stage witnesses; raises :class:`PropertyFailure`
    at the first scope without one.
    """
    check_size(g.n, max_agents)
    remaining = tuple(g.agents)
    stages = []
    while remaining:
        w = finder(g, remaining, max_agents)
        if w is None:
            raise PropertyFailure(remaining, label)
        stages.append(w)
        remaining = tuple(a for a in remaining if a not in w.top)
    return stages


def _assemble(g, stages):
    return combine_outcomes([(_extend(g, w.top, w.vector), w.top) for w in stages])


def construct_core_outcome(g, max_agents=DEFAULT_MAX_AGENTS):
    """Build a core outcome from weak top-coalition witnesses, then verify it."""
    result = _assemble(g, construction_stages(
        g, find_weak_top_coalition, "weak top coalition", max_agents))
    w = find_blocking_coalition(g, result)
    if w is not None:
        raise VerificationError(
            f"constructed outcome is blocked by {list(w.coalition)}", result, w)
    return result


def construct_strict_core_outcome(g, check_uniqueness=True, max_agents=DEFAULT_MAX_AGENTS):
    """Build a strict-core outcome from top-coalition witnesses, then verify it.

    With ``check_uniqueness`` the enumerated strict core is also required
    to pay every agent exactly what the constructed outcome pays.
    """
    result = _assemble(g, construction_stages(
        g, find_top_coalition, "top coalition", max_agents))
    w = find_weakly_blocking_coalition(g, result)
    if w is not None:
        raise VerificationError(
            f"constructed outcome is weakly blocked by {list(w.coalition)}", result, w)
    if check_uniqueness:
        for o in strict_core(g, max_agents):
            if o.payoff != result.payoff:
                raise VerificationError(
                    "strict core contains an outcome with a different payoff", result, o)
    return result


def construct_is_outcome(g, max_agents=DEFAULT_MAX_AGENTS):
    """Build an individually stable outcome from weak top-cycle witnesses, then verify it."""
    result = _assemble(g, construction_stages(
        g, find_weak_top_cycle, "weak top cycle", max_agents))
    if not is_individually_stable(g, result):
        raise VerificationError("constructed outcome is not individually stable", result)
    return result
