"""Strong objections, strong and classical counter-objections, the weak
bargaining set and its classical variant, and the objection-chain
construction.

Base outcomes must be Pareto optimal in the outcome-domination sense.
"No subset of T blocks" includes T itself.
"""

from __future__ import annotations

from dataclasses import dataclass

from .combinatorics import all_outcomes
from .concepts import find_blocking_coalition, pareto_set
from .model import CCPError, DEFAULT_MAX_AGENTS, Outcome, ZERO, check_size
from .properties import VerificationError


class NotParetoOptimalError(CCPError, ValueError):
    pass


class ChainDiscrepancy(VerificationError):
    """The objection chain stopped outside the weak bargaining set.

    ``report`` is a dict with the reason and the chain walked so far.
    """

    def __init__(self, reason, report):
        self.report = report
        super().__init__(reason, report.get("current"), reason)


@dataclass(frozen=True)
class StrongObjection:
    base: Outcome
    objecting: Outcome
    block: tuple


@dataclass(frozen=True)
class CounterObjection:
    counter: Outcome
    block: tuple
    classical: bool


class _Context:
    """Per-instance caches shared by the bargaining computations."""

    def __init__(self, g, max_agents):
        self.g = g
        self.outcomes = all_outcomes(g, max_agents)
        self.pareto = set(pareto_set(g, max_agents=max_agents))
        self._stable = {}
        self._counter = {}

    def internally_unblocked(self, o, t):
        key = (o, t)
        hit = self._stable.get(key)
        if hit is None:
            hit = self._stable[key] = find_blocking_coalition(self.g, o, within=t) is None
        return hit

    def objections(self, base):
        """Every strong objection against ``base``, in enumeration order."""
        v = base.payoff
        for o in self.outcomes:
            w = o.payoff
            for t in o.structure:
                if all(w[a] > v[a] for a in t) and self.internally_unblocked(o, t):
                    yield StrongObjection(base, o, t)

    def counters(self, obj, classical):
        t = set(obj.block)
        w, v = obj.objecting.payoff, obj.base.payoff
        for o in self.outcomes:
            z = o.payoff
            for u in o.structure:
                us = set(u)
                if not (us - t and t - us and us & t):
                    continue
                if not all(z[a] > w[a] for a in u):
                    continue
                if classical and not all(z[a] >= v[a] for a in us - t):
                    continue
                yield CounterObjection(o, u, classical)

    def has_counter(self, obj, classical):
        if classical:
            return next(self.counters(obj, True), None) is not None
        key = (obj.objecting, obj.block)
        hit = self._counter.get(key)
        if hit is None:
            hit = self._counter[key] = next(self.counters(obj, False), None) is not None
        return hit

    def justified(self, base, classical):
        """Strong objections against ``base`` without a (classical) counter."""
        return [obj for obj in self.objections(base) if not self.has_counter(obj, classical)]


def _context(g, max_agents):
    check_size(g.n, max_agents)
    ctx = g._cache.get("bargaining")
    if ctx is None:
        ctx = g._cache["bargaining"] = _Context(g, max_agents)
    return ctx


def is_strong_objection(g, base, objecting, block, max_agents=DEFAULT_MAX_AGENTS):
    """``(True, "ok")`` or ``(False, reason)`` for the objection ``(objecting, block)``.

    Raises :class:`NotParetoOptimalError` when ``base`` is not Pareto optimal.
    """
    ctx = _context(g, max_agents)
    if base not in ctx.pareto:
        raise NotParetoOptimalError(f"base outcome {base!r} is not Pareto optimal")
    block = tuple(sorted(block))
    if block not in objecting.structure:
        return False, "block not in structure"
    if not all(objecting.payoff[a] > base.payoff[a] for a in block):
        return False, "not strictly better"
    if not ctx.internally_unblocked(objecting, block):
        return False, "subset blocks"
    return True, "ok"


def find_strong_counter_objections(g, obj, classical=False, max_agents=DEFAULT_MAX_AGENTS):
    """Every (classical) strong counter-objection against ``obj``, in enumeration order."""
    return list(_context(g, max_agents).counters(obj, classical))


def strong_objections(g, base, max_agents=DEFAULT_MAX_AGENTS):
    ctx = _context(g, max_agents)
    if base not in ctx.pareto:
        raise NotParetoOptimalError(f"base outcome {base!r} is not Pareto optimal")
    return list(ctx.objections(base))


def justified_objections(g, base, classical=False, max_agents=DEFAULT_MAX_AGENTS):
    ctx = _context(g, max_agents)
    if base not in ctx.pareto:
        raise NotParetoOptimalError(f"base outcome {base!r} is not Pareto optimal")
    return ctx.justified(base, classical)


def in_weak_bargaining_set(g, o, classical=False, max_agents=DEFAULT_MAX_AGENTS):
    ctx = _context(g, max_agents)
    if o not in ctx.pareto:
        return False
    return all(ctx.has_counter(obj, classical) for obj in ctx.objections(o))


def weak_bargaining_set(g, classical=False, max_agents=DEFAULT_MAX_AGENTS):
    """Pareto optimal outcomes none of whose strong objections is justified.

    ``classical`` switches to classical counter-objections, which must also
    leave the counter-objectors outside the objecting block no worse off
    than at the base outcome.
    """
    ctx = _context(g, max_agents)
    return [o for o in ctx.outcomes
            if o in ctx.pareto and in_weak_bargaining_set(g, o, classical, max_agents)]


def _rebuild(g, fixed, obj):
    """The objecting outcome with earlier fixed blocks restored and others alone at 0."""
    payoff = {a: ZERO for a in g.agents}
    blocks = []
    for b, pay in fixed:
        blocks.append(b)
        payoff.update(pay)
    blocks.append(obj.block)
    payoff.update((a, obj.objecting.payoff[a]) for a in obj.block)
    taken = {a for b in blocks for a in b}
    blocks.extend((a,) for a in g.agents if a not in taken)
    return Outcome(blocks, payoff)


def wb_chain_construct(g, start, max_agents=DEFAULT_MAX_AGENTS):
    """Follow a chain of justified strong objections from ``start``.

    While the current outcome has a justified strong objection, the first
    one whose block avoids every earlier objection block is adopted, after
    rebuilding its outcome so the earlier blocks keep their payoffs (other
    agents go to singletons at 0).  The rebuilt pair must still be a
    justified strong objection.  The walk ends at an outcome verified to be
    in the weak bargaining set; any other ending raises
    :class:`ChainDiscrepancy` with the chain so far.
    """
    ctx = _context(g, max_agents)
    if start not in ctx.pareto:
        raise NotParetoOptimalError(f"start outcome {start!r} is not Pareto optimal")
    current, fixed, chain = start, [], [start]

    def fail(reason):
        raise ChainDiscrepancy(reason, {"reason": reason, "current": current, "chain": chain})

    while True:
        if current not in ctx.pareto:
            fail("adopted objecting outcome is not Pareto optimal")
        justified = ctx.justified(current, False)
        if not justified:
            break
        used = {a for b, _ in fixed for a in b}
        nxt = None
        for obj in justified:
            if used & set(obj.block):
                continue
            rebuilt = _rebuild(g, fixed, obj)
            again = StrongObjection(current, rebuilt, obj.block)
            if (is_strong_objection(g, current, rebuilt, obj.block, max_agents)[0]
                    and not ctx.has_counter(again, False)):
                nxt = (obj, rebuilt)
                break
        if nxt is None:
            fail("no justified strong objection survives rebuilding")
        obj, rebuilt = nxt
        if rebuilt in chain:
            fail("objection chain revisits an outcome")
        fixed.append((obj.block, {a: rebuilt.payoff[a] for a in obj.block}))
        current = rebuilt
        chain.append(current)
    if not in_weak_bargaining_set(g, current, False, max_agents):
        fail("final outcome is not in the weak bargaining set")
    return current
