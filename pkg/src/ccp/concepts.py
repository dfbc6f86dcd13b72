"""Blocking predicates, core, strict core, Pareto optimality and
individual stability, all computed by exhaustive enumeration."""

from __future__ import annotations

from dataclasses import dataclass, field

from .combinatorics import all_outcomes, subsets
from .model import DEFAULT_MAX_AGENTS, PayoffVector

PARETO_MODES = ("outcome-domination", "literal")
IS_VARIANTS = ("literal", "strict-join")


@dataclass(frozen=True)
class BlockWitness:
    coalition: tuple
    vector: PayoffVector
    kind: str  # "strong" or "weak"
    active: tuple = field(default=())


@dataclass(frozen=True)
class UnilateralBlockWitness:
    agent: int
    host: tuple
    deviating: tuple
    vector: PayoffVector


def blocks(g, s, o):
    """Return a witness that coalition ``s`` blocks outcome ``o``, else None.

    The first feasible vector of ``s`` that strictly improves every member wins.
    """
    v = o.payoff
    for x in g.feasible(s):
        if all(m > v[a] for a, m in zip(s, x.amounts)):
            return BlockWitness(s, x, "strong", s)
    return None


def _weak_witness(t, vecs, v):
    # a vector improving every member is preferred, so a blocking coalition
    # always reports itself as fully active
    first = None
    for x in vecs:
        if all(m >= v[a] for a, m in zip(t, x.amounts)):
            active = tuple(a for a, m in zip(t, x.amounts) if m > v[a])
            if len(active) == len(t):
                return BlockWitness(t, x, "weak", active)
            if active and first is None:
                first = BlockWitness(t, x, "weak", active)
    return first


def weakly_blocks(g, t, o):
    """Witness that ``t`` weakly blocks ``o``; ``active`` lists the strict gainers."""
    return _weak_witness(t, g.feasible(t), o.payoff)


def _candidates(g, strict):
    """Coalition/vector pairs that could (weakly) block some outcome.

    Outcome payoffs are nonnegative, so a strict blocker needs every entry
    positive and a weak one needs a nonnegative vector with a positive entry.
    """
    key = "blockers" if strict else "weak_blockers"
    cached = g._cache.get(key)
    if cached is None:
        cached = []
        for s in g.coalitions():
            if strict:
                vecs = [x for x in g.feasible(s) if all(m > 0 for m in x.amounts)]
            else:
                vecs = [x for x in g.feasible(s)
                        if x.nonnegative and any(m > 0 for m in x.amounts)]
            if vecs:
                cached.append((s, tuple(vecs)))
        g._cache[key] = cached = tuple(cached)
    return cached


def find_blocking_coalition(g, o, within=None):
    """First coalition (canonical order) blocking ``o``, as a witness.

    ``within`` restricts the search to subsets of that coalition.
    """
    v = o.payoff
    inside = None if within is None else set(within)
    for s, vecs in _candidates(g, True):
        if inside is not None and not inside.issuperset(s):
            continue
        for x in vecs:
            if all(m > v[a] for a, m in zip(s, x.amounts)):
                return BlockWitness(s, x, "strong", s)
    return None


def find_weakly_blocking_coalition(g, o):
    for s, vecs in _candidates(g, False):
        w = _weak_witness(s, vecs, o.payoff)
        if w is not None:
            return w
    return None


def in_core(g, o):
    return find_blocking_coalition(g, o) is None


def in_strict_core(g, o):
    return find_weakly_blocking_coalition(g, o) is None


def core(g, max_agents=DEFAULT_MAX_AGENTS):
    """Outcomes admitting no blocking coalition, in enumeration order."""
    return [o for o in all_outcomes(g, max_agents) if in_core(g, o)]


def strict_core(g, max_agents=DEFAULT_MAX_AGENTS):
    return [o for o in all_outcomes(g, max_agents) if in_strict_core(g, o)]


def _dominates(a, b, agents, strict_everywhere):
    if strict_everywhere:
        return all(a[i] > b[i] for i in agents)
    return (all(a[i] >= b[i] for i in agents)
            and any(a[i] > b[i] for i in agents))


def pareto_optimal(g, o, mode="outcome-domination", max_agents=DEFAULT_MAX_AGENTS):
    """Pareto optimality of ``o``.

    ``outcome-domination`` (default): no outcome pays everyone at least as
    much and someone strictly more.  ``literal``: the grand coalition does
    not weakly block ``o`` through one of its own feasible vectors.  The two
    differ whenever the grand coalition's feasible set is useless, as in
    roommate problems.
    """
    if mode == "literal":
        return weakly_blocks(g, g.agents, o) is None
    if mode != "outcome-domination":
        raise ValueError(f"unknown Pareto mode {mode!r}")
    return not any(_dominates(p.payoff, o.payoff, g.agents, False)
                   for p in all_outcomes(g, max_agents))


def weakly_pareto_optimal(g, o, mode="outcome-domination", max_agents=DEFAULT_MAX_AGENTS):
    if mode == "literal":
        return blocks(g, g.agents, o) is None
    if mode != "outcome-domination":
        raise ValueError(f"unknown Pareto mode {mode!r}")
    return not any(_dominates(p.payoff, o.payoff, g.agents, True)
                   for p in all_outcomes(g, max_agents))


def pareto_set(g, mode="outcome-domination", weak=False, max_agents=DEFAULT_MAX_AGENTS):
    """All (weakly) Pareto optimal outcomes, in enumeration order.

    The outcome-domination mode compares distinct payoff profiles once
    instead of rescanning the outcome list per outcome.
    """
    outs = all_outcomes(g, max_agents)
    if mode == "literal":
        test = blocks if weak else weakly_blocks
        return [o for o in outs if test(g, g.agents, o) is None]
    if mode != "outcome-domination":
        raise ValueError(f"unknown Pareto mode {mode!r}")
    key = ("pareto", weak)
    good = g._cache.get(key)
    if good is None:
        profiles = list(dict.fromkeys(o.values(g.agents) for o in outs))
        idx = range(len(g.agents))
        good = set()
        for p in profiles:
            if not any(_dominates(q, p, idx, weak) for q in profiles):
                good.add(p)
        g._cache[key] = good
    return [o for o in outs if o.values(g.agents) in good]


def unilateral_blocks(g, a, o, variant="literal"):
    """Return a witness that agent ``a`` unilaterally blocks ``o``, else None.

    ``literal`` searches every nonempty S with S minus {a} inside some block
    T of ``o`` (``a`` may or may not belong to S or T).  ``strict-join``
    only lets ``a`` join a block it is not already in, with ``a`` in S.
    Blocks are scanned in structure order, deviating sets in canonical order.
    """
    if variant not in IS_VARIANTS:
        raise ValueError(f"unknown unilateral-blocking variant {variant!r}")
    v = o.payoff
    for host in o.structure:
        if variant == "strict-join":
            if a in host:
                continue
            pool = tuple(sorted(host + (a,)))
        else:
            pool = host if a in host else tuple(sorted(host + (a,)))
        for s in subsets(pool):
            if variant == "strict-join" and a not in s:
                continue
            for x in g.feasible(s):
                if all(m > v[b] for b, m in zip(s, x.amounts)):
                    return UnilateralBlockWitness(a, host, s, x)
    return None


def is_individually_stable(g, o, variant="literal"):
    return all(unilateral_blocks(g, a, o, variant) is None for a in g.agents)


def individually_stable_set(g, variant="literal", max_agents=DEFAULT_MAX_AGENTS):
    return [o for o in all_outcomes(g, max_agents) if is_individually_stable(g, o, variant)]
