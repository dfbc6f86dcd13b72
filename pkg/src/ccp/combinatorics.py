"""Deterministic enumerators: subsets, set partitions, ordered partitions,
full-cycle permutations and complete outcome streams."""

from __future__ import annotations

from itertools import permutations, product

from .model import DEFAULT_MAX_AGENTS, Outcome, all_coalitions, check_size


def subsets(v):
    """All nonempty subsets of ``v``: by size, then lexicographic.

    >>> list(subsets((1, 2)))
    [(1,), (2,), (1, 2)]
    """
    return all_coalitions(tuple(sorted(v)))


def partitions(x, max_agents=DEFAULT_MAX_AGENTS):
    """Every set partition of ``x`` exactly once, as a tuple of blocks.

    Blocks are ordered by their smallest member.  The stream follows the
    lexicographic order of restricted growth strings, so the all-singletons
    partition comes last and the one-block partition first.
    """
    x = tuple(sorted(x))
    check_size(len(x), max_agents)

    def grow(i, blocks):
        if i == len(x):
            yield tuple(tuple(b) for b in blocks)
            return
        for b in blocks:
            b.append(x[i])
            yield from grow(i + 1, blocks)
            b.pop()
        blocks.append([x[i]])
        yield from grow(i + 1, blocks)
        blocks.pop()

    yield from grow(0, [])


def ordered_partitions(s, max_agents=DEFAULT_MAX_AGENTS):
    """Every ordered set partition of ``s`` (a list of tiers) exactly once."""
    for p in partitions(s, max_agents):
        for order in permutations(p):
            yield order


def full_cycles(s):
    """Single-cycle permutations of ``s`` as ``{agent: image}`` dicts.

    A singleton yields the identity; otherwise there are ``(|s| - 1)!``
    cycles, listed by the order in which the remaining members follow the
    smallest one.
    """
    s = tuple(sorted(s))
    if len(s) == 1:
        yield {s[0]: s[0]}
        return
    head, rest = s[0], s[1:]
    for tail in permutations(rest):
        ring = (head,) + tail
        yield {ring[i]: ring[(i + 1) % len(ring)] for i in range(len(ring))}


def outcomes(g, max_agents=DEFAULT_MAX_AGENTS):
    """Stream every outcome of ``g`` exactly once.

    For each partition (in :func:`partitions` order), take the Cartesian
    product of each block's nonnegative feasible vectors.
    """
    check_size(g.n, max_agents)
    usable = {}
    for p in partitions(g.agents, max_agents):
        choices = []
        for b in p:
            if b not in usable:
                usable[b] = [v for v in g.feasible(b) if v.nonnegative]
            choices.append(usable[b])
        for pick in product(*choices):
            payoff = {}
            for v in pick:
                payoff.update(zip(v.coalition, v.amounts))
            yield Outcome(p, payoff)


def all_outcomes(g, max_agents=DEFAULT_MAX_AGENTS):
    """:func:`outcomes` as a list, memoized on the instance."""
    check_size(g.n, max_agents)
    cached = g._cache.get("outcomes")
    if cached is None:
        cached = g._cache["outcomes"] = tuple(outcomes(g, None))
    return cached
