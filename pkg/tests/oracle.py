"""Naive reference implementations used as independent oracles.

Nothing here imports the package: instances arrive as the plain instance
JSON dict, outcomes are ``(frozenset of frozenset blocks, {agent: Fraction})``
pairs, and every concept is re-derived straight from its definition.
"""

from fractions import Fraction
from itertools import chain, combinations, product


def table(inst):
    """Full feasible-set table ``{frozenset: [dict agent -> Fraction]}``."""
    agents = inst["agents"]
    listed = {}
    for e in inst["coalitions"]:
        listed[frozenset(e["members"])] = [
            {a: Fraction(x) for a, x in zip(e["members"], vec)} for vec in e["payoffs"]]
    out = {}
    for k in range(1, len(agents) + 1):
        for s in combinations(agents, k):
            fs = frozenset(s)
            if fs in listed:
                out[fs] = listed[fs]
            elif k == 1:
                out[fs] = [{s[0]: Fraction(0)}]
            else:
                out[fs] = [{a: Fraction(-1) for a in s}]
    return out


def nonempty_subsets(items):
    items = list(items)
    return [frozenset(c) for c in chain.from_iterable(
        combinations(items, k) for k in range(1, len(items) + 1))]


def set_partitions(agents):
    """Partitions via labelling functions, deduplicated (slow but obviously right)."""
    agents = list(agents)
    seen = set()
    for labels in product(range(len(agents)), repeat=len(agents)):
        blocks = {}
        for a, lab in zip(agents, labels):
            blocks.setdefault(lab, set()).add(a)
        seen.add(frozenset(frozenset(b) for b in blocks.values()))
    return seen


def ordered_partition_count(n):
    """Count ordered set partitions by choosing the first tier recursively."""
    if n == 0:
        return 1
    items = list(range(n))
    total = 0
    for first in nonempty_subsets(items):
        total += ordered_partition_count(n - len(first))
    return total


def bell(n):
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


def outcomes(inst):
    """Generate-and-filter: every payoff assignment drawn from the values that
    appear anywhere for that agent, kept when nonnegative and block-feasible."""
    agents = inst["agents"]
    f = table(inst)
    pool = {a: sorted({Fraction(0)} | {x[a] for s, xs in f.items() if a in s for x in xs})
            for a in agents}
    found = set()
    for part in set_partitions(agents):
        for vals in product(*(pool[a] for a in agents)):
            v = dict(zip(agents, vals))
            if any(m < 0 for m in vals):
                continue
            if all(any(all(x[a] == v[a] for a in b) for x in f[b]) for b in part):
                found.add((part, tuple(sorted(v.items()))))
    return found


def _pay(o):
    return dict(o[1])


def blocked(inst, o):
    f, v = table(inst), _pay(o)
    return any(all(x[a] > v[a] for a in s) for s in f for x in f[s])


def weakly_blocked(inst, o):
    f, v = table(inst), _pay(o)
    return any(all(x[a] >= v[a] for a in s) and any(x[a] > v[a] for a in s)
               for s in f for x in f[s])


def core(inst):
    return {o for o in outcomes(inst) if not blocked(inst, o)}


def strict_core(inst):
    return {o for o in outcomes(inst) if not weakly_blocked(inst, o)}


def unilaterally_blocked(inst, o):
    f, v = table(inst), _pay(o)
    for a in inst["agents"]:
        for t in o[0]:
            for s in f:
                if s - {a} <= t and any(all(x[b] > v[b] for b in s) for x in f[s]):
                    return True
    return False


def individually_stable(inst):
    return {o for o in outcomes(inst) if not unilaterally_blocked(inst, o)}


def pareto(inst):
    outs = outcomes(inst)
    agents = inst["agents"]

    def dom(p, q):
        p, q = _pay(p), _pay(q)
        return all(p[a] >= q[a] for a in agents) and any(p[a] > q[a] for a in agents)

    return {o for o in outs if not any(dom(p, o) for p in outs)}


def weak_bargaining_set(inst, classical):
    f = table(inst)
    outs = outcomes(inst)

    def subset_blocks(o, t):
        v = _pay(o)
        return any(all(x[a] > v[a] for a in s) for s in nonempty_subsets(t) for x in f[s])

    result = set()
    for base in pareto(inst):
        v = _pay(base)
        ok = True
        for o1 in outs:
            w = _pay(o1)
            for t in o1[0]:
                if not all(w[a] > v[a] for a in t) or subset_blocks(o1, t):
                    continue
                countered = False
                for o2 in outs:
                    z = _pay(o2)
                    for u in o2[0]:
                        if not (u - t and t - u and u & t):
                            continue
                        if not all(z[a] > w[a] for a in u):
                            continue
                        if classical and not all(z[a] >= v[a] for a in u - t):
                            continue
                        countered = True
                if not countered:
                    ok = False
        if ok:
            result.add(base)
    return result


def as_oracle(o):
    """Convert a package Outcome into the oracle's representation."""
    return (frozenset(frozenset(b) for b in o.structure), tuple(sorted(o.payoff.items())))
