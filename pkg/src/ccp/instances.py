"""Instance generators: housing markets, matching problems, the worked
examples, a super-additivity checker, Top Trading Cycles, and seeded random
instances for property tests.

A utility profile is a dict ``u[a][b]``: what agent ``a`` gets from the
object (or partnership) of ``b``.  ``u[a][a]`` must be 0.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .combinatorics import full_cycles, subsets
from .model import (CCP, DEFAULT_MAX_AGENTS, Outcome, PayoffVector, ValidationError,
                    check_size, minus_e, to_money, zero_vector)

EXAMPLE1_UTILITIES = {
    1: {2: 3, 3: 2, 4: 1, 1: 0},
    2: {3: 3, 1: 2, 4: 1, 2: 0},
    3: {1: 3, 2: 2, 4: 1, 3: 0},
    4: {1: 3, 2: 2, 3: 1, 4: 0},
}

# Agent 3's values for 1 and 2 are 2 and 1.  The worked analysis of this
# example pays (1, 2) on {1, 3} and (2, 1) on {2, 3}, which these values
# produce; the printed table (3 and 2) would not.
EXAMPLE2_UTILITIES = {
    1: {2: 2, 3: 1, 1: 0},
    2: {3: 2, 1: 1, 2: 0},
    3: {1: 2, 2: 1, 3: 0},
}
EXAMPLE2_PRINTED_UTILITIES = {
    1: {2: 2, 3: 1, 1: 0},
    2: {3: 2, 1: 1, 2: 0},
    3: {1: 3, 2: 2, 3: 0},
}


def utility_profile(raw):
    """Normalize a utility mapping (keys may be strings) to exact Fractions."""
    errors = []
    u = {}
    for a, row in raw.items():
        a = int(a)
        u[a] = {int(b): to_money(m) for b, m in row.items()}
    agents = sorted(u)
    for a in agents:
        missing = [b for b in agents if b not in u[a]]
        if missing:
            errors.append(f"utility of agent {a} missing for {missing}")
        extra = [b for b in u[a] if b not in u]
        if extra:
            errors.append(f"utility of agent {a} refers to unknown agent(s) {extra}")
        if u[a].get(a, 0) != 0:
            errors.append(f"u[{a}][{a}] must be 0")
    if errors:
        raise ValidationError(errors)
    return u


def cycle_payoffs(u, s):
    """Distinct payoff vectors of ``s`` induced by its full cycles."""
    out = []
    for mu in full_cycles(s):
        pv = PayoffVector(s, tuple(u[a][mu[a]] for a in s))
        if pv not in out:
            out.append(pv)
    return out


def generalized_matching(u, selection, max_agents=DEFAULT_MAX_AGENTS):
    """CCP whose feasible sets are chosen by ``selection(s, candidates)``.

    ``candidates`` lists the cycle payoffs of ``s`` followed by ``-e^S``;
    ``selection`` returns the nonempty sub-list to keep.
    """
    u = utility_profile(u)
    agents = tuple(sorted(u))
    check_size(len(agents), max_agents)
    listed = {}
    for s in subsets(agents):
        if len(s) == 1:
            continue
        cands = cycle_payoffs(u, s)
        cands.append(minus_e(s))
        chosen = list(selection(s, cands))
        if not chosen:
            raise ValidationError(f"empty selection for coalition {list(s)}")
        if any(c not in cands for c in chosen):
            raise ValidationError(f"selection for {list(s)} is not drawn from the candidates")
        listed[s] = tuple(dict.fromkeys(chosen))
    return CCP(agents, listed)


def _cutoff(limit):
    def select(s, cands):
        return cands[:-1] if len(s) <= limit else cands[-1:]
    return select


def shapley_scarf(u, max_agents=DEFAULT_MAX_AGENTS):
    """Housing market: each coalition's feasible set is its full-cycle trades."""
    return generalized_matching(u, lambda s, c: c[:-1], max_agents)


def roommate(u, max_agents=DEFAULT_MAX_AGENTS):
    return generalized_matching(u, _cutoff(2), max_agents)


def man_woman_child(u, max_agents=DEFAULT_MAX_AGENTS):
    return generalized_matching(u, _cutoff(3), max_agents)


def marriage(men, women, u, max_agents=DEFAULT_MAX_AGENTS):
    """Roommate problem where same-sex partnerships are worth -1 to both sides."""
    men, women = set(men), set(women)
    if men & women:
        raise ValidationError(f"agents {sorted(men & women)} are both men and women")
    u = utility_profile(u)
    if men | women != set(u):
        raise ValidationError("men and women must partition the agents")
    forced = {}
    for a in u:
        same = men if a in men else women
        forced[a] = {b: (Fraction(-1) if b in same and b != a else m)
                     for b, m in u[a].items()}
    return roommate(forced, max_agents)


def gstar():
    return man_woman_child(EXAMPLE1_UTILITIES)


BUILTINS = {
    "example1": lambda: roommate(EXAMPLE1_UTILITIES),
    "example2": lambda: roommate(EXAMPLE2_UTILITIES),
    "gstar": gstar,
}


def builtin(name):
    try:
        return BUILTINS[name]()
    except KeyError:
        raise ValidationError(f"unknown builtin {name!r}; choose from {sorted(BUILTINS)}") from None


def is_super_additive(g, max_agents=DEFAULT_MAX_AGENTS):
    """``(True, None)`` or ``(False, (S, T, x, y))`` for the first failing pair.

    Pairs of disjoint coalitions are scanned in canonical order; ``z``, the
    concatenation of ``x`` and ``y``, is what is missing from F(S ∪ T).
    """
    check_size(g.n, max_agents)
    for s in subsets(g.agents):
        rest = tuple(a for a in g.agents if a not in s)
        for t in subsets(rest):
            union = tuple(sorted(s + t))
            feas = set(g.feasible(union))
            for x in g.feasible(s):
                for y in g.feasible(t):
                    z = {**x.as_dict(), **y.as_dict()}
                    if PayoffVector(union, tuple(z[a] for a in union)) not in feas:
                        return False, (s, t, x, y)
    return True, None


def top_trading_cycles(u):
    """Top Trading Cycles on a strict housing market.

    Each round every remaining agent points at the owner of its favourite
    remaining object; every cycle trades and leaves.  Cycles are taken
    starting from the lowest-id agent.  The result is an outcome of
    ``shapley_scarf(u)``: executed cycles are blocks, agents keeping their
    own object are singletons at 0.
    """
    u = utility_profile(u)
    for a, row in u.items():
        if len(set(row.values())) != len(row):
            raise ValidationError(f"agent {a} has tied utilities")
    remaining = sorted(u)
    blocks, payoff = [], {}
    while remaining:
        points = {a: max(remaining, key=lambda b: u[a][b]) for a in remaining}
        done = set()
        for start in remaining:
            if start in done:
                continue
            path, a = [], start
            while a not in path and a not in done:
                path.append(a)
                a = points[a]
            if a in done:
                done.update(path)
                continue
            ring = path[path.index(a):]
            blocks.append(tuple(sorted(ring)))
            for b in ring:
                payoff[b] = u[b][points[b]]
            done.update(ring)
            remaining = [b for b in remaining if b not in ring]
            break
        else:
            raise AssertionError("no trading cycle found")
    return Outcome(blocks, payoff)


def random_ccp(seed, n_agents, max_vectors=2, value_range=(0, 3), sentinel=False,
               max_agents=DEFAULT_MAX_AGENTS):
    """Reproducible random CCP.

    Each non-singleton coalition gets between 1 and ``max_vectors`` distinct
    vectors with integer entries drawn from ``value_range`` (inclusive).
    With ``sentinel`` the vector ``-e^S`` is added to a coalition with
    probability 1/4.
    """
    lo, hi = value_range
    if not 1 <= n_agents or lo > hi or max_vectors < 1:
        raise ValidationError("random_ccp parameters out of range")
    check_size(n_agents, max_agents)
    rng = random.Random(seed)
    agents = tuple(range(1, n_agents + 1))
    listed = {}
    for s in subsets(agents):
        if len(s) == 1:
            listed[s] = (zero_vector(s),)
            continue
        vecs = []
        for _ in range(rng.randint(1, max_vectors)):
            pv = PayoffVector(s, tuple(Fraction(rng.randint(lo, hi)) for _ in s))
            if pv not in vecs:
                vecs.append(pv)
        if sentinel and rng.random() < 0.25 and minus_e(s) not in vecs:
            vecs.append(minus_e(s))
        listed[s] = tuple(vecs)
    return CCP(agents, listed)


def random_strict_housing_market(seed, n_agents):
    """Random strict utility profile: each row is a shuffle of distinct integers.

    Values run from ``-n`` to ``n``; 0 is reserved for the agent's own object.
    """
    rng = random.Random(seed)
    agents = list(range(1, n_agents + 1))
    pool = [k for k in range(-n_agents, n_agents + 1) if k != 0]
    u = {}
    for a in agents:
        vals = rng.sample(pool, n_agents - 1)
        others = [b for b in agents if b != a]
        u[a] = {b: Fraction(m) for b, m in zip(others, vals)}
        u[a][a] = Fraction(0)
    return u


def from_spec(spec, max_agents=DEFAULT_MAX_AGENTS):
    """Build a CCP from a generator spec dict (see the README for the format)."""
    kind = spec.get("type")
    if kind == "random":
        lo, hi = spec.get("valueRange", [0, 3])
        return random_ccp(spec.get("seed", 0), spec.get("nAgents", 3),
                          spec.get("maxVectors", 2), (lo, hi),
                          spec.get("sentinel", False), max_agents)
    if "utilities" not in spec:
        raise ValidationError(f"generator spec of type {kind!r} needs 'utilities'")
    u = spec["utilities"]
    if kind == "shapley-scarf":
        return shapley_scarf(u, max_agents)
    if kind == "roommate":
        return roommate(u, max_agents)
    if kind == "man-woman-child":
        return man_woman_child(u, max_agents)
    if kind == "marriage":
        return marriage(spec.get("men", []), spec.get("women", []), u, max_agents)
    raise ValidationError(f"unknown generator type {kind!r}")
