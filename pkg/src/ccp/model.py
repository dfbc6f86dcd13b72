"""Exact data model for contract choice problems.

Money is held as :class:`fractions.Fraction` everywhere; a CCP maps each
nonempty coalition (a strictly ascending tuple of integer agent ids) to a
nonempty finite tuple of payoff vectors.  Unlisted coalitions fall back to
the ``minus-e`` default (the single all ``-1`` vector) unless the instance is
``strict``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

Agent = int
Money = Fraction
Coalition = tuple  # tuple[int, ...], strictly ascending

DEFAULT_MAX_AGENTS = 8
DEFAULT_RULES = ("minus-e", "strict")

ZERO = Fraction(0)


class CCPError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(CCPError, ValueError):
    """An instance or outcome violates the model; ``errors`` lists every problem."""

    def __init__(self, errors):
        if isinstance(errors, str):
            errors = [errors]
        self.errors = list(errors)
        super().__init__("; ".join(self.errors))


class SizeGuardError(CCPError, ValueError):
    pass


def check_size(n, max_agents):
    if max_agents is not None and n > max_agents:
        raise SizeGuardError(f"{n} agents exceeds the size guard of {max_agents}")


def to_money(value) -> Fraction:
    """Parse an exact amount: ints, Fractions, or decimal/ratio strings.

    Floats and bools are rejected since they cannot be read exactly.
    """
    if isinstance(value, bool):
        raise ValidationError(f"not an amount: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise ValidationError(f"not an amount: {value!r}") from None
    raise ValidationError(f"not an exact amount: {value!r}")


def money_to_json(m: Fraction):
    """Integers stay JSON numbers; everything else becomes ``"p/q"``."""
    if m.denominator == 1:
        return m.numerator
    return f"{m.numerator}/{m.denominator}"


def is_canonical(m: Fraction) -> bool:
    return m.denominator > 0 and math.gcd(m.numerator, m.denominator) == 1


def coalition(members: Iterable[int]) -> Coalition:
    c = tuple(sorted(members))
    if not c:
        raise ValidationError("coalition must be nonempty")
    if len(set(c)) != len(c):
        raise ValidationError(f"duplicate members in coalition {list(c)}")
    return c


def coalition_key(c: Coalition):
    """Sort key giving the canonical coalition order: by size, then lexicographic."""
    return (len(c), c)


@dataclass(frozen=True)
class PayoffVector:
    """A payoff to each member of ``coalition``, index-aligned with its sorted members."""

    coalition: Coalition
    amounts: tuple

    def __post_init__(self):
        if len(self.amounts) != len(self.coalition):
            raise ValidationError(
                f"payoff vector of arity {len(self.amounts)} for coalition "
                f"{list(self.coalition)} of size {len(self.coalition)}")

    def __getitem__(self, agent):
        return self.amounts[self.coalition.index(agent)]

    def items(self):
        return zip(self.coalition, self.amounts)

    def as_dict(self):
        return dict(zip(self.coalition, self.amounts))

    @property
    def nonnegative(self):
        return all(m >= 0 for m in self.amounts)

    def __repr__(self):
        vals = ", ".join(str(m) for m in self.amounts)
        return f"PayoffVector({list(self.coalition)}: ({vals}))"


def minus_e(c: Coalition) -> PayoffVector:
    return PayoffVector(c, (Fraction(-1),) * len(c))


def zero_vector(c: Coalition) -> PayoffVector:
    return PayoffVector(c, (ZERO,) * len(c))


def all_coalitions(agents: Sequence[int]):
    """Every nonempty subset of ``agents``, smallest first, lexicographic within a size."""
    for k in range(1, len(agents) + 1):
        yield from combinations(agents, k)


class CCP:
    """A contract choice problem.

    Build one through :func:`validate_ccp` (raw JSON-like input) or through
    the generators in :mod:`ccp.instances`; the constructor trusts its
    arguments.  ``listed`` holds the explicitly given feasible sets; every
    other non-singleton coalition gets ``{-e^S}``.
    """

    __slots__ = ("agents", "listed", "default", "_cache")

    def __init__(self, agents, listed, default="minus-e"):
        self.agents = tuple(agents)
        self.listed = dict(listed)
        self.default = default
        self._cache = {}

    @property
    def n(self):
        return len(self.agents)

    def feasible(self, s: Coalition):
        """The feasible payoff vectors of coalition ``s`` as a tuple."""
        vecs = self.listed.get(s)
        if vecs is not None:
            return vecs
        if len(s) == 1:
            return (zero_vector(s),)
        if self.default == "strict":
            raise ValidationError(f"no feasible set for coalition {list(s)} (strict instance)")
        return (minus_e(s),)

    def coalitions(self):
        return all_coalitions(self.agents)

    def table(self):
        """Fully materialized ``{coalition: feasible vectors}``."""
        return {s: self.feasible(s) for s in self.coalitions()}

    def __eq__(self, other):
        if not isinstance(other, CCP):
            return NotImplemented
        if self.agents != other.agents:
            return False
        return all(set(self.feasible(s)) == set(other.feasible(s))
                   for s in self.coalitions())

    def __hash__(self):
        return hash((self.agents, frozenset(
            (s, frozenset(self.feasible(s))) for s in self.listed)))

    def __repr__(self):
        return f"CCP(agents={list(self.agents)}, listed={len(self.listed)} coalitions)"


def validate_ccp(raw: Mapping, max_agents=DEFAULT_MAX_AGENTS) -> CCP:
    """Validate a parsed instance description and return the CCP.

    ``raw`` follows the instance JSON format: ``agents``, ``coalitions``
    (each with ``members`` and ``payoffs``) and an optional ``default``.
    All problems found are reported together in one :class:`ValidationError`.
    """
    errors = []
    agents_raw = raw.get("agents")
    if not isinstance(agents_raw, list) or not agents_raw:
        raise ValidationError("'agents' must be a nonempty list of integers")
    if any(isinstance(a, bool) or not isinstance(a, int) or a < 0 for a in agents_raw):
        raise ValidationError("agent ids must be non-negative integers")
    if len(set(agents_raw)) != len(agents_raw):
        raise ValidationError("duplicate agent ids")
    if list(agents_raw) != sorted(agents_raw):
        errors.append("'agents' must be in ascending order")
    agents = tuple(sorted(agents_raw))
    check_size(len(agents), max_agents)
    agent_set = set(agents)

    default = raw.get("default", "minus-e")
    if default not in DEFAULT_RULES:
        errors.append(f"unknown default rule {default!r}")

    listed = {}
    for i, entry in enumerate(raw.get("coalitions", [])):
        members = entry.get("members")
        if not isinstance(members, list) or not members:
            errors.append(f"coalition #{i}: 'members' must be a nonempty list")
            continue
        unknown = [m for m in members if m not in agent_set]
        if unknown:
            errors.append(f"coalition #{i}: unknown agent id(s) {unknown}")
            continue
        if members != sorted(set(members)):
            errors.append(f"coalition #{i}: members must be strictly ascending")
            continue
        c = tuple(members)
        if c in listed:
            errors.append(f"duplicate coalition entry {members}")
            continue
        payoffs = entry.get("payoffs")
        if not isinstance(payoffs, list) or not payoffs:
            errors.append(f"coalition {members}: empty payoff set")
            continue
        vecs = []
        for vec in payoffs:
            if not isinstance(vec, list) or len(vec) != len(c):
                errors.append(f"coalition {members}: payoff vector of wrong arity {vec!r}")
                continue
            try:
                pv = PayoffVector(c, tuple(to_money(x) for x in vec))
            except ValidationError as exc:
                errors.extend(f"coalition {members}: {e}" for e in exc.errors)
                continue
            if pv not in vecs:
                vecs.append(pv)
        if not vecs:
            continue
        if len(c) == 1 and vecs != [zero_vector(c)]:
            errors.append(f"coalition {members}: singleton feasible set must be {{0}}")
            continue
        listed[c] = tuple(vecs)

    if default == "strict" and not errors:
        missing = [list(s) for s in all_coalitions(agents)
                   if len(s) > 1 and s not in listed]
        if missing:
            errors.append(f"strict instance omits coalitions {missing}")
    if errors:
        raise ValidationError(errors)
    return CCP(agents, listed, default)


def ccp_to_json(g: CCP) -> dict:
    """Instance-format dict; coalitions in canonical order, singletons omitted."""
    entries = []
    for s in sorted(g.listed, key=coalition_key):
        if len(s) == 1:
            continue
        entries.append({
            "members": list(s),
            "payoffs": [[money_to_json(m) for m in v.amounts] for v in g.listed[s]],
        })
    return {"agents": list(g.agents), "coalitions": entries, "default": g.default}


class Outcome:
    """A coalition structure with a payoff for every agent.

    ``structure`` is a tuple of coalitions ordered by smallest member;
    ``payoff`` maps each agent to a Fraction.  Instances are immutable and
    hashable.  Use :func:`validate_outcome` to check feasibility against a CCP.
    """

    __slots__ = ("structure", "payoff", "_key")

    def __init__(self, structure, payoff):
        structure = tuple(sorted((tuple(sorted(b)) for b in structure)))
        object.__setattr__(self, "structure", structure)
        object.__setattr__(self, "payoff", dict(payoff))
        object.__setattr__(self, "_key", (structure, tuple(sorted(self.payoff.items()))))

    def __setattr__(self, name, value):
        raise AttributeError("Outcome is immutable")

    def __eq__(self, other):
        if not isinstance(other, Outcome):
            return NotImplemented
        return self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def block_of(self, agent):
        for b in self.structure:
            if agent in b:
                return b
        raise KeyError(agent)

    def values(self, agents=None):
        """Payoffs as a tuple in agent order."""
        agents = sorted(self.payoff) if agents is None else agents
        return tuple(self.payoff[a] for a in agents)

    def __repr__(self):
        blocks = ", ".join("{" + ",".join(map(str, b)) + "}" for b in self.structure)
        vals = ", ".join(f"{a}:{self.payoff[a]}" for a in sorted(self.payoff))
        return f"Outcome([{blocks}], {{{vals}}})"


def restrict(payoff: Mapping, s: Coalition) -> PayoffVector:
    """The restriction of ``payoff`` to coalition ``s``."""
    missing = [a for a in s if a not in payoff]
    if missing:
        raise ValidationError(f"payoff undefined for agent(s) {missing}")
    return PayoffVector(tuple(s), tuple(payoff[a] for a in s))


def validate_outcome(g: CCP, structure, payoff: Mapping) -> Outcome:
    """Check that ``(structure, payoff)`` is an outcome of ``g`` and return it.

    Collects every violation: partition errors, missing or extra agents in
    the payoff map, negative payoffs, and block restrictions that are not
    feasible for their block.
    """
    errors = []
    blocks = []
    for b in structure:
        try:
            blocks.append(coalition(b))
        except ValidationError as exc:
            errors.extend(exc.errors)
    covered = [a for b in blocks for a in b]
    agent_set = set(g.agents)
    if len(covered) != len(set(covered)):
        errors.append("structure blocks are not pairwise disjoint")
    if set(covered) != agent_set:
        errors.append("structure does not cover exactly the agent set")
    try:
        pay = {a: to_money(m) for a, m in payoff.items()}
    except ValidationError as exc:
        raise ValidationError(exc.errors) from None
    if set(pay) != agent_set:
        errors.append("payoff map must assign every agent and only agents")
    negative = sorted(a for a, m in pay.items() if m < 0)
    if negative:
        errors.append(f"negative payoff for agent(s) {negative}")
    if not errors:
        for b in blocks:
            if restrict(pay, b) not in g.feasible(b):
                errors.append(f"payoff restricted to {list(b)} is not feasible")
    if errors:
        raise ValidationError(errors)
    return Outcome(blocks, pay)


def singletons_outcome(g: CCP) -> Outcome:
    return Outcome([(a,) for a in g.agents], {a: ZERO for a in g.agents})
