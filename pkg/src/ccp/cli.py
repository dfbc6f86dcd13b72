"""``ccl``: command-line front end emitting deterministic JSON reports.

Exit codes: 0 success, 1 invalid instance, 2 size guard exceeded,
3 a construction disagreed with enumeration.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from . import bargaining, concepts, instances, properties
from .combinatorics import all_outcomes
from .model import (DEFAULT_MAX_AGENTS, SizeGuardError, ValidationError, ccp_to_json,
                    money_to_json, validate_ccp)
from .report import (make_report, outcome_json, outcome_list_json, vector_json,
                     witness_json)

EXIT_INVALID, EXIT_SIZE, EXIT_VERIFY = 1, 2, 3

PROPERTY_FINDERS = {
    "weak-top-coalition": properties.satisfies_weak_top_coalition_property,
    "top-coalition": properties.satisfies_top_coalition_property,
    "weak-top-cycle": properties.satisfies_weak_top_cycle_property,
}


def _load_json(path):
    with open(path) as fh:
        return json.load(fh, parse_float=Fraction)


def _source_args(p, spec_only=False):
    src = p.add_mutually_exclusive_group(required=True)
    if not spec_only:
        src.add_argument("--builtin", choices=sorted(instances.BUILTINS))
        src.add_argument("--instance", metavar="FILE", help="instance JSON file")
    src.add_argument("--spec", metavar="FILE", help="generator spec JSON file")


def build_parser():
    parser = argparse.ArgumentParser(prog="ccl", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-agents", type=int, default=DEFAULT_MAX_AGENTS)
    common.add_argument("--format", choices=("json", "table"), default="json")
    common.add_argument("--threads", type=int, default=1,
                        help="accepted for compatibility; enumeration is sequential")
    sub = parser.add_subparsers(dest="command", required=True)

    for name in ("validate", "outcomes", "core", "strict-core", "super-additive"):
        _source_args(sub.add_parser(name, parents=[common]))

    p = sub.add_parser("pareto", parents=[common])
    _source_args(p)
    p.add_argument("--mode", choices=concepts.PARETO_MODES, default="outcome-domination")
    p.add_argument("--weak", action="store_true", help="weak Pareto optimality")

    p = sub.add_parser("is", parents=[common])
    _source_args(p)
    p.add_argument("--is-variant", choices=concepts.IS_VARIANTS, default="literal")

    p = sub.add_parser("wb", parents=[common])
    _source_args(p)
    p.add_argument("--classical", action="store_true")

    p = sub.add_parser("properties", parents=[common])
    _source_args(p)
    which = p.add_mutually_exclusive_group(required=True)
    for prop in PROPERTY_FINDERS:
        which.add_argument(f"--{prop}", dest="prop", action="store_const", const=prop)

    p = sub.add_parser("construct", parents=[common])
    _source_args(p)
    p.add_argument("--theorem", type=int, choices=(1, 2, 3, 4), required=True)

    _source_args(sub.add_parser("generate", parents=[common]), spec_only=True)
    _source_args(sub.add_parser("ttc", parents=[common]), spec_only=True)
    return parser


def load_instance(args):
    if getattr(args, "builtin", None):
        return instances.builtin(args.builtin)
    if getattr(args, "instance", None):
        return validate_ccp(_load_json(args.instance), args.max_agents)
    return instances.from_spec(_load_json(args.spec), args.max_agents)


def _construct(g, theorem, m):
    """Result dict for ``construct``; raises VerificationError on a discrepancy."""
    if theorem == 4:
        pareto = concepts.pareto_set(g, max_agents=m)
        start = pareto[0]
        try:
            out = bargaining.wb_chain_construct(g, start, m)
        except bargaining.ChainDiscrepancy as exc:
            exc.result = {
                "theorem": 4, "outcome": None, "discrepancy": str(exc),
                "candidate": outcome_json(exc.candidate),
                "chain": [outcome_json(o) for o in exc.report["chain"]],
            }
            raise
        return {"theorem": 4, "outcome": outcome_json(out), "start": outcome_json(start)}
    finder, build, label = {
        1: (properties.find_weak_top_coalition, properties.construct_core_outcome,
            "weak top coalition"),
        2: (properties.find_top_coalition, properties.construct_strict_core_outcome,
            "top coalition"),
        3: (properties.find_weak_top_cycle, properties.construct_is_outcome,
            "weak top cycle"),
    }[theorem]
    try:
        stages = properties.construction_stages(g, finder, label, m)
    except properties.PropertyFailure as exc:
        return {"theorem": theorem, "outcome": None, "failure": str(exc)}
    result = {"theorem": theorem, "stages": [witness_json(w) for w in stages]}
    try:
        result["outcome"] = outcome_json(build(g, max_agents=m))
    except properties.VerificationError as exc:
        exc.result = {**result, "outcome": None, "discrepancy": str(exc),
                      "candidate": outcome_json(exc.candidate) if exc.candidate else None}
        raise
    return result


def run_command(args, g):
    m = args.max_agents
    cmd = args.command
    if cmd == "validate":
        return {"valid": True, "agents": list(g.agents),
                "listedCoalitions": len([s for s in g.listed if len(s) > 1]),
                "default": g.default}
    if cmd == "outcomes":
        return outcome_list_json(all_outcomes(g, m))
    if cmd == "core":
        return outcome_list_json(concepts.core(g, m))
    if cmd == "strict-core":
        return outcome_list_json(concepts.strict_core(g, m))
    if cmd == "pareto":
        res = outcome_list_json(concepts.pareto_set(g, args.mode, args.weak, m))
        return {**res, "mode": args.mode, "weak": args.weak}
    if cmd == "is":
        res = outcome_list_json(concepts.individually_stable_set(g, args.is_variant, m))
        return {**res, "variant": args.is_variant}
    if cmd == "wb":
        res = outcome_list_json(bargaining.weak_bargaining_set(g, args.classical, m))
        return {**res, "classical": args.classical}
    if cmd == "properties":
        holds, wit = PROPERTY_FINDERS[args.prop](g, m)
        bad = properties.failing_scope(wit)
        return {
            "property": args.prop, "holds": holds,
            "failingScope": list(bad) if bad else None,
            "witnesses": [{"scope": list(v), "witness": witness_json(w)} for v, w in wit.items()],
        }
    if cmd == "construct":
        return _construct(g, args.theorem, m)
    if cmd == "generate":
        return {"instance": ccp_to_json(g)}
    if cmd == "super-additive":
        ok, cx = instances.is_super_additive(g, m)
        if cx is not None:
            s, t, x, y = cx
            cx = {"S": list(s), "T": list(t), "x": vector_json(x), "y": vector_json(y)}
        return {"superAdditive": ok, "counterexample": cx}
    raise AssertionError(cmd)


def _ttc(args):
    spec = _load_json(args.spec)
    if "utilities" not in spec:
        raise ValidationError("ttc needs a spec with 'utilities'")
    u = instances.utility_profile(spec["utilities"])
    g = instances.shapley_scarf(u, args.max_agents)
    return g, {"outcome": outcome_json(instances.top_trading_cycles(u))}


def format_table(report):
    res = report["result"]
    lines = [f"{report['command']}  {report['instanceDigest'][:19]}"]
    outs = res.get("outcomes")
    if outs is None and res.get("outcome"):
        outs = [res["outcome"]]
    if outs is not None:
        lines.append(f"{'structure':<36} payoff")
        for o in outs:
            blocks = " ".join("{" + ",".join(map(str, b)) + "}" for b in o["structure"])
            pay = " ".join(f"{a}:{v}" for a, v in o["payoff"].items())
            lines.append(f"{blocks:<36} {pay}")
        lines.append(f"({len(outs)} outcome{'s' if len(outs) != 1 else ''})")
    for k, v in res.items():
        if k not in ("outcomes", "outcome", "witnesses", "count"):
            lines.append(f"{k}: {json.dumps(v, sort_keys=True)}")
    return "\n".join(lines)


def emit(report, fmt):
    if fmt == "table":
        print(format_table(report))
    else:
        print(json.dumps(report, sort_keys=True, indent=2))


def main(argv=None):
    args = build_parser().parse_args(argv)
    t0 = time.perf_counter()
    try:
        if args.command == "ttc":
            g, result = _ttc(args)
        else:
            g = load_instance(args)
            result = run_command(args, g)
    except SizeGuardError as exc:
        print(f"ccl: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except ValidationError as exc:
        for e in exc.errors:
            print(f"ccl: invalid instance: {e}", file=sys.stderr)
        return EXIT_INVALID
    except (OSError, json.JSONDecodeError) as exc:
        print(f"ccl: cannot read input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except properties.VerificationError as exc:
        print(f"ccl: verification discrepancy: {exc}", file=sys.stderr)
        result = getattr(exc, "result", None)
        if result is not None:
            emit(make_report(args.command, g, result, time.perf_counter() - t0), args.format)
        return EXIT_VERIFY
    count = result.get("count")
    extra = {"count": count} if count is not None else {}
    emit(make_report(args.command, g, result, time.perf_counter() - t0, **extra), args.format)
    return 0


if __name__ == "__main__":
    sys.exit(main())
