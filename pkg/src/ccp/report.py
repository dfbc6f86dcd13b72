"""JSON rendering of outcomes, witnesses and command reports."""

from __future__ import annotations

import hashlib
import json
from importlib import resources

from .model import ccp_to_json, money_to_json


def canonical_json(obj):
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def instance_digest(g):
    return "sha256:" + hashlib.sha256(canonical_json(ccp_to_json(g)).encode()).hexdigest()


def vector_json(v):
    return {"coalition": list(v.coalition), "amounts": [money_to_json(m) for m in v.amounts]}


def outcome_json(o):
    return {
        "structure": [list(b) for b in o.structure],
        "payoff": {str(a): money_to_json(o.payoff[a]) for a in sorted(o.payoff)},
    }


def outcome_list_json(outs):
    return {"outcomes": [outcome_json(o) for o in outs], "count": len(outs)}


def witness_json(w):
    """Serialize any of the top-coalition / top-cycle witnesses."""
    if w is None:
        return None
    out = {"scope": list(w.scope), "top": list(w.top), "vector": vector_json(w.vector)}
    if hasattr(w, "tiers"):
        out["tiers"] = [list(t) for t in w.tiers]
    if hasattr(w, "rank"):
        out["rank"] = {str(a): r for a, r in sorted(w.rank.items())}
    return out


def make_report(command, g, result, elapsed, **stats):
    stats = {"agents": g.n, "elapsedSeconds": round(elapsed, 6), **stats}
    return {"command": command, "instanceDigest": instance_digest(g),
            "result": result, "stats": stats}


def load_schema():
    return json.loads(resources.files("ccp").joinpath("report_schema.json").read_text())
