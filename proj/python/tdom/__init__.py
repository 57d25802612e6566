"""Total domination and annihilation numbers of small graphs."""

import json

from ._tdom import *  # noqa: F401,F403
from ._tdom import DEFAULT_SEED, _replay_lemmas, _verify_conjecture, _verify_instance


def verify_instance(graph, family="graph"):
    """Solve one graph and return its verification record as a dict."""
    return json.loads(_verify_instance(graph, family))


def verify_conjecture(family="trees", min_n=2, max_n=10, seed=DEFAULT_SEED, count=200, jobs=1):
    """Run a campaign; returns (records, summary)."""
    out = json.loads(_verify_conjecture(family, min_n, max_n, seed, count, jobs))
    return out["records"], out["summary"]


def replay_lemmas(seed=DEFAULT_SEED, count=200):
    return json.loads(_replay_lemmas(seed, count))
