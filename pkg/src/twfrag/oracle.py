"""Exact ground-truth oracles by enumeration, for desk-scale instances.

Monotone problems get an extend-only-admissible search with a weight bound;
the pattern-matching problem falls back to full subset enumeration through
its admissibility test.  ``naive_enumeration`` is the dumbest possible
reference, used to cross-check the pruned search itself.
"""

from typing import Optional

import numpy as np

from .errors import ResourceRefusal
from .graph import OVER, Graph, VertexSet, all_pairs_truncated
from .solvers import ProblemDef, SolveResult

ORACLE_LIMIT = 20
NONMONOTONE_LIMIT = 16


def _pruned_mis(g: Graph, w, allowed_list):
    order = allowed_list
    suffix = [0] * (len(order) + 1)
    for i in range(len(order) - 1, -1, -1):
        suffix[i] = suffix[i + 1] + int(w[order[i]])
    nbr = [set(int(u) for u in g.neighbors(v)) for v in range(g.n)]
    best = [0, []]

    def dfs(i, chosen, banned, weight):
        if weight > best[0]:
            best[0] = weight
            best[1] = list(chosen)
        if i == len(order) or weight + suffix[i] <= best[0]:
            return
        v = order[i]
        if v not in banned:
            chosen.append(v)
            dfs(i + 1, chosen, banned | nbr[v], weight + int(w[v]))
            chosen.pop()
        dfs(i + 1, chosen, banned, weight)

    dfs(0, [], set(), 0)
    return best


def _pruned_scattered(g: Graph, w, allowed_list, r):
    dist = all_pairs_truncated(g, r)
    order = allowed_list
    suffix = [0] * (len(order) + 1)
    for i in range(len(order) - 1, -1, -1):
        suffix[i] = suffix[i + 1] + int(w[order[i]])
    best = [0, []]

    def ok(v, chosen):
        for u in chosen:
            d = dist[v, u]
            if d != OVER and d < r:
                return False
        return True

    def dfs(i, chosen, weight):
        if weight > best[0]:
            best[0] = weight
            best[1] = list(chosen)
        if i == len(order) or weight + suffix[i] <= best[0]:
            return
        v = order[i]
        if ok(v, chosen):
            chosen.append(v)
            dfs(i + 1, chosen, weight + int(w[v]))
            chosen.pop()
        dfs(i + 1, chosen, weight)

    dfs(0, [], 0)
    return best


def _pruned_forest(g: Graph, w, allowed_list):
    order = allowed_list
    suffix = [0] * (len(order) + 1)
    for i in range(len(order) - 1, -1, -1):
        suffix[i] = suffix[i + 1] + int(w[order[i]])
    best = [0, []]

    def dfs(i, chosen, parent, weight):
        if weight > best[0]:
            best[0] = weight
            best[1] = list(chosen)
        if i == len(order) or weight + suffix[i] <= best[0]:
            return
        v = order[i]
        # acyclicity check: v may connect to at most one existing component
        p2 = dict(parent)

        def find(x):
            while p2[x] != x:
                p2[x] = p2[p2[x]]
                x = p2[x]
            return x

        p2[v] = v
        dead = False
        for u in g.neighbors(v):
            u = int(u)
            if u in parent:
                ra, rb = find(v), find(u)
                if ra == rb:
                    dead = True
                    break
                p2[rb] = ra
        if not dead:
            chosen.append(v)
            dfs(i + 1, chosen, p2, weight + int(w[v]))
            chosen.pop()
        dfs(i + 1, chosen, parent, weight)

    dfs(0, [], {}, 0)
    return best


def brute_force_opt(g: Graph, problem: ProblemDef, weights=None,
                    allowed: VertexSet = None, limit: int = ORACLE_LIMIT) -> SolveResult:
    """Exact maximum-weight admissible subset of ``allowed``."""
    monotone = problem.c == 1
    cap = limit if monotone else min(limit, NONMONOTONE_LIMIT)
    if g.n > cap:
        raise ResourceRefusal(f"oracle limited to {cap} vertices, got {g.n}")
    w = g.weights if weights is None else np.asarray(weights, dtype=np.int64)
    allowed_list = sorted(allowed) if allowed is not None else list(range(g.n))

    if problem.name == "mis":
        weight, chosen = _pruned_mis(g, w, allowed_list)
    elif problem.name.startswith("ris"):
        weight, chosen = _pruned_scattered(g, w, allowed_list, problem.r)
    elif problem.name == "forest":
        weight, chosen = _pruned_forest(g, w, allowed_list)
    else:
        weight, chosen = _subset_enumeration(g, problem, w, allowed_list)
    return SolveResult(VertexSet(g.n, chosen), int(weight), {"oracle": "pruned" if monotone else "subsets"})


def _subset_enumeration(g: Graph, problem: ProblemDef, w, allowed_list):
    best_w, best_set = 0, []
    k = len(allowed_list)
    for mask in range(1 << k):
        subset = [allowed_list[i] for i in range(k) if (mask >> i) & 1]
        weight = sum(int(w[v]) for v in subset)
        if weight > best_w and problem.admissible(g, subset):
            best_w, best_set = weight, subset
    return best_w, best_set


def naive_enumeration(g: Graph, problem: ProblemDef, weights=None,
                      allowed: VertexSet = None, limit: int = 14) -> SolveResult:
    """Full subset enumeration through problem.admissible, no pruning."""
    if g.n > limit:
        raise ResourceRefusal(f"naive enumeration limited to {limit} vertices, got {g.n}")
    w = g.weights if weights is None else np.asarray(weights, dtype=np.int64)
    allowed_list = sorted(allowed) if allowed is not None else list(range(g.n))
    weight, chosen = _subset_enumeration(g, problem, w, allowed_list)
    return SolveResult(VertexSet(g.n, chosen), int(weight), {"oracle": "naive"})
