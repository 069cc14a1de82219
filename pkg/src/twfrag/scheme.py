"""The end-to-end approximation scheme and its verification helpers.

Pipeline: build a distance orientation of the input, inflate the cover
parameter by c * (max outdegree + 1)^r, fetch a fragility cover at the
inflated parameter, and solve the problem on each residual graph with the
vertices that can reach the deleted set by a short directed walk barred
from selection.  The heaviest residual answer is admissible in the whole
graph and within 1 - 1/k of the optimum.
"""

import time
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Union

import numpy as np

from . import _kernels
from .decompose import COVER_PROVIDERS, FragilityCover
from .errors import ConfigError, InputError, InternalConsistencyError, ResourceRefusal
from .graph import OVER, Graph, VertexSet, truncated_bfs
from .orient import DistanceOrientation, build_distance_orientation
from .solvers import ProblemDef

MAX_INFLATION = 10 ** 12


def inflation_factor(r: int, c: int, delta: int) -> int:
    """Cover-parameter multiplier c * (delta + 1)^r for observed outdegree
    delta; the class-level constant is replaced by the instance's own."""
    if delta < 0:
        raise InputError("outdegree must be non-negative")
    if r < 1 or c < 1:
        raise InputError("r and c must be positive")
    value = c * (delta + 1) ** r
    if value > MAX_INFLATION:
        raise ResourceRefusal(
            f"inflation factor {value} exceeds cap {MAX_INFLATION}; "
            "instance outdegree too large for this scheme configuration"
        )
    return value


def blocked_set(o: DistanceOrientation, x: VertexSet) -> VertexSet:
    """Vertices with a directed out-walk of length <= r into x (x included)."""
    if len(x) == 0:
        return VertexSet(o.n)
    rev_indptr, rev_indices = o.reverse_csr()
    sources = np.array(sorted(x), dtype=np.int64)
    dist = _kernels.bfs_multi(rev_indptr, rev_indices, sources, o.r)
    return VertexSet(o.n, np.nonzero(dist <= o.r)[0].tolist())


def witness_shadow(o: DistanceOrientation, x: VertexSet,
                   witnesses: Dict[int, frozenset]) -> VertexSet:
    """Union of witness sets over solution vertices whose out-ball meets x."""
    blocked = blocked_set(o, x)
    out = set()
    for v, rv in witnesses.items():
        if v in blocked:
            out |= rv
    return VertexSet(o.n, out)


@dataclass
class SchemeConfig:
    k: int
    problem: ProblemDef
    cover_provider: Union[str, callable] = "baker"
    delta: Optional[int] = None  # None: use the observed orientation outdegree
    instance: str = ""

    def __post_init__(self):
        if self.k < 2:
            raise ConfigError("k must be at least 2")


@dataclass
class SchemeOutcome:
    chosen: VertexSet
    weight: int
    best_i: int
    per_i_weights: List[int]
    h_value: int
    k_inflated: int
    orientation_stats: dict
    cover_stats: dict
    n: int = 0
    m_edges: int = 0
    problem: str = ""
    r: int = 0
    c: int = 0
    k: int = 0
    instance: str = ""
    time_ms: float = 0.0

    def to_json_dict(self, opt: Optional[int] = None) -> dict:
        ratio = None
        if opt is not None and opt > 0:
            ratio = self.weight / opt
        return {
            "instance": self.instance,
            "n": self.n,
            "m_edges": self.m_edges,
            "problem": self.problem,
            "r": self.r,
            "c": self.c,
            "k": self.k,
            "h": self.h_value,
            "k_inflated": self.k_inflated,
            "m_sets": len(self.per_i_weights),
            "max_outdegree": self.orientation_stats.get("max_outdegree"),
            "max_width": self.cover_stats.get("max_width"),
            "per_i_weights": self.per_i_weights,
            "value": self.weight,
            "opt": opt,
            "ratio": ratio,
            "time_ms": self.time_ms,
        }


def run_scheme(g: Graph, cfg: SchemeConfig, cover: FragilityCover = None) -> SchemeOutcome:
    """Run the full pipeline; ``cover`` may be supplied to reuse one."""
    t0 = time.perf_counter()
    problem = cfg.problem
    r = problem.r
    o = build_distance_orientation(g, r)
    delta = o.max_outdegree if cfg.delta is None else cfg.delta
    h = inflation_factor(r, problem.c, delta)
    k_inflated = h * cfg.k
    if cover is None:
        provider = cfg.cover_provider
        if isinstance(provider, str):
            if provider not in COVER_PROVIDERS:
                raise ConfigError(f"unknown cover provider {provider!r}")
            provider_fn = COVER_PROVIDERS[provider]
        else:
            provider_fn = provider
        cover = provider_fn(g, k_inflated)
    if cover.k_param < k_inflated:
        raise ConfigError(
            f"cover built at parameter {cover.k_param} < required {k_inflated}"
        )
    counts = cover.membership_counts()
    if g.n and not bool((counts * k_inflated <= cover.m).all()):
        raise ConfigError(
            f"cover provider {cover.provider!r} violates the membership bound "
            f"at inflated parameter {k_inflated}"
        )

    full = VertexSet.full(g.n)
    per_i_weights: List[int] = []
    best = None  # (weight, i, chosen_set)
    memo = {}  # equal deletion sets yield identical subproblems
    for i in range(cover.m):
        x = cover.sets[i]
        if x.members in memo:
            weight, chosen_orig = memo[x.members]
            per_i_weights.append(weight)
            if best is None or weight > best[0]:
                best = (weight, i, chosen_orig)
            continue
        y = blocked_set(o, x)
        allowed_orig = full.difference(y).difference(x)
        res = cover.residuals[i]
        old_ids = res.old_ids
        pos_of = {int(v): idx for idx, v in enumerate(old_ids)}
        allowed_sub = VertexSet(res.graph.n,
                                [pos_of[v] for v in allowed_orig if v in pos_of])
        sub_res = problem.solve(res.graph, res.td, res.graph.weights, allowed_sub)
        chosen_orig = frozenset(int(old_ids[v]) for v in sub_res.chosen)
        weight = int(sub_res.weight)
        memo[x.members] = (weight, chosen_orig)
        per_i_weights.append(weight)
        # ties resolved toward the smallest i (ascending iteration)
        if best is None or weight > best[0]:
            best = (weight, i, chosen_orig)

    weight, best_i, chosen = best
    chosen_set = VertexSet(g.n, chosen)
    if not problem.admissible(g, chosen):
        raise InternalConsistencyError(
            "scheme output failed the whole-graph admissibility re-check"
        )
    elapsed = (time.perf_counter() - t0) * 1000.0
    return SchemeOutcome(
        chosen=chosen_set,
        weight=weight,
        best_i=best_i,
        per_i_weights=per_i_weights,
        h_value=h,
        k_inflated=k_inflated,
        orientation_stats={
            "max_outdegree": o.max_outdegree,
            "stage_outdegrees": o.stats.get("stage_outdegrees"),
            "back_steps": o.stats.get("back_steps"),
        },
        cover_stats={
            "provider": cover.provider,
            "m": cover.m,
            "max_width": cover.width_bound,
        },
        n=g.n,
        m_edges=g.m,
        problem=problem.name,
        r=r,
        c=problem.c,
        k=cfg.k,
        instance=cfg.instance,
        time_ms=elapsed,
    )


@dataclass
class AvoidanceReport:
    ok: bool
    preconditions_met: bool
    best_i: int
    best_weight: int
    total_weight: int
    detail: str = ""


def check_avoidance_bound(g: Graph, o: DistanceOrientation, cover: FragilityCover,
                          problem: ProblemDef, a: VertexSet, k: int) -> AvoidanceReport:
    """Verify that some residual keeps at least (1 - 1/k) of a's weight after
    dropping the witness shadow of the deleted set."""
    need = inflation_factor(problem.r, problem.c, o.max_outdegree) * k
    counts = cover.membership_counts()
    pre_ok = bool((counts * need <= cover.m).all()) if g.n else True
    if not pre_ok:
        return AvoidanceReport(False, False, -1, 0, 0,
                               "cover membership bound too weak for this k")
    wa = g.weight_of(a)
    if len(a) and not problem.admissible(g, a):
        return AvoidanceReport(False, False, -1, 0, wa, "set is not admissible")
    witnesses = problem.witness_system(g, a) if len(a) else {}
    best_i, best_w = -1, -1
    for i in range(cover.m):
        shadow = witness_shadow(o, cover.sets[i], witnesses)
        kept = [v for v in a if v not in shadow]
        w = g.weight_of(kept)
        if w > best_w:
            best_w, best_i = w, i
    ok = k * best_w >= (k - 1) * wa
    return AvoidanceReport(ok, True, best_i, best_w, wa)


@dataclass
class DeletionReport:
    ok: bool
    applicable: bool
    offending: list = field(default_factory=list)
    detail: str = ""


def check_deletion_admissibility(g: Graph, o: DistanceOrientation, x: VertexSet,
                                 b: VertexSet, problem: ProblemDef) -> DeletionReport:
    """Verify that for the set b (disjoint from the blocked set of x) every
    truncated pairwise distance survives deleting x, and that admissibility
    in the residual agrees with admissibility in the whole graph."""
    r = problem.r
    y = blocked_set(o, x)
    inside = [v for v in b if v in y]
    if inside:
        return DeletionReport(False, False, inside,
                              "precondition failed: set intersects the blocked set")
    keep = [v for v in range(g.n) if v not in x]
    sub, old_ids = g.subgraph(keep)
    pos_of = {int(v): idx for idx, v in enumerate(old_ids)}
    bad = []
    bl = sorted(b)
    for u in bl:
        dg = truncated_bfs(g, u, r)
        ds = truncated_bfs(sub, pos_of[u], r)
        for v in bl:
            if v <= u:
                continue
            a1 = int(dg[v])
            a2 = int(ds[pos_of[v]])
            if a1 != a2:
                bad.append((u, v, a1 if a1 != OVER else "OVER", a2 if a2 != OVER else "OVER"))
    adm_g = problem.admissible(g, b)
    adm_sub = problem.admissible(sub, [pos_of[v] for v in b])
    if adm_g != adm_sub:
        bad.append(("admissibility", adm_g, adm_sub, ""))
    return DeletionReport(not bad, True, bad)
