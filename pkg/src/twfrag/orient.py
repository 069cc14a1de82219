"""Orientations of the original graph that answer truncated distance queries.

The pipeline: run the fraternal augmentation for r - 1 rounds, then walk the
sequence back down, replacing each augmentation edge by edges of the level
below it (doubling some directions along the way).  Level 0 of that walk is
an orientation of the input graph in which every pair at distance b <= r is
linked by two out-walks meeting at an apex with total length b.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Set, Tuple

import numpy as np

from . import _kernels
from .augment import AugmentationSequence, LengthAugmentation, fraternal_augment, lengths_of
from .errors import InputError, InternalConsistencyError
from .graph import OVER, Graph, VertexSet


@dataclass
class SuperAugmentation:
    """A stage extended by doubled-back edges; ``support`` is the underlying
    genuine augmentation stage and every extra arc (u, v) has (v, u) in it."""

    support: LengthAugmentation
    extra: Set[Tuple[int, int]]
    level: int

    def out_lists(self) -> List[List[int]]:
        rows = [list(row) for row in self.support.out]
        for y, x in self.extra:
            rows[y].append(x)
        for row in rows:
            row.sort()
        return rows

    def has_arc(self, u: int, v: int) -> bool:
        return self.support.has_arc(u, v) or (u, v) in self.extra

    @property
    def max_outdegree(self) -> int:
        if not self.extra:
            return self.support.max_outdegree
        return max(len(r) for r in self.out_lists())


@dataclass
class DistanceOrientation:
    """Directed CSR view of an orientation of the original graph (an edge
    may carry both directions) that represents distances up to ``r``."""

    n: int
    r: int
    out_indptr: np.ndarray
    out_indices: np.ndarray
    max_outdegree: int
    stats: dict = field(default_factory=dict)

    def out_neighbors(self, v: int) -> np.ndarray:
        return self.out_indices[self.out_indptr[v]:self.out_indptr[v + 1]]

    def outdegree(self, v: int) -> int:
        return int(self.out_indptr[v + 1] - self.out_indptr[v])

    def arcs(self):
        for u in range(self.n):
            for v in self.out_neighbors(u):
                yield (u, int(v))

    def undirected_pairs(self) -> set:
        pairs = set()
        for u, v in self.arcs():
            pairs.add((u, v) if u < v else (v, u))
        return pairs

    def reverse_csr(self) -> tuple:
        """CSR of the reversed digraph (in-edges), cached after first use."""
        cached = self.stats.get("_rev")
        if cached is None:
            n = self.n
            heads = self.out_indices.astype(np.int64)
            tails = np.repeat(np.arange(n, dtype=np.int64), np.diff(self.out_indptr))
            order = np.argsort(heads, kind="stable")
            rev_indices = tails[order].astype(np.int32)
            counts = np.bincount(heads, minlength=n)
            rev_indptr = np.zeros(n + 1, dtype=np.int64)
            np.cumsum(counts, out=rev_indptr[1:])
            cached = (rev_indptr, rev_indices)
            self.stats["_rev"] = cached
        return cached

    def dump(self) -> str:
        lines = [f"r={self.r} maxout={self.max_outdegree}"]
        for u, v in sorted(self.arcs()):
            lines.append(f"{u} -> {v}")
        return "\n".join(lines) + "\n"


def _arcs_of(stage_or_super) -> List[Tuple[int, int]]:
    if isinstance(stage_or_super, SuperAugmentation):
        out = stage_or_super.out_lists()
    else:
        out = stage_or_super.out
    return [(u, v) for u in range(len(out)) for v in out[u]]


def back_propagate_step(h: SuperAugmentation, f_prev: LengthAugmentation) -> SuperAugmentation:
    """One level down: rebuild h's certified walks from f_prev's edges.

    Adds (i) the reverse of every f_prev edge that h carries in both
    directions, and (ii) for every h-edge (y, z) and certified length b that
    f_prev does not carry, the edge (y, x) toward the level-below witness x
    whose two edges produced b.  Witness choice: smallest x, then smallest b1.
    """
    support = h.support
    n = support.n
    r = support.r
    new_extra: Set[Tuple[int, int]] = set()

    h_arcs = _arcs_of(h)
    h_arc_set = set(h_arcs)

    # Reversals for pairs doubled in h but single in f_prev.
    for (y, z) in h_arcs:
        if y < z and (z, y) in h_arc_set:
            fw = f_prev.has_arc(y, z)
            bw = f_prev.has_arc(z, y)
            if fw and not bw:
                new_extra.add((z, y))
            elif bw and not fw:
                new_extra.add((y, z))

    # Certified lengths f_prev is missing, keyed by directed h-edge.
    needed: Dict[Tuple[int, int, int], int] = {}
    for (y, z) in h_arcs:
        missing = support.pair_mask(y, z) & ~f_prev.pair_mask(y, z)
        if missing:
            for b in lengths_of(missing):
                needed[(y, z, b)] = -1

    if needed:
        unresolved = len(needed)
        for x in range(n):
            if unresolved == 0:
                break
            row = f_prev.out[x]
            k = len(row)
            if k < 2:
                continue
            masks = [f_prev.pair_mask(x, u) for u in row]
            for i in range(k):
                u = row[i]
                mu = masks[i]
                for j in range(i + 1, k):
                    v = row[j]
                    mv = masks[j]
                    for (y, z, my, mz) in ((u, v, mu, mv), (v, u, mv, mu)):
                        for b1 in lengths_of(my):
                            shifted = mz << b1
                            for b in lengths_of(shifted & ((1 << (r + 1)) - 1)):
                                key = (y, z, b)
                                if needed.get(key, 0) == -1:
                                    needed[key] = x
                                    unresolved -= 1
        for (y, z, b), x in needed.items():
            if x == -1:
                raise InternalConsistencyError(
                    f"no witness for length {b} on edge ({y}, {z}); "
                    "input was not a genuine augmentation sequence"
                )
            if not f_prev.has_arc(y, x):
                new_extra.add((y, x))

    return SuperAugmentation(support=f_prev, extra=new_extra, level=h.level - 1)


def _csr_from_lists(n: int, rows: List[List[int]]) -> tuple:
    counts = np.array([len(r) for r in rows], dtype=np.int64)
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(counts, out=indptr[1:])
    indices = np.empty(int(indptr[-1]), dtype=np.int32)
    pos = 0
    for row in rows:
        for v in row:
            indices[pos] = v
            pos += 1
    return indptr, indices


def build_distance_orientation(g: Graph, r: int) -> DistanceOrientation:
    """Orientation of g answering distance queries up to r.

    Runs the (r-1)-round augmentation, then back-propagates r-1 times; the
    final max outdegree is at most (r+1)^(r-1) times the augmentation's.
    """
    if r < 1:
        raise InputError("r must be positive")
    seq = fraternal_augment(g, r - 1, r)
    cur = SuperAugmentation(support=seq.final, extra=set(), level=r - 1)
    steps = []
    for i in range(r - 1, 0, -1):
        pre = cur.max_outdegree
        cur = back_propagate_step(cur, seq.stages[i - 1])
        steps.append({"level": i - 1, "pre_max_outdegree": pre,
                      "post_max_outdegree": cur.max_outdegree})
    rows = cur.out_lists()
    indptr, indices = _csr_from_lists(g.n, rows)
    maxout = max((len(row) for row in rows), default=0)
    stats = {
        "stage_outdegrees": seq.stage_outdegrees(),
        "back_steps": steps,
        "arc_count": int(indices.shape[0]),
    }
    return DistanceOrientation(g.n, r, indptr, indices, maxout, stats)


def build_with_sequence(g: Graph, r: int) -> tuple:
    """build_distance_orientation plus the augmentation sequence it used."""
    seq = fraternal_augment(g, r - 1, r)
    cur = SuperAugmentation(support=seq.final, extra=set(), level=r - 1)
    supers = [cur]
    for i in range(r - 1, 0, -1):
        cur = back_propagate_step(cur, seq.stages[i - 1])
        supers.append(cur)
    rows = cur.out_lists()
    indptr, indices = _csr_from_lists(g.n, rows)
    maxout = max((len(row) for row in rows), default=0)
    o = DistanceOrientation(g.n, r, indptr, indices, maxout,
                            {"stage_outdegrees": seq.stage_outdegrees()})
    return o, seq, supers


def out_ball(o: DistanceOrientation, v: int, t: int) -> VertexSet:
    """Vertices reachable from v by directed out-walks of length <= t."""
    if not (0 <= t <= o.r):
        raise InputError(f"t must be in 0..{o.r}")
    dist = _kernels.bfs_from(o.out_indptr, o.out_indices, v, t)
    return VertexSet(o.n, np.nonzero(dist <= t)[0].tolist())


def truncated_distance(o: DistanceOrientation, u: int, v: int) -> int:
    """min(d(u, v), r) via two out-walks meeting at an apex, OVER beyond r."""
    if not (0 <= u < o.n and 0 <= v < o.n):
        raise InputError("vertex out of range")
    res = _kernels.meet_pairs(
        o.out_indptr, o.out_indices,
        np.array([u], dtype=np.int64), np.array([v], dtype=np.int64), o.r,
    )
    d = int(res[0])
    return OVER if d > o.r else d


FULL_CHECK_LIMIT = 2000
SAMPLE_PAIRS = 50_000


@dataclass
class RepresentationReport:
    ok: bool
    mode: str
    checked_pairs: int
    violation_count: int
    violations: list  # first few (u, v, expected, got) with OVER for beyond-r

    def summary(self) -> str:
        head = "clean" if self.ok else f"{self.violation_count} violations"
        return f"representation check [{self.mode}]: {head} over {self.checked_pairs} pairs"


def _sample_pairs(n: int, count: int, seed: int):
    from .generators import SplitMix64

    rng = SplitMix64(seed)
    us = np.empty(count, dtype=np.int64)
    vs = np.empty(count, dtype=np.int64)
    for i in range(count):
        u = rng.below(n)
        v = rng.below(n - 1)
        if v >= u:
            v += 1
        us[i] = u
        vs[i] = v
    return us, vs


def verify_representation(g: Graph, o: DistanceOrientation, pairs: int = None) -> RepresentationReport:
    """Compare orientation distance answers against plain truncated BFS.

    All pairs up to FULL_CHECK_LIMIT vertices, a fixed-seed random sample of
    pairs above it (or exactly ``pairs`` samples when given).
    """
    r = o.r
    if g.n <= 1:
        return RepresentationReport(True, "full", 0, 0, [])
    if pairs is None and g.n <= FULL_CHECK_LIMIT:
        want = _kernels.bfs_all_pairs(g.indptr, g.indices, r)
        got = _kernels.meet_all_pairs(o.out_indptr, o.out_indices, r)
        bad = np.nonzero(want != got)
        total = g.n * (g.n - 1) // 2
        out = []
        for u, v in zip(bad[0].tolist(), bad[1].tolist()):
            if u < v and len(out) < 100:
                e = int(want[u, v])
                a = int(got[u, v])
                out.append((u, v, OVER if e > r else e, OVER if a > r else a))
        count = int(np.count_nonzero(np.triu(want != got, k=1)))
        return RepresentationReport(count == 0, "full", total, count, out)

    count = pairs if pairs is not None else SAMPLE_PAIRS
    us, vs = _sample_pairs(g.n, count, seed=0x7F4A7C15 ^ g.n)
    want = _kernels.meet_pairs(g.indptr, g.indices, us, vs, r)
    got = _kernels.meet_pairs(o.out_indptr, o.out_indices, us, vs, r)
    bad = np.nonzero(want != got)[0]
    out = []
    for i in bad.tolist()[:100]:
        e = int(want[i])
        a = int(got[i])
        out.append((int(us[i]), int(vs[i]), OVER if e > r else e, OVER if a > r else a))
    return RepresentationReport(bad.shape[0] == 0, "sampled", count, int(bad.shape[0]), out)
