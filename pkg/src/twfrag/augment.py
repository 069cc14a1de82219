"""Bounded-outdegree orientations and fraternal augmentation sequences.

A stage is a directed graph whose unordered pairs carry "length sets":
subsets of {1..r} recording walk lengths in the original graph certified
for that pair.  Length sets are stored as bitmasks (bit b set means length
b is certified).  Stage 0 orients the input graph via degeneracy peeling;
each later stage adds one edge between the heads of every common-tail
out-edge pair and extends the length sets by all pairwise sums <= r.
"""

import heapq
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from .errors import InputError
from .graph import Graph


def _pair(u: int, v: int) -> Tuple[int, int]:
    return (u, v) if u < v else (v, u)


def mask_of(lengths) -> int:
    m = 0
    for b in lengths:
        m |= 1 << b
    return m


def lengths_of(mask: int) -> Tuple[int, ...]:
    out = []
    b = 0
    while mask >> b:
        if (mask >> b) & 1:
            out.append(b)
        b += 1
    return tuple(out)


def _convolve(m1: int, m2: int, r: int) -> int:
    """Bitmask of all sums b1 + b2 <= r with b1 in m1, b2 in m2."""
    acc = 0
    cap = (1 << (r + 1)) - 1
    b = 1
    while (m1 >> b) and b <= r:
        if (m1 >> b) & 1:
            acc |= (m2 << b) & cap
        b += 1
    return acc


@dataclass
class LengthAugmentation:
    """One stage: directed edges plus per-pair length-set bitmasks."""

    n: int
    r: int
    out: List[List[int]]
    lengths: Dict[Tuple[int, int], int]
    out_sets: List[set] = field(repr=False, default=None)

    def __post_init__(self):
        if self.out_sets is None:
            self.out_sets = [set(row) for row in self.out]

    def has_arc(self, u: int, v: int) -> bool:
        return v in self.out_sets[u]

    def has_pair(self, u: int, v: int) -> bool:
        return _pair(u, v) in self.lengths

    def pair_mask(self, u: int, v: int) -> int:
        return self.lengths.get(_pair(u, v), 0)

    @property
    def max_outdegree(self) -> int:
        return max((len(row) for row in self.out), default=0)

    def arc_count(self) -> int:
        return sum(len(row) for row in self.out)

    def undirected_pairs(self) -> set:
        return set(self.lengths.keys())

    def dump(self) -> str:
        """Debug text: one line per directed edge, sorted by (u, v)."""
        lines = []
        for u in range(self.n):
            for v in sorted(self.out[u]):
                ls = lengths_of(self.pair_mask(u, v))
                body = ",".join(str(b) for b in ls)
                lines.append(f"{u} -> {v} : {{{body}}}")
        lines.sort(key=lambda s: (int(s.split(" -> ")[0]), int(s.split(" -> ")[1].split(" :")[0])))
        return "\n".join(lines) + ("\n" if lines else "")


@dataclass
class AugmentationSequence:
    """Stages 0..a; stage i >= 1 is a 1-step fraternal augmentation of i-1."""

    stages: List[LengthAugmentation]

    @property
    def n(self) -> int:
        return self.stages[0].n

    @property
    def r(self) -> int:
        return self.stages[0].r

    @property
    def final(self) -> LengthAugmentation:
        return self.stages[-1]

    def stage_outdegrees(self) -> List[int]:
        return [s.max_outdegree for s in self.stages]


def degeneracy_order(g: Graph) -> List[int]:
    """Peeling order: repeatedly remove a minimum-degree vertex (ties by
    smallest index)."""
    deg = [g.degree(v) for v in range(g.n)]
    removed = [False] * g.n
    heap = [(deg[v], v) for v in range(g.n)]
    heapq.heapify(heap)
    order = []
    while heap:
        d, v = heapq.heappop(heap)
        if removed[v] or d != deg[v]:
            continue
        removed[v] = True
        order.append(v)
        for u in g.neighbors(v):
            u = int(u)
            if not removed[u]:
                deg[u] -= 1
                heapq.heappush(heap, (deg[u], u))
    return order


def initial_orientation(g: Graph, r: int) -> LengthAugmentation:
    """Orient each edge once via degeneracy peeling; every pair starts with
    length set {1}.  Max outdegree is at most the degeneracy of g."""
    if r < 1:
        raise InputError("r must be positive")
    out = [[] for _ in range(g.n)]
    lengths: Dict[Tuple[int, int], int] = {}
    removed = [False] * g.n
    for v in degeneracy_order(g):
        removed[v] = True
        for u in g.neighbors(v):
            u = int(u)
            if not removed[u]:
                out[v].append(u)
                lengths[_pair(u, v)] = 0b10
        out[v].sort()
    return LengthAugmentation(g.n, r, out, lengths)


def fraternal_step(prev: LengthAugmentation) -> LengthAugmentation:
    """One fraternal round: for every pair of distinct out-edges (x,y),(x,z)
    add an edge between y and z unless one exists, and extend the pair's
    length set by every sum b1 + b2 <= r of certified lengths via x."""
    n, r = prev.n, prev.r
    pair_conv: Dict[Tuple[int, int], int] = {}
    for x in range(n):
        row = prev.out[x]
        k = len(row)
        if k < 2:
            continue
        for i in range(k):
            y = row[i]
            m1 = prev.pair_mask(x, y)
            for j in range(i + 1, k):
                z = row[j]
                conv = _convolve(m1, prev.pair_mask(x, z), r)
                key = _pair(y, z)
                if key in pair_conv:
                    pair_conv[key] |= conv
                else:
                    pair_conv[key] = conv

    new_pairs = sorted(p for p in pair_conv if p not in prev.lengths)
    out = [list(row) for row in prev.out]
    out_sets = [set(s) for s in prev.out_sets]
    outdeg = [len(row) for row in out]
    for a, b in new_pairs:
        # head = endpoint with larger provisional outdegree (ties: larger
        # index); the tail picks up the new out-edge, balancing load.
        if outdeg[a] > outdeg[b] or (outdeg[a] == outdeg[b] and a > b):
            tail, head = b, a
        else:
            tail, head = a, b
        out[tail].append(head)
        out_sets[tail].add(head)
        outdeg[tail] += 1

    lengths = dict(prev.lengths)
    for key, conv in pair_conv.items():
        lengths[key] = lengths.get(key, 0) | conv
    for row in out:
        row.sort()
    return LengthAugmentation(n, r, out, lengths, out_sets)


def fraternal_augment(g: Graph, a: int, r: int) -> AugmentationSequence:
    """Stages 0..a: initial orientation followed by ``a`` fraternal rounds,
    with length sets capped at ``r``."""
    if a < 0:
        raise InputError("a must be non-negative")
    stages = [initial_orientation(g, r)]
    for _ in range(a):
        stages.append(fraternal_step(stages[-1]))
    return AugmentationSequence(stages)
