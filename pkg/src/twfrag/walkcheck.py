"""Independent walk-existence oracles used to audit augmentation stages.

These deliberately avoid the augmentation data structures: walk existence
comes from boolean adjacency powers, and representation checks enumerate
achievable out-walk length sums directly.  Desk scale only.
"""

from typing import List

import numpy as np

from .augment import LengthAugmentation, lengths_of
from .graph import Graph


def walk_length_matrices(g: Graph, r: int) -> List[np.ndarray]:
    """W[b][u][v] is True iff a walk of length exactly b joins u and v."""
    n = g.n
    adj = np.zeros((n, n), dtype=bool)
    for u, v in g.edges():
        adj[u, v] = adj[v, u] = True
    mats = [np.eye(n, dtype=bool)]
    for _ in range(r):
        mats.append((mats[-1].astype(np.uint8) @ adj.astype(np.uint8)) > 0)
    return mats


def stage_lengths_sound(g: Graph, stage: LengthAugmentation) -> bool:
    """Every certified length is witnessed by a real walk of that exact
    length, every original edge certifies length 1, and pairs without any
    directed edge certify nothing."""
    mats = walk_length_matrices(g, stage.r)
    for (u, v), mask in stage.lengths.items():
        if not (stage.has_arc(u, v) or stage.has_arc(v, u)):
            return False
        for b in lengths_of(mask):
            if b > stage.r or not mats[b][u, v]:
                return False
    for u, v in g.edges():
        if not (stage.pair_mask(u, v) >> 1) & 1:
            return False
    return True


def _reach_sums(stage: LengthAugmentation, u: int):
    """For each vertex x, the bitmask of certified length sums of out-walks
    from u ending at x (sums capped at r)."""
    r = stage.r
    cap = (1 << (r + 1)) - 1
    reach = {u: 1}
    work = [u]
    while work:
        x = work.pop()
        mx = reach[x]
        for y in stage.out[x]:
            add = 0
            for b in lengths_of(stage.pair_mask(x, y)):
                add |= (mx << b) & cap
            prev = reach.get(y, 0)
            if add | prev != prev:
                reach[y] = prev | add
                work.append(y)
    return reach


def stage_represents_distances(g: Graph, stage: LengthAugmentation) -> bool:
    """For every pair at distance b <= r there are out-walks from both ends
    meeting at an apex whose certified lengths sum to exactly b."""
    r = stage.r
    from .graph import all_pairs_truncated, OVER

    dist = all_pairs_truncated(g, r)
    reach = [_reach_sums(stage, u) for u in range(g.n)]
    for u in range(g.n):
        for v in range(u + 1, g.n):
            b = int(dist[u, v])
            if b == OVER:
                continue
            found = False
            for x, m1 in reach[u].items():
                m2 = reach[v].get(x, 0)
                if not m2:
                    continue
                for s1 in lengths_of(m1):
                    if s1 <= b and (m2 >> (b - s1)) & 1:
                        found = True
                        break
                if found:
                    break
            if not found:
                return False
    return True
