"""Tree decompositions and fractional fragility covers.

Decompositions come from a min-fill elimination heuristic (no optimality
claim; widths are always measured, never assumed).  Covers delete every
k-th BFS layer, which keeps each residual's components inside a bounded
band of layers, or delete nothing for inputs already of small width.
"""

from dataclasses import dataclass, field
from typing import Callable, Dict, List, Tuple

import numpy as np

from .errors import InputError
from .graph import Graph, VertexSet


@dataclass
class TreeDecomposition:
    bags: List[List[int]]
    tree_edges: List[Tuple[int, int]]

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1

    @property
    def bag_count(self) -> int:
        return len(self.bags)

    def dump(self) -> str:
        lines = [f"bags={len(self.bags)} width={self.width}"]
        for b in self.bags:
            lines.append(" ".join(str(v) for v in b))
        for i, j in self.tree_edges:
            lines.append(f"{i} {j}")
        return "\n".join(lines) + "\n"


@dataclass
class DecompositionReport:
    ok: bool
    violations: List[str]


def validate_decomposition(g: Graph, td: TreeDecomposition) -> DecompositionReport:
    """Check the four defining properties; violations are data, not errors."""
    violations = []
    nbags = len(td.bags)
    bag_sets = [set(b) for b in td.bags]

    for b in bag_sets:
        for v in b:
            if not (0 <= v < g.n):
                violations.append(f"bag vertex {v} out of range")

    covered = set()
    for b in bag_sets:
        covered |= b
    for v in range(g.n):
        if v not in covered:
            violations.append(f"vertex {v} in no bag")

    for u, v in g.edges():
        if not any(u in b and v in b for b in bag_sets):
            violations.append(f"edge ({u}, {v}) not covered by any bag")

    adj = [[] for _ in range(nbags)]
    ok_edges = True
    for i, j in td.tree_edges:
        if not (0 <= i < nbags and 0 <= j < nbags) or i == j:
            violations.append(f"invalid tree edge ({i}, {j})")
            ok_edges = False
            continue
        adj[i].append(j)
        adj[j].append(i)
    if ok_edges:
        if len(td.tree_edges) != nbags - 1:
            violations.append(
                f"tree must have {nbags - 1} edges over {nbags} bags, got {len(td.tree_edges)}"
            )
        elif nbags:
            seen = [False] * nbags
            stack = [0]
            seen[0] = True
            reached = 0
            while stack:
                x = stack.pop()
                reached += 1
                for y in adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        stack.append(y)
            if reached != nbags:
                violations.append("bag tree is not connected")
            else:
                for v in range(g.n):
                    holding = [i for i in range(nbags) if v in bag_sets[i]]
                    if not holding:
                        continue
                    hold = set(holding)
                    comp = {holding[0]}
                    stack = [holding[0]]
                    while stack:
                        x = stack.pop()
                        for y in adj[x]:
                            if y in hold and y not in comp:
                                comp.add(y)
                                stack.append(y)
                    if comp != hold:
                        violations.append(f"bags containing vertex {v} are disconnected")
    return DecompositionReport(not violations, violations)


def tree_decompose(g: Graph) -> TreeDecomposition:
    """Min-fill elimination ordering (ties: min degree, then index)."""
    n = g.n
    if n == 0:
        return TreeDecomposition([[]], [])
    nbr: List[set] = [set(int(u) for u in g.neighbors(v)) for v in range(n)]
    alive = set(range(n))
    order: List[int] = []
    bags: List[List[int]] = []
    pos_of: Dict[int, int] = {}

    while alive:
        best = None
        for v in sorted(alive):
            fill = 0
            row = sorted(nbr[v])
            for i in range(len(row)):
                a = row[i]
                na = nbr[a]
                for j in range(i + 1, len(row)):
                    if row[j] not in na:
                        fill += 1
            key = (fill, len(nbr[v]), v)
            if best is None or key < best[0]:
                best = (key, v)
        v = best[1]
        bag = sorted([v] + list(nbr[v]))
        pos_of[v] = len(order)
        order.append(v)
        bags.append(bag)
        row = sorted(nbr[v])
        for i in range(len(row)):
            a = row[i]
            for j in range(i + 1, len(row)):
                b = row[j]
                nbr[a].add(b)
                nbr[b].add(a)
        for u in row:
            nbr[u].discard(v)
        alive.discard(v)

    tree_edges: List[Tuple[int, int]] = []
    roots: List[int] = []
    for i, v in enumerate(order):
        rest = [u for u in bags[i] if u != v]
        if rest:
            parent_vertex = min(rest, key=lambda u: pos_of[u])
            tree_edges.append((i, pos_of[parent_vertex]))
        else:
            roots.append(i)
    # Components produce separate root bags; chain them so the bags form
    # one tree (disjoint vertex sets keep the occurrence property intact).
    for a, b in zip(roots, roots[1:]):
        tree_edges.append((a, b))
    return TreeDecomposition(bags, tree_edges)


@dataclass
class Residual:
    """One deleted set's leftovers: the induced subgraph of G minus X_i,
    its vertex id mapping, and a decomposition of it."""

    graph: Graph
    old_ids: np.ndarray
    td: TreeDecomposition

    def bags_in_original_ids(self) -> List[List[int]]:
        return [[int(self.old_ids[v]) for v in bag] for bag in self.td.bags]


@dataclass
class FragilityCover:
    n: int
    k_param: int
    sets: List[VertexSet]
    residuals: List[Residual]
    provider: str
    layers: np.ndarray = field(default=None, repr=False)

    @property
    def m(self) -> int:
        return len(self.sets)

    @property
    def width_bound(self) -> int:
        return max((res.td.width for res in self.residuals), default=-1)

    def membership_counts(self) -> np.ndarray:
        counts = np.zeros(self.n, dtype=np.int64)
        for s in self.sets:
            for v in s:
                counts[v] += 1
        return counts

    def membership_bound_holds(self) -> bool:
        """Each vertex in at most m / k_param of the sets (exact integers)."""
        if self.n == 0:
            return True
        counts = self.membership_counts()
        return bool((counts * self.k_param <= self.m).all())


def bfs_layers(g: Graph) -> np.ndarray:
    """BFS depth per vertex, rooted at the smallest index of each component."""
    layer = np.full(g.n, -1, dtype=np.int64)
    for comp in g.components():
        root = comp[0]
        layer[root] = 0
        frontier = [root]
        d = 0
        while frontier:
            d += 1
            nxt = []
            for u in frontier:
                for v in g.neighbors(u):
                    v = int(v)
                    if layer[v] < 0:
                        layer[v] = d
                        nxt.append(v)
            frontier = nxt
    return layer


def _residual_of(g: Graph, deleted: VertexSet) -> Residual:
    keep = [v for v in range(g.n) if v not in deleted]
    sub, old_ids = g.subgraph(keep)
    return Residual(sub, old_ids, tree_decompose(sub))


def baker_cover(g: Graph, k_param: int) -> FragilityCover:
    """Delete every k-th BFS layer: X_i collects layers congruent to i - 1
    (mod k).  Exactly k sets, each vertex in exactly one of them.  When
    k exceeds the layer count many sets coincide (or are empty); equal sets
    share one residual object."""
    if k_param < 2:
        raise InputError("cover parameter must be at least 2")
    layer = bfs_layers(g)
    sets = []
    residuals = []
    shared = {}
    for i in range(k_param):
        members = np.nonzero((layer % k_param) == i)[0].tolist() if g.n else []
        x = VertexSet(g.n, members)
        sets.append(x)
        if x.members not in shared:
            shared[x.members] = _residual_of(g, x)
        residuals.append(shared[x.members])
    return FragilityCover(g.n, k_param, sets, residuals, "baker", layer)


def trivial_cover(g: Graph, k_param: int) -> FragilityCover:
    """Single empty deletion set; only useful when g itself has small width."""
    if k_param < 1:
        raise InputError("cover parameter must be positive")
    empty = VertexSet(g.n)
    return FragilityCover(g.n, k_param, [empty], [_residual_of(g, empty)], "trivial")


COVER_PROVIDERS: Dict[str, Callable[[Graph, int], FragilityCover]] = {
    "baker": baker_cover,
    "trivial": trivial_cover,
}
