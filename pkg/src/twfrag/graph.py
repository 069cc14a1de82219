"""Undirected weighted graphs in CSR form, truncated BFS, and file I/O.

Vertices are dense integers ``0..n-1``.  Weights are non-negative ints so
every downstream comparison is exact.  Distances truncated at ``r`` use the
``OVER`` sentinel for "further than r"; it is deliberately not ``r + 1`` so
that accidental arithmetic on truncated values stands out.
"""

from typing import Iterable, Optional, Sequence

import numpy as np

from . import _kernels
from .errors import InputError, ParseError

OVER = -1


class VertexSet:
    """Immutable vertex subset with O(1) membership and sorted iteration."""

    __slots__ = ("n", "members", "_set")

    def __init__(self, n: int, members: Iterable[int] = ()):
        self.n = n
        ms = sorted(set(int(v) for v in members))
        if ms and (ms[0] < 0 or ms[-1] >= n):
            raise InputError(f"vertex out of range 0..{n - 1}: {ms[0] if ms[0] < 0 else ms[-1]}")
        self.members = tuple(ms)
        self._set = frozenset(ms)

    def __contains__(self, v) -> bool:
        return v in self._set

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __eq__(self, other) -> bool:
        if isinstance(other, VertexSet):
            return self.n == other.n and self.members == other.members
        return NotImplemented

    def __hash__(self):
        return hash((self.n, self.members))

    def __repr__(self):
        return f"VertexSet(n={self.n}, members={list(self.members)})"

    def to_mask(self) -> np.ndarray:
        mask = np.zeros(self.n, dtype=bool)
        if self.members:
            mask[list(self.members)] = True
        return mask

    def union(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.n, self._set | other._set)

    def difference(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.n, self._set - other._set)

    def intersection(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.n, self._set & other._set)

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls(n, range(n))

    @classmethod
    def from_mask(cls, mask: np.ndarray) -> "VertexSet":
        return cls(mask.shape[0], np.nonzero(mask)[0].tolist())


class Graph:
    """Immutable undirected graph: sorted CSR adjacency plus vertex weights."""

    __slots__ = ("n", "indptr", "indices", "weights")

    def __init__(self, n: int, indptr: np.ndarray, indices: np.ndarray, weights: np.ndarray):
        self.n = n
        self.indptr = indptr
        self.indices = indices
        self.weights = weights

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Sequence[tuple],
        weights: Optional[Sequence[int]] = None,
    ) -> "Graph":
        if n < 0:
            raise InputError("vertex count must be non-negative")
        if weights is None:
            w = np.ones(n, dtype=np.int64)
        else:
            w = np.asarray(list(weights), dtype=np.int64)
            if w.shape[0] != n:
                raise InputError(f"expected {n} weights, got {w.shape[0]}")
            if n and w.min() < 0:
                raise InputError("weights must be non-negative")
        seen = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge endpoint out of range: ({u}, {v})")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise InputError(f"duplicate edge ({key[0]}, {key[1]})")
            seen.add(key)
        deg = np.zeros(n, dtype=np.int64)
        for u, v in seen:
            deg[u] += 1
            deg[v] += 1
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(deg, out=indptr[1:])
        indices = np.empty(indptr[-1], dtype=np.int32)
        fill = indptr[:-1].copy()
        for u, v in sorted(seen):
            indices[fill[u]] = v
            fill[u] += 1
            indices[fill[v]] = u
            fill[v] += 1
        for v in range(n):
            indices[indptr[v]:indptr[v + 1]].sort()
        return cls(n, indptr, indices, w)

    @property
    def m(self) -> int:
        return int(self.indices.shape[0]) // 2

    def neighbors(self, v: int) -> np.ndarray:
        return self.indices[self.indptr[v]:self.indptr[v + 1]]

    def degree(self, v: int) -> int:
        return int(self.indptr[v + 1] - self.indptr[v])

    def has_edge(self, u: int, v: int) -> bool:
        row = self.neighbors(u)
        i = np.searchsorted(row, v)
        return i < row.shape[0] and row[i] == v

    def edges(self):
        """Yield each undirected edge once as (u, v) with u < v, sorted."""
        for u in range(self.n):
            for v in self.neighbors(u):
                if u < v:
                    yield (u, int(v))

    def weight_of(self, vertices: Iterable[int]) -> int:
        return int(sum(int(self.weights[v]) for v in vertices))

    def subgraph(self, keep: Sequence[int]) -> tuple:
        """Induced subgraph on ``keep`` (sorted); returns (graph, old_ids)."""
        old_ids = np.asarray(sorted(set(int(v) for v in keep)), dtype=np.int64)
        new_of_old = {int(o): i for i, o in enumerate(old_ids)}
        edges = []
        for i, o in enumerate(old_ids):
            for v in self.neighbors(int(o)):
                v = int(v)
                if v in new_of_old and o < v:
                    edges.append((i, new_of_old[v]))
        sub = Graph.from_edges(len(old_ids), edges, [int(self.weights[o]) for o in old_ids])
        return sub, old_ids

    def components(self):
        """Connected components as sorted vertex lists, ordered by minimum."""
        seen = np.zeros(self.n, dtype=bool)
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            stack = [s]
            seen[s] = True
            comp = []
            while stack:
                u = stack.pop()
                comp.append(u)
                for v in self.neighbors(u):
                    if not seen[v]:
                        seen[v] = True
                        stack.append(int(v))
            comps.append(sorted(comp))
        return comps

    def __eq__(self, other) -> bool:
        if isinstance(other, Graph):
            return (
                self.n == other.n
                and np.array_equal(self.indptr, other.indptr)
                and np.array_equal(self.indices, other.indices)
                and np.array_equal(self.weights, other.weights)
            )
        return NotImplemented

    def __hash__(self):  # pragma: no cover - identity hashing is fine
        return id(self)

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def truncated_bfs(g: Graph, source: int, r: int) -> np.ndarray:
    """Distances from ``source`` truncated at ``r``: values 0..r, else OVER."""
    if not (0 <= source < g.n):
        raise InputError(f"source {source} out of range 0..{g.n - 1}")
    if r < 1:
        raise InputError("r must be positive")
    dist = _kernels.bfs_from(g.indptr, g.indices, source, r)
    out = dist.astype(np.int64)
    out[out > r] = OVER
    return out


def all_pairs_truncated(g: Graph, r: int) -> np.ndarray:
    """All-pairs truncated distance matrix with OVER beyond ``r``."""
    dist = _kernels.bfs_all_pairs(g.indptr, g.indices, r)
    out = dist.astype(np.int64)
    out[out > r] = OVER
    return out


def parse_graph(text: str) -> Graph:
    """Parse the text graph format.

    Line 1: ``n m``; line 2: n space-separated non-negative weights; then m
    lines ``u v`` with 0 <= u < v < n.  Lines starting with ``#`` are ignored.
    """
    lines = []
    for i, raw in enumerate(text.splitlines(), start=1):
        if raw.lstrip().startswith("#"):
            continue
        lines.append((i, raw))
    if not lines:
        raise ParseError(1, "empty input")
    hdr_no, hdr = lines[0]
    parts = hdr.split()
    if len(parts) != 2:
        raise ParseError(hdr_no, f"header must be 'n m', got {hdr!r}")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError(hdr_no, f"header must be two integers, got {hdr!r}") from None
    if n < 0 or m < 0:
        raise ParseError(hdr_no, "n and m must be non-negative")
    if len(lines) < 2:
        raise ParseError(hdr_no + 1, "missing weights line")
    w_no, w_line = lines[1]
    w_parts = w_line.split()
    if len(w_parts) != n:
        raise ParseError(w_no, f"expected {n} weights, got {len(w_parts)}")
    try:
        weights = [int(x) for x in w_parts]
    except ValueError:
        raise ParseError(w_no, "weights must be integers") from None
    for x in weights:
        if x < 0:
            raise ParseError(w_no, f"negative weight {x}")
    edge_lines = lines[2:]
    if len(edge_lines) != m:
        where = edge_lines[-1][0] if edge_lines else w_no
        raise ParseError(where, f"expected {m} edge lines, got {len(edge_lines)}")
    edges = []
    seen = set()
    for line_no, line in edge_lines:
        ps = line.split()
        if len(ps) != 2:
            raise ParseError(line_no, f"edge line must be 'u v', got {line!r}")
        try:
            u, v = int(ps[0]), int(ps[1])
        except ValueError:
            raise ParseError(line_no, f"edge endpoints must be integers, got {line!r}") from None
        if u == v:
            raise ParseError(line_no, f"self-loop at vertex {u}")
        if not (0 <= u < v < n):
            raise ParseError(line_no, f"edge ({u}, {v}) must satisfy 0 <= u < v < n={n}")
        if (u, v) in seen:
            raise ParseError(line_no, f"duplicate edge ({u}, {v})")
        seen.add((u, v))
        edges.append((u, v))
    return Graph.from_edges(n, edges, weights)


def serialize_graph(g: Graph) -> str:
    """Inverse of parse_graph; parse(serialize(g)) == g structurally."""
    out = [f"{g.n} {g.m}"]
    out.append(" ".join(str(int(w)) for w in g.weights))
    for u, v in g.edges():
        out.append(f"{u} {v}")
    return "\n".join(out) + "\n"
