"""Seeded graph generators with a pinned PRNG stream.

The PRNG is SplitMix64 (Steele et al.'s standard mixer): state advances by
0x9E3779B97F4A7C15 and the output is mixed with two xor-shift-multiply
rounds.  Any reimplementation that matches this stream reproduces every
corpus graph bit for bit; draws below a bound use the multiply-shift trick
``(next() * n) >> 64``.
"""

from dataclasses import dataclass
from typing import Dict, Tuple

from .errors import InputError
from .graph import Graph

_MASK = (1 << 64) - 1


class SplitMix64:
    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return (z ^ (z >> 31)) & _MASK

    def below(self, n: int) -> int:
        if n <= 0:
            raise InputError("bound must be positive")
        return (self.next() * n) >> 64

    def chance(self, num: int, den: int) -> bool:
        return self.below(den) < num


@dataclass(frozen=True)
class GeneratorSpec:
    family: str
    params: Tuple[Tuple[str, int], ...]
    seed: int = 0

    @classmethod
    def make(cls, family: str, seed: int = 0, **params) -> "GeneratorSpec":
        return cls(family, tuple(sorted((k, int(v)) for k, v in params.items())), seed)

    @property
    def pdict(self) -> Dict[str, int]:
        return dict(self.params)

    def label(self) -> str:
        ps = "-".join(f"{k}{v}" for k, v in self.params)
        return f"{self.family}-{ps}-s{self.seed}" if ps else f"{self.family}-s{self.seed}"


def grid_graph(rows: int, cols: int) -> Graph:
    if rows < 1 or cols < 1:
        raise InputError("grid needs positive dimensions")
    edges = []
    for i in range(rows):
        for j in range(cols):
            v = i * cols + j
            if j + 1 < cols:
                edges.append((v, v + 1))
            if i + 1 < rows:
                edges.append((v, v + cols))
    return Graph.from_edges(rows * cols, edges)


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InputError("cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    if n < 1:
        raise InputError("path needs at least 1 vertex")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def random_tree(n: int, seed: int) -> Graph:
    if n < 1:
        raise InputError("tree needs at least 1 vertex")
    rng = SplitMix64(seed)
    edges = [(rng.below(v), v) for v in range(1, n)]
    return Graph.from_edges(n, edges)


def random_sparse(n: int, seed: int) -> Graph:
    """About 2n distinct edges, so expected average degree <= 4."""
    if n < 1:
        raise InputError("graph needs at least 1 vertex")
    rng = SplitMix64(seed)
    want = min(2 * n, n * (n - 1) // 2)
    edges = set()
    while len(edges) < want:
        u = rng.below(n)
        v = rng.below(n)
        if u == v:
            continue
        edges.add((u, v) if u < v else (v, u))
    return Graph.from_edges(n, sorted(edges))


def random_planarish(rows: int, cols: int, seed: int) -> Graph:
    """Random subgraph of a grid (each edge kept with probability 0.9) plus
    one random diagonal per cell with probability 0.2.  Honest naming: no
    planarity guarantee is claimed."""
    if rows < 1 or cols < 1:
        raise InputError("grid needs positive dimensions")
    rng = SplitMix64(seed)
    edges = set()
    for i in range(rows):
        for j in range(cols):
            v = i * cols + j
            if j + 1 < cols and rng.chance(9, 10):
                edges.add((v, v + 1))
            if i + 1 < rows and rng.chance(9, 10):
                edges.add((v, v + cols))
    for i in range(rows - 1):
        for j in range(cols - 1):
            if rng.chance(1, 5):
                v = i * cols + j
                if rng.chance(1, 2):
                    edges.add((v, v + cols + 1))
                else:
                    edges.add((v + 1, v + cols))
    return Graph.from_edges(rows * cols, sorted(edges))


def generate(spec: GeneratorSpec) -> Graph:
    """Deterministic family member; same spec and seed, same graph."""
    p = spec.pdict
    if spec.family == "grid":
        return grid_graph(p["rows"], p["cols"])
    if spec.family == "cycle":
        return cycle_graph(p["n"])
    if spec.family == "path":
        return path_graph(p["n"])
    if spec.family == "tree":
        return random_tree(p["n"], spec.seed)
    if spec.family == "random_sparse":
        return random_sparse(p["n"], spec.seed)
    if spec.family == "random_planarish":
        return random_planarish(p["rows"], p["cols"], spec.seed)
    raise InputError(f"unknown family {spec.family!r}")


def random_weights(n: int, seed: int, lo: int = 0, hi: int = 10):
    """Per-vertex weights drawn uniformly from [lo, hi] via SplitMix64."""
    rng = SplitMix64(seed)
    return [lo + rng.below(hi - lo + 1) for _ in range(n)]
