"""Shared corpus builders for the test suite."""

import numpy as np
import pytest

from twfrag.generators import GeneratorSpec, generate, random_weights
from twfrag.graph import Graph


def weighted(g: Graph, seed: int) -> Graph:
    w = random_weights(g.n, seed=seed)
    return Graph(g.n, g.indptr, g.indices, np.asarray(w, dtype=np.int64))


def small_corpus(count: int, max_n: int = 40, seed0: int = 0):
    """Deterministic mixed-family corpus of small graphs."""
    out = []
    i = 0
    while len(out) < count:
        seed = seed0 + i
        kind = i % 6
        n = 6 + (i * 7) % (max_n - 5)
        if kind == 0:
            spec = GeneratorSpec.make("cycle", n=max(3, n))
        elif kind == 1:
            spec = GeneratorSpec.make("path", n=n)
        elif kind == 2:
            side = max(2, int(n ** 0.5))
            spec = GeneratorSpec.make("grid", rows=side, cols=side)
        elif kind == 3:
            spec = GeneratorSpec.make("tree", n=n, seed=seed)
        elif kind == 4:
            spec = GeneratorSpec.make("random_sparse", n=n, seed=seed)
        else:
            spec = GeneratorSpec.make("random_planarish", rows=3, cols=max(2, n // 3), seed=seed)
        out.append((spec.label(), generate(spec)))
        i += 1
    return out


@pytest.fixture(scope="session")
def corpus20():
    return small_corpus(20)
