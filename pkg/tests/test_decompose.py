import pytest

from twfrag.decompose import (TreeDecomposition, baker_cover, bfs_layers, tree_decompose,
                              trivial_cover, validate_decomposition)
from twfrag.errors import InputError
from twfrag.generators import GeneratorSpec, generate, grid_graph, path_graph
from twfrag.graph import Graph


def complete_graph(n):
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


class TestTreeDecompose:
    def test_path_width_one(self):
        td = tree_decompose(path_graph(4))
        assert td.width == 1
        assert validate_decomposition(path_graph(4), td).ok

    def test_cycle_width_two(self):
        g = generate(GeneratorSpec.make("cycle", n=5))
        td = tree_decompose(g)
        assert td.width == 2
        assert validate_decomposition(g, td).ok

    def test_single_vertex(self):
        g = path_graph(1)
        td = tree_decompose(g)
        assert td.bags == [[0]] and td.width == 0

    def test_k4_width_three(self):
        g = complete_graph(4)
        td = tree_decompose(g)
        assert td.width == 3
        assert validate_decomposition(g, td).ok

    def test_disconnected(self):
        g = Graph.from_edges(5, [(0, 1), (3, 4)])
        td = tree_decompose(g)
        assert validate_decomposition(g, td).ok

    @pytest.mark.parametrize("seed", range(8))
    def test_random_valid(self, seed):
        g = generate(GeneratorSpec.make("random_sparse", n=22, seed=seed))
        td = tree_decompose(g)
        assert validate_decomposition(g, td).ok


class TestValidate:
    def test_valid_p3(self):
        g = path_graph(3)
        td = TreeDecomposition([[0, 1], [1, 2]], [(0, 1)])
        assert validate_decomposition(g, td).ok

    def test_uncovered_edge(self):
        g = path_graph(3)
        td = TreeDecomposition([[0, 1], [2]], [(0, 1)])
        rep = validate_decomposition(g, td)
        assert not rep.ok
        assert any("edge (1, 2)" in v for v in rep.violations)

    def test_disconnected_occurrence(self):
        g = path_graph(3)
        td = TreeDecomposition([[0, 1], [1, 2], [0, 1]], [(0, 1), (1, 2)])
        rep = validate_decomposition(g, td)
        assert not rep.ok
        assert any("disconnected" in v for v in rep.violations)

    def test_non_tree(self):
        g = path_graph(2)
        td = TreeDecomposition([[0, 1], [0, 1], [0, 1]], [(0, 1)])
        rep = validate_decomposition(g, td)
        assert not rep.ok

    def test_missing_vertex(self):
        g = path_graph(2)
        td = TreeDecomposition([[0]], [])
        rep = validate_decomposition(g, td)
        assert not rep.ok


class TestBakerCover:
    def test_c6_k2_example(self):
        g = generate(GeneratorSpec.make("cycle", n=6))
        cover = baker_cover(g, 2)
        assert list(cover.sets[0]) == [0, 2, 4]
        assert list(cover.sets[1]) == [1, 3, 5]
        assert cover.width_bound <= 1
        for res, x in zip(cover.residuals, cover.sets):
            sub, _ = g.subgraph([v for v in range(g.n) if v not in x])
            assert validate_decomposition(sub, res.td).ok

    def test_edgeless(self):
        g = Graph.from_edges(4, [])
        cover = baker_cover(g, 3)
        assert list(cover.sets[0]) == [0, 1, 2, 3]
        assert len(cover.sets[1]) == 0 and len(cover.sets[2]) == 0
        assert cover.width_bound <= 0

    def test_grid_5x5_k3(self):
        g = grid_graph(5, 5)
        cover = baker_cover(g, 3)
        assert cover.m == 3
        counts = cover.membership_counts()
        assert (counts == 1).all()
        for res in cover.residuals:
            assert validate_decomposition(res.graph, res.td).ok

    def test_k_too_small(self):
        with pytest.raises(InputError):
            baker_cover(path_graph(3), 1)

    @pytest.mark.parametrize("k", [2, 3, 5])
    def test_residual_layer_span(self, k):
        g = generate(GeneratorSpec.make("random_planarish", rows=5, cols=6, seed=11))
        layer = bfs_layers(g)
        cover = baker_cover(g, k)
        for x, res in zip(cover.sets, cover.residuals):
            for comp in res.graph.components():
                layers = sorted(int(layer[res.old_ids[v]]) for v in comp)
                assert layers[-1] - layers[0] + 1 <= k - 1

    def test_membership_bound_exact(self):
        g = grid_graph(4, 6)
        for k in (2, 4):
            cover = baker_cover(g, k)
            assert cover.membership_bound_holds()
            counts = cover.membership_counts()
            assert (counts * cover.k_param <= cover.m).all()


class TestTrivialCover:
    def test_tree(self):
        g = generate(GeneratorSpec.make("tree", n=7, seed=1))
        cover = trivial_cover(g, 4)
        assert cover.m == 1 and len(cover.sets[0]) == 0
        assert cover.width_bound <= 1
        assert cover.membership_bound_holds()

    def test_k4(self):
        cover = trivial_cover(complete_graph(4), 2)
        assert cover.width_bound == 3

    def test_empty_graph(self):
        cover = trivial_cover(Graph.from_edges(0, []), 2)
        assert cover.width_bound <= 0
        assert cover.membership_bound_holds()


def test_dump_format():
    g = path_graph(3)
    td = TreeDecomposition([[0, 1], [1, 2]], [(0, 1)])
    lines = td.dump().strip().split("\n")
    assert lines[0] == "bags=2 width=1"
    assert lines[1] == "0 1" and lines[2] == "1 2" and lines[3] == "0 1"
