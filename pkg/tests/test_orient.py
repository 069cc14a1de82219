import numpy as np
import pytest

from twfrag.augment import LengthAugmentation, fraternal_step, initial_orientation
from twfrag.errors import InputError
from twfrag.generators import GeneratorSpec, generate, grid_graph, path_graph
from twfrag.graph import OVER, Graph, VertexSet
from twfrag.orient import (DistanceOrientation, SuperAugmentation, back_propagate_step,
                           build_distance_orientation, build_with_sequence, out_ball,
                           truncated_distance, verify_representation, _csr_from_lists)


def star_stage(r=2):
    return LengthAugmentation(3, r, [[1, 2], [], []],
                              {(0, 1): 0b10, (0, 2): 0b10})


def orientation_from_rows(n, r, rows):
    indptr, indices = _csr_from_lists(n, rows)
    maxout = max((len(row) for row in rows), default=0)
    return DistanceOrientation(n, r, indptr, indices, maxout)


class TestBackPropagate:
    def test_star_hand_trace(self):
        stage0 = star_stage()
        stage1 = fraternal_step(stage0)
        h = SuperAugmentation(stage1, set(), level=1)
        low = back_propagate_step(h, stage0)
        arcs = {(u, v) for u in range(3) for v in low.out_lists()[u]}
        assert arcs == {(0, 1), (0, 2), (1, 0)}
        # the doubled edge gives the inward walk 1 -> 0 -> 2 of length 2
        o = orientation_from_rows(3, 2, low.out_lists())
        g = Graph.from_edges(3, [(0, 1), (0, 2)])
        assert truncated_distance(o, 1, 2) == 2
        assert verify_representation(g, o).ok

    def test_stage_without_new_edges_is_identity(self):
        st = initial_orientation(path_graph(4), 3)  # directed path, no pairs
        nxt = fraternal_step(st)
        h = SuperAugmentation(nxt, set(), level=1)
        low = back_propagate_step(h, st)
        assert low.extra == set()

    def test_missing_witness_is_internal_error(self):
        from twfrag.errors import InternalConsistencyError

        st = initial_orientation(path_graph(3), 2)  # 0 -> 1 -> 2, no pairs
        fake = LengthAugmentation(3, 2, [list(r) for r in st.out],
                                  dict(st.lengths))
        fake.lengths[(0, 1)] |= 0b100  # bogus length 2 with no fraternal origin
        h = SuperAugmentation(fake, set(), level=1)
        with pytest.raises(InternalConsistencyError):
            back_propagate_step(h, st)

    def test_outdegree_telescoping_random(self):
        for seed in range(6):
            g = generate(GeneratorSpec.make("random_sparse", n=30, seed=seed))
            for r in (2, 3):
                o = build_distance_orientation(g, r)
                for step in o.stats["back_steps"]:
                    assert step["post_max_outdegree"] <= (r + 1) * step["pre_max_outdegree"]


class TestBuildOrientation:
    def test_r1_is_initial_orientation(self):
        g = grid_graph(3, 3)
        o = build_distance_orientation(g, 1)
        st = initial_orientation(g, 1)
        assert set(o.arcs()) == {(u, v) for u in range(g.n) for v in st.out[u]}

    def test_p3_r2_representation(self):
        g = path_graph(3)
        o = build_distance_orientation(g, 2)
        assert verify_representation(g, o).ok

    def test_grid_r3(self):
        g = grid_graph(4, 4)
        o = build_distance_orientation(g, 3)
        assert verify_representation(g, o).ok

    def test_underlying_graph_preserved(self, corpus20):
        for label, g in corpus20:
            for r in (1, 2, 3):
                o = build_distance_orientation(g, r)
                assert o.undirected_pairs() == set(g.edges()), (label, r)

    def test_invalid_r(self):
        with pytest.raises(InputError):
            build_distance_orientation(path_graph(2), 0)

    def test_representation_corpus(self, corpus20):
        for label, g in corpus20:
            for r in (1, 2, 3):
                rep = verify_representation(g, build_distance_orientation(g, r))
                assert rep.ok, (label, r, rep.violations[:3])

    def test_build_with_sequence_levels(self):
        g = grid_graph(3, 4)
        o, seq, supers = build_with_sequence(g, 3)
        assert len(seq.stages) == 3
        assert [s.level for s in supers] == [2, 1, 0]
        for s in supers:
            for (u, v) in s.extra:
                assert s.support.has_arc(v, u)


class TestQueries:
    def setup_method(self):
        # a -> b -> c chain
        self.o = orientation_from_rows(3, 2, [[1], [2], []])

    def test_out_ball_examples(self):
        assert list(out_ball(self.o, 0, 2)) == [0, 1, 2]
        assert list(out_ball(self.o, 1, 1)) == [1, 2]
        assert list(out_ball(self.o, 2, 2)) == [2]
        assert list(out_ball(self.o, 0, 0)) == [0]

    def test_out_ball_monotone_in_t(self):
        b1 = set(out_ball(self.o, 0, 1))
        b2 = set(out_ball(self.o, 0, 2))
        assert b1 <= b2

    def test_out_ball_range_check(self):
        with pytest.raises(InputError):
            out_ball(self.o, 0, 3)

    def test_truncated_distance_same_vertex(self):
        assert truncated_distance(self.o, 1, 1) == 0

    def test_truncated_distance_p3_endpoints(self):
        g = path_graph(3)
        o = build_distance_orientation(g, 2)
        assert truncated_distance(o, 0, 2) == 2

    def test_disconnected_over(self):
        o = orientation_from_rows(4, 2, [[1], [], [3], []])
        assert truncated_distance(o, 0, 2) == OVER


class TestVerifyRepresentation:
    def test_bad_orientation_reported(self):
        # both path edges leave the middle vertex: no inward walk for
        # the endpoint pair
        g = path_graph(3)
        o = orientation_from_rows(3, 2, [[], [0, 2], []])
        rep = verify_representation(g, o)
        assert not rep.ok
        assert any(u == 0 and v == 2 for u, v, _, _ in rep.violations)

    def test_r1_any_orientation_clean(self):
        g = generate(GeneratorSpec.make("random_sparse", n=15, seed=4))
        st = initial_orientation(g, 1)
        o = orientation_from_rows(g.n, 1, [list(row) for row in st.out])
        assert verify_representation(g, o).ok

    def test_sampled_mode(self):
        g = grid_graph(12, 12)
        o = build_distance_orientation(g, 2)
        rep = verify_representation(g, o, pairs=500)
        assert rep.mode == "sampled" and rep.checked_pairs == 500 and rep.ok

    def test_sampling_kicks_in_above_threshold(self):
        g = grid_graph(46, 46)  # 2116 > 2000 switches to the sampled mode
        o = build_distance_orientation(g, 2)
        rep = verify_representation(g, o)
        assert rep.mode == "sampled" and rep.checked_pairs == 50_000 and rep.ok

    def test_dump_header(self):
        o = orientation_from_rows(3, 2, [[1], [2], []])
        lines = o.dump().strip().split("\n")
        assert lines[0] == "r=2 maxout=1"
        assert lines[1:] == ["0 -> 1", "1 -> 2"]
