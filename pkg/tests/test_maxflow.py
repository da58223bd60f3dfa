import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import uscut
from uscut import (
    FlowNetwork,
    TemplateConfig,
    brute_force_cut,
    build_graph_from_costs,
    cut_capacity,
    max_flow,
)
from uscut.errors import DomainError, GraphConstructionError


def chain(*caps):
    """s -> v1 -> ... -> t with the given capacities."""
    n = len(caps) + 1
    tails = list(range(len(caps)))
    heads = list(range(1, n))
    return FlowNetwork.from_arcs(n, 0, n - 1, tails, heads, list(caps))


class TestSmallNetworks:
    def test_single_bottleneck_chain(self):
        net = chain(3.0, 2.0)
        cut = max_flow(net)
        assert cut.flow_value == 2.0
        assert cut.source_side.tolist() == [True, True, False]

    def test_two_disjoint_paths(self):
        # s=0, a=1, b=2, t=3; caps 1 and 4 on the two routes
        net = FlowNetwork.from_arcs(
            4, 0, 3, [0, 1, 0, 2], [1, 3, 2, 3], [1.0, 1.0, 4.0, 4.0]
        )
        assert max_flow(net).flow_value == 5.0

    def test_flow_equals_reported_cut_capacity(self):
        rng = np.random.default_rng(2)
        for _ in range(25):
            cfg = TemplateConfig(
                num_rays=int(rng.integers(3, 9)),
                nodes_per_ray=int(rng.integers(3, 7)),
                radius_px=10.0,
                delta=int(rng.integers(0, 2)),
            )
            c_s = rng.random((cfg.num_rays, cfg.nodes_per_ray))
            c_t = rng.random((cfg.num_rays, cfg.nodes_per_ray))
            net = build_graph_from_costs(c_s, c_t, cfg)
            cut = max_flow(net)
            cap = cut_capacity(net, cut.source_side)
            assert cap == pytest.approx(cut.flow_value, rel=1e-9, abs=1e-12)

    def test_source_disconnected_is_construction_error(self):
        net = FlowNetwork.from_arcs(3, 0, 2, [1], [2], [1.0])
        with pytest.raises(GraphConstructionError, match="source"):
            max_flow(net)

    def test_negative_capacity_rejected(self):
        net = FlowNetwork.from_arcs(3, 0, 2, [0, 1], [1, 2], [1.0, -1.0])
        with pytest.raises(GraphConstructionError):
            max_flow(net)

    def test_nan_capacity_rejected(self):
        net = FlowNetwork.from_arcs(3, 0, 2, [0, 1], [1, 2], [1.0, float("nan")])
        with pytest.raises(GraphConstructionError):
            max_flow(net)


class TestBruteForceOracle:
    def test_all_object_prefers_outermost_cut(self):
        cfg = TemplateConfig(num_rays=5, nodes_per_ray=4, radius_px=10.0, delta=1)
        res = brute_force_cut(np.ones((5, 4)), np.zeros((5, 4)), cfg)
        assert res.cut_indices.tolist() == [2] * 5  # N-2 everywhere
        assert res.cost == 5.0  # only the rim object links are cut
        assert res.unique

    def test_all_background_prefers_innermost_cut(self):
        cfg = TemplateConfig(num_rays=5, nodes_per_ray=4, radius_px=10.0, delta=1)
        res = brute_force_cut(np.zeros((5, 4)), np.ones((5, 4)), cfg)
        assert res.cut_indices.tolist() == [0] * 5
        assert res.cost == 5.0
        assert res.unique

    def test_delta_zero_forces_equal_compromise(self):
        # ray 0 mildly prefers k<=1, ray 2 wants k>=1: joint optimum k=1 everywhere
        cfg = TemplateConfig(num_rays=4, nodes_per_ray=4, radius_px=10.0, delta=0)
        c_s = np.zeros((4, 4))
        c_t = np.zeros((4, 4))
        c_t[0] = [0.0, 0.4, 1.0, 1.0]
        c_s[2] = [1.0, 0.7, 0.0, 0.0]
        res = brute_force_cut(c_s, c_t, cfg)
        assert res.cut_indices.tolist() == [1, 1, 1, 1]
        assert res.cost == pytest.approx(0.4)
        cut = max_flow(build_graph_from_costs(c_s, c_t, cfg))
        assert cut.flow_value == pytest.approx(res.cost, rel=1e-9)
        assert cut.cut_indices.tolist() == [1, 1, 1, 1]

    def test_size_guard(self):
        cfg = TemplateConfig(num_rays=11, nodes_per_ray=4, radius_px=10.0, delta=1)
        with pytest.raises(DomainError, match="guard"):
            brute_force_cut(np.zeros((11, 4)), np.zeros((11, 4)), cfg)

    def test_tie_breaks_to_lexicographically_smallest(self):
        cfg = TemplateConfig(num_rays=3, nodes_per_ray=3, radius_px=10.0, delta=1)
        res = brute_force_cut(np.zeros((3, 3)), np.zeros((3, 3)), cfg)
        assert res.cut_indices.tolist() == [0, 0, 0]
        assert not res.unique

    @settings(max_examples=60, deadline=None)
    @given(data=st.data())
    def test_matches_max_flow_on_quarter_grid_weights(self, data):
        rays = data.draw(st.integers(3, 6), label="rays")
        nodes = data.draw(st.integers(3, 5), label="nodes")
        delta = data.draw(st.integers(0, nodes - 2), label="delta")
        cfg = TemplateConfig(num_rays=rays, nodes_per_ray=nodes, radius_px=10.0, delta=delta)
        levels = st.sampled_from([0.0, 0.25, 0.5, 0.75, 1.0])
        cells = rays * nodes
        c_s = np.array(data.draw(st.lists(levels, min_size=cells, max_size=cells))).reshape(rays, nodes)
        c_t = np.array(data.draw(st.lists(levels, min_size=cells, max_size=cells))).reshape(rays, nodes)
        oracle = brute_force_cut(c_s, c_t, cfg)
        cut = max_flow(build_graph_from_costs(c_s, c_t, cfg))
        assert abs(cut.flow_value - oracle.cost) <= 1e-9 * (1.0 + oracle.cost)
        if oracle.unique:
            assert np.array_equal(cut.cut_indices, oracle.cut_indices)


class TestDeterminism:
    def test_insertion_order_does_not_matter(self):
        rng = np.random.default_rng(9)
        cfg = TemplateConfig(num_rays=6, nodes_per_ray=5, radius_px=10.0, delta=2)
        net = build_graph_from_costs(rng.random((6, 5)), rng.random((6, 5)), cfg)
        base = max_flow(net)
        for _ in range(10):
            perm = rng.permutation(net.arc_count)
            shuffled = FlowNetwork.from_arcs(
                net.vertex_count,
                net.source,
                net.sink,
                net.tails[perm],
                net.heads[perm],
                net.capacities[perm],
                template=cfg,
            )
            cut = max_flow(shuffled)
            assert cut.flow_value == base.flow_value  # bit-for-bit
            assert np.array_equal(cut.source_side, base.source_side)
            assert np.array_equal(cut.cut_indices, base.cut_indices)

    def test_repeat_solves_are_identical(self):
        rng = np.random.default_rng(4)
        cfg = TemplateConfig(num_rays=8, nodes_per_ray=6, radius_px=10.0, delta=1)
        net = build_graph_from_costs(rng.random((8, 6)), rng.random((8, 6)), cfg)
        first = max_flow(net)
        second = max_flow(net)
        assert first.flow_value == second.flow_value
        assert np.array_equal(first.source_side, second.source_side)


class TestBackendParity:
    def test_python_and_compiled_agree_bitwise(self):
        try:
            from uscut._core import _maxflow_cy
        except ImportError:
            pytest.skip("compiled core not built")
        from uscut._core import _maxflow_py
        from uscut.maxflow import _csr

        rng = np.random.default_rng(123)
        for _ in range(20):
            cfg = TemplateConfig(
                num_rays=int(rng.integers(3, 9)),
                nodes_per_ray=int(rng.integers(3, 7)),
                radius_px=10.0,
                delta=int(rng.integers(0, 2)),
            )
            c_s = rng.random((cfg.num_rays, cfg.nodes_per_ray))
            c_t = rng.random((cfg.num_rays, cfg.nodes_per_ray))
            net = build_graph_from_costs(c_s, c_t, cfg)
            adj_start, adj_arc, slot_to, res_c = _csr(net)
            res_p = res_c.copy()
            args = (net.vertex_count, net.source, net.sink, adj_start, adj_arc, slot_to)
            flow_c, side_c = _maxflow_cy.solve(*args, res_c)
            flow_p, side_p = _maxflow_py.solve(*args, res_p)
            assert flow_c == flow_p
            assert np.array_equal(side_c, side_p)
            assert np.array_equal(res_c, res_p)
