"""Builds the radial template graph over an image.

Nodes are sampled along the template rays; hard (sentinel-infinite) edges
enforce a single monotone cut per ray and bounded index jumps between
neighboring rays, and terminal edges encode per-node object/background
affinity from the seed-contrast statistics.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import IO

import numpy as np

from .errors import DomainError
from .image import GrayImage, SeedStats, sample_bilinear
from .maxflow import FlowNetwork
from .template import TemplateConfig, node_radii, ray_directions


@dataclass(frozen=True, eq=False)
class NodeGrid:
    """Sampled node positions and intensities, (num_rays, nodes_per_ray)."""

    positions: np.ndarray  # (R, N, 2) continuous image points
    intensities: np.ndarray  # (R, N) in [0, 1]
    seed: tuple[float, float]
    cfg: TemplateConfig


@dataclass(frozen=True)
class WeightModel:
    """Terminal-weight parameters; cap_inf is the finite stand-in for infinity.

    cap_inf strictly exceeds the sum of all finite capacities in the graph it
    belongs to, so no hard edge can ever saturate in a min-cut.
    """

    mu_seed: float
    tau: float
    cap_inf: float


def sample_nodes(img: GrayImage, seed: tuple[float, float], cfg: TemplateConfig) -> NodeGrid:
    """Sample the template node grid around a seed strictly inside the image.

    Node positions may fall outside the raster; their intensity then comes
    from border clamping.
    """
    sx, sy = float(seed[0]), float(seed[1])
    if not img.contains(sx, sy, strict=True):
        raise DomainError(f"seed ({sx}, {sy}) must lie strictly inside the image")
    dirs = ray_directions(cfg.num_rays)  # (R, 2)
    radii = node_radii(cfg)  # (N,)
    offsets = dirs[:, None, :] * radii[None, :, None]  # (R, N, 2)
    positions = offsets + np.array([sx, sy])
    intensities = sample_bilinear(img, positions[:, :, 0], positions[:, :, 1])
    return NodeGrid(positions=positions, intensities=intensities, seed=(sx, sy), cfg=cfg)


def terminal_weights(intensities: np.ndarray, stats: SeedStats) -> tuple[np.ndarray, np.ndarray]:
    """Object/background affinities in [0, 1] from deviation d = |I - mu_seed|.

    Deviation below tau leans object (source capacity), between tau and 2*tau
    leans background (sink capacity); at most one of the two is nonzero.
    """
    d = np.abs(np.asarray(intensities, dtype=np.float64) - stats.mu_seed)
    c_s = np.maximum(0.0, stats.tau - d) / stats.tau
    c_t = np.maximum(0.0, np.minimum(d, 2.0 * stats.tau) - stats.tau) / stats.tau
    return c_s, c_t


def build_graph_from_costs(c_s, c_t, cfg: TemplateConfig) -> FlowNetwork:
    """Assemble the template flow network from explicit per-node affinities.

    Vertex ids: node (r, i) -> r*N + i, then source, then sink. Edges:
      intra  (r, i) -> (r, i-1), hard, for i = 1..N-1;
      inter  (r, i) -> (r +- 1 mod R, max(0, i - delta)), hard, for all i;
      terminal: source -> (r, 0) and (r, N-1) -> sink hard for every ray,
      plus source -> v with c_s(v) and v -> sink with c_t(v), zeros omitted.
    """
    c_s = np.asarray(c_s, dtype=np.float64)
    c_t = np.asarray(c_t, dtype=np.float64)
    rays, nodes = cfg.num_rays, cfg.nodes_per_ray
    if c_s.shape != (rays, nodes) or c_t.shape != (rays, nodes):
        raise DomainError("cost grids must have shape (num_rays, nodes_per_ray)")
    node_count = rays * nodes
    source = node_count
    sink = node_count + 1
    ids = np.arange(node_count).reshape(rays, nodes)

    # The sentinel exceeds every possible finite cut by construction.
    cap_inf = math.fsum(c_s.ravel().tolist()) + math.fsum(c_t.ravel().tolist()) + 1.0

    intra_tails = ids[:, 1:].ravel()
    intra_heads = ids[:, :-1].ravel()

    inter_src = np.broadcast_to(ids, (2, rays, nodes))
    ray_next = np.roll(np.arange(rays), -1)
    ray_prev = np.roll(np.arange(rays), 1)
    lowered = np.maximum(0, np.arange(nodes) - cfg.delta)
    inter_heads = np.stack(
        [ids[ray_next][:, lowered], ids[ray_prev][:, lowered]], axis=0
    )
    inter_tails = inter_src.ravel()
    inter_heads = inter_heads.ravel()

    anchor_tails = np.concatenate([np.full(rays, source), ids[:, -1]])
    anchor_heads = np.concatenate([ids[:, 0], np.full(rays, sink)])

    s_mask = c_s.ravel() > 0.0
    t_mask = c_t.ravel() > 0.0
    tlink_tails = np.concatenate([np.full(s_mask.sum(), source), ids.ravel()[t_mask]])
    tlink_heads = np.concatenate([ids.ravel()[s_mask], np.full(t_mask.sum(), sink)])
    tlink_caps = np.concatenate([c_s.ravel()[s_mask], c_t.ravel()[t_mask]])

    tails = np.concatenate([intra_tails, inter_tails, anchor_tails, tlink_tails])
    heads = np.concatenate([intra_heads, inter_heads, anchor_heads, tlink_heads])
    caps = np.concatenate(
        [
            np.full(len(intra_tails) + len(inter_tails) + len(anchor_tails), cap_inf),
            tlink_caps,
        ]
    )
    counts = {
        "intra": len(intra_tails),
        "inter": len(inter_tails),
        "terminal_inf": len(anchor_tails),
        "tlink": len(tlink_caps),
    }
    return FlowNetwork.from_arcs(
        node_count + 2,
        source,
        sink,
        tails,
        heads,
        caps,
        template=cfg,
        cap_inf=cap_inf,
        edge_counts=counts,
    )


def build_graph(grid: NodeGrid, stats: SeedStats) -> FlowNetwork:
    """Build the flow network for a sampled grid and its seed statistics."""
    c_s, c_t = terminal_weights(grid.intensities, stats)
    return build_graph_from_costs(c_s, c_t, grid.cfg)


def weight_model(net: FlowNetwork, stats: SeedStats) -> WeightModel:
    assert net.cap_inf is not None
    return WeightModel(mu_seed=stats.mu_seed, tau=stats.tau, cap_inf=net.cap_inf)


def dump_dimacs(net: FlowNetwork, out: IO[str]) -> None:
    """Write the network in DIMACS max-flow text form for cross-tool checks."""
    out.write(f"p max {net.vertex_count} {net.arc_count}\n")
    out.write(f"n {net.source + 1} s\n")
    out.write(f"n {net.sink + 1} t\n")
    for u, v, c in zip(net.tails, net.heads, net.capacities):
        out.write(f"a {int(u) + 1} {int(v) + 1} {float(c)!r}\n")
