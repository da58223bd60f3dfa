"""Exact s-t max-flow / min-cut on template graphs, plus an exhaustive oracle.

The solver dispatches to the compiled kernel when available (see ``_core``).
Min-cut tie-breaking is canonical: the source side is the set of vertices
reachable from s in the final residual graph (the minimal source set), which
is independent of the augmentation order.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

import numpy as np

from ._core import BACKEND, solve
from .errors import DomainError, FormatError, GraphConstructionError
from .template import TemplateConfig

# Exhaustive enumeration guard for the oracle.
ORACLE_MAX_RAYS = 10
ORACLE_MAX_NODES = 8


@dataclass(frozen=True, eq=False)
class FlowNetwork:
    """Directed capacitated graph with virtual source and sink terminals.

    Arcs are stored canonically: parallel arcs merged (capacities summed in
    ascending order) and sorted by (tail, head), so two networks built from
    the same arc multiset are identical regardless of insertion order.
    """

    vertex_count: int
    source: int
    sink: int
    tails: np.ndarray
    heads: np.ndarray
    capacities: np.ndarray
    template: TemplateConfig | None = None
    cap_inf: float | None = None
    edge_counts: dict = field(default_factory=dict)

    @classmethod
    def from_arcs(
        cls,
        vertex_count: int,
        source: int,
        sink: int,
        tails,
        heads,
        capacities,
        template: TemplateConfig | None = None,
        cap_inf: float | None = None,
        edge_counts: dict | None = None,
    ) -> "FlowNetwork":
        tails = np.asarray(tails, dtype=np.int64)
        heads = np.asarray(heads, dtype=np.int64)
        caps = np.asarray(capacities, dtype=np.float64)
        if not (tails.shape == heads.shape == caps.shape):
            raise GraphConstructionError("arc arrays must have equal length")
        # capacity as tertiary key: merged sums are insertion-order independent
        order = np.lexsort((caps, heads, tails))
        tails, heads, caps = tails[order], heads[order], caps[order]
        key = tails * vertex_count + heads
        first = np.ones(len(key), dtype=bool)
        first[1:] = key[1:] != key[:-1]
        starts = np.flatnonzero(first)
        merged = np.add.reduceat(caps, starts) if len(caps) else caps
        return cls(
            vertex_count=vertex_count,
            source=source,
            sink=sink,
            tails=tails[starts],
            heads=heads[starts],
            capacities=merged,
            template=template,
            cap_inf=cap_inf,
            edge_counts=dict(edge_counts or {}),
        )

    @property
    def arc_count(self) -> int:
        return len(self.tails)

    def validate(self) -> None:
        n = self.vertex_count
        if not (0 <= self.source < n and 0 <= self.sink < n):
            raise GraphConstructionError("source/sink id out of range")
        if self.source == self.sink:
            raise GraphConstructionError("source and sink must differ")
        if len(self.tails) and (self.tails.min() < 0 or self.tails.max() >= n):
            raise GraphConstructionError("arc tail id out of range")
        if len(self.heads) and (self.heads.min() < 0 or self.heads.max() >= n):
            raise GraphConstructionError("arc head id out of range")
        caps = self.capacities
        if len(caps) and (not np.all(np.isfinite(caps)) or caps.min() < 0):
            raise GraphConstructionError("capacities must be finite and non-negative")
        if not np.any((self.tails == self.source) & (caps > 0)):
            raise GraphConstructionError("source is not connected to any node")
        if not np.any((self.heads == self.sink) & (caps > 0)):
            raise GraphConstructionError("no node is connected to the sink")


@dataclass(frozen=True, eq=False)
class CutResult:
    """Max-flow value, the minimal source set, and per-ray cut indices.

    cut_indices[r] is the outermost source-side node index on ray r; None for
    networks without template metadata.
    """

    flow_value: float
    source_side: np.ndarray
    cut_indices: np.ndarray | None = None


def _csr(net: FlowNetwork):
    m = net.arc_count
    slot_tail = np.empty(2 * m, dtype=np.int32)
    slot_to = np.empty(2 * m, dtype=np.int32)
    residual = np.zeros(2 * m, dtype=np.float64)
    slot_tail[0::2] = net.tails
    slot_tail[1::2] = net.heads
    slot_to[0::2] = net.heads
    slot_to[1::2] = net.tails
    residual[0::2] = net.capacities
    adj_arc = np.argsort(slot_tail, kind="stable").astype(np.int32)
    counts = np.bincount(slot_tail, minlength=net.vertex_count)
    adj_start = np.zeros(net.vertex_count + 1, dtype=np.int32)
    np.cumsum(counts, out=adj_start[1:])
    return adj_start, adj_arc, slot_to, residual


def _extract_cut_indices(cfg: TemplateConfig, source_side: np.ndarray) -> np.ndarray:
    rays, nodes = cfg.num_rays, cfg.nodes_per_ray
    grid = source_side[: rays * nodes].reshape(rays, nodes).astype(bool)
    if np.any(~grid[:, 0]):
        raise GraphConstructionError("innermost node left the source side")
    if np.any(grid[:, -1]):
        raise GraphConstructionError("template rim node reached the source side")
    k = grid.sum(axis=1) - 1
    # source side of each ray must be exactly the prefix {0..k_r}
    prefix = np.arange(nodes)[None, :] <= k[:, None]
    if not np.array_equal(grid, prefix):
        raise GraphConstructionError("ray source side is not a prefix")
    jumps = np.abs(k - np.roll(k, -1))
    if np.any(jumps > cfg.delta):
        raise GraphConstructionError("adjacent cut indices differ by more than delta")
    return k.astype(np.int64)


def max_flow(net: FlowNetwork) -> CutResult:
    """Exact max-flow; source side is the residual-reachable set from s."""
    net.validate()
    adj_start, adj_arc, slot_to, residual = _csr(net)
    flow, side = solve(
        net.vertex_count, net.source, net.sink, adj_start, adj_arc, slot_to, residual
    )
    side = side.astype(bool)
    if side[net.sink]:
        raise GraphConstructionError("sink is residual-reachable after max-flow")
    cut_indices = None
    if net.template is not None:
        cut_indices = _extract_cut_indices(net.template, side)
    return CutResult(flow_value=float(flow), source_side=side, cut_indices=cut_indices)


def cut_capacity(net: FlowNetwork, source_side: np.ndarray) -> float:
    """Total capacity of arcs crossing from the source side to the sink side."""
    side = np.asarray(source_side, dtype=bool)
    crossing = side[net.tails] & ~side[net.heads]
    return float(np.sum(net.capacities[crossing]))


@dataclass(frozen=True)
class BruteForceResult:
    cost: float
    cut_indices: np.ndarray
    unique: bool


def brute_force_cut(c_s, c_t, cfg: TemplateConfig) -> BruteForceResult:
    """Minimize the cut cost by exhaustive enumeration of feasible index vectors.

    cost(k) = sum_r [ sum_{i>k_r} c_s[r,i] + sum_{i<=k_r} c_t[r,i] ] over all k
    with k_r in [0, N-2] and circular |k_r - k_{r+1}| <= delta. Ties go to the
    lexicographically smallest k. Completely independent of the flow solver.
    """
    c_s = np.asarray(c_s, dtype=np.float64)
    c_t = np.asarray(c_t, dtype=np.float64)
    rays, nodes = cfg.num_rays, cfg.nodes_per_ray
    if rays > ORACLE_MAX_RAYS or nodes > ORACLE_MAX_NODES:
        raise DomainError(
            f"oracle guarded to R <= {ORACLE_MAX_RAYS}, N <= {ORACLE_MAX_NODES}"
        )
    if c_s.shape != (rays, nodes) or c_t.shape != (rays, nodes):
        raise DomainError("cost grids must have shape (num_rays, nodes_per_ray)")

    # per-ray cost of choosing index k, by direct summation
    ray_cost = [[0.0] * (nodes - 1) for _ in range(rays)]
    for r in range(rays):
        for k in range(nodes - 1):
            total = 0.0
            for i in range(k + 1, nodes):
                total += c_s[r, i]
            for i in range(k + 1):
                total += c_t[r, i]
            ray_cost[r][k] = total

    delta = cfg.delta
    top = nodes - 2
    best_cost = float("inf")
    best_k: list[int] | None = None
    minimizers = 0

    def descend(r: int, k0: int, k_prev: int, partial: float, chosen: list[int]):
        nonlocal best_cost, best_k, minimizers
        if r == rays:
            if abs(k_prev - k0) > delta:
                return
            if partial < best_cost:
                best_cost = partial
                best_k = list(chosen)
                minimizers = 1
            elif partial == best_cost:
                minimizers += 1
            return
        lo = max(0, k_prev - delta)
        hi = min(top, k_prev + delta)
        for k in range(lo, hi + 1):
            cost = partial + ray_cost[r][k]
            if cost > best_cost:
                continue
            chosen.append(k)
            descend(r + 1, k0, k, cost, chosen)
            chosen.pop()

    for k0 in range(top + 1):
        cost0 = ray_cost[0][k0]
        if cost0 > best_cost:
            continue
        descend(1, k0, k0, cost0, [k0])

    assert best_k is not None
    return BruteForceResult(
        cost=best_cost,
        cut_indices=np.asarray(best_k, dtype=np.int64),
        unique=minimizers == 1,
    )


def parse_dimacs(path: str | os.PathLike) -> FlowNetwork:
    """Read a max-flow problem in DIMACS text form (``p max``/``n``/``a`` lines)."""
    n_vertices = None
    source = sink = None
    tails: list[int] = []
    heads: list[int] = []
    caps: list[float] = []
    with open(path, "r", encoding="ascii") as fh:
        for line in fh:
            parts = line.split()
            if not parts or parts[0] == "c":
                continue
            if parts[0] == "p":
                if len(parts) != 4 or parts[1] != "max":
                    raise FormatError(f"bad problem line: {line.strip()!r}")
                n_vertices = int(parts[2])
            elif parts[0] == "n":
                if parts[2] == "s":
                    source = int(parts[1]) - 1
                elif parts[2] == "t":
                    sink = int(parts[1]) - 1
            elif parts[0] == "a":
                tails.append(int(parts[1]) - 1)
                heads.append(int(parts[2]) - 1)
                caps.append(float(parts[3]))
    if n_vertices is None or source is None or sink is None:
        raise FormatError("DIMACS input is missing the problem or node lines")
    return FlowNetwork.from_arcs(n_vertices, source, sink, tails, heads, caps)


__all__ = [
    "BACKEND",
    "BruteForceResult",
    "CutResult",
    "FlowNetwork",
    "brute_force_cut",
    "cut_capacity",
    "max_flow",
    "parse_dimacs",
]
