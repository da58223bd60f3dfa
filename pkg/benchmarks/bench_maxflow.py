"""Benchmark the compiled max-flow kernel against the pure-Python fallback.

Builds default-size template graphs (60 rays x 40 nodes, ~9.6k arcs) over a
speckled phantom at many seed positions, then times the bare kernel solve for
each backend on identical CSR inputs, plus the full segment_at pipeline.

Usage: python benchmarks/bench_maxflow.py [--seeds N] [--repeat K]
"""

import argparse
import importlib
import statistics
import time

import numpy as np

import uscut
from uscut.graph_builder import build_graph, sample_nodes
from uscut.image import seed_stats
from uscut.maxflow import _csr
from uscut.session import segment_at
from uscut.template import DEFAULT_CONFIG


def load_backends():
    backends = {}
    try:
        backends["cython"] = importlib.import_module("uscut._core._maxflow_cy").solve
    except ImportError:
        print("note: compiled kernel not built; benchmarking the fallback only")
    backends["python"] = importlib.import_module("uscut._core._maxflow_py").solve
    return backends


def build_instances(num_seeds):
    spec = uscut.class_defaults("C", lesion_radius=30.0, speckle_sigma=0.15, rng_seed=3)
    img, _ = uscut.generate_phantom(spec, spacing=0.2)
    rng = np.random.default_rng(1)
    instances = []
    seeds = []
    for _ in range(num_seeds):
        seed = (
            spec.center[0] + rng.uniform(-40, 40),
            spec.center[1] + rng.uniform(-40, 40),
        )
        seeds.append(seed)
        stats = seed_stats(img, seed, DEFAULT_CONFIG)
        grid = sample_nodes(img, seed, DEFAULT_CONFIG)
        net = build_graph(grid, stats)
        instances.append((net, _csr(net)))
    return img, seeds, instances


def bench_kernels(backends, instances, repeat):
    results = {}
    flows = {}
    for name, solve in backends.items():
        times = []
        values = []
        for _ in range(repeat):
            for net, (adj_start, adj_arc, slot_to, residual) in instances:
                res = residual.copy()
                t0 = time.perf_counter()
                flow, _ = solve(
                    net.vertex_count, net.source, net.sink, adj_start, adj_arc, slot_to, res
                )
                times.append((time.perf_counter() - t0) * 1000.0)
                values.append(flow)
        results[name] = times
        flows[name] = values
    if len(flows) == 2:
        assert flows["cython"] == flows["python"], "backends disagree"
    return results


def summarize(label, times):
    med = statistics.median(times)
    p95 = sorted(times)[int(0.95 * len(times)) - 1]
    print(f"  {label:<18} median {med:8.3f} ms   p95 {p95:8.3f} ms   n={len(times)}")
    return med


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--seeds", type=int, default=40)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = load_backends()
    img, seeds, instances = build_instances(args.seeds)
    net = instances[0][0]
    print(
        f"graph: {net.vertex_count} vertices, {net.arc_count} arcs "
        f"(config {DEFAULT_CONFIG.num_rays}x{DEFAULT_CONFIG.nodes_per_ray}, "
        f"delta {DEFAULT_CONFIG.delta})"
    )

    print("kernel solve only:")
    kernel_times = bench_kernels(backends, instances, args.repeat)
    medians = {name: summarize(name, times) for name, times in kernel_times.items()}
    if len(medians) == 2:
        print(f"  speedup: {medians['python'] / medians['cython']:.1f}x")

    print("full segment_at pipeline (selected backend: %s):" % uscut.BACKEND)
    pipeline = []
    for seed in seeds:
        result = segment_at(img, seed)
        pipeline.append(result.elapsed_ms)
    summarize("segment_at", pipeline)


if __name__ == "__main__":
    main()
