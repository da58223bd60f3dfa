"""Pure-Python max-flow kernel (Dinic blocking-flow), fallback for the compiled core.

Must stay operation-for-operation equivalent to ``_maxflow_cy.pyx``: both walk
arcs in the same order and perform the same float comparisons and updates, so
results agree bit for bit.
"""

from __future__ import annotations

import numpy as np


def solve(
    vertex_count: int,
    source: int,
    sink: int,
    adj_start: np.ndarray,
    adj_arc: np.ndarray,
    arc_to: np.ndarray,
    residual: np.ndarray,
) -> tuple[float, np.ndarray]:
    """Run max-flow on a CSR residual graph; mutates `residual` in place.

    Arc slots come in pairs: slot a and a^1 are a forward arc and its reverse.
    Returns (flow_value, source_side) where source_side marks the vertices
    reachable from the source in the final residual graph.
    """
    n = vertex_count
    start = adj_start.tolist()
    arcs = adj_arc.tolist()
    to = arc_to.tolist()
    res = residual.tolist()

    level = [-1] * n
    cur = [0] * n
    queue = [0] * n
    total = 0.0

    while True:
        # BFS over residual arcs builds the level graph.
        for i in range(n):
            level[i] = -1
        level[source] = 0
        queue[0] = source
        qhead, qtail = 0, 1
        while qhead < qtail:
            u = queue[qhead]
            qhead += 1
            for p in range(start[u], start[u + 1]):
                a = arcs[p]
                if res[a] > 0.0:
                    v = to[a]
                    if level[v] < 0:
                        level[v] = level[u] + 1
                        queue[qtail] = v
                        qtail += 1
        if level[sink] < 0:
            break

        for i in range(n):
            cur[i] = start[i]

        # Blocking flow: repeated current-arc DFS from the source.
        while True:
            path: list[int] = []  # arc slots along the current partial path
            v = source
            aug = -1.0
            while True:
                if v == sink:
                    f = res[path[0]]
                    for a in path:
                        if res[a] < f:
                            f = res[a]
                    for a in path:
                        res[a] -= f
                        res[a ^ 1] += f
                    aug = f
                    break
                advanced = False
                while cur[v] < start[v + 1]:
                    a = arcs[cur[v]]
                    w = to[a]
                    if res[a] > 0.0 and level[w] == level[v] + 1:
                        path.append(a)
                        v = w
                        advanced = True
                        break
                    cur[v] += 1
                if advanced:
                    continue
                level[v] = -1  # dead end: prune v for this phase
                if v == source:
                    break
                back = path.pop()
                v = to[back ^ 1]
                cur[v] += 1
            if aug < 0.0:
                break
            total += aug

    side = np.zeros(n, dtype=np.uint8)
    side_list = [0] * n
    side_list[source] = 1
    queue[0] = source
    qhead, qtail = 0, 1
    while qhead < qtail:
        u = queue[qhead]
        qhead += 1
        for p in range(start[u], start[u + 1]):
            a = arcs[p]
            if res[a] > 0.0:
                v = to[a]
                if not side_list[v]:
                    side_list[v] = 1
                    queue[qtail] = v
                    qtail += 1
    side[:] = side_list
    residual[:] = res
    return total, side
