# cython: boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled max-flow kernel (Dinic blocking-flow).

Mirror of ``_maxflow_py.solve``: identical arc visiting order and float
operations, so both backends return bit-identical results.
"""

from libc.stdlib cimport free, malloc

import numpy as np


def solve(int vertex_count, int source, int sink,
          int[::1] adj_start, int[::1] adj_arc, int[::1] arc_to,
          double[::1] residual):
    """Run max-flow on a CSR residual graph; mutates `residual` in place."""
    cdef int n = vertex_count
    cdef int *level = <int *> malloc(n * sizeof(int))
    cdef int *cur = <int *> malloc(n * sizeof(int))
    cdef int *queue = <int *> malloc(n * sizeof(int))
    cdef int *path = <int *> malloc(n * sizeof(int))
    cdef double total = 0.0
    cdef double f, aug
    cdef int i, u, v, w, p, a, back, qhead, qtail, plen
    cdef bint advanced
    cdef unsigned char[::1] side_view

    if level == NULL or cur == NULL or queue == NULL or path == NULL:
        free(level); free(cur); free(queue); free(path)
        raise MemoryError()

    try:
        while True:
            for i in range(n):
                level[i] = -1
            level[source] = 0
            queue[0] = source
            qhead = 0
            qtail = 1
            while qhead < qtail:
                u = queue[qhead]
                qhead += 1
                for p in range(adj_start[u], adj_start[u + 1]):
                    a = adj_arc[p]
                    if residual[a] > 0.0:
                        v = arc_to[a]
                        if level[v] < 0:
                            level[v] = level[u] + 1
                            queue[qtail] = v
                            qtail += 1
            if level[sink] < 0:
                break

            for i in range(n):
                cur[i] = adj_start[i]

            while True:
                plen = 0
                v = source
                aug = -1.0
                while True:
                    if v == sink:
                        f = residual[path[0]]
                        for i in range(plen):
                            if residual[path[i]] < f:
                                f = residual[path[i]]
                        for i in range(plen):
                            residual[path[i]] -= f
                            residual[path[i] ^ 1] += f
                        aug = f
                        break
                    advanced = False
                    while cur[v] < adj_start[v + 1]:
                        a = adj_arc[cur[v]]
                        w = arc_to[a]
                        if residual[a] > 0.0 and level[w] == level[v] + 1:
                            path[plen] = a
                            plen += 1
                            v = w
                            advanced = True
                            break
                        cur[v] += 1
                    if advanced:
                        continue
                    level[v] = -1
                    if v == source:
                        break
                    plen -= 1
                    back = path[plen]
                    v = arc_to[back ^ 1]
                    cur[v] += 1
                if aug < 0.0:
                    break
                total += aug

        side = np.zeros(n, dtype=np.uint8)
        side_view = side
        side_view[source] = 1
        queue[0] = source
        qhead = 0
        qtail = 1
        while qhead < qtail:
            u = queue[qhead]
            qhead += 1
            for p in range(adj_start[u], adj_start[u + 1]):
                a = adj_arc[p]
                if residual[a] > 0.0:
                    v = arc_to[a]
                    if side_view[v] == 0:
                        side_view[v] = 1
                        queue[qtail] = v
                        qtail += 1
        return total, side
    finally:
        free(level)
        free(cur)
        free(queue)
        free(path)
