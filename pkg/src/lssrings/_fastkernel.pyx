# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel for the alternating-walk obstruction test.

Same contract as lssrings._purekernel.obstruction_free; see there for
the soundness argument. This version runs the Kahn peeling on C arrays.
"""

from libc.stdlib cimport malloc, free


def obstruction_free(list mate, list host_u, list host_v):
    """True iff the alternating-walk digraph is acyclic."""
    cdef int n = len(mate)
    cdef int m = len(host_u)
    cdef int i, x, y, mx, my, v, w, e, qt
    cdef int narcs = 0

    cdef int *cmate = <int *> malloc(n * sizeof(int))
    cdef int *first = <int *> malloc(n * sizeof(int))
    cdef int *indeg = <int *> malloc(n * sizeof(int))
    cdef int *heads = <int *> malloc((2 * m + 1) * sizeof(int))
    cdef int *nxt = <int *> malloc((2 * m + 1) * sizeof(int))
    cdef int *queue = <int *> malloc(n * sizeof(int))
    if cmate == NULL or first == NULL or indeg == NULL or heads == NULL \
            or nxt == NULL or queue == NULL:
        free(cmate); free(first); free(indeg); free(heads); free(nxt); free(queue)
        raise MemoryError()

    try:
        for i in range(n):
            cmate[i] = mate[i]
            first[i] = -1
            indeg[i] = 0
        for i in range(m):
            x = host_u[i]
            y = host_v[i]
            mx = cmate[x]
            my = cmate[y]
            if mx < 0 or my < 0:
                continue
            heads[narcs] = my
            nxt[narcs] = first[x]
            first[x] = narcs
            indeg[my] += 1
            narcs += 1
            heads[narcs] = mx
            nxt[narcs] = first[y]
            first[y] = narcs
            indeg[mx] += 1
            narcs += 1
        if narcs == 0:
            return True
        qt = 0
        for v in range(n):
            if indeg[v] == 0 and first[v] != -1:
                queue[qt] = v
                qt += 1
        while qt > 0:
            qt -= 1
            v = queue[qt]
            e = first[v]
            first[v] = -1
            while e != -1:
                w = heads[e]
                indeg[w] -= 1
                if indeg[w] == 0 and first[w] != -1:
                    queue[qt] = w
                    qt += 1
                e = nxt[e]
        for v in range(n):
            if indeg[v] > 0:
                return False
        return True
    finally:
        free(cmate)
        free(first)
        free(indeg)
        free(heads)
        free(nxt)
        free(queue)
