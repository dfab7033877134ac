# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels for graphs of at most 64 vertices.

Mirrors ``_kernels_py`` exactly: same arguments, same search order, same
results.  Vertex and role sets are ``uint64`` masks.
"""

from libc.stdint cimport uint64_t, int64_t
from libc.string cimport memcpy

cdef enum:
    MAXN = 64

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef struct Search:
    int n
    int r
    uint64_t adj[MAXN]
    int order[MAXN]
    int nbr[MAXN][MAXN]
    int deg[MAXN]
    uint64_t rg[MAXN]
    int role[MAXN]
    uint64_t seen[MAXN]
    int pending[MAXN]
    int counts[MAXN]
    int missing
    int64_t nodes
    int64_t budget
    int exhausted
    unsigned char *feasible


cdef inline bint consistent(Search *s, int v, int i) noexcept nogil:
    cdef uint64_t need = s.rg[i]
    cdef uint64_t got = s.seen[v]
    cdef int p = s.pending[v]
    if got & ~need:
        return False
    if p == 0:
        return got == need
    return __builtin_popcountll(need & ~got) <= p


cdef bint place(Search *s, int k) noexcept nogil:
    cdef int v, i, j, w, rw
    cdef uint64_t bit
    cdef uint64_t saved[MAXN]
    cdef bint ok
    if k == s.n:
        return s.missing == 0
    if s.missing > s.n - k:
        return False
    v = s.order[k]
    for i in range(s.r):
        s.nodes += 1
        if s.nodes > s.budget:
            s.exhausted = 1
            return False
        if not consistent(s, v, i):
            continue
        bit = (<uint64_t>1) << i
        s.role[v] = i
        if s.counts[i] == 0:
            s.missing -= 1
        s.counts[i] += 1
        for j in range(s.deg[v]):
            w = s.nbr[v][j]
            saved[j] = s.seen[w]
            s.seen[w] |= bit
            s.pending[w] -= 1
        ok = True
        for j in range(s.deg[v]):
            w = s.nbr[v][j]
            rw = s.role[w]
            if rw >= 0:
                if not consistent(s, w, rw):
                    ok = False
                    break
            elif not s.feasible[s.seen[w]]:
                ok = False
                break
        if ok and place(s, k + 1):
            return True
        for j in range(s.deg[v]):
            w = s.nbr[v][j]
            s.seen[w] = saved[j]
            s.pending[w] += 1
        s.counts[i] -= 1
        if s.counts[i] == 0:
            s.missing += 1
        s.role[v] = -1
        if s.exhausted:
            return False
    return False


def solve_role_graph(adj, order, rg, budget):
    cdef Search s
    cdef int n = len(adj)
    cdef int r = len(rg)
    cdef int v, u, i, m
    cdef uint64_t a
    cdef bytearray feas
    cdef bint found
    if n > MAXN or r > 16:
        raise ValueError("compiled kernel limited to 64 vertices and 16 roles")
    s.n = n
    s.r = r
    for v in range(n):
        a = adj[v]
        s.adj[v] = a
        s.order[v] = order[v]
        s.deg[v] = 0
        while a:
            u = __builtin_ctzll(a)
            s.nbr[v][s.deg[v]] = u
            s.deg[v] += 1
            a &= a - 1
        s.role[v] = -1
        s.seen[v] = 0
        s.pending[v] = s.deg[v]
    for i in range(r):
        s.rg[i] = rg[i]
        s.counts[i] = 0
    feas = bytearray(1 << r)
    for m in range(1 << r):
        for i in range(r):
            if not (m & ~(<int>s.rg[i])):
                feas[m] = 1
                break
    s.feasible = feas
    s.missing = r
    s.nodes = 0
    s.budget = budget
    s.exhausted = 0
    with nogil:
        found = place(&s, 0)
    if found:
        return 1, [s.role[v] for v in range(n)], s.nodes
    return (-1 if s.exhausted else 0), None, s.nodes


# -- canonical labelling ---------------------------------------------------

cdef struct Canon:
    int n
    uint64_t adj[MAXN]
    int have_best
    uint64_t best[MAXN]
    int best_order[MAXN]


cdef int sig_cmp(int *colors, int a, int b, int *nsig, int n) noexcept nogil:
    # compare (colour, sorted neighbour colours) of vertices a and b;
    # -1 terminates a list so a proper prefix sorts first
    cdef int k
    if colors[a] != colors[b]:
        return -1 if colors[a] < colors[b] else 1
    for k in range(n):
        if nsig[a * MAXN + k] != nsig[b * MAXN + k]:
            return -1 if nsig[a * MAXN + k] < nsig[b * MAXN + k] else 1
        if nsig[a * MAXN + k] == -1:
            return 0
    return 0


cdef int refine(Canon *c, int *colors) noexcept nogil:
    cdef int n = c.n
    cdef int nsig[MAXN * MAXN]
    cdef int idx[MAXN]
    cdef int newc[MAXN]
    cdef int v, u, k, j, t, cnt, ncol, prev_ncol
    cdef uint64_t a
    prev_ncol = 0
    for v in range(n):
        if colors[v] + 1 > prev_ncol:
            prev_ncol = colors[v] + 1
    while True:
        for v in range(n):
            a = c.adj[v]
            cnt = 0
            while a:
                u = __builtin_ctzll(a)
                # insertion into sorted list
                k = cnt
                while k > 0 and nsig[v * MAXN + k - 1] > colors[u]:
                    nsig[v * MAXN + k] = nsig[v * MAXN + k - 1]
                    k -= 1
                nsig[v * MAXN + k] = colors[u]
                cnt += 1
                a &= a - 1
            if cnt < MAXN:
                nsig[v * MAXN + cnt] = -1
        for v in range(n):
            idx[v] = v
        for k in range(1, n):
            t = idx[k]
            j = k
            while j > 0 and sig_cmp(colors, idx[j - 1], t, nsig, n) > 0:
                idx[j] = idx[j - 1]
                j -= 1
            idx[j] = t
        ncol = 0
        for k in range(n):
            if k > 0 and sig_cmp(colors, idx[k - 1], idx[k], nsig, n) != 0:
                ncol += 1
            newc[idx[k]] = ncol
        ncol = ncol + 1 if n > 0 else 0
        memcpy(colors, newc, n * sizeof(int))
        if ncol == prev_ncol:
            return ncol
        prev_ncol = ncol


cdef void leaf(Canon *c, int *colors) noexcept nogil:
    cdef int n = c.n
    cdef int order[MAXN]
    cdef int pos[MAXN]
    cdef uint64_t code[MAXN]
    cdef uint64_t a, row
    cdef int k, v, u
    cdef bint better
    for v in range(n):
        order[colors[v]] = v
        pos[v] = colors[v]
    for k in range(n):
        a = c.adj[order[k]]
        row = 0
        while a:
            u = __builtin_ctzll(a)
            row |= (<uint64_t>1) << pos[u]
            a &= a - 1
        code[k] = row
    better = not c.have_best
    if not better:
        for k in range(n):
            if code[k] != c.best[k]:
                better = code[k] < c.best[k]
                break
    if better:
        c.have_best = 1
        memcpy(c.best, code, n * sizeof(uint64_t))
        memcpy(c.best_order, order, n * sizeof(int))


cdef void search(Canon *c, int *colors) noexcept nogil:
    cdef int n = c.n
    cdef int size[MAXN]
    cdef int child[MAXN]
    cdef int tried[MAXN]
    cdef int ntried = 0
    cdef int v, u, k, target
    cdef bint twin
    for k in range(n):
        size[k] = 0
    for v in range(n):
        size[colors[v]] += 1
    target = -1
    for k in range(n):
        if size[k] > 1:
            target = k
            break
    if target < 0:
        leaf(c, colors)
        return
    for v in range(n):
        if colors[v] != target:
            continue
        twin = False
        for k in range(ntried):
            u = tried[k]
            if (c.adj[u] & ~((<uint64_t>1) << v)) == (c.adj[v] & ~((<uint64_t>1) << u)):
                twin = True
                break
        if twin:
            continue
        tried[ntried] = v
        ntried += 1
        # individualise v: it sorts first inside its cell
        for u in range(n):
            child[u] = 2 * colors[u] + (0 if u == v else 1)
        compact(child, n)
        refine(c, child)
        search(c, child)


cdef void compact(int *colors, int n) noexcept nogil:
    # renumber colours to 0..k-1 preserving order
    cdef int used[2 * MAXN + 2]
    cdef int k, v, nxt
    for k in range(2 * MAXN + 2):
        used[k] = -1
    for v in range(n):
        used[colors[v]] = 1
    nxt = 0
    for k in range(2 * MAXN + 2):
        if used[k] == 1:
            used[k] = nxt
            nxt += 1
    for v in range(n):
        colors[v] = used[colors[v]]


def canonical_form(adj):
    cdef Canon c
    cdef int colors[MAXN]
    cdef int n = len(adj)
    cdef int v
    if n > MAXN:
        raise ValueError("compiled kernel limited to 64 vertices")
    c.n = n
    c.have_best = 0
    for v in range(n):
        c.adj[v] = adj[v]
        colors[v] = 0
    with nogil:
        refine(&c, colors)
        search(&c, colors)
    if n == 0:
        return (), []
    return tuple(c.best[v] for v in range(n)), [c.best_order[v] for v in range(n)]
