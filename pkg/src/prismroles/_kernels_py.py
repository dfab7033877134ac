"""Pure-Python hot kernels.

Same signatures and results as the compiled ``_kernels`` extension; used
when the extension is not built or the input exceeds its 64-vertex limit.
"""

from __future__ import annotations

import sys

FOUND = 1
NONE = 0
EXHAUSTED = -1


def _bits(mask):
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def solve_role_graph(adj, order, rg, budget):
    """Search for a surjective map ``v -> role`` with ``roles(N(v)) == rg[role(v)]``.

    ``adj``: neighbour bitmask per vertex.  ``order``: vertex visiting
    order.  ``rg``: role-neighbourhood bitmask per role (loops allowed).
    Returns ``(status, roles, nodes)`` where ``status`` is FOUND, NONE or
    EXHAUSTED and ``nodes`` counts decision points tried.
    """
    n = len(adj)
    r = len(rg)
    nbrs = [_bits(a) for a in adj]
    role = [-1] * n
    seen = [0] * n
    pending = [len(x) for x in nbrs]
    counts = [0] * r
    missing = [r]
    # role-sets that are still extendable to some role neighbourhood
    feasible = [any(m & ~q == 0 for q in rg) for m in range(1 << r)]
    nodes = 0
    exhausted = False

    def consistent(v, i):
        need = rg[i]
        s = seen[v]
        if s & ~need:
            return False
        p = pending[v]
        if p == 0:
            return s == need
        return (need & ~s).bit_count() <= p

    def place(k):
        nonlocal nodes, exhausted
        if k == n:
            return missing[0] == 0
        if missing[0] > n - k:
            return False
        v = order[k]
        for i in range(r):
            nodes += 1
            if nodes > budget:
                exhausted = True
                return False
            if not consistent(v, i):
                continue
            bit = 1 << i
            role[v] = i
            if counts[i] == 0:
                missing[0] -= 1
            counts[i] += 1
            saved = []
            ok = True
            for w in nbrs[v]:
                saved.append(seen[w])
                seen[w] |= bit
                pending[w] -= 1
            for w in nbrs[v]:
                rw = role[w]
                if rw >= 0:
                    if not consistent(w, rw):
                        ok = False
                        break
                elif not feasible[seen[w]]:
                    ok = False
                    break
            if ok and place(k + 1):
                return True
            for w, old in zip(nbrs[v], saved):
                seen[w] = old
                pending[w] += 1
            counts[i] -= 1
            if counts[i] == 0:
                missing[0] += 1
            role[v] = -1
            if exhausted:
                return False
        return False

    limit = sys.getrecursionlimit()
    if limit < n + 100:
        sys.setrecursionlimit(n + 100)
    try:
        found = place(0)
    finally:
        sys.setrecursionlimit(limit)
    if found:
        return FOUND, list(role), nodes
    return (EXHAUSTED if exhausted else NONE), None, nodes


# -- canonical labelling ---------------------------------------------------

def _refine(nbrs, colors):
    n = len(colors)
    ncolors = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in nbrs[v]))) for v in range(n)]
        ranks = {s: k for k, s in enumerate(sorted(set(sigs)))}
        new = [ranks[s] for s in sigs]
        if len(ranks) == ncolors:
            return new
        colors, ncolors = new, len(ranks)


def _individualize(colors, v):
    keys = [(c, 0 if u == v else 1) for u, c in enumerate(colors)]
    ranks = {s: k for k, s in enumerate(sorted(set(keys)))}
    return [ranks[s] for s in keys]


def canonical_form(adj):
    """Canonical relabelling by individualisation-refinement.

    Returns ``(code, order)``: ``order[k]`` is the vertex placed at
    position ``k`` and ``code`` the relabelled rows.  Two graphs are
    isomorphic iff their codes are equal.
    """
    n = len(adj)
    nbrs = [_bits(a) for a in adj]
    best = [None, None]

    def leaf(colors):
        order = sorted(range(n), key=colors.__getitem__)
        pos = [0] * n
        for k, v in enumerate(order):
            pos[v] = k
        code = tuple(sum(1 << pos[u] for u in nbrs[v]) for v in order)
        if best[0] is None or code < best[0]:
            best[0], best[1] = code, order

    def search(colors):
        size = {}
        for c in colors:
            size[c] = size.get(c, 0) + 1
        target = min((c for c, s in size.items() if s > 1), default=None)
        if target is None:
            leaf(colors)
            return
        cell = [v for v in range(n) if colors[v] == target]
        tried = []
        for v in cell:
            # a twin of an explored vertex spans an isomorphic subtree
            if any((adj[u] & ~(1 << v)) == (adj[v] & ~(1 << u)) for u in tried):
                continue
            tried.append(v)
            search(_refine(nbrs, _individualize(colors, v)))

    search(_refine(nbrs, [0] * n))
    return best[0], best[1]
