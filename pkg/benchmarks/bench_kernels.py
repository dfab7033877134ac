"""Compiled vs pure-Python kernels.

Times the exhaustive role solver on prisms of all graphs up to a given
order and the canonical form on random graphs, once per backend.

    python3 benchmarks/bench_kernels.py [--nmax 6] [--repeat 3]
"""

import argparse
import random
import time

from prismroles import kernels
from prismroles.census import graphs_up_to
from prismroles.graph import Graph
from prismroles.prism import complementary_prism
from prismroles.roles import enumerate_role_graphs, search_order


def solver_workload(nmax):
    jobs = []
    for g in graphs_up_to(nmax):
        h = complementary_prism(g).graph
        order = search_order(h)
        for rg in enumerate_role_graphs(3, connected=True):
            jobs.append((h.adj, order, rg.adj))
    return jobs


def canon_workload(count, seed=1):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(8, 40)
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.3]
        out.append(Graph.from_edges(n, pairs).adj)
    return out


def best_of(repeat, fn):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--nmax", type=int, default=6)
    ap.add_argument("--canon", type=int, default=300)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    backends = ["python"] + (["cython"] if kernels.BACKEND == "cython" else [])
    jobs = solver_workload(args.nmax)
    graphs = canon_workload(args.canon)
    print(f"solver: {len(jobs)} (prism, role graph) searches; canon: {len(graphs)} graphs")
    rows = {}
    for b in backends:
        solve = best_of(args.repeat, lambda: [kernels.solve_role_graph(a, o, r, 10**8, backend=b)
                                              for a, o, r in jobs])
        canon = best_of(args.repeat, lambda: [kernels.canonical_form(a, backend=b) for a in graphs])
        rows[b] = (solve, canon)
        print(f"{b:>7}  solver {solve:8.3f} s   canonical form {canon:8.3f} s")
    if len(rows) == 2:
        (ps, pc), (cs, cc) = rows["python"], rows["cython"]
        print(f"speed-up  solver x{ps / cs:.1f}   canonical form x{pc / cc:.1f}")
    else:
        print("compiled extension not built; only the Python backend was timed")


if __name__ == "__main__":
    main()
