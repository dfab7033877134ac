import random

import pytest

from conftest import random_graph
from prismroles import kernels
from prismroles.graph import Graph
from prismroles.prism import complementary_prism
from prismroles.roles import enumerate_role_graphs, search_order

compiled = pytest.mark.skipif(kernels.BACKEND != "cython", reason="extension not built")


@compiled
def test_solver_parity():
    rng = random.Random(23)
    catalogue = enumerate_role_graphs(3) + enumerate_role_graphs(2)
    for _ in range(300):
        g = random_graph(rng, rng.randint(1, 9), rng.random())
        if rng.random() < 0.5:
            g = complementary_prism(g).graph
        rg = rng.choice(catalogue)
        budget = rng.choice([30, 10**6])
        args = (g.adj, search_order(g), rg.adj, budget)
        assert (kernels.solve_role_graph(*args, backend="python")
                == kernels.solve_role_graph(*args, backend="cython"))


@compiled
def test_canonical_parity():
    rng = random.Random(29)
    for _ in range(300):
        g = random_graph(rng, rng.randint(0, 20), rng.random())
        assert (kernels.canonical_form(g.adj, backend="python")
                == kernels.canonical_form(g.adj, backend="cython"))


@compiled
def test_compiled_limit():
    g = Graph.empty(65)
    with pytest.raises(ValueError):
        kernels.canonical_form(g.adj, backend="cython")
    # the default route falls back to Python above 64 vertices
    assert kernels.canonical_form(g.adj)[0] == (0,) * 65


def test_python_backend_always_available():
    code, order = kernels.canonical_form([0b10, 0b01, 0], backend="python")
    assert sorted(order) == [0, 1, 2]
    status, roles, _ = kernels.solve_role_graph([0b10, 0b01], [0, 1], [0b1], 100, backend="python")
    assert status == kernels.FOUND and roles == [0, 0]


def test_pure_python_mode_selected_by_environment():
    import os
    import subprocess
    import sys

    code = ("from prismroles import kernels\n"
            "from prismroles.graph import cycle\n"
            "from prismroles.witness import construct\n"
            "print(kernels.BACKEND, construct(cycle(7)).lemma)\n")
    env = dict(os.environ, PRISMROLES_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True)
    assert out.returncode == 0, out.stderr
    backend, lemma = out.stdout.split()
    assert backend == "python" and lemma
