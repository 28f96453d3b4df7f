import os
import subprocess
import sys

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from regsat import kernels
from regsat.constructions import complete, complete_multipartite, cycle
from regsat.graph import build_graph, non_edges

from conftest import random_graph, to_nx

needs_c = pytest.mark.skipif("c" not in kernels.BACKENDS, reason="compiled kernels not built")


def is_clique(g, vs):
    return len(set(vs)) == len(vs) and all(g.has_edge(a, b) for i, a in enumerate(vs) for b in vs[i + 1:])


def test_find_clique_against_clique_number(backend, rng):
    for _ in range(40):
        g = random_graph(rng.randint(1, 30), rng.choice([0.2, 0.5, 0.8]), rng)
        omega = max((len(c) for c in nx.find_cliques(to_nx(g))), default=0)
        found = kernels.find_clique(g, omega, backend)
        assert found is not None and len(found) == omega and is_clique(g, found)
        assert kernels.find_clique(g, omega + 1, backend) is None


def test_clique_through(backend):
    g = complete_multipartite(2, 2, 2)  # octahedron: each antipodal pair closes a K4
    assert kernels.clique_through(g, 0, 1, 4, backend) is not None
    c5 = cycle(5)
    assert kernels.clique_through(c5, 0, 2, 3, backend) == [1]
    assert kernels.clique_through(c5, 0, 2, 4, backend) is None


def test_first_unsaturated(backend):
    assert kernels.first_unsaturated(cycle(5), 3, backend=backend) is None
    assert kernels.first_unsaturated(cycle(7), 3, backend=backend) == (0, 3)
    assert kernels.first_unsaturated(cycle(6), 3, backend=backend) == (0, 3)
    assert kernels.first_unsaturated(complete(5), 3, backend=backend) is None


def test_clique_in_set(backend):
    g = complete(6)
    assert kernels.clique_in_set(g, [1, 3, 5], 3, backend) == [1, 3, 5]
    assert kernels.clique_in_set(g, [1, 3], 3, backend) is None


def test_through_pairs_agree_with_scalar(backend, rng):
    g = random_graph(40, 0.4, rng)
    pairs = list(non_edges(g))
    ok = kernels.through_pairs(g, pairs, 4, backend)
    assert ok.dtype == bool and len(ok) == len(pairs)
    for (u, v), flag in zip(pairs, ok):
        assert flag == (kernels.clique_through(g, u, v, 4, backend) is not None)


def test_large_graph_multiword(backend):
    g = complete_multipartite(50, 50, 50)
    assert kernels.find_clique(g, 3, backend) is not None
    assert kernels.find_clique(g, 4, backend) is None
    assert kernels.first_unsaturated(g, 4, backend=backend) is None


@needs_c
@settings(max_examples=100, deadline=None)
@given(st.integers(2, 70), st.floats(0.1, 0.9), st.integers(2, 6), st.randoms(use_true_random=False))
def test_backends_return_identical_witnesses(n, p, k, r):
    g = build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if r.random() < p])
    assert kernels.find_clique(g, k, "c") == kernels.find_clique(g, k, "python")
    assert kernels.first_unsaturated(g, k, backend="c") == kernels.first_unsaturated(g, k, backend="python")
    pairs = list(non_edges(g))[:50]
    assert np.array_equal(kernels.through_pairs(g, pairs, k, "c"), kernels.through_pairs(g, pairs, k, "python"))


def test_unknown_backend():
    with pytest.raises(ValueError):
        kernels.find_clique(cycle(5), 3, "fortran")


def test_pure_python_switch():
    code = "from regsat import kernels; print(kernels.BACKEND, kernels.BACKENDS)"
    env = {**os.environ, "REGSAT_PURE_PYTHON": "1"}
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True).stdout
    assert out.strip() == "python ('python',)"
