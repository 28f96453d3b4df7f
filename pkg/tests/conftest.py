import random

import networkx as nx
import pytest
from networkx.algorithms import isomorphism

from regsat import kernels
from regsat.graph import Graph, build_graph


@pytest.fixture(params=kernels.BACKENDS)
def backend(request):
    return request.param


def random_graph(n, p, rng) -> Graph:
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


# independent oracles built on networkx -------------------------------------

def nx_contains(host: nx.Graph, pattern: nx.Graph) -> bool:
    return isomorphism.GraphMatcher(host, pattern).subgraph_is_monomorphic()


def nx_saturated(g: Graph, f: Graph) -> bool:
    host, pat = to_nx(g), to_nx(f)
    if nx_contains(host, pat):
        return False
    for u, v in nx.non_edges(host):
        h = host.copy()
        h.add_edge(u, v)
        if not nx_contains(h, pat):
            return False
    return True


def nx_oversaturated(g: Graph, f: Graph) -> bool:
    host, pat = to_nx(g), to_nx(f)
    for u, v in nx.non_edges(host):
        h = host.copy()
        h.add_edge(u, v)
        gm = isomorphism.GraphMatcher(h, pat)
        # monomorphism maps are host vertex -> pattern vertex
        if not any(u in m and v in m and pat.has_edge(m[u], m[v]) for m in gm.subgraph_monomorphisms_iter()):
            return False
    return True


@pytest.fixture
def rng():
    return random.Random(20240611)
