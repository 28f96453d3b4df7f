"""Clique and (non-induced) subgraph containment, optionally forced through a
given vertex pair.

When ``through=(u, v)`` names a non-adjacent pair the search runs in the
graph with ``uv`` added, which is what every saturation test needs.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import kernels
from .graph import Graph
from .patterns import PatternGraph


@dataclass(frozen=True)
class Embedding:
    """``mapping[x]`` is the host vertex carrying pattern vertex ``x``."""

    mapping: tuple[int, ...]

    @property
    def image(self) -> frozenset[int]:
        return frozenset(self.mapping)

    def is_valid(self, host: Graph, pattern: Graph, through: tuple[int, int] | None = None) -> bool:
        if len(set(self.mapping)) != len(self.mapping) or len(self.mapping) != pattern.n:
            return False
        extra = {tuple(sorted(through))} if through else set()
        hits_through = through is None
        for x, y in pattern.edges():
            a, b = sorted((self.mapping[x], self.mapping[y]))
            if not (host.has_edge(a, b) or (a, b) in extra):
                return False
            if (a, b) in extra:
                hits_through = True
        return hits_through


def _as_graph(f: PatternGraph | Graph) -> Graph:
    return f.graph if isinstance(f, PatternGraph) else f


def has_clique(g: Graph, k: int, through: tuple[int, int] | None = None,
               backend: str | None = None) -> Embedding | None:
    """A ``K_k`` in ``g`` (containing both ends of ``through`` when given)."""
    if k < 1:
        raise ValueError(f"clique size must be positive, got {k}")
    if through is None:
        found = kernels.find_clique(g, k, backend)
        return None if found is None else Embedding(tuple(found))
    u, v = through
    if k == 1:
        return Embedding((u,))
    rest = kernels.clique_through(g, u, v, k, backend)
    return None if rest is None else Embedding((u, v, *rest))


def _search_order(pattern: Graph, fixed: Sequence[int]) -> list[int]:
    """Placed-neighbour count first, then descending degree, then index."""
    prow = pattern.rows
    deg = pattern.degrees
    order = list(fixed)
    placed = 0
    for x in order:
        placed |= 1 << x
    while len(order) < pattern.n:
        best = max((x for x in range(pattern.n) if not placed >> x & 1),
                   key=lambda x: ((prow[x] & placed).bit_count(), deg[x], -x))
        order.append(best)
        placed |= 1 << best
    return order


def _extend(rows, degmask, prow, pdeg, order, pos, phi, used) -> bool:
    if pos == len(order):
        return True
    x = order[pos]
    cand = degmask[pdeg[x]] & ~used
    nbrs = prow[x]
    for y in order[:pos]:
        if nbrs >> y & 1:
            cand &= rows[phi[y]]
    while cand:
        low = cand & -cand
        h = low.bit_length() - 1
        cand ^= low
        phi[x] = h
        if _extend(rows, degmask, prow, pdeg, order, pos + 1, phi, used | low):
            return True
    phi[x] = -1
    return False


def contains_subgraph(g: Graph, f: PatternGraph | Graph, through: tuple[int, int] | None = None) -> Embedding | None:
    """An injective edge-preserving map of ``f`` into ``g``; pattern
    non-edges are unconstrained.  With ``through`` some pattern edge must
    land on that pair (tried in both orientations)."""
    pattern = _as_graph(f)
    k = pattern.n
    if k > g.n:
        return None
    if k == 0:
        return Embedding(())
    rows = list(g.rows)
    if through is not None:
        u, v = through
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    hdeg = [r.bit_count() for r in rows]
    maxdeg = max(pattern.degrees)
    degmask = [0] * (maxdeg + 1)
    for h, d in enumerate(hdeg):
        for need in range(min(d, maxdeg) + 1):
            degmask[need] |= 1 << h
    prow = pattern.rows
    pdeg = pattern.degrees

    if through is None:
        starts = [((), ())]
    else:
        starts = []
        for a, b in pattern.edges():
            starts.append(((a, b), (u, v)))
            starts.append(((a, b), (v, u)))
    for fixed, images in starts:
        if any(not (degmask[pdeg[x]] >> h & 1) for x, h in zip(fixed, images)):
            continue
        order = _search_order(pattern, fixed)
        phi = [-1] * k
        used = 0
        for x, h in zip(fixed, images):
            phi[x] = h
            used |= 1 << h
        if _extend(rows, degmask, prow, pdeg, order, len(fixed), phi, used):
            return Embedding(tuple(phi))
    return None


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Bijective edge-preserving maps between equal-size graphs are isomorphisms."""
    if g1.n != g2.n or g1.edge_count != g2.edge_count or sorted(g1.degrees) != sorted(g2.degrees):
        return False
    return contains_subgraph(g2, g1) is not None


__all__ = ["Embedding", "contains_subgraph", "has_clique", "is_isomorphic"]
