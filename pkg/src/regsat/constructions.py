"""Explicit graph constructions: basic families, circulants, blow-ups, joins
and the special-vertex graph certifying regular saturation of cliques."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .graph import Graph, GraphError, build_graph


class ConstructionError(ValueError):
    pass


# basic families ------------------------------------------------------------

def empty(n: int) -> Graph:
    return Graph.from_dense(np.zeros((n, n), bool), check=False)


def complete(n: int) -> Graph:
    return Graph.from_dense(~np.eye(n, dtype=bool), check=False)


def cycle(n: int) -> Graph:
    if n < 3:
        raise ConstructionError(f"cycle length must be at least 3, got {n}")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    """Path on ``n`` vertices."""
    if n < 1:
        raise ConstructionError("path needs at least one vertex")
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def star(r: int) -> Graph:
    """Star with centre 0 and ``r`` leaves."""
    if r < 1:
        raise ConstructionError("star needs at least one leaf")
    return build_graph(r + 1, [(0, i) for i in range(1, r + 1)])


def matching(k: int) -> Graph:
    if k < 1:
        raise ConstructionError("matching needs at least one edge")
    return build_graph(2 * k, [(2 * i, 2 * i + 1) for i in range(k)])


def complete_multipartite(*sizes: int) -> Graph:
    """Complete multipartite graph; part ``j`` holds a contiguous index range."""
    if any(s < 0 for s in sizes):
        raise ConstructionError("part sizes must be non-negative")
    part = np.repeat(np.arange(len(sizes)), sizes)
    return Graph.from_dense(part[:, None] != part[None, :], check=False)


def complete_bipartite(a: int, b: int) -> Graph:
    return complete_multipartite(a, b)


def petersen() -> Graph:
    """Kneser graph K(5,2): 2-subsets of {0..4}, adjacent iff disjoint."""
    subsets = list(combinations(range(5), 2))
    edges = [(i, j) for i, j in combinations(range(10), 2) if not set(subsets[i]) & set(subsets[j])]
    return build_graph(10, edges, labels=[f"{a}{b}" for a, b in subsets])


# circulants ----------------------------------------------------------------

@dataclass(frozen=True)
class CirculantSpec:
    n: int
    A: tuple[int, ...]

    def __post_init__(self):
        if len(set(self.A)) != len(self.A):
            raise ConstructionError(f"repeated residue in connection set {self.A}")
        for a in self.A:
            if not 1 <= a <= self.n // 2:
                raise ConstructionError(f"residue {a} outside [1, {self.n // 2}] for n={self.n}")

    @property
    def degree(self) -> int:
        return 2 * len(self.A) - (1 if self.n % 2 == 0 and self.n // 2 in self.A else 0)


def circulant(spec: CirculantSpec | int, A=None) -> Graph:
    if not isinstance(spec, CirculantSpec):
        spec = CirculantSpec(spec, tuple(A))
    n = spec.n
    idx = np.arange(n)
    diff = (idx[:, None] - idx[None, :]) % n
    m = np.zeros((n, n), bool)
    for a in spec.A:
        m |= (diff == a) | (diff == n - a)
    return Graph.from_dense(m, check=False)


_K3_CASES = {
    # n mod 10: (case name, offset subtracted before dividing by 5, number of even residues 2y+2, 2y+4, ...)
    1: ("I", 6, 1),
    3: ("II", 18, 4),
    5: ("III", 10, 2),
    7: ("IV", 22, 5),
    9: ("V", 14, 3),
}


def k3_case(n: int) -> str:
    if n % 2 == 0:
        raise ConstructionError(f"n must be odd, got {n}")
    return _K3_CASES[n % 10][0]


def k3_connection_set(n: int) -> CirculantSpec:
    """Connection set of the triangle-saturated circulant on odd ``n``.

    ``A = {1, 3, ..., y} ∪ {2y+2, 2y+4, ...}`` where ``y`` and the number of
    even residues depend on ``n mod 10``.  Only structural feasibility is
    checked here; whether the circulant is actually saturated is for the
    checkers to decide.
    """
    if n % 2 == 0:
        raise ConstructionError(f"n must be odd, got {n}")
    case, offset, extra = _K3_CASES[n % 10]
    y = (n - offset) // 5
    if y < 1:
        raise ConstructionError(f"n={n} is below case threshold for Case {case} (y={y})")
    A = list(range(1, y + 1, 2)) + [2 * y + 2 * i for i in range(1, extra + 1)]
    if len(set(A)) != len(A) or max(A) > (n - 1) // 2:
        raise ConstructionError(f"n={n} is below case threshold for Case {case} (residues {A} overflow)")
    return CirculantSpec(n, tuple(A))


def k4_connection_set(n: int) -> CirculantSpec:
    """``{1, 2, 5, 6, ..., 4k+1, 4k+2}`` for ``n = 8k + 6``."""
    if n % 8 != 6 or n < 14:
        raise ConstructionError(f"n must be 8k+6 with k >= 1, got {n}")
    k = (n - 6) // 8
    return CirculantSpec(n, tuple(a for j in range(k + 1) for a in (4 * j + 1, 4 * j + 2)))


# products ------------------------------------------------------------------

def blow_up(g: Graph, h: Graph) -> Graph:
    """Lexicographic product ``g[h]``; vertex ``(u, i)`` gets index ``u*|h| + i``."""
    a = g.dense()
    b = h.dense()
    m = np.kron(a, np.ones((h.n, h.n), bool)) | np.kron(np.eye(g.n, dtype=bool), b)
    labels = None
    if g.labels is not None or h.labels is not None:
        gl = g.labels or [str(u) for u in range(g.n)]
        hl = h.labels or [str(i) for i in range(h.n)]
        labels = [f"{x}/{y}" for x in gl for y in hl]
    return Graph.from_dense(m, labels, check=False)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of ``g`` (first) and ``h`` plus every cross edge."""
    n = g.n + h.n
    m = np.ones((n, n), bool)
    m[: g.n, : g.n] = g.dense()
    m[g.n:, g.n:] = h.dense()
    return Graph.from_dense(m, check=False)


def join_regularity(g: Graph, h: Graph) -> dict:
    """The join of regular graphs is regular iff ``d_h + |g| == d_g + |h|``."""
    dg = set(g.degrees)
    dh = set(h.degrees)
    info = {"left_regular": len(dg) <= 1, "right_regular": len(dh) <= 1}
    if info["left_regular"] and info["right_regular"]:
        dg_ = dg.pop() if dg else 0
        dh_ = dh.pop() if dh else 0
        left_side = dh_ + g.n
        right_side = dg_ + h.n
        info.update(d_left=dg_, d_right=dh_, left_value=left_side, right_value=right_side,
                    regular=left_side == right_side, degree=left_side if left_side == right_side else None)
    return info


# special-vertex witness ----------------------------------------------------

def regreg_witness(t: int, d: int) -> Graph:
    """``dt``-regular K_{t+2}-free graph with a vertex whose every non-edge
    completes a K_{t+2}.

    Vertex 0 is the special vertex; it is joined to ``d`` disjoint
    ``t``-cliques ``A_i``.  Each ``A_i`` is completely joined to its own
    independent set ``B_i`` of size ``dt - t``, and the ``B_i`` of the first
    half are joined to those of the second half by a bipartite circulant
    (left ``x`` to right ``x, x+1, ..., x+dt-t-1`` mod the part size).
    """
    if t < 1:
        raise ConstructionError("t must be positive")
    if d < 2 or d % 2:
        raise ConstructionError(f"d must be even and at least 2, got {d}")
    b = d * t - t
    n = 1 + d * t + d * b
    a_start = 1
    b_start = 1 + d * t
    labels = ["v"] + [f"A{i}.{j}" for i in range(d) for j in range(t)] + [f"B{i}.{j}" for i in range(d) for j in range(b)]
    m = np.zeros((n, n), bool)
    m[0, a_start:b_start] = True
    for i in range(d):
        ai = slice(a_start + i * t, a_start + (i + 1) * t)
        bi = slice(b_start + i * b, b_start + (i + 1) * b)
        m[ai, ai] = True
        m[ai, bi] = True
    half = (d // 2) * b
    for x in range(half):
        for off in range(b):
            m[b_start + x, b_start + half + (x + off) % half] = True
    m |= m.T
    np.fill_diagonal(m, False)
    return Graph.from_dense(m, labels, check=False)


def regreg_witness_info(t: int, d: int) -> dict:
    """Vertex counts: as constructed (``1 + d^2 t``) and as stated (``1 + (dt)^2``)."""
    return {
        "t": t,
        "d": d,
        "special_vertex": 0,
        "degree": d * t,
        "constructed_vertex_count": 1 + d * t + d * (d * t - t),
        "stated_vertex_count": 1 + (d * t) ** 2,
    }


def k3_threshold_table(n_max: int, n_min: int = 3) -> dict:
    """Per residue class mod 10, which odd ``n`` give a triangle-saturated circulant.

    Returns ``{case: {"passing": [...], "failing": [...], "infeasible": [...],
    "min_pass": n, "stable_from": n}}`` where ``stable_from`` is the least
    ``n`` such that every larger ``n`` up to ``n_max`` in the class passes.
    """
    from .checkers import is_free, is_saturated
    from .patterns import clique

    k3 = clique(3)
    table: dict = {}
    for n in range(n_min | 1, n_max + 1, 2):
        case = k3_case(n)
        row = table.setdefault(case, {"residue": n % 10, "passing": [], "failing": [], "infeasible": []})
        try:
            spec = k3_connection_set(n)
        except ConstructionError:
            row["infeasible"].append(n)
            continue
        g = circulant(spec)
        ok = is_free(g, k3).passed and is_saturated(g, k3).passed
        row["passing" if ok else "failing"].append(n)
    for row in table.values():
        row["min_pass"] = min(row["passing"]) if row["passing"] else None
        bad = row["failing"] + row["infeasible"]
        later = [n for n in row["passing"] if n > max(bad, default=-1)]
        row["stable_from"] = min(later) if later else None
    return table


__all__ = [
    "CirculantSpec", "ConstructionError", "GraphError", "blow_up", "circulant", "complete",
    "complete_bipartite", "complete_multipartite", "cycle", "empty", "join", "join_regularity",
    "k3_case", "k3_connection_set", "k3_threshold_table", "k4_connection_set", "matching",
    "path", "petersen", "regreg_witness", "regreg_witness_info", "star",
]
