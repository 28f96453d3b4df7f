"""Freeness, saturation, oversaturation and special-vertex checks with
witness-bearing reports, plus the degree/order inequalities they imply."""
from __future__ import annotations

import json
import os
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Any

import numpy as np

from . import kernels
from .graph import Graph, degree_summary, distances_from, non_edge_count, non_edges
from .patterns import PatternGraph
from .subgraph import Embedding, contains_subgraph, has_clique

PROPERTIES = ("free", "saturated", "oversaturated", "rrsat_witness", "regular", "inequality")


@dataclass
class VerificationReport:
    property: str
    passed: bool
    witness: Any = None
    parameters: dict = field(default_factory=dict)
    mode: str = "exhaustive"
    elapsed_ms: float = 0.0
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.property not in PROPERTIES:
            raise ValueError(f"unknown property {self.property!r}")

    def __bool__(self) -> bool:
        return self.passed

    def to_dict(self) -> dict:
        d = asdict(self)
        d["pass"] = d.pop("passed")
        if isinstance(self.witness, Embedding):
            d["witness"] = {"embedding": list(self.witness.mapping)}
        return d

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), default=_jsonable, **kw)


def _jsonable(obj):
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (set, frozenset, tuple)):
        return list(obj)
    if hasattr(obj, "numerator"):
        return str(obj)
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def _is_clique(f: PatternGraph) -> int | None:
    g = f.graph
    return g.n if g.edge_count == g.n * (g.n - 1) // 2 else None


def _params(g: Graph, f: PatternGraph | None = None, **extra) -> dict:
    ds = degree_summary(g)
    p = {"n": g.n, "d": ds.regular_degree, "edges": ds.edge_count}
    if f is not None:
        p["F"] = f.name
    p.update(extra)
    return p


def _ms(t0: float) -> float:
    return round((time.perf_counter() - t0) * 1000, 3)


def workers_from_env() -> int:
    raw = os.environ.get("REGSAT_WORKERS")
    if raw:
        return max(1, int(raw))
    return os.cpu_count() or 1


# single-pair primitives ------------------------------------------------------

def creates_copy(g: Graph, f: PatternGraph, u: int, v: int, backend: str | None = None) -> Embedding | None:
    """A copy of ``f`` in ``g + uv`` using the new edge ``uv``."""
    k = _is_clique(f)
    if k is not None and k >= 2:
        return has_clique(g, k, through=(u, v), backend=backend)
    return contains_subgraph(g, f, through=(u, v))


def regularity(g: Graph) -> VerificationReport:
    ds = degree_summary(g)
    witness = None
    if ds.regular_degree is None:
        lo = min(range(g.n), key=lambda v: ds.degrees[v])
        hi = max(range(g.n), key=lambda v: ds.degrees[v])
        witness = {"min_vertex": lo, "min_degree": ds.degrees[lo], "max_vertex": hi, "max_degree": ds.degrees[hi]}
    return VerificationReport("regular", witness is None, witness, _params(g))


def is_free(g: Graph, f: PatternGraph, backend: str | None = None) -> VerificationReport:
    t0 = time.perf_counter()
    k = _is_clique(f)
    emb = has_clique(g, k, backend=backend) if k is not None else contains_subgraph(g, f)
    return VerificationReport("free", emb is None, emb, _params(g, f), elapsed_ms=_ms(t0))


def _first_failing(g: Graph, f: PatternGraph, workers: int, backend: str | None) -> tuple[int, int] | None:
    """Smallest non-edge (lexicographic) whose addition creates no copy of ``f``."""
    k = _is_clique(f)
    if k is not None:
        if k <= 2:
            return None
        if workers <= 1 or g.n < 256:
            return kernels.first_unsaturated(g, k, backend=backend)
        # row blocks run concurrently (the compiled search drops the GIL);
        # the lowest failing block wins, keeping the witness deterministic
        pairs = np.array(list(non_edges(g)), dtype=np.int64).reshape(-1, 2)
        chunks = np.array_split(pairs, workers * 4)
        with ThreadPoolExecutor(workers) as pool:
            results = list(pool.map(lambda c: kernels.through_pairs(g, c, k, backend), chunks))
        ok = np.concatenate(results) if results else np.zeros(0, bool)
        bad = np.flatnonzero(~ok)
        return tuple(int(x) for x in pairs[bad[0]]) if len(bad) else None
    for u, v in non_edges(g):
        if contains_subgraph(g, f, through=(u, v)) is None:
            return u, v
    return None


def _sample_non_edges(g: Graph, count: int, seed: int) -> list[tuple[int, int]]:
    total = non_edge_count(g)
    rng = random.Random(seed)
    if count >= total:
        return list(non_edges(g))
    chosen: set[tuple[int, int]] = set()
    while len(chosen) < count:
        u, v = rng.randrange(g.n), rng.randrange(g.n)
        if u == v:
            continue
        u, v = min(u, v), max(u, v)
        if not g.has_edge(u, v):
            chosen.add((u, v))
    return sorted(chosen)


def _added_edge_check(g: Graph, f: PatternGraph, sample: int | None, seed: int | None,
                      workers: int | None, backend: str | None) -> tuple[tuple[int, int] | None, str, int]:
    workers = workers if workers is not None else workers_from_env()
    if sample is None:
        return _first_failing(g, f, workers, backend), "exhaustive", non_edge_count(g)
    if seed is None:
        raise ValueError("sampled mode requires a seed")
    pairs = _sample_non_edges(g, sample, seed)
    mode = f"sampled({len(pairs)},{seed})"
    k = _is_clique(f)
    if k is not None:
        ok = kernels.through_pairs(g, pairs, k, backend) if pairs else np.zeros(0, bool)
        bad = np.flatnonzero(~ok)
        return (pairs[bad[0]] if len(bad) else None), mode, len(pairs)
    for u, v in pairs:
        if contains_subgraph(g, f, through=(u, v)) is None:
            return (u, v), mode, len(pairs)
    return None, mode, len(pairs)


def is_saturated(g: Graph, f: PatternGraph, sample: int | None = None, seed: int | None = None,
                 workers: int | None = None, backend: str | None = None) -> VerificationReport:
    """F-free and every non-edge creates a copy of F.

    Only copies through the new edge are searched, which suffices once the
    graph is known to be F-free.  ``sample``/``seed`` switch to checking a
    uniform random set of distinct non-edges.
    """
    t0 = time.perf_counter()
    free = is_free(g, f, backend)
    if not free.passed:
        return VerificationReport("saturated", False, {"copy": list(free.witness.mapping)},
                                  _params(g, f), elapsed_ms=_ms(t0), details={"failure": "not_free"})
    bad, mode, checked = _added_edge_check(g, f, sample, seed, workers, backend)
    witness = None if bad is None else {"non_edge": [int(bad[0]), int(bad[1])]}
    return VerificationReport("saturated", bad is None, witness, _params(g, f), mode, _ms(t0),
                              {"non_edges_checked": checked, **({"failure": "non_edge"} if bad else {})})


def is_oversaturated(g: Graph, f: PatternGraph, sample: int | None = None, seed: int | None = None,
                     workers: int | None = None, backend: str | None = None) -> VerificationReport:
    """Every non-edge lies in a copy of F in the enlarged graph; F-freeness is not required."""
    t0 = time.perf_counter()
    bad, mode, checked = _added_edge_check(g, f, sample, seed, workers, backend)
    witness = None if bad is None else {"non_edge": [int(bad[0]), int(bad[1])]}
    return VerificationReport("oversaturated", bad is None, witness, _params(g, f), mode, _ms(t0),
                              {"non_edges_checked": checked})


def rrsat_witness(g: Graph, f: PatternGraph, backend: str | None = None) -> VerificationReport:
    """Regular, F-free, and some vertex v has every non-edge at v creating F.

    Together with regularity this certifies that every regular proper
    supergraph contains F: such a supergraph raises every degree, so it
    adds a non-edge at v.
    """
    t0 = time.perf_counter()
    reg = regularity(g)
    if not reg.passed:
        return VerificationReport("rrsat_witness", False, {"irregular": reg.witness}, _params(g, f),
                                  elapsed_ms=_ms(t0), details={"failure": "not_regular"})
    free = is_free(g, f, backend)
    if not free.passed:
        return VerificationReport("rrsat_witness", False, {"copy": list(free.witness.mapping)}, _params(g, f),
                                  elapsed_ms=_ms(t0), details={"failure": "not_free"})
    full = (1 << g.n) - 1
    failing = {}
    for v in range(g.n):
        r = full & ~g.rows[v] & ~(1 << v)
        bad = None
        while r:
            low = r & -r
            w = low.bit_length() - 1
            r ^= low
            if creates_copy(g, f, min(v, w), max(v, w), backend) is None:
                bad = w
                break
        if bad is None:
            return VerificationReport("rrsat_witness", True, {"vertex": v}, _params(g, f), elapsed_ms=_ms(t0))
        failing[v] = bad
    return VerificationReport("rrsat_witness", False, {"failing_non_edge_per_vertex": failing}, _params(g, f),
                              elapsed_ms=_ms(t0), details={"failure": "no_special_vertex"})


# inequalities --------------------------------------------------------------

@dataclass
class BoundReport:
    """``m``: every edge lies on a cycle of length at most ``m + 1``;
    ``r``: every edge-deleted pattern has diameter at most ``r``."""

    m: int | None
    r: int | None
    cycle_lengths: dict = field(default_factory=dict)
    diameters: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "r": self.r,
            "per_edge": [
                {"edge": list(e), "shortest_cycle": self.cycle_lengths[e], "diameter_without": self.diameters[e]}
                for e in self.cycle_lengths
            ],
        }


def pattern_bounds(f: PatternGraph | Graph) -> BoundReport:
    g = f.graph if isinstance(f, PatternGraph) else f
    cycles: dict = {}
    diams: dict = {}
    for u, v in g.edges():
        rows = list(g.rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        h = Graph.from_rows(g.n, rows)
        dist_u = distances_from(h, u)
        cycles[(u, v)] = dist_u[v] + 1 if dist_u[v] >= 0 else None
        ecc = [distances_from(h, s) for s in range(h.n)]
        diams[(u, v)] = None if any(x < 0 for row in ecc for x in row) else max(max(row) for row in ecc)
    m = None if not cycles or None in cycles.values() else max(cycles.values()) - 1
    r = None if not diams or None in diams.values() else max(diams.values())
    return BoundReport(m, r, cycles, diams)


def check_inequalities(n: int, d: int, m: int | None = None, r: int | None = None,
                       t: int | None = None) -> VerificationReport:
    """Exact integer evaluation of ``n-d-1 <= d^m``, ``n-d-1 <= d^r`` and
    ``d(d-1) >= t(n-d-1)`` for whichever parameters are supplied."""
    if not n > d >= 0:
        raise ValueError(f"need n > d >= 0, got n={n}, d={d}")
    checks = []
    lhs = n - d - 1
    if m is not None:
        checks.append({"name": "cycle_bound", "lhs": lhs, "rhs": d ** m, "relation": "<=", "pass": lhs <= d ** m})
    if r is not None:
        checks.append({"name": "diameter_bound", "lhs": lhs, "rhs": d ** r, "relation": "<=", "pass": lhs <= d ** r})
    if t is not None:
        left = d * (d - 1)
        checks.append({"name": "two_path_bound", "lhs": left, "rhs": t * lhs, "relation": ">=", "pass": left >= t * lhs})
    ok = all(c["pass"] for c in checks)
    return VerificationReport("inequality", ok, None if ok else [c for c in checks if not c["pass"]],
                              {"n": n, "d": d, "m": m, "r": r, "t": t}, details={"checks": checks})


__all__ = [
    "BoundReport", "VerificationReport", "check_inequalities", "creates_copy", "is_free",
    "is_oversaturated", "is_saturated", "pattern_bounds", "regularity", "rrsat_witness", "workers_from_env",
]
