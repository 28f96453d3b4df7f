"""Small pattern graphs F: cliques, cycles, matchings, the 3-sun and the
derived patterns obtained by blowing up an edge-deleted graph."""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path

from . import constructions as C
from .constructions import petersen
from .graph import Graph, build_graph, parse_edgelist


class PatternError(ValueError):
    pass


@dataclass(frozen=True)
class PatternGraph:
    graph: Graph
    name: str
    kind: str
    params: dict = field(default_factory=dict, compare=False)

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def edge_count(self) -> int:
        return self.graph.edge_count


THREE_SUN_EDGES = ("ab", "ac", "bc", "ad", "bd", "be", "ce", "af", "cf")


def three_sun() -> PatternGraph:
    """Triangle abc with d, e, f each attached to a distinct pair of it."""
    edges = [("abcdef".index(x), "abcdef".index(y)) for x, y in THREE_SUN_EDGES]
    return PatternGraph(build_graph(6, edges, labels=list("abcdef")), "F6", "three_sun")


def clique(s: int) -> PatternGraph:
    if s < 1:
        raise PatternError(f"clique size must be positive, got {s}")
    return PatternGraph(C.complete(s), f"K{s}", "clique", {"s": s})


def build_pattern(kind: str, **params) -> PatternGraph:
    try:
        if kind == "clique":
            return clique(params["s"])
        if kind == "multipartite":
            sizes = tuple(params["sizes"])
            if not sizes or min(sizes) < 1:
                raise PatternError(f"invalid part sizes {sizes}")
            return PatternGraph(C.complete_multipartite(*sizes), "K" + ",".join(map(str, sizes)), kind, {"sizes": sizes})
        if kind == "cycle":
            return PatternGraph(C.cycle(params["n"]), f"C{params['n']}", kind, dict(params))
        if kind == "path":
            return PatternGraph(C.path(params["n"]), f"P{params['n']}", kind, dict(params))
        if kind == "matching":
            return PatternGraph(C.matching(params["k"]), f"M{params['k']}", kind, dict(params))
        if kind == "star":
            return PatternGraph(C.star(params["r"]), f"S{params['r']}", kind, dict(params))
        if kind == "three_sun":
            return three_sun()
        if kind == "petersen":
            return PatternGraph(C.petersen(), "petersen", "custom")
        if kind == "derived_f_prime":
            return f_prime_t(params["base"], params["t"], params.get("removed_edge"))
    except C.ConstructionError as exc:
        raise PatternError(str(exc)) from exc
    except KeyError as exc:
        raise PatternError(f"missing parameter {exc} for pattern kind {kind!r}") from exc
    raise PatternError(f"unknown pattern kind {kind!r}")


def f_prime_t(base: PatternGraph, t: int, removed_edge: tuple[int, int] | None = None) -> PatternGraph:
    """Delete one edge of ``base``, blow up by ``K_t``, restore one edge.

    The restored edge joins the first copies of the deleted edge's
    endpoints.  ``base`` is expected to be edge-transitive; that is not
    checked.  The deleted edge defaults to the lexicographically first one.
    """
    if t < 1:
        raise PatternError(f"blow-up factor must be positive, got {t}")
    edges = list(base.graph.edges())
    if not edges:
        raise PatternError("base pattern has no edges")
    if removed_edge is None:
        removed_edge = edges[0]
    u, v = sorted(removed_edge)
    if (u, v) not in edges:
        raise PatternError(f"{removed_edge} is not an edge of {base.name}")
    reduced = build_graph(base.n, [e for e in edges if e != (u, v)])
    m = C.blow_up(reduced, C.complete(t)).dense()
    m[u * t, v * t] = m[v * t, u * t] = True
    name = f"({base.name})'_{t}" + ("" if (u, v) == edges[0] else f"[-{u}{v}]")
    return PatternGraph(Graph.from_dense(m, check=False), name, "derived_f_prime",
                        {"base": base.name, "t": t, "removed_edge": (u, v)})


_REGISTRY = {
    re.compile(r"K(\d+)"): lambda m: clique(int(m[1])),
    re.compile(r"K(\d+(?:,\d+)+)"): lambda m: build_pattern("multipartite", sizes=[int(x) for x in m[1].split(",")]),
    re.compile(r"C(\d+)"): lambda m: build_pattern("cycle", n=int(m[1])),
    re.compile(r"P(\d+)"): lambda m: build_pattern("path", n=int(m[1])),
    re.compile(r"M(\d+)"): lambda m: build_pattern("matching", k=int(m[1])),
    re.compile(r"S(\d+)"): lambda m: build_pattern("star", r=int(m[1])),
    re.compile(r"E(\d+)"): lambda m: PatternGraph(C.empty(int(m[1])), f"E{m[1]}", "custom"),
    re.compile(r"F6|three_sun|3-sun"): lambda m: three_sun(),
    re.compile(r"petersen"): lambda m: build_pattern("petersen"),
    re.compile(r"Kprime:(\d+):(\d+)"): lambda m: f_prime_t(clique(int(m[1])), int(m[2])),
}

REGISTRY_HELP = "K<s>, K<a>,<b>[,...], C<n>, P<n>, M<k>, S<r>, E<n>, F6, petersen, Kprime:<s>:<t>, or an edge-list file"


def pattern_from_key(key: str) -> PatternGraph:
    """Resolve a registry key such as ``K4``, ``F6``, ``M3`` or ``Kprime:3:2``.

    Anything else is read as an edge-list file path.
    """
    for rx, make in _REGISTRY.items():
        m = rx.fullmatch(key)
        if m:
            return make(m)
    p = Path(key)
    if p.is_file():
        return load_pattern(p)
    raise PatternError(f"unknown pattern key {key!r}; expected {REGISTRY_HELP}")


def load_pattern(path: str | Path) -> PatternGraph:
    g, name = parse_edgelist(Path(path).read_text())
    return PatternGraph(g, name or Path(path).stem, "custom")


def f_prime_edge_count(s: int, t: int) -> int:
    """Edges of ``(K_s)'_t`` by direct counting."""
    return (s * (s - 1) // 2) * t * t - t * t + s * (t * (t - 1) // 2) + 1


__all__ = ["PatternError", "PatternGraph", "build_pattern", "clique", "f_prime_edge_count", "f_prime_t",
           "load_pattern", "pattern_from_key", "petersen", "three_sun", "REGISTRY_HELP"]
