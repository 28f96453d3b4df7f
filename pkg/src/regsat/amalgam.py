"""Amalgamation ``H[s, t, G]`` of two clique-saturated graphs along oriented
2-factors of ``H``, and the iteration driving the degree/order ratio down.

Vertex numbering of the complete multipartite host: part ``j`` (0-based),
index ``i`` maps to ``j*q + i``.  Amalgam vertices: H-blobs first
(``j*t + i``), then G-blobs (``h*t + b*g + a``).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import gcd

import numpy as np

from .checkers import VerificationReport, is_saturated, regularity
from .constructions import blow_up, complete_multipartite, empty
from .graph import Graph
from .patterns import clique


class AmalgamError(ValueError):
    pass


@dataclass(frozen=True)
class OrientedTwoFactorSet:
    q: int
    s: int
    shifts: tuple[int, ...]
    arcs: tuple[tuple[tuple[int, int], ...], ...]

    @property
    def parts(self) -> int:
        return self.s + 1

    @property
    def n(self) -> int:
        return self.parts * self.q

    def label(self, v: int) -> str:
        # 1-based part and index
        return f"v^{v // self.q + 1}_{v % self.q + 1}"

    def validate(self) -> None:
        """Raise :class:`AmalgamError` unless every factor is an oriented
        2-factor with arcs between cyclically consecutive parts and the
        underlying edge sets are pairwise disjoint."""
        if len(self.arcs) != len(self.shifts):
            raise AmalgamError("one arc set per shift required")
        if len(self.arcs) != max(self.s - 1, 0):
            raise AmalgamError(f"expected {max(self.s - 1, 0)} factors for s={self.s}, got {len(self.arcs)}")
        seen: dict[frozenset, int] = {}
        for idx, arcs in enumerate(self.arcs):
            outdeg = [0] * self.n
            indeg = [0] * self.n
            for x, y in arcs:
                if not (0 <= x < self.n and 0 <= y < self.n):
                    raise AmalgamError(f"arc {(x, y)} out of range")
                if (x // self.q + 1) % self.parts != y // self.q:
                    raise AmalgamError(f"arc {(x, y)} does not go to the next part")
                outdeg[x] += 1
                indeg[y] += 1
                e = frozenset((x, y))
                if e in seen:
                    raise AmalgamError(f"factors {seen[e]} and {idx} share edge {sorted(e)}")
                seen[e] = idx
            if any(d != 1 for d in outdeg) or any(d != 1 for d in indeg):
                raise AmalgamError(f"factor {idx} does not have in-degree = out-degree = 1")

    def out_neighbors(self) -> list[list[int]]:
        out = [[] for _ in range(self.n)]
        for arcs in self.arcs:
            for x, y in arcs:
                out[x].append(y)
        return out

    def in_neighbors(self) -> list[list[int]]:
        inn = [[] for _ in range(self.n)]
        for arcs in self.arcs:
            for x, y in arcs:
                inn[y].append(x)
        return inn


def multipartite_two_factors(q: int, s: int) -> OrientedTwoFactorSet:
    """Shift-``a`` factors on ``K_{q,...,q}`` (``s+1`` parts), ``a = 0..s-2``.

    Factor ``a`` is the union over ``b`` of the directed cycles
    ``(0, b) -> (1, b+a) -> ... -> (s, b+sa) -> (0, b)``, indices mod ``q``.
    """
    if q < 1 or s < 1:
        raise AmalgamError(f"need q >= 1 and s >= 1, got q={q}, s={s}")
    factors = []
    for a in range(s - 1):
        arcs = []
        for b in range(q):
            for j in range(s):
                arcs.append((j * q + (b + j * a) % q, (j + 1) * q + (b + (j + 1) * a) % q))
            arcs.append((s * q + (b + s * a) % q, b))
        factors.append(tuple(arcs))
    return OrientedTwoFactorSet(q, s, tuple(range(s - 1)), tuple(factors))


def verify_orientation_property(factors: OrientedTwoFactorSet) -> VerificationReport:
    """No ``K_{c,d}`` (``c + d = s + 1``) in the union of the oriented factors
    with every arc pointing into the ``d``-side.

    Brute force: every candidate ``d``-side lies inside the out-neighbourhood
    of one of its sources, which has at most ``s - 1`` vertices.
    """
    factors.validate()
    s = factors.s
    out = factors.out_neighbors()
    inn = [set(x) for x in factors.in_neighbors()]
    checked = 0
    for d in range(1, s + 1):
        c = s + 1 - d
        seen: set[tuple[int, ...]] = set()
        for x in range(factors.n):
            if len(out[x]) < d:
                continue
            for ys in combinations(sorted(out[x]), d):
                if ys in seen:
                    continue
                seen.add(ys)
                checked += 1
                sources = set.intersection(*(inn[y] for y in ys))
                if len(sources) >= c:
                    src = sorted(sources)[:c]
                    return VerificationReport(
                        "free", False, {"sources": src, "targets": list(ys), "c": c, "d": d},
                        {"q": factors.q, "s": s, "F": "all-inward oriented K_{c,d}"}, details={"target_sets_checked": checked})
    return VerificationReport("free", True, None, {"q": factors.q, "s": s, "F": "all-inward oriented K_{c,d}"},
                              details={"target_sets_checked": checked})


def solve_t(n_h: int, d_h: int, n_g: int, d_g: int, s: int) -> tuple[int | None, Fraction]:
    """Blob size making ``H[s,t,G]`` regular: ``((n_h-1) d_g - s n_g) / (d_h - s)``.

    Returns ``(t, ratio)``; ``t`` is None unless the ratio is a positive integer.
    """
    if d_h <= s:
        raise AmalgamError(f"need d_H > s, got d_H={d_h}, s={s}")
    ratio = Fraction((n_h - 1) * d_g - s * n_g, d_h - s)
    t = ratio.numerator if ratio.denominator == 1 and ratio > 0 else None
    return t, ratio


def amalgamate(h: Graph, factors: OrientedTwoFactorSet, s: int, t: int, g: Graph) -> Graph:
    if t < 1:
        raise AmalgamError("t must be positive")
    if factors.s != s:
        raise AmalgamError(f"factor set built for s={factors.s}, not s={s}")
    if factors.n != h.n:
        raise AmalgamError(f"factors live on {factors.n} vertices but H has {h.n}")
    factors.validate()
    for arcs in factors.arcs:
        for x, y in arcs:
            if not h.has_edge(x, y):
                raise AmalgamError(f"arc {(x, y)} is not an edge of H")
    nh, ng = h.n, g.n
    a_h = h.dense()
    a_g = g.dense()
    n = nh * (t + ng)
    off = nh * t
    m = np.zeros((n, n), bool)
    # H-blobs blown up along H
    m[:off, :off] = np.kron(a_h, np.ones((t, t), bool))
    # H-blob to G-blob: own vertex, plus out-arcs of each factor
    link = np.eye(nh, dtype=bool)
    for arcs in factors.arcs:
        for x, y in arcs:
            link[x, y] = True
    m[:off, off:] = np.kron(link, np.ones((t, ng), bool))
    m[off:, :off] = m[:off, off:].T
    # G-edges between distinct G-blobs
    m[off:, off:] = np.kron(~np.eye(nh, dtype=bool), a_g)
    labels = [f"u^{j + 1}_{i + 1}" for j in range(nh) for i in range(t)]
    labels += [f"v^{b + 1}_{a + 1}" for b in range(nh) for a in range(ng)]
    return Graph.from_dense(m, labels, check=False)


@dataclass(frozen=True)
class AmalgamParams:
    s: int
    t: int
    n_h: int
    d_h: int
    n_g: int
    d_g: int

    @property
    def g_blob_degree(self) -> int:
        return self.s * self.t + (self.n_h - 1) * self.d_g

    @property
    def h_blob_degree(self) -> int:
        return self.t * self.d_h + self.s * self.n_g

    @property
    def regular(self) -> bool:
        return self.g_blob_degree == self.h_blob_degree

    @property
    def order(self) -> int:
        return self.n_h * (self.t + self.n_g)


def ratio_check(params: AmalgamParams, n: int, d: int) -> VerificationReport:
    """Hypothesis ``d_G/n_G >= s/(n_H-1)`` and conclusion
    ``d/n <= (n_H-1)/n_H * d_G/n_G``, in exact rationals."""
    p = params
    hyp = Fraction(p.d_g, p.n_g) >= Fraction(p.s, p.n_h - 1)
    lhs = Fraction(d, n)
    rhs = Fraction(p.n_h - 1, p.n_h) * Fraction(p.d_g, p.n_g)
    consistent = n == p.order and d == p.g_blob_degree
    ok = hyp and lhs <= rhs and consistent
    details = {"hypothesis": hyp, "lhs": str(lhs), "rhs": str(rhs), "conclusion": lhs <= rhs,
               "order_and_degree_consistent": consistent}
    return VerificationReport("inequality", ok, None if ok else details,
                              {"n": n, "d": d, **p.__dict__}, details=details)


@dataclass
class PlanStep:
    i: int
    n: int
    d: int
    t: int | None
    divisor: int
    verified: bool | None = None

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.d, self.n)

    def to_dict(self) -> dict:
        r = self.ratio
        return {"i": self.i, "n": self.n, "d": self.d, "t": self.t, "ratio_num": r.numerator,
                "ratio_den": r.denominator, "divisor": self.divisor, "verified": self.verified}


@dataclass
class Plan:
    s: int
    q: int
    m: int
    steps: list[PlanStep] = field(default_factory=list)
    graphs: list[Graph] = field(default_factory=list)

    @property
    def step_factor(self) -> Fraction:
        h = (self.s + 1) * self.q
        return Fraction(h - 1, h)

    def to_json_list(self) -> list[dict]:
        return [st.to_dict() for st in self.steps]


class PlanError(AmalgamError):
    pass


def iteration_plan(s: int, q: int, seed: Graph, m: int, verify: bool = False,
                  check_factors: bool = True) -> Plan:
    """Iterate ``F_{i+1} = K_{q,...,q}[s, t_i, F_i]`` from ``F_0 = seed[E_{(s(q-1))^m}]``.

    Each step records ``(n_i, d_i, t_i)`` and asserts that ``(s(q-1))^(m-i)``
    divides both ``n_i`` and ``d_i`` and that the ratio ``d/n`` shrinks by at
    least ``((s+1)q - 1)/((s+1)q)``.  With ``verify`` every ``F_i`` is
    checked for ``K_{s+2}``-saturation and regularity.
    """
    reg = regularity(seed)
    if not reg.passed:
        raise PlanError("seed graph is not regular")
    factors = multipartite_two_factors(q, s)
    if check_factors:
        rep = verify_orientation_property(factors)
        if not rep.passed:
            raise PlanError(f"orientation property fails for q={q}, s={s}: {rep.witness}")
    host = complete_multipartite(*([q] * (s + 1)))
    n_h, d_h = host.n, s * q
    base = s * (q - 1)
    plan = Plan(s, q, m)
    f = blow_up(seed, empty(base ** m))
    pattern = clique(s + 2)
    t_i = None
    for i in range(m + 1):
        n_i, d_i = f.n, f.degrees[0]
        if not regularity(f).passed:
            raise PlanError(f"step {i}: F_{i} is not regular")
        divisor = base ** (m - i)
        if gcd(n_i, d_i) % divisor:
            raise PlanError(f"step {i}: {divisor} does not divide gcd({n_i}, {d_i})")
        step = PlanStep(i, n_i, d_i, t_i, divisor)
        if verify:
            step.verified = is_saturated(f, pattern).passed
        plan.steps.append(step)
        plan.graphs.append(f)
        if i == m:
            break
        t_i, ratio = solve_t(n_h, d_h, n_i, d_i, s)
        if t_i is None:
            raise PlanError(f"step {i + 1}: t = {ratio} is not a positive integer")
        prev = Fraction(d_i, n_i)
        f = amalgamate(host, factors, s, t_i, f)
        if Fraction(f.degrees[0], f.n) > plan.step_factor * prev:
            raise PlanError(f"step {i + 1}: ratio bound violated")
    return plan


__all__ = [
    "AmalgamError", "AmalgamParams", "OrientedTwoFactorSet", "Plan", "PlanError", "PlanStep",
    "amalgamate", "multipartite_two_factors", "ratio_check", "solve_t", "iteration_plan",
    "verify_orientation_property",
]
