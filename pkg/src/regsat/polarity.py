"""GF(2^p) arithmetic and the orthogonality (polarity) graph on projective
points, its twin-vertex augmentation and clique blow-ups."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .constructions import blow_up, complete
from .graph import Graph

# low-weight irreducible polynomials, bit i = coefficient of x^i
IRREDUCIBLE = {
    1: 0b11,
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1000011,
    7: 0b10000011,
    8: 0b100011011,
    9: 0b1000010001,
    10: 0b10000001001,
    11: 0b100000000101,
    12: 0b1000001010011,
    13: 0b10000000011011,
    14: 0b100000000101011,
    15: 0b1000000000000011,
    16: 0b10000000000101101,
}


class FieldError(ValueError):
    pass


def clmul(x: int, y: int) -> int:
    """Carry-less (GF(2)[x]) product."""
    out = 0
    while y:
        if y & 1:
            out ^= x
        x <<= 1
        y >>= 1
    return out


def poly_mod(x: int, modulus: int) -> int:
    deg = modulus.bit_length() - 1
    while x.bit_length() - 1 >= deg:
        x ^= modulus << (x.bit_length() - 1 - deg)
    return x


@dataclass(frozen=True)
class GF2m:
    """The field with ``2^p`` elements; elements are ints in ``[0, 2^p)``."""

    p: int

    def __post_init__(self):
        if not 1 <= self.p <= 16:
            raise FieldError(f"extension degree must be in 1..16, got {self.p}")

    @property
    def size(self) -> int:
        return 1 << self.p

    @property
    def modulus(self) -> int:
        return IRREDUCIBLE[self.p]

    def check(self, x: int) -> int:
        if not 0 <= x < self.size:
            raise FieldError(f"{x} is not an element of GF(2^{self.p})")
        return x

    def add(self, x: int, y: int) -> int:
        return self.check(x) ^ self.check(y)

    sub = add

    def mul(self, x: int, y: int) -> int:
        return poly_mod(clmul(self.check(x), self.check(y)), self.modulus)

    def pow(self, x: int, e: int) -> int:
        result, base = 1, self.check(x)
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, x: int) -> int:
        if self.check(x) == 0:
            raise FieldError("zero has no inverse")
        return self.pow(x, self.size - 2)

    def mul_table(self) -> np.ndarray:
        return _mul_table(self.p)


@lru_cache(maxsize=None)
def _mul_table(p: int) -> np.ndarray:
    f = GF2m(p)
    q = f.size
    t = np.array([[f.mul(x, y) for y in range(q)] for x in range(q)], dtype=np.int64)
    t.flags.writeable = False
    return t


def projective_points(p: int) -> list[tuple[int, int, int]]:
    """Normalised representatives: first nonzero coordinate is 1."""
    q = 1 << p
    pts = [(1, x, y) for x in range(q) for y in range(q)]
    pts += [(0, 1, y) for y in range(q)]
    pts.append((0, 0, 1))
    return pts


def normalize(p: int, a: int, b: int, c: int) -> tuple[int, int, int]:
    f = GF2m(p)
    lead = next((x for x in (a, b, c) if x), None)
    if lead is None:
        raise FieldError("the zero triple is not a projective point")
    inv = f.inv(lead)
    return f.mul(a, inv), f.mul(b, inv), f.mul(c, inv)


@dataclass(frozen=True)
class PolarityGraph:
    graph: Graph
    points: tuple[tuple[int, int, int], ...]
    absolute: tuple[int, ...]
    p: int

    def index(self, point: tuple[int, int, int]) -> int:
        return self.points.index(normalize(self.p, *point))

    def label_lines(self) -> list[str]:
        w = max(1, (self.p + 3) // 4)
        lines = [f"{i} {a:0{w}x} {b:0{w}x} {c:0{w}x}" for i, (a, b, c) in enumerate(self.points)]
        lines += [f"{i} twin" for i in range(len(self.points), self.graph.n)]
        return lines


def _orthogonality(p: int, pts: np.ndarray) -> np.ndarray:
    mul = _mul_table(p)
    a, b, c = pts[:, 0], pts[:, 1], pts[:, 2]
    dot = mul[a[:, None], a[None, :]] ^ mul[b[:, None], b[None, :]] ^ mul[c[:, None], c[None, :]]
    return dot == 0


def polarity_graph(p: int) -> PolarityGraph:
    """Points of PG(2, 2^p), adjacent iff orthogonal; absolute points get no loop."""
    if not 1 <= p <= 8:
        raise FieldError(f"polarity graphs supported for 1 <= p <= 8, got {p}")
    pts = projective_points(p)
    arr = np.array(pts, dtype=np.int64)
    m = _orthogonality(p, arr)
    absolute = tuple(int(i) for i in np.flatnonzero(m.diagonal()))
    np.fill_diagonal(m, False)
    g = Graph.from_dense(m, [f"({a},{b},{c})" for a, b, c in pts], check=False)
    return PolarityGraph(g, tuple(pts), absolute, p)


def expected_absolute_points(p: int) -> set[tuple[int, int, int]]:
    """``{(1, x, 1 + x)} ∪ {(0, 1, 1)}``."""
    q = 1 << p
    return {(1, x, 1 ^ x) for x in range(q)} | {(0, 1, 1)}


def twin_augmented(p: int) -> PolarityGraph:
    """Polarity graph plus a non-adjacent twin of ``(1, 1, 1)``."""
    base = polarity_graph(p)
    n = base.graph.n
    m = np.zeros((n + 1, n + 1), bool)
    m[:n, :n] = base.graph.dense()
    anchor = base.points.index((1, 1, 1))
    m[n, :n] = m[anchor, :n]
    m[:n, n] = m[anchor, :n]
    g = Graph.from_dense(m, list(base.graph.labels) + ["twin"], check=False)
    return PolarityGraph(g, base.points, base.absolute, p)


def twin_augmented_polarity(p: int) -> Graph:
    return twin_augmented(p).graph


def oversaturated_family(p: int, t: int) -> Graph:
    """``twin_augmented_polarity(p)[K_t]``."""
    if t < 1:
        raise ValueError("t must be positive")
    g = twin_augmented_polarity(p)
    return g if t == 1 else blow_up(g, complete(t))


def edge_density_ratio(g: Graph, digits: int = 6) -> float:
    """``e / n^{3/2}`` from the exact rational ``e^2 / n^3``."""
    from decimal import Decimal, getcontext

    getcontext().prec = 40
    value = (Decimal(g.edge_count) ** 2 / Decimal(g.n) ** 3).sqrt()
    return float(round(value, digits))


__all__ = [
    "FieldError", "GF2m", "IRREDUCIBLE", "PolarityGraph", "clmul", "edge_density_ratio",
    "expected_absolute_points", "normalize", "oversaturated_family", "polarity_graph", "poly_mod",
    "projective_points", "twin_augmented", "twin_augmented_polarity",
]
