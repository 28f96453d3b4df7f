"""Exhaustive search for regular F-saturated graphs at small orders."""
from __future__ import annotations

import json
import os
import tempfile
from collections import defaultdict
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Iterable, Iterator

from .checkers import is_saturated
from .graph import Graph, decode_graph6, encode_graph6
from .patterns import PatternGraph
from .subgraph import is_isomorphic

EXHAUSTIVE_LIMIT = 12


class StoreCorruption(RuntimeError):
    pass


def _rows_to_graph(n: int, rows: list[int]) -> Graph:
    return Graph.from_rows(n, rows)


def _regular_rows(n: int, d: int) -> Iterator[list[int]]:
    """Adjacency rows of d-regular graphs on n vertices, one per orbit at least.

    Vertices are completed in index order.  Unfinished vertices with the same
    adjacency to the finished ones form contiguous cells; they are
    interchangeable, so only prefixes of each cell are chosen as neighbours.
    This keeps every isomorphism class while skipping most relabelings.
    """
    rows = [0] * n
    deg = [0] * n

    def rec(i: int, cells: list[tuple[int, int]]):
        if i == n:
            yield list(rows)
            return
        need = d - deg[i]
        # i is the first vertex of the first cell
        first_lo, first_hi = cells[0]
        rest = ([(first_lo + 1, first_hi)] if first_hi > first_lo + 1 else []) + cells[1:]
        caps = [hi - lo if deg[lo] < d else 0 for lo, hi in rest]
        if need < 0 or need > sum(caps):
            return
        for counts in _compositions(need, caps):
            new_cells = []
            ok = True
            for (lo, hi), c in zip(rest, counts):
                for j in range(lo, lo + c):
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                    deg[j] += 1
                if c:
                    new_cells.append((lo, lo + c))
                if lo + c < hi:
                    new_cells.append((lo + c, hi))
            deg[i] += need
            # vertices after i can still gain at most (n - i - 2) neighbours
            for lo, hi in new_cells:
                if d - deg[lo] > n - i - 2:
                    ok = False
                    break
            if ok:
                yield from rec(i + 1, new_cells)
            deg[i] -= need
            for (lo, hi), c in zip(rest, counts):
                for j in range(lo, lo + c):
                    rows[i] &= ~(1 << j)
                    rows[j] &= ~(1 << i)
                    deg[j] -= 1

    if n == 0:
        if d == 0:
            yield []
        return
    yield from rec(0, [(0, n)])


def _compositions(total: int, caps: list[int]) -> Iterator[tuple[int, ...]]:
    if not caps:
        if total == 0:
            yield ()
        return
    head, tail = caps[0], caps[1:]
    room = sum(tail)
    for c in range(min(head, total), -1, -1):
        if total - c <= room:
            for rest in _compositions(total - c, tail):
                yield (c,) + rest


def invariant(g: Graph) -> tuple:
    """Colour refinement seeded with common-neighbour profiles.

    Plain refinement cannot split a regular graph, so each vertex starts
    from the sorted counts ``|N(v) & N(w)|`` over its neighbours and over
    its non-neighbours."""
    rows = g.rows
    colour = []
    for v in range(g.n):
        adj = sorted((rows[v] & rows[w]).bit_count() for w in range(g.n) if rows[v] >> w & 1)
        non = sorted((rows[v] & rows[w]).bit_count() for w in range(g.n) if w != v and not rows[v] >> w & 1)
        colour.append((tuple(adj), tuple(non)))
    relabel = {c: k for k, c in enumerate(sorted(set(colour)))}
    seed = tuple(sorted(colour))
    colour = [relabel[c] for c in colour]
    for _ in range(g.n):
        new = [(colour[v], tuple(sorted(colour[w] for w in g.neighbors(v)))) for v in range(g.n)]
        relabel = {c: k for k, c in enumerate(sorted(set(new)))}
        new = [relabel[c] for c in new]
        stable = len(set(new)) == len(set(colour))
        colour = new
        if stable:
            break
    return seed, tuple(sorted(colour))


def enumerate_regular(n: int, d: int, dedupe: bool = True) -> Iterator[Graph]:
    """d-regular graphs on n vertices; every isomorphism class appears at
    least once.  With ``dedupe`` each class appears exactly once: graphs
    sharing an invariant are compared by an isomorphism test."""
    if d < 0 or d >= max(n, 1) and not (n == 0 and d == 0):
        return
    if (n * d) % 2:
        return
    seen: dict[tuple, list[Graph]] = defaultdict(list)
    for rows in _regular_rows(n, d):
        g = _rows_to_graph(n, rows)
        if not dedupe:
            yield g
            continue
        bucket = seen[invariant(g)]
        if any(is_isomorphic(h, g) for h in bucket):
            continue
        bucket.append(g)
        yield g


def parity_note(n: int, d: int) -> str | None:
    return f"n*d = {n * d} is odd: no {d}-regular graph on {n} vertices" if (n * d) % 2 else None


@dataclass
class DegreeOutcome:
    d: int
    exists: bool
    witness: str | None
    count_checked: int


@dataclass
class SearchResult:
    n: int
    pattern: str
    outcomes: list[DegreeOutcome] = field(default_factory=list)
    exhaustive: bool = True

    @property
    def rsat_value(self) -> int | None:
        vals = [self.n * o.d // 2 for o in self.outcomes if o.exists]
        return min(vals) if vals else None

    @property
    def exists(self) -> bool:
        return any(o.exists for o in self.outcomes)

    def records(self) -> list[dict]:
        return [{"n": self.n, "d": o.d, "pattern": self.pattern, "exists": o.exists, "witness": o.witness,
                 "count_checked": o.count_checked, "exhaustive": self.exhaustive} for o in self.outcomes]

    def to_dict(self) -> dict:
        d = asdict(self)
        d["rsat_value"] = self.rsat_value
        return d


def _verify_witness(n: int, d: int, f: PatternGraph, g6: str) -> bool:
    g = decode_graph6(g6)
    return g.n == n and set(g.degrees) <= {d} and is_saturated(g, f).passed


def find_regular_saturated(n: int, f: PatternGraph, degrees: Iterable[int] | None = None) -> SearchResult:
    """For every feasible degree, an F-saturated d-regular graph on n vertices or a certificate of absence."""
    if n > EXHAUSTIVE_LIMIT:
        raise ValueError(f"exhaustive search is limited to n <= {EXHAUSTIVE_LIMIT}, got {n}")
    result = SearchResult(n, f.name)
    for d in (degrees if degrees is not None else range(max(n, 1))):
        if parity_note(n, d):
            continue
        checked = 0
        witness = None
        for g in enumerate_regular(n, d):
            checked += 1
            if is_saturated(g, f).passed:
                witness = encode_graph6(g).decode("ascii")
                break
        if witness is not None and not _verify_witness(n, d, f, witness):
            raise AssertionError(f"witness for n={n}, d={d} failed re-verification")
        result.outcomes.append(DegreeOutcome(d, witness is not None, witness, checked))
    return result


# persistent store ------------------------------------------------------------

def load_store(path: str | Path, verify: bool = True, patterns: dict | None = None) -> list[dict]:
    """Read a JSON-lines store, re-verifying every stored witness."""
    from .patterns import pattern_from_key

    p = Path(path)
    if not p.exists():
        return []
    records = []
    cache = dict(patterns or {})
    for lineno, line in enumerate(p.read_text().splitlines(), 1):
        if not line.strip():
            continue
        try:
            rec = json.loads(line)
            key = (rec["n"], rec["d"], rec["pattern"])
        except (json.JSONDecodeError, KeyError, TypeError) as exc:
            raise StoreCorruption(f"{p}:{lineno}: unreadable record ({exc})") from exc
        if (rec["n"] * rec["d"]) % 2:
            raise StoreCorruption(f"{p}:{lineno}: record {key} has odd n*d")
        if verify and rec.get("exists"):
            f = cache.get(rec["pattern"]) or pattern_from_key(rec["pattern"])
            cache[rec["pattern"]] = f
            if not rec.get("witness") or not _verify_witness(rec["n"], rec["d"], f, rec["witness"]):
                raise StoreCorruption(f"{p}:{lineno}: witness for record {key} fails re-verification")
        records.append(rec)
    return records


def _append_records(path: Path, records: list[dict]) -> None:
    existing = path.read_text() if path.exists() else ""
    if existing and not existing.endswith("\n"):
        existing += "\n"
    text = existing + "".join(json.dumps(r, sort_keys=True) + "\n" for r in records)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=path.name, suffix=".tmp")
    with os.fdopen(fd, "w") as fh:
        fh.write(text)
    os.replace(tmp, path)


def rsat_table(n_range: Iterable[int], f: PatternGraph, store: str | Path) -> list[SearchResult]:
    """Search each n and append missing (n, d, F) records; existing records are kept as they are."""
    store = Path(store)
    records = load_store(store, patterns={f.name: f})
    have = {(r["n"], r["d"], r["pattern"]) for r in records}
    results = []
    new: list[dict] = []
    for n in n_range:
        wanted = [d for d in range(max(n, 1)) if not parity_note(n, d)]
        missing = [d for d in wanted if (n, d, f.name) not in have]
        if missing:
            res = find_regular_saturated(n, f, missing)
            new.extend(res.records())
        stored = {r["d"]: r for r in records + new if r["n"] == n and r["pattern"] == f.name}
        res = SearchResult(n, f.name, [
            DegreeOutcome(d, stored[d]["exists"], stored[d]["witness"], stored[d]["count_checked"]) for d in wanted
        ])
        results.append(res)
    if new:
        store.parent.mkdir(parents=True, exist_ok=True)
        _append_records(store, new)
    return results


def render_table(records: list[dict]) -> str:
    by_key: dict[tuple[str, int], list[dict]] = defaultdict(list)
    for r in records:
        by_key[(r["pattern"], r["n"])].append(r)
    lines = [f"{'F':<10} {'n':>3}  {'passing d':<16} {'rsat':>6}  checked"]
    for (pat, n), recs in sorted(by_key.items()):
        passing = sorted(r["d"] for r in recs if r["exists"])
        rsat = min((n * d // 2 for d in passing), default=None)
        checked = sum(r["count_checked"] for r in recs)
        lines.append(f"{pat:<10} {n:>3}  {','.join(map(str, passing)) or '-':<16} "
                     f"{rsat if rsat is not None else 'none':>6}  {checked}")
    return "\n".join(lines)


__all__ = [
    "DegreeOutcome", "SearchResult", "StoreCorruption", "enumerate_regular", "find_regular_saturated",
    "invariant", "load_store", "parity_note", "render_table", "rsat_table",
]
