"""Pure-Python clique kernels on integer bit rows.

Same contracts and the same search order as the compiled ``_ckernels`` so that
both backends return identical witnesses.
"""
from __future__ import annotations

from typing import Sequence

import numpy as np


def _search(rows: Sequence[int], cand: int, need: int) -> list[int] | None:
    if need <= 0:
        return []
    remaining = cand.bit_count()
    if remaining < need:
        return None
    if need == 1:
        return [(cand & -cand).bit_length() - 1]
    while cand:
        if remaining < need:
            return None
        low = cand & -cand
        v = low.bit_length() - 1
        cand ^= low
        remaining -= 1
        nxt = cand & rows[v]
        if not nxt:
            continue
        if need == 2:
            return [v, (nxt & -nxt).bit_length() - 1]
        found = _search(rows, nxt, need - 1)
        if found is not None:
            return [v] + found
    return None


def clique_in_set(rows: Sequence[int], cand_vertices, k: int) -> list[int] | None:
    if k <= 0:
        return []
    cand = 0
    for v in cand_vertices:
        cand |= 1 << v
    return _search(rows, cand, k)


def clique_through(rows: Sequence[int], u: int, v: int, k: int) -> list[int] | None:
    if k <= 2:
        return []
    return _search(rows, rows[u] & rows[v], k - 2)


def find_clique(rows: Sequence[int], k: int) -> list[int] | None:
    n = len(rows)
    if k <= 0:
        return []
    if n == 0:
        return None
    if k == 1:
        return [0]
    for v in range(n):
        cand = rows[v] >> (v + 1) << (v + 1)
        found = _search(rows, cand, k - 1)
        if found is not None:
            return [v] + found
    return None


def first_unsaturated(rows: Sequence[int], k: int, start_u: int = 0, start_v: int = 0):
    n = len(rows)
    full = (1 << n) - 1
    for u in range(start_u, n):
        floor = max(u + 1, start_v if u == start_u else 0)
        r = full & ~rows[u] & ~((1 << floor) - 1)
        while r:
            low = r & -r
            v = low.bit_length() - 1
            r ^= low
            if k > 2 and _search(rows, rows[u] & rows[v], k - 2) is None:
                return u, v
    return None


def through_pairs(rows: Sequence[int], pairs: np.ndarray, k: int) -> np.ndarray:
    out = np.zeros(len(pairs), dtype=bool)
    for i, (u, v) in enumerate(pairs):
        out[i] = k <= 2 or _search(rows, rows[u] & rows[v], k - 2) is not None
    return out
