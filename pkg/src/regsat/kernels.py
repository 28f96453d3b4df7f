"""Clique-search backend selection.

The compiled ``_ckernels`` extension is used when importable; otherwise (or
when ``REGSAT_PURE_PYTHON=1``) the pure-Python ``_pykernels`` take over.  Both
backends follow the same search order and therefore return identical
witnesses.
"""
from __future__ import annotations

import os

import numpy as np

from . import _pykernels
from .graph import Graph

try:
    if os.environ.get("REGSAT_PURE_PYTHON") == "1":
        raise ImportError("pure Python requested")
    from . import _ckernels
except ImportError:
    _ckernels = None

BACKENDS = ("c", "python") if _ckernels is not None else ("python",)
BACKEND = BACKENDS[0]


def _pick(backend: str | None):
    name = backend or BACKEND
    if name == "c":
        if _ckernels is None:
            raise RuntimeError("compiled kernels are not available")
        return _ckernels, True
    if name == "python":
        return _pykernels, False
    raise ValueError(f"unknown backend {name!r}")


def _data(g: Graph, compiled: bool):
    return g.adj if compiled else g.rows


def find_clique(g: Graph, k: int, backend: str | None = None) -> list[int] | None:
    mod, compiled = _pick(backend)
    if g.n == 0:
        return [] if k <= 0 else None
    return mod.find_clique(_data(g, compiled), k)


def clique_in_set(g: Graph, vertices, k: int, backend: str | None = None) -> list[int] | None:
    mod, compiled = _pick(backend)
    if g.n == 0:
        return [] if k <= 0 else None
    return mod.clique_in_set(_data(g, compiled), list(vertices), k)


def clique_through(g: Graph, u: int, v: int, k: int, backend: str | None = None) -> list[int] | None:
    """Vertices extending ``{u, v}`` to a k-clique once ``uv`` is an edge."""
    mod, compiled = _pick(backend)
    return mod.clique_through(_data(g, compiled), u, v, k)


def first_unsaturated(g: Graph, k: int, start: tuple[int, int] = (0, 0), backend: str | None = None):
    mod, compiled = _pick(backend)
    if g.n < 2:
        return None
    res = mod.first_unsaturated(_data(g, compiled), k, start[0], start[1])
    return None if res is None else (int(res[0]), int(res[1]))


def through_pairs(g: Graph, pairs, k: int, backend: str | None = None) -> np.ndarray:
    mod, compiled = _pick(backend)
    arr = np.ascontiguousarray(np.asarray(pairs, dtype=np.int64).reshape(-1, 2))
    return mod.through_pairs(_data(g, compiled), arr, k)
