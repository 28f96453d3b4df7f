"""Compare the compiled and pure-Python clique kernels.

    python benchmarks/bench_kernels.py [--repeat 3] [--json out.json]

Each case runs a full clique search (the freeness test) followed by the
exhaustive saturation scan (first failing non-edge) on both backends and
checks that they agree.
"""
from __future__ import annotations

import argparse
import json
import random
import time

from regsat import kernels
from regsat.amalgam import amalgamate, multipartite_two_factors
from regsat.constructions import blow_up, circulant, complete_multipartite, cycle, empty, join, k3_connection_set, k4_connection_set
from regsat.graph import build_graph
from regsat.polarity import oversaturated_family


def random_graph(n, p, seed):
    rng = random.Random(seed)
    return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def cases():
    h = complete_multipartite(4, 4)
    yield "K3 circulant n=151", circulant(k3_connection_set(151)), 3
    yield "K4 circulant n=62", circulant(k4_connection_set(62)), 4
    yield "amalgam n=64", amalgamate(h, multipartite_two_factors(4, 1), 1, 3, cycle(5)), 3
    yield "C5[E3] amalgam n=192", amalgamate(h, multipartite_two_factors(4, 1), 1, 9, blow_up(cycle(5), empty(3))), 3
    yield "K4 join n=80", join(blow_up(cycle(5), empty(10)), empty(30)), 4
    yield "polarity[K2] n=148", oversaturated_family(3, 2), 4
    yield "K5 in K_{6,6,6,6}", complete_multipartite(6, 6, 6, 6), 5
    # k is one above the clique number, so the search must exhaust the tree
    yield "G(150, 0.5) K12", random_graph(150, 0.5, 1), 12
    yield "G(100, 0.7) K15", random_graph(100, 0.7, 1), 15
    yield "G(300, 0.3) K9", random_graph(300, 0.3, 1), 9


def scan(g, k, backend):
    return kernels.find_clique(g, k, backend), kernels.first_unsaturated(g, k, backend=backend)


def timed(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json")
    args = ap.parse_args(argv)

    if "c" not in kernels.BACKENDS:
        print("compiled kernels unavailable; only the Python backend can run")
    rows = []
    print(f"{'case':<24} {'python s':>10} {'c s':>10} {'speedup':>8}  (clique, failing non-edge)")
    for name, g, k in cases():
        py_t, py_w = timed(lambda: scan(g, k, "python"), args.repeat)
        if "c" in kernels.BACKENDS:
            c_t, c_w = timed(lambda: scan(g, k, "c"), args.repeat)
            assert c_w == py_w, (name, c_w, py_w)
            speed = py_t / c_t if c_t else float("inf")
        else:
            c_t, speed = None, None
        rows.append({"case": name, "n": g.n, "k": k, "python_s": py_t, "c_s": c_t, "speedup": speed,
                     "witness": py_w})
        c_txt = f"{c_t:10.4f}" if c_t is not None else f"{'-':>10}"
        sp_txt = f"{speed:8.1f}" if speed is not None else f"{'-':>8}"
        print(f"{name:<24} {py_t:10.4f} {c_txt} {sp_txt}  {py_w}")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(rows, fh, indent=2)


if __name__ == "__main__":
    main()
